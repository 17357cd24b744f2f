//! Numeric roots for display: Aberth–Ehrlich simultaneous iteration followed by
//! Newton polishing.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::laurent::LaurentPoly;

/// Roots in `C*` of `p` (negative exponents and factors of `X` are ignored),
/// sorted by real part then imaginary part.
pub fn polynomial_roots(p: &LaurentPoly) -> Vec<Complex64> {
    let Ok(canon) = p.canonical_associate() else {
        return Vec::new();
    };
    let deg = canon.degree() as usize;
    if deg == 0 {
        return Vec::new();
    }
    let poly = canon.as_poly();
    let deriv = poly.derivative();
    let mut roots: Vec<Complex64> = aberth(poly, &deriv, deg).into_iter().map(|z| polish(poly, &deriv, z)).collect();
    sort_roots(&mut roots);
    roots
}

fn aberth(p: &LaurentPoly, dp: &LaurentPoly, deg: usize) -> Vec<Complex64> {
    // Cauchy bound on the root moduli of a monic polynomial
    let radius = 1.0
        + (0..deg)
            .map(|i| p.coeff(i as i64).to_f64().unwrap_or(0.0).abs())
            .fold(0.0, f64::max);
    let start = radius.min(2.0).max(0.5);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(start, 2.0 * std::f64::consts::PI * (k as f64 + 0.4) / deg as f64 + 0.25))
        .collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let ratio = p.eval_complex_unchecked(z[i]) / dp.eval_complex_unchecked(z[i]);
            if !ratio.is_finite() {
                continue;
            }
            let repulsion: Complex64 = (0..deg).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

fn polish(p: &LaurentPoly, dp: &LaurentPoly, mut z: Complex64) -> Complex64 {
    for _ in 0..8 {
        let fz = p.eval_complex_unchecked(z);
        let dz = dp.eval_complex_unchecked(z);
        if dz.norm() == 0.0 || !dz.is_finite() {
            break;
        }
        let step = fz / dz;
        z -= step;
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    // snap tiny imaginary parts of real roots, and tiny real parts of imaginary ones
    if z.im.abs() < 1e-13 * (1.0 + z.re.abs()) {
        z.im = 0.0;
    }
    if z.re.abs() < 1e-13 * (1.0 + z.im.abs()) {
        z.re = 0.0;
    }
    z
}

/// Real parts within `1e-9` count as equal, so conjugate pairs order by imaginary part.
pub fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| {
        let by_re = if (a.re - b.re).abs() < 1e-9 { std::cmp::Ordering::Equal } else { a.re.total_cmp(&b.re) };
        by_re.then(a.im.total_cmp(&b.im))
    });
}

/// Formats to 10 significant digits, e.g. `1.618033989` or `-0.5+0.8660254038i`.
/// Parts below `1e-12` relative to the modulus print as zero.
pub fn format_root(z: Complex64) -> String {
    let cutoff = 1e-12 * (1.0 + z.norm());
    let snap = |x: f64| if x.abs() < cutoff { 0.0 } else { x };
    let z = Complex64::new(snap(z.re), snap(z.im));
    let re = sig(z.re);
    if z.im == 0.0 {
        return re;
    }
    let im = sig(z.im.abs());
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

fn sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (9 - mag).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_roots() {
        let f: LaurentPoly = "X^2 - X - 1".parse().unwrap();
        let r = polynomial_roots(&f);
        let s5 = 5f64.sqrt();
        assert!((r[0].re - (1.0 - s5) / 2.0).abs() < 1e-12);
        assert!((r[1].re - (1.0 + s5) / 2.0).abs() < 1e-12);
        assert_eq!(format_root(r[1]), "1.618033989");
        assert_eq!(format_root(r[0]), "-0.6180339887");
    }

    #[test]
    fn residuals_are_small() {
        for n in 1..=8 {
            let f = &LaurentPoly::x_pow(n) - &LaurentPoly::one();
            let roots = polynomial_roots(&f);
            assert_eq!(roots.len(), n as usize);
            for z in roots {
                let bound = 1e-9 * (1.0 + z.norm()).powi(n as i32);
                assert!(f.evaluate_complex(z).unwrap().norm() < bound);
            }
        }
    }

    #[test]
    fn ignores_negative_exponent_shift() {
        let f: LaurentPoly = "X^-3 - X^-1".parse().unwrap();
        let r = polynomial_roots(&f);
        assert_eq!(r.len(), 2);
        assert_eq!(format_root(r[0]), "-1");
        assert_eq!(format_root(r[1]), "1");
    }
}
