//! Seeded generators for randomized checks and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::laurent::{rat, LaurentPoly};
use crate::matrix::{IntMatrix, PolyMatrix};
use crate::module::PresentedModule;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random Laurent polynomial with exponents in `[low, low + span]`, `low ∈ [-2, 2]`,
/// and small integer coefficients. May be zero.
pub fn laurent_poly(rng: &mut TestRng, max_span: i64) -> LaurentPoly {
    let low = rng.gen_range(-2..=2);
    let span = rng.gen_range(0..=max_span);
    LaurentPoly::from_terms((low..=low + span).map(|e| (e, rat(rng.gen_range(-3..=3)))))
}

pub fn nonzero_laurent_poly(rng: &mut TestRng, max_span: i64) -> LaurentPoly {
    loop {
        let p = laurent_poly(rng, max_span);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random matrix with roughly `density` of its entries nonzero.
pub fn poly_matrix(rng: &mut TestRng, rows: usize, cols: usize, max_span: i64, density: f64) -> PolyMatrix {
    PolyMatrix::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(density) {
            laurent_poly(rng, max_span)
        } else {
            LaurentPoly::zero()
        }
    })
}

/// A random invertible `n x n` Laurent matrix and its inverse, built from elementary
/// operations and monomial scalings.
pub fn unimodular(rng: &mut TestRng, n: usize, steps: usize) -> (PolyMatrix, PolyMatrix) {
    let mut p = PolyMatrix::identity(n);
    let mut p_inv = PolyMatrix::identity(n);
    if n == 0 {
        return (p, p_inv);
    }
    for _ in 0..steps {
        if n > 1 && rng.gen_bool(0.7) {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c = LaurentPoly::monomial(rat(rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 }), rng.gen_range(-1..=1));
            // P <- E P with E = I + c e_ij, so P^-1 <- P^-1 E^-1
            p.add_row_multiple(i, j, &c);
            p_inv.add_col_multiple(j, i, &-&c);
        } else {
            let i = rng.gen_range(0..n);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let e = rng.gen_range(-1..=1);
            let u = LaurentPoly::monomial(rat(sign), e);
            let u_inv = u.unit_inverse().expect("monomial");
            p.scale_row(i, &u);
            p_inv.scale_col(i, &u_inv);
        }
    }
    (p, p_inv)
}

/// Random integer matrix with nonzero determinant.
pub fn invertible_int_matrix(rng: &mut TestRng, n: usize, bound: i64) -> IntMatrix {
    loop {
        let m = IntMatrix::from_fn(n, n, |_, _| rng.gen_range(-bound..=bound).into());
        if !num_traits::Zero::is_zero(&m.det().expect("square")) {
            return m;
        }
    }
}

/// Random square 0/1 matrix.
pub fn zero_one_matrix(rng: &mut TestRng, n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |_, _| i64::from(rng.gen_bool(0.5)).into())
}

/// Random non-unit factor from a small pool with roots on and off the unit circle.
pub fn small_factor(rng: &mut TestRng) -> LaurentPoly {
    const POOL: [&[i64]; 7] = [&[-1, 1], &[1, 1], &[-2, 1], &[1, 1, 1], &[-1, -1, 1], &[1, 0, 1], &[1, -3]];
    LaurentPoly::from_coeffs(0, POOL[rng.gen_range(0..POOL.len())])
}

fn random_diagonal(rng: &mut TestRng, torsion: usize, free: usize) -> Vec<LaurentPoly> {
    let mut d: Vec<LaurentPoly> = (0..torsion)
        .map(|_| (0..rng.gen_range(1..=2)).fold(LaurentPoly::one(), |acc, _| &acc * &small_factor(rng)))
        .collect();
    d.extend((0..free).map(|_| LaurentPoly::zero()));
    d
}

/// Random torsion module given by a scrambled diagonal presentation.
pub fn torsion_module(rng: &mut TestRng, max_summands: usize) -> PresentedModule {
    let k = rng.gen_range(1..=max_summands);
    let d = random_diagonal(rng, k, 0);
    scrambled(rng, &d).0
}

/// Presentation `P D Q` of the diagonal module `D`, with `P` and `P^-1`.
fn scrambled(rng: &mut TestRng, d: &[LaurentPoly]) -> (PresentedModule, PolyMatrix, PolyMatrix) {
    let n = d.len();
    let (p, p_inv) = unimodular(rng, n, n + 1);
    let (q, _) = unimodular(rng, n, n + 1);
    let relations = p.mul(&PolyMatrix::diagonal(d)).and_then(|m| m.mul(&q)).expect("square");
    (PresentedModule::new(n, relations).expect("square"), p, p_inv)
}

/// A random module with torsion and free parts and a well-defined endomorphism of it.
///
/// On the diagonal model `⊕ Laur/(d_i)` the entry `L_ij` must send `d_j`-torsion into
/// `(d_i)`, so it is a multiple of `d_i / gcd(d_i, d_j)`; the pair is then conjugated
/// by a random change of generators.
pub fn module_with_endomorphism(rng: &mut TestRng, max_torsion: usize, max_free: usize) -> (PresentedModule, PolyMatrix) {
    let torsion = rng.gen_range(0..=max_torsion);
    let free = rng.gen_range(0..=max_free).max(usize::from(torsion == 0));
    let d = random_diagonal(rng, torsion, free);
    let n = d.len();
    let l = PolyMatrix::from_fn(n, n, |i, j| {
        let entry = laurent_poly(rng, 1);
        match (d[i].is_zero(), d[j].is_zero()) {
            (true, false) => LaurentPoly::zero(),
            (false, false) => {
                let g = crate::laurent::gcd(&d[i], &d[j]).expect("nonzero");
                &entry * &d[i].exact_div(g.as_poly()).expect("gcd divides")
            }
            _ => entry,
        }
    });
    let (m, p, p_inv) = scrambled(rng, &d);
    let l = p.mul(&l).and_then(|x| x.mul(&p_inv)).expect("square");
    (m, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodular_pairs_are_inverse() {
        let mut r = rng(7);
        for n in 0..4 {
            let (p, q) = unimodular(&mut r, n, 8);
            assert_eq!(p.mul(&q).unwrap(), PolyMatrix::identity(n));
            assert_eq!(q.mul(&p).unwrap(), PolyMatrix::identity(n));
        }
    }

    #[test]
    fn random_endomorphisms_are_well_defined() {
        let mut r = rng(11);
        for _ in 0..20 {
            let (m, l) = module_with_endomorphism(&mut r, 3, 2);
            assert!(crate::localize::verify_endomorphism(&m, &l).unwrap());
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(laurent_poly(&mut rng(3), 3), laurent_poly(&mut rng(3), 3));
    }
}
