//! Spectra and zeta data of integer actions on finite-dimensional K-theory:
//! crossed products by Z, Cuntz–Krieger matrices and hyperbolic toral automorphisms.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::laurent::{rat, squarefree_part, LaurentPoly, Rational};
use crate::matrix::{to_poly_matrix, IntMatrix, Matrix, PolyMatrix};
use crate::module::Support;
use crate::ratfunc::RationalFunction;
use crate::series::TruncatedSeries;
use crate::snf::smith_normal_form;

/// Emitted with toral spectra: the exterior-power model differs from the short form
/// `{1, (1 ± √5)/2}`, `char = t^2 - t - 1` quoted for the golden-ratio torus.
pub const TORUS_MODEL_NOTE: &str = "exterior-power model: det T acts on Λ²(Z^n) ⊂ K^0, so for T = [[1,1],[1,0]] \
the spectrum is {1, -1, (1±√5)/2} and char(t) = (1-t)(1+t)/(1-t-t^2), not {1, (1±√5)/2} and t^2-t-1";

/// Action of the automorphism on `K_0` and `K_1`; either block may be `0 x 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct KTheoryAction {
    k0: IntMatrix,
    k1: IntMatrix,
}

impl KTheoryAction {
    pub fn new(k0: IntMatrix, k1: IntMatrix) -> Result<Self> {
        for m in [&k0, &k1] {
            if !m.is_square() {
                return Err(AlgebraError::DimensionMismatch(format!("{}x{} action is not square", m.rows(), m.cols())));
            }
            if m.det()?.is_zero() {
                return Err(AlgebraError::SingularAction);
            }
        }
        Ok(KTheoryAction { k0, k1 })
    }

    pub fn k0(&self) -> &IntMatrix {
        &self.k0
    }

    pub fn k1(&self) -> &IntMatrix {
        &self.k1
    }

    /// The action on `K_0 ⊕ K_1`.
    pub fn block_diagonal(&self) -> IntMatrix {
        self.k0.block_diag(&self.k1)
    }
}

/// `det(X I - a)`.
pub fn charpoly(a: &IntMatrix) -> Result<LaurentPoly> {
    if !a.is_square() {
        return Err(AlgebraError::DimensionMismatch("characteristic polynomial of a non-square matrix".into()));
    }
    let x = LaurentPoly::x();
    let shifted = PolyMatrix::identity(a.rows()).scale(&x).sub(&to_poly_matrix(a))?;
    shifted.det()
}

/// Monic minimal polynomial, found as the first linear dependence among `I, a, a^2, ...`.
pub fn minimal_polynomial(a: &IntMatrix) -> Result<LaurentPoly> {
    if !a.is_square() {
        return Err(AlgebraError::DimensionMismatch("minimal polynomial of a non-square matrix".into()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let q = a.map(|x| Rational::from_integer(x.clone()));
    let mut powers = vec![Matrix::<Rational>::identity(n)];
    loop {
        let k = powers.len();
        let next = powers[k - 1].mul(&q)?;
        let mut columns: Vec<Vec<Rational>> = powers.iter().map(|p| p.entries().to_vec()).collect();
        columns.push(next.entries().to_vec());
        let krylov = Matrix::from_columns(n * n, &columns);
        let (reduced, pivots) = krylov.rref();
        if !pivots.contains(&k) {
            // next = sum_i c_i a^i with c read from the last column of the rref
            let mut terms = vec![(k as i64, Rational::one())];
            for (row, &col) in pivots.iter().enumerate() {
                terms.push((col as i64, -reduced[(row, k)].clone()));
            }
            return Ok(LaurentPoly::from_terms(terms));
        }
        powers.push(next);
    }
}

/// `k`-th exterior power: the matrix of `k x k` minors on lexicographically ordered subsets.
pub fn exterior_power(a: &IntMatrix, k: usize) -> Result<IntMatrix> {
    if !a.is_square() {
        return Err(AlgebraError::DimensionMismatch("exterior power of a non-square matrix".into()));
    }
    let subsets = k_subsets(a.rows(), k);
    let mut out = IntMatrix::zeros(subsets.len(), subsets.len());
    for (i, rows) in subsets.iter().enumerate() {
        for (j, cols) in subsets.iter().enumerate() {
            out[(i, j)] = a.submatrix(rows, cols).det()?;
        }
    }
    Ok(out)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Eigenvalue support of the crossed product: the squarefree part of the product of the
/// minimal polynomials of both blocks.
pub fn tspec_of_crossed_product(a: &KTheoryAction) -> Result<Support> {
    let product = &minimal_polynomial(&a.k0)? * &minimal_polynomial(&a.k1)?;
    Ok(Support::Finite(squarefree_part(&product)?))
}

/// Nonzero eigenvalues of a 0/1 matrix.
pub fn ck_spectrum(a: &IntMatrix) -> Result<Support> {
    if a.entries().iter().any(|x| !(x.is_zero() || x.is_one())) {
        return Err(AlgebraError::NotZeroOne);
    }
    // factors of X are units in the Laurent ring, so canonicalization drops eigenvalue 0
    Ok(Support::Finite(squarefree_part(&charpoly(a)?)?))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Obstruction {
    pub obstructed: bool,
    /// Points of the spectrum off the unit circle.
    pub witnesses: Vec<Complex64>,
}

/// Whether some spectral point has modulus different from 1 (beyond `tolerance`).
pub fn commutativity_obstruction(s: &Support, tolerance: f64) -> Result<Obstruction> {
    let g = s.generator().ok_or(AlgebraError::FullSupport)?;
    let witnesses: Vec<Complex64> = g.numeric_roots().into_iter().filter(|z| (z.norm() - 1.0).abs() > tolerance).collect();
    Ok(Obstruction { obstructed: !witnesses.is_empty(), witnesses })
}

/// `det(1 - t a)` as a polynomial in `t` (stored in the Laurent variable).
pub fn det_one_minus_t(a: &IntMatrix) -> Result<LaurentPoly> {
    let t = LaurentPoly::x();
    PolyMatrix::identity(a.rows()).sub(&to_poly_matrix(a).scale(&t))?.det()
}

/// `char(t) = det(1 - t X_+) / det(1 - t X_-)` with `X_+` the `K_0` block and `X_-` the `K_1` block.
pub fn char_function(a: &KTheoryAction) -> Result<RationalFunction> {
    RationalFunction::new(det_one_minus_t(&a.k0)?, det_one_minus_t(&a.k1)?)
}

/// `sum_{n=1}^{order} (tr k1^n - tr k0^n) t^n / n`.
pub fn graded_power_sum_series(a: &KTheoryAction, order: usize) -> Result<TruncatedSeries> {
    let mut coeffs = vec![Rational::zero()];
    let (mut p0, mut p1) = (IntMatrix::identity(a.k0.rows()), IntMatrix::identity(a.k1.rows()));
    for n in 1..=order {
        p0 = p0.mul(&a.k0)?;
        p1 = p1.mul(&a.k1)?;
        let trace_s = p1.trace() - p0.trace();
        coeffs.push(Rational::from_integer(trace_s) / rat(n as i64));
    }
    Ok(TruncatedSeries::from_coeffs(order, coeffs))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZetaComparison {
    pub char_function: RationalFunction,
    /// Expansion of `char(t)`.
    pub char_series: TruncatedSeries,
    /// `exp(sum trace_s(X^n) t^n / n)`.
    pub exp_series: TruncatedSeries,
    pub agree: bool,
}

/// Compares `char(t)` with `exp(sum_n (tr k1^n - tr k0^n) t^n / n)` through `order`.
pub fn zeta_identity_check(a: &KTheoryAction, order: usize) -> Result<ZetaComparison> {
    let char_function = char_function(a)?;
    let char_series = char_function.to_series(order)?;
    let exp_series = graded_power_sum_series(a, order)?.exp()?;
    let agree = char_series == exp_series;
    Ok(ZetaComparison { char_function, char_series, exp_series, agree })
}

/// A linear automorphism of the torus given by an integer matrix with `det = ±1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ToralAutomorphism {
    t: IntMatrix,
}

impl ToralAutomorphism {
    pub fn new(t: IntMatrix) -> Result<Self> {
        if !t.is_square() {
            return Err(AlgebraError::DimensionMismatch("toral automorphism must be square".into()));
        }
        if !t.det()?.abs().is_one() {
            return Err(AlgebraError::NotUnimodular);
        }
        Ok(ToralAutomorphism { t })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.t
    }

    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    /// Distinct eigenvalues, numerically.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        let cp = charpoly(&self.t).expect("square");
        squarefree_part(&cp).expect("nonzero").numeric_roots()
    }

    /// No eigenvalue within `tolerance` of the unit circle.
    pub fn is_hyperbolic(&self, tolerance: f64) -> bool {
        self.eigenvalues().iter().all(|z| (z.norm() - 1.0).abs() > tolerance)
    }

    /// Induced action on `K^*(T^n) = Λ^*(Z^n)` by exterior powers of the transpose:
    /// even powers form `K^0`, odd powers `K^1`.
    pub fn k_theory_action(&self) -> Result<KTheoryAction> {
        self.k_theory_action_of_power(1)
    }

    fn k_theory_action_of_power(&self, n: u32) -> Result<KTheoryAction> {
        let base = self.t.transpose().pow(n)?;
        let mut even = IntMatrix::zeros(0, 0);
        let mut odd = IntMatrix::zeros(0, 0);
        for k in 0..=self.dim() {
            let block = exterior_power(&base, k)?;
            if k % 2 == 0 {
                even = even.block_diag(&block);
            } else {
                odd = odd.block_diag(&block);
            }
        }
        KTheoryAction::new(even, odd)
    }

    fn power_minus_identity(&self, n: u32) -> Result<IntMatrix> {
        self.t.pow(n)?.sub(&IntMatrix::identity(self.dim()))
    }
}

/// Number of points of period `n`: `|det(T^n - I)|`.
pub fn periodic_points(t: &ToralAutomorphism, n: u32) -> Result<BigInt> {
    let d = t.power_minus_identity(n)?.det()?;
    if d.is_zero() {
        return Err(AlgebraError::DegeneratePower(n));
    }
    Ok(d.abs())
}

/// Independent count of `{x in [0,1)^n : (T^n - I) x ∈ Z^n}`: the product of the
/// elementary divisors of `T^n - I` over the integers.
pub fn lattice_point_count(t: &ToralAutomorphism, n: u32) -> Result<BigInt> {
    let m = t.power_minus_identity(n)?;
    let snf = smith_normal_form(&m);
    if snf.rank() < m.rows() {
        return Err(AlgebraError::DegeneratePower(n));
    }
    Ok(snf.diagonal().iter().fold(BigInt::one(), |acc, d| acc * d.abs()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicRow {
    pub n: u32,
    pub count: BigInt,
    pub lattice_count: BigInt,
}

impl PeriodicRow {
    pub fn agrees(&self) -> bool {
        self.count == self.lattice_count
    }
}

pub fn periodic_table(t: &ToralAutomorphism, max_n: u32) -> Result<Vec<PeriodicRow>> {
    (1..=max_n)
        .map(|n| Ok(PeriodicRow { n, count: periodic_points(t, n)?, lattice_count: lattice_point_count(t, n)? }))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzSign {
    /// `sum_k (-1)^k tr Λ^k(T^n)`, i.e. `trace(K^0) - trace(K^1)`.
    pub graded_trace: BigInt,
    /// Number of eigenvalues of `T^n` greater than 1, with multiplicity.
    pub expanding: usize,
    pub periodic_points: BigInt,
    pub holds: bool,
}

/// Checks `trace_s((φ_T^*)^n) = (-1)^k P_n` for symmetric hyperbolic `T`.
pub fn lefschetz_sign_check(t: &ToralAutomorphism, n: u32) -> Result<LefschetzSign> {
    if !t.matrix().is_symmetric() {
        return Err(AlgebraError::NotSymmetric);
    }
    let periodic = periodic_points(t, n)?;
    let action = t.k_theory_action_of_power(n)?;
    let graded_trace = action.k0().trace() - action.k1().trace();
    let expanding = eigenvalues_above_one(&t.matrix().pow(n)?)?;
    let signed = if expanding % 2 == 0 { periodic.clone() } else { -periodic.clone() };
    Ok(LefschetzSign { holds: graded_trace == signed, graded_trace, expanding, periodic_points: periodic })
}

/// Eigenvalues `> 1` of a symmetric integer matrix, counted with multiplicity.
///
/// The characteristic polynomial is real-rooted, so Descartes' rule applied to
/// `charpoly(Y + 1)` counts its positive roots exactly.
pub fn eigenvalues_above_one(s: &IntMatrix) -> Result<usize> {
    if !s.is_symmetric() {
        return Err(AlgebraError::NotSymmetric);
    }
    let cp = charpoly(s)?;
    let y_plus_one = LaurentPoly::from_coeffs(0, &[1, 1]);
    let mut shifted = LaurentPoly::zero();
    for e in (0..=cp.max_exp().unwrap_or(0)).rev() {
        shifted = &(&shifted * &y_plus_one) + &LaurentPoly::constant(cp.coeff(e));
    }
    let signs: Vec<bool> = shifted.terms().map(|(_, c)| c.is_positive()).collect();
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}
