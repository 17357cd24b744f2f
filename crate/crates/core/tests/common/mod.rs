//! Independent oracles shared by the integration suites. None of them go through the
//! Smith normal form, Bareiss elimination or the Krylov minimal polynomial.

#![allow(dead_code)]

use num_traits::{One, Zero};
use tspec_core::laurent::{rat, Rational};
use tspec_core::{gcd, IntMatrix, LaurentPoly, Matrix, PolyMatrix};

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &PolyMatrix) -> LaurentPoly {
    let n = m.rows();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        if m[(0, j)].is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = &m[(0, j)] * &laplace_det(&m.submatrix(&rows, &cols));
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `i`-th determinantal divisor: gcd of all `i x i` minors, `None` when they all vanish.
pub fn determinantal_divisor(m: &PolyMatrix, i: usize) -> Option<LaurentPoly> {
    let mut acc: Option<LaurentPoly> = None;
    for rows in subsets(m.rows(), i) {
        for cols in subsets(m.cols(), i) {
            let minor = laplace_det(&m.submatrix(&rows, &cols));
            if minor.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => minor.canonical_associate().unwrap().into_poly(),
                Some(g) => gcd(&g, &minor).unwrap().into_poly(),
            });
        }
    }
    acc
}

/// Characteristic polynomial `det(X I - a)` by the Faddeev–LeVerrier recursion.
pub fn faddeev_leverrier(a: &IntMatrix) -> LaurentPoly {
    let n = a.rows();
    let q: Matrix<Rational> = a.map(|x| Rational::from_integer(x.clone()));
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = Matrix::<Rational>::zeros(n, n);
    for k in 1..=n {
        m = q.mul(&m).unwrap().add(&Matrix::identity(n).scale(&coeffs[n - k + 1])).unwrap();
        coeffs[n - k] = -q.mul(&m).unwrap().trace() / rat(k as i64);
    }
    LaurentPoly::from_terms(coeffs.into_iter().enumerate().map(|(e, c)| (e as i64, c)))
}

/// `det` of an integer matrix by cofactor expansion.
pub fn int_det(m: &IntMatrix) -> num_bigint::BigInt {
    laplace_det(&tspec_core::matrix::to_poly_matrix(m)).coeff(0).to_integer()
}

/// Points `x ∈ [0,1)^2` with `m x ∈ Z^2`, enumerated on the grid `(1/|det m|) Z^2`,
/// which contains all of them because `m^-1 = adj(m) / det(m)`.
pub fn brute_force_fixed_points_2d(m: &IntMatrix) -> u64 {
    let d = int_det(m);
    let q: i64 = num_traits::Signed::abs(&d).try_into().unwrap();
    let e = |i: usize, j: usize| -> i64 { (&m[(i, j)]).try_into().unwrap() };
    let mut count = 0;
    for a in 0..q {
        for b in 0..q {
            // x = (a/q, b/q); need M x integral, i.e. M (a, b) ≡ 0 mod q
            if (e(0, 0) * a + e(0, 1) * b).rem_euclid(q) == 0 && (e(1, 0) * a + e(1, 1) * b).rem_euclid(q) == 0 {
                count += 1;
            }
        }
    }
    count
}
