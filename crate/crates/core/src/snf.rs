//! Smith normal form over a Euclidean domain with tracked unimodular transforms.
//!
//! Used over the Laurent ring (module classification) and over the integers
//! (lattice point counts).

use crate::matrix::Matrix;
use crate::ring::EuclideanDomain;

/// `u * a * v = d` with `d` diagonal, `u_inv = u^-1`, `v_inv = v^-1`.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: EuclideanDomain> SmithForm<T> {
    /// The `min(rows, cols)` diagonal entries; nonzero entries come first.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

struct Reducer<T> {
    /// When false only `d` is updated.
    track: bool,
    d: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

impl<T: EuclideanDomain> Reducer<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if !self.track {
            return;
        }
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if !self.track {
            return;
        }
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// `row[dst] += c * row[src]`
    fn row_op(&mut self, dst: usize, src: usize, c: &T) {
        self.d.add_row_multiple(dst, src, c);
        if !self.track {
            return;
        }
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &-c.clone());
    }

    /// `col[dst] += c * col[src]`
    fn col_op(&mut self, dst: usize, src: usize, c: &T) {
        self.d.add_col_multiple(dst, src, c);
        if !self.track {
            return;
        }
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c.clone());
    }

    fn scale_row(&mut self, i: usize, unit: &T, unit_inv: &T) {
        self.d.scale_row(i, unit);
        if !self.track {
            return;
        }
        self.u.scale_row(i, unit);
        self.u_inv.scale_col(i, unit_inv);
    }

    /// Nonzero entry of minimal norm in the trailing block, ties broken row-major.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(T::Norm, usize, usize)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let n = x.norm();
                if best.as_ref().map_or(true, |(b, _, _)| n < *b) {
                    best = Some((n, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Keeps the pivot normalized, which keeps coefficient growth in check.
    fn normalize_pivot(&mut self, t: usize) {
        let (unit, unit_inv) = self.d[(t, t)].normalizing_unit();
        self.scale_row(t, &unit, &unit_inv);
    }

    fn eliminate(&mut self, t: usize) {
        let (m, n) = self.d.shape();
        loop {
            self.normalize_pivot(t);
            let mut clean = true;
            for i in t + 1..m {
                if self.d[(i, t)].is_zero() {
                    continue;
                }
                let (q, r) = self.d[(i, t)].div_rem_euclid(&self.d[(t, t)]);
                self.row_op(i, t, &-q);
                clean &= r.is_zero();
            }
            for j in t + 1..n {
                if self.d[(t, j)].is_zero() {
                    continue;
                }
                let (q, r) = self.d[(t, j)].div_rem_euclid(&self.d[(t, t)]);
                self.col_op(j, t, &-q);
                clean &= r.is_zero();
            }
            if !clean {
                // move the smallest leftover remainder into the pivot position
                let mut best: Option<(T::Norm, bool, usize)> = None;
                for i in t + 1..m {
                    let x = &self.d[(i, t)];
                    if !x.is_zero() && best.as_ref().map_or(true, |(b, _, _)| x.norm() < *b) {
                        best = Some((x.norm(), true, i));
                    }
                }
                for j in t + 1..n {
                    let x = &self.d[(t, j)];
                    if !x.is_zero() && best.as_ref().map_or(true, |(b, _, _)| x.norm() < *b) {
                        best = Some((x.norm(), false, j));
                    }
                }
                match best {
                    Some((_, true, i)) => self.swap_rows(t, i),
                    Some((_, false, j)) => self.swap_cols(t, j),
                    None => unreachable!("a nonzero remainder was left"),
                }
                continue;
            }
            // pivot must divide the whole trailing block
            let pivot = self.d[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !pivot.divides(&self.d[(i, j)])));
            match offender {
                Some(i) => self.row_op(t, i, &T::one()),
                None => return,
            }
        }
    }
}

pub fn smith_normal_form<T: EuclideanDomain>(a: &Matrix<T>) -> SmithForm<T> {
    let r = reduce(a, true);
    SmithForm { u: r.u, u_inv: r.u_inv, d: r.d, v: r.v, v_inv: r.v_inv }
}

/// The diagonal of the Smith form, without the transforms.
pub fn smith_diagonal<T: EuclideanDomain>(a: &Matrix<T>) -> Vec<T> {
    let d = reduce(a, false).d;
    (0..d.rows().min(d.cols())).map(|i| d[(i, i)].clone()).collect()
}

fn reduce<T: EuclideanDomain>(a: &Matrix<T>, track: bool) -> Reducer<T> {
    let (m, n) = a.shape();
    let (m_t, n_t) = if track { (m, n) } else { (0, 0) };
    let mut r = Reducer {
        track,
        d: a.clone(),
        u: Matrix::identity(m_t),
        u_inv: Matrix::identity(m_t),
        v: Matrix::identity(n_t),
        v_inv: Matrix::identity(n_t),
    };
    for t in 0..m.min(n) {
        let Some((i, j)) = r.min_entry(t) else {
            break;
        };
        r.swap_rows(t, i);
        r.swap_cols(t, j);
        r.eliminate(t);
        r.normalize_pivot(t);
    }
    r
}
