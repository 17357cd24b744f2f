//! Finitely presented modules over the Laurent ring: classification by invariant
//! factors, annihilators, supports and direct sums.

use std::fmt;

use num_complex::Complex64;

use crate::error::{AlgebraError, Result};
use crate::laurent::{lcm, squarefree_part, CanonicalGenerator, LaurentPoly};
use crate::matrix::PolyMatrix;
use crate::ring::EuclideanDomain;
use crate::snf::{smith_diagonal, smith_normal_form, SmithForm};

/// The cokernel of `relations`, a `generators x r` matrix whose columns are relations.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentedModule {
    relations: PolyMatrix,
}

impl PresentedModule {
    pub fn new(generators: usize, relations: PolyMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(AlgebraError::DimensionMismatch(format!(
                "relation matrix has {} rows but the module has {generators} generators",
                relations.rows()
            )));
        }
        Ok(PresentedModule { relations })
    }

    /// The free module of the given rank.
    pub fn free(rank: usize) -> Self {
        PresentedModule { relations: PolyMatrix::zeros(rank, 0) }
    }

    /// `Laur / (f)` on one generator.
    pub fn cyclic(f: LaurentPoly) -> Self {
        PresentedModule { relations: PolyMatrix::from_fn(1, 1, |_, _| f.clone()) }
    }

    /// `⊕ Laur/(d_i)` on one generator per entry.
    pub fn diagonal(entries: &[LaurentPoly]) -> Self {
        PresentedModule { relations: PolyMatrix::diagonal(entries) }
    }

    pub fn generators(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        PresentedModule { relations: self.relations.block_diag(&other.relations) }
    }

    pub fn smith_form(&self) -> SmithForm<LaurentPoly> {
        smith_normal_form(&self.relations)
    }

    pub fn classify(&self) -> InvariantFactors {
        classify(self)
    }
}

/// A Z/2-graded module; the two degrees are classified independently.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedModule {
    pub degree0: PresentedModule,
    pub degree1: PresentedModule,
}

impl GradedModule {
    pub fn new(degree0: PresentedModule, degree1: PresentedModule) -> Self {
        GradedModule { degree0, degree1 }
    }

    pub fn even(degree0: PresentedModule) -> Self {
        GradedModule { degree0, degree1: PresentedModule::free(0) }
    }

    pub fn degree(&self, d: usize) -> &PresentedModule {
        if d % 2 == 0 {
            &self.degree0
        } else {
            &self.degree1
        }
    }

    pub fn classify(&self) -> [InvariantFactors; 2] {
        [classify(&self.degree0), classify(&self.degree1)]
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        GradedModule {
            degree0: self.degree0.direct_sum(&other.degree0),
            degree1: self.degree1.direct_sum(&other.degree1),
        }
    }

    /// Union of the supports of both degrees.
    pub fn support(&self) -> Support {
        let [a, b] = self.classify();
        support(&a).union(&support(&b))
    }
}

/// Torsion chain `d_1 | d_2 | ... | d_k` of non-units plus a free rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFactors {
    torsion: Vec<CanonicalGenerator>,
    free_rank: usize,
}

impl InvariantFactors {
    pub fn new(torsion: Vec<CanonicalGenerator>, free_rank: usize) -> Result<Self> {
        if let Some(u) = torsion.iter().find(|d| d.is_one()) {
            return Err(AlgebraError::InvalidInvariantFactors(format!("unit factor {u} in torsion list")));
        }
        for w in torsion.windows(2) {
            if !w[0].as_poly().divides(w[1].as_poly()) {
                return Err(AlgebraError::InvalidInvariantFactors(format!("{} does not divide {}", w[0], w[1])));
            }
        }
        Ok(InvariantFactors { torsion, free_rank })
    }

    pub fn zero_module() -> Self {
        InvariantFactors { torsion: Vec::new(), free_rank: 0 }
    }

    pub fn free(rank: usize) -> Self {
        InvariantFactors { torsion: Vec::new(), free_rank: rank }
    }

    pub fn torsion(&self) -> &[CanonicalGenerator] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    /// Diagonal presentation: one generator per torsion factor followed by the free generators.
    pub fn to_presented(&self) -> PresentedModule {
        let n = self.torsion.len() + self.free_rank;
        let relations = PolyMatrix::from_fn(n, self.torsion.len(), |i, j| {
            if i == j {
                self.torsion[i].as_poly().clone()
            } else {
                LaurentPoly::zero()
            }
        });
        PresentedModule { relations }
    }

    pub fn annihilator(&self) -> LaurentPoly {
        annihilator(self)
    }

    pub fn support(&self) -> Support {
        support(self)
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("zero module");
        }
        let parts: Vec<String> = self.torsion.iter().map(|d| format!("Laur/({d})")).collect();
        let mut s = parts.join(" ⊕ ");
        if self.free_rank > 0 {
            if !s.is_empty() {
                s.push_str(" ⊕ ");
            }
            s.push_str(&format!("Laur^{}", self.free_rank));
        }
        f.write_str(&s)
    }
}

/// The zero set in `C*` of the annihilator: all of `C*`, or the roots of a squarefree
/// generator (generator 1 is the empty support).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Support {
    Full,
    Finite(CanonicalGenerator),
}

impl Support {
    pub fn empty() -> Self {
        Support::Finite(CanonicalGenerator::one())
    }

    /// Support of `Laur/(f)`.
    pub fn zero_set(f: &LaurentPoly) -> Result<Self> {
        Ok(Support::Finite(squarefree_part(f)?))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Support::Finite(g) if g.is_one())
    }

    pub fn is_full(&self) -> bool {
        matches!(self, Support::Full)
    }

    pub fn generator(&self) -> Option<&CanonicalGenerator> {
        match self {
            Support::Full => None,
            Support::Finite(g) => Some(g),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        match (self, other) {
            (Support::Finite(a), Support::Finite(b)) => {
                Support::Finite(lcm(a.as_poly(), b.as_poly()).expect("generators are nonzero"))
            }
            _ => Support::Full,
        }
    }

    /// Whether every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        match (self, other) {
            (_, Support::Full) => true,
            (Support::Full, Support::Finite(_)) => false,
            (Support::Finite(a), Support::Finite(b)) => a.as_poly().divides(b.as_poly()),
        }
    }

    /// Numeric points, sorted by real then imaginary part; `None` for the full support.
    pub fn numeric_points(&self) -> Option<Vec<Complex64>> {
        self.generator().map(|g| g.numeric_roots())
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Support::Full => f.write_str("FULL (ℂ*)"),
            Support::Finite(g) if g.is_one() => f.write_str("EMPTY"),
            Support::Finite(g) => write!(f, "FINITE, zeros of {g}"),
        }
    }
}

/// Reads off invariant factors from the Smith normal form of the relations.
pub fn classify(m: &PresentedModule) -> InvariantFactors {
    let diag = smith_diagonal(&m.relations);
    let nonzero: Vec<&LaurentPoly> = diag.iter().filter(|d| !d.is_zero()).collect();
    let torsion = nonzero
        .iter()
        .filter(|d| !d.is_unit())
        .map(|d| d.canonical_associate().expect("nonzero"))
        .collect();
    InvariantFactors { torsion, free_rank: m.generators() - nonzero.len() }
}

/// Generator of the annihilator ideal: zero when a free summand exists, `1` for the zero module.
pub fn annihilator(inv: &InvariantFactors) -> LaurentPoly {
    if inv.free_rank > 0 {
        return LaurentPoly::zero();
    }
    inv.torsion.last().map_or_else(LaurentPoly::one, |d| d.as_poly().clone())
}

pub fn support(inv: &InvariantFactors) -> Support {
    if inv.free_rank > 0 {
        return Support::Full;
    }
    match inv.torsion.last() {
        None => Support::empty(),
        Some(d) => Support::Finite(squarefree_part(d.as_poly()).expect("nonzero")),
    }
}

pub fn direct_sum(a: &InvariantFactors, b: &InvariantFactors) -> InvariantFactors {
    classify(&a.to_presented().direct_sum(&b.to_presented()))
}

/// Some `x` with `a x = b` over the Laurent ring, if one exists.
pub fn solve_linear(a: &PolyMatrix, b: &[LaurentPoly]) -> Result<Option<Vec<LaurentPoly>>> {
    if a.rows() != b.len() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "matrix has {} rows but right-hand side has length {}",
            a.rows(),
            b.len()
        )));
    }
    solve_with(&smith_normal_form(a), b)
}

/// Solves `a x = b` given the Smith form of `a`.
pub(crate) fn solve_with(snf: &SmithForm<LaurentPoly>, b: &[LaurentPoly]) -> Result<Option<Vec<LaurentPoly>>> {
    // a x = b  <=>  d y = u b  with  x = v y
    let c = snf.u.mul_vec(b)?;
    let diag = snf.diagonal();
    let mut y = vec![LaurentPoly::zero(); snf.v.rows()];
    for (i, ci) in c.iter().enumerate() {
        match diag.get(i).filter(|d| !d.is_zero()) {
            Some(d) => match ci.exact_div(d) {
                Some(q) => y[i] = q,
                None => return Ok(None),
            },
            None if !ci.is_zero() => return Ok(None),
            None => {}
        }
    }
    Ok(Some(snf.v.mul_vec(&y)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn g(s: &str) -> CanonicalGenerator {
        p(s).canonical_associate().unwrap()
    }

    #[test]
    fn classify_examples() {
        let free = classify(&PresentedModule::free(2));
        assert_eq!(free, InvariantFactors::free(2));

        for n in 1..=6 {
            let f = &LaurentPoly::x_pow(n) - &LaurentPoly::one();
            let inv = classify(&PresentedModule::cyclic(f.clone()));
            assert_eq!(inv.torsion(), &[f.canonical_associate().unwrap()]);
            assert_eq!(inv.free_rank(), 0);
        }

        let m = PresentedModule::new(
            2,
            PolyMatrix::from_rows(vec![vec![p("X - 1"), p("X - 1")], vec![p("0"), p("X + 1")]], 2).unwrap(),
        )
        .unwrap();
        assert_eq!(classify(&m).torsion(), &[g("X^2 - 1")]);
        assert_eq!(classify(&m).free_rank(), 0);
    }

    #[test]
    fn unit_relations_vanish() {
        let m = PresentedModule::cyclic(p("3*X^-2"));
        assert!(classify(&m).is_zero());
        assert!(PresentedModule::new(3, PolyMatrix::zeros(2, 0)).is_err());
    }

    #[test]
    fn annihilator_examples() {
        assert!(annihilator(&InvariantFactors::free(1)).is_zero());
        let inv = InvariantFactors::new(vec![g("X - 1"), g("X^2 - 1")], 0).unwrap();
        assert_eq!(annihilator(&inv), p("X^2 - 1"));
        assert!(annihilator(&InvariantFactors::zero_module()).is_one());
    }

    #[test]
    fn support_examples() {
        let inv = classify(&PresentedModule::cyclic(p("X - 3/2")));
        assert_eq!(support(&inv), Support::Finite(g("X - 3/2")));
        let inv = classify(&PresentedModule::cyclic(p("X^4 - 1")));
        assert_eq!(support(&inv), Support::Finite(g("X^4 - 1")));
        assert_eq!(support(&InvariantFactors::free(1)), Support::Full);
        assert!(support(&InvariantFactors::zero_module()).is_empty());
        let sq = classify(&PresentedModule::cyclic(p("X - 1").pow(3)));
        assert_eq!(support(&sq), Support::Finite(g("X - 1")));
    }

    #[test]
    fn direct_sum_examples() {
        let a = classify(&PresentedModule::cyclic(p("X - 1")));
        let b = classify(&PresentedModule::cyclic(p("X + 1")));
        let s = direct_sum(&a, &b);
        assert_eq!(s.torsion(), &[g("X^2 - 1")]);
        assert_eq!(support(&s), Support::Finite(g("X^2 - 1")));

        let s = direct_sum(&a, &a);
        assert_eq!(s.torsion(), &[g("X - 1"), g("X - 1")]);
        assert_eq!(support(&s), Support::Finite(g("X - 1")));

        let s = direct_sum(&a, &InvariantFactors::free(1));
        assert_eq!(support(&s), Support::Full);
    }

    #[test]
    fn invariant_factor_validation() {
        assert!(InvariantFactors::new(vec![g("X + 1"), g("X - 1")], 0).is_err());
        assert!(InvariantFactors::new(vec![CanonicalGenerator::one()], 0).is_err());
    }

    #[test]
    fn solve_linear_examples() {
        let a = PolyMatrix::from_rows(vec![vec![p("X - 1")]], 1).unwrap();
        assert_eq!(solve_linear(&a, &[p("X^2 - 1")]).unwrap(), Some(vec![p("X + 1")]));
        assert_eq!(solve_linear(&a, &[p("1")]).unwrap(), None);
        let id = PolyMatrix::identity(3);
        let b = vec![p("X"), p("X^-2 + 1/3"), p("0")];
        assert_eq!(solve_linear(&id, &b).unwrap(), Some(b.clone()));
        assert!(matches!(solve_linear(&id, &b[..2]), Err(AlgebraError::DimensionMismatch(_))));
        let empty = PolyMatrix::zeros(2, 0);
        assert_eq!(solve_linear(&empty, &[p("0"), p("0")]).unwrap(), Some(vec![]));
        assert_eq!(solve_linear(&empty, &[p("1"), p("0")]).unwrap(), None);
    }
}
