//! Localization at Zariski opens `U_f` and Laurent-valued module traces.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::laurent::{gcd, strip_common_factors, CanonicalGenerator, LaurentPoly};
use crate::matrix::PolyMatrix;
use crate::module::{solve_with, support, GradedModule, InvariantFactors, PresentedModule, Support};
use crate::ratfunc::RationalFunction;

/// A module over `Laur_f`, kept as Laurent-ring data whose torsion is coprime to `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedModule {
    inverted: CanonicalGenerator,
    factors: InvariantFactors,
}

impl LocalizedModule {
    pub fn inverted(&self) -> &CanonicalGenerator {
        &self.inverted
    }

    pub fn factors(&self) -> &InvariantFactors {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.factors.is_zero()
    }

    pub fn support(&self) -> Support {
        support(&self.factors)
    }

    /// Localizes further at `g`; equal to localizing once at `f * g`.
    pub fn localize(&self, g: &LaurentPoly) -> Result<LocalizedModule> {
        let fg = self.inverted.as_poly() * g;
        let mut out = localize(&self.factors, g)?;
        out.inverted = fg.canonical_associate()?;
        Ok(out)
    }
}

impl fmt::Display for LocalizedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (over Laur localized at {})", self.factors, self.inverted)
    }
}

/// Inverts all powers of `f`: torsion supported on the zeros of `f` dies.
pub fn localize(inv: &InvariantFactors, f: &LaurentPoly) -> Result<LocalizedModule> {
    let inverted = f.canonical_associate()?;
    let mut torsion = Vec::new();
    for d in inv.torsion() {
        let stripped = strip_common_factors(d.as_poly(), f)?;
        if !stripped.is_one() {
            torsion.push(stripped);
        }
    }
    let factors = InvariantFactors::new(torsion, inv.free_rank())?;
    Ok(LocalizedModule { inverted, factors })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_int(p: u8) -> Option<Self> {
        match p {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn as_int(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Which degree is counted positively in a graded trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum TraceConvention {
    /// `trace(K^0) - trace(K^1)`.
    #[default]
    EvenMinusOdd,
    /// `trace(K_1) - trace(K_0)`.
    OddMinusEven,
}

/// A Z/2-graded module map. `blocks[d]` is the matrix on the generators of the source
/// degree `d`; for odd maps it lands in degree `1 - d`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedModuleMap {
    pub parity: Parity,
    pub blocks: [PolyMatrix; 2],
}

impl GradedModuleMap {
    pub fn even(degree0: PolyMatrix, degree1: PolyMatrix) -> Self {
        GradedModuleMap { parity: Parity::Even, blocks: [degree0, degree1] }
    }

    pub fn odd(from0: PolyMatrix, from1: PolyMatrix) -> Self {
        GradedModuleMap { parity: Parity::Odd, blocks: [from0, from1] }
    }

    pub fn identity(gm: &GradedModule) -> Self {
        Self::even(PolyMatrix::identity(gm.degree0.generators()), PolyMatrix::identity(gm.degree1.generators()))
    }

    /// Checks that each block descends to the cokernels.
    pub fn verify(&self, gm: &GradedModule) -> Result<bool> {
        for d in 0..2 {
            let target = match self.parity {
                Parity::Even => d,
                Parity::Odd => 1 - d,
            };
            if !verify_homomorphism(gm.degree(d), gm.degree(target), &self.blocks[d])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTrace {
    pub value: LaurentPoly,
    /// Set when the value is zero because the map has odd degree.
    pub odd_degree: bool,
}

/// True iff `l` maps the relations of `src` into the relation span of `dst`.
pub fn verify_homomorphism(src: &PresentedModule, dst: &PresentedModule, l: &PolyMatrix) -> Result<bool> {
    if l.shape() != (dst.generators(), src.generators()) {
        return Err(AlgebraError::DimensionMismatch(format!(
            "map is {}x{} but the modules have {} and {} generators",
            l.rows(),
            l.cols(),
            dst.generators(),
            src.generators()
        )));
    }
    let image = l.mul(src.relations())?;
    let snf = dst.smith_form();
    for j in 0..image.cols() {
        if solve_with(&snf, &image.column(j))?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn verify_endomorphism(m: &PresentedModule, l: &PolyMatrix) -> Result<bool> {
    verify_homomorphism(m, m, l)
}

/// The block `C` of `L = [[A, B], [0, C]]` in a torsion ⊕ free splitting basis.
pub fn free_compression(m: &PresentedModule, l: &PolyMatrix) -> Result<PolyMatrix> {
    if !verify_endomorphism(m, l)? {
        return Err(AlgebraError::NotAnEndomorphism);
    }
    let snf = m.smith_form();
    let torsion_rank = snf.rank();
    let conj = snf.u.mul(l)?.mul(&snf.u_inv)?;
    let g = m.generators();
    let free: Vec<usize> = (torsion_rank..g).collect();
    let tors: Vec<usize> = (0..torsion_rank).collect();
    if !conj.submatrix(&free, &tors).is_zero() {
        return Err(AlgebraError::NotAnEndomorphism);
    }
    Ok(conj.submatrix(&free, &free))
}

/// Laurent-valued trace of an endomorphism: the trace of its free compression.
pub fn module_trace(m: &PresentedModule, l: &PolyMatrix) -> Result<LaurentPoly> {
    Ok(free_compression(m, l)?.trace())
}

pub fn graded_trace(gm: &GradedModule, l: &GradedModuleMap) -> Result<GradedTrace> {
    graded_trace_with(gm, l, TraceConvention::EvenMinusOdd)
}

pub fn graded_trace_with(gm: &GradedModule, l: &GradedModuleMap, convention: TraceConvention) -> Result<GradedTrace> {
    if !l.verify(gm)? {
        return Err(AlgebraError::NotAnEndomorphism);
    }
    if l.parity == Parity::Odd {
        return Ok(GradedTrace { value: LaurentPoly::zero(), odd_degree: true });
    }
    let t0 = module_trace(&gm.degree0, &l.blocks[0])?;
    let t1 = module_trace(&gm.degree1, &l.blocks[1])?;
    let value = match convention {
        TraceConvention::EvenMinusOdd => &t0 - &t1,
        TraceConvention::OddMinusEven => &t1 - &t0,
    };
    Ok(GradedTrace { value, odd_degree: false })
}

/// Trace of `L` on `M ⊗ Q(X)`: `tr(L) - tr(L restricted to the relation span)`.
///
/// Torsion vanishes over the fraction field, so this agrees with [`module_trace`]
/// while sharing none of its Smith-form machinery.
pub fn fraction_field_trace(m: &PresentedModule, l: &PolyMatrix) -> Result<RationalFunction> {
    if l.shape() != (m.generators(), m.generators()) {
        return Err(AlgebraError::DimensionMismatch("endomorphism must be square on the generators".into()));
    }
    let to_k = |a: &PolyMatrix| a.map(|x| RationalFunction::from_poly(x.clone()));
    let r = to_k(m.relations());
    let lk = to_k(l);
    let (_, pivots) = r.rref();
    let total = lk.trace();
    if pivots.is_empty() {
        return Ok(total);
    }
    let g = m.generators();
    let basis = r.submatrix(&(0..g).collect::<Vec<_>>(), &pivots);
    let image = lk.mul(&basis)?;
    let (reduced, _) = basis.hstack(&image)?.rref();
    let s = pivots.len();
    let restricted = reduced.submatrix(&(0..s).collect::<Vec<_>>(), &(s..2 * s).collect::<Vec<_>>());
    Ok(total - restricted.trace())
}

/// Trace over `Laur_f` of the localized endomorphism.
pub fn localized_trace(m: &PresentedModule, l: &PolyMatrix, f: &LaurentPoly) -> Result<RationalFunction> {
    let inverted = f.canonical_associate()?;
    if !verify_endomorphism(m, l)? {
        return Err(AlgebraError::NotAnEndomorphism);
    }
    let value = fraction_field_trace(m, l)?;
    // the value must live in Laur_f
    let den = value.denominator().as_poly();
    debug_assert!(strip_common_factors(den, inverted.as_poly())?.is_one());
    Ok(value)
}

/// Graded trace over `Laur_f` under the given sign convention.
pub fn localized_graded_trace(
    gm: &GradedModule,
    l: &GradedModuleMap,
    f: &LaurentPoly,
    convention: TraceConvention,
) -> Result<RationalFunction> {
    f.canonical_associate()?;
    if !l.verify(gm)? {
        return Err(AlgebraError::NotAnEndomorphism);
    }
    if l.parity == Parity::Odd {
        return Ok(RationalFunction::from_poly(LaurentPoly::zero()));
    }
    let t0 = localized_trace(&gm.degree0, &l.blocks[0], f)?;
    let t1 = localized_trace(&gm.degree1, &l.blocks[1], f)?;
    Ok(match convention {
        TraceConvention::EvenMinusOdd => t0 - t1,
        TraceConvention::OddMinusEven => t1 - t0,
    })
}

/// True when `g` and `f` share no zero in `C*`.
pub fn coprime(g: &LaurentPoly, f: &LaurentPoly) -> Result<bool> {
    Ok(gcd(g, f)?.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::classify;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn m(rows: Vec<Vec<&str>>, cols: usize) -> PolyMatrix {
        PolyMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(p).collect()).collect(), cols).unwrap()
    }

    #[test]
    fn localize_examples() {
        let a = classify(&PresentedModule::cyclic(p("X - 1")));
        assert!(localize(&a, &p("X - 1")).unwrap().is_zero());

        let b = classify(&PresentedModule::cyclic(p("X - 1").pow(2) * p("X + 1")));
        let lb = localize(&b, &p("X - 1")).unwrap();
        assert_eq!(lb.factors().torsion(), &[p("X + 1").canonical_associate().unwrap()]);

        let free = InvariantFactors::free(3);
        assert_eq!(localize(&free, &p("X^2 + X + 1")).unwrap().factors(), &free);
        assert_eq!(localize(&free, &LaurentPoly::zero()), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn verify_endomorphism_examples() {
        let cyc = PresentedModule::cyclic(p("X - 1"));
        assert!(verify_endomorphism(&cyc, &PolyMatrix::identity(1)).unwrap());
        assert!(verify_endomorphism(&cyc, &m(vec![vec!["X"]], 1)).unwrap());
        assert!(verify_endomorphism(&PresentedModule::free(1), &m(vec![vec!["X^2 + 3"]], 1)).unwrap());
        assert!(verify_endomorphism(&cyc, &PolyMatrix::identity(2)).is_err());
        // Laur/(X-1) ⊕ Laur: sending the torsion generator to the free one is not a module map
        let mixed = PresentedModule::diagonal(&[p("X - 1")]).direct_sum(&PresentedModule::free(1));
        assert!(!verify_endomorphism(&mixed, &m(vec![vec!["0", "0"], vec!["1", "0"]], 2)).unwrap());
    }

    #[test]
    fn module_trace_examples() {
        for k in 0..4 {
            assert_eq!(module_trace(&PresentedModule::free(k), &PolyMatrix::identity(k)).unwrap(), LaurentPoly::int(k as i64));
        }
        assert_eq!(module_trace(&PresentedModule::free(1), &m(vec![vec!["X"]], 1)).unwrap(), p("X"));
        let module = PresentedModule::cyclic(p("X - 1")).direct_sum(&PresentedModule::free(2));
        let l = m(vec![vec!["X^3", "7", "X"], vec!["0", "2", "X^-1"], vec!["0", "0", "3"]], 3);
        assert_eq!(module_trace(&module, &l).unwrap(), p("5"));
        assert_eq!(module_trace(&PresentedModule::cyclic(p("X + 2")), &m(vec![vec!["X"]], 1)).unwrap(), p("0"));
        let bad = m(vec![vec!["0", "0", "0"], vec!["1", "0", "0"], vec!["0", "0", "0"]], 3);
        assert_eq!(module_trace(&module, &bad), Err(AlgebraError::NotAnEndomorphism));
    }

    #[test]
    fn graded_trace_examples() {
        let gm = GradedModule::new(PresentedModule::free(3), PresentedModule::free(1));
        let id = GradedModuleMap::identity(&gm);
        assert_eq!(graded_trace(&gm, &id).unwrap().value, p("2"));
        assert_eq!(graded_trace_with(&gm, &id, TraceConvention::OddMinusEven).unwrap().value, p("-2"));

        let gm = GradedModule::new(PresentedModule::free(1), PresentedModule::free(1));
        let x = GradedModuleMap::even(m(vec![vec!["X"]], 1), m(vec![vec!["X"]], 1));
        assert!(graded_trace(&gm, &x).unwrap().value.is_zero());

        let odd = GradedModuleMap::odd(m(vec![vec!["1"]], 1), m(vec![vec!["X"]], 1));
        let t = graded_trace(&gm, &odd).unwrap();
        assert!(t.value.is_zero() && t.odd_degree);
    }

    #[test]
    fn localized_trace_examples() {
        for k in 1..4 {
            let t = localized_trace(&PresentedModule::free(k), &PolyMatrix::identity(k), &p("X^2 - 3")).unwrap();
            assert_eq!(t, RationalFunction::from_poly(LaurentPoly::int(k as i64)));
        }
        let t = localized_trace(&PresentedModule::cyclic(p("X - 1")), &m(vec![vec!["X"]], 1), &p("X - 1")).unwrap();
        assert_eq!(t, RationalFunction::from_poly(LaurentPoly::zero()));
        let module = PresentedModule::cyclic(p("X - 1")).direct_sum(&PresentedModule::free(2));
        let l = m(vec![vec!["X^3", "7", "X"], vec!["0", "2", "X^-1"], vec!["0", "0", "3"]], 3);
        assert_eq!(localized_trace(&module, &l, &p("X")).unwrap(), RationalFunction::from_poly(p("5")));
    }

    #[test]
    fn double_localization() {
        let inv = classify(&PresentedModule::diagonal(&[p("X - 1"), p("X^2 - 1"), p("X^2 - 1") * p("X - 2")]));
        let once = localize(&localize(&inv, &p("X + 1")).unwrap().factors().clone(), &p("X - 2")).unwrap();
        let both = localize(&inv, &(p("X + 1") * p("X - 2"))).unwrap();
        assert_eq!(once.factors(), both.factors());
        let chained = localize(&inv, &p("X + 1")).unwrap().localize(&p("X - 2")).unwrap();
        assert_eq!(chained, both);
    }
}
