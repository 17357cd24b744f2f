//! Module models of circle-equivariant K-theory: slices, evaluation modules at roots
//! of unity, the projective line, and fixed-point Euler numbers.

use std::fmt;

use num_traits::One;

use crate::error::{AlgebraError, Result};
use crate::laurent::{CanonicalGenerator, LaurentPoly, Rational};
use crate::localize::{graded_trace, module_trace, GradedModuleMap};
use crate::matrix::PolyMatrix;
use crate::module::{GradedModule, PresentedModule, Support};

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u32) -> LaurentPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut f = &LaurentPoly::x_pow(d as i64) - &LaurentPoly::one();
    for e in (1..d).filter(|e| d % e == 0) {
        f = f.exact_div(&cyclotomic(e)).expect("cyclotomic factors divide X^d - 1");
    }
    f
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// A point of `C*` carried exactly: a rational number, or `e^{2πij/n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gamma {
    Rational(Rational),
    RootOfUnity { n: u32, j: u32 },
}

impl Gamma {
    pub fn root_of_unity(n: u32, j: u32) -> Self {
        Gamma::RootOfUnity { n, j: j % n.max(1) }
    }

    /// Minimal polynomial over the rationals. A root of unity brings its Galois
    /// conjugates along: `e^{2πij/n}` has factor `Φ_{n / gcd(n, j)}`.
    pub fn factor(&self) -> CanonicalGenerator {
        let f = match self {
            Gamma::Rational(g) => &LaurentPoly::x() - &LaurentPoly::constant(g.clone()),
            Gamma::RootOfUnity { n, j } => cyclotomic(n / gcd_u32(*n, *j)),
        };
        f.canonical_associate().expect("nonzero")
    }

    pub fn on_unit_circle(&self) -> bool {
        match self {
            Gamma::Rational(g) => g.is_one() || (-g).is_one(),
            Gamma::RootOfUnity { n, .. } => *n >= 1,
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gamma::Rational(g) => write!(f, "{g}"),
            Gamma::RootOfUnity { n, j } => write!(f, "exp(2πi·{j}/{n})"),
        }
    }
}

/// `dim0` and `dim1` copies of the evaluation module at `gamma` in each degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationComponent {
    pub gamma: Gamma,
    pub dim0: usize,
    pub dim1: usize,
}

impl EvaluationComponent {
    pub fn new(gamma: Gamma, dim0: usize, dim1: usize) -> Self {
        EvaluationComponent { gamma, dim0, dim1 }
    }
}

/// Direct sum of evaluation modules, and the set of points carrying nonzero dimension.
///
/// Presentations are rational, so conjugate roots of unity share one factor; for each
/// conjugacy class the largest listed dimension is used.
pub fn fixed_point_sheaf_module(components: &[EvaluationComponent]) -> Result<(GradedModule, Support)> {
    if let Some(c) = components.iter().find(|c| !c.gamma.on_unit_circle()) {
        return Err(AlgebraError::GammaOffCircle(c.gamma.to_string()));
    }
    let mut classes: Vec<(CanonicalGenerator, [usize; 2])> = Vec::new();
    for c in components {
        let factor = c.gamma.factor();
        match classes.iter_mut().find(|(f, _)| *f == factor) {
            Some((_, dims)) => {
                dims[0] = dims[0].max(c.dim0);
                dims[1] = dims[1].max(c.dim1);
            }
            None => classes.push((factor, [c.dim0, c.dim1])),
        }
    }
    let mut support = Support::empty();
    for (factor, dims) in &classes {
        if dims[0] + dims[1] > 0 {
            support = support.union(&Support::Finite(factor.clone()));
        }
    }
    let degree = |d: usize| {
        let entries: Vec<LaurentPoly> = classes
            .iter()
            .flat_map(|(f, dims)| std::iter::repeat(f.as_poly().clone()).take(dims[d]))
            .collect();
        PresentedModule::diagonal(&entries)
    };
    Ok((GradedModule::new(degree(0), degree(1)), support))
}

/// Evaluation modules at the points of the cyclic group of order `n`;
/// `dims[j]` gives the degree-0 and degree-1 dimensions at `e^{2πij/n}`.
pub fn baum_connes_module(n: u32, dims: &[[usize; 2]]) -> Result<(GradedModule, Support)> {
    if n == 0 {
        return Err(AlgebraError::InvalidInput("group order must be positive".into()));
    }
    if dims.len() != n as usize {
        return Err(AlgebraError::DimensionMismatch(format!("expected {n} dimension pairs, got {}", dims.len())));
    }
    let components: Vec<EvaluationComponent> = dims
        .iter()
        .enumerate()
        .map(|(j, [d0, d1])| EvaluationComponent::new(Gamma::root_of_unity(n, j as u32), *d0, *d1))
        .collect();
    fixed_point_sheaf_module(&components)
}

/// K-theory of a slice with isotropy of order `n`: a module over `Rep(Ω_n)` with the
/// given multiplicity at each character, concentrated in degree 0.
pub fn slice_module(n: u32, multiplicities: &[usize]) -> Result<GradedModule> {
    let dims: Vec<[usize; 2]> = multiplicities.iter().map(|&m| [m, 0]).collect();
    Ok(baum_connes_module(n, &dims)?.0)
}

/// One copy of the regular representation of `Ω_n`: `Laur/(X^n - 1)`.
pub fn regular_slice(n: u32) -> Result<GradedModule> {
    slice_module(n, &vec![1; n as usize])
}

/// `a + b[H]` in the equivariant K-theory ring of the projective line, free on `{1, [H]}`
/// with `[H]^2 = (X + X^-1)[H] - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CP1Element {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
}

impl CP1Element {
    pub fn new(a: LaurentPoly, b: LaurentPoly) -> Self {
        CP1Element { a, b }
    }

    pub fn one() -> Self {
        CP1Element { a: LaurentPoly::one(), b: LaurentPoly::zero() }
    }

    /// The class of the hyperplane bundle.
    pub fn hyperplane() -> Self {
        CP1Element { a: LaurentPoly::zero(), b: LaurentPoly::one() }
    }

    fn weight_sum() -> LaurentPoly {
        LaurentPoly::from_coeffs(-1, &[1, 0, 1])
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bd = &self.b * &other.b;
        let a = &(&self.a * &other.a) - &bd;
        let b = &(&(&self.a * &other.b) + &(&self.b * &other.a)) + &(&bd * &Self::weight_sum());
        CP1Element { a, b }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(CP1Element::one(), |acc, _| acc.mul(self))
    }
}

/// Matrix of multiplication by `xi` on the basis `{1, [H]}`.
pub fn cp1_multiplication_matrix(xi: &CP1Element) -> PolyMatrix {
    let s = CP1Element::weight_sum();
    let corner = &xi.a + &(&xi.b * &s);
    PolyMatrix::from_rows(vec![vec![xi.a.clone(), -&xi.b], vec![xi.b.clone(), corner]], 2).expect("2x2")
}

/// The free rank-2 module `K^0` of the projective line (with `K^1 = 0`).
pub fn cp1_module() -> GradedModule {
    GradedModule::even(PresentedModule::free(2))
}

/// Module trace of multiplication by `[H]^k`.
pub fn cp1_twisted_trace(k: u32) -> Result<LaurentPoly> {
    module_trace(&PresentedModule::free(2), &cp1_multiplication_matrix(&CP1Element::hyperplane().pow(k)))
}

pub fn cp1_twist_map(k: u32) -> GradedModuleMap {
    GradedModuleMap::even(cp1_multiplication_matrix(&CP1Element::hyperplane().pow(k)), PolyMatrix::zeros(0, 0))
}

/// A connected component of the stationary set: its Euler characteristic and the
/// characters `X^e` (with multiplicities) by which the circle acts on the bundle there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedComponent {
    pub euler: i64,
    pub characters: Vec<(i64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FixedPointData {
    pub components: Vec<FixedComponent>,
}

impl FixedPointData {
    pub fn new(components: Vec<FixedComponent>) -> Self {
        FixedPointData { components }
    }

    /// The two poles of the projective line with the bundle `H^k`, weights `X^k` and `X^-k`.
    pub fn cp1(k: i64) -> Self {
        FixedPointData::new(vec![
            FixedComponent { euler: 1, characters: vec![(k, 1)] },
            FixedComponent { euler: 1, characters: vec![(-k, 1)] },
        ])
    }

    /// Trivial action with a trivial bundle of rank `rank` on a space of Euler characteristic `euler`.
    pub fn trivial(euler: i64, rank: u64) -> Self {
        FixedPointData::new(vec![FixedComponent { euler, characters: vec![(0, rank)] }])
    }
}

/// `sum_P χ(P) sum_λ dim(E_λ) X^λ`.
pub fn euler_number(fp: &FixedPointData) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for c in &fp.components {
        for &(e, mult) in &c.characters {
            let coeff = Rational::from_integer((c.euler * mult as i64).into());
            acc += &LaurentPoly::monomial(coeff, e);
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzCrosscheck {
    pub euler_number: LaurentPoly,
    pub graded_trace: LaurentPoly,
    pub holds: bool,
}

/// Compares the fixed-point side with the `K^0 - K^1` graded module trace.
pub fn lefschetz_crosscheck(fp: &FixedPointData, m: &GradedModule, l: &GradedModuleMap) -> Result<LefschetzCrosscheck> {
    let euler = euler_number(fp);
    let trace = graded_trace(m, l)?.value;
    Ok(LefschetzCrosscheck { holds: euler == trace, euler_number: euler, graded_trace: trace })
}
