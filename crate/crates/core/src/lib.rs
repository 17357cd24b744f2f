//! Exact computer algebra for finitely generated modules over the Laurent ring
//! `Q[X, X^-1]`: classification, supports, localization, module traces, and the
//! dynamical and equivariant examples built on them.

pub mod dynamics;
pub mod equivariant;
pub mod error;
pub mod formats;
pub mod laurent;
pub mod localize;
pub mod matrix;
pub mod module;
pub mod parse;
pub mod random;
pub mod ratfunc;
pub mod ring;
pub mod roots;
pub mod series;
pub mod snf;

pub use dynamics::{
    char_function, charpoly, ck_spectrum, commutativity_obstruction, lefschetz_sign_check, minimal_polynomial, periodic_points,
    periodic_table, tspec_of_crossed_product, zeta_identity_check, KTheoryAction, ToralAutomorphism,
};
pub use equivariant::{cp1_twisted_trace, cyclotomic, euler_number, fixed_point_sheaf_module, FixedPointData, Gamma};
pub use error::{AlgebraError, ParseError, Result};
pub use laurent::{canonical_associate, gcd, lcm, squarefree_part, CanonicalGenerator, LaurentPoly, Rational};
pub use localize::{
    graded_trace, localize, localized_trace, module_trace, GradedModuleMap, LocalizedModule, Parity, TraceConvention,
};
pub use matrix::{IntMatrix, Matrix, PolyMatrix};
pub use module::{annihilator, classify, direct_sum, solve_linear, support, GradedModule, InvariantFactors, PresentedModule, Support};
pub use parse::parse_poly;
pub use ratfunc::RationalFunction;
pub use series::TruncatedSeries;
pub use snf::{smith_diagonal, smith_normal_form, SmithForm};
