use thiserror::Error;

/// A parse failure with a 1-based position inside the offending text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(column: usize, message: impl Into<String>) -> Self {
        ParseError { line: 1, column, message: message.into() }
    }

    pub fn at_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }

    /// Shifts the column by `offset` characters, for text embedded in a longer line.
    pub fn offset(mut self, offset: usize) -> Self {
        self.column += offset;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("the zero polynomial has no canonical associate")]
    ZeroPolynomial,
    #[error("evaluation point 0 is not in the punctured plane")]
    ZeroEvaluationPoint,
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series constant term must be 1 for the logarithm")]
    ConstantTermNotOne,
    #[error("series constant term is zero, not invertible")]
    NotInvertibleSeries,
    #[error("negative exponents cannot be expanded as a power series")]
    NotAPowerSeries,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the matrix does not descend to an endomorphism of the module")]
    NotAnEndomorphism,
    #[error("the action is singular (not invertible over the rationals)")]
    SingularAction,
    #[error("matrix entries must be 0 or 1")]
    NotZeroOne,
    #[error("the support is all of C*; a finite spectrum is required")]
    FullSupport,
    #[error("the matrix is not symmetric")]
    NotSymmetric,
    #[error("det(T^{0} - I) = 0; periodic points are not isolated")]
    DegeneratePower(u32),
    #[error("matrix is not unimodular (det must be +1 or -1)")]
    NotUnimodular,
    #[error("evaluation point {0} is not on the unit circle")]
    GammaOffCircle(String),
    #[error("invalid invariant factors: {0}")]
    InvalidInvariantFactors(String),
    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
