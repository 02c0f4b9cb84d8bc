use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different parameter spaces")]
    ParameterSpaceMismatch,
    #[error("invalid symbol name `{0}`")]
    InvalidSymbol(String),
    #[error("symbol `{0}` declared twice")]
    DuplicateSymbol(String),
    #[error("symbol `{0}` is not declared in the target parameter space")]
    UnknownSymbol(String),
    #[error("series variables or grids do not match")]
    GridMismatch,
    #[error("leading coefficient of the divisor series is zero")]
    LeadingCoefficientZero,
    #[error("binomial power requires a series of the form 1 + O(x)")]
    LeadingCoefficientNotOne,
    #[error("leading coefficient is not a perfect square")]
    NonSquareLeadingCoefficient,
    #[error("limit {symbol} -> infinity diverges: numerator degree exceeds denominator degree by {excess}")]
    DivergentLimit { symbol: String, excess: u32 },
    #[error("classical limit {symbol} -> 0 has a surviving pole of order {order}")]
    PoleInClassicalLimit { symbol: String, order: u32 },
    #[error("element is not invertible in its ring")]
    NotInvertible,
    #[error("exponential requires a series without constant term")]
    NonZeroConstantTerm,
    #[error("series carrying a log term cannot be multiplied")]
    LogTermInProduct,
    #[error("expression is not a polynomial")]
    NotPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
}
