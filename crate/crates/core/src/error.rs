use heunblock_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeunError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("Gram matrix at level {level} is singular")]
    GramSingular { level: u32 },
    #[error("order-{order} equation is not linear in its unknown")]
    NonlinearOrderEquation { order: u32 },
    #[error("resonant denominator: {0}")]
    ResonantDenominator(String),
    #[error("equation {0} has no Floquet continued fraction")]
    UnsupportedEquation(String),
    #[error("equation {0} has no Bohr-Sommerfeld rescaling")]
    NoBSRescaling(String),
    #[error("even WKB term S_{index} has nonzero residue")]
    EvenResidueNonzero { index: u32 },
    #[error("WKB recurrence residual does not vanish at n = {index}")]
    RecurrenceResidual { index: i32 },
    #[error("coefficient of order {order} is not real after the classical substitution")]
    OddImaginaryPower { order: i64 },
    #[error("unknown tag `{0}`")]
    UnknownTag(String),
}

pub type Result<T> = std::result::Result<T, HeunError>;
