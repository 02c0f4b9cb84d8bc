//! Exact algebra for symbolic series work: integer polynomials with a modular
//! gcd, canonical rational functions over named parameters, truncated formal
//! series, Laurent polynomials and termwise limits.

pub mod error;
pub mod exec;
pub mod json;
pub mod laurent;
pub mod modgcd;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod ring;
pub mod series;
pub mod space;

pub use error::AlgebraError;
pub use exec::ExecPolicy;
pub use laurent::Laurent;
pub use parse::parse_rational;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use ring::Ring;
pub use series::{expand_at_zero, limit_b_zero, FormalSeries, Grid, SeriesVar};
pub use space::ParameterSpace;

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Rational64};
