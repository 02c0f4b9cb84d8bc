//! Conformal blocks of the Virasoro algebra, accessory parameters of Heun
//! type equations and the exact comparison between them.

pub mod correspondence;
pub mod error;
pub mod report;
pub mod symbols;
pub mod floquet;
pub mod virasoro;
pub mod wkb;

pub use error::{HeunError, Result};
pub use heunblock_algebra as algebra;
pub use report::{SeriesReport, Verdict};
