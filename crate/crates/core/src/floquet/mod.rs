//! Weak-coupling accessory parameters from three-term recurrences and
//! their continued fractions.

mod family;
mod mathieu;
mod solve;

pub use family::{cf_family, CfEquation, CfFamily};
pub use mathieu::{cf_root_f64, mathieu_dictionary, MathieuParameters};
pub use solve::{
    confluent_chain_floquet, floquet_expansion, floquet_expansion_with_depth, q_to_e, solve_unknown,
    AccessoryExpansion, FloquetLink,
};
