//! Quasiclassical limits of the blocks and their comparison with
//! accessory parameter expansions.

mod checks;
mod classical;

pub use checks::{
    classical_chain_check, conjecture_b_first_kind, conjecture_b_regular, conjecture_b_typed, conjecture_b_typeg, euler_coefficients, floquet_partner,
    in_exponents, typed_routes_agree, typed_via_classical_limit, ClassicalLink, TYPEG_MAX_ORDER,
};
pub use classical::{
    classical_block, classical_from_block, classical_names, classical_space, even_to_b2, ClassicalScaling,
};
