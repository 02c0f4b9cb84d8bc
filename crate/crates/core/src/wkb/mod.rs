//! WKB recursion, Bohr–Sommerfeld periods and their inversion at strong
//! coupling.

mod catalog;
mod period;
mod stack;

pub use catalog::{potential_catalog, HeunEquation, PotentialSpec, Rescaling};
pub use period::{
    back_substitute, bs_period, hbar_order_for, invert_bs, inversion_space, BsInversion, BsPeriod,
};
pub use stack::{check_even_residues, expand_in_hbar, residues, wkb_stack, HbarSeries, WkbStack};
