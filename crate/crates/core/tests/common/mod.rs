//! Oracles and published-value checks shared by the topic suites and the
//! acceptance runner.
#![allow(dead_code)]

pub mod blocks;
pub mod classical;
pub mod correspondence;
pub mod finiteness;
pub mod floquet;
pub mod mathieu;
pub mod virasoro;
pub mod wkb;
pub mod wkb_identities;
