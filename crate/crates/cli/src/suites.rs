use heunblock::algebra::ExecPolicy;
use heunblock::correspondence::{
    classical_chain_check, conjecture_b_first_kind, conjecture_b_regular, conjecture_b_typed, conjecture_b_typeg,
    typed_routes_agree, ClassicalLink,
};
use heunblock::floquet::{confluent_chain_floquet, FloquetLink};
use heunblock::virasoro::{confluence_chain_check, ChainLink, FirstKind};
use heunblock::{Result, SeriesReport};

use crate::CliError;

/// Suite names accepted by `verify --suite`.
pub const SUITES: [&str; 13] = [
    "conjectureB-regular",
    "conjectureB-Nf3",
    "conjectureB-Nf2",
    "conjectureB-Nf1",
    "conjectureB-Nf0",
    "conjectureB-firstKind",
    "conjectureB-typeD",
    "conjectureB-typeG",
    "chain-blocks",
    "chain-floquet",
    "chain-classical",
    "typeD-routes",
    "all",
];

fn first_kind(order: u32, policy: ExecPolicy, kinds: &[FirstKind]) -> Result<Vec<SeriesReport>> {
    kinds.iter().map(|&nf| conjecture_b_first_kind(nf, order, policy)).collect()
}

fn single(name: &str, order: u32, policy: ExecPolicy) -> Result<Vec<SeriesReport>> {
    Ok(match name {
        "conjectureB-regular" => vec![conjecture_b_regular(order, policy)?],
        "conjectureB-Nf3" => first_kind(order, policy, &[FirstKind::Nf3])?,
        "conjectureB-Nf2" => first_kind(order, policy, &[FirstKind::Nf2])?,
        "conjectureB-Nf1" => first_kind(order, policy, &[FirstKind::Nf1])?,
        "conjectureB-Nf0" => first_kind(order, policy, &[FirstKind::Nf0])?,
        "conjectureB-firstKind" => first_kind(order, policy, &FirstKind::ALL)?,
        "conjectureB-typeD" => vec![conjecture_b_typed(order, policy)?],
        "conjectureB-typeG" => vec![conjecture_b_typeg(order, policy)?],
        "chain-blocks" => ChainLink::ALL
            .iter()
            .map(|&l| confluence_chain_check(l, order, policy))
            .collect::<Result<_>>()?,
        "chain-floquet" => FloquetLink::ALL
            .iter()
            .map(|&l| confluent_chain_floquet(l, order, policy))
            .collect::<Result<_>>()?,
        "chain-classical" => ClassicalLink::ALL
            .iter()
            .map(|&l| classical_chain_check(l, order, policy))
            .collect::<Result<_>>()?,
        "typeD-routes" => vec![typed_routes_agree(order, policy)?],
        _ => unreachable!("suite names are checked by run_suite"),
    })
}

/// Runs a named suite at the given order; `all` runs every other suite.
pub fn run_suite(name: &str, order: u32, policy: ExecPolicy) -> std::result::Result<Vec<SeriesReport>, CliError> {
    let name = SUITES
        .iter()
        .find(|s| s.eq_ignore_ascii_case(name))
        .ok_or_else(|| CliError::Usage(format!("unknown suite `{}` (known: {})", name, SUITES.join(", "))))?;
    if *name == "all" {
        let mut out = Vec::new();
        for s in SUITES.iter().filter(|s| !["all", "conjectureB-firstKind"].contains(s)) {
            out.extend(single(s, order, policy)?);
        }
        return Ok(out);
    }
    single(name, order, policy).map_err(CliError::from)
}
