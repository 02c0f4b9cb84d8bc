//! Stable JSON documents for series over rational functions.

use std::sync::Arc;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::parse::parse_rational;
use crate::ratfunc::RationalFunction;
use crate::series::{FormalSeries, Grid, SeriesVar};
use crate::space::ParameterSpace;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermDocument {
    pub power: String,
    pub coefficient: String,
}

/// Field order is fixed by declaration order, which keeps output byte-stable.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SeriesDocument {
    pub variable: String,
    pub grid: String,
    pub offset: String,
    pub log_coefficient: Option<String>,
    pub terms: Vec<TermDocument>,
    pub truncation_order: String,
    /// Ordered symbol inventory the coefficient strings refer to.
    pub symbols: Vec<String>,
}

fn rational_string(q: Rational64) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn series_space(s: &FormalSeries<RationalFunction>) -> Option<Arc<ParameterSpace>> {
    s.terms()
        .find_map(|(_, c)| c.space().cloned())
        .or_else(|| s.offset().space().cloned())
        .or_else(|| s.log_coefficient().and_then(|l| l.space().cloned()))
}

pub fn to_document(s: &FormalSeries<RationalFunction>) -> SeriesDocument {
    let symbols = series_space(s)
        .map(|sp| sp.names().to_vec())
        .unwrap_or_default();
    SeriesDocument {
        variable: s.variable().tag().to_string(),
        grid: rational_string(s.grid().step()),
        offset: s.offset().to_string(),
        log_coefficient: s.log_coefficient().map(|l| l.to_string()),
        terms: s
            .terms()
            .map(|(k, c)| TermDocument {
                power: rational_string(s.step_power(k)),
                coefficient: c.to_string(),
            })
            .collect(),
        truncation_order: rational_string(s.truncation_order()),
        symbols,
    }
}

pub fn to_json(s: &FormalSeries<RationalFunction>) -> String {
    serde_json::to_string_pretty(&to_document(s)).expect("series documents always serialize")
}

fn steps(text: &str, grid: Grid) -> Result<i64, AlgebraError> {
    let q = parse_rational(text)? * num_rational::BigRational::from_integer(grid.steps_per_unit().into());
    if !q.is_integer() {
        return Err(AlgebraError::GridMismatch);
    }
    i64::try_from(q.to_integer()).map_err(|_| AlgebraError::Parse("exponent out of range".into()))
}

pub fn from_document(doc: &SeriesDocument) -> Result<FormalSeries<RationalFunction>, AlgebraError> {
    let variable = SeriesVar::from_tag(&doc.variable)
        .ok_or_else(|| AlgebraError::Parse(format!("unknown variable `{}`", doc.variable)))?;
    let grid = match doc.grid.as_str() {
        "1" => Grid::Integer,
        "1/2" => Grid::Half,
        g => return Err(AlgebraError::Parse(format!("unknown grid `{}`", g))),
    };
    let space = ParameterSpace::new(doc.symbols.iter().cloned())?;
    let order = steps(&doc.truncation_order, grid)?;
    let mut entries = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        entries.push((steps(&t.power, grid)?, RationalFunction::parse(&t.coefficient, &space)?));
    }
    let start = entries.iter().map(|e| e.0).min().unwrap_or(order + 1);
    let mut coeffs = vec![RationalFunction::zero(); (order - start + 1).max(0) as usize];
    for (k, c) in entries {
        if k > order {
            return Err(AlgebraError::Parse("term beyond truncation order".into()));
        }
        coeffs[(k - start) as usize] = c;
    }
    let offset = RationalFunction::parse(&doc.offset, &space)?;
    let log = match &doc.log_coefficient {
        None => None,
        Some(l) => Some(RationalFunction::parse(l, &space)?),
    };
    Ok(FormalSeries::from_steps(variable, grid, start, coeffs, order)
        .with_offset(offset)
        .with_log_coefficient(log))
}

pub fn from_json(text: &str) -> Result<FormalSeries<RationalFunction>, AlgebraError> {
    let doc: SeriesDocument =
        serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    from_document(&doc)
}
