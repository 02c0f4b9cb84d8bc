use heunblock::algebra::{json, RationalFunction};
use heunblock::wkb::{potential_catalog, HeunEquation};
use heunblock::SeriesReport;
use serde::Serialize;

use crate::{CliError, Series};

fn decimal(r: &RationalFunction, digits: usize) -> Result<String, CliError> {
    let v = r.to_f64().ok_or_else(|| {
        CliError::Usage(format!(
            "decimal output needs every symbol bound; `{}` still depends on {}",
            r,
            r.symbols().join(", ")
        ))
    })?;
    Ok(format!("{:.*e}", digits.saturating_sub(1), v))
}

/// Term coefficients as decimals with `digits` significant digits.
pub fn decimal_terms(series: &Series, digits: usize) -> Result<Vec<String>, CliError> {
    series.terms().map(|(_, c)| decimal(c, digits)).collect()
}

/// Two-column table `power | coefficient` under a short header.
pub fn series_table(series: &Series, digits: Option<usize>) -> Result<String, CliError> {
    let doc = json::to_document(series);
    let mut rows: Vec<(String, String)> = Vec::new();
    if let Some(l) = &doc.log_coefficient {
        rows.push((format!("log {}", doc.variable), l.clone()));
    }
    let values = match digits {
        Some(d) => decimal_terms(series, d)?,
        None => doc.terms.iter().map(|t| t.coefficient.clone()).collect(),
    };
    for (t, v) in doc.terms.iter().zip(values) {
        rows.push((format!("{}^{}", doc.variable, t.power), v));
    }
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max("power".len());
    let mut out = format!(
        "variable {}  grid {}  offset {}  known through {}^{}\n",
        doc.variable, doc.grid, doc.offset, doc.variable, doc.truncation_order
    );
    out.push_str(&format!("{:<width$}  coefficient\n", "power"));
    for (p, c) in rows {
        out.push_str(&format!("{:<width$}  {}\n", p, c));
    }
    Ok(out)
}

pub fn report_table(reports: &[SeriesReport]) -> String {
    let width = reports.iter().map(|r| r.lhs.len() + r.rhs.len() + 4).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let pair = format!("{} vs {}", r.lhs, r.rhs);
        let verdict = serde_json::to_value(r.verdict).expect("verdict serializes");
        out.push_str(&format!(
            "{:<width$}  {:<11}  {}\n",
            pair,
            verdict.as_str().unwrap_or_default(),
            r.orders.join(" ")
        ));
        if let Some(m) = &r.first_mismatch {
            out.push_str(&format!("    first mismatch at {}: {} != {}\n", m.order, m.lhs, m.rhs));
        }
        if let Some(e) = &r.error {
            out.push_str(&format!("    error: {}\n", e));
        }
    }
    out
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RescalingRow {
    pub coordinate: String,
    pub t_power_of_hbar: i64,
    pub potential: String,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CatalogRow {
    pub equation: String,
    pub parameters: Vec<String>,
    pub potential: String,
    pub rescaling: Option<RescalingRow>,
}

pub fn catalog_document(equations: &[HeunEquation]) -> Vec<CatalogRow> {
    equations
        .iter()
        .map(|&eq| {
            let spec = potential_catalog(eq);
            CatalogRow {
                equation: eq.tag().to_string(),
                parameters: spec
                    .space
                    .names()
                    .iter()
                    .filter(|n| !["z", "t", "E"].contains(&n.as_str()))
                    .cloned()
                    .collect(),
                potential: spec.potential.to_string(),
                rescaling: spec.rescaling.as_ref().map(|r| RescalingRow {
                    coordinate: r.coordinate.to_string(),
                    t_power_of_hbar: r.t_power_of_hbar,
                    potential: r.potential.to_string(),
                }),
            }
        })
        .collect()
}

pub fn catalog_table(rows: &[CatalogRow]) -> String {
    let width = rows.iter().map(|r| r.equation.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!("{:<width$}  V = {}\n", r.equation, r.potential));
        if let Some(s) = &r.rescaling {
            out.push_str(&format!(
                "{:<width$}  U({}) = {}   [t = hbar^{}]\n",
                "", s.coordinate, s.potential, s.t_power_of_hbar
            ));
        }
    }
    out
}
