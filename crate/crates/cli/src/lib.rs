//! Batch front end: compute an expansion, run a verification suite or list
//! the potential catalog, and render the result as JSON or a text table.

mod bind;
mod render;
mod suites;

use std::collections::BTreeMap;
use std::fmt;

use heunblock::algebra::{json, parse_rational, BigRational, ExecPolicy, FormalSeries, RationalFunction};
use heunblock::correspondence::classical_block;
use heunblock::floquet::{floquet_expansion, CfEquation};
use heunblock::virasoro::{block, BlockKind};
use heunblock::wkb::{invert_bs, HeunEquation};
use heunblock::{HeunError, SeriesReport};

pub use bind::specialize;
pub use render::{catalog_document, series_table};
pub use suites::{run_suite, SUITES};

pub type Series = FormalSeries<RationalFunction>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Compute,
    Verify,
    Catalog,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Object {
    Floquet,
    Bs,
    Block,
    Classical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JobConfig {
    pub command: Command,
    pub object: Option<Object>,
    /// Equation tag for `floquet`/`bs`, optional filter for `catalog`.
    pub equation: Option<String>,
    pub block_kind: Option<String>,
    pub suite: Option<String>,
    pub order: u32,
    pub format: Format,
    /// Symbol → exact rational value, applied to computed series.
    pub bindings: BTreeMap<String, BigRational>,
    /// Significant digits for decimal output; requires every symbol bound.
    pub float_digits: Option<usize>,
    pub policy: ExecPolicy,
}

impl JobConfig {
    pub fn new(command: Command) -> Self {
        JobConfig {
            command,
            object: None,
            equation: None,
            block_kind: None,
            suite: None,
            order: 2,
            format: Format::Json,
            bindings: BTreeMap::new(),
            float_digits: None,
            policy: ExecPolicy::default(),
        }
    }
}

/// Parses a `sym=rational` binding.
pub fn parse_binding(s: &str) -> Result<(String, BigRational), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("binding `{}` is not of the form sym=value", s))?;
    let q = parse_rational(value.trim()).map_err(|e| e.to_string())?;
    Ok((name.trim().to_string(), q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Mismatch = 1,
    Usage = 2,
    Invariant = 3,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invariant(HeunError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {}", m),
            CliError::Invariant(e) => write!(f, "invariant violation: {}", e),
        }
    }
}

impl From<HeunError> for CliError {
    fn from(e: HeunError) -> Self {
        match e {
            HeunError::UnknownTag(_) | HeunError::NoBSRescaling(_) | HeunError::UnsupportedEquation(_) => {
                CliError::Usage(e.to_string())
            }
            e => CliError::Invariant(e),
        }
    }
}

/// Document printed on stdout together with the exit status.
#[derive(Debug)]
pub struct Outcome {
    pub status: ExitStatus,
    pub output: String,
}

pub fn run(config: &JobConfig) -> Outcome {
    match dispatch(config) {
        Ok(o) => o,
        Err(e) => Outcome {
            status: match e {
                CliError::Usage(_) => ExitStatus::Usage,
                CliError::Invariant(_) => ExitStatus::Invariant,
            },
            output: e.to_string(),
        },
    }
}

fn usage(m: impl Into<String>) -> CliError {
    CliError::Usage(m.into())
}

fn dispatch(config: &JobConfig) -> Result<Outcome, CliError> {
    match config.command {
        Command::Compute => {
            let series = compute(config)?;
            let series = specialize(&series, &config.bindings)?;
            Ok(Outcome {
                status: ExitStatus::Ok,
                output: render_series(&series, config)?,
            })
        }
        Command::Verify => {
            if !config.bindings.is_empty() {
                return Err(usage("bindings only apply to compute"));
            }
            let name = config.suite.as_deref().ok_or_else(|| usage("verify needs --suite"))?;
            let reports = run_suite(name, config.order, config.policy)?;
            Ok(report_outcome(&reports, config.format))
        }
        Command::Catalog => {
            let eqs = match &config.equation {
                None => HeunEquation::ALL.to_vec(),
                Some(tag) => vec![HeunEquation::from_tag(tag)?],
            };
            let doc = catalog_document(&eqs);
            let output = match config.format {
                Format::Json => serde_json::to_string_pretty(&doc).expect("catalog serializes"),
                Format::Text => render::catalog_table(&doc),
            };
            Ok(Outcome {
                status: ExitStatus::Ok,
                output,
            })
        }
    }
}

fn compute(config: &JobConfig) -> Result<Series, CliError> {
    let object = config.object.ok_or_else(|| usage("compute needs --object"))?;
    let equation = || config.equation.as_deref().ok_or_else(|| usage("this object needs --equation"));
    let kind = || -> Result<BlockKind, CliError> {
        let tag = config.block_kind.as_deref().ok_or_else(|| usage("this object needs --block-kind"))?;
        BlockKind::from_tag(tag).ok_or_else(|| usage(format!("unknown block kind `{}`", tag)))
    };
    Ok(match object {
        Object::Floquet => {
            let eq = CfEquation::from_tag(equation()?)?;
            floquet_expansion(eq, config.order)?.e
        }
        Object::Bs => {
            let eq = HeunEquation::from_tag(equation()?)?;
            invert_bs(eq, config.order, config.policy)?.accessory_series()
        }
        Object::Block => block(kind()?, config.order, config.policy)?.series,
        Object::Classical => classical_block(kind()?, config.order, config.policy)?,
    })
}

fn render_series(series: &Series, config: &JobConfig) -> Result<String, CliError> {
    match (config.format, config.float_digits) {
        (Format::Json, None) => Ok(json::to_json(series)),
        (Format::Text, None) => series_table(series, None),
        (Format::Json, Some(digits)) => {
            let mut doc = json::to_document(series);
            let values = render::decimal_terms(series, digits)?;
            for (term, v) in doc.terms.iter_mut().zip(values) {
                term.coefficient = v;
            }
            Ok(serde_json::to_string_pretty(&doc).expect("series documents always serialize"))
        }
        (Format::Text, Some(digits)) => series_table(series, Some(digits)),
    }
}

/// Exit 0 when every verdict is exact-equal, 3 when a comparison could not
/// be carried out, 1 otherwise.
pub fn report_outcome(reports: &[SeriesReport], format: Format) -> Outcome {
    let status = if reports.iter().all(SeriesReport::passed) {
        ExitStatus::Ok
    } else if reports.iter().any(|r| r.error.is_some()) {
        ExitStatus::Invariant
    } else {
        ExitStatus::Mismatch
    };
    let output = match format {
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize"),
        Format::Text => render::report_table(reports),
    };
    Outcome { status, output }
}
