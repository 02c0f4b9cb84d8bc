use std::collections::BTreeMap;
use std::sync::Arc;

use heunblock::algebra::{AlgebraError, BigRational, ParameterSpace, RationalFunction};
use heunblock::HeunError;

use crate::{CliError, Series};

fn series_space(s: &Series) -> Option<Arc<ParameterSpace>> {
    s.terms()
        .find_map(|(_, c)| c.space().cloned())
        .or_else(|| s.offset().space().cloned())
        .or_else(|| s.log_coefficient().and_then(|l| l.space().cloned()))
}

/// Evaluates the bound symbols exactly; the remaining symbols keep their
/// order. A coefficient whose denominator vanishes at the bound point is a
/// resonance of the expansion, not a usage error.
pub fn specialize(series: &Series, bindings: &BTreeMap<String, BigRational>) -> Result<Series, CliError> {
    if bindings.is_empty() {
        return Ok(series.clone());
    }
    let space = series_space(series);
    let names: Vec<String> = space.as_ref().map(|s| s.names().to_vec()).unwrap_or_default();
    for name in bindings.keys() {
        if !names.contains(name) {
            return Err(CliError::Usage(format!(
                "`{}` is not a symbol of this series (symbols: {})",
                name,
                names.join(", ")
            )));
        }
    }
    let target = ParameterSpace::new(names.iter().filter(|n| !bindings.contains_key(*n)).cloned())
        .map_err(HeunError::from)?;
    let subs: Vec<(&str, RationalFunction)> = bindings
        .iter()
        .map(|(n, v)| (n.as_str(), RationalFunction::from_rational(v)))
        .collect();
    let point = bindings
        .iter()
        .map(|(n, v)| format!("{}={}", n, v))
        .collect::<Vec<_>>()
        .join(", ");
    let eval = |r: &RationalFunction, at: &str| -> Result<RationalFunction, CliError> {
        r.substitute(&target, &subs).map_err(|e| match e {
            AlgebraError::DivisionByZero => CliError::Invariant(HeunError::ResonantDenominator(format!(
                "denominator of the {} vanishes at {}",
                at, point
            ))),
            e => CliError::Invariant(e.into()),
        })
    };
    let mut failure = None;
    let out = series.map(|c| {
        eval(c, "coefficient").unwrap_or_else(|e| {
            failure.get_or_insert(e);
            RationalFunction::zero()
        })
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let offset = eval(series.offset(), "offset")?;
    let log = series.log_coefficient().map(|l| eval(l, "log coefficient")).transpose()?;
    Ok(out.with_offset(offset).with_log_coefficient(log))
}
