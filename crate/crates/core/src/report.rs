use serde::Serialize;

use heunblock_algebra::RationalFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ExactEqual,
    Mismatch,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub order: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of an exact coefficientwise comparison of two pipelines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub lhs: String,
    pub rhs: String,
    pub orders: Vec<String>,
    pub verdict: Verdict,
    #[serde(rename = "firstMismatch", skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SeriesReport {
    /// Compares labelled pairs in order and records the first difference.
    pub fn compare(
        lhs: &str,
        rhs: &str,
        entries: Vec<(String, RationalFunction, RationalFunction)>,
    ) -> Self {
        let orders = entries.iter().map(|e| e.0.clone()).collect();
        let first_mismatch = entries.into_iter().find(|(_, a, b)| a != b).map(|(o, a, b)| Mismatch {
            order: o,
            lhs: a.to_string(),
            rhs: b.to_string(),
        });
        SeriesReport {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            orders,
            verdict: if first_mismatch.is_some() {
                Verdict::Mismatch
            } else {
                Verdict::ExactEqual
            },
            first_mismatch,
            error: None,
        }
    }

    /// A comparison that could not be carried out, e.g. a divergent limit.
    pub fn failed(lhs: &str, rhs: &str, err: impl std::fmt::Display) -> Self {
        SeriesReport {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            orders: Vec::new(),
            verdict: Verdict::Error,
            first_mismatch: None,
            error: Some(err.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::ExactEqual
    }
}
