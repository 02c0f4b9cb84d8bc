use std::fmt;

use serde::{Serialize, Serializer};

/// Weakly decreasing list of positive parts; labels the descendant
/// `L_{-λ1} L_{-λ2} ⋯ |Δ⟩`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into descending order and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// The partition with its largest part removed.
    pub fn rest(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Prepends `m`, which must not be smaller than the current first part.
    pub(crate) fn prepend(&self, m: u32) -> Partition {
        debug_assert!(self.first().is_none_or(|f| m >= f));
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(m);
        parts.extend_from_slice(&self.parts);
        Partition { parts }
    }

    /// All partitions of `n`, in increasing lexicographic order of parts:
    /// `(1,1) < (2)` at level two.
    pub fn of_weight(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn fill(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rem.min(max)).rev() {
        cur.push(p);
        fill(rem - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}
