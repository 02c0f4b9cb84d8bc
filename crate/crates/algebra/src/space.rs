//! Ordered symbol inventories shared by every rational function of one computation.

use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;

/// An ordered list of symbol names.
///
/// The order is fixed at construction and defines the monomial ordering
/// (graded lexicographic, earlier symbols more significant).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParameterSpace {
    names: Vec<String>,
}

impl ParameterSpace {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, AlgebraError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !is_identifier(n) {
                return Err(AlgebraError::InvalidSymbol(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(AlgebraError::DuplicateSymbol(n.clone()));
            }
        }
        Ok(Arc::new(ParameterSpace { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }
}

impl fmt::Debug for ParameterSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParameterSpace{:?}", self.names)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
