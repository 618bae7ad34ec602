//! The bundled example corpus.

use std::path::Path;

use foliation_core::{Poly, Rational, VectorField};
use serde::Deserialize;

use crate::parse::{parse_field, parse_polynomial, ParseError};

pub const BUNDLED: &str = include_str!("../corpus/examples.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct Entry {
    pub name: String,
    pub vars: Vec<String>,
    pub f: String,
    /// Zero-cofactor family for hypersurfaces in three or more variables.
    #[serde(default)]
    pub fields: Vec<String>,
    pub weakly_tame: Option<bool>,
    pub milnor: Option<usize>,
    /// `[l, m, d]`
    pub weights: Option<[u64; 3]>,
    /// `Theorem1`, `Theorem3`, `NDim` or `NotInJacobianIdeal`.
    pub free_basis: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Corpus {
    pub entry: Vec<Entry>,
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("cannot read corpus: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed corpus: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("entry '{name}': {source}")]
    Expression { name: String, source: ParseError },
}

impl Corpus {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled corpus is well formed")
    }

    pub fn parse(text: &str) -> Result<Self, CorpusError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, CorpusError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entry.iter().find(|e| e.name == name)
    }
}

impl Entry {
    pub fn polynomial(&self) -> Result<Poly, CorpusError> {
        parse_polynomial(&self.f, &self.vars)
            .map_err(|source| CorpusError::Expression { name: self.name.clone(), source })
    }

    pub fn family(&self) -> Result<Vec<VectorField<Rational>>, CorpusError> {
        self.fields
            .iter()
            .map(|t| {
                parse_field(t, &self.vars)
                    .map_err(|source| CorpusError::Expression { name: self.name.clone(), source })
            })
            .collect()
    }

    pub fn is_planar(&self) -> bool {
        self.vars.len() == 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_parses() {
        let c = Corpus::bundled();
        assert!(c.entry.len() >= 7);
        for e in &c.entry {
            e.polynomial().unwrap();
            e.family().unwrap();
        }
        assert_eq!(c.get("cusp").unwrap().weights, Some([3, 2, 6]));
    }
}
