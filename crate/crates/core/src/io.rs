//! JSON documents read and written by the command line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// `{ "elements": [labels...], "covers": [[a, b], ...] }`. Element order fixes
/// the index assignment; covers may be any generating relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

impl PosetDocument {
    pub fn parse(text: &str) -> Result<PosetDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_poset(&self) -> Result<Poset> {
        Poset::from_covers(&self.elements, &self.covers)
    }

    /// The document of `p` with its Hasse diagram as covers.
    pub fn of(p: &Poset) -> PosetDocument {
        PosetDocument {
            elements: p.labels().to_vec(),
            covers: p
                .covers()
                .into_iter()
                .map(|(i, j)| (p.label(i).to_owned(), p.label(j).to_owned()))
                .collect(),
        }
    }
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    PosetDocument::parse(text)?.to_poset()
}
