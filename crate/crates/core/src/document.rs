//! JSON evidence files.
//!
//! ```json
//! {
//!   "frame": ["a", "b", "c"],
//!   "bodies": {
//!     "A": [ { "set": ["a"], "mass": "1/4" }, { "set": ["b", "c"], "mass": "3/4" } ],
//!     "B": [ { "set": ["a", "b"], "mass": "1/2" }, { "set": ["c"], "mass": "1/2" } ]
//!   }
//! }
//! ```
//!
//! Masses are strings: `"p/q"`, an integer, or an exact decimal such as
//! `"0.25"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::evidence::BodyOfEvidence;
use crate::frame::Frame;
use crate::rational::parse_rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FocalEntry {
    pub set: Vec<String>,
    pub mass: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvidenceDocument {
    pub frame: Vec<String>,
    pub bodies: BTreeMap<String, Vec<FocalEntry>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("frame: {0}")]
    Frame(Box<Error>),
    #[error("{}body `{name}`: {source}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Body { name: String, line: Option<usize>, source: Box<Error> },
    #[error("no body named `{0}`")]
    UnknownBody(String),
}

/// Frame and validated bodies from a document.
#[derive(Clone, Debug)]
pub struct Evidence {
    pub frame: Frame,
    pub bodies: BTreeMap<String, BodyOfEvidence>,
}

impl Evidence {
    pub fn body(&self, name: &str) -> Result<&BodyOfEvidence, DocumentError> {
        self.bodies.get(name).ok_or_else(|| DocumentError::UnknownBody(name.to_string()))
    }

    /// Looks up several bodies, in the order given.
    pub fn select<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<BodyOfEvidence>, DocumentError> {
        names.iter().map(|n| self.body(n.as_ref()).cloned()).collect()
    }
}

/// 1-based line on which the key `"name"` first appears.
fn line_of_key(text: &str, name: &str) -> Option<usize> {
    let quoted = serde_json::to_string(name).ok()?;
    let mut from = 0;
    while let Some(pos) = text[from..].find(&quoted) {
        let start = from + pos;
        let after = text[start + quoted.len()..].trim_start();
        if after.starts_with(':') {
            return Some(text[..start].matches('\n').count() + 1);
        }
        from = start + quoted.len();
    }
    None
}

impl EvidenceDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| {
            let full = e.to_string();
            let suffix = format!(" at line {} column {}", e.line(), e.column());
            let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
            DocumentError::Syntax { line: e.line(), column: e.column(), message }
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// Validates the document. `source` is the original text, used only to
    /// point errors at a line.
    pub fn resolve(&self, source: Option<&str>) -> Result<Evidence, DocumentError> {
        let frame = Frame::new(&self.frame).map_err(|e| DocumentError::Frame(Box::new(e)))?;
        let mut bodies = BTreeMap::new();
        for (name, entries) in &self.bodies {
            let body = entries
                .iter()
                .map(|e| Ok((frame.subset(&e.set)?, parse_rational(&e.mass)?)))
                .collect::<Result<Vec<_>, Error>>()
                .and_then(|assignments| BodyOfEvidence::new(&frame, assignments))
                .map_err(|e| DocumentError::Body {
                    name: name.clone(),
                    line: source.and_then(|t| line_of_key(t, name)),
                    source: Box::new(e),
                })?;
            bodies.insert(name.clone(), body);
        }
        Ok(Evidence { frame, bodies })
    }

    pub fn parse(text: &str) -> Result<Evidence, DocumentError> {
        Self::from_json(text)?.resolve(Some(text))
    }

    /// Builds a document from validated bodies sharing one frame.
    pub fn from_bodies<'a, I>(frame: &Frame, bodies: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, &'a BodyOfEvidence)>,
    {
        let bodies = bodies
            .into_iter()
            .map(|(name, body)| {
                let entries = body
                    .canonical()
                    .into_iter()
                    .map(|(s, m)| FocalEntry {
                        set: frame.members(s).into_iter().map(String::from).collect(),
                        mass: m.to_string(),
                    })
                    .collect();
                (name.to_string(), entries)
            })
            .collect();
        EvidenceDocument { frame: frame.labels().to_vec(), bodies }
    }

    /// Canonical form: set members in frame order, entries ordered by subset
    /// mask, fractions reduced, zero-mass entries dropped.
    pub fn canonical(&self) -> Result<Self, DocumentError> {
        let evidence = self.resolve(None)?;
        Ok(Self::from_bodies(
            &evidence.frame,
            evidence.bodies.iter().map(|(n, b)| (n.as_str(), b)),
        ))
    }
}
