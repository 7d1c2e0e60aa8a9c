//! Decompositions and their JSON form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dfa::{validate, Dfa, RawDfa, Verdict};
use crate::error::{Error, Result};
use crate::product::{equivalent, product, Mode};

/// Which rule produced a component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tag {
    /// Family automaton of the separator-set state `rho` of the parent.
    Family { rho: usize },
    /// Reduced automaton with chain position `k` of the parent removed.
    Reduced { k: usize },
    /// Principal automaton of a minimal generator.
    Principal { word: String },
    /// A prime automaton, not split further.
    Leaf,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Family { rho } => write!(f, "family:rho={rho}"),
            Tag::Reduced { k } => write!(f, "reduced:k={k}"),
            Tag::Principal { word } => write!(f, "principal:w={word}"),
            Tag::Leaf => f.write_str("leaf"),
        }
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tag> {
        let bad = || Error::Parse(format!("bad component tag {s:?}"));
        if s == "leaf" {
            return Ok(Tag::Leaf);
        }
        if let Some(w) = s.strip_prefix("principal:w=") {
            return Ok(Tag::Principal { word: w.to_string() });
        }
        if let Some(r) = s.strip_prefix("family:rho=") {
            return r.parse().map(|rho| Tag::Family { rho }).map_err(|_| bad());
        }
        if let Some(k) = s.strip_prefix("reduced:k=") {
            return k.parse().map(|k| Tag::Reduced { k }).map_err(|_| bad());
        }
        Err(bad())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub tag: Tag,
    pub automaton: Dfa,
}

/// A source automaton together with components whose intersection (or
/// union) recognizes the same language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub mode: Mode,
    pub source: Dfa,
    pub components: Vec<Component>,
    /// Set once the combined product has been checked equivalent to the source.
    pub verified: bool,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// A prime source standing for itself.
    pub fn is_leaf(&self) -> bool {
        matches!(self.components.as_slice(), [c] if c.tag == Tag::Leaf && c.automaton == self.source)
    }

    pub fn automata(&self) -> Vec<Dfa> {
        self.components.iter().map(|c| c.automaton.clone()).collect()
    }

    /// Product of all components under [`Decomposition::mode`].
    pub fn combined(&self) -> Result<Dfa> {
        product(self.mode, &self.automata())
    }

    /// Checks that components are strictly smaller (unless this is a leaf)
    /// and that their product is equivalent to the source.
    pub fn check(&self) -> Result<Verdict> {
        if !self.is_leaf() {
            let n = self.source.state_count();
            if let Some(c) = self.components.iter().find(|c| c.automaton.state_count() >= n) {
                return Err(Error::InvalidParameter(format!(
                    "component {} has {} states, source has {n}",
                    c.tag,
                    c.automaton.state_count()
                )));
            }
        }
        equivalent(&self.combined()?, &self.source)
    }

    /// Runs [`Decomposition::check`] and records success, failing on mismatch.
    pub fn verify(mut self) -> Result<Decomposition> {
        match self.check()? {
            Verdict::Holds => {
                self.verified = true;
                Ok(self)
            }
            Verdict::Fails(c) => Err(Error::VerificationFailed(c.to_string())),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DecompositionJson::from(self)).expect("decomposition serializes")
    }

    pub fn from_json(text: &str) -> Result<Decomposition> {
        let raw: DecompositionJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Decomposition {
            mode: raw.mode,
            source: validate(&raw.source)?,
            components: raw
                .components
                .iter()
                .map(|c| {
                    Ok(Component {
                        tag: c.tag.parse()?,
                        automaton: validate(&c.automaton)?,
                    })
                })
                .collect::<Result<_>>()?,
            verified: raw.verified,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    tag: String,
    automaton: RawDfa,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    mode: Mode,
    source: RawDfa,
    components: Vec<ComponentJson>,
    verified: bool,
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        DecompositionJson {
            mode: d.mode,
            source: d.source.to_raw(),
            components: d
                .components
                .iter()
                .map(|c| ComponentJson {
                    tag: c.tag.to_string(),
                    automaton: c.automaton.to_raw(),
                })
                .collect(),
            verified: d.verified,
        }
    }
}
