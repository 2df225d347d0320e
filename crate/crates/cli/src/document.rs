//! Input documents.

use schemars::JsonSchema;
use serde::{Deserialize, Serialize};
use tropcrit::Matroid;

use crate::error::{CliError, Result};

/// How the matroid is given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MatroidSpec {
    /// Bases as lists of elements of `{0, ..., n}`.
    Bases { n: usize, bases: Vec<Vec<usize>> },
    /// `U_{r,n}` on `{0, ..., n-1}`.
    Uniform { r: usize, n: usize },
    /// Edge `i` of the list is element `i`.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
}

/// The special element, by index or by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

/// A matroid, optional element labels and the special element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct MatroidDocument {
    #[serde(flatten)]
    pub matroid: MatroidSpec,
    /// Display names of the elements, in element order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Defaults to element `0`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special_element: Option<ElementRef>,
}

impl MatroidDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        let m = match &self.matroid {
            MatroidSpec::Bases { n, bases } => Matroid::from_bases(
                *n,
                bases.iter().map(|b| b.iter().collect::<tropcrit::Subset>()),
            )?,
            MatroidSpec::Uniform { r, n } => Matroid::uniform(*r, *n)?,
            MatroidSpec::Graphic { vertices, edges } => Matroid::graphic(*vertices, edges)?,
        };
        if let Some(labels) = &self.labels {
            if labels.len() != m.ground_size() {
                return Err(CliError::Parse(format!(
                    "{} labels for {} elements",
                    labels.len(),
                    m.ground_size()
                )));
            }
            let mut sorted = labels.clone();
            sorted.sort();
            if sorted.windows(2).any(|p| p[0] == p[1]) {
                return Err(CliError::Parse("labels must be distinct".into()));
            }
        }
        Ok(m)
    }

    /// The special element as an index into the ground set.
    pub fn special_index(&self, ground_size: usize) -> Result<usize> {
        let e = match &self.special_element {
            None => 0,
            Some(ElementRef::Index(i)) => *i,
            Some(ElementRef::Label(l)) => self
                .labels
                .as_ref()
                .and_then(|ls| ls.iter().position(|x| x == l))
                .ok_or_else(|| CliError::Parse(format!("unknown element label {l:?}")))?,
        };
        if e >= ground_size {
            return Err(CliError::Parse(format!(
                "special element {e} outside a ground set of size {ground_size}"
            )));
        }
        Ok(e)
    }

    /// Display name of element `e`.
    pub fn label(&self, e: usize) -> String {
        self.labels
            .as_ref()
            .and_then(|ls| ls.get(e).cloned())
            .unwrap_or_else(|| e.to_string())
    }
}
