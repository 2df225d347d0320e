//! Result documents. Element references use the indices of the input
//! document; rationals are strings `"p"` or `"p/q"` in lowest terms.

use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use crate::document::MatroidDocument;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(rename_all = "lowercase")]
pub enum CommandName {
    Beta,
    Critical,
    Verify,
    Taut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fast,
    Oracle,
}

/// Output of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct ResultDocument {
    pub command: CommandName,
    pub input: MatroidDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special_element: Option<usize>,
    /// Elements other than the special one, in order; `w`, `x` and `y` list
    /// their coordinates in this order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<u64>,
    /// Coefficients of the characteristic polynomial, constant term first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic_polynomial: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointDocument>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub taut: Option<TautDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Human-readable descriptions of failed checks.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl ResultDocument {
    pub fn new(command: CommandName, input: MatroidDocument) -> Self {
        ResultDocument {
            command,
            input,
            special_element: None,
            coordinates: None,
            beta: None,
            characteristic_polynomial: None,
            method: None,
            w: None,
            count: None,
            points: None,
            verification: None,
            taut: None,
            seed: None,
            discrepancies: Vec::new(),
            timing_us: None,
        }
    }
}

/// A value of `x` or `y` on one block, as a signed sum of weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct PathDocument {
    pub block: Vec<usize>,
    /// Alternating sum `w[e1] - w[e2] + ...`.
    pub edges: Vec<usize>,
    pub expression: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct PointDocument {
    pub basis: Vec<usize>,
    /// Strata of the flag of the matroid, in flag order.
    pub strata: Vec<Vec<usize>>,
    /// Strata of the flag of the dual contraction, in flag order.
    pub dual_strata: Vec<Vec<usize>>,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub x_paths: Vec<PathDocument>,
    pub y_paths: Vec<PathDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct SampleDocument {
    pub w: Vec<String>,
    pub count: usize,
    pub discarded: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct VerificationDocument {
    pub fast_count: Option<usize>,
    /// The oracle on `(1, 10, 100, ...)` first, then each random sample.
    pub oracle_counts: Vec<usize>,
    pub samples: Vec<SampleDocument>,
    pub resamples: usize,
    pub counts_agree: bool,
    pub point_sets_agree: bool,
    pub all_agree: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    SpecialOutsideBasis,
    Cancellation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct ChamberDocument {
    pub permutation: Vec<usize>,
    pub basis: Vec<usize>,
    pub branch: Branch,
    pub product: String,
    /// `product / t[special]`, absent when the division is not exact.
    pub quotient: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct TautDocument {
    pub chambers: usize,
    pub passed: bool,
    pub certificates: Vec<ChamberDocument>,
}

pub fn result_schema() -> schemars::Schema {
    schemars::schema_for!(ResultDocument)
}

pub fn input_schema() -> schemars::Schema {
    schemars::schema_for!(MatroidDocument)
}
