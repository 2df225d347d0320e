use thiserror::Error;

use crate::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matroid has no bases")]
    EmptyBases,
    #[error("bases have different cardinalities ({0} and {1})")]
    UnequalCardinality(usize, usize),
    #[error("basis exchange fails for {a} and {b} at element {element}")]
    ExchangeAxiomViolated { a: Subset, b: Subset, element: usize },
    #[error("subset {subset} is not contained in a ground set of size {ground_size}")]
    SubsetOutOfRange { subset: Subset, ground_size: usize },
    #[error("invalid rank {rank} for a ground set of size {ground_size}")]
    InvalidRank { rank: usize, ground_size: usize },
    #[error("vertex {vertex} out of range for a graph with {num_vertices} vertices")]
    InvalidVertexIndex { vertex: usize, num_vertices: usize },
    #[error("element {element} not in a ground set of size {ground_size}")]
    InvalidElement { element: usize, ground_size: usize },
    #[error("ground set of size {size} exceeds the limit of {limit}")]
    GroundTooLarge { size: usize, limit: usize },
    #[error("{0} is not a basis")]
    NotABasis(Subset),
    #[error("special element {0} is a loop or a coloop")]
    LoopOrColoopSpecialElement(usize),
    #[error("blocks do not form a set partition of {0}")]
    InvalidPartition(Subset),
    #[error("partition grounds do not match: left {left}, right {right}")]
    GroundMismatch { left: Subset, right: Subset },
    #[error("intersection graph is not a tree")]
    NotATree,
    #[error("intersection graph has a cycle")]
    NotAForest,
    #[error("intersection graph has no cycle")]
    NotCyclic,
    #[error("weight vector is not rapidly increasing")]
    NotRapidlyIncreasing,
    #[error("vector has index range {found:?}, expected {expected:?}")]
    IndexMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("complete flag enumeration on {size} elements exceeds the limit of {limit}")]
    FlagEnumerationTooLarge { size: usize, limit: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("all {0} trials produced a degenerate weight vector")]
    AllTrialsDegenerate(usize),
    #[error("internal assertion failed: {0}")]
    InternalAssertionFailed(String),
}
