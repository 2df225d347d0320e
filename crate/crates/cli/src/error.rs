use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const INPUT: u8 = 2;
    pub const VIOLATION: u8 = 3;
    pub const RESOURCE: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("weight vector is degenerate: {0}")]
    DegenerateWeights(String),
    #[error("check failed: {0}")]
    Violation(String),
    #[error(transparent)]
    Core(#[from] tropcrit::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use tropcrit::Error as E;
        match self {
            CliError::Io { .. } | CliError::Json(_) | CliError::Parse(_) => exit::INPUT,
            CliError::DegenerateWeights(_) => exit::INPUT,
            CliError::Violation(_) => exit::VIOLATION,
            CliError::Core(e) => match e {
                E::GroundTooLarge { .. } | E::FlagEnumerationTooLarge { .. } => exit::RESOURCE,
                E::InternalAssertionFailed(_) | E::AllTrialsDegenerate(_) => exit::VIOLATION,
                _ => exit::INPUT,
            },
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
