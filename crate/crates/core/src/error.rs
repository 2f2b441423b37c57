use thiserror::Error;

/// Errors raised while ingesting records, building networks, or scoring papers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SvaError {
    #[error("line {line}: malformed record: {message}")]
    MalformedLine { line: usize, message: String },

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("unknown paper id `{0}`")]
    UnknownPaper(String),

    #[error("empty slice: no citing papers published in {start}..={end}")]
    EmptySlice { start: i32, end: i32 },

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("modularity undefined on an edgeless network")]
    ModularityUndefined,

    #[error("partition covers {got} nodes but the network has {expected}")]
    PartitionMismatch { expected: usize, got: usize },

    #[error("baseline modularity zero")]
    BaselineModularityZero,

    #[error("baseline linkage zero")]
    BaselineLinkageZero,

    #[error("degenerate pseudopaper: {0}")]
    DegeneratePseudopaper(String),

    #[error("pseudopaper id `{0}` collides with an existing record")]
    PseudoIdCollision(String),

    #[error("invalid configuration: {field}: {message}")]
    InvalidConfig {
        field: &'static str,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl SvaError {
    pub(crate) fn config(field: &'static str, message: impl Into<String>) -> Self {
        SvaError::InvalidConfig {
            field,
            message: message.into(),
        }
    }

    /// Whether the error stems from user-supplied parameters rather than the data.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            SvaError::InvalidConfig { .. }
                | SvaError::DegeneratePseudopaper(_)
                | SvaError::PseudoIdCollision(_)
        )
    }
}

impl From<std::io::Error> for SvaError {
    fn from(err: std::io::Error) -> Self {
        SvaError::Io(err.to_string())
    }
}

pub type Result<T, E = SvaError> = std::result::Result<T, E>;
