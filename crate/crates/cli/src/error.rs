use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("{0}")]
    Shape(String),
    #[error("{0}")]
    Hypothesis(orthoscope_core::Error),
    #[error("witness failed verification: {0}")]
    Witness(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            offset,
            message: message.into(),
        }
    }

    /// 2 for parse errors, 3 for shape or hypothesis errors, 4 for a failed
    /// witness.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Shape(_) | CliError::Hypothesis(_) | CliError::Io(_) => 3,
            CliError::Witness(_) => 4,
        }
    }
}

impl From<orthoscope_core::Error> for CliError {
    fn from(e: orthoscope_core::Error) -> Self {
        match e {
            orthoscope_core::Error::Inconsistent(msg) => CliError::Witness(msg),
            other => CliError::Hypothesis(other),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
