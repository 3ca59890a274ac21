use std::path::PathBuf;

use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}:{line}: {message}")]
    Malformed {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{context}: {source}")]
    Input {
        context: String,
        source: qconv_core::Error,
    },

    #[error(transparent)]
    Pipeline(#[from] qconv_core::Error),

    #[error("cannot write report: {0}")]
    Output(String),
}

impl CliError {
    /// 2 for anything wrong with the request or its inputs, 3 when a
    /// pipeline rejects valid inputs.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Pipeline(_) | Self::Output(_) => 3,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Usage(_) => "usage",
            Self::Malformed { .. } => "malformed-input",
            Self::Io { .. } => "io",
            Self::Input { .. } => "invalid-input",
            Self::Pipeline(_) => "pipeline",
            Self::Output(_) => "output",
        }
    }

    pub fn to_object(&self) -> ErrorObject {
        ErrorObject {
            error: ErrorBody {
                kind: self.kind(),
                message: self.to_string(),
                exit_code: self.exit_code(),
            },
        }
    }
}

/// Machine-readable error written to stdout in place of a report.
#[derive(Debug, Serialize)]
pub struct ErrorObject {
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: u8,
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
