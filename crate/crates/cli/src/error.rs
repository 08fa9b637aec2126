use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {field}: {message}")]
    Validation { field: String, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn validation(field: &str, message: &str) -> Self {
        Self::Validation { field: field.to_string(), message: message.to_string() }
    }

    /// Process exit code: 2 for unreadable or malformed input, 3 for
    /// well-formed input that fails validation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Parse(_) | Self::Io { .. } => 2,
            Self::Validation { .. } => 3,
        }
    }
}
