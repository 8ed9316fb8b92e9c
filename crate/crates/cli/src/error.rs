use thiserror::Error;

/// Anything that makes a job invalid input (exit code 2).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    /// A schema or value error at a key path such as `job.lambda[1]`.
    #[error("invalid value at `{path}`: {message}")]
    Invalid { path: String, message: String },
}

impl CliError {
    pub fn invalid(path: impl Into<String>, message: impl ToString) -> Self {
        CliError::Invalid { path: path.into(), message: message.to_string() }
    }

    /// The offending key path, when the error points at one.
    pub fn path(&self) -> Option<&str> {
        match self {
            CliError::Invalid { path, .. } => Some(path),
            _ => None,
        }
    }
}
