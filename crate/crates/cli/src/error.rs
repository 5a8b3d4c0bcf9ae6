use thiserror::Error;

/// Everything that stops a command before a validator gets to run; all of
/// these exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("schema error at {0}")]
    Schema(String),
    #[error("closure error at {0}")]
    Closure(String),
    #[error(transparent)]
    Core(#[from] cycad::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Prefixes the location with `outer`.
    pub fn within(self, outer: &str) -> CliError {
        match self {
            CliError::Schema(m) => CliError::Schema(format!("{outer}: {m}")),
            CliError::Closure(m) => CliError::Closure(format!("{outer}: {m}")),
            other => other,
        }
    }
}
