use thiserror::Error;

/// CLI-level failures, mapped onto process exit codes:
/// 2 config, 3 certification, 4 numerical, 1 everything else.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("{0}")]
    Core(#[from] robmax_core::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Certification(_) => 3,
            CliError::Core(
                robmax_core::Error::Numerical { .. } | robmax_core::Error::NonConvergence { .. },
            ) => 4,
            CliError::Core(_) => 2,
            CliError::Io(_) | CliError::Json(_) => 1,
        }
    }

    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }
}
