use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Clap(#[from] clap::Error),

    #[error(transparent)]
    Domain(css_entropy::Error),

    #[error("{0}")]
    Failed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<css_entropy::Error> for CliError {
    fn from(e: css_entropy::Error) -> Self {
        match e {
            css_entropy::Error::Io(io) => CliError::Io(io),
            other => CliError::Domain(other),
        }
    }
}

impl CliError {
    /// 1 for domain failures, 2 for usage errors, 3 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Clap(e) if !e.use_stderr() => 0,
            CliError::Clap(_) => 2,
            CliError::Domain(_) | CliError::Failed(_) => 1,
            CliError::Io(_) => 3,
        }
    }
}
