use std::path::PathBuf;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("grammar: {0}")]
    Grammar(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] morrey_orlicz::Error),

    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// Exit status: 2 for rejected input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        use morrey_orlicz::Error as E;
        match self {
            CliError::Grammar(_) | CliError::Config(_) => 2,
            CliError::Core(E::Constraint(_) | E::DimensionMismatch(..) | E::Unsupported(_)) => 2,
            _ => 1,
        }
    }
}
