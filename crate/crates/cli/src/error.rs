use thiserror::Error;

/// Failures that stop a run before any check executes. All map to exit
/// code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("check `{check}` needs a `{section}` section")]
    MissingSection { check: String, section: &'static str },
    #[error("check `{0}` requested twice")]
    DuplicateCheck(String),
}

impl CliError {
    pub fn invalid(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self::Invalid { path: path.into(), message: message.into() }
    }
}
