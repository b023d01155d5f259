//! Front end for the `census` binary: graph specifications, JSON reports,
//! decompositions, exhaustive oracles and the verification suite.

pub mod decompose;
pub mod oracle;
pub mod report;
pub mod spec;
pub mod suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cyclespace::Error),
}

impl CliError {
    /// Usage and input errors exit with 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
