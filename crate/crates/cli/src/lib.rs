//! Command implementations behind the `uast` binary.

pub mod commands;
pub mod pipeline;
pub mod service;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] uast_core::Error),
    #[error(transparent)]
    Store(#[from] uast_store::StoreError),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    /// Process exit code for a failed command.
    pub fn exit_code(&self) -> i32 {
        1
    }
}
