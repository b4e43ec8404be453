use thiserror::Error;

/// Pipeline errors, split by exit code: input problems exit with 1,
/// violations of theorem-backed checks exit with 2.
#[derive(Error, Debug)]
pub enum CliError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("block {block}: {source}")]
    Degenerate {
        block: usize,
        source: polymirror_core::Error,
    },

    #[error("block {block} is not reflexive (rerun with --lenient to skip such blocks)")]
    NotReflexive { block: usize },

    #[error("internal theorem violation in block {block}: {detail}")]
    TheoremViolation { block: usize, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::TheoremViolation { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
