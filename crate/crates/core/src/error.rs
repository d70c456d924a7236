use std::path::PathBuf;

use crate::language::LanguageId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported language: {0}")]
    UnsupportedLanguage(String),

    #[error("cannot read corpus root {path}: {source}")]
    CorpusRoot {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("manifest {path}, line {line}: {message}")]
    Manifest {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("grammar backend failure for {language}: {message}")]
    Grammar {
        language: LanguageId,
        message: String,
    },

    #[error("grammar bundle: {0}")]
    Bundle(String),

    #[error("rule table, line {line}: {message}")]
    RuleTable { line: usize, message: String },

    #[error("no records for language {0}")]
    EmptyDistribution(LanguageId),

    #[error("cosine similarity is undefined for a zero vector")]
    ZeroVector,

    #[error("vector dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
