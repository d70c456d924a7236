//! Parsing, flattening, categorization and cross-language mapping of source
//! files into a common four-layer record, plus corpus analytics.

pub mod analytics;
pub mod categorize;
pub mod error;
pub mod extract;
pub mod grammar;
pub mod ingest;
pub mod language;
pub mod record;
pub mod schema;
pub mod xmap;

pub use categorize::{Category, NodeCategories, RuleTable};
pub use error::{Error, Result};
pub use extract::{AstNode, Point};
pub use grammar::{GrammarBundle, BUNDLE_VERSION};
pub use language::LanguageId;
pub use record::RecordBuilder;
pub use schema::{validate_record, FileMetadata, UniversalFileRecord, Violation, SCHEMA_VERSION};
pub use xmap::{CrossLanguageEntry, CrossLanguageMap, UniversalType};
