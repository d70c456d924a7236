use crate::categorize::{categorize_nodes, RuleTable};
use crate::error::Result;
use crate::extract::extract_ast;
use crate::grammar::GrammarBundle;
use crate::language::LanguageId;
use crate::schema::{compute_metadata, UniversalFileRecord, SCHEMA_VERSION};
use crate::xmap::create_cross_language_map;

/// Runs parse, flatten, categorize and map for one source text.
#[derive(Debug, Clone, Copy)]
pub struct RecordBuilder<'a> {
    pub grammars: &'a GrammarBundle,
    pub rules: &'a RuleTable,
}

impl<'a> RecordBuilder<'a> {
    pub fn new(grammars: &'a GrammarBundle, rules: &'a RuleTable) -> Self {
        RecordBuilder { grammars, rules }
    }

    pub fn build(
        &self,
        language: LanguageId,
        path: impl Into<String>,
        source: impl Into<String>,
    ) -> Result<UniversalFileRecord> {
        let outcome = self.grammars.parse(language, source)?;
        let nodes = extract_ast(&outcome);
        let metadata = compute_metadata(&outcome.source, &nodes);
        let node_categories = categorize_nodes(&nodes, language, self.rules);
        let cross_language_map = create_cross_language_map(&nodes, &node_categories, language);
        Ok(UniversalFileRecord {
            language,
            path: path.into(),
            metadata,
            nodes,
            node_categories,
            cross_language_map,
            schema_version: SCHEMA_VERSION.to_string(),
        })
    }
}
