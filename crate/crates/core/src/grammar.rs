//! The grammar bundle: all ten tree-sitter grammars linked into one place
//! behind a uniform parse interface.

use std::path::Path;

use tree_sitter::{Language, Parser, Tree};

use crate::error::{Error, Result};
use crate::language::LanguageId;

/// Version string of the linked grammar set. Recorded in run reports and
/// shard metadata.
pub const BUNDLE_VERSION: &str = "tree-sitter 0.25.10; c 0.24.2; cpp 0.23.4; c-sharp 0.23.5; \
go 0.25.0; java 0.23.5; javascript 0.25.0; python 0.25.0; ruby 0.23.1; scala 0.26.2; \
typescript 0.23.2";

/// Immutable after construction and shareable across threads; parsers are
/// created per file.
#[derive(Clone)]
pub struct GrammarBundle {
    languages: Vec<(LanguageId, Language)>,
}

impl std::fmt::Debug for GrammarBundle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GrammarBundle")
            .field("version", &BUNDLE_VERSION)
            .finish()
    }
}

fn grammar_for(lang: LanguageId) -> Language {
    match lang {
        LanguageId::C => tree_sitter_c::LANGUAGE.into(),
        LanguageId::Cpp => tree_sitter_cpp::LANGUAGE.into(),
        LanguageId::CSharp => tree_sitter_c_sharp::LANGUAGE.into(),
        LanguageId::Go => tree_sitter_go::LANGUAGE.into(),
        LanguageId::Java => tree_sitter_java::LANGUAGE.into(),
        LanguageId::JavaScript => tree_sitter_javascript::LANGUAGE.into(),
        LanguageId::Python => tree_sitter_python::LANGUAGE.into(),
        LanguageId::Ruby => tree_sitter_ruby::LANGUAGE.into(),
        LanguageId::Scala => tree_sitter_scala::LANGUAGE.into(),
        LanguageId::TypeScript => tree_sitter_typescript::LANGUAGE_TYPESCRIPT.into(),
    }
}

impl GrammarBundle {
    /// Loads the statically linked grammars and checks each one against the
    /// runtime's ABI range.
    pub fn builtin() -> Result<GrammarBundle> {
        let mut languages = Vec::with_capacity(LanguageId::ALL.len());
        for lang in LanguageId::ALL {
            let grammar = grammar_for(lang);
            Parser::new()
                .set_language(&grammar)
                .map_err(|e| Error::Grammar {
                    language: lang,
                    message: e.to_string(),
                })?;
            languages.push((lang, grammar));
        }
        Ok(GrammarBundle { languages })
    }

    /// Loads the builtin bundle after checking a descriptor file whose
    /// first non-comment line must equal [`BUNDLE_VERSION`].
    pub fn from_descriptor(path: &Path) -> Result<GrammarBundle> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Bundle(format!("cannot read {}: {e}", path.display())))?;
        let declared = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        if declared != BUNDLE_VERSION {
            return Err(Error::Bundle(format!(
                "{} declares `{declared}`, linked grammars are `{BUNDLE_VERSION}`",
                path.display()
            )));
        }
        GrammarBundle::builtin()
    }

    pub fn version(&self) -> &'static str {
        BUNDLE_VERSION
    }

    pub fn language(&self, lang: LanguageId) -> &Language {
        &self
            .languages
            .iter()
            .find(|(l, _)| *l == lang)
            .expect("bundle holds every language")
            .1
    }

    /// Parses `source`. Syntax errors never fail: they surface as `ERROR`
    /// nodes in the returned tree.
    pub fn parse(&self, lang: LanguageId, source: impl Into<String>) -> Result<ParseOutcome> {
        let source = source.into();
        let mut parser = Parser::new();
        parser
            .set_language(self.language(lang))
            .map_err(|e| Error::Grammar {
                language: lang,
                message: e.to_string(),
            })?;
        let tree = parser.parse(&source, None).ok_or_else(|| Error::Grammar {
            language: lang,
            message: "parser returned no tree".into(),
        })?;
        let error_node_count = count_error_nodes(&tree);
        Ok(ParseOutcome {
            language: lang,
            source,
            tree,
            error_node_count,
        })
    }
}

#[derive(Debug, Clone)]
pub struct ParseOutcome {
    pub language: LanguageId,
    pub source: String,
    pub tree: Tree,
    pub error_node_count: usize,
}

fn count_error_nodes(tree: &Tree) -> usize {
    let root = tree.root_node();
    if !root.has_error() {
        return 0;
    }
    let mut count = 0;
    let mut cursor = root.walk();
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        if node.is_error() {
            count += 1;
        }
        if node.has_error() {
            stack.extend(node.children(&mut cursor));
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle() -> GrammarBundle {
        GrammarBundle::builtin().unwrap()
    }

    #[test]
    fn every_grammar_loads_and_parses() {
        let b = bundle();
        for lang in LanguageId::ALL {
            let out = b.parse(lang, "").unwrap();
            assert_eq!(out.language, lang);
            assert_eq!(out.error_node_count, 0, "{lang}");
        }
    }

    #[test]
    fn minimal_python_has_no_errors() {
        assert_eq!(bundle().parse(LanguageId::Python, "x = 1\n").unwrap().error_node_count, 0);
    }

    #[test]
    fn malformed_python_recovers_with_error_nodes() {
        let out = bundle().parse(LanguageId::Python, "def f(:\n    return ))\n").unwrap();
        assert!(out.error_node_count >= 1);
        assert!(out.tree.root_node().has_error());
    }

    #[test]
    fn descriptor_must_match() {
        let dir = tempfile::tempdir().unwrap();
        let good = dir.path().join("good.txt");
        std::fs::write(&good, format!("# grammars\n{BUNDLE_VERSION}\n")).unwrap();
        assert!(GrammarBundle::from_descriptor(&good).is_ok());
        let bad = dir.path().join("bad.txt");
        std::fs::write(&bad, "tree-sitter 0.1\n").unwrap();
        assert!(GrammarBundle::from_descriptor(&bad).is_err());
        assert!(GrammarBundle::from_descriptor(&dir.path().join("missing")).is_err());
    }
}
