//! Layer 3: the declarations / statements / expressions category index.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extract::AstNode;
use crate::language::LanguageId;
use crate::schema::source_hash;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Declarations,
    Statements,
    Expressions,
}

impl Category {
    pub const ALL: [Category; 3] = [Category::Declarations, Category::Statements, Category::Expressions];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Declarations => "declarations",
            Category::Statements => "statements",
            Category::Expressions => "expressions",
        }
    }

    /// The fixed subcategory set. Rule tables may not introduce others.
    pub fn subcategories(self) -> &'static [&'static str] {
        match self {
            Category::Declarations => &["functions", "classes", "variables", "imports"],
            Category::Statements => &[
                "loops",
                "conditionals",
                "returns",
                "assignments",
                "exception_handling",
            ],
            Category::Expressions => &["calls", "identifiers", "literals", "binary_operations"],
        }
    }

    fn parse(s: &str) -> Option<Category> {
        Category::ALL.into_iter().find(|c| c.as_str() == s)
    }

    fn intern(self, sub: &str) -> Option<&'static str> {
        self.subcategories().iter().copied().find(|s| *s == sub)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryRule {
    pub language: LanguageId,
    pub node_type: String,
    pub category: Category,
    pub subcategory: &'static str,
    /// The type name doubles as a keyword token.
    pub keyword: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Target {
    category: Category,
    subcategory: &'static str,
    keyword: bool,
}

/// Immutable (language, node type) → (category, subcategory) lookup.
#[derive(Debug, Clone)]
pub struct RuleTable {
    rules: HashMap<LanguageId, HashMap<String, Target>>,
    checksum: String,
}

const BUILTIN_RULES: [&str; 10] = [
    include_str!("../rules/c.tsv"),
    include_str!("../rules/cpp.tsv"),
    include_str!("../rules/csharp.tsv"),
    include_str!("../rules/go.tsv"),
    include_str!("../rules/java.tsv"),
    include_str!("../rules/javascript.tsv"),
    include_str!("../rules/python.tsv"),
    include_str!("../rules/ruby.tsv"),
    include_str!("../rules/scala.tsv"),
    include_str!("../rules/typescript.tsv"),
];

impl RuleTable {
    /// The tables shipped in `rules/`, one file per language.
    pub fn builtin() -> RuleTable {
        RuleTable::parse(&BUILTIN_RULES.concat()).expect("bundled rule tables are well-formed")
    }

    /// Loads a single rule file, or every `*.tsv` in a directory in name order.
    pub fn load(path: &Path) -> Result<RuleTable> {
        if path.is_dir() {
            let mut files: Vec<_> = fs::read_dir(path)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|e| e == "tsv"))
                .collect();
            files.sort();
            let mut text = String::new();
            for f in files {
                text.push_str(&fs::read_to_string(f)?);
            }
            RuleTable::parse(&text)
        } else {
            RuleTable::parse(&fs::read_to_string(path)?)
        }
    }

    /// `language<TAB>node_type<TAB>category<TAB>subcategory[<TAB>keyword]` per line.
    pub fn parse(text: &str) -> Result<RuleTable> {
        let mut rules: HashMap<LanguageId, HashMap<String, Target>> = HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::RuleTable {
                line: idx + 1,
                message,
            };
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            let (language, node_type, category, subcategory, keyword) = match fields[..] {
                [l, n, c, s] => (l, n, c, s, false),
                [l, n, c, s, "keyword"] => (l, n, c, s, true),
                [_, _, _, _, flag] => return Err(err(format!("unknown flag `{flag}`"))),
                _ => return Err(err(format!("expected 4 or 5 fields, found {}", fields.len()))),
            };
            let language: LanguageId = language.parse().map_err(|e: Error| err(e.to_string()))?;
            let category =
                Category::parse(category).ok_or_else(|| err(format!("unknown category `{category}`")))?;
            let subcategory = category.intern(subcategory).ok_or_else(|| {
                err(format!("unknown subcategory `{subcategory}` for {}", category.as_str()))
            })?;
            if rules
                .entry(language)
                .or_default()
                .insert(
                    node_type.to_string(),
                    Target {
                        category,
                        subcategory,
                        keyword,
                    },
                )
                .is_some()
            {
                return Err(err(format!("duplicate rule for ({language}, {node_type})")));
            }
        }
        Ok(RuleTable {
            rules,
            checksum: source_hash(text),
        })
    }

    /// SHA-256 of the rule text as loaded.
    pub fn checksum(&self) -> &str {
        &self.checksum
    }

    pub fn len(&self) -> usize {
        self.rules.values().map(HashMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rules(&self) -> Vec<CategoryRule> {
        let mut out: Vec<CategoryRule> = self
            .rules
            .iter()
            .flat_map(|(language, table)| {
                table.iter().map(|(node_type, t)| CategoryRule {
                    language: *language,
                    node_type: node_type.clone(),
                    category: t.category,
                    subcategory: t.subcategory,
                    keyword: t.keyword,
                })
            })
            .collect();
        out.sort_by(|a, b| (a.language, &a.node_type).cmp(&(b.language, &b.node_type)));
        out
    }

    /// Exact lookup; `None` means uncategorized.
    pub fn universal_category_of(
        &self,
        language: LanguageId,
        node_type: &str,
    ) -> Option<(Category, &'static str)> {
        self.rules
            .get(&language)?
            .get(node_type)
            .map(|t| (t.category, t.subcategory))
    }

    /// Lookup for a concrete node. A childless node spelled exactly like a
    /// `keyword` type is the keyword token and is not matched.
    pub fn category_of_node(&self, language: LanguageId, node: &AstNode) -> Option<(Category, &'static str)> {
        let t = self.rules.get(&language)?.get(&node.kind)?;
        if t.keyword && node.children.is_empty() && node.text == node.kind {
            return None;
        }
        Some((t.category, t.subcategory))
    }
}

/// Subcategory → ascending node ids, for each of the three categories.
/// Every fixed subcategory is present, empty or not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeCategories {
    pub declarations: BTreeMap<String, Vec<usize>>,
    pub statements: BTreeMap<String, Vec<usize>>,
    pub expressions: BTreeMap<String, Vec<usize>>,
}

impl Default for NodeCategories {
    fn default() -> Self {
        let empty = |c: Category| {
            c.subcategories()
                .iter()
                .map(|s| (s.to_string(), Vec::new()))
                .collect()
        };
        NodeCategories {
            declarations: empty(Category::Declarations),
            statements: empty(Category::Statements),
            expressions: empty(Category::Expressions),
        }
    }
}

impl NodeCategories {
    pub fn category(&self, category: Category) -> &BTreeMap<String, Vec<usize>> {
        match category {
            Category::Declarations => &self.declarations,
            Category::Statements => &self.statements,
            Category::Expressions => &self.expressions,
        }
    }

    fn category_mut(&mut self, category: Category) -> &mut BTreeMap<String, Vec<usize>> {
        match category {
            Category::Declarations => &mut self.declarations,
            Category::Statements => &mut self.statements,
            Category::Expressions => &mut self.expressions,
        }
    }

    pub fn get(&self, category: Category, subcategory: &str) -> Option<&Vec<usize>> {
        self.category(category).get(subcategory)
    }

    /// `(category, subcategory, ids)` over every list.
    pub fn iter(&self) -> impl Iterator<Item = (Category, &str, &[usize])> {
        Category::ALL.into_iter().flat_map(move |c| {
            self.category(c)
                .iter()
                .map(move |(s, ids)| (c, s.as_str(), ids.as_slice()))
        })
    }

    /// Number of distinct node ids indexed anywhere.
    pub fn indexed_count(&self) -> usize {
        let mut ids: Vec<usize> = self.iter().flat_map(|(_, _, ids)| ids.iter().copied()).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }
}

/// Single pass over the node array.
pub fn categorize_nodes(nodes: &[AstNode], language: LanguageId, rules: &RuleTable) -> NodeCategories {
    let mut out = NodeCategories::default();
    for node in nodes {
        if let Some((category, subcategory)) = rules.category_of_node(language, node) {
            out.category_mut(category)
                .entry(subcategory.to_string())
                .or_default()
                .push(node.id);
        }
    }
    for category in Category::ALL {
        for ids in out.category_mut(category).values_mut() {
            ids.sort_unstable();
            ids.dedup();
        }
    }
    out
}

/// Resolves one index list through `fetch`, touching only the listed ids.
pub fn select<'a, F>(
    categories: &NodeCategories,
    category: Category,
    subcategory: &str,
    mut fetch: F,
) -> Vec<&'a AstNode>
where
    F: FnMut(usize) -> Option<&'a AstNode>,
{
    categories
        .get(category, subcategory)
        .map(|ids| ids.iter().filter_map(|&id| fetch(id)).collect())
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_table_loads() {
        let t = RuleTable::builtin();
        assert!(t.len() > 300);
        assert_eq!(t.checksum().len(), 64);
        for lang in LanguageId::ALL {
            assert!(t.rules().iter().any(|r| r.language == lang), "{lang}");
        }
    }

    #[test]
    fn lookups() {
        let t = RuleTable::builtin();
        assert_eq!(
            t.universal_category_of(LanguageId::Python, "function_definition"),
            Some((Category::Declarations, "functions"))
        );
        assert_eq!(
            t.universal_category_of(LanguageId::Java, "for_statement"),
            Some((Category::Statements, "loops"))
        );
        assert_eq!(t.universal_category_of(LanguageId::Go, "comment"), None);
        assert_eq!(t.universal_category_of(LanguageId::Go, "function_definition"), None);
    }

    #[test]
    fn parse_rejects_bad_rows() {
        assert!(RuleTable::parse("Python\tcall\texpressions\tcalls\n").is_ok());
        assert!(RuleTable::parse("Python\tcall\texpressions\n").is_err());
        assert!(RuleTable::parse("Python\tcall\texpressions\tsmells\n").is_err());
        assert!(RuleTable::parse("Python\tcall\tfeelings\tcalls\n").is_err());
        assert!(RuleTable::parse("Python\tlambda\tdeclarations\tfunctions\tkeyword\n").is_ok());
        assert!(RuleTable::parse("Python\tlambda\tdeclarations\tfunctions\tloud\n").is_err());
        assert!(RuleTable::parse("Cobol\tcall\texpressions\tcalls\n").is_err());
        assert!(
            RuleTable::parse("Python\tcall\texpressions\tcalls\nPython\tcall\tstatements\tloops\n")
                .is_err()
        );
    }

    #[test]
    fn empty_nodes_give_empty_lists() {
        let c = categorize_nodes(&[], LanguageId::Python, &RuleTable::builtin());
        assert_eq!(c, NodeCategories::default());
        assert_eq!(c.declarations.len(), 4);
        assert_eq!(c.statements.len(), 5);
        assert_eq!(c.expressions.len(), 4);
        assert!(c.iter().all(|(_, _, ids)| ids.is_empty()));
    }

    #[test]
    fn serializes_in_layer_order() {
        let json = serde_json::to_string(&NodeCategories::default()).unwrap();
        let d = json.find("declarations").unwrap();
        let s = json.find("statements").unwrap();
        let e = json.find("expressions").unwrap();
        assert!(d < s && s < e);
    }
}
