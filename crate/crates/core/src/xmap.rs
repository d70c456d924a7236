//! Layer 4: projection of function and class declarations onto universal
//! roles, with extracted names and text snippets.

use serde::{Deserialize, Serialize};

use crate::categorize::{Category, NodeCategories};
use crate::extract::AstNode;
use crate::language::LanguageId;

/// Maximum snippet length, in characters.
pub const SNIPPET_CHARS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UniversalType {
    Function,
    Class,
}

impl UniversalType {
    pub fn as_str(self) -> &'static str {
        match self {
            UniversalType::Function => "function",
            UniversalType::Class => "class",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossLanguageEntry {
    pub node_id: usize,
    pub universal_type: UniversalType,
    pub name: Option<String>,
    pub text_snippet: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossLanguageMap {
    pub function_declarations: Vec<CrossLanguageEntry>,
    pub class_declarations: Vec<CrossLanguageEntry>,
}

impl CrossLanguageMap {
    pub fn entries(&self) -> impl Iterator<Item = &CrossLanguageEntry> {
        self.function_declarations
            .iter()
            .chain(&self.class_declarations)
    }
}

pub fn snippet(text: &str) -> String {
    text.chars().take(SNIPPET_CHARS).collect()
}

// ----------------------------------------------------------------------------
// Name extraction

/// Declaration types that never carry a name.
fn is_anonymous(language: LanguageId, kind: &str) -> bool {
    use LanguageId::*;
    match language {
        Python => kind == "lambda",
        JavaScript | TypeScript => kind == "arrow_function",
        Java | Cpp | Scala => kind == "lambda_expression",
        CSharp => matches!(kind, "lambda_expression" | "anonymous_method_expression"),
        Go => kind == "func_literal",
        Ruby => kind == "lambda",
        C => false,
    }
}

/// Child types that can hold a declaration's name.
fn name_types(language: LanguageId) -> &'static [&'static str] {
    use LanguageId::*;
    match language {
        C => &["identifier", "field_identifier"],
        Cpp => &[
            "identifier",
            "field_identifier",
            "type_identifier",
            "destructor_name",
            "operator_name",
            "qualified_identifier",
        ],
        CSharp | Java | Python => &["identifier"],
        Go => &["identifier", "field_identifier", "type_identifier"],
        JavaScript => &["identifier", "property_identifier", "private_property_identifier"],
        TypeScript => &[
            "identifier",
            "type_identifier",
            "property_identifier",
            "private_property_identifier",
        ],
        Ruby => &["identifier", "constant", "setter", "operator", "scope_resolution"],
        Scala => &["identifier", "operator_identifier"],
    }
}

const PARAMETER_LISTS: [&str; 5] = [
    "parameters",
    "formal_parameters",
    "parameter_list",
    "method_parameters",
    "class_parameters",
];

const DECLARATORS: [&str; 5] = [
    "function_declarator",
    "pointer_declarator",
    "reference_declarator",
    "parenthesized_declarator",
    "attributed_declarator",
];

/// Name-like nodes whose bare name is their last component.
const QUALIFIED: [&str; 2] = ["qualified_identifier", "scope_resolution"];

/// Returns the bare declared name, or `None` for anonymous constructs.
pub fn extract_name(node: &AstNode, nodes: &[AstNode], language: LanguageId) -> Option<String> {
    if is_anonymous(language, &node.kind) {
        return None;
    }
    name_from_children(node, nodes, language, 0).or_else(|| name_from_text(&node.text))
}

fn name_from_children(
    node: &AstNode,
    nodes: &[AstNode],
    language: LanguageId,
    depth: usize,
) -> Option<String> {
    if depth > 8 {
        return None;
    }
    let children: Vec<&AstNode> = node.children.iter().filter_map(|&c| nodes.get(c)).collect();

    if let Some(decl) = children.iter().find(|c| DECLARATORS.contains(&c.kind.as_str())) {
        return name_from_children(decl, nodes, language, depth + 1);
    }

    let names = name_types(language);
    let is_name = |n: &&&AstNode| names.contains(&n.kind.as_str());
    // The declared name is the last name-like child before the final
    // parameter list (types and receivers precede it); without a parameter
    // list it is the first name-like child.
    let chosen = match children
        .iter()
        .rposition(|c| PARAMETER_LISTS.contains(&c.kind.as_str()))
    {
        Some(anchor) => children[..anchor].iter().rev().find(is_name),
        None => children.iter().find(is_name),
    }?;

    if QUALIFIED.contains(&chosen.kind.as_str()) {
        return last_component(chosen, nodes, language, depth + 1);
    }
    Some(chosen.text.clone())
}

fn last_component(node: &AstNode, nodes: &[AstNode], language: LanguageId, depth: usize) -> Option<String> {
    if depth > 8 {
        return None;
    }
    let names = name_types(language);
    let last = node
        .children
        .iter()
        .filter_map(|&c| nodes.get(c))
        .filter(|c| names.contains(&c.kind.as_str()) || c.kind == "namespace_identifier")
        .last()?;
    if QUALIFIED.contains(&last.kind.as_str()) {
        last_component(last, nodes, language, depth + 1)
    } else {
        Some(last.text.clone())
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// Textual fallback: the identifier after a declaring keyword, or else the
/// identifier right before the first `(`.
fn name_from_text(text: &str) -> Option<String> {
    const KEYWORDS: [&str; 13] = [
        "def", "class", "func", "function", "fun", "object", "trait", "module", "interface",
        "struct", "enum", "record", "fn",
    ];
    let head: String = text.chars().take(256).collect();
    let tokens: Vec<&str> = head
        .split(|c: char| !is_ident_char(c))
        .filter(|t| !t.is_empty())
        .collect();
    if let Some(pos) = tokens.iter().position(|t| KEYWORDS.contains(t)) {
        if let Some(name) = tokens.get(pos + 1) {
            return Some(name.to_string());
        }
    }
    let before_paren = &head[..head.find('(')?];
    let name: String = before_paren
        .trim_end()
        .chars()
        .rev()
        .take_while(|&c| is_ident_char(c))
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .collect();
    (!name.is_empty() && !name.starts_with(|c: char| c.is_ascii_digit())).then_some(name)
}

/// Builds the map: function declarations, then classes, each in ascending
/// node-id order, one entry per indexed node.
pub fn create_cross_language_map(
    nodes: &[AstNode],
    categories: &NodeCategories,
    language: LanguageId,
) -> CrossLanguageMap {
    let entries = |subcategory: &str, universal_type: UniversalType| -> Vec<CrossLanguageEntry> {
        categories
            .get(Category::Declarations, subcategory)
            .map(|ids| {
                ids.iter()
                    .filter_map(|&id| nodes.get(id))
                    .map(|node| CrossLanguageEntry {
                        node_id: node.id,
                        universal_type,
                        name: extract_name(node, nodes, language),
                        text_snippet: snippet(&node.text),
                    })
                    .collect()
            })
            .unwrap_or_default()
    };
    CrossLanguageMap {
        function_declarations: entries("functions", UniversalType::Function),
        class_declarations: entries("classes", UniversalType::Class),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snippet_truncates_by_characters() {
        let long = "é".repeat(150);
        assert_eq!(snippet(&long).chars().count(), 100);
        assert_eq!(snippet("short"), "short");
    }

    #[test]
    fn text_fallback() {
        assert_eq!(
            name_from_text("def calculate_sum(a, b):").as_deref(),
            Some("calculate_sum")
        );
        assert_eq!(
            name_from_text("class DataProcessor:\n    pass").as_deref(),
            Some("DataProcessor")
        );
        assert_eq!(
            name_from_text("static int add(int a, int b) {").as_deref(),
            Some("add")
        );
        assert_eq!(name_from_text("(x) => x + 1"), None);
    }

    #[test]
    fn serialized_field_names() {
        let entry = CrossLanguageEntry {
            node_id: 0,
            universal_type: UniversalType::Function,
            name: Some("calculate_sum".into()),
            text_snippet: "def calculate_sum(a, b):".into(),
        };
        assert_eq!(
            serde_json::to_string(&entry).unwrap(),
            r#"{"node_id":0,"universal_type":"function","name":"calculate_sum","text_snippet":"def calculate_sum(a, b):"}"#
        );
    }
}
