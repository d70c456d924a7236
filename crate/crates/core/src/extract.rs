//! Flattening of a concrete syntax tree into the universal node array.

use serde::{Deserialize, Serialize};
use tree_sitter::Node;

use crate::grammar::ParseOutcome;

/// Zero-based position; `column` counts bytes within the row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub row: usize,
    pub column: usize,
}

impl From<tree_sitter::Point> for Point {
    fn from(p: tree_sitter::Point) -> Self {
        Point {
            row: p.row,
            column: p.column,
        }
    }
}

/// Position just past the last byte of `text`.
pub fn end_point_of(text: &str) -> Point {
    let row = text.bytes().filter(|&b| b == b'\n').count();
    let column = match text.rfind('\n') {
        Some(i) => text.len() - i - 1,
        None => text.len(),
    };
    Point { row, column }
}

/// One entry of the flat node array. Field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AstNode {
    pub id: usize,
    #[serde(rename = "type")]
    pub kind: String,
    pub text: String,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub start_point: Point,
    pub end_point: Point,
    pub start_byte: usize,
    pub end_byte: usize,
}

/// Grammar type name the parser uses for error-recovery nodes.
pub const ERROR_TYPE: &str = "ERROR";

impl AstNode {
    pub fn is_error(&self) -> bool {
        self.kind == ERROR_TYPE
    }
}

/// Delimiter predicate: an anonymous token made only of punctuation.
/// Named nodes, keywords and error nodes are always kept.
pub fn should_skip(named: bool, is_error: bool, text: &str) -> bool {
    !named && !is_error && !text.is_empty() && text.chars().all(|c| c.is_ascii_punctuation())
}

pub fn should_skip_node(node: &Node<'_>, source: &str) -> bool {
    should_skip(
        node.is_named(),
        node.is_error(),
        slice(source, node.start_byte(), node.end_byte()),
    )
}

fn slice(source: &str, start: usize, end: usize) -> &str {
    source.get(start..end).unwrap_or("")
}

/// Pre-order flattening. A node gets the next id when first visited, before
/// its children; skipped delimiters contribute no entry and their children
/// attach to the nearest kept ancestor. The root spans the whole source.
pub fn extract_ast(outcome: &ParseOutcome) -> Vec<AstNode> {
    let source = outcome.source.as_str();
    let mut nodes: Vec<AstNode> = Vec::new();
    let mut cursor = outcome.tree.walk();
    let mut stack: Vec<(Node<'_>, Option<usize>)> = vec![(outcome.tree.root_node(), None)];

    while let Some((node, parent)) = stack.pop() {
        let owner = if parent.is_some() && should_skip_node(&node, source) {
            parent
        } else {
            let id = nodes.len();
            let (start_byte, end_byte, start_point, end_point) = if parent.is_none() {
                (0, source.len(), Point { row: 0, column: 0 }, end_point_of(source))
            } else {
                (
                    node.start_byte(),
                    node.end_byte(),
                    node.start_position().into(),
                    node.end_position().into(),
                )
            };
            nodes.push(AstNode {
                id,
                kind: node.kind().to_string(),
                text: slice(source, start_byte, end_byte).to_string(),
                parent,
                children: Vec::new(),
                start_point,
                end_point,
                start_byte,
                end_byte,
            });
            if let Some(p) = parent {
                nodes[p].children.push(id);
            }
            Some(id)
        };
        let children: Vec<Node<'_>> = node.children(&mut cursor).collect();
        stack.extend(children.into_iter().rev().map(|c| (c, owner)));
    }
    nodes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::GrammarBundle;
    use crate::language::LanguageId;

    fn extract(lang: LanguageId, src: &str) -> Vec<AstNode> {
        let outcome = GrammarBundle::builtin().unwrap().parse(lang, src).unwrap();
        extract_ast(&outcome)
    }

    #[test]
    fn skip_predicate() {
        assert!(should_skip(false, false, ";"));
        assert!(should_skip(false, false, "=>"));
        assert!(!should_skip(true, false, "x"));
        assert!(!should_skip(false, false, "return"));
        assert!(!should_skip(false, true, ";"));
        assert!(!should_skip(false, false, ""));
    }

    #[test]
    fn python_assignment_flattens_without_equals() {
        // Frozen from one run of the Python grammar; `=` is the only skip.
        let nodes = extract(LanguageId::Python, "x = 1");
        let kinds: Vec<_> = nodes.iter().map(|n| n.kind.as_str()).collect();
        assert_eq!(
            kinds,
            ["module", "expression_statement", "assignment", "identifier", "integer"]
        );
        assert_eq!(nodes[0].parent, None);
        assert_eq!(nodes[3].text, "x");
        assert_eq!(nodes[4].text, "1");
        assert_eq!(nodes[2].children, vec![3, 4]);
        assert_eq!(nodes[4].start_point, Point { row: 0, column: 4 });
    }

    #[test]
    fn keywords_are_retained() {
        let nodes = extract(LanguageId::Python, "def f():\n    return 1\n");
        assert!(nodes.iter().any(|n| n.kind == "return" && n.text == "return"));
        assert!(nodes.iter().any(|n| n.kind == "def"));
        assert!(!nodes.iter().any(|n| n.kind == ":" || n.kind == "(" || n.kind == ")"));
    }

    #[test]
    fn root_covers_whole_source() {
        let src = "\n\n# lead\nx = 1\n\n\n";
        let nodes = extract(LanguageId::Python, src);
        assert_eq!(nodes[0].text, src);
        assert_eq!(nodes[0].start_byte, 0);
        assert_eq!(nodes[0].end_byte, src.len());
        assert_eq!(nodes[0].end_point, Point { row: 6, column: 0 });
    }

    #[test]
    fn function_children_have_larger_ids() {
        let nodes = extract(LanguageId::Python, "def calculate_sum(a, b):\n    return a + b\n");
        let f = nodes.iter().find(|n| n.kind == "function_definition").unwrap();
        assert!(!f.children.is_empty());
        assert!(f.children.iter().all(|&c| c > f.id));
        assert_eq!(f.text, "def calculate_sum(a, b):\n    return a + b");
    }

    #[test]
    fn ids_dense_and_preorder() {
        let nodes = extract(
            LanguageId::Java,
            "class A { int f(int x) { if (x > 0) { return x; } return -x; } }",
        );
        for (i, n) in nodes.iter().enumerate() {
            assert_eq!(n.id, i);
            for &c in &n.children {
                assert_eq!(nodes[c].parent, Some(i));
                assert!(c > i);
            }
        }
        // pre-order: walking children recursively reproduces 0..n
        let mut order = Vec::new();
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            order.push(i);
            stack.extend(nodes[i].children.iter().rev());
        }
        assert_eq!(order, (0..nodes.len()).collect::<Vec<_>>());
    }

    #[test]
    fn error_nodes_are_kept() {
        let nodes = extract(LanguageId::Python, "def f(:\n    return ))\n");
        assert!(nodes.iter().any(|n| n.is_error()));
    }

    #[test]
    fn empty_source_yields_root_only() {
        let nodes = extract(LanguageId::Go, "");
        assert_eq!(nodes.len(), 1);
        assert_eq!(nodes[0].text, "");
    }

    #[test]
    fn multibyte_text_slices_cleanly() {
        let src = "s = \"héllo → wörld\"\n";
        let nodes = extract(LanguageId::Python, src);
        for n in &nodes {
            assert_eq!(n.text, &src[n.start_byte..n.end_byte]);
        }
    }

    #[test]
    fn end_point_examples() {
        assert_eq!(end_point_of(""), Point { row: 0, column: 0 });
        assert_eq!(end_point_of("ab"), Point { row: 0, column: 2 });
        assert_eq!(end_point_of("ab\ncd"), Point { row: 1, column: 2 });
        assert_eq!(end_point_of("ab\n"), Point { row: 1, column: 0 });
    }
}
