//! The universal file record, its metadata block and record validation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::categorize::{Category, NodeCategories};
use crate::extract::{AstNode, Point};
use crate::ingest::line_count;
use crate::language::LanguageId;
use crate::xmap::{CrossLanguageMap, UniversalType, SNIPPET_CHARS};

pub const SCHEMA_VERSION: &str = "1.0";

/// Top-level keys of a serialized record, in serialized order.
pub const RECORD_KEYS: [&str; 7] = [
    "language",
    "path",
    "metadata",
    "nodes",
    "node_categories",
    "cross_language_map",
    "schema_version",
];

/// SHA-256 over the UTF-8 bytes of `source`, lowercase hex.
pub fn source_hash(source: &str) -> String {
    hex::encode(Sha256::digest(source.as_bytes()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FileMetadata {
    pub lines: usize,
    /// Mean characters per line, line terminator excluded.
    pub avg_line_length: f64,
    pub nodes: usize,
    pub errors: usize,
    pub source_hash: String,
}

pub fn compute_metadata(source: &str, nodes: &[AstNode]) -> FileMetadata {
    let lines = line_count(source);
    let chars: usize = source.lines().map(|l| l.chars().count()).sum();
    let avg_line_length = if lines == 0 {
        0.0
    } else {
        chars as f64 / lines as f64
    };
    FileMetadata {
        lines,
        avg_line_length,
        nodes: nodes.len(),
        errors: nodes.iter().filter(|n| n.is_error()).count(),
        source_hash: source_hash(source),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniversalFileRecord {
    pub language: LanguageId,
    pub path: String,
    pub metadata: FileMetadata,
    pub nodes: Vec<AstNode>,
    pub node_categories: NodeCategories,
    pub cross_language_map: CrossLanguageMap,
    pub schema_version: String,
}

impl UniversalFileRecord {
    /// The source text, recovered from the root node.
    pub fn source(&self) -> Option<&str> {
        self.nodes.first().map(|n| n.text.as_str())
    }

    pub fn node(&self, id: usize) -> Option<&AstNode> {
        self.nodes.get(id).filter(|n| n.id == id)
    }
}

// ----------------------------------------------------------------------------
// Validation

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    RequiredField,
    SchemaVersion,
    MetadataLines,
    MetadataAvgLineLength,
    MetadataNodes,
    MetadataErrors,
    MetadataSourceHash,
    LinkIntegrity,
    PreorderIds,
    SpanNesting,
    SiblingOrder,
    NodeText,
    NodePosition,
    CategoryUnresolved,
    CategoryOrder,
    MapUnresolved,
    MapCategory,
    MapCount,
    MapOrder,
    MapSnippet,
}

impl ViolationKind {
    pub fn label(self) -> &'static str {
        match self {
            ViolationKind::RequiredField => "required field",
            ViolationKind::SchemaVersion => "schema_version mismatch",
            ViolationKind::MetadataLines => "metadata.lines mismatch",
            ViolationKind::MetadataAvgLineLength => "metadata.avg_line_length mismatch",
            ViolationKind::MetadataNodes => "metadata.nodes mismatch",
            ViolationKind::MetadataErrors => "metadata.errors mismatch",
            ViolationKind::MetadataSourceHash => "metadata.source_hash mismatch",
            ViolationKind::LinkIntegrity => "link integrity",
            ViolationKind::PreorderIds => "pre-order ids",
            ViolationKind::SpanNesting => "span nesting",
            ViolationKind::SiblingOrder => "sibling order",
            ViolationKind::NodeText => "node text",
            ViolationKind::NodePosition => "node position",
            ViolationKind::CategoryUnresolved => "category id unresolved",
            ViolationKind::CategoryOrder => "category list order",
            ViolationKind::MapUnresolved => "cross-language node unresolved",
            ViolationKind::MapCategory => "universal_type inconsistent with category",
            ViolationKind::MapCount => "cross-language entry count",
            ViolationKind::MapOrder => "cross-language entry order",
            ViolationKind::MapSnippet => "text_snippet",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.label(), self.detail)
    }
}

#[derive(Default)]
struct Violations(Vec<Violation>);

impl Violations {
    fn push(&mut self, kind: ViolationKind, detail: impl Into<String>) {
        self.0.push(Violation {
            kind,
            detail: detail.into(),
        });
    }
}

/// Checks a JSON document for the required top-level record keys, then
/// decodes and validates it.
pub fn validate_json(value: &serde_json::Value) -> Result<UniversalFileRecord, Vec<Violation>> {
    let mut out = Violations::default();
    match value.as_object() {
        None => out.push(ViolationKind::RequiredField, "record is not a JSON object"),
        Some(obj) => {
            for key in RECORD_KEYS {
                if !obj.contains_key(key) {
                    out.push(ViolationKind::RequiredField, format!("missing key `{key}`"));
                }
            }
        }
    }
    if !out.0.is_empty() {
        return Err(out.0);
    }
    let record: UniversalFileRecord = serde_json::from_value(value.clone()).map_err(|e| {
        vec![Violation {
            kind: ViolationKind::RequiredField,
            detail: e.to_string(),
        }]
    })?;
    validate_record(&record).map(|()| record)
}

/// Runs every record check and returns all violations found.
pub fn validate_record(record: &UniversalFileRecord) -> Result<(), Vec<Violation>> {
    let mut out = Violations::default();
    check_fields(record, &mut out);
    check_metadata(record, &mut out);
    let links_ok = check_links(&record.nodes, &mut out);
    if links_ok {
        check_spans(&record.nodes, &mut out);
    }
    check_categories(record, &mut out);
    check_map(record, &mut out);
    if out.0.is_empty() {
        Ok(())
    } else {
        Err(out.0)
    }
}

fn check_fields(record: &UniversalFileRecord, out: &mut Violations) {
    use ViolationKind::*;
    if record.path.is_empty() {
        out.push(RequiredField, "path is empty");
    }
    if record.schema_version != SCHEMA_VERSION {
        out.push(
            SchemaVersion,
            format!("expected {SCHEMA_VERSION}, found {}", record.schema_version),
        );
    }
    let hash = &record.metadata.source_hash;
    if hash.len() != 64 || !hash.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
        out.push(MetadataSourceHash, format!("`{hash}` is not 64 lowercase hex digits"));
    }
    if record.nodes.is_empty() {
        out.push(RequiredField, "node array is empty");
    }
}

fn check_metadata(record: &UniversalFileRecord, out: &mut Violations) {
    use ViolationKind::*;
    let meta = &record.metadata;
    if meta.nodes != record.nodes.len() {
        out.push(
            MetadataNodes,
            format!("declared {}, array holds {}", meta.nodes, record.nodes.len()),
        );
    }
    let errors = record.nodes.iter().filter(|n| n.is_error()).count();
    if meta.errors != errors {
        out.push(MetadataErrors, format!("declared {}, array holds {errors}", meta.errors));
    }
    let Some(source) = record.source() else {
        return;
    };
    let expected = compute_metadata(source, &record.nodes);
    if meta.lines != expected.lines {
        out.push(MetadataLines, format!("declared {}, source has {}", meta.lines, expected.lines));
    }
    if meta.avg_line_length.to_bits() != expected.avg_line_length.to_bits() {
        out.push(
            MetadataAvgLineLength,
            format!("declared {}, source gives {}", meta.avg_line_length, expected.avg_line_length),
        );
    }
    if meta.source_hash != expected.source_hash {
        out.push(
            MetadataSourceHash,
            format!("declared {}, root text hashes to {}", meta.source_hash, expected.source_hash),
        );
    }
}

/// Single root, dense ids, parent/child mutuality, pre-order numbering.
/// Returns false when the structure is too broken for span checks.
fn check_links(nodes: &[AstNode], out: &mut Violations) -> bool {
    use ViolationKind::*;
    if nodes.is_empty() {
        return false;
    }
    let n = nodes.len();
    let before = out.0.len();
    for (i, node) in nodes.iter().enumerate() {
        if node.id != i {
            out.push(PreorderIds, format!("entry {i} carries id {}", node.id));
        }
    }
    if out.0.len() > before {
        return false;
    }
    if nodes[0].parent.is_some() {
        out.push(LinkIntegrity, "node 0 has a parent");
    }
    for node in nodes {
        if node.id != 0 && node.parent.is_none() {
            out.push(LinkIntegrity, format!("node {} has no parent (second root)", node.id));
        }
        if let Some(p) = node.parent {
            match nodes.get(p) {
                None => out.push(LinkIntegrity, format!("node {} names missing parent {p}", node.id)),
                Some(parent) if !parent.children.contains(&node.id) => out.push(
                    LinkIntegrity,
                    format!("node {} claims parent {p}, whose children omit it", node.id),
                ),
                _ => {}
            }
        }
        for &c in &node.children {
            match nodes.get(c) {
                None => out.push(LinkIntegrity, format!("node {} lists missing child {c}", node.id)),
                Some(child) if child.parent != Some(node.id) => out.push(
                    LinkIntegrity,
                    format!("node {} lists child {c}, whose parent is {:?}", node.id, child.parent),
                ),
                _ => {}
            }
        }
    }
    if out.0.len() > before {
        return false;
    }
    // Every non-root node has exactly one mutual parent, so the graph is a
    // forest rooted at node 0 plus possible cycles; a pre-order walk from
    // the root must visit 0..n in order.
    // A numbering mismatch leaves the tree usable for span checks.
    let mut expected = 0usize;
    let mut stack = vec![0usize];
    let mut visited = vec![false; n];
    let mut numbering_reported = false;
    while let Some(i) = stack.pop() {
        if visited[i] {
            out.push(LinkIntegrity, format!("node {i} reached twice"));
            return false;
        }
        visited[i] = true;
        if i != expected && !numbering_reported {
            out.push(PreorderIds, format!("pre-order position {expected} holds node {i}"));
            numbering_reported = true;
        }
        expected += 1;
        stack.extend(nodes[i].children.iter().rev());
    }
    if expected != n {
        out.push(
            LinkIntegrity,
            format!("{} of {n} nodes unreachable from the root", n - expected),
        );
        return false;
    }
    true
}

fn check_spans(nodes: &[AstNode], out: &mut Violations) {
    use ViolationKind::*;
    let source = nodes[0].text.as_str();
    if nodes[0].start_byte != 0 || nodes[0].end_byte != source.len() {
        out.push(
            SpanNesting,
            format!(
                "root spans {}..{}, source has {} bytes",
                nodes[0].start_byte,
                nodes[0].end_byte,
                source.len()
            ),
        );
    }
    let line_starts: Vec<usize> = std::iter::once(0)
        .chain(source.match_indices('\n').map(|(i, _)| i + 1))
        .collect();
    let point_at = |byte: usize| -> Point {
        let row = line_starts.partition_point(|&s| s <= byte) - 1;
        Point {
            row,
            column: byte - line_starts[row],
        }
    };
    for node in nodes {
        if node.start_byte > node.end_byte {
            out.push(
                SpanNesting,
                format!("node {} has start {} > end {}", node.id, node.start_byte, node.end_byte),
            );
            continue;
        }
        match source.get(node.start_byte..node.end_byte) {
            Some(text) if text == node.text => {}
            Some(_) => out.push(NodeText, format!("node {} text differs from its span", node.id)),
            None => {
                out.push(NodeText, format!("node {} span is outside the source", node.id));
                continue;
            }
        }
        if point_at(node.start_byte) != node.start_point || point_at(node.end_byte) != node.end_point {
            out.push(NodePosition, format!("node {} points disagree with its byte span", node.id));
        }
        let mut prev_start = None;
        for &c in &node.children {
            let child = &nodes[c];
            if child.start_byte < node.start_byte || child.end_byte > node.end_byte {
                out.push(
                    SpanNesting,
                    format!("child {c} escapes the span of parent {}", node.id),
                );
            }
            if let Some(prev) = prev_start {
                if child.start_byte < prev {
                    out.push(SiblingOrder, format!("children of node {} out of order at {c}", node.id));
                }
            }
            prev_start = Some(child.start_byte);
        }
    }
}

fn check_categories(record: &UniversalFileRecord, out: &mut Violations) {
    use ViolationKind::*;
    let n = record.nodes.len();
    for (category, subcategory, ids) in record.node_categories.iter() {
        if ids.windows(2).any(|w| w[0] >= w[1]) {
            out.push(
                CategoryOrder,
                format!("{}.{subcategory} is not strictly ascending", category.as_str()),
            );
        }
        for &id in ids {
            if id >= n {
                out.push(
                    CategoryUnresolved,
                    format!("{}.{subcategory} lists missing node {id}", category.as_str()),
                );
            }
        }
    }
}

fn check_map(record: &UniversalFileRecord, out: &mut Violations) {
    use ViolationKind::*;
    let lists: [(UniversalType, &str, &[crate::xmap::CrossLanguageEntry]); 2] = [
        (
            UniversalType::Function,
            "functions",
            &record.cross_language_map.function_declarations,
        ),
        (
            UniversalType::Class,
            "classes",
            &record.cross_language_map.class_declarations,
        ),
    ];
    let empty = Vec::new();
    for (universal_type, subcategory, entries) in lists {
        let indexed = record
            .node_categories
            .get(Category::Declarations, subcategory)
            .unwrap_or(&empty);
        if entries.len() != indexed.len() {
            out.push(
                MapCount,
                format!(
                    "{} {} entries, declarations.{subcategory} holds {}",
                    entries.len(),
                    universal_type.as_str(),
                    indexed.len()
                ),
            );
        }
        if entries.windows(2).any(|w| w[0].node_id >= w[1].node_id) {
            out.push(MapOrder, format!("{} entries not ascending by node_id", universal_type.as_str()));
        }
        for entry in entries {
            if entry.universal_type != universal_type {
                out.push(
                    MapCategory,
                    format!(
                        "node {} is `{}` inside the {} list",
                        entry.node_id,
                        entry.universal_type.as_str(),
                        universal_type.as_str()
                    ),
                );
            }
            let Some(node) = record.node(entry.node_id) else {
                out.push(MapUnresolved, format!("node_id {} does not exist", entry.node_id));
                continue;
            };
            if indexed.binary_search(&entry.node_id).is_err() {
                out.push(
                    MapCategory,
                    format!("node {} is not indexed under declarations.{subcategory}", entry.node_id),
                );
            }
            if !node.text.starts_with(&entry.text_snippet)
                || entry.text_snippet.chars().count() > SNIPPET_CHARS
            {
                out.push(MapSnippet, format!("node {} snippet is not a prefix of ≤{SNIPPET_CHARS} chars", entry.node_id));
            }
        }
    }
}

/// Violation counts by kind, for corpus-quality reports.
pub fn bucket_violations(violations: &[Violation]) -> BTreeMap<ViolationKind, usize> {
    let mut buckets = BTreeMap::new();
    for v in violations {
        *buckets.entry(v.kind).or_default() += 1;
    }
    buckets
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sha256_vectors() {
        assert_eq!(
            source_hash(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
        assert_eq!(
            source_hash("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        assert_eq!(source_hash("x = 1\n"), source_hash("x = 1\n"));
    }

    #[test]
    fn metadata_of_three_lines() {
        let m = compute_metadata("a\nbb\nccc\n", &[]);
        assert_eq!(m.lines, 3);
        assert_eq!(m.avg_line_length, 2.0);
        assert_eq!(m.nodes, 0);
        assert_eq!(m.errors, 0);
    }

    #[test]
    fn metadata_of_empty_source() {
        let m = compute_metadata("", &[]);
        assert_eq!(m.lines, 0);
        assert_eq!(m.avg_line_length, 0.0);
        assert_eq!(m.source_hash, source_hash(""));
    }

    #[test]
    fn avg_line_length_counts_characters() {
        // three chars, five bytes
        assert_eq!(compute_metadata("é→a\n", &[]).avg_line_length, 3.0);
    }
}
