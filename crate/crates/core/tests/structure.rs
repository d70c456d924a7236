mod common;

use common::{build, desk, source_strategy};
use proptest::prelude::*;
use uast_core::schema::ViolationKind;
use uast_core::{validate_record, AstNode, Category, LanguageId, UniversalFileRecord};

/// Tree checks written against the raw array, without the library validator.
fn check_tree(source: &str, nodes: &[AstNode]) -> Result<(), String> {
    if nodes.is_empty() {
        return Err("empty array".into());
    }
    for (i, n) in nodes.iter().enumerate() {
        if n.id != i {
            return Err(format!("id {} at index {i}", n.id));
        }
        if n.start_byte > n.end_byte || n.end_byte > source.len() {
            return Err(format!("bad span on {i}"));
        }
        if source.get(n.start_byte..n.end_byte) != Some(n.text.as_str()) {
            return Err(format!("text of {i} is not its source slice"));
        }
        match n.parent {
            None if i != 0 => return Err(format!("second root {i}")),
            Some(_) if i == 0 => return Err("root has a parent".into()),
            Some(p) => {
                let parent = nodes.get(p).ok_or(format!("dangling parent of {i}"))?;
                if parent.children.iter().filter(|&&c| c == i).count() != 1 {
                    return Err(format!("{p} does not list {i} exactly once"));
                }
                if n.start_byte < parent.start_byte || n.end_byte > parent.end_byte {
                    return Err(format!("{i} escapes {p}"));
                }
            }
            None => {}
        }
        for &c in &n.children {
            if nodes.get(c).and_then(|c| c.parent) != Some(i) {
                return Err(format!("child {c} of {i} points elsewhere"));
            }
        }
        for w in n.children.windows(2) {
            if nodes[w[0]].start_byte > nodes[w[1]].start_byte {
                return Err(format!("children of {i} out of order"));
            }
        }
    }
    if nodes[0].text != source {
        return Err("root text differs from source".into());
    }
    // Pre-order walk from the root must visit 0, 1, 2, ... and reach everything.
    let mut order = Vec::with_capacity(nodes.len());
    let mut stack = vec![0usize];
    while let Some(id) = stack.pop() {
        if order.len() > nodes.len() {
            return Err("cycle".into());
        }
        order.push(id);
        stack.extend(nodes[id].children.iter().rev());
    }
    if order != (0..nodes.len()).collect::<Vec<_>>() {
        return Err("ids are not dense pre-order".into());
    }
    Ok(())
}

#[test]
fn desk_records_are_lossless_and_well_formed() {
    let desk = desk();
    assert!(desk.len() >= 490, "{} records", desk.len());
    for (source, record) in desk {
        assert_eq!(record.source(), Some(source.as_str()), "{}", record.path);
        check_tree(source, &record.nodes).unwrap_or_else(|e| panic!("{}: {e}", record.path));
        validate_record(record).unwrap_or_else(|v| panic!("{}: {v:?}", record.path));
    }
}

#[test]
fn python_assignment_example() {
    let r = build(LanguageId::Python, "x.py", "x = 1");
    let kinds: Vec<&str> = r.nodes.iter().map(|n| n.kind.as_str()).collect();
    assert_eq!(kinds, ["module", "expression_statement", "assignment", "identifier", "integer"]);
    assert_eq!(r.nodes[0].parent, None);
    assert_eq!(r.nodes[3].text, "x");
    assert_eq!(r.nodes[4].text, "1");
    assert_eq!(r.nodes[2].children, [3, 4]);
}

#[test]
fn function_node_precedes_its_children() {
    let src = "def calculate_sum(a, b):\n    return a + b\n";
    let r = build(LanguageId::Python, "f.py", src);
    let f = r.nodes.iter().find(|n| n.kind == "function_definition").unwrap();
    assert!(!f.children.is_empty());
    assert!(f.children.iter().all(|&c| c > f.id));
}

#[test]
fn java_age_check_has_no_errors() {
    let path = common::corpus_dir().join("fixtures/age_check/AgeCheck.java");
    let src = std::fs::read_to_string(path).unwrap();
    let r = build(LanguageId::Java, "AgeCheck.java", &src);
    assert_eq!(r.metadata.errors, 0);
}

fn kinds(violations: &[uast_core::Violation]) -> Vec<ViolationKind> {
    violations.iter().map(|v| v.kind).collect()
}

fn sample() -> UniversalFileRecord {
    let src = "import os\n\ndef f(a):\n    if a:\n        return g(a, 1)\n    return 0\n\nclass K:\n    def m(self):\n        pass\n";
    let r = build(LanguageId::Python, "sample.py", src);
    validate_record(&r).unwrap();
    r
}

fn fails_with(record: &UniversalFileRecord, kind: ViolationKind) {
    let v = validate_record(record).expect_err("mutation must not validate");
    assert!(kinds(&v).contains(&kind), "expected {kind:?}, got {v:?}");
}

#[test]
fn node_count_mismatch() {
    let mut r = sample();
    r.metadata.nodes -= 1;
    fails_with(&r, ViolationKind::MetadataNodes);
}

#[test]
fn parent_not_listing_child() {
    let mut r = sample();
    let child = r.nodes.iter().find(|n| n.parent.is_some_and(|p| p != 1) && n.id > 1).unwrap().id;
    r.nodes[child].parent = Some(1);
    fails_with(&r, ViolationKind::LinkIntegrity);
}

#[test]
fn all_violations_are_reported() {
    let mut r = sample();
    r.metadata.nodes += 1;
    r.metadata.errors += 1;
    r.metadata.lines += 1;
    let v = validate_record(&r).unwrap_err();
    let k = kinds(&v);
    for kind in [ViolationKind::MetadataNodes, ViolationKind::MetadataErrors, ViolationKind::MetadataLines] {
        assert!(k.contains(&kind), "{kind:?} missing from {v:?}");
    }
}

#[test]
fn named_counterexamples() {
    let base = sample();
    let f = base.node_categories.get(Category::Declarations, "functions").unwrap()[0];
    let leaf = base.nodes.iter().rev().find(|n| n.children.is_empty() && n.end_byte < base.nodes[0].end_byte).unwrap().id;
    let multi = base.nodes.iter().find(|n| n.children.len() >= 2).unwrap().id;
    let cases: Vec<(ViolationKind, Box<dyn Fn(&mut UniversalFileRecord)>)> = vec![
        (ViolationKind::SchemaVersion, Box::new(|r| r.schema_version = "0.0".into())),
        (ViolationKind::MetadataErrors, Box::new(|r| r.metadata.errors = 3)),
        (ViolationKind::MetadataSourceHash, Box::new(|r| r.metadata.source_hash = "0".repeat(64))),
        (ViolationKind::MetadataAvgLineLength, Box::new(|r| r.metadata.avg_line_length += 0.5)),
        (ViolationKind::MetadataLines, Box::new(|r| r.metadata.lines += 1)),
        (ViolationKind::NodeText, Box::new(move |r| r.nodes[leaf].text.push('!'))),
        (ViolationKind::SiblingOrder, Box::new(move |r| r.nodes[multi].children.swap(0, 1))),
        (ViolationKind::SpanNesting, Box::new(move |r| {
            let end = r.nodes[0].end_byte;
            let n = &mut r.nodes[leaf];
            n.end_byte = end + 5;
        })),
        (ViolationKind::PreorderIds, Box::new(|r| r.nodes[2].id = 7)),
        (ViolationKind::CategoryUnresolved, Box::new(|r| {
            let len = r.nodes.len();
            r.node_categories.declarations.get_mut("functions").unwrap().push(len + 3);
        })),
        (ViolationKind::CategoryOrder, Box::new(|r| {
            r.node_categories.declarations.get_mut("functions").unwrap().reverse();
        })),
        (ViolationKind::MapCount, Box::new(|r| {
            r.cross_language_map.function_declarations.pop();
        })),
        (ViolationKind::MapUnresolved, Box::new(|r| {
            r.cross_language_map.class_declarations[0].node_id = 10_000;
        })),
        (ViolationKind::MapCategory, Box::new(move |r| {
            r.cross_language_map.class_declarations[0].node_id = f;
        })),
        (ViolationKind::MapSnippet, Box::new(|r| {
            r.cross_language_map.function_declarations[0].text_snippet = "nope".into();
        })),
        (ViolationKind::MapOrder, Box::new(|r| {
            r.cross_language_map.function_declarations.reverse();
        })),
    ];
    for (kind, mutate) in cases {
        let mut r = base.clone();
        mutate(&mut r);
        fails_with(&r, kind);
    }
}

#[test]
fn missing_field_is_a_required_field_violation() {
    let mut value = serde_json::to_value(sample()).unwrap();
    value.as_object_mut().unwrap().remove("node_categories");
    let v = uast_core::schema::validate_json(&value).unwrap_err();
    assert!(kinds(&v).contains(&ViolationKind::RequiredField), "{v:?}");
}

/// Applies mutation `which` at position `at`; `None` when it does not apply.
fn mutate(r: &UniversalFileRecord, which: u8, at: usize) -> Option<UniversalFileRecord> {
    let mut r = r.clone();
    let len = r.nodes.len();
    let pick = |pred: &dyn Fn(&AstNode) -> bool| {
        let found: Vec<usize> = r.nodes.iter().filter(|n| pred(n)).map(|n| n.id).collect();
        (!found.is_empty()).then(|| found[at % found.len()])
    };
    match which {
        0 => r.metadata.nodes += 1 + at % 3,
        1 => r.metadata.errors += 1,
        2 => {
            let id = pick(&|n| n.id > 0)?;
            let old = r.nodes[id].parent?;
            r.nodes[id].parent = Some(if old == 0 { id } else { 0 });
        }
        3 => {
            let id = pick(&|n| !n.children.is_empty())?;
            let k = at % r.nodes[id].children.len();
            r.nodes[id].children.remove(k);
        }
        4 => {
            let id = pick(&|n| n.children.len() >= 2)?;
            r.nodes[id].children.swap(0, 1);
        }
        5 => {
            let id = pick(&|n| n.id > 0)?;
            r.nodes[id].text.push('#');
        }
        6 => {
            let id = pick(&|n| n.id > 0)?;
            r.nodes[id].id = len + at;
        }
        7 => {
            let id = pick(&|n| n.id > 0 && n.start_byte > 0)?;
            r.nodes[id].start_byte = 0;
        }
        8 => {
            let (cat, sub) = [(Category::Declarations, "functions"), (Category::Expressions, "identifiers")][at % 2];
            let list = match cat {
                Category::Declarations => &mut r.node_categories.declarations,
                Category::Statements => &mut r.node_categories.statements,
                Category::Expressions => &mut r.node_categories.expressions,
            };
            list.entry(sub.to_string()).or_default().push(len + at);
        }
        9 => {
            if r.cross_language_map.function_declarations.is_empty() {
                return None;
            }
            let k = at % r.cross_language_map.function_declarations.len();
            r.cross_language_map.function_declarations.remove(k);
        }
        10 => {
            let e = r.cross_language_map.function_declarations.first_mut()?;
            e.text_snippet.insert(0, '@');
        }
        11 => {
            let mut h = r.metadata.source_hash.into_bytes();
            let k = at % h.len();
            h[k] = if h[k] == b'0' { b'1' } else { b'0' };
            r.metadata.source_hash = String::from_utf8(h).unwrap();
        }
        _ => unreachable!(),
    }
    Some(r)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, max_global_rejects: 4096, ..ProptestConfig::default() })]

    #[test]
    fn generated_records_are_well_formed((lang, src) in source_strategy()) {
        let r = build(lang, "gen", &src);
        prop_assert_eq!(r.source(), Some(src.as_str()));
        prop_assert!(check_tree(&src, &r.nodes).is_ok(), "{:?}", check_tree(&src, &r.nodes));
        prop_assert!(validate_record(&r).is_ok(), "{:?}", validate_record(&r));
        let again = build(lang, "gen", &src);
        prop_assert_eq!(again, r);
    }

    #[test]
    fn mutated_records_fail_validation((lang, src) in source_strategy(), which in 0u8..12, at in 0usize..64) {
        let r = build(lang, "gen", &src);
        let mutated = mutate(&r, which, at);
        prop_assume!(mutated.is_some());
        let mutated = mutated.unwrap();
        prop_assume!(mutated != r);
        prop_assert!(validate_record(&mutated).is_err(), "mutation {} accepted", which);
    }
}
