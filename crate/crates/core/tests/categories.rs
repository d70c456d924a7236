mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;

use common::{build, desk, grammars, rules, source_strategy};
use proptest::prelude::*;
use uast_core::categorize::select;
use uast_core::{Category, LanguageId, NodeCategories, UniversalFileRecord, UniversalType};

type Oracle = HashMap<(LanguageId, String), (String, String, bool)>;

/// Reads the rule files straight from disk.
fn oracle_table() -> Oracle {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/rules");
    let mut table = Oracle::new();
    for entry in fs::read_dir(dir).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        for line in text.lines().filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let cols: Vec<&str> = line.split('\t').collect();
            let lang: LanguageId = cols[0].parse().unwrap();
            let keyword = cols.get(4) == Some(&"keyword");
            let prev = table.insert((lang, cols[1].to_string()), (cols[2].to_string(), cols[3].to_string(), keyword));
            assert!(prev.is_none(), "duplicate rule {line}");
        }
    }
    table
}

type Index = BTreeMap<(String, String), BTreeSet<usize>>;

/// Walks the concrete tree directly, numbering kept nodes in pre-order and
/// indexing named nodes whose type has a rule.
fn brute_force(lang: LanguageId, source: &str, table: &Oracle) -> Index {
    let tree = grammars().parse(lang, source.to_string()).unwrap().tree;
    let mut index = Index::new();
    let mut next = 0usize;
    let mut stack = vec![tree.root_node()];
    while let Some(node) = stack.pop() {
        let text = &source[node.start_byte()..node.end_byte()];
        let skip = !node.is_named()
            && !node.is_error()
            && !text.is_empty()
            && text.chars().all(|c| c.is_ascii_punctuation());
        if !skip {
            let id = next;
            next += 1;
            if node.is_named() {
                if let Some((cat, sub, _)) = table.get(&(lang, node.kind().to_string())) {
                    index.entry((cat.clone(), sub.clone())).or_default().insert(id);
                }
            }
        }
        let mut cursor = node.walk();
        let children: Vec<_> = node.children(&mut cursor).collect();
        stack.extend(children.into_iter().rev());
    }
    index
}

fn as_index(categories: &NodeCategories) -> Index {
    categories
        .iter()
        .filter(|(_, _, ids)| !ids.is_empty())
        .map(|(c, s, ids)| ((c.as_str().to_string(), s.to_string()), ids.iter().copied().collect()))
        .collect()
}

fn assert_equivalent(source: &str, record: &UniversalFileRecord, table: &Oracle) {
    let expected = brute_force(record.language, source, table);
    assert_eq!(as_index(&record.node_categories), expected, "{}", record.path);
    for (_, _, ids) in record.node_categories.iter() {
        assert!(ids.windows(2).all(|w| w[0] < w[1]), "{}", record.path);
    }
}

fn assert_map_matches_index(record: &UniversalFileRecord) {
    let cats = &record.node_categories;
    let functions = cats.get(Category::Declarations, "functions").cloned().unwrap_or_default();
    let classes = cats.get(Category::Declarations, "classes").cloned().unwrap_or_default();
    let map = &record.cross_language_map;
    let ids = |v: &[uast_core::CrossLanguageEntry]| v.iter().map(|e| e.node_id).collect::<Vec<_>>();
    assert_eq!(ids(&map.function_declarations), functions, "{}", record.path);
    assert_eq!(ids(&map.class_declarations), classes, "{}", record.path);
    for e in map.entries() {
        let node = &record.nodes[e.node_id];
        assert!(node.text.starts_with(&e.text_snippet), "{}", record.path);
        assert!(e.text_snippet.chars().count() <= 100);
        let expected = if functions.contains(&e.node_id) {
            UniversalType::Function
        } else {
            UniversalType::Class
        };
        assert_eq!(e.universal_type, expected);
    }
}

#[test]
fn desk_index_equals_brute_force() {
    let table = oracle_table();
    for (source, record) in desk() {
        assert_equivalent(source, record, &table);
        assert_map_matches_index(record);
    }
}

#[test]
fn rule_types_exist_in_their_grammar() {
    for rule in rules().rules() {
        let language = grammars().language(rule.language);
        assert_ne!(
            language.id_for_node_kind(&rule.node_type, true),
            0,
            "{} has no named type {}",
            rule.language,
            rule.node_type
        );
    }
}

#[test]
fn keyword_flags_match_grammar_tokens() {
    for rule in rules().rules() {
        let language = grammars().language(rule.language);
        let token = language.id_for_node_kind(&rule.node_type, false) != 0;
        assert_eq!(rule.keyword, token, "{} {}", rule.language, rule.node_type);
    }
}

#[test]
fn keyword_literals_are_still_indexed() {
    let r = build(LanguageId::Ruby, "k.rb", "x = nil\nreturn\n");
    let table = oracle_table();
    assert_equivalent("x = nil\nreturn\n", &r, &table);
}

#[test]
fn desk_coverage_floor() {
    let mut totals: BTreeMap<LanguageId, (usize, usize)> = BTreeMap::new();
    for (_, r) in desk() {
        let categorized: BTreeSet<usize> = r.node_categories.iter().flat_map(|(_, _, ids)| ids.iter().copied()).collect();
        let t = totals.entry(r.language).or_default();
        t.0 += categorized.len();
        t.1 += r.nodes.len();
    }
    assert_eq!(totals.len(), 10);
    for (lang, (hit, all)) in totals {
        let share = hit as f64 / all as f64;
        assert!(share >= 0.30, "{lang}: {share:.3}");
    }
}

#[test]
fn lookup_examples() {
    let t = rules();
    assert_eq!(
        t.universal_category_of(LanguageId::Python, "function_definition"),
        Some((Category::Declarations, "functions"))
    );
    assert_eq!(
        t.universal_category_of(LanguageId::Java, "for_statement"),
        Some((Category::Statements, "loops"))
    );
    assert_eq!(t.universal_category_of(LanguageId::Go, "comment"), None);
    for lang in LanguageId::ALL {
        assert_eq!(t.universal_category_of(lang, "comment"), None, "{lang}");
    }
}

#[test]
fn one_line_function() {
    let r = build(LanguageId::Python, "f.py", "def f(): return 1");
    let of = |kind: &str| r.nodes.iter().filter(|n| n.kind == kind).map(|n| n.id).collect::<Vec<_>>();
    let c = &r.node_categories;
    assert_eq!(c.get(Category::Declarations, "functions").unwrap(), &of("function_definition"));
    assert_eq!(c.get(Category::Statements, "returns").unwrap(), &of("return_statement"));
    assert_eq!(of("function_definition").len(), 1);
}

#[test]
fn two_top_level_functions() {
    let r = build(LanguageId::Python, "f.py", "def a():\n    pass\n\ndef b():\n    return 2\n");
    assert_eq!(r.node_categories.get(Category::Declarations, "functions").unwrap().len(), 2);
}

#[test]
fn empty_subcategories_keep_their_slot() {
    let r = build(LanguageId::Go, "e.go", "");
    for category in Category::ALL {
        for sub in category.subcategories() {
            assert_eq!(r.node_categories.get(category, sub), Some(&Vec::new()), "{sub}");
        }
    }
}

#[test]
fn select_touches_only_listed_nodes() {
    for (_, r) in desk().iter().step_by(25) {
        let mut touched = Vec::new();
        let found = select(&r.node_categories, Category::Declarations, "functions", |id| {
            touched.push(id);
            r.nodes.get(id)
        });
        let listed = r.node_categories.get(Category::Declarations, "functions").unwrap();
        assert_eq!(&touched, listed);
        assert_eq!(found.iter().map(|n| n.id).collect::<Vec<_>>(), *listed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generated_index_equals_brute_force((lang, src) in source_strategy()) {
        let table = oracle_table();
        let r = build(lang, "gen", &src);
        prop_assert_eq!(as_index(&r.node_categories), brute_force(lang, &src, &table));
        assert_map_matches_index(&r);
    }
}
