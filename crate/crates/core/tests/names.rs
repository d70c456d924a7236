mod common;

use std::fs;

use common::{build, corpus_dir, desk};
use uast_core::xmap::extract_name;
use uast_core::{LanguageId, UniversalFileRecord, UniversalType};

fn fixture(rel: &str, lang: LanguageId) -> UniversalFileRecord {
    let text = fs::read_to_string(corpus_dir().join("fixtures").join(rel)).unwrap();
    build(lang, rel, &text)
}

fn entries(r: &UniversalFileRecord) -> Vec<(UniversalType, Option<&str>)> {
    r.cross_language_map
        .entries()
        .map(|e| (e.universal_type, e.name.as_deref()))
        .collect()
}

#[test]
fn python_pair_reproduces_function_and_class() {
    let r = fixture("names/calculate_sum.py", LanguageId::Python);
    assert_eq!(
        entries(&r),
        [
            (UniversalType::Function, Some("calculate_sum")),
            (UniversalType::Class, Some("DataProcessor")),
        ]
    );
    let f = &r.cross_language_map.function_declarations[0];
    assert!(f.text_snippet.starts_with("def calculate_sum(a, b):"));
    assert_eq!(r.nodes[f.node_id].kind, "function_definition");
}

#[test]
fn java_pair_reproduces_function_and_class() {
    let r = fixture("names/DataProcessor.java", LanguageId::Java);
    let mut got = entries(&r);
    got.sort();
    assert_eq!(
        got,
        [
            (UniversalType::Function, Some("calculate_sum")),
            (UniversalType::Class, Some("DataProcessor")),
        ]
    );
}

#[test]
fn equivalent_pairs_align_on_universal_types() {
    for (py, java) in [
        ("names/calculate_sum.py", "names/DataProcessor.java"),
        ("age_check/age_check.py", "age_check/AgeCheck.java"),
    ] {
        let a = fixture(py, LanguageId::Python);
        let b = fixture(java, LanguageId::Java);
        let types = |r: &UniversalFileRecord| {
            let mut t: Vec<UniversalType> = r.cross_language_map.entries().map(|e| e.universal_type).collect();
            t.sort();
            t
        };
        assert_eq!(types(&a), types(&b), "{py} vs {java}");
    }
}

#[test]
fn age_check_has_one_function_each_with_equal_names() {
    let a = fixture("age_check/age_check.py", LanguageId::Python);
    let b = fixture("age_check/AgeCheck.java", LanguageId::Java);
    for r in [&a, &b] {
        assert_eq!(r.metadata.errors, 0);
        assert_eq!(r.cross_language_map.function_declarations.len(), 1);
        assert_eq!(r.cross_language_map.function_declarations[0].universal_type, UniversalType::Function);
    }
    assert_eq!(
        a.cross_language_map.function_declarations[0].name,
        b.cross_language_map.function_declarations[0].name
    );
}

#[test]
fn anonymous_constructs_have_no_name() {
    let r = build(LanguageId::JavaScript, "a.js", "const g = (x) => x + 1;\n");
    let arrow = &r.cross_language_map.function_declarations;
    assert_eq!(arrow.len(), 1);
    assert_eq!(r.nodes[arrow[0].node_id].kind, "arrow_function");
    assert_eq!(arrow[0].name, None);

    let r = build(LanguageId::Python, "l.py", "f = lambda x: x\n");
    assert_eq!(r.cross_language_map.function_declarations.len(), 1);
    assert_eq!(r.cross_language_map.function_declarations[0].name, None);
}

#[test]
fn one_declaration_per_language() {
    let cases = [
        (LanguageId::C, "int add(int a, int b) { return a + b; }\n", "add"),
        (LanguageId::Cpp, "int Holder::get() const { return v; }\n", "get"),
        (LanguageId::CSharp, "class A { int Twice(int x) { return 2 * x; } }\n", "Twice"),
        (LanguageId::Go, "package p\nfunc (s *S) Run() {}\n", "Run"),
        (LanguageId::Java, "class A { void run() {} }\n", "run"),
        (LanguageId::JavaScript, "function go() {}\n", "go"),
        (LanguageId::Python, "async def fetch():\n    pass\n", "fetch"),
        (LanguageId::Ruby, "def self.build\nend\n", "build"),
        (LanguageId::Scala, "object O { def f(x: Int): Int = x }\n", "f"),
        (LanguageId::TypeScript, "function id<T>(x: T): T { return x; }\n", "id"),
    ];
    for (lang, src, name) in cases {
        let r = build(lang, "one", src);
        let names: Vec<_> = r
            .cross_language_map
            .function_declarations
            .iter()
            .map(|e| e.name.as_deref())
            .collect();
        assert_eq!(names, [Some(name)], "{lang}");
    }
}

#[test]
fn no_declarations_gives_empty_map() {
    let r = build(LanguageId::Python, "x.py", "x = 1\nprint(x)\n");
    assert!(r.cross_language_map.function_declarations.is_empty());
    assert!(r.cross_language_map.class_declarations.is_empty());
}

#[test]
fn desk_names_match_a_textual_reading() {
    // Every named desk entry's name occurs verbatim in its snippet or node text.
    let mut named = 0;
    let mut total = 0;
    for (_, r) in desk() {
        for e in r.cross_language_map.entries() {
            total += 1;
            let node = &r.nodes[e.node_id];
            assert_eq!(extract_name(node, &r.nodes, r.language), e.name);
            if let Some(name) = &e.name {
                named += 1;
                assert!(node.text.contains(name.as_str()), "{}: {name}", r.path);
                assert!(name.chars().all(|c| c.is_alphanumeric() || c == '_' || "?!=<>+-*/[]%&|^~".contains(c)), "{name}");
            }
        }
    }
    assert!(total > 0);
    assert!(named as f64 / total as f64 > 0.8, "{named}/{total}");
}
