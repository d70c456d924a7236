#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use proptest::prelude::*;
use uast_core::ingest::{preprocess, scan_corpus, IngestOptions, Manifest};
use uast_core::{GrammarBundle, LanguageId, RecordBuilder, RuleTable, UniversalFileRecord};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn grammars() -> &'static GrammarBundle {
    static G: OnceLock<GrammarBundle> = OnceLock::new();
    G.get_or_init(|| GrammarBundle::builtin().unwrap())
}

pub fn rules() -> &'static RuleTable {
    static R: OnceLock<RuleTable> = OnceLock::new();
    R.get_or_init(RuleTable::builtin)
}

pub fn build(lang: LanguageId, path: &str, src: &str) -> UniversalFileRecord {
    RecordBuilder::new(grammars(), rules()).build(lang, path, src).unwrap()
}

/// Sources accepted from the desk corpus, paired with their records.
pub fn desk() -> &'static [(String, UniversalFileRecord)] {
    static D: OnceLock<Vec<(String, UniversalFileRecord)>> = OnceLock::new();
    D.get_or_init(|| {
        let root = corpus_dir().join("desk");
        let manifest = Manifest::load(&root.join("MANIFEST.tsv")).unwrap();
        let scan = scan_corpus(&root, Some(&manifest)).unwrap();
        let outcome = preprocess(scan, IngestOptions::default());
        outcome
            .accepted
            .into_iter()
            .map(|f| {
                let r = build(f.language, &f.path, &f.text);
                (f.text, r)
            })
            .collect()
    })
}

pub fn desk_records() -> Vec<UniversalFileRecord> {
    desk().iter().map(|(_, r)| r.clone()).collect()
}

pub fn fragments(language: LanguageId) -> &'static [&'static str] {
    use LanguageId::*;
    match language {
        C => &["int f(int a) { return a + 1; }\n", "struct s { int x; };\n", "int g = 3;\n", "for (;;) {}\n", "/* c */\n"],
        Cpp => &["namespace n { int f() { return 1; } }\n", "class A { public: void m(); };\n", "template <typename T> T id(T x) { return x; }\n", "int x = 2;\n"],
        CSharp => &["class A { int F() { return 1; } }\n", "namespace N { interface I {} }\n", "using System;\n", "struct S { }\n"],
        Go => &["package p\n", "func f() int { return 1 }\n", "type T struct{}\n", "var x = \"ü\"\n", "func (t T) m() {}\n"],
        Java => &["class A { int f() { return 1; } }\n", "interface I {}\n", "class B { void g() { x = 2; } }\n", "{\n"],
        JavaScript => &["function f(a) { return a * 2; }\n", "class K { m() {} }\n", "const g = (x) => x + 1;\n", "if (a) { b(); }\n"],
        Python => &["def f(a):\n    return a\n", "x = 1\n", "class K:\n    pass\n", "if x:\n    y = 'é'\n", "(\n", "lambda: 0\n"],
        Ruby => &["def f(a)\n  a\nend\n", "class K\nend\n", "x = nil\n", "puts 1\n", "module M; end\n"],
        Scala => &["object O { def f(x: Int): Int = x }\n", "class C(val a: Int)\n", "val y = 2\n", "trait T\n"],
        TypeScript => &["function f(a: number): number { return a; }\n", "class K { x: string = \"\"; }\n", "interface I { a: number }\n", "let n: number = 1;\n"],
    }
}

/// Concatenations of per-language fragments (some malformed) plus a random tail.
pub fn source_strategy() -> impl Strategy<Value = (LanguageId, String)> {
    prop::sample::select(LanguageId::ALL.to_vec()).prop_flat_map(|lang| {
        let frags = fragments(lang);
        (
            Just(lang),
            prop::collection::vec(0..frags.len(), 0..6),
            "[a-z(){};= \n]{0,12}",
        )
            .prop_map(move |(lang, picks, tail)| {
                let mut src: String = picks.iter().map(|&i| frags[i]).collect();
                src.push_str(&tail);
                (lang, src)
            })
    })
}
