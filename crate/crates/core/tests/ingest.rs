mod common;

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use proptest::prelude::*;
use uast_core::ingest::{
    dedup, filter_by_size, normalize_text, preprocess, quartiles, scan_corpus, FilterReason, IngestOptions,
    Manifest, PreprocessedFile, RawFile, SkipReason,
};
use uast_core::schema::source_hash;
use uast_core::LanguageId;

fn write(root: &Path, rel: &str, text: &str) {
    let p = root.join(rel);
    fs::create_dir_all(p.parent().unwrap()).unwrap();
    fs::write(p, text).unwrap();
}

fn file(path: &str, language: LanguageId, lines: usize) -> PreprocessedFile {
    let text: String = (0..lines).map(|i| format!("x{i} = {i}\n")).collect();
    PreprocessedFile {
        path: path.into(),
        language,
        line_count: lines,
        original_byte_count: text.len(),
        text,
    }
}

#[test]
fn empty_directory_scans_to_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let scan = scan_corpus(dir.path(), None).unwrap();
    assert!(scan.files.is_empty());
    assert!(scan.skipped.is_empty());
}

#[test]
fn unsupported_extensions_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.py", "x = 1\n");
    write(dir.path(), "b.java", "class B {}\n");
    write(dir.path(), "notes.txt", "hello\n");
    let scan = scan_corpus(dir.path(), None).unwrap();
    let got: Vec<(&str, LanguageId)> = scan.files.iter().map(|f| (f.path.as_str(), f.language)).collect();
    assert_eq!(got, [("a.py", LanguageId::Python), ("b.java", LanguageId::Java)]);
}

#[test]
fn missing_root_is_fatal() {
    let dir = tempfile::tempdir().unwrap();
    assert!(scan_corpus(&dir.path().join("absent"), None).is_err());
}

#[test]
fn license_allowlist_drops_three_of_thirty() {
    let dir = tempfile::tempdir().unwrap();
    let exts = ["py", "java", "go"];
    let licenses = ["MIT", "Apache-2.0", "BSD"];
    let gpl = [4usize, 15, 27];
    let mut manifest = String::new();
    for i in 0..30 {
        let ext = exts[i / 10];
        let rel = format!("src/f{i:02}.{ext}");
        write(dir.path(), &rel, "x\n");
        let license = if gpl.contains(&i) { "GPL-3.0" } else { licenses[i % 3] };
        let lang = ["Python", "Java", "Go"][i / 10];
        manifest.push_str(&format!("{rel}\t{lang}\t{license}\n"));
    }
    let manifest = Manifest::parse(&manifest, Path::new("MANIFEST.tsv")).unwrap();
    let scan = scan_corpus(dir.path(), Some(&manifest)).unwrap();
    assert_eq!(scan.files.len(), 27);
    let skipped: Vec<&str> = scan.skipped.iter().map(|s| s.path.as_str()).collect();
    assert_eq!(skipped, ["src/f04.py", "src/f15.java", "src/f27.go"]);
    assert!(scan.skipped.iter().all(|s| s.reason == SkipReason::License("GPL-3.0".into())));
    let mut sorted: Vec<&str> = scan.files.iter().map(|f| f.path.as_str()).collect();
    sorted.sort();
    assert_eq!(sorted, scan.files.iter().map(|f| f.path.as_str()).collect::<Vec<_>>());
}

#[test]
fn manifest_declaration_overrides_extension() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "lib.h", "int f(void);\n");
    write(dir.path(), "other.h", "int g(void);\n");
    let manifest = Manifest::parse("lib.h\tC\tMIT\n", Path::new("m")).unwrap();
    let scan = scan_corpus(dir.path(), Some(&manifest)).unwrap();
    let got: Vec<LanguageId> = scan.files.iter().map(|f| f.language).collect();
    assert_eq!(got, [LanguageId::C, LanguageId::Cpp]);
}

fn raw(bytes: &[u8]) -> RawFile {
    RawFile {
        path: "f.py".into(),
        language: LanguageId::Python,
        bytes: bytes.to_vec(),
        license_tag: None,
    }
}

#[test]
fn normalization_examples() {
    let bom = normalize_text(&raw(b"\xEF\xBB\xBFx = 1\n")).unwrap();
    assert_eq!((bom.text.as_str(), bom.line_count), ("x = 1\n", 1));
    let crlf = normalize_text(&raw(b"a\r\nb\r\n")).unwrap();
    assert_eq!((crlf.text.as_str(), crlf.line_count), ("a\nb\n", 2));
    let tab = normalize_text(&raw(b"def f():\n\treturn 1 \n")).unwrap();
    assert_eq!(tab.text, "def f():\n\treturn 1\n");
    assert!(normalize_text(&raw(b"\x7fELF\x00\x01")).is_err());
    assert!(normalize_text(&raw(b"caf\xe9\n")).is_err());
}

/// Quartiles at rank p(n+1), computed exactly in quarters over integers.
fn quarter_quartiles(values: &[u64]) -> (u64, u64) {
    let mut v = values.to_vec();
    v.sort_unstable();
    let n = v.len() as u64;
    let at = |quarters: u64| -> u64 {
        // rank in quarters: quarters*(n+1)/4 ranks, scaled by 4
        let rank4 = quarters * (n + 1);
        if rank4 <= 4 {
            return 4 * v[0];
        }
        if rank4 >= 4 * n {
            return 4 * v[(n - 1) as usize];
        }
        let lo = (rank4 / 4) as usize;
        let frac = rank4 % 4;
        4 * v[lo - 1] + frac * (v[lo] - v[lo - 1])
    };
    (at(1), at(3))
}

#[test]
fn skewed_bucket_quartiles_and_fences() {
    let (q1, q3) = quartiles(&[20.0, 22.0, 24.0, 26.0, 500.0]).unwrap();
    assert_eq!((q1, q3), (21.0, 263.0));
    assert_eq!(quarter_quartiles(&[20, 22, 24, 26, 500]), (84, 1052));
    let iqr = q3 - q1;
    assert_eq!((q1 - 1.5 * iqr, q3 + 1.5 * iqr), (-342.0, 626.0));
    let files: Vec<_> = [20, 22, 24, 26, 500]
        .iter()
        .enumerate()
        .map(|(i, &n)| file(&format!("f{i}.py"), LanguageId::Python, n))
        .collect();
    assert!(filter_by_size(&files, true).iter().all(|d| d.accepted));
}

#[test]
fn hard_bounds() {
    let files = [file("a.py", LanguageId::Python, 5), file("b.py", LanguageId::Python, 10_001)];
    let reasons: Vec<FilterReason> = filter_by_size(&files, false).iter().map(|d| d.reason).collect();
    assert_eq!(reasons, [FilterReason::TooShort, FilterReason::TooLong]);
}

#[test]
fn ten_files_three_plus_two_shared() {
    let mut files = Vec::new();
    for i in 0..10 {
        let mut f = file(&format!("f{i}.py"), LanguageId::Python, 12);
        match i {
            0..=2 => f.text = "A\n".into(),
            3..=4 => f.text = "B\n".into(),
            _ => f.text.push_str(&format!("# {i}\n")),
        }
        files.push(f);
    }
    let (unique, dropped) = dedup(files);
    assert_eq!(unique.len(), 7);
    assert_eq!(dropped.len(), 3);
    let kept: Vec<&str> = unique.iter().map(|f| f.path.as_str()).collect();
    assert!(kept.contains(&"f0.py") && kept.contains(&"f3.py"));
    assert!(dropped.iter().all(|d| d.reason == FilterReason::Duplicate && !d.accepted));
}

#[test]
fn desk_preprocessing_is_deterministic() {
    let root = common::corpus_dir().join("desk");
    let manifest = Manifest::load(&root.join("MANIFEST.tsv")).unwrap();
    let run = || preprocess(scan_corpus(&root, Some(&manifest)).unwrap(), IngestOptions::default());
    let (a, b) = (run(), run());
    assert_eq!(a.decisions, b.decisions);
    assert_eq!(a.accepted, b.accepted);
    assert_eq!(a.decisions.len(), 500);
    let mut paths: Vec<&str> = a.decisions.iter().map(|d| d.path.as_str()).collect();
    paths.sort();
    assert_eq!(paths, a.decisions.iter().map(|d| d.path.as_str()).collect::<Vec<_>>());
}

fn line_strategy() -> impl Strategy<Value = String> {
    prop::collection::vec(
        prop_oneof![
            Just("\r\n".to_string()),
            Just("\n".to_string()),
            Just("\r".to_string()),
            Just("\t".to_string()),
            Just(" ".to_string()),
            Just("\u{FEFF}".to_string()),
            Just("\u{7}".to_string()),
            Just("\u{a0}".to_string()),
            "[a-zé(){}:=]{1,4}",
        ],
        0..40,
    )
    .prop_map(|parts| parts.concat())
}

proptest! {
    #[test]
    fn normalization_is_idempotent(text in line_strategy()) {
        let once = normalize_text(&raw(text.as_bytes())).unwrap();
        let twice = normalize_text(&raw(once.text.as_bytes())).unwrap();
        prop_assert_eq!(&once.text, &twice.text);
        let clean = !once.text.contains('\r') && !once.text.contains('\u{FEFF}');
        prop_assert!(clean);
        prop_assert!(once.text.chars().all(|c| c == '\n' || c == '\t' || !c.is_control()));
        prop_assert!(once.text.split('\n').all(|l| l == l.trim_end()));
        prop_assert_eq!(once.line_count, once.text.lines().count());
    }

    #[test]
    fn quartiles_match_exact_oracle(values in prop::collection::vec(0u64..20_000, 1..40)) {
        let floats: Vec<f64> = values.iter().map(|&v| v as f64).collect();
        let (q1, q3) = quartiles(&floats).unwrap();
        let (e1, e3) = quarter_quartiles(&values);
        prop_assert_eq!((q1 * 4.0, q3 * 4.0), (e1 as f64, e3 as f64));
    }

    #[test]
    fn accepted_files_respect_bounds(
        buckets in prop::collection::vec((0usize..3, 0usize..12_000), 0..40),
        iqr in any::<bool>(),
    ) {
        let langs = [LanguageId::Go, LanguageId::Ruby, LanguageId::C];
        let files: Vec<_> = buckets
            .iter()
            .enumerate()
            .map(|(i, &(l, n))| PreprocessedFile {
                path: format!("f{i:03}"),
                language: langs[l],
                text: String::new(),
                line_count: n,
                original_byte_count: 0,
            })
            .collect();
        let decisions = filter_by_size(&files, iqr);
        prop_assert_eq!(decisions.len(), files.len());
        for (f, d) in files.iter().zip(&decisions) {
            prop_assert_eq!(d.accepted, d.reason == FilterReason::Accepted);
            prop_assert_eq!(&d.path, &f.path);
            if d.accepted {
                prop_assert!((10..=10_000).contains(&f.line_count));
            }
        }
    }

    #[test]
    fn dedup_leaves_distinct_digests(texts in prop::collection::vec(0u8..6, 0..30)) {
        let files: Vec<_> = texts
            .iter()
            .enumerate()
            .map(|(i, &t)| {
                let mut f = file(&format!("p{i:02}"), LanguageId::Python, 10);
                f.text = format!("content {t}\n");
                f
            })
            .collect();
        let distinct: HashSet<u8> = texts.iter().copied().collect();
        let (unique, dropped) = dedup(files);
        let digests: HashSet<String> = unique.iter().map(|f| source_hash(&f.text)).collect();
        prop_assert_eq!(digests.len(), unique.len());
        prop_assert_eq!(unique.len(), distinct.len());
        prop_assert_eq!(unique.len() + dropped.len(), texts.len());
    }
}
