use std::collections::BTreeMap;
use std::fs;

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;
use uast_core::{validate_record, GrammarBundle, LanguageId, RecordBuilder, RuleTable, UniversalFileRecord};
use uast_store::{
    decode_shard, encode_shard, encode_shard_with, footprint_report, shard_path, EncodeOptions, ShardNaming,
    StoreError,
};

fn fragments(language: LanguageId) -> &'static [&'static str] {
    match language {
        LanguageId::Python => &["def f(a):\n    return a\n", "x = 1\n", "class K:\n    pass\n", "if x:\n    y = 'é'\n", "(\n"],
        LanguageId::Java => &["class A { int f() { return 1; } }\n", "interface I {}\n", "class B { void g() { x = 2; } }\n", "{\n"],
        LanguageId::Go => &["package p\n", "func f() int { return 1 }\n", "type T struct{}\n", "var x = \"ü\"\n"],
        LanguageId::Ruby => &["def f(a)\n  a\nend\n", "class K\nend\n", "x = nil\n", "puts 1\n"],
        _ => &["int f(void) { return 0; }\n", "/* c */\n", "int x = 3;\n"],
    }
}

fn record_strategy() -> impl Strategy<Value = (LanguageId, String)> {
    prop_oneof![
        Just(LanguageId::Python),
        Just(LanguageId::Java),
        Just(LanguageId::Go),
        Just(LanguageId::Ruby),
        Just(LanguageId::C),
    ]
    .prop_flat_map(|lang| {
        let frags = fragments(lang);
        (
            Just(lang),
            prop::collection::vec(0..frags.len(), 0..8),
            "[a-z]{0,6}",
        )
            .prop_map(move |(lang, picks, tail)| {
                let mut src: String = picks.iter().map(|&i| frags[i]).collect();
                src.push_str(&tail);
                (lang, src)
            })
    })
}

struct Env {
    grammars: GrammarBundle,
    rules: RuleTable,
}

impl Env {
    fn new() -> Self {
        Env {
            grammars: GrammarBundle::builtin().unwrap(),
            rules: RuleTable::builtin(),
        }
    }

    fn build(&self, lang: LanguageId, path: &str, src: &str) -> UniversalFileRecord {
        RecordBuilder::new(&self.grammars, &self.rules).build(lang, path, src).unwrap()
    }
}

fn generate(env: &Env, count: usize) -> Vec<UniversalFileRecord> {
    let mut runner = TestRunner::deterministic();
    let strategy = record_strategy();
    (0..count)
        .map(|i| {
            let (lang, src) = strategy.new_tree(&mut runner).unwrap().current();
            env.build(lang, &format!("gen/{i:04}.{}", lang.slug()), &src)
        })
        .collect()
}

fn by_language(records: Vec<UniversalFileRecord>) -> BTreeMap<LanguageId, Vec<UniversalFileRecord>> {
    let mut out: BTreeMap<LanguageId, Vec<UniversalFileRecord>> = BTreeMap::new();
    for r in records {
        out.entry(r.language).or_default().push(r);
    }
    out
}

#[test]
fn thousand_generated_records_round_trip() {
    let env = Env::new();
    let records = generate(&env, 1000);
    let dir = tempfile::tempdir().unwrap();
    let mut total = 0;
    for (lang, mut group) in by_language(records) {
        let path = shard_path(dir.path(), lang, ShardNaming::Slug);
        let shard = encode_shard(lang, &group, &path).unwrap();
        let decoded = decode_shard(&path).unwrap();
        assert!(decoded.warnings.is_empty());
        group.sort_by(|a, b| a.path.cmp(&b.path));
        assert_eq!(decoded.shard.records, group);
        assert_eq!(decoded.shard, shard);
        for r in &decoded.shard.records {
            validate_record(r).unwrap();
        }
        total += group.len();
    }
    assert_eq!(total, 1000);
}

#[test]
fn re_encoding_is_byte_identical() {
    let env = Env::new();
    let records: Vec<_> = generate(&env, 200).into_iter().filter(|r| r.language == LanguageId::Python).collect();
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.parquet");
    let b = dir.path().join("b.parquet");
    encode_shard(LanguageId::Python, &records, &a).unwrap();
    let decoded = decode_shard(&a).unwrap();
    let mut reversed = decoded.shard.records.clone();
    reversed.reverse();
    encode_shard(LanguageId::Python, &reversed, &b).unwrap();
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn empty_shard_has_full_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("go.parquet");
    let shard = encode_shard(LanguageId::Go, &[], &path).unwrap();
    assert!(shard.records.is_empty());
    assert!(shard.on_disk_bytes > 0);
    let decoded = decode_shard(&path).unwrap();
    assert_eq!(decoded.shard.language, LanguageId::Go);
    assert!(decoded.shard.records.is_empty());
}

#[test]
fn single_record_round_trips() {
    let env = Env::new();
    let r = env.build(LanguageId::Python, "one.py", "x = 1\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("python.parquet");
    encode_shard(LanguageId::Python, std::slice::from_ref(&r), &path).unwrap();
    assert_eq!(decode_shard(&path).unwrap().shard.records, vec![r]);
}

#[test]
fn truncated_file_is_an_error() {
    let env = Env::new();
    let records = generate(&env, 30);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.parquet");
    let c: Vec<_> = records.into_iter().filter(|r| r.language == LanguageId::C).collect();
    encode_shard(LanguageId::C, &c, &path).unwrap();
    let bytes = fs::read(&path).unwrap();
    for cut in [bytes.len() / 2, bytes.len() - 1, 10] {
        fs::write(&path, &bytes[..cut]).unwrap();
        assert!(decode_shard(&path).is_err(), "cut at {cut}");
    }
}

#[test]
fn corrupt_json_names_column_and_row() {
    use std::sync::Arc;

    use arrow_array::{ArrayRef, Float64Array, RecordBatch, StringArray, UInt64Array};
    use parquet::arrow::ArrowWriter;
    use parquet::file::metadata::KeyValue;
    use parquet::file::properties::WriterProperties;

    let env = Env::new();
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.parquet");
    let a = env.build(LanguageId::Python, "a.py", "x = 1\n");
    let b = env.build(LanguageId::Python, "b.py", "y = 2\n");
    encode_shard(LanguageId::Python, &[a.clone(), b.clone()], &good).unwrap();
    let schema = parquet::arrow::arrow_reader::ParquetRecordBatchReaderBuilder::try_new(fs::File::open(&good).unwrap())
        .unwrap()
        .schema()
        .clone();

    let s = |v: [&str; 2]| -> ArrayRef { Arc::new(StringArray::from(v.to_vec())) };
    let u = |v: [u64; 2]| -> ArrayRef { Arc::new(UInt64Array::from(v.to_vec())) };
    let nodes = |r: &UniversalFileRecord| serde_json::to_string(&r.nodes).unwrap();
    let cats = |r: &UniversalFileRecord| serde_json::to_string(&r.node_categories).unwrap();
    let map = |r: &UniversalFileRecord| serde_json::to_string(&r.cross_language_map).unwrap();
    let (na, ca, ma) = (nodes(&a), cats(&a), map(&a));
    let (cb, mb) = (cats(&b), map(&b));
    let columns = vec![
        s(["a.py", "b.py"]),
        s(["Python", "Python"]),
        u([1, 1]),
        Arc::new(Float64Array::from(vec![5.0, 5.0])) as ArrayRef,
        u([5, 5]),
        u([0, 0]),
        s([&a.metadata.source_hash, &b.metadata.source_hash]),
        s([&na, "{\"not\": \"an array\"}"]),
        s([&ca, &cb]),
        s([&ma, &mb]),
        s(["1.0", "1.0"]),
    ];
    let batch = RecordBatch::try_new(schema.clone(), columns).unwrap();
    let props = WriterProperties::builder()
        .set_key_value_metadata(Some(vec![
            KeyValue::new("uast.language".into(), "Python".to_string()),
            KeyValue::new("uast.grammar_bundle".into(), uast_core::BUNDLE_VERSION.to_string()),
            KeyValue::new("uast.schema_version".into(), "1.0".to_string()),
        ]))
        .build();
    let bad = dir.path().join("bad.parquet");
    let mut w = ArrowWriter::try_new(fs::File::create(&bad).unwrap(), schema, Some(props)).unwrap();
    w.write(&batch).unwrap();
    w.close().unwrap();

    match decode_shard(&bad).unwrap_err() {
        StoreError::Corrupt { column, row, .. } => {
            assert_eq!(column, "nodes_json");
            assert_eq!(row, 1);
        }
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn foreign_parquet_is_a_schema_error() {
    use std::sync::Arc;

    use arrow_array::{ArrayRef, RecordBatch, StringArray};
    use arrow_schema::{DataType, Field, Schema};
    use parquet::arrow::ArrowWriter;
    use parquet::file::metadata::KeyValue;
    use parquet::file::properties::WriterProperties;

    let schema = Arc::new(Schema::new(vec![Field::new("path", DataType::Utf8, false)]));
    let batch = RecordBatch::try_new(
        schema.clone(),
        vec![Arc::new(StringArray::from(vec!["a.py"])) as ArrayRef],
    )
    .unwrap();
    let props = WriterProperties::builder()
        .set_key_value_metadata(Some(vec![
            KeyValue::new("uast.language".into(), "Python".to_string()),
            KeyValue::new("uast.grammar_bundle".into(), "x".to_string()),
            KeyValue::new("uast.schema_version".into(), "1.0".to_string()),
        ]))
        .build();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("foreign.parquet");
    let mut w = ArrowWriter::try_new(fs::File::create(&path).unwrap(), schema, Some(props)).unwrap();
    w.write(&batch).unwrap();
    w.close().unwrap();
    match decode_shard(&path).unwrap_err() {
        StoreError::Schema { column, .. } => assert_eq!(column, "language"),
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn grammar_version_mismatch_is_a_warning() {
    let env = Env::new();
    let r = env.build(LanguageId::Python, "a.py", "x = 1\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("python.parquet");
    let options = EncodeOptions {
        grammar_version: "tree-sitter 0.20.0".into(),
    };
    encode_shard_with(LanguageId::Python, std::slice::from_ref(&r), &path, &options).unwrap();
    let decoded = decode_shard(&path).unwrap();
    assert_eq!(decoded.shard.records, vec![r]);
    assert_eq!(decoded.warnings.len(), 1);
    assert!(decoded.warnings[0].contains("tree-sitter 0.20.0"));
}

#[test]
fn mixed_languages_rejected() {
    let env = Env::new();
    let r = env.build(LanguageId::Go, "a.go", "package p\n");
    let dir = tempfile::tempdir().unwrap();
    let err = encode_shard(LanguageId::Python, &[r], &dir.path().join("x.parquet")).unwrap_err();
    assert!(matches!(err, StoreError::MixedLanguages { .. }));
}

#[test]
fn missing_file_is_io_error() {
    let err = decode_shard(std::path::Path::new("/nonexistent/x.parquet")).unwrap_err();
    assert!(matches!(err, StoreError::Io { .. }));
}

#[test]
fn no_temp_file_left_behind() {
    let dir = tempfile::tempdir().unwrap();
    encode_shard(LanguageId::Go, &[], &dir.path().join("go.parquet")).unwrap();
    let names: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert_eq!(names, vec!["go.parquet"]);
}

#[test]
fn shard_naming() {
    let dir = std::path::Path::new("out");
    assert_eq!(shard_path(dir, LanguageId::Cpp, ShardNaming::Slug), dir.join("cpp.parquet"));
    assert_eq!(shard_path(dir, LanguageId::CSharp, ShardNaming::Name), dir.join("C#.parquet"));
    assert_eq!("name".parse::<ShardNaming>().unwrap(), ShardNaming::Name);
    assert!("camel".parse::<ShardNaming>().is_err());
}

#[test]
fn footprints() {
    assert!(footprint_report(&[]).languages.is_empty());
    assert!(footprint_report(&[]).total.is_none());

    let env = Env::new();
    let dir = tempfile::tempdir().unwrap();
    let records = generate(&env, 100);
    let mut shards = Vec::new();
    for (lang, group) in by_language(records) {
        shards.push(encode_shard(lang, &group, &shard_path(dir.path(), lang, ShardNaming::Slug)).unwrap());
    }
    let report = footprint_report(&shards);
    assert_eq!(report.languages.len(), shards.len());
    for f in report.languages.values() {
        assert!(f.ratio > 0.0);
        assert_eq!(f.ratio, f.memory_bytes as f64 / f.disk_bytes as f64);
    }
    let total = report.total.unwrap();
    assert_eq!(total.disk_bytes, shards.iter().map(|s| s.on_disk_bytes).sum::<u64>());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn round_trip_law(sources in prop::collection::vec(record_strategy(), 0..12)) {
        let env = Env::new();
        let dir = tempfile::tempdir().unwrap();
        let records: Vec<_> = sources
            .iter()
            .enumerate()
            .map(|(i, (lang, src))| env.build(*lang, &format!("p{i}"), src))
            .collect();
        for (lang, mut group) in by_language(records) {
            let path = dir.path().join(format!("{}.parquet", lang.slug()));
            encode_shard(lang, &group, &path).unwrap();
            group.sort_by(|a, b| a.path.cmp(&b.path));
            prop_assert_eq!(decode_shard(&path).unwrap().shard.records, group);
        }
    }
}
