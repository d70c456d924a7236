use std::fs;
use std::path::{Path, PathBuf};

use uast_cli::commands::{cmd_export, cmd_pca, cmd_similarity, cmd_stats, cmd_validate, export_jsonl, ExportFormat};
use uast_cli::pipeline::{cmd_parse, FailureReason, RunConfig, RunReport, RUN_REPORT};
use uast_cli::CliError;
use uast_core::{GrammarBundle, LanguageId, RecordBuilder, RuleTable};
use uast_store::{decode_shard, encode_shard};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn desk_config(out: &Path) -> RunConfig {
    let mut c = RunConfig::new(corpus("desk"), out);
    c.manifest = Some(corpus("desk/MANIFEST.tsv"));
    c
}

fn check_arithmetic(report: &RunReport) {
    let mut attempted = 0;
    for counts in report.languages.values() {
        assert_eq!(counts.attempted, counts.succeeded + counts.failed);
        assert_eq!(counts.failed, counts.failures.values().sum::<usize>());
        attempted += counts.attempted;
    }
    assert_eq!(report.total.attempted, attempted);
    assert_eq!(report.total.attempted, report.total.succeeded + report.total.failed);
    assert_eq!(report.failures.len(), report.total.failed);
    if let Some(rate) = report.total.success_rate {
        assert_eq!(rate, report.total.succeeded as f64 / report.total.attempted as f64);
    }
}

#[test]
fn desk_run_is_clean() {
    let out = tempfile::tempdir().unwrap();
    let outcome = cmd_parse(&desk_config(out.path())).unwrap();
    let report = &outcome.report;
    check_arithmetic(report);
    assert_eq!(report.total.failed, 0);
    assert_eq!(report.total.success_rate, Some(1.0));
    assert_eq!(report.shards.len(), 10);
    assert_eq!(report.exit_code(), 0);
    assert!(report.grammar_bundle.contains("tree-sitter"));
    assert_eq!(report.rule_checksum.len(), 64);
    let on_disk: Vec<PathBuf> = fs::read_dir(out.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "parquet"))
        .collect();
    assert_eq!(on_disk.len(), 10);
    let written: RunReport = serde_json::from_str(&fs::read_to_string(out.path().join(RUN_REPORT)).unwrap()).unwrap();
    assert_eq!(&written, report);

    let validation = cmd_validate(&[out.path().to_path_buf()]).unwrap();
    assert_eq!(validation.shards, 10);
    assert_eq!(validation.records, report.total.succeeded);
    assert!(validation.violations.is_empty());
    assert_eq!(validation.exit_code(), 0);

    let foot = &outcome.footprint;
    assert_eq!(foot.languages.len(), 10);
    assert!(foot.languages.values().all(|f| f.ratio > 1.0));
    assert!(foot.ratio_spread().unwrap() <= 3.0);
}

#[test]
fn binary_file_is_one_undecodable_failure() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path().join("corpus");
    fs::create_dir(&root).unwrap();
    fs::write(root.join("blob.py"), b"\x7fELF\x02\x01\x01\x00\x00\x00\xff\xfe").unwrap();
    let outcome = cmd_parse(&RunConfig::new(&root, dir.path().join("out"))).unwrap();
    let report = outcome.report;
    check_arithmetic(&report);
    assert_eq!(report.total.attempted, 1);
    assert_eq!(report.failures.len(), 1);
    assert_eq!(report.failures[0].reason, FailureReason::Undecodable);
    assert_eq!(report.exit_code(), 2);
}

#[test]
fn dirty_fixture_keeps_malformed_code() {
    let out = tempfile::tempdir().unwrap();
    let outcome = cmd_parse(&RunConfig::new(corpus("dirty"), out.path())).unwrap();
    let report = &outcome.report;
    check_arithmetic(report);
    assert_eq!((report.total.attempted, report.total.succeeded, report.total.failed), (6, 4, 2));
    assert!(report.failures.iter().all(|f| f.reason == FailureReason::Undecodable));
    assert_eq!(report.exit_code(), 2);
    let records: Vec<_> = outcome.shards.iter().flat_map(|s| s.records.iter()).collect();
    for name in ["broken.py", "broken.js"] {
        let r = records.iter().find(|r| r.path == name).unwrap();
        assert!(r.metadata.errors > 0, "{name}");
    }
    for name in ["clean.py", "clean.go"] {
        let r = records.iter().find(|r| r.path == name).unwrap();
        assert_eq!(r.metadata.errors, 0, "{name}");
    }
}

#[test]
fn output_inside_corpus_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a.py"), "x = 1\n").unwrap();
    let err = cmd_parse(&RunConfig::new(dir.path(), dir.path().join("out"))).unwrap_err();
    assert!(matches!(err, CliError::Config(_)), "{err}");
    assert_eq!(err.exit_code(), 1);
    assert!(!dir.path().join("out").exists());

    let mut missing = RunConfig::new(dir.path(), tempfile::tempdir().unwrap().path().join("o"));
    missing.manifest = Some(dir.path().join("absent.tsv"));
    assert!(matches!(missing.check(), Err(CliError::Config(_))));
}

#[test]
fn language_filter_limits_shards() {
    let out = tempfile::tempdir().unwrap();
    let mut config = desk_config(out.path());
    config.languages = [LanguageId::Go, LanguageId::Scala].into();
    config.workers = 2;
    let report = cmd_parse(&config).unwrap().report;
    let langs: Vec<LanguageId> = report.languages.keys().copied().collect();
    assert_eq!(langs, [LanguageId::Go, LanguageId::Scala]);
    assert_eq!(report.shards.len(), 2);
}

fn small_shard(dir: &Path, sources: &[(&str, &str)]) -> PathBuf {
    let grammars = GrammarBundle::builtin().unwrap();
    let rules = RuleTable::builtin();
    let builder = RecordBuilder::new(&grammars, &rules);
    let records: Vec<_> = sources
        .iter()
        .map(|(p, s)| builder.build(LanguageId::Python, *p, *s).unwrap())
        .collect();
    let path = dir.join("python.parquet");
    encode_shard(LanguageId::Python, &records, &path).unwrap();
    path
}

#[test]
fn validate_flags_corrupted_and_accepts_empty() {
    let dir = tempfile::tempdir().unwrap();
    let good = small_shard(dir.path(), &[("a.py", "x = 1\n"), ("b.py", "def f():\n    return 2\n")]);
    let mut decoded = decode_shard(&good).unwrap().shard.records;
    decoded[1].nodes[2].parent = Some(0);
    decoded[0].metadata.nodes += 1;
    let bad = dir.path().join("bad.parquet");
    encode_shard(LanguageId::Python, &decoded, &bad).unwrap();
    let report = cmd_validate(&[bad]).unwrap();
    assert!(report.violations.len() >= 2, "{report:?}");
    assert!(report.violations.iter().any(|v| v.kind == "metadata.nodes mismatch"));
    assert!(report.violations.iter().any(|v| v.kind == "link integrity"));
    assert_eq!(report.exit_code(), 2);

    let empty = dir.path().join("empty.parquet");
    encode_shard(LanguageId::Ruby, &[], &empty).unwrap();
    let report = cmd_validate(&[empty]).unwrap();
    assert_eq!((report.shards, report.records, report.violations.len()), (1, 0, 0));
}

#[test]
fn export_streams() {
    let dir = tempfile::tempdir().unwrap();
    let shard = small_shard(dir.path(), &[("c.py", "c = 3\n"), ("a.py", "a = 1\n"), ("b.py", "b = 2\n")]);
    let mut sink = Vec::new();
    assert_eq!(export_jsonl(&[shard.clone()], &mut sink).unwrap(), 3);
    let text = String::from_utf8(sink).unwrap();
    assert_eq!(text.lines().count(), 3);
    let decoded = decode_shard(&shard).unwrap().shard.records;
    for (line, record) in text.lines().zip(&decoded) {
        let back: uast_core::UniversalFileRecord = serde_json::from_str(line).unwrap();
        assert_eq!(&back, record);
        assert_eq!(line, serde_json::to_string(record).unwrap());
    }

    let out = dir.path().join("export");
    let files = cmd_export(&[shard.clone()], ExportFormat::Json, &out).unwrap();
    assert_eq!(files.len(), 3);
    assert!(out.join("python/a.py.json").is_file());
    let files = cmd_export(&[shard], ExportFormat::Jsonl, &out).unwrap();
    assert_eq!(fs::read_to_string(&files[0]).unwrap(), text);

    let empty = dir.path().join("empty.parquet");
    encode_shard(LanguageId::Go, &[], &empty).unwrap();
    let mut sink = Vec::new();
    assert_eq!(export_jsonl(&[empty], &mut sink).unwrap(), 0);
    assert!(sink.is_empty());
}

#[test]
fn analytics_files_have_expected_shape() {
    let out = tempfile::tempdir().unwrap();
    let mut config = desk_config(&out.path().join("shards"));
    config.languages = [LanguageId::C, LanguageId::Cpp, LanguageId::Python].into();
    cmd_parse(&config).unwrap();
    let shards = [out.path().join("shards")];
    let dest = out.path().join("analytics");

    let sim = fs::read_to_string(cmd_similarity(&shards, &dest).unwrap()).unwrap();
    let rows: Vec<&str> = sim.lines().collect();
    assert_eq!(rows[0], "language,C,C++,Python");
    assert_eq!(rows.len(), 4);

    let pca = fs::read_to_string(cmd_pca(&shards, &dest, 2).unwrap()).unwrap();
    let rows: Vec<&str> = pca.lines().collect();
    assert_eq!(rows[0], "language,x,y");
    assert_eq!(rows.len(), 5);
    assert!(rows[4].starts_with("explained_variance,"));

    let stats: serde_json::Value = serde_json::from_str(&fs::read_to_string(cmd_stats(&shards, &dest).unwrap()).unwrap()).unwrap();
    let python = &stats["Python"];
    assert_eq!(python["top_node_type"], "identifier");
    assert_eq!(python["file_count"], 50);
    assert!(python["footprint"]["ratio"].as_f64().unwrap() > 1.0);
}
