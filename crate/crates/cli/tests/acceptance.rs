//! End-to-end acceptance checks over the bundled corpora. Prints one
//! PASS/FAIL line per criterion and exits non-zero if any fails.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;
use uast_cli::commands::{cmd_pca, cmd_similarity, cmd_stats};
use uast_cli::pipeline::{cmd_parse, RunConfig, RunOutcome, FOOTPRINT_REPORT, INGEST_REPORT, RUN_REPORT};
use uast_cli::pipeline::RunReport;
use uast_core::analytics::{
    corpus_stats, cosine, node_type_distributions, pca_project, pca_rows, similarity_matrix,
};
use uast_core::ingest::{preprocess, scan_corpus, IngestOptions, Manifest};
use uast_core::{
    validate_record, Category, GrammarBundle, LanguageId, RecordBuilder, RuleTable, UniversalFileRecord,
    UniversalType,
};
use uast_store::{decode_shard, encode_shard};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn corpus(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(rel)
}

struct Ctx {
    grammars: GrammarBundle,
    rules: RuleTable,
    tmp: tempfile::TempDir,
    out: PathBuf,
    run: RunOutcome,
    run_time: Duration,
    /// Preprocessed desk sources by path.
    sources: BTreeMap<String, String>,
}

impl Ctx {
    fn new() -> Ctx {
        let tmp = tempfile::tempdir().unwrap();
        let out = tmp.path().join("run1");
        let started = Instant::now();
        let run = cmd_parse(&desk_config(&out)).unwrap();
        let run_time = started.elapsed();
        let root = corpus("desk");
        let manifest = Manifest::load(&root.join("MANIFEST.tsv")).unwrap();
        let ingest = preprocess(scan_corpus(&root, Some(&manifest)).unwrap(), IngestOptions::default());
        let sources = ingest.accepted.into_iter().map(|f| (f.path, f.text)).collect();
        Ctx {
            grammars: GrammarBundle::builtin().unwrap(),
            rules: RuleTable::builtin(),
            tmp,
            out,
            run,
            run_time,
            sources,
        }
    }

    fn records(&self) -> Vec<&UniversalFileRecord> {
        self.run.shards.iter().flat_map(|s| s.records.iter()).collect()
    }

    fn build(&self, lang: LanguageId, path: &str, src: &str) -> UniversalFileRecord {
        RecordBuilder::new(&self.grammars, &self.rules).build(lang, path, src).unwrap()
    }
}

fn desk_config(out: &Path) -> RunConfig {
    let mut c = RunConfig::new(corpus("desk"), out);
    c.manifest = Some(corpus("desk/MANIFEST.tsv"));
    c
}

fn shard_files(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "parquet"))
        .collect();
    v.sort();
    v
}

// ----------------------------------------------------------------------------

fn losslessness(ctx: &Ctx) -> Check {
    let records = ctx.records();
    ensure!(records.len() == ctx.sources.len(), "{} records for {} sources", records.len(), ctx.sources.len());
    for r in records {
        let src = ctx.sources.get(&r.path).ok_or(format!("no source for {}", r.path))?;
        ensure!(r.source() == Some(src.as_str()), "{}: root text differs", r.path);
    }
    for file in shard_files(&ctx.out) {
        for r in decode_shard(&file).map_err(|e| e.to_string())?.shard.records {
            ensure!(r.source() == ctx.sources.get(&r.path).map(String::as_str), "{}: decoded root differs", r.path);
        }
    }
    ensure!(ctx.run_time < Duration::from_secs(60), "desk run took {:?}", ctx.run_time);
    Ok(())
}

fn fragments(lang: LanguageId) -> &'static [&'static str] {
    use LanguageId::*;
    match lang {
        Python => &["def f(a):\n    return a\n", "x = [1, 2]\n", "class K:\n    pass\n", "if x:\n    y = 'é'\n", "(\n"],
        Java => &["class A { int f() { return 1; } }\n", "interface I {}\n", "{\n"],
        Go => &["package p\n", "func f() int { return 1 }\n", "type T struct{}\n"],
        Ruby => &["def f(a)\n  a\nend\n", "class K\nend\n", "x = nil\n"],
        JavaScript => &["function f(a) { return a; }\n", "const g = (x) => x;\n", "if (a) {\n"],
        _ => &["int f(void) { return 0; }\n", "/* c */\n", "int x = 3;\n", "}\n"],
    }
}

fn source_strategy() -> impl Strategy<Value = (LanguageId, String)> {
    prop::sample::select(vec![
        LanguageId::Python,
        LanguageId::Java,
        LanguageId::Go,
        LanguageId::Ruby,
        LanguageId::JavaScript,
        LanguageId::C,
    ])
    .prop_flat_map(|lang| {
        let frags = fragments(lang);
        (Just(lang), prop::collection::vec(0..frags.len(), 0..8), "[a-z ;(]{0,6}").prop_map(
            move |(lang, picks, tail)| {
                let mut src: String = picks.iter().map(|&i| frags[i]).collect();
                src.push_str(&tail);
                (lang, src)
            },
        )
    })
}

/// Link, id, span and sibling checks written directly against the array.
fn tree_ok(r: &UniversalFileRecord) -> Check {
    let nodes = &r.nodes;
    let src = r.source().ok_or("no root")?;
    ensure!(nodes[0].parent.is_none() && nodes[0].start_byte == 0 && nodes[0].end_byte == src.len(), "root span");
    let mut order = Vec::new();
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        ensure!(order.len() <= nodes.len(), "cycle");
        order.push(i);
        let n = &nodes[i];
        ensure!(n.id == i, "id {} at {i}", n.id);
        ensure!(src.get(n.start_byte..n.end_byte) == Some(n.text.as_str()), "text of {i}");
        let mut prev = n.start_byte;
        for &c in &n.children {
            let ch = nodes.get(c).ok_or("dangling child")?;
            ensure!(ch.parent == Some(i), "child {c} of {i}");
            ensure!(ch.start_byte >= prev && ch.end_byte <= n.end_byte, "nesting/order at {c}");
            prev = ch.start_byte;
        }
        stack.extend(n.children.iter().rev());
    }
    ensure!(order == (0..nodes.len()).collect::<Vec<_>>(), "ids are not dense pre-order");
    Ok(())
}

fn mutate(r: &UniversalFileRecord, which: u8, at: usize) -> Option<UniversalFileRecord> {
    let mut m = r.clone();
    let n = m.nodes.len();
    let inner: Vec<usize> = m.nodes.iter().filter(|x| !x.children.is_empty()).map(|x| x.id).collect();
    match which {
        0 => m.metadata.nodes += 1,
        1 => {
            let p = *inner.get(at % inner.len().max(1))?;
            m.nodes[p].children.pop();
        }
        2 => {
            let p = *inner.iter().filter(|&&p| m.nodes[p].children.len() > 1).nth(at % 4)?;
            m.nodes[p].children.swap(0, 1);
        }
        3 => {
            if n < 2 {
                return None;
            }
            let i = 1 + at % (n - 1);
            m.nodes[i].end_byte += m.nodes[0].end_byte + 1;
        }
        4 => {
            if n < 2 {
                return None;
            }
            m.nodes[1 + at % (n - 1)].id += n;
        }
        5 => m.node_categories.expressions.entry("identifiers".into()).or_default().push(n + at),
        6 => {
            m.cross_language_map.function_declarations.pop()?;
        }
        _ => m.metadata.source_hash = "f".repeat(64),
    }
    (m != *r).then_some(m)
}

fn structural_integrity(ctx: &Ctx) -> Check {
    for r in ctx.records() {
        tree_ok(r).map_err(|e| format!("{}: {e}", r.path))?;
        validate_record(r).map_err(|v| format!("{}: {v:?}", r.path))?;
    }
    let mut runner = TestRunner::deterministic();
    let strategy = (source_strategy(), 0u8..8, 0usize..32);
    let mut mutated = 0;
    for _ in 0..400 {
        let ((lang, src), which, at) = strategy.new_tree(&mut runner).unwrap().current();
        let r = ctx.build(lang, "gen", &src);
        tree_ok(&r).map_err(|e| format!("generated {lang} {src:?}: {e}"))?;
        validate_record(&r).map_err(|v| format!("generated {src:?}: {v:?}"))?;
        if let Some(m) = mutate(&r, which, at) {
            mutated += 1;
            ensure!(validate_record(&m).is_err(), "mutation {which} of {src:?} validated");
        }
    }
    ensure!(mutated >= 200, "only {mutated} mutations applied");
    Ok(())
}

fn check_report(report: &RunReport) -> Check {
    for (lang, c) in &report.languages {
        ensure!(c.attempted == c.succeeded + c.failed, "{lang}: arithmetic");
    }
    let t = &report.total;
    ensure!(t.attempted == t.succeeded + t.failed, "total arithmetic");
    ensure!(
        t.success_rate == Some(t.succeeded as f64 / t.attempted as f64),
        "success rate {:?}",
        t.success_rate
    );
    Ok(())
}

fn conversion_reliability(ctx: &Ctx) -> Check {
    let report = &ctx.run.report;
    check_report(report)?;
    ensure!(report.total.failed == 0 && report.total.success_rate == Some(1.0), "desk failures {:?}", report.failures);
    ensure!(report.shards.len() == 10, "{} shards", report.shards.len());

    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dirty = cmd_parse(&RunConfig::new(corpus("dirty"), tmp.path())).map_err(|e| e.to_string())?;
    check_report(&dirty.report)?;
    let t = &dirty.report.total;
    ensure!((t.attempted, t.succeeded, t.failed) == (6, 4, 2), "dirty totals {t:?}");
    ensure!(dirty.report.exit_code() == 2, "dirty exit {}", dirty.report.exit_code());
    let records: Vec<_> = dirty.shards.iter().flat_map(|s| &s.records).collect();
    for name in ["broken.py", "broken.js"] {
        let r = records.iter().find(|r| r.path == name).ok_or(format!("{name} missing"))?;
        ensure!(r.metadata.errors > 0, "{name} has no error nodes");
    }
    Ok(())
}

fn rule_oracle() -> HashMap<(LanguageId, String), (String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/rules");
    let mut table = HashMap::new();
    for entry in fs::read_dir(dir).unwrap() {
        for line in fs::read_to_string(entry.unwrap().path()).unwrap().lines() {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let c: Vec<&str> = line.split('\t').collect();
            table.insert((c[0].parse().unwrap(), c[1].to_string()), (c[2].to_string(), c[3].to_string()));
        }
    }
    table
}

fn category_oracle(ctx: &Ctx) -> Check {
    let table = rule_oracle();
    for r in ctx.records() {
        let src = &ctx.sources[&r.path];
        let tree = ctx.grammars.parse(r.language, src.clone()).map_err(|e| e.to_string())?.tree;
        let mut expected: BTreeMap<(String, String), Vec<usize>> = BTreeMap::new();
        let mut next = 0;
        let mut stack = vec![tree.root_node()];
        while let Some(node) = stack.pop() {
            let text = &src[node.start_byte()..node.end_byte()];
            let skip = !node.is_named()
                && !node.is_error()
                && !text.is_empty()
                && text.chars().all(|c| c.is_ascii_punctuation());
            if !skip {
                if node.is_named() {
                    if let Some(t) = table.get(&(r.language, node.kind().to_string())) {
                        expected.entry(t.clone()).or_default().push(next);
                    }
                }
                next += 1;
            }
            let mut cursor = node.walk();
            let kids: Vec<_> = node.children(&mut cursor).collect();
            stack.extend(kids.into_iter().rev());
        }
        let got: BTreeMap<(String, String), Vec<usize>> = r
            .node_categories
            .iter()
            .filter(|(_, _, ids)| !ids.is_empty())
            .map(|(c, s, ids)| ((c.as_str().to_string(), s.to_string()), ids.to_vec()))
            .collect();
        ensure!(got == expected, "{}: index differs from traversal", r.path);
        let count = |sub| r.node_categories.get(Category::Declarations, sub).map_or(0, Vec::len);
        ensure!(r.cross_language_map.function_declarations.len() == count("functions"), "{}: functions", r.path);
        ensure!(r.cross_language_map.class_declarations.len() == count("classes"), "{}: classes", r.path);
    }
    Ok(())
}

fn name_extraction(ctx: &Ctx) -> Check {
    let expected = vec![(UniversalType::Function, "calculate_sum"), (UniversalType::Class, "DataProcessor")];
    for (rel, lang) in [("fixtures/names/calculate_sum.py", LanguageId::Python), ("fixtures/names/DataProcessor.java", LanguageId::Java)] {
        let src = fs::read_to_string(corpus(rel)).map_err(|e| e.to_string())?;
        let r = ctx.build(lang, rel, &src);
        let mut got: Vec<(UniversalType, &str)> = r
            .cross_language_map
            .entries()
            .map(|e| (e.universal_type, e.name.as_deref().unwrap_or("")))
            .collect();
        got.sort();
        ensure!(got == expected, "{rel}: {got:?}");
    }
    Ok(())
}

fn store_round_trip(ctx: &Ctx) -> Check {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    for shard in &ctx.run.shards {
        let file = ctx.out.join(format!("{}.parquet", shard.language.slug()));
        let decoded = decode_shard(&file).map_err(|e| e.to_string())?;
        ensure!(decoded.shard.records == shard.records, "{}: decode differs", shard.language);
        let again = tmp.path().join(file.file_name().unwrap());
        let mut reordered = decoded.shard.records.clone();
        reordered.reverse();
        encode_shard(shard.language, &reordered, &again).map_err(|e| e.to_string())?;
        ensure!(fs::read(&file).unwrap() == fs::read(&again).unwrap(), "{}: re-encode not byte-identical", shard.language);
    }

    let mut runner = TestRunner::deterministic();
    let strategy = source_strategy();
    let mut generated: BTreeMap<LanguageId, Vec<UniversalFileRecord>> = BTreeMap::new();
    for i in 0..1000 {
        let (lang, src) = strategy.new_tree(&mut runner).unwrap().current();
        generated.entry(lang).or_default().push(ctx.build(lang, &format!("gen/{i:04}"), &src));
    }
    let mut total = 0;
    for (lang, records) in &generated {
        let path = tmp.path().join(format!("gen_{}.parquet", lang.slug()));
        encode_shard(*lang, records, &path).map_err(|e| e.to_string())?;
        let back = decode_shard(&path).map_err(|e| e.to_string())?.shard.records;
        ensure!(&back == records, "{lang}: generated round-trip differs");
        total += back.len();
    }
    ensure!(total == 1000, "{total} generated records");

    let foot = &ctx.run.footprint;
    for (lang, f) in &foot.languages {
        ensure!(f.ratio > 1.0, "{lang}: ratio {}", f.ratio);
    }
    let spread = foot.ratio_spread().ok_or("no footprints")?;
    ensure!(spread <= 3.0, "ratio spread {spread}");
    Ok(())
}

fn jacobi_pca(rows: &[Vec<f64>], k: usize) -> Vec<Vec<f64>> {
    let n = rows.len();
    let d = rows[0].len();
    let mean: Vec<f64> = (0..d).map(|j| rows.iter().map(|r| r[j]).sum::<f64>() / n as f64).collect();
    let c: Vec<Vec<f64>> = rows.iter().map(|r| (0..d).map(|j| r[j] - mean[j]).collect()).collect();
    let mut a: Vec<Vec<f64>> = (0..d).map(|i| (0..d).map(|j| c.iter().map(|r| r[i] * r[j]).sum()).collect()).collect();
    let mut v: Vec<Vec<f64>> = (0..d).map(|i| (0..d).map(|j| f64::from(u8::from(i == j))).collect()).collect();
    for _ in 0..100 {
        for p in 0..d {
            for q in p + 1..d {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = if theta == 0.0 { 1.0 } else { theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt()) };
                let (cs, sn) = (1.0 / (t * t + 1.0).sqrt(), t / (t * t + 1.0).sqrt());
                for row in a.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = cs * x - sn * y;
                    row[q] = sn * x + cs * y;
                }
                for j in 0..d {
                    let (x, y) = (a[p][j], a[q][j]);
                    a[p][j] = cs * x - sn * y;
                    a[q][j] = sn * x + cs * y;
                }
                for row in v.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = cs * x - sn * y;
                    row[q] = sn * x + cs * y;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&x, &y| a[y][y].total_cmp(&a[x][x]));
    let dirs: Vec<Vec<f64>> = order
        .iter()
        .take(k)
        .map(|&col| {
            let dir: Vec<f64> = (0..d).map(|i| v[i][col]).collect();
            let big = dir.iter().fold(0.0f64, |m, x| if x.abs() > m.abs() { *x } else { m });
            dir.iter().map(|x| if big < 0.0 { -x } else { *x }).collect()
        })
        .collect();
    c.iter().map(|r| dirs.iter().map(|dir| r.iter().zip(dir).map(|(a, b)| a * b).sum()).collect()).collect()
}

fn analytics_oracles(ctx: &Ctx) -> Check {
    let c = cosine(&[0.5, 0.0, 0.5], &[0.5, 0.5, 0.0]).map_err(|e| e.to_string())?;
    ensure!((c - 0.5).abs() < 1e-12, "cosine {c}");
    let s = cosine(&[0.1, 0.9], &[0.1, 0.9]).map_err(|e| e.to_string())?;
    ensure!((s - 1.0).abs() < 1e-12, "self cosine {s}");
    ensure!(cosine(&[1.0, 0.0], &[0.0, 2.0]).map_err(|e| e.to_string())? == 0.0, "disjoint cosine");

    let rows = vec![
        vec![0.70, 0.20, 0.10],
        vec![0.10, 0.60, 0.30],
        vec![0.25, 0.25, 0.50],
        vec![0.40, 0.45, 0.15],
    ];
    let refs: Vec<&[f64]> = rows.iter().map(Vec::as_slice).collect();
    let p = pca_rows(&refs, 2).map_err(|e| e.to_string())?;
    let want = jacobi_pca(&rows, 2);
    for (g, w) in p.coordinates.iter().flatten().zip(want.iter().flatten()) {
        ensure!((g - w).abs() < 1e-9, "pca {g} vs {w}");
    }

    let records: Vec<UniversalFileRecord> = ctx.records().into_iter().cloned().collect();
    let dists = node_type_distributions(&records);
    for d in &dists {
        let sum: f64 = d.vector.iter().sum();
        ensure!((sum - 1.0).abs() <= 1e-9, "{}: sum {sum}", d.language);
    }
    let mut shuffled = records.clone();
    shuffled.reverse();
    shuffled.rotate_left(97);
    ensure!(corpus_stats(&records) == corpus_stats(&shuffled), "stats depend on order");
    let sd = node_type_distributions(&shuffled);
    ensure!(dists == sd, "distributions depend on order");
    ensure!(
        similarity_matrix(&records).map_err(|e| e.to_string())? == similarity_matrix(&shuffled).map_err(|e| e.to_string())?,
        "similarity depends on order"
    );
    ensure!(
        pca_project(&dists, 2).map_err(|e| e.to_string())? == pca_project(&sd, 2).map_err(|e| e.to_string())?,
        "pca depends on order"
    );
    Ok(())
}

fn similarity_ordering(ctx: &Ctx) -> Check {
    let records: Vec<UniversalFileRecord> = ctx.records().into_iter().cloned().collect();
    let m = similarity_matrix(&records).map_err(|e| e.to_string())?;
    let js_ts = m.get(LanguageId::JavaScript, LanguageId::TypeScript).ok_or("no JS/TS")?;
    for (i, a) in m.languages.iter().enumerate() {
        for (j, b) in m.languages.iter().enumerate().skip(i + 1) {
            let pair: BTreeSet<LanguageId> = [*a, *b].into();
            if pair != [LanguageId::JavaScript, LanguageId::TypeScript].into() {
                ensure!(m.values[i][j] < js_ts, "sim({a},{b}) = {} >= sim(JS,TS) = {js_ts}", m.values[i][j]);
            }
        }
    }
    let c_cpp = m.get(LanguageId::C, LanguageId::Cpp).unwrap();
    let c_py = m.get(LanguageId::C, LanguageId::Python).unwrap();
    ensure!(c_cpp > c_py, "sim(C,C++) = {c_cpp} <= sim(C,Python) = {c_py}");
    Ok(())
}

fn metadata_example(ctx: &Ctx) -> Check {
    let src = fs::read_to_string(corpus("fixtures/sensor_stats.py")).map_err(|e| e.to_string())?;
    let r = ctx.build(LanguageId::Python, "sensor_stats.py", &src);
    let m = &r.metadata;
    ensure!((m.lines, m.nodes, m.errors) == (247, 1853, 0), "metadata {m:?}");
    let density = corpus_stats(std::slice::from_ref(&r))[&LanguageId::Python].avg_density;
    ensure!((density - 7.502).abs() <= 0.001, "density {density}");
    Ok(())
}

fn determinism(ctx: &Ctx) -> Check {
    let out2 = ctx.tmp.path().join("run2");
    let second = cmd_parse(&desk_config(&out2)).map_err(|e| e.to_string())?;
    let a = shard_files(&ctx.out);
    let b = shard_files(&out2);
    ensure!(a.len() == b.len() && a.len() == 10, "shard counts {} vs {}", a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        ensure!(x.file_name() == y.file_name(), "shard names differ");
        ensure!(fs::read(x).unwrap() == fs::read(y).unwrap(), "{:?} differs", x.file_name().unwrap());
    }
    ensure!(ctx.run.report.without_duration() == second.report.without_duration(), "run reports differ");
    let read_report = |dir: &Path| -> Result<RunReport, String> {
        serde_json::from_str(&fs::read_to_string(dir.join(RUN_REPORT)).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
    };
    ensure!(read_report(&ctx.out)?.without_duration() == read_report(&out2)?.without_duration(), "report files differ");
    for name in [INGEST_REPORT, FOOTPRINT_REPORT] {
        ensure!(fs::read(ctx.out.join(name)).unwrap() == fs::read(out2.join(name)).unwrap(), "{name} differs");
    }
    let analytics = |dir: &Path| -> Result<Vec<Vec<u8>>, String> {
        let shards = [dir.to_path_buf()];
        let dest = dir.join("analytics");
        let files = [
            cmd_stats(&shards, &dest).map_err(|e| e.to_string())?,
            cmd_similarity(&shards, &dest).map_err(|e| e.to_string())?,
            cmd_pca(&shards, &dest, 2).map_err(|e| e.to_string())?,
        ];
        Ok(files.iter().map(|f| fs::read(f).unwrap()).collect())
    };
    ensure!(analytics(&ctx.out)? == analytics(&out2)?, "analytics files differ");
    Ok(())
}

fn main() -> ExitCode {
    let ctx = Ctx::new();
    let criteria: [(&str, fn(&Ctx) -> Check); 10] = [
        ("losslessness", losslessness),
        ("structural integrity", structural_integrity),
        ("conversion reliability", conversion_reliability),
        ("category oracle equivalence", category_oracle),
        ("name extraction", name_extraction),
        ("store round-trip", store_round_trip),
        ("analytics oracles", analytics_oracles),
        ("similarity ordering", similarity_ordering),
        ("metadata example", metadata_example),
        ("determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(|| check(&ctx)))
            .unwrap_or_else(|p| {
                let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
                Err(format!("panicked: {}", msg.unwrap_or_default()))
            });
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS {name} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
