//! End-to-end corpus conversion: scan, preprocess, parse, validate, write
//! shards and reports.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use uast_core::ingest::{self, FilterReason, IngestOptions, IngestReport, Manifest, SkipReason};
use uast_core::{validate_record, GrammarBundle, LanguageId, RecordBuilder, RuleTable, UniversalFileRecord};
use uast_store::{encode_shard, footprint_report, shard_path, CorpusShard, FootprintReport, ShardNaming};

use crate::CliError;

pub const RUN_REPORT: &str = "run_report.json";
pub const INGEST_REPORT: &str = "ingest_report.json";
pub const FOOTPRINT_REPORT: &str = "footprint.json";

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpus: PathBuf,
    pub manifest: Option<PathBuf>,
    pub out: PathBuf,
    /// Empty means every language.
    pub languages: BTreeSet<LanguageId>,
    /// 0 picks the number of CPUs.
    pub workers: usize,
    pub apply_iqr: bool,
    pub shard_naming: ShardNaming,
    pub grammars: Option<PathBuf>,
    pub rules: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(corpus: impl Into<PathBuf>, out: impl Into<PathBuf>) -> Self {
        RunConfig {
            corpus: corpus.into(),
            manifest: None,
            out: out.into(),
            languages: BTreeSet::new(),
            workers: 0,
            apply_iqr: true,
            shard_naming: ShardNaming::Slug,
            grammars: None,
            rules: None,
        }
    }

    /// Rejects configurations before any work is done.
    pub fn check(&self) -> Result<(), CliError> {
        let corpus = fs::canonicalize(&self.corpus)
            .map_err(|e| CliError::Config(format!("corpus root {}: {e}", self.corpus.display())))?;
        if !corpus.is_dir() {
            return Err(CliError::Config(format!("corpus root {} is not a directory", corpus.display())));
        }
        let out = absolute(&self.out);
        if out == corpus || out.starts_with(&corpus) {
            return Err(CliError::Config(format!(
                "output directory {} must be outside the corpus root",
                self.out.display()
            )));
        }
        if let Some(m) = &self.manifest {
            if !m.is_file() {
                return Err(CliError::Config(format!("manifest {} not found", m.display())));
            }
        }
        Ok(())
    }
}

/// Best-effort absolute form of a path whose tail may not exist yet.
fn absolute(path: &Path) -> PathBuf {
    let mut existing = path.to_path_buf();
    let mut tail = Vec::new();
    loop {
        if let Ok(c) = fs::canonicalize(&existing) {
            return tail.into_iter().rev().fold(c, |acc, part| acc.join(part));
        }
        match (existing.file_name().map(|s| s.to_os_string()), existing.parent()) {
            (Some(name), Some(parent)) => {
                tail.push(name);
                existing = if parent.as_os_str().is_empty() {
                    PathBuf::from(".")
                } else {
                    parent.to_path_buf()
                };
            }
            _ => return path.to_path_buf(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    Undecodable,
    Unreadable,
    ParseFailure,
    ValidationFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub path: String,
    pub language: LanguageId,
    pub reason: FailureReason,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LanguageCounts {
    pub attempted: usize,
    pub succeeded: usize,
    pub failed: usize,
    /// succeeded / attempted; absent when nothing was attempted.
    pub success_rate: Option<f64>,
    pub failures: BTreeMap<FailureReason, usize>,
}

impl LanguageCounts {
    fn new(succeeded: usize, failures: BTreeMap<FailureReason, usize>) -> Self {
        let failed = failures.values().sum();
        let attempted = succeeded + failed;
        LanguageCounts {
            attempted,
            succeeded,
            failed,
            success_rate: (attempted > 0).then(|| succeeded as f64 / attempted as f64),
            failures,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardSummary {
    pub language: LanguageId,
    /// File name inside the output directory.
    pub file: String,
    pub records: usize,
    pub on_disk_bytes: u64,
    pub in_memory_bytes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardError {
    pub language: LanguageId,
    pub file: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub languages: BTreeMap<LanguageId, LanguageCounts>,
    pub total: LanguageCounts,
    pub failures: Vec<Failure>,
    pub shards: Vec<ShardSummary>,
    pub shard_errors: Vec<ShardError>,
    pub grammar_bundle: String,
    pub rule_checksum: String,
    pub duration_ms: u64,
}

impl RunReport {
    pub fn is_clean(&self) -> bool {
        self.total.failed == 0 && self.shard_errors.is_empty()
    }

    /// 0 clean, 2 partial.
    pub fn exit_code(&self) -> i32 {
        if self.is_clean() {
            0
        } else {
            2
        }
    }

    /// Canonical JSON without the wall-clock field.
    pub fn without_duration(&self) -> RunReport {
        RunReport {
            duration_ms: 0,
            ..self.clone()
        }
    }
}

#[derive(Debug)]
pub struct RunOutcome {
    pub report: RunReport,
    pub ingest: IngestReport,
    pub footprint: FootprintReport,
    pub shards: Vec<CorpusShard>,
}

pub fn load_grammars(path: Option<&Path>) -> Result<GrammarBundle, CliError> {
    Ok(match path {
        Some(p) => GrammarBundle::from_descriptor(p)?,
        None => GrammarBundle::builtin()?,
    })
}

pub fn load_rules(path: Option<&Path>) -> Result<RuleTable, CliError> {
    Ok(match path {
        Some(p) => RuleTable::load(p)?,
        None => RuleTable::builtin(),
    })
}

fn convert(builder: &RecordBuilder<'_>, file: &ingest::PreprocessedFile) -> Result<UniversalFileRecord, Failure> {
    let fail = |reason, detail: String| Failure {
        path: file.path.clone(),
        language: file.language,
        reason,
        detail,
    };
    let record = builder
        .build(file.language, file.path.clone(), file.text.clone())
        .map_err(|e| fail(FailureReason::ParseFailure, e.to_string()))?;
    validate_record(&record).map_err(|v| {
        let detail = v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
        fail(FailureReason::ValidationFailure, detail)
    })?;
    Ok(record)
}

/// Runs every stage. Per-file and per-shard failures land in the report;
/// only configuration, grammar and output-directory problems are errors.
pub fn cmd_parse(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let started = Instant::now();
    config.check()?;
    let grammars = load_grammars(config.grammars.as_deref())?;
    let rules = load_rules(config.rules.as_deref())?;
    let manifest = config.manifest.as_deref().map(Manifest::load).transpose()?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| CliError::Config(format!("worker pool: {e}")))?;

    let wanted = |l: LanguageId| config.languages.is_empty() || config.languages.contains(&l);
    let mut scan = ingest::scan_corpus(&config.corpus, manifest.as_ref())?;
    scan.files.retain(|f| wanted(f.language));
    scan.skipped.retain(|s| wanted(s.language));

    let builder = RecordBuilder::new(&grammars, &rules);
    let (outcome, results) = pool.install(|| {
        let outcome = ingest::preprocess(scan, IngestOptions { apply_iqr: config.apply_iqr });
        let results: Vec<Result<UniversalFileRecord, Failure>> =
            outcome.accepted.par_iter().map(|f| convert(&builder, f)).collect();
        (outcome, results)
    });

    let mut failures: Vec<Failure> = Vec::new();
    for d in outcome.decisions.iter().filter(|d| d.reason == FilterReason::Undecodable) {
        failures.push(Failure {
            path: d.path.clone(),
            language: d.language,
            reason: FailureReason::Undecodable,
            detail: "not valid UTF-8 or BOM-marked UTF-16".into(),
        });
    }
    for s in &outcome.skipped {
        if let SkipReason::Unreadable(detail) = &s.reason {
            failures.push(Failure {
                path: s.path.clone(),
                language: s.language,
                reason: FailureReason::Unreadable,
                detail: detail.clone(),
            });
        }
    }

    let mut by_language: BTreeMap<LanguageId, Vec<UniversalFileRecord>> = BTreeMap::new();
    for r in results {
        match r {
            Ok(record) => by_language.entry(record.language).or_default().push(record),
            Err(f) => failures.push(f),
        }
    }
    failures.sort_by(|a, b| a.path.cmp(&b.path));

    let mut attempted_languages: BTreeSet<LanguageId> = by_language.keys().copied().collect();
    attempted_languages.extend(failures.iter().map(|f| f.language));

    fs::create_dir_all(&config.out)
        .map_err(|e| CliError::Io(format!("output directory {}: {e}", config.out.display())))?;

    let written: Vec<(LanguageId, String, Result<CorpusShard, String>)> = pool.install(|| {
        attempted_languages
            .par_iter()
            .map(|&lang| {
                let records = by_language.get(&lang).map(Vec::as_slice).unwrap_or(&[]);
                let path = shard_path(&config.out, lang, config.shard_naming);
                let file = path.file_name().unwrap().to_string_lossy().into_owned();
                (lang, file, encode_shard(lang, records, &path).map_err(|e| e.to_string()))
            })
            .collect()
    });
    let mut shards = Vec::new();
    let mut summaries = Vec::new();
    let mut shard_errors = Vec::new();
    for (language, file, result) in written {
        match result {
            Ok(shard) => {
                summaries.push(ShardSummary {
                    language,
                    file,
                    records: shard.records.len(),
                    on_disk_bytes: shard.on_disk_bytes,
                    in_memory_bytes: shard.in_memory_bytes,
                });
                shards.push(shard);
            }
            Err(message) => shard_errors.push(ShardError {
                language,
                file,
                message,
            }),
        }
    }

    let mut languages = BTreeMap::new();
    for &lang in &attempted_languages {
        let mut reasons: BTreeMap<FailureReason, usize> = BTreeMap::new();
        for f in failures.iter().filter(|f| f.language == lang) {
            *reasons.entry(f.reason).or_default() += 1;
        }
        let succeeded = by_language.get(&lang).map_or(0, Vec::len);
        languages.insert(lang, LanguageCounts::new(succeeded, reasons));
    }
    let mut total_reasons: BTreeMap<FailureReason, usize> = BTreeMap::new();
    for f in &failures {
        *total_reasons.entry(f.reason).or_default() += 1;
    }
    let total_succeeded = by_language.values().map(Vec::len).sum();

    let ingest_report = IngestReport::from_outcome(&outcome);
    let footprint = footprint_report(&shards);
    let report = RunReport {
        languages,
        total: LanguageCounts::new(total_succeeded, total_reasons),
        failures,
        shards: summaries,
        shard_errors,
        grammar_bundle: grammars.version().to_string(),
        rule_checksum: rules.checksum().to_string(),
        duration_ms: started.elapsed().as_millis() as u64,
    };

    write_json(&config.out.join(INGEST_REPORT), &ingest_report)?;
    write_json(&config.out.join(FOOTPRINT_REPORT), &footprint)?;
    write_json(&config.out.join(RUN_REPORT), &report)?;

    Ok(RunOutcome {
        report,
        ingest: ingest_report,
        footprint,
        shards,
    })
}

pub(crate) fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
