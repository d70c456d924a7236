//! Commands over existing shards: validate, stats, similarity, pca, export.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use uast_core::analytics::{self, LanguageStats};
use uast_core::{validate_record, LanguageId, UniversalFileRecord};
use uast_store::{decode_shard, footprint_report, DecodedShard, Footprint, SHARD_EXTENSION};

use crate::pipeline::write_json;
use crate::CliError;

pub const STATS_FILE: &str = "stats.json";
pub const SIMILARITY_FILE: &str = "similarity.csv";
pub const PCA_FILE: &str = "pca.csv";

/// Expands directories to their shard files, sorted by name.
pub fn shard_files(paths: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = fs::read_dir(p)
                .map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|e| e == SHARD_EXTENSION))
                .collect();
            found.sort();
            out.extend(found);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

pub fn load_shards(paths: &[PathBuf]) -> Result<Vec<DecodedShard>, CliError> {
    shard_files(paths)?
        .iter()
        .map(|p| decode_shard(p).map_err(CliError::from))
        .collect()
}

/// All records across shards, ordered by (language, path).
pub fn all_records(shards: &[DecodedShard]) -> Vec<UniversalFileRecord> {
    let mut records: Vec<UniversalFileRecord> =
        shards.iter().flat_map(|s| s.shard.records.iter().cloned()).collect();
    records.sort_by(|a, b| (a.language, &a.path).cmp(&(b.language, &b.path)));
    records
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordViolation {
    pub shard: String,
    pub record: String,
    pub kind: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub shards: usize,
    pub records: usize,
    pub violations: Vec<RecordViolation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    /// 0 clean, 2 violations found.
    pub fn exit_code(&self) -> i32 {
        if self.violations.is_empty() {
            0
        } else {
            2
        }
    }
}

pub fn cmd_validate(paths: &[PathBuf]) -> Result<ValidationReport, CliError> {
    let files = shard_files(paths)?;
    let mut report = ValidationReport::default();
    for file in files {
        let decoded = decode_shard(&file)?;
        report.shards += 1;
        report.warnings.extend(decoded.warnings);
        for record in &decoded.shard.records {
            report.records += 1;
            if let Err(violations) = validate_record(record) {
                report.violations.extend(violations.into_iter().map(|v| RecordViolation {
                    shard: file.display().to_string(),
                    record: record.path.clone(),
                    kind: v.kind.label().to_string(),
                    detail: v.detail,
                }));
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LanguageSummary {
    #[serde(flatten)]
    pub stats: LanguageStats,
    pub top_node_type: Option<String>,
    pub footprint: Option<Footprint>,
}

pub fn stats_summary(shards: &[DecodedShard]) -> BTreeMap<LanguageId, LanguageSummary> {
    let records = all_records(shards);
    let footprints = footprint_report(&shards.iter().map(|s| s.shard.clone()).collect::<Vec<_>>());
    let distributions: BTreeMap<LanguageId, _> = analytics::node_type_distributions(&records)
        .into_iter()
        .map(|d| (d.language, d))
        .collect();
    analytics::corpus_stats(&records)
        .into_iter()
        .map(|(lang, stats)| {
            let summary = LanguageSummary {
                stats,
                top_node_type: distributions
                    .get(&lang)
                    .and_then(|d| d.top_type())
                    .map(str::to_string),
                footprint: footprints.languages.get(&lang).copied(),
            };
            (lang, summary)
        })
        .collect()
}

pub fn cmd_stats(paths: &[PathBuf], out: &Path) -> Result<PathBuf, CliError> {
    let shards = load_shards(paths)?;
    let target = out.join(STATS_FILE);
    create_dir(out)?;
    write_json(&target, &stats_summary(&shards))?;
    Ok(target)
}

pub fn cmd_similarity(paths: &[PathBuf], out: &Path) -> Result<PathBuf, CliError> {
    let records = all_records(&load_shards(paths)?);
    let matrix = analytics::similarity_matrix(&records)?;
    create_dir(out)?;
    let target = out.join(SIMILARITY_FILE);
    write_text(&target, &matrix.to_csv())?;
    Ok(target)
}

pub fn cmd_pca(paths: &[PathBuf], out: &Path, k: usize) -> Result<PathBuf, CliError> {
    let records = all_records(&load_shards(paths)?);
    let projection = analytics::pca_project(&analytics::node_type_distributions(&records), k)?;
    create_dir(out)?;
    let target = out.join(PCA_FILE);
    write_text(&target, &projection.to_csv())?;
    Ok(target)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportFormat {
    /// One canonical-JSON record per line.
    #[default]
    Jsonl,
    /// One `.json` file per record.
    Json,
}

/// Writes every record as one canonical-JSON line.
pub fn export_jsonl(paths: &[PathBuf], sink: &mut dyn Write) -> Result<usize, CliError> {
    let records = all_records(&load_shards(paths)?);
    for r in &records {
        let line = serde_json::to_string(r).map_err(|e| CliError::Io(e.to_string()))?;
        writeln!(sink, "{line}").map_err(|e| CliError::Io(e.to_string()))?;
    }
    Ok(records.len())
}

/// Writes `<slug>.jsonl` per language, or `<slug>/<path>.json` per record,
/// under `out`. Returns the files written.
pub fn cmd_export(paths: &[PathBuf], format: ExportFormat, out: &Path) -> Result<Vec<PathBuf>, CliError> {
    let shards = load_shards(paths)?;
    create_dir(out)?;
    let mut written = Vec::new();
    for decoded in &shards {
        let shard = &decoded.shard;
        match format {
            ExportFormat::Jsonl => {
                let target = out.join(format!("{}.jsonl", shard.language.slug()));
                let mut text = String::new();
                for r in &shard.records {
                    text.push_str(&serde_json::to_string(r).map_err(|e| CliError::Io(e.to_string()))?);
                    text.push('\n');
                }
                write_text(&target, &text)?;
                written.push(target);
            }
            ExportFormat::Json => {
                for r in &shard.records {
                    let target = out
                        .join(shard.language.slug())
                        .join(format!("{}.json", r.path));
                    if let Some(parent) = target.parent() {
                        create_dir(parent)?;
                    }
                    write_text(&target, &serde_json::to_string(r).map_err(|e| CliError::Io(e.to_string()))?)?;
                    written.push(target);
                }
            }
        }
    }
    Ok(written)
}

fn create_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
