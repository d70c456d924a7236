//! Corpus acquisition and preprocessing: discovery, text normalization,
//! statistical size filtering and content-hash deduplication.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::language::LanguageId;
use crate::schema::source_hash;

/// Minimum accepted line count.
pub const MIN_LINES: usize = 10;
/// Maximum accepted line count.
pub const MAX_LINES: usize = 10_000;
/// Whisker multiplier for the interquartile-range filter.
pub const IQR_WHISKER: f64 = 1.5;
/// Below this many surviving files in a language the IQR stage is skipped.
pub const IQR_MIN_FILES: usize = 4;

/// License tags accepted when a manifest supplies them.
pub const LICENSE_ALLOWLIST: [&str; 5] = ["MIT", "Apache-2.0", "BSD", "BSD-2-Clause", "BSD-3-Clause"];

pub fn license_allowed(tag: &str) -> bool {
    LICENSE_ALLOWLIST
        .iter()
        .any(|allowed| allowed.eq_ignore_ascii_case(tag.trim()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawFile {
    /// Path relative to the corpus root, `/`-separated.
    pub path: String,
    pub language: LanguageId,
    pub bytes: Vec<u8>,
    pub license_tag: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreprocessedFile {
    pub path: String,
    pub language: LanguageId,
    pub text: String,
    pub line_count: usize,
    pub original_byte_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterReason {
    TooShort,
    TooLong,
    IqrOutlier,
    Duplicate,
    Undecodable,
    Accepted,
}

impl FilterReason {
    pub fn as_str(self) -> &'static str {
        match self {
            FilterReason::TooShort => "too_short",
            FilterReason::TooLong => "too_long",
            FilterReason::IqrOutlier => "iqr_outlier",
            FilterReason::Duplicate => "duplicate",
            FilterReason::Undecodable => "undecodable",
            FilterReason::Accepted => "accepted",
        }
    }
}

/// Outcome of preprocessing for one file. `accepted` is true iff the reason
/// is [`FilterReason::Accepted`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterDecision {
    pub path: String,
    pub language: LanguageId,
    pub accepted: bool,
    pub reason: FilterReason,
}

impl FilterDecision {
    pub fn new(path: impl Into<String>, language: LanguageId, reason: FilterReason) -> Self {
        FilterDecision {
            path: path.into(),
            language,
            accepted: reason == FilterReason::Accepted,
            reason,
        }
    }
}

// ----------------------------------------------------------------------------
// Manifest

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ManifestEntry {
    pub language: Option<LanguageId>,
    pub license: Option<String>,
}

/// Newline-delimited `relative/path<TAB>language<TAB>license` records.
/// Empty fields or `-` leave that attribute undeclared; `#` starts a comment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Manifest {
    entries: HashMap<String, ManifestEntry>,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Manifest> {
        let text = fs::read_to_string(path)?;
        Manifest::parse(&text, path)
    }

    pub fn parse(text: &str, origin: &Path) -> Result<Manifest> {
        let mut entries = HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Manifest {
                path: origin.to_path_buf(),
                line: idx + 1,
                message,
            };
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() > 3 {
                return Err(err(format!("expected at most 3 fields, found {}", fields.len())));
            }
            let rel = normalize_rel(fields[0].trim());
            if rel.is_empty() {
                return Err(err("empty path".into()));
            }
            let language = match fields.get(1).map(|s| s.trim()) {
                None | Some("") | Some("-") => None,
                Some(name) => Some(name.parse::<LanguageId>().map_err(|e| err(e.to_string()))?),
            };
            let license = match fields.get(2).map(|s| s.trim()) {
                None | Some("") | Some("-") => None,
                Some(tag) => Some(tag.to_string()),
            };
            if entries
                .insert(rel.clone(), ManifestEntry { language, license })
                .is_some()
            {
                return Err(err(format!("duplicate path {rel}")));
            }
        }
        Ok(Manifest { entries })
    }

    pub fn get(&self, rel: &str) -> Option<&ManifestEntry> {
        self.entries.get(rel)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn normalize_rel(p: &str) -> String {
    p.trim_start_matches("./").replace('\\', "/")
}

// ----------------------------------------------------------------------------
// Scanning

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "detail")]
pub enum SkipReason {
    /// The file could not be read; not fatal for the run.
    Unreadable(String),
    /// The manifest tags the file with a license outside the allowlist.
    License(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSkip {
    pub path: String,
    pub language: LanguageId,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, Default)]
pub struct CorpusScan {
    /// Candidate files in lexicographic path order.
    pub files: Vec<RawFile>,
    pub skipped: Vec<ScanSkip>,
}

/// Walks `root` and returns every regular file that maps to a supported
/// language, in lexicographic order of relative path.
pub fn scan_corpus(root: &Path, manifest: Option<&Manifest>) -> Result<CorpusScan> {
    fs::read_dir(root).map_err(|source| Error::CorpusRoot {
        path: root.to_path_buf(),
        source,
    })?;

    let mut candidates: Vec<(String, PathBuf)> = Vec::new();
    let walker = WalkDir::new(root)
        .follow_links(false)
        .into_iter()
        .filter_entry(|e| e.depth() == 0 || !e.file_name().to_string_lossy().starts_with('.'));
    for entry in walker {
        let entry = match entry {
            Ok(e) => e,
            Err(e) => {
                // Unreadable subdirectory below the root; nothing to attribute
                // to a language, so it is dropped from the scan.
                log_walk_error(&e);
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = match entry.path().strip_prefix(root) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let rel = normalize_rel(&rel.to_string_lossy());
        candidates.push((rel, entry.into_path()));
    }
    candidates.sort_by(|a, b| a.0.cmp(&b.0));

    let mut scan = CorpusScan::default();
    for (rel, abs) in candidates {
        let entry = manifest.and_then(|m| m.get(&rel));
        let declared = entry.and_then(|e| e.language);
        let language = match declared.or_else(|| LanguageId::from_path(Path::new(&rel))) {
            Some(l) => l,
            None => continue,
        };
        let license_tag = entry.and_then(|e| e.license.clone());
        if let Some(tag) = &license_tag {
            if !license_allowed(tag) {
                scan.skipped.push(ScanSkip {
                    path: rel,
                    language,
                    reason: SkipReason::License(tag.clone()),
                });
                continue;
            }
        }
        match fs::read(&abs) {
            Ok(bytes) => scan.files.push(RawFile {
                path: rel,
                language,
                bytes,
                license_tag,
            }),
            Err(e) => scan.skipped.push(ScanSkip {
                path: rel,
                language,
                reason: SkipReason::Unreadable(e.to_string()),
            }),
        }
    }
    Ok(scan)
}

fn log_walk_error(e: &walkdir::Error) {
    if let Some(path) = e.path() {
        eprintln!("warning: skipping {}: {e}", path.display());
    }
}

// ----------------------------------------------------------------------------
// Normalization

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: undecodable ({detail})")]
pub struct Undecodable {
    pub path: String,
    pub detail: String,
}

/// Decodes raw bytes into text. UTF-8 (with or without BOM) is accepted, as
/// is UTF-16 when announced by a BOM. NUL bytes mark binary content.
pub fn decode_bytes(bytes: &[u8]) -> std::result::Result<String, String> {
    if let Some(rest) = bytes.strip_prefix(&[0xEF, 0xBB, 0xBF]) {
        return decode_utf8(rest);
    }
    if let Some(rest) = bytes.strip_prefix(&[0xFF, 0xFE]) {
        return decode_utf16(rest, u16::from_le_bytes);
    }
    if let Some(rest) = bytes.strip_prefix(&[0xFE, 0xFF]) {
        return decode_utf16(rest, u16::from_be_bytes);
    }
    decode_utf8(bytes)
}

fn decode_utf8(bytes: &[u8]) -> std::result::Result<String, String> {
    if let Some(pos) = bytes.iter().position(|&b| b == 0) {
        return Err(format!("NUL byte at offset {pos}"));
    }
    String::from_utf8(bytes.to_vec()).map_err(|e| format!("invalid UTF-8: {}", e.utf8_error()))
}

fn decode_utf16(
    bytes: &[u8],
    word: fn([u8; 2]) -> u16,
) -> std::result::Result<String, String> {
    if bytes.len() % 2 != 0 {
        return Err("odd byte count for UTF-16".into());
    }
    let units = bytes.chunks_exact(2).map(|c| word([c[0], c[1]]));
    let text: String = char::decode_utf16(units)
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| format!("invalid UTF-16: {e}"))?;
    if text.contains('\0') {
        return Err("NUL character in UTF-16 text".into());
    }
    Ok(text)
}

/// Text-level normalization: line endings to `\n`, byte-order marks and
/// control characters other than `\n`/`\t` removed, trailing whitespace
/// stripped per line. Indentation and inline spacing are untouched.
pub fn normalize_str(text: &str) -> String {
    let unified = text.replace("\r\n", "\n").replace('\r', "\n");
    let cleaned: String = unified
        .chars()
        .filter(|&c| c == '\n' || c == '\t' || !(c.is_control() || c == '\u{FEFF}'))
        .collect();
    let mut out = String::with_capacity(cleaned.len());
    let mut lines = cleaned.split('\n').peekable();
    while let Some(line) = lines.next() {
        out.push_str(line.trim_end());
        if lines.peek().is_some() {
            out.push('\n');
        }
    }
    out
}

/// Number of newline-delimited lines; a final unterminated line counts.
pub fn line_count(text: &str) -> usize {
    text.lines().count()
}

pub fn normalize_text(raw: &RawFile) -> std::result::Result<PreprocessedFile, Undecodable> {
    let decoded = decode_bytes(&raw.bytes).map_err(|detail| Undecodable {
        path: raw.path.clone(),
        detail,
    })?;
    let text = normalize_str(&decoded);
    Ok(PreprocessedFile {
        path: raw.path.clone(),
        language: raw.language,
        line_count: line_count(&text),
        text,
        original_byte_count: raw.bytes.len(),
    })
}

// ----------------------------------------------------------------------------
// Filtering

/// First and third quartiles by linear interpolation between order
/// statistics at rank `p·(n+1)`, clamped to the sample range.
pub fn quartiles(values: &[f64]) -> Option<(f64, f64)> {
    if values.is_empty() {
        return None;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    Some((quantile_sorted(&sorted, 0.25), quantile_sorted(&sorted, 0.75)))
}

fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    let rank = p * (n as f64 + 1.0);
    if rank <= 1.0 {
        return sorted[0];
    }
    if rank >= n as f64 {
        return sorted[n - 1];
    }
    let lo = rank.floor() as usize;
    let frac = rank - lo as f64;
    sorted[lo - 1] + frac * (sorted[lo] - sorted[lo - 1])
}

/// Hard line bounds, then a per-language IQR outlier filter over the files
/// that survived the bounds. Decisions are returned in input order.
pub fn filter_by_size(files: &[PreprocessedFile], apply_iqr: bool) -> Vec<FilterDecision> {
    let mut reasons: Vec<FilterReason> = files
        .iter()
        .map(|f| {
            if f.line_count < MIN_LINES {
                FilterReason::TooShort
            } else if f.line_count > MAX_LINES {
                FilterReason::TooLong
            } else {
                FilterReason::Accepted
            }
        })
        .collect();

    if apply_iqr {
        let mut by_language: BTreeMap<LanguageId, Vec<usize>> = BTreeMap::new();
        for (i, f) in files.iter().enumerate() {
            if reasons[i] == FilterReason::Accepted {
                by_language.entry(f.language).or_default().push(i);
            }
        }
        for indices in by_language.values() {
            if indices.len() < IQR_MIN_FILES {
                continue;
            }
            let counts: Vec<f64> = indices.iter().map(|&i| files[i].line_count as f64).collect();
            let (q1, q3) = quartiles(&counts).expect("non-empty bucket");
            let iqr = q3 - q1;
            let (lo, hi) = (q1 - IQR_WHISKER * iqr, q3 + IQR_WHISKER * iqr);
            for (&i, &c) in indices.iter().zip(&counts) {
                if c < lo || c > hi {
                    reasons[i] = FilterReason::IqrOutlier;
                }
            }
        }
    }

    files
        .iter()
        .zip(reasons)
        .map(|(f, r)| FilterDecision::new(f.path.clone(), f.language, r))
        .collect()
}

/// Collapses files with identical SHA-256 digests of their text, keeping the
/// lexicographically smallest path. Both outputs are sorted by path.
pub fn dedup(files: Vec<PreprocessedFile>) -> (Vec<PreprocessedFile>, Vec<FilterDecision>) {
    let mut files = files;
    files.sort_by(|a, b| a.path.cmp(&b.path));
    let digests: Vec<String> = files.par_iter().map(|f| source_hash(&f.text)).collect();

    let mut seen: HashSet<String> = HashSet::with_capacity(files.len());
    let mut unique = Vec::with_capacity(files.len());
    let mut dropped = Vec::new();
    for (file, digest) in files.into_iter().zip(digests) {
        if !seen.insert(digest) {
            dropped.push(FilterDecision::new(
                file.path.clone(),
                file.language,
                FilterReason::Duplicate,
            ));
        } else {
            unique.push(file);
        }
    }
    (unique, dropped)
}

// ----------------------------------------------------------------------------
// Whole preprocessing chain

#[derive(Debug, Clone, Copy)]
pub struct IngestOptions {
    pub apply_iqr: bool,
}

impl Default for IngestOptions {
    fn default() -> Self {
        IngestOptions { apply_iqr: true }
    }
}

#[derive(Debug, Clone, Default)]
pub struct IngestOutcome {
    /// Files that passed every stage, sorted by path.
    pub accepted: Vec<PreprocessedFile>,
    /// One decision per scanned, readable file, sorted by path.
    pub decisions: Vec<FilterDecision>,
    pub skipped: Vec<ScanSkip>,
}

/// Normalize, filter and deduplicate a scan. Normalization and hashing run
/// in parallel; results are re-sorted by path.
pub fn preprocess(scan: CorpusScan, options: IngestOptions) -> IngestOutcome {
    let normalized: Vec<_> = scan.files.par_iter().map(normalize_text).collect();

    let mut decisions = Vec::with_capacity(normalized.len());
    let mut decoded = Vec::with_capacity(normalized.len());
    for (raw, result) in scan.files.iter().zip(normalized) {
        match result {
            Ok(f) => decoded.push(f),
            Err(_) => decisions.push(FilterDecision::new(
                raw.path.clone(),
                raw.language,
                FilterReason::Undecodable,
            )),
        }
    }

    let size = filter_by_size(&decoded, options.apply_iqr);
    let mut survivors = Vec::with_capacity(decoded.len());
    for (file, decision) in decoded.into_iter().zip(size) {
        if decision.accepted {
            survivors.push(file);
        } else {
            decisions.push(decision);
        }
    }

    let (unique, dropped) = dedup(survivors);
    decisions.extend(dropped);
    decisions.extend(
        unique
            .iter()
            .map(|f| FilterDecision::new(f.path.clone(), f.language, FilterReason::Accepted)),
    );
    decisions.sort_by(|a, b| a.path.cmp(&b.path));

    IngestOutcome {
        accepted: unique,
        decisions,
        skipped: scan.skipped,
    }
}

/// Machine-readable counts per decision reason per language.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub languages: BTreeMap<LanguageId, BTreeMap<FilterReason, usize>>,
    pub skipped: Vec<ScanSkip>,
}

impl IngestReport {
    pub fn from_outcome(outcome: &IngestOutcome) -> Self {
        let mut languages: BTreeMap<LanguageId, BTreeMap<FilterReason, usize>> = BTreeMap::new();
        for d in &outcome.decisions {
            *languages.entry(d.language).or_default().entry(d.reason).or_default() += 1;
        }
        IngestReport {
            languages,
            skipped: outcome.skipped.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(path: &str, bytes: &[u8]) -> RawFile {
        RawFile {
            path: path.into(),
            language: LanguageId::Python,
            bytes: bytes.to_vec(),
            license_tag: None,
        }
    }

    fn pre(path: &str, lang: LanguageId, lines: usize) -> PreprocessedFile {
        let text = "x\n".repeat(lines);
        PreprocessedFile {
            path: path.into(),
            language: lang,
            line_count: lines,
            original_byte_count: text.len(),
            text,
        }
    }

    #[test]
    fn bom_is_stripped() {
        let f = normalize_text(&raw("a.py", b"\xEF\xBB\xBFx = 1\n")).unwrap();
        assert_eq!(f.text, "x = 1\n");
        assert_eq!(f.line_count, 1);
        assert_eq!(f.original_byte_count, 9);
    }

    #[test]
    fn crlf_becomes_lf() {
        let f = normalize_text(&raw("a.py", b"a\r\nb\r\n")).unwrap();
        assert_eq!(f.text, "a\nb\n");
        assert_eq!(f.line_count, 2);
    }

    #[test]
    fn trailing_space_stripped_tab_kept() {
        let f = normalize_text(&raw("a.py", b"def f():\n\treturn 1 \n")).unwrap();
        assert_eq!(f.text, "def f():\n\treturn 1\n");
    }

    #[test]
    fn control_characters_removed_indentation_kept() {
        let f = normalize_text(&raw("a.py", b"if x:\n    y\x07 = 2\x0c\n")).unwrap();
        assert_eq!(f.text, "if x:\n    y = 2\n");
    }

    #[test]
    fn utf16_with_bom_is_transcoded() {
        let mut bytes = vec![0xFF, 0xFE];
        for unit in "x = 1\n".encode_utf16() {
            bytes.extend_from_slice(&unit.to_le_bytes());
        }
        assert_eq!(normalize_text(&raw("a.py", &bytes)).unwrap().text, "x = 1\n");
    }

    #[test]
    fn invalid_utf8_and_binary_are_undecodable() {
        assert!(normalize_text(&raw("a.py", b"caf\xe9\n")).is_err());
        assert!(normalize_text(&raw("a.py", b"\x89PNG\r\n\x1a\n\0\0")).is_err());
        assert!(normalize_text(&raw("a.py", b"ok\0ok")).is_err());
    }

    #[test]
    fn line_count_cases() {
        assert_eq!(line_count(""), 0);
        assert_eq!(line_count("a"), 1);
        assert_eq!(line_count("a\n"), 1);
        assert_eq!(line_count("a\n\nb"), 3);
    }

    #[test]
    fn hard_bounds() {
        let files = vec![
            pre("a.py", LanguageId::Python, 5),
            pre("b.py", LanguageId::Python, 10_001),
            pre("c.py", LanguageId::Python, 10),
            pre("d.py", LanguageId::Python, 10_000),
        ];
        let reasons: Vec<_> = filter_by_size(&files, true).into_iter().map(|d| d.reason).collect();
        assert_eq!(
            reasons,
            vec![
                FilterReason::TooShort,
                FilterReason::TooLong,
                FilterReason::Accepted,
                FilterReason::Accepted
            ]
        );
    }

    #[test]
    fn quartiles_of_skewed_bucket() {
        // Order statistics 20 22 24 26 500: rank 1.5 -> 21, rank 4.5 -> 263.
        let (q1, q3) = quartiles(&[20.0, 22.0, 24.0, 26.0, 500.0]).unwrap();
        assert_eq!(q1, 21.0);
        assert_eq!(q3, 263.0);
    }

    #[test]
    fn skewed_bucket_is_fully_accepted() {
        let files: Vec<_> = [20, 22, 24, 26, 500]
            .iter()
            .enumerate()
            .map(|(i, &n)| pre(&format!("f{i}.py"), LanguageId::Python, n))
            .collect();
        assert!(filter_by_size(&files, true).iter().all(|d| d.accepted));
    }

    #[test]
    fn iqr_rejects_far_outlier() {
        let mut files: Vec<_> = (0..8)
            .map(|i| pre(&format!("f{i}.py"), LanguageId::Python, 20 + i))
            .collect();
        files.push(pre("z.py", LanguageId::Python, 4000));
        let decisions = filter_by_size(&files, true);
        assert_eq!(decisions[8].reason, FilterReason::IqrOutlier);
        assert!(decisions[..8].iter().all(|d| d.accepted));
        assert!(filter_by_size(&files, false).iter().all(|d| d.accepted));
    }

    #[test]
    fn iqr_skipped_for_small_buckets() {
        let files = vec![
            pre("a.py", LanguageId::Python, 10),
            pre("b.py", LanguageId::Python, 11),
            pre("c.py", LanguageId::Python, 9000),
        ];
        assert!(filter_by_size(&files, true).iter().all(|d| d.accepted));
    }

    #[test]
    fn iqr_is_per_language() {
        let mut files: Vec<_> = (0..6)
            .map(|i| pre(&format!("p{i}.py"), LanguageId::Python, 20 + i))
            .collect();
        files.extend((0..6).map(|i| pre(&format!("j{i}.java"), LanguageId::Java, 3000 + i)));
        assert!(filter_by_size(&files, true).iter().all(|d| d.accepted));
    }

    fn text_file(path: &str, text: &str) -> PreprocessedFile {
        PreprocessedFile {
            path: path.into(),
            language: LanguageId::Python,
            text: text.into(),
            line_count: line_count(text),
            original_byte_count: text.len(),
        }
    }

    #[test]
    fn dedup_identical_pair() {
        let (unique, dropped) = dedup(vec![text_file("b.py", "x = 1\n"), text_file("a.py", "x = 1\n")]);
        assert_eq!(unique.len(), 1);
        assert_eq!(unique[0].path, "a.py");
        assert_eq!(dropped.len(), 1);
        assert_eq!(dropped[0].path, "b.py");
        assert_eq!(dropped[0].reason, FilterReason::Duplicate);
        assert!(!dropped[0].accepted);
    }

    #[test]
    fn dedup_keeps_near_duplicates() {
        let (unique, dropped) =
            dedup(vec![text_file("a.py", "x = 1  # a\n"), text_file("b.py", "x = 1  # b\n")]);
        assert_eq!(unique.len(), 2);
        assert!(dropped.is_empty());
    }

    #[test]
    fn dedup_ten_files_seven_unique() {
        // 3 copies of A, 2 copies of B, 5 distinct others: 1 + 1 + 5 = 7.
        let mut files = Vec::new();
        for i in 0..3 {
            files.push(text_file(&format!("a{i}.py"), "content A\n"));
        }
        for i in 0..2 {
            files.push(text_file(&format!("b{i}.py"), "content B\n"));
        }
        for i in 0..5 {
            files.push(text_file(&format!("c{i}.py"), &format!("content C{i}\n")));
        }
        let (unique, dropped) = dedup(files);
        assert_eq!(unique.len(), 7);
        assert_eq!(dropped.len(), 3);
        let kept: Vec<_> = unique.iter().map(|f| f.path.as_str()).collect();
        assert!(kept.contains(&"a0.py") && kept.contains(&"b0.py"));
    }

    #[test]
    fn manifest_parsing() {
        let text = "# comment\nsrc/a.h\tC\tMIT\nb.py\t-\tGPL-3.0\nc.rb\n";
        let m = Manifest::parse(text, Path::new("m.tsv")).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m.get("src/a.h").unwrap().language, Some(LanguageId::C));
        assert_eq!(m.get("b.py").unwrap().license.as_deref(), Some("GPL-3.0"));
        assert_eq!(m.get("c.rb").unwrap(), &ManifestEntry::default());
        assert!(Manifest::parse("a.py\tKlingon\tMIT\n", Path::new("m")).is_err());
        assert!(Manifest::parse("a.py\n./a.py\n", Path::new("m")).is_err());
    }

    #[test]
    fn allowlist() {
        assert!(license_allowed("MIT"));
        assert!(license_allowed("apache-2.0"));
        assert!(license_allowed("BSD-3-Clause"));
        assert!(!license_allowed("GPL-3.0"));
    }
}
