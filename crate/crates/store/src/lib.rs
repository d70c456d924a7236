//! Parquet shards of universal file records, one file per language.
//!
//! Metadata fields are stored as native columns; the node array, category
//! index and cross-language map are stored as canonical JSON text.

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use arrow_array::{Array, ArrayRef, Float64Array, RecordBatch, StringArray, UInt64Array};
use arrow_schema::{DataType, Field, Schema, SchemaRef};
use parquet::arrow::arrow_reader::ParquetRecordBatchReaderBuilder;
use parquet::arrow::ArrowWriter;
use parquet::basic::{Compression, ZstdLevel};
use parquet::file::metadata::KeyValue;
use parquet::file::properties::{WriterProperties, WriterVersion};
use serde::{Deserialize, Serialize};
use uast_core::{FileMetadata, LanguageId, UniversalFileRecord, BUNDLE_VERSION, SCHEMA_VERSION};

pub const SHARD_EXTENSION: &str = "parquet";

pub const META_LANGUAGE: &str = "uast.language";
pub const META_GRAMMARS: &str = "uast.grammar_bundle";
pub const META_SCHEMA: &str = "uast.schema_version";

const COLUMNS: [(&str, DataType); 11] = [
    ("path", DataType::Utf8),
    ("language", DataType::Utf8),
    ("lines", DataType::UInt64),
    ("avg_line_length", DataType::Float64),
    ("nodes", DataType::UInt64),
    ("errors", DataType::UInt64),
    ("source_hash", DataType::Utf8),
    ("nodes_json", DataType::Utf8),
    ("node_categories_json", DataType::Utf8),
    ("cross_language_map_json", DataType::Utf8),
    ("schema_version", DataType::Utf8),
];

#[derive(Debug, thiserror::Error)]
pub enum StoreError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: unreadable shard: {message}")]
    Unreadable { path: PathBuf, message: String },
    #[error("{path}: schema mismatch in column `{column}`: {message}")]
    Schema {
        path: PathBuf,
        column: String,
        message: String,
    },
    #[error("{path}: corrupt value in column `{column}`, row {row}: {message}")]
    Corrupt {
        path: PathBuf,
        column: String,
        row: usize,
        message: String,
    },
    #[error("record `{path}` is {found}, shard language is {expected}")]
    MixedLanguages {
        path: String,
        expected: LanguageId,
        found: LanguageId,
    },
    #[error("encode failed: {0}")]
    Encode(String),
}

pub type Result<T, E = StoreError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusShard {
    pub language: LanguageId,
    pub records: Vec<UniversalFileRecord>,
    pub on_disk_bytes: u64,
    /// Canonical-JSON size of the records.
    pub in_memory_bytes: u64,
}

/// How shard files are named inside an output directory.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShardNaming {
    /// `python.parquet`, `cpp.parquet`, `csharp.parquet`
    #[default]
    Slug,
    /// `Python.parquet`, `C++.parquet`, `C#.parquet`
    Name,
}

impl std::str::FromStr for ShardNaming {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "slug" => Ok(ShardNaming::Slug),
            "name" => Ok(ShardNaming::Name),
            other => Err(format!("unknown shard naming `{other}` (expected slug or name)")),
        }
    }
}

pub fn shard_path(dir: &Path, language: LanguageId, naming: ShardNaming) -> PathBuf {
    let stem = match naming {
        ShardNaming::Slug => language.slug(),
        ShardNaming::Name => language.name(),
    };
    dir.join(format!("{stem}.{SHARD_EXTENSION}"))
}

#[derive(Debug, Clone)]
pub struct EncodeOptions {
    pub grammar_version: String,
}

impl Default for EncodeOptions {
    fn default() -> Self {
        EncodeOptions {
            grammar_version: BUNDLE_VERSION.to_string(),
        }
    }
}

fn schema() -> SchemaRef {
    Arc::new(Schema::new(
        COLUMNS
            .iter()
            .map(|(name, ty)| Field::new(*name, ty.clone(), false))
            .collect::<Vec<_>>(),
    ))
}

fn canonical<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

/// Canonical-JSON byte length of one record.
pub fn canonical_size(record: &UniversalFileRecord) -> u64 {
    serde_json::to_vec(record).expect("records serialize").len() as u64
}

pub fn encode_shard(
    language: LanguageId,
    records: &[UniversalFileRecord],
    path: &Path,
) -> Result<CorpusShard> {
    encode_shard_with(language, records, path, &EncodeOptions::default())
}

/// Writes records sorted by path to `path` via a sibling temp file.
pub fn encode_shard_with(
    language: LanguageId,
    records: &[UniversalFileRecord],
    path: &Path,
    options: &EncodeOptions,
) -> Result<CorpusShard> {
    if let Some(r) = records.iter().find(|r| r.language != language) {
        return Err(StoreError::MixedLanguages {
            path: r.path.clone(),
            expected: language,
            found: r.language,
        });
    }
    let mut sorted: Vec<&UniversalFileRecord> = records.iter().collect();
    sorted.sort_by(|a, b| a.path.cmp(&b.path));

    let strings = |f: &dyn Fn(&UniversalFileRecord) -> String| -> ArrayRef {
        Arc::new(StringArray::from_iter_values(sorted.iter().map(|r| f(r))))
    };
    let ints = |f: &dyn Fn(&FileMetadata) -> usize| -> ArrayRef {
        Arc::new(UInt64Array::from_iter_values(
            sorted.iter().map(|r| f(&r.metadata) as u64),
        ))
    };
    let columns: Vec<ArrayRef> = vec![
        strings(&|r| r.path.clone()),
        strings(&|r| r.language.name().to_string()),
        ints(&|m| m.lines),
        Arc::new(Float64Array::from_iter_values(
            sorted.iter().map(|r| r.metadata.avg_line_length),
        )),
        ints(&|m| m.nodes),
        ints(&|m| m.errors),
        strings(&|r| r.metadata.source_hash.clone()),
        strings(&|r| canonical(&r.nodes)),
        strings(&|r| canonical(&r.node_categories)),
        strings(&|r| canonical(&r.cross_language_map)),
        strings(&|r| r.schema_version.clone()),
    ];
    let batch = RecordBatch::try_new(schema(), columns).map_err(|e| StoreError::Encode(e.to_string()))?;

    let props = WriterProperties::builder()
        .set_writer_version(WriterVersion::PARQUET_2_0)
        .set_compression(Compression::ZSTD(ZstdLevel::try_new(3).expect("valid level")))
        .set_key_value_metadata(Some(vec![
            KeyValue::new(META_LANGUAGE.to_string(), language.name().to_string()),
            KeyValue::new(META_GRAMMARS.to_string(), options.grammar_version.clone()),
            KeyValue::new(META_SCHEMA.to_string(), SCHEMA_VERSION.to_string()),
        ]))
        .build();

    let io_err = |source| StoreError::Io {
        path: path.to_path_buf(),
        source,
    };
    let tmp = path.with_extension(format!("{SHARD_EXTENSION}.tmp"));
    let write = || -> Result<()> {
        let file = File::create(&tmp).map_err(io_err)?;
        let mut writer = ArrowWriter::try_new(file, schema(), Some(props))
            .map_err(|e| StoreError::Encode(e.to_string()))?;
        writer.write(&batch).map_err(|e| StoreError::Encode(e.to_string()))?;
        let file = writer.into_inner().map_err(|e| StoreError::Encode(e.to_string()))?;
        file.sync_all().map_err(io_err)?;
        Ok(())
    };
    if let Err(e) = write() {
        let _ = fs::remove_file(&tmp);
        return Err(e);
    }
    fs::rename(&tmp, path).map_err(io_err)?;
    let on_disk_bytes = fs::metadata(path).map_err(io_err)?.len();

    let records: Vec<UniversalFileRecord> = sorted.into_iter().cloned().collect();
    Ok(CorpusShard {
        language,
        in_memory_bytes: records.iter().map(canonical_size).sum(),
        records,
        on_disk_bytes,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecodedShard {
    pub shard: CorpusShard,
    pub grammar_version: String,
    pub schema_version: String,
    /// Version mismatches against this build; decoding still succeeds.
    pub warnings: Vec<String>,
}

fn column<'a, T: 'static>(
    path: &Path,
    batch: &'a RecordBatch,
    name: &str,
) -> Result<&'a T> {
    batch
        .column_by_name(name)
        .and_then(|c| c.as_any().downcast_ref::<T>())
        .ok_or_else(|| StoreError::Schema {
            path: path.to_path_buf(),
            column: name.to_string(),
            message: "missing or mistyped".into(),
        })
}

pub fn decode_shard(path: &Path) -> Result<DecodedShard> {
    let unreadable = |message: String| StoreError::Unreadable {
        path: path.to_path_buf(),
        message,
    };
    let file = File::open(path).map_err(|source| StoreError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let builder = ParquetRecordBatchReaderBuilder::try_new(file).map_err(|e| unreadable(e.to_string()))?;

    let kv: BTreeMap<String, String> = builder
        .metadata()
        .file_metadata()
        .key_value_metadata()
        .map(|kvs| {
            kvs.iter()
                .filter_map(|kv| kv.value.clone().map(|v| (kv.key.clone(), v)))
                .collect()
        })
        .unwrap_or_default();
    let meta = |key: &str| {
        kv.get(key).cloned().ok_or_else(|| StoreError::Schema {
            path: path.to_path_buf(),
            column: key.to_string(),
            message: "missing file metadata key".into(),
        })
    };
    let language: LanguageId = meta(META_LANGUAGE)?.parse().map_err(|e: uast_core::Error| {
        StoreError::Schema {
            path: path.to_path_buf(),
            column: META_LANGUAGE.into(),
            message: e.to_string(),
        }
    })?;
    let grammar_version = meta(META_GRAMMARS)?;
    let schema_version = meta(META_SCHEMA)?;

    let file_schema = builder.schema().clone();
    for (name, ty) in COLUMNS.iter() {
        match file_schema.field_with_name(name) {
            Ok(f) if f.data_type() == ty => {}
            Ok(f) => {
                return Err(StoreError::Schema {
                    path: path.to_path_buf(),
                    column: name.to_string(),
                    message: format!("expected {ty}, found {}", f.data_type()),
                })
            }
            Err(_) => {
                return Err(StoreError::Schema {
                    path: path.to_path_buf(),
                    column: name.to_string(),
                    message: "column missing".into(),
                })
            }
        }
    }
    if file_schema.fields().len() != COLUMNS.len() {
        return Err(StoreError::Schema {
            path: path.to_path_buf(),
            column: "*".into(),
            message: format!("expected {} columns, found {}", COLUMNS.len(), file_schema.fields().len()),
        });
    }

    let reader = builder.build().map_err(|e| unreadable(e.to_string()))?;
    let mut records = Vec::new();
    for batch in reader {
        let batch = batch.map_err(|e| unreadable(e.to_string()))?;
        decode_batch(path, &batch, language, &mut records)?;
    }

    let mut warnings = Vec::new();
    if grammar_version != BUNDLE_VERSION {
        warnings.push(format!(
            "{}: written with grammar bundle `{grammar_version}`, current bundle is `{BUNDLE_VERSION}`",
            path.display()
        ));
    }
    if schema_version != SCHEMA_VERSION {
        warnings.push(format!(
            "{}: schema version {schema_version}, current is {SCHEMA_VERSION}",
            path.display()
        ));
    }

    let on_disk_bytes = fs::metadata(path)
        .map_err(|source| StoreError::Io {
            path: path.to_path_buf(),
            source,
        })?
        .len();
    Ok(DecodedShard {
        shard: CorpusShard {
            language,
            in_memory_bytes: records.iter().map(canonical_size).sum(),
            records,
            on_disk_bytes,
        },
        grammar_version,
        schema_version,
        warnings,
    })
}

fn decode_batch(
    path: &Path,
    batch: &RecordBatch,
    language: LanguageId,
    out: &mut Vec<UniversalFileRecord>,
) -> Result<()> {
    let paths = column::<StringArray>(path, batch, "path")?;
    let languages = column::<StringArray>(path, batch, "language")?;
    let lines = column::<UInt64Array>(path, batch, "lines")?;
    let avg = column::<Float64Array>(path, batch, "avg_line_length")?;
    let nodes = column::<UInt64Array>(path, batch, "nodes")?;
    let errors = column::<UInt64Array>(path, batch, "errors")?;
    let hashes = column::<StringArray>(path, batch, "source_hash")?;
    let nodes_json = column::<StringArray>(path, batch, "nodes_json")?;
    let categories_json = column::<StringArray>(path, batch, "node_categories_json")?;
    let map_json = column::<StringArray>(path, batch, "cross_language_map_json")?;
    let versions = column::<StringArray>(path, batch, "schema_version")?;

    let base = out.len();
    for i in 0..batch.num_rows() {
        let row = base + i;
        let corrupt = |column: &str, message: String| StoreError::Corrupt {
            path: path.to_path_buf(),
            column: column.to_string(),
            row,
            message,
        };
        let row_language: LanguageId = languages
            .value(i)
            .parse()
            .map_err(|e: uast_core::Error| corrupt("language", e.to_string()))?;
        if row_language != language {
            return Err(corrupt(
                "language",
                format!("{row_language} in a {language} shard"),
            ));
        }
        let usize_of = |column: &str, v: u64| {
            usize::try_from(v).map_err(|_| corrupt(column, format!("{v} out of range")))
        };
        let record = UniversalFileRecord {
            language,
            path: paths.value(i).to_string(),
            metadata: FileMetadata {
                lines: usize_of("lines", lines.value(i))?,
                avg_line_length: avg.value(i),
                nodes: usize_of("nodes", nodes.value(i))?,
                errors: usize_of("errors", errors.value(i))?,
                source_hash: hashes.value(i).to_string(),
            },
            nodes: serde_json::from_str(nodes_json.value(i))
                .map_err(|e| corrupt("nodes_json", e.to_string()))?,
            node_categories: serde_json::from_str(categories_json.value(i))
                .map_err(|e| corrupt("node_categories_json", e.to_string()))?,
            cross_language_map: serde_json::from_str(map_json.value(i))
                .map_err(|e| corrupt("cross_language_map_json", e.to_string()))?,
            schema_version: versions.value(i).to_string(),
        };
        out.push(record);
    }
    Ok(())
}

// ----------------------------------------------------------------------------
// Footprints

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Footprint {
    pub disk_bytes: u64,
    pub memory_bytes: u64,
    /// memory_bytes / disk_bytes; 0 when nothing is on disk.
    pub ratio: f64,
}

impl Footprint {
    fn new(disk_bytes: u64, memory_bytes: u64) -> Self {
        let ratio = if disk_bytes == 0 {
            0.0
        } else {
            memory_bytes as f64 / disk_bytes as f64
        };
        Footprint {
            disk_bytes,
            memory_bytes,
            ratio,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FootprintReport {
    pub languages: BTreeMap<LanguageId, Footprint>,
    pub total: Option<Footprint>,
}

impl FootprintReport {
    /// Largest per-language ratio over the smallest.
    pub fn ratio_spread(&self) -> Option<f64> {
        let ratios = self.languages.values().map(|f| f.ratio);
        let max = ratios.clone().fold(f64::NEG_INFINITY, f64::max);
        let min = ratios.fold(f64::INFINITY, f64::min);
        (min > 0.0 && min.is_finite()).then(|| max / min)
    }
}

pub fn footprint_report(shards: &[CorpusShard]) -> FootprintReport {
    let mut sums: BTreeMap<LanguageId, (u64, u64)> = BTreeMap::new();
    for s in shards {
        let e = sums.entry(s.language).or_default();
        e.0 += s.on_disk_bytes;
        e.1 += s.in_memory_bytes;
    }
    if sums.is_empty() {
        return FootprintReport::default();
    }
    let (disk, mem) = sums.values().fold((0, 0), |acc, v| (acc.0 + v.0, acc.1 + v.1));
    FootprintReport {
        languages: sums
            .into_iter()
            .map(|(l, (d, m))| (l, Footprint::new(d, m)))
            .collect(),
        total: Some(Footprint::new(disk, mem)),
    }
}
