use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use uast_cli::commands::{self, ExportFormat};
use uast_cli::pipeline::{self, RunConfig};
use uast_cli::service::{self, AppState, DEFAULT_MAX_SOURCE_BYTES};
use uast_cli::CliError;
use uast_core::LanguageId;
use uast_store::ShardNaming;

#[derive(Parser)]
#[command(name = "uast", version, about = "Parse source corpora into universal AST records")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a corpus into per-language shards and a run report.
    Parse {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Comma-separated language names or slugs.
        #[arg(long, value_delimiter = ',')]
        languages: Vec<LanguageId>,
        /// Worker threads; 0 uses every CPU.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        no_iqr: bool,
        /// Grammar bundle descriptor to check against the linked grammars.
        #[arg(long)]
        grammars: Option<PathBuf>,
        /// Rule table file or directory of `.tsv` files.
        #[arg(long)]
        rules: Option<PathBuf>,
        #[arg(long, default_value = "slug")]
        shard_naming: ShardNaming,
    },
    /// Check every record in the given shards.
    Validate { shards: Vec<PathBuf> },
    /// Per-language counts, densities and footprints as stats.json.
    Stats {
        shards: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Cosine similarity of node-type distributions as similarity.csv.
    Similarity {
        shards: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// PCA projection of node-type distributions as pca.csv.
    Pca {
        shards: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Dump records as canonical JSON; to stdout unless --out is given.
    Export {
        shards: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = ExportFormat::Jsonl)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the HTTP parsing service.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: String,
        #[arg(long)]
        grammars: Option<PathBuf>,
        #[arg(long)]
        rules: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_SOURCE_BYTES)]
        max_source_bytes: usize,
    },
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Parse {
            corpus,
            out,
            manifest,
            languages,
            workers,
            no_iqr,
            grammars,
            rules,
            shard_naming,
        } => {
            let config = RunConfig {
                corpus,
                manifest,
                out,
                languages: languages.into_iter().collect::<BTreeSet<_>>(),
                workers,
                apply_iqr: !no_iqr,
                shard_naming,
                grammars,
                rules,
            };
            let outcome = pipeline::cmd_parse(&config)?;
            let t = &outcome.report.total;
            eprintln!(
                "attempted {} succeeded {} failed {} ({} shards)",
                t.attempted,
                t.succeeded,
                t.failed,
                outcome.report.shards.len()
            );
            Ok(outcome.report.exit_code())
        }
        Command::Validate { shards } => {
            let report = commands::cmd_validate(&shards)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            Ok(report.exit_code())
        }
        Command::Stats { shards, out } => {
            println!("{}", commands::cmd_stats(&shards, &out)?.display());
            Ok(0)
        }
        Command::Similarity { shards, out } => {
            println!("{}", commands::cmd_similarity(&shards, &out)?.display());
            Ok(0)
        }
        Command::Pca { shards, out, k } => {
            println!("{}", commands::cmd_pca(&shards, &out, k)?.display());
            Ok(0)
        }
        Command::Export { shards, format, out } => {
            match out {
                Some(dir) => {
                    commands::cmd_export(&shards, format, &dir)?;
                }
                None if format == ExportFormat::Jsonl => {
                    commands::export_jsonl(&shards, &mut std::io::stdout().lock())?;
                }
                None => return Err(CliError::Config("--format json needs --out".into())),
            }
            Ok(0)
        }
        Command::Serve {
            bind,
            grammars,
            rules,
            max_source_bytes,
        } => {
            let state = AppState {
                grammars: pipeline::load_grammars(grammars.as_deref())?,
                rules: pipeline::load_rules(rules.as_deref())?,
                max_source_bytes,
            };
            let runtime = tokio::runtime::Runtime::new().map_err(|e| CliError::Io(e.to_string()))?;
            runtime
                .block_on(service::serve(&bind, state))
                .map_err(|e| CliError::Io(format!("{bind}: {e}")))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
