use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mccoy_cli::config::parse_expectation;
use mccoy_cli::{
    cmd_build, cmd_check, cmd_paper_verify, cmd_search, exit_code, markdown, with_workers, Format, Report, RunConfig,
    EXIT_FAIL, EXIT_PASS, EXIT_USAGE,
};
use mccoy_core::constructions::DEFAULT_MAX_RING_SIZE;
use mccoy_core::properties::Property;

#[derive(Parser)]
#[command(name = "mccoy", version, about = "Finite-ring workbench for McCoy-type properties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a ring and print its structure
    Build {
        /// Ring expression or .ring file
        ring: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run property deciders on one ring
    Check {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        common: Common,
        /// refuted or not-refuted; a mismatch exits with 1
        #[arg(long)]
        expect: Option<String>,
    },
    /// Run the verification suite
    PaperVerify {
        #[arg(long, conflicts_with = "entry")]
        all: bool,
        /// Entry key, e.g. "Example 2.8" (repeatable)
        #[arg(long)]
        entry: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run deciders over a family such as "{F2|Z4|T(2, F2)}"
    Search {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Md,
}

#[derive(Args)]
struct Common {
    /// Property name (repeatable)
    #[arg(long = "property")]
    properties: Vec<String>,
    #[arg(long, default_value_t = 1)]
    max_degree: usize,
    /// Word-length window for algebras that are not finite-dimensional
    #[arg(long)]
    window: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    verify_axioms: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_RING_SIZE)]
    max_size: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

impl Common {
    fn config(&self, ring: String) -> Result<RunConfig, mccoy_core::Error> {
        let properties = self
            .properties
            .iter()
            .map(|p| p.parse::<Property>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RunConfig {
            ring,
            properties,
            max_degree: self.max_degree,
            window: self.window,
            max_ring_size: self.max_size,
            workers: self.workers,
            verify_axioms: self.verify_axioms,
            seed: self.seed,
            expect: None,
            out: self.out.clone(),
            format: match self.format {
                FormatArg::Json => Format::Json,
                FormatArg::Md => Format::Md,
            },
            base_dir: PathBuf::from("."),
        })
    }
}

fn emit(report: &Report, cfg: &RunConfig) -> std::io::Result<()> {
    let text = match cfg.format {
        Format::Json => report.to_json(),
        Format::Md => markdown::render(report),
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_line(report: &Report) -> Option<String> {
    let r = report.ring.as_ref()?;
    let opt = |v: Option<u64>| v.map_or("-".into(), |v| v.to_string());
    let mut line = format!(
        "{}: size {}, fingerprint {}, center {}, idempotents {}",
        r.label,
        opt(r.size),
        r.fingerprint.as_deref().unwrap_or("-"),
        opt(r.center_size),
        opt(r.idempotents)
    );
    if let Some(b) = &r.basis {
        line.push_str(&format!(", basis {{{}}}", b.join(",")));
    }
    if let Some(w) = r.window_words {
        line.push_str(&format!(", {w} window words"));
    }
    Some(line)
}

fn run(cli: Cli) -> Result<i32, mccoy_core::Error> {
    let (report, cfg) = match cli.command {
        Command::Build { ring, common } => {
            let cfg = common.config(ring)?;
            let report = with_workers(cfg.workers, || cmd_build(&cfg))??;
            if cfg.out.is_none() && cfg.format == Format::Json {
                if let Some(line) = build_line(&report) {
                    eprintln!("{line}");
                }
            }
            (report, cfg)
        }
        Command::Check { ring, common, expect } => {
            let mut cfg = common.config(ring)?;
            cfg.expect = expect.as_deref().map(parse_expectation).transpose()?;
            let report = with_workers(cfg.workers, || cmd_check(&cfg))??;
            (report, cfg)
        }
        Command::PaperVerify { all, entry, common } => {
            if !all && entry.is_empty() {
                return Err(mccoy_core::Error::usage("pass --all or at least one --entry"));
            }
            let cfg = common.config(String::new())?;
            let report = with_workers(cfg.workers, || cmd_paper_verify(&entry, cfg.seed))??;
            (report, cfg)
        }
        Command::Search { ring, common } => {
            let cfg = common.config(ring.clone())?;
            let report = with_workers(cfg.workers, || cmd_search(&ring, &cfg))??;
            (report, cfg)
        }
    };
    emit(&report, &cfg)?;
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
