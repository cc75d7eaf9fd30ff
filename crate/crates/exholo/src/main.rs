//! Command-line driver: builds models, runs verification suites, and
//! exports the cross-product tensor. Reports are deterministic; the
//! canonical JSON stream carries no timing data.
//!
//! Exit codes: 0 all checks passed, 1 any failing or erroring check,
//! 2 usage errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use exholo::report::{reports_to_canonical_json, Report};
use exholo::schema;
use exholo::suites::{run_suites, Suite};

use exholo_core::holo::G2Artifacts;
use exholo_core::symdec::{bianchi_solution_space, build, classify, identify, MultiIndex, SymdecError};

#[derive(Parser)]
#[command(
    name = "exholo",
    version,
    about = "Exact-arithmetic workbench for sl(2)-built symmetric decompositions and the exceptional holonomy representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the algebra of a multi-index (e.g. 3.1) and identify it.
    Build {
        /// Dotted multi-index with even part sum, e.g. 2.1.1
        multi_index: String,
        /// Write the algebra JSON here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Sweep multi-indices and report those with admissible brackets.
    Classify {
        #[arg(long, default_value_t = 16)]
        max_p_dim: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Write the classification JSON here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a verification suite (thm-1-2, lemma-1-3, rem-1-4, cor-1-5,
    /// cor-1-6, thm-1-7, prop-2-1, thm-2-2, or all).
    Verify {
        suite: String,
        /// Write the canonical report JSON here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write a markdown rendering of the report here.
        #[arg(long)]
        md: Option<PathBuf>,
        /// Maximum number of suites evaluated concurrently.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Export the cross-product tensor of the reductive decomposition.
    ExportCross {
        /// Write the tensor JSON here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn write_or_print(payload: &str, path: &Option<PathBuf>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, payload),
        None => {
            std::io::stdout().write_all(payload.as_bytes())?;
            Ok(())
        }
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    eprintln!("run `exholo --help` for usage");
    ExitCode::from(2)
}

fn cmd_build(multi_index: &str, json: &Option<PathBuf>) -> ExitCode {
    let mi = match MultiIndex::parse(multi_index) {
        Ok(mi) => mi,
        Err(SymdecError::OddSum) => {
            return usage_error(&format!(
                "multi-index {multi_index} has odd part sum; the construction requires an even sum"
            ));
        }
        Err(e) => return usage_error(&format!("invalid multi-index {multi_index}: {e}")),
    };
    let sol = match bianchi_solution_space(&mi) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if sol.dim() == 0 {
        eprintln!(
            "multi-index {mi} admits no nonzero bracket coefficients; nothing to build"
        );
        return ExitCode::from(1);
    }
    let coefficients = sol.basis().row_vec(0);
    let sd = match build(&mi, &coefficients) {
        Ok(sd) => sd,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let label = match identify(sd.algebra()) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    eprintln!("{mi}: dimension {}, label {}", sd.algebra().dim(), label.as_str());
    let payload = schema::to_canonical_string(&schema::lie_algebra_json(sd.algebra()));
    if write_or_print(&payload, json).is_err() {
        eprintln!("error: cannot write output");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn cmd_classify(max_p_dim: usize, max_k: usize, max_n: usize, json: &Option<PathBuf>) -> ExitCode {
    if max_p_dim == 0 || max_k == 0 || max_n == 0 {
        return usage_error("classification bounds must be positive");
    }
    let entries = match classify(max_p_dim, max_k, max_n) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    for e in &entries {
        eprintln!(
            "{}: p_dim {}, solution dimension {}",
            e.mi, e.p_dim, e.solution_dim
        );
    }
    let payload = schema::to_canonical_string(&schema::classify_json(&entries));
    if write_or_print(&payload, json).is_err() {
        eprintln!("error: cannot write output");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    suite: &str,
    json: &Option<PathBuf>,
    md: &Option<PathBuf>,
    jobs: Option<usize>,
) -> ExitCode {
    let Some(suites) = Suite::parse(suite) else {
        return usage_error(&format!(
            "unknown suite {suite}; expected one of thm-1-2, lemma-1-3, rem-1-4, cor-1-5, cor-1-6, thm-1-7, prop-2-1, thm-2-2, all"
        ));
    };
    let jobs = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
            .min(suites.len())
    });
    let reports: Vec<Report> = run_suites(&suites, jobs);
    for r in &reports {
        for line in r.human_lines() {
            eprintln!("{line}");
        }
    }
    let payload = reports_to_canonical_json(&reports);
    if write_or_print(&payload, json).is_err() {
        eprintln!("error: cannot write report");
        return ExitCode::from(1);
    }
    if let Some(md_path) = md {
        let mut doc = String::from("# Verification report\n\n");
        for r in &reports {
            doc.push_str(&r.markdown());
        }
        if std::fs::write(md_path, doc).is_err() {
            eprintln!("error: cannot write markdown report");
            return ExitCode::from(1);
        }
    }
    if reports.iter().all(Report::all_pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_export_cross(json: &Option<PathBuf>) -> ExitCode {
    let art = match G2Artifacts::build() {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    eprintln!(
        "cross product over the 7-dimensional module; composition constant {}",
        art.cross.lambda.to_fraction_string()
    );
    let payload = schema::to_canonical_string(&schema::cross_product_json(&art.cross.tensor));
    if write_or_print(&payload, json).is_err() {
        eprintln!("error: cannot write output");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Build { multi_index, json } => cmd_build(multi_index, json),
        Command::Classify { max_p_dim, max_k, max_n, json } => {
            cmd_classify(*max_p_dim, *max_k, *max_n, json)
        }
        Command::Verify { suite, json, md, jobs } => cmd_verify(suite, json, md, *jobs),
        Command::ExportCross { json } => cmd_export_cross(json),
    }
}
