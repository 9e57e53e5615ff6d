//! Command-line front end for the exact curvature engine.
//!
//! Subcommands:
//!
//! * `list [--json]` — the built-in catalog, one line per entry.
//! * `report <source> [--json]` — full geometry report (connection,
//!   curvature, sectional values, Ricci, scalar, classification).
//! * `classify <source> [--json]` — just the sectional-sign class, with
//!   witness planes when the sign is mixed.
//! * `check <path>` — validate a document and, when it carries candidate
//!   complex structures, verify every structure axiom.
//!
//! A `source` is either a catalog id (see `list`) or a path to a JSON
//! document. Exit codes are stable for scripting: 0 on success, 1 when the
//! input parsed but failed a semantic check (Jacobi identity, metric
//! positivity, structure axioms), 2 when the input could not be read or
//! parsed at all.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use liecurv::document::load_document;
use liecurv::error::Error;
use liecurv::hypercomplex::HypercomplexTriple;
use liecurv::lie::MetricLieAlgebra;
use liecurv::report::{
    basis_labels, bracket_relation, build_report, combination_dense, variant_name,
    MixedWitnesses, PairRow, ReportData, WitnessPlane,
};
use liecurv::{catalog, catalog_by_name, CatalogId, SignClass};

#[derive(Parser)]
#[command(
    name = "liecurv",
    version,
    about = "Exact curvature and structure analysis of metric Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in catalog entries
    List {
        /// Emit the catalog as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print the full geometry report for a catalog id or document path
    Report {
        /// Catalog id or path to a JSON document
        source: String,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Classify the sign of sectional curvature for a source
    Classify {
        /// Catalog id or path to a JSON document
        source: String,
        /// Emit the classification as JSON
        #[arg(long)]
        json: bool,
    },
    /// Validate a JSON document, including any candidate structures
    Check {
        /// Path to a JSON document
        path: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn semantic(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn unreadable(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) => Failure {
                code: 2,
                message: e.to_string(),
            },
            other => Failure {
                code: 1,
                message: other.to_string(),
            },
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::List { json } => cmd_list(json),
        Command::Report { source, json } => cmd_report(&source, json),
        Command::Classify { source, json } => cmd_classify(&source, json),
        Command::Check { path } => cmd_check(&path),
    }
}

/// A resolved source: its display label, the data, and any structure
/// triple the document supplied (catalog entries carry none).
struct Source {
    label: String,
    data: MetricLieAlgebra,
    structures: Option<HypercomplexTriple>,
}

fn resolve(source: &str) -> Result<Source, Failure> {
    if let Ok(entry) = catalog_by_name(source) {
        return Ok(Source {
            label: source.to_string(),
            data: entry.data,
            structures: None,
        });
    }
    let path = Path::new(source);
    if !path.exists() {
        return Err(Failure::unreadable(format!(
            "unknown source `{source}`: not a catalog id and no such file"
        )));
    }
    let text =
        fs::read_to_string(path).map_err(|e| Failure::unreadable(format!("{source}: {e}")))?;
    let doc = load_document(&text)?;
    Ok(Source {
        label: source.to_string(),
        data: doc.data,
        structures: doc.structures,
    })
}

#[derive(Serialize)]
struct CatalogSummary {
    name: String,
    dimension: usize,
    description: String,
    brackets: Vec<String>,
}

fn bracket_relations(m: &MetricLieAlgebra) -> Vec<String> {
    let labels = basis_labels(m.dim());
    let algebra = m.algebra();
    let mut out = Vec::new();
    for i in 0..m.dim() {
        for j in i + 1..m.dim() {
            let coeffs: std::collections::BTreeMap<usize, liecurv::Rational> = algebra
                .bracket_basis(i, j)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k + 1, c))
                .collect();
            if !coeffs.is_empty() {
                let row = PairRow {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                };
                out.push(bracket_relation(&labels, &row));
            }
        }
    }
    out
}

fn cmd_list(json: bool) -> Result<(), Failure> {
    if json {
        let summaries: Vec<CatalogSummary> = CatalogId::ALL
            .into_iter()
            .map(|id| {
                let entry = catalog(id);
                CatalogSummary {
                    name: id.name().to_string(),
                    dimension: entry.data.dim(),
                    description: entry.description.to_string(),
                    brackets: bracket_relations(&entry.data),
                }
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&summaries).expect("catalog serialization cannot fail")
        );
        return Ok(());
    }
    for id in CatalogId::ALL {
        let entry = catalog(id);
        let relations = bracket_relations(&entry.data);
        let summary = if relations.is_empty() {
            "all brackets vanish".to_string()
        } else {
            relations.join(", ")
        };
        println!("{}: dim {}, {}", id.name(), entry.data.dim(), summary);
    }
    Ok(())
}

fn cmd_report(source: &str, json: bool) -> Result<(), Failure> {
    let resolved = resolve(source)?;
    let report = build_report(
        &resolved.label,
        &resolved.data,
        resolved.structures.as_ref(),
    )?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
        );
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

#[derive(Serialize)]
struct Classification {
    source: String,
    class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<MixedWitnesses>,
}

fn cmd_classify(source: &str, json: bool) -> Result<(), Failure> {
    let resolved = resolve(source)?;
    let data = ReportData::compute(&resolved.data, None)?;
    let witnesses = match &data.class {
        SignClass::Mixed { positive, negative } => Some(MixedWitnesses {
            positive: WitnessPlane {
                u: positive.u.clone(),
                v: positive.v.clone(),
                value: positive.value.clone(),
            },
            negative: WitnessPlane {
                u: negative.u.clone(),
                v: negative.v.clone(),
                value: negative.value.clone(),
            },
        }),
        _ => None,
    };
    if json {
        let out = Classification {
            source: resolved.label,
            class: variant_name(&data.class).to_string(),
            witnesses,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("classification serialization cannot fail")
        );
        return Ok(());
    }
    println!("{}", variant_name(&data.class));
    if let Some(w) = witnesses {
        println!(
            "K = {} > 0 at u = {}, v = {}",
            w.positive.value,
            combination_dense(&w.positive.u),
            combination_dense(&w.positive.v)
        );
        println!(
            "K = {} < 0 at u = {}, v = {}",
            w.negative.value,
            combination_dense(&w.negative.u),
            combination_dense(&w.negative.v)
        );
    }
    Ok(())
}

fn cmd_check(path: &str) -> Result<(), Failure> {
    let file = Path::new(path);
    let text = fs::read_to_string(file).map_err(|e| Failure::unreadable(format!("{path}: {e}")))?;
    let doc = load_document(&text)?;
    match &doc.structures {
        None => {
            println!("OK");
            Ok(())
        }
        Some(triple) => {
            let report = liecurv::full_report(&doc.data, triple)?;
            for check in &report.checks {
                let mark = if check.passed { "pass" } else { "FAIL" };
                println!("{mark} {}", check.label);
            }
            if report.all_passed() {
                println!("OK");
                Ok(())
            } else {
                let failed: Vec<&str> = report.failures().iter().map(|c| c.label).collect();
                Err(Failure::semantic(format!(
                    "structure axioms failed: {}",
                    failed.join(", ")
                )))
            }
        }
    }
}
