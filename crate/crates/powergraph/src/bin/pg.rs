//! Thin command-line wrapper around the library. Groups are given either as
//! construction expressions (`dihedral:8`, `product:(cyclic:3,dihedral:6)`)
//! or as files (`.cayley`, `.perm`, `.fp`).
//!
//! Exit codes for the decision subcommands (`conformal`, `pgiso`, `giso`):
//! 0 = yes, 1 = no, 2 = error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use powergraph::canon::are_isomorphic_graphs;
use powergraph::fp::{parse_presentation, realize, todd_coxeter, TableStatus, DEFAULT_MAX_COSETS};
use powergraph::group::cayley::to_cayley_string;
use powergraph::group::are_isomorphic_groups;
use powergraph::scan::verify::{verify_with_options, VerifyOptions};
use powergraph::scan::{classify_order, load_catalog, load_group, report_to_json};
use powergraph::{Group, PowerGraph};

#[derive(Parser)]
#[command(name = "pg", about = "Finite groups and their power graphs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the order spectrum of each group.
    Spectrum {
        /// Construction expressions or .cayley/.perm/.fp files.
        groups: Vec<String>,
    },
    /// Decide whether two groups have the same order spectrum.
    Conformal { a: String, b: String },
    /// Decide whether two groups have isomorphic power graphs.
    Pgiso {
        a: String,
        b: String,
        /// Compare directed power graphs instead of undirected ones.
        #[arg(long)]
        directed: bool,
    },
    /// Decide whether two groups are isomorphic.
    Giso { a: String, b: String },
    /// Print a power graph as an edge list, or write it in DOT format.
    Graph {
        group: String,
        #[arg(long)]
        directed: bool,
        /// Write DOT output to this file instead of printing edges.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Enumerate cosets of a finite presentation and report the group order.
    Coset {
        /// Presentation file (.fp).
        file: PathBuf,
        /// Maximum number of cosets to allocate.
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        limit: usize,
        /// Write the realized group to this file in .cayley format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify one order over a catalog of groups.
    Scan {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        manifest: PathBuf,
        /// Also write the report as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the built-in verification battery and print one line per check.
    VerifyPaper {
        /// Write the report as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Corrupt the reference table first; the battery must then fail
        /// (negative control).
        #[arg(long)]
        corrupt: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load(source: &str) -> Result<Group, String> {
    load_group(source).map_err(|e| format!("{source}: {e}"))
}

fn yes_no(answer: bool, yes: &str, no: &str) -> ExitCode {
    if answer {
        println!("{yes}");
        ExitCode::SUCCESS
    } else {
        println!("{no}");
        ExitCode::FAILURE
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Spectrum { groups } => {
            if groups.is_empty() {
                return Err("no groups given".into());
            }
            for source in &groups {
                let g = load(source)?;
                println!("{} (order {}): {}", source, g.n(), g.order_spectrum());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Conformal { a, b } => {
            let (ga, gb) = (load(&a)?, load(&b)?);
            Ok(yes_no(
                ga.order_spectrum() == gb.order_spectrum(),
                "conformal",
                "not conformal",
            ))
        }
        Command::Pgiso { a, b, directed } => {
            let (ga, gb) = (load(&a)?, load(&b)?);
            let pa = PowerGraph::of_group(&ga, directed);
            let pb = PowerGraph::of_group(&gb, directed);
            match are_isomorphic_graphs(&pa, &pb).map_err(|e| e.to_string())? {
                Some(mapping) => {
                    println!("power graphs isomorphic");
                    let pairs: Vec<String> = mapping
                        .iter()
                        .enumerate()
                        .map(|(u, &v)| format!("{u}->{v}"))
                        .collect();
                    println!("{}", pairs.join(" "));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("power graphs not isomorphic");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Giso { a, b } => {
            let (ga, gb) = (load(&a)?, load(&b)?);
            Ok(yes_no(
                are_isomorphic_groups(&ga, &gb).is_some(),
                "isomorphic",
                "not isomorphic",
            ))
        }
        Command::Graph {
            group,
            directed,
            dot,
        } => {
            let g = load(&group)?;
            let p = PowerGraph::of_group(&g, directed);
            match dot {
                Some(path) => {
                    let name = group.replace(|c: char| !c.is_alphanumeric(), "_");
                    std::fs::write(&path, p.to_dot(&name))
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                }
                None => print!("{}", p.to_edge_list()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Coset { file, limit, out } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            let p = parse_presentation(&text).map_err(|e| e.to_string())?;
            let table = todd_coxeter(&p, limit).map_err(|e| e.to_string())?;
            match table.status {
                TableStatus::Complete => {
                    println!("{} live cosets", table.rows.len());
                }
                TableStatus::Overflowed => {
                    return Err(format!("coset enumeration exceeded {limit} cosets"));
                }
            }
            if let Some(path) = out {
                let g = realize(&table).map_err(|e| e.to_string())?;
                std::fs::write(&path, to_cayley_string(&g))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            order,
            manifest,
            json,
        } => {
            let catalog = load_catalog(&manifest).map_err(|e| e.to_string())?;
            for (id, message) in &catalog.errors {
                eprintln!("warning: skipped {id}: {message}");
            }
            if catalog.of_order(order).is_empty() {
                return Err(format!("catalog has no groups of order {order}"));
            }
            let report = classify_order(&catalog, order).map_err(|e| e.to_string())?;
            print!("{report}");
            if let Some(path) = json {
                std::fs::write(&path, report_to_json(&report))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { json, corrupt } => {
            let report = verify_with_options(VerifyOptions {
                corrupt_reference: corrupt,
            })
            .map_err(|e| e.to_string())?;
            print!("{report}");
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&report)
                    .expect("report serialization cannot fail");
                std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}
