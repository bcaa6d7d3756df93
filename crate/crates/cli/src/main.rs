//! `ribbon`: command-line access to the ribbon-graph library. Every verb
//! prints JSON (or pretty JSON with `--pretty`) and exits 0 on success, 1
//! on domain errors, and 2 on malformed input.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use ribbon_core::json as codec;
use ribbon_core::link::{self, Convention, LinkDiagram};
use ribbon_core::{decomp, oracle, IsoMode, RibbonGraph};

/// Exit 1: input is well-formed but the request cannot be answered.
const EXIT_DOMAIN: u8 = 1;
/// Exit 2: input could not be parsed.
const EXIT_PARSE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "ribbon",
    about = "Orientable ribbon graphs: partial duality, plane-biseparations, and link diagrams",
    long_about = None,
    version
)]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Use the reflected crossing-sign convention (diagnostic only).
    #[arg(long, global = true, value_parser = parse_convention, default_value = "standard")]
    convention: Convention,
    #[command(subcommand)]
    command: Command,
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    match s {
        "standard" => Ok(Convention::Standard),
        "flip" => Ok(Convention::Flipped),
        other => Err(format!(
            "unknown convention `{other}` (use `standard` or `flip`)"
        )),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Per-component and total genus of a ribbon graph.
    Genus { file: String },
    /// Geometric dual of a ribbon graph.
    Dual { file: String },
    /// Partial dual with respect to a set of edge labels.
    Pdual {
        /// Comma-separated edge labels forming the subset.
        #[arg(long, value_delimiter = ',')]
        edges: Vec<String>,
        file: String,
    },
    /// Find a plane-biseparation certificate, if one exists.
    Biseparation { file: String },
    /// All edge subsets whose partial dual is plane.
    PlaneDuals { file: String },
    /// Link-diagram operations.
    #[command(subcommand)]
    Link(LinkCommand),
    /// Brute-force reference checks.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum LinkCommand {
    /// Both Tait graphs of a diagram.
    Tait(PdInput),
    /// The 2^n state ribbon graphs of a diagram.
    States {
        #[command(flatten)]
        pd: PdInput,
        /// Deduplicate up to orientation-preserving isomorphism.
        #[arg(long)]
        dedupe: bool,
    },
    /// The link diagram of a signed plane ribbon graph.
    DiagramOf { file: String },
    /// All link diagrams presented by a signed ribbon graph.
    DiagramsOf { file: String },
    /// Whether two diagrams present the same set of signed ribbon graphs.
    Same { pd1: String, pd2: String },
    /// Summand flip along a two-strand cut.
    Flip {
        #[command(flatten)]
        pd: PdInput,
        /// The two strand labels of the cut, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1..=2)]
        cut: Vec<String>,
    },
}

#[derive(Args)]
struct PdInput {
    /// PD code, inline (e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)") or a file path.
    pd: String,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Run the exhaustive agreement suite and emit its manifest.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        #[arg(long, default_value_t = 2026)]
        seed: u64,
        /// Also write the manifest to a file.
        #[arg(long)]
        out: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(err: impl Display) -> Failure {
        Failure {
            code: EXIT_PARSE,
            message: err.to_string(),
        }
    }

    fn domain(err: impl Display) -> Failure {
        Failure {
            code: EXIT_DOMAIN,
            message: err.to_string(),
        }
    }
}

fn read_graph(path: &str) -> Result<RibbonGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read `{path}`: {e}")))?;
    codec::parse_graph(&text).map_err(Failure::parse)
}

/// PD arguments may name a file or carry the code inline.
fn read_pd(arg: &str) -> Result<LinkDiagram, Failure> {
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).map_err(|e| Failure::parse(format!("cannot read `{arg}`: {e}")))?
    } else {
        arg.to_string()
    };
    LinkDiagram::parse_pd(&text).map_err(Failure::parse)
}

fn emit<T: Serialize>(value: &T, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("output serializes");
    println!("{text}");
}

fn run(cli: Cli) -> Result<Value, Failure> {
    match cli.command {
        Command::Genus { file } => {
            let g = read_graph(&file)?;
            Ok(serde_json::to_value(codec::genus_doc(&g)).unwrap())
        }
        Command::Dual { file } => {
            let g = read_graph(&file)?;
            Ok(serde_json::to_value(codec::graph_to_doc(&g.geometric_dual())).unwrap())
        }
        Command::Pdual { edges, file } => {
            let g = read_graph(&file)?;
            let subset = g.subset_of(&edges).map_err(Failure::domain)?;
            Ok(serde_json::to_value(codec::graph_to_doc(&g.partial_dual(&subset))).unwrap())
        }
        Command::Biseparation { file } => {
            let g = read_graph(&file)?;
            Ok(match decomp::find_plane_biseparation(&g) {
                Some((_, cert)) => {
                    serde_json::to_value(codec::certificate_to_doc(&g, &cert)).unwrap()
                }
                None => json!({"exists": false}),
            })
        }
        Command::PlaneDuals { file } => {
            let g = read_graph(&file)?;
            let subsets: Vec<Vec<String>> = decomp::enumerate_plane_subsets(&g)
                .iter()
                .map(|a| g.subset_labels(a).iter().map(|s| s.to_string()).collect())
                .collect();
            Ok(json!({ "subsets": subsets }))
        }
        Command::Link(cmd) => run_link(cmd, cli.convention),
        Command::Oracle(OracleCommand::Verify {
            max_edges,
            seed,
            out,
        }) => {
            let manifest = oracle::verify_all(max_edges, seed).map_err(Failure::domain)?;
            let value = serde_json::to_value(&manifest).unwrap();
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&manifest).unwrap();
                fs::write(&path, text)
                    .map_err(|e| Failure::domain(format!("cannot write `{path}`: {e}")))?;
            }
            if manifest.all_passed {
                Ok(value)
            } else {
                Err(Failure::domain(format!(
                    "oracle disagreement: {}",
                    serde_json::to_string(&value).unwrap()
                )))
            }
        }
    }
}

fn run_link(cmd: LinkCommand, conv: Convention) -> Result<Value, Failure> {
    match cmd {
        LinkCommand::Tait(input) => {
            let d = read_pd(&input.pd)?;
            let (c1, c2) = d.checkerboard().map_err(Failure::domain)?;
            Ok(json!({
                "first": codec::graph_to_doc(&d.tait_with(&c1, conv)),
                "second": codec::graph_to_doc(&d.tait_with(&c2, conv)),
            }))
        }
        LinkCommand::States { pd, dedupe } => {
            let d = read_pd(&pd.pd)?;
            let graphs = d.all_state_graphs_with(conv).map_err(Failure::domain)?;
            let docs: Vec<codec::GraphDoc> = if dedupe {
                let mut seen = BTreeMap::new();
                for (_, g) in &graphs {
                    seen.entry(g.canonical_code(IsoMode::Chiral))
                        .or_insert_with(|| codec::graph_to_doc(g));
                }
                seen.into_values().collect()
            } else {
                graphs.iter().map(|(_, g)| codec::graph_to_doc(g)).collect()
            };
            Ok(json!({ "count": docs.len(), "graphs": docs }))
        }
        LinkCommand::DiagramOf { file } => {
            let g = read_graph(&file)?;
            let d = link::diagram_of_with(&g, conv).map_err(Failure::domain)?;
            Ok(codec::diagram_to_value(&d))
        }
        LinkCommand::DiagramsOf { file } => {
            let g = read_graph(&file)?;
            let diagrams = link::diagrams_of_with(&g, conv).map_err(Failure::domain)?;
            let values: Vec<Value> = diagrams.iter().map(codec::diagram_to_value).collect();
            Ok(json!({ "count": values.len(), "diagrams": values }))
        }
        LinkCommand::Same { pd1, pd2 } => {
            let d1 = read_pd(&pd1)?;
            let d2 = read_pd(&pd2)?;
            let same = link::same_link_diagram_set_with(&d1, &d2, conv).map_err(Failure::domain)?;
            Ok(json!({ "same": same }))
        }
        LinkCommand::Flip { pd, cut } => {
            let d = read_pd(&pd.pd)?;
            let (s1, s2) = match cut.as_slice() {
                [a] => (a.as_str(), a.as_str()),
                [a, b] => (a.as_str(), b.as_str()),
                _ => return Err(Failure::parse("--cut takes one or two strand labels")),
            };
            let flipped = d.summand_flip(s1, s2).map_err(Failure::domain)?;
            Ok(codec::diagram_to_value(&flipped))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli) {
        Ok(value) => {
            emit(&value, pretty);
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
