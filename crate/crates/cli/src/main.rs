use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use trinity_core::dividing::DiscSystem;
use trinity_core::fkt::{self, parse_universe, Universe};
use trinity_core::hypertrees::{enumerate_hypertrees, HypergraphKind};
use trinity_core::transitions::{build_configuration_graph, classify_components};
use trinity_core::trees::magic_number;
use trinity_core::{build_trinity, corpus, parse_graph, Error, RotationGraph, VerificationSuite, DEFAULT_CAP};

#[derive(Parser)]
#[command(name = "trinity", version, about = "Counting identities for trinities of plane bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Bound on enumerated objects per stage.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Summary,
}

#[derive(Args)]
struct GraphArg {
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct UniverseArg {
    #[arg(long)]
    universe: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex counts of the trinity and face sizes.
    Census(GraphArg),
    /// Arborescence and hypertree counts.
    Magic(GraphArg),
    /// Hypertree vectors of one hypergraph, or of all six.
    Hypertrees {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Tight configurations and their components.
    Configs(GraphArg),
    /// Components labelled by Euler class and hypertree.
    Classify(GraphArg),
    /// The full cross-identity suite on a graph or a universe.
    Verify {
        #[arg(long, conflicts_with = "universe", required_unless_present = "universe")]
        graph: Option<PathBuf>,
        #[arg(long)]
        universe: Option<PathBuf>,
    },
    /// States of a universe with their trails.
    States(UniverseArg),
    /// The clock graph of a universe.
    Clock {
        #[command(flatten)]
        universe: UniverseArg,
        /// Check meets and joins when there are at most this many states.
        #[arg(long, default_value_t = 256)]
        lattice_limit: usize,
    },
    /// The checkerboard dual of a universe.
    Dual(UniverseArg),
    /// States against tight configurations of the dual.
    Correspond(UniverseArg),
    /// Writes a generated family instance.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        size: usize,
        /// Directory for the output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Outcome {
    report: Value,
    summary: String,
    pass: bool,
}

impl Outcome {
    fn new(report: impl Serialize, summary: impl Into<String>, pass: bool) -> Result<Self> {
        Ok(Outcome { report: serde_json::to_value(report)?, summary: summary.into(), pass })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<RotationGraph> {
    Ok(parse_graph(&read(path)?)?.bipartite_colouring()?)
}

fn load_universe(path: &Path) -> Result<Universe> {
    Ok(parse_universe(&read(path)?)?)
}

fn run(cli: &Cli) -> Result<Outcome> {
    let cap = cli.cap;
    match &cli.command {
        Command::Census(a) => {
            let t = build_trinity(&load_graph(&a.graph)?)?;
            let c = t.census();
            let summary = format!("V {} E {} R {} n {}", c.violet, c.emerald, c.red, c.n);
            let pass = c.euler_ok;
            Outcome::new(c, summary, pass)
        }
        Command::Magic(a) => {
            let t = build_trinity(&load_graph(&a.graph)?)?;
            let r = magic_number(&t, cap);
            let summary = match r.magic() {
                Some(m) => format!("magic number {m}, {} of 12 counts populated", r.populated()),
                None => "counts disagree".to_string(),
            };
            let pass = r.agree;
            Outcome::new(r, summary, pass)
        }
        Command::Hypertrees { graph, kind } => {
            let t = build_trinity(&load_graph(&graph.graph)?)?;
            let kinds = match kind {
                Some(k) => vec![HypergraphKind::parse(k).ok_or_else(|| Error::Schema(format!("unknown hypergraph {k}")))?],
                None => HypergraphKind::ALL.to_vec(),
            };
            let mut reports = Vec::new();
            for k in kinds {
                reports.push(enumerate_hypertrees(&t.hypergraph(k), cap)?.to_report());
            }
            let summary = reports.iter().map(|r| format!("{} {}", r.hypergraph, r.count)).collect::<Vec<_>>().join(", ");
            if reports.len() == 1 {
                Outcome::new(&reports[0], summary, true)
            } else {
                Outcome::new(&reports, summary, true)
            }
        }
        Command::Configs(a) => {
            let t = build_trinity(&load_graph(&a.graph)?)?;
            let system = DiscSystem::new(&t);
            let cg = build_configuration_graph(&system, cap)?;
            let tight: Vec<Value> = (0..cg.vertices.len())
                .map(|v| {
                    let mut r = serde_json::to_value(system.report(&cg.configuration(v))).expect("plain data");
                    r["component"] = json!(cg.component[v]);
                    r
                })
                .collect();
            let summary = format!(
                "{} configurations, {} tight, {} edges, {} components",
                cg.total,
                cg.vertices.len(),
                cg.edge_count,
                cg.components
            );
            let report = json!({
                "total": cg.total,
                "tight": cg.vertices.len(),
                "edges": cg.edge_count,
                "components": cg.components,
                "configurations": tight,
            });
            Outcome::new(report, summary, true)
        }
        Command::Classify(a) => {
            let t = build_trinity(&load_graph(&a.graph)?)?;
            let system = DiscSystem::new(&t);
            let cg = build_configuration_graph(&system, cap)?;
            let er = enumerate_hypertrees(&t.hypergraph(HypergraphKind::ER), cap)?;
            let c = classify_components(&cg, &system, &er)?;
            let summary = format!("{} components, {} hypertrees, bijection {}", c.components.len(), er.len(), c.bijection_ok);
            let pass = c.bijection_ok;
            Outcome::new(c.report(&system), summary, pass)
        }
        Command::Verify { graph, universe } => {
            let suite = VerificationSuite::new(cap);
            let report = match (graph, universe) {
                (Some(g), _) => suite.run_graph(&load_graph(g)?)?,
                (None, Some(u)) => suite.run_universe(&load_universe(u)?),
                (None, None) => unreachable!("clap requires one input"),
            };
            let mut summary = report.summary();
            summary.pop();
            let pass = report.pass;
            Outcome::new(report, summary, pass)
        }
        Command::States(a) => {
            let u = load_universe(&a.universe)?;
            let states = fkt::enumerate_states(&u, cap)?;
            let oracle = fkt::splitting_oracle(&u, cap)?;
            let mut entries = Vec::new();
            let mut splittings = Vec::new();
            for s in &states {
                let trail = fkt::state_to_trail(&u, s)?;
                splittings.push(trail.splitting.clone());
                entries.push(json!({ "markers": s.document(&u).markers, "trail": trail.document(&u) }));
            }
            splittings.sort();
            let pass = splittings == oracle;
            let summary = format!("{} states, {} single-loop splittings", states.len(), oracle.len());
            let report = json!({ "count": states.len(), "splittings": oracle.len(), "states": entries });
            Outcome::new(report, summary, pass)
        }
        Command::Clock { universe, lattice_limit } => {
            let u = load_universe(&universe.universe)?;
            let c = fkt::clock_graph(&u, cap, *lattice_limit)?;
            let r = &c.report;
            let summary = format!(
                "{} states, {} arcs, connected {}, acyclic {}, unique source {}, unique sink {}",
                r.states, r.arcs, r.weakly_connected, r.acyclic, r.unique_source, r.unique_sink
            );
            let report = json!({
                "report": r,
                "states": c.states.iter().map(|s| s.document(&u)).collect::<Vec<_>>(),
                "arcs": c.arcs,
            });
            let pass = r.pass();
            Outcome::new(report, summary, pass)
        }
        Command::Dual(a) => {
            let d = load_universe(&a.universe)?.dual_graph();
            let summary = format!("{} vertices, {} edges, {} faces", d.num_vertices(), d.num_edges(), d.num_faces());
            Outcome::new(d.to_document(), summary, true)
        }
        Command::Correspond(a) => {
            let u = load_universe(&a.universe)?;
            let r = fkt::states_vs_configurations(&u, cap)?;
            let summary = format!("{} states, {} tight configurations, bijection {}", r.states, r.tight_configurations, r.bijection_ok);
            let pass = r.pass();
            Outcome::new(r, summary, pass)
        }
        Command::Gen { family, size, out } => {
            let doc = corpus::generate_corpus(family, *size, cap)?.remove(0);
            let g = RotationGraph::from_document(&doc)?;
            let summary = format!("{family} {size}: {} vertices, {} edges", g.num_vertices(), g.num_edges());
            match out {
                Some(dir) => {
                    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
                    let path = dir.join(format!("{family}_{size}.json"));
                    fs::write(&path, serde_json::to_string_pretty(&doc)? + "\n")
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    Outcome::new(json!({ "written": path.display().to_string() }), summary, true)
                }
                None => Outcome::new(doc, summary, true),
            }
        }
    }
}

/// Input problems exit with 2; anything the checks themselves raise is a
/// verification failure.
fn is_input_error(e: &anyhow::Error) -> bool {
    match e.downcast_ref::<Error>() {
        Some(err) => matches!(
            err,
            Error::Schema(_)
                | Error::NotConnected
                | Error::NotPlanarConsistent(_)
                | Error::NotBipartite(_)
                | Error::CapExceeded { .. }
                | Error::UnknownRoot(_)
                | Error::NotFourRegular(_)
                | Error::StarsNotAdjacent
                | Error::CountMismatch { .. }
                | Error::UnknownFamily(_)
                | Error::Json(_)
        ),
        None => true,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            // A closed stdout is not worth a panic.
            let mut stdout = std::io::stdout().lock();
            let _ = match cli.format {
                Format::Json => {
                    eprintln!("{}", outcome.summary);
                    writeln!(stdout, "{}", serde_json::to_string_pretty(&outcome.report).expect("plain data"))
                }
                Format::Summary => writeln!(stdout, "{}", outcome.summary),
            };
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_input_error(&e) { 2 } else { 1 })
        }
    }
}
