//! `ccent`: centrality, Condorcet and verification tools for edge-list graphs.
//!
//! Every command prints one JSON document on stdout. Exit status is 0 on
//! success, 1 when a check finds a violation and 2 on bad input.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use condorcet_centrality::canonical::{
    build_minimal_gadget, build_shift_gadget, build_shift_gadget_extended, canonical_bot, reduce_to_canonical,
    Gadget, NList,
};
use condorcet_centrality::condorcet::condorcet_report;
use condorcet_centrality::graph::parse_edge_list;
use condorcet_centrality::harness::{
    fixture, fixture_unchecked, run_graph_suite, run_tree_suite_with, search_counterexample, verify_fixture, Axiom,
    Generator, Measure, TreeSuiteConfig,
};
use condorcet_centrality::random_walk::hitting_times;
use condorcet_centrality::Graph;

#[derive(Parser)]
#[command(name = "ccent", version, about = "Exact centralities and Condorcet checks on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scores and ranking of one measure.
    Centrality {
        /// Edge-list file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, default_value = "closeness")]
        measure: String,
        /// Decay factor as a decimal or fraction, e.g. 0.8 or 4/5.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Condorcet winner, weak winners or a cycle, and consistency of measures.
    Condorcet {
        file: PathBuf,
        /// Measures to test for consistency; repeatable.
        #[arg(long = "measure", default_values = ["closeness", "rwc"])]
        measures: Vec<String>,
        #[arg(long)]
        delta: Option<String>,
    },
    /// Exact expected hitting times of the simple random walk.
    Hitting {
        file: PathBuf,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Look for a graph on which a measure breaks an axiom.
    Search(SearchArgs),
    /// A built-in figure graph, re-verified before output.
    Fixture {
        name: String,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Build a graph with two marked nodes of prescribed distance lists.
    Gadget(GadgetArgs),
    /// The canonical list for a sum, or the reduction of a given list.
    Canonical {
        #[arg(long, required_unless_present = "list")]
        sum: Option<usize>,
        #[arg(long, required_unless_present = "list")]
        n: Option<usize>,
        /// Comma-separated list to reduce, e.g. 4,1,2,4.
        #[arg(long, conflicts_with_all = ["sum", "n"])]
        list: Option<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "suite")]
struct SuiteChoice {
    /// Exhaustive tree suite up to this many nodes.
    #[arg(long)]
    trees: Option<usize>,
    /// Randomized connected-graph suite.
    #[arg(long)]
    graphs: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    suite: SuiteChoice,
    /// Largest tree size for the random-walk and W checks.
    #[arg(long, default_value_t = 8)]
    detail: usize,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 30)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeneratorKind {
    Trees,
    Graphs,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    measure: String,
    #[arg(long)]
    axiom: String,
    #[arg(long)]
    delta: Option<String>,
    #[arg(long, value_enum, default_value_t = GeneratorKind::Trees)]
    generator: GeneratorKind,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 11)]
    n_max: usize,
    #[arg(long, default_value_t = 0.25)]
    edge_prob: f64,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Edges,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    Shift,
    ShiftExt,
    Minimal,
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(long, value_enum)]
    kind: GadgetKind,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    /// Target list of u0 for `shift-ext`, comma-separated.
    #[arg(long)]
    list: Option<String>,
    /// Edge-list file realizing the layers beyond j (`shift-ext` only).
    #[arg(long, requires = "tail_node")]
    tail: Option<PathBuf>,
    /// Node of the tail graph glued to v_j.
    #[arg(long, requires = "tail")]
    tail_node: Option<usize>,
    #[arg(long)]
    sum: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Also write the graph as edge-list text to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A command's JSON result and whether it found a violation.
struct Output {
    value: Value,
    violation: bool,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output { value, violation: false }
    }
}

fn read_graph(path: &PathBuf) -> anyhow::Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_list(text: &str) -> anyhow::Result<NList> {
    let counts = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad list entry {s:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(NList::new(counts)?)
}

fn need<T>(value: Option<T>, flag: &str, kind: &str) -> anyhow::Result<T> {
    value.ok_or_else(|| anyhow!("--{flag} is required for --kind {kind}"))
}

fn gadget(args: GadgetArgs) -> anyhow::Result<Output> {
    let g: Gadget = match args.kind {
        GadgetKind::Shift => build_shift_gadget(need(args.i, "i", "shift")?, need(args.j, "j", "shift")?)?,
        GadgetKind::ShiftExt => {
            let a = parse_list(&need(args.list, "list", "shift-ext")?)?;
            let tail = args.tail.as_ref().map(read_graph).transpose()?;
            let tail = tail.as_ref().zip(args.tail_node);
            build_shift_gadget_extended(&a, need(args.i, "i", "shift-ext")?, need(args.j, "j", "shift-ext")?, tail)?
        }
        GadgetKind::Minimal => build_minimal_gadget(need(args.sum, "sum", "minimal")?, need(args.n, "n", "minimal")?)?,
    };
    let edges = g.graph.to_edge_list();
    if let Some(path) = &args.out {
        fs::write(path, &edges).with_context(|| format!("writing {}", path.display()))?;
    }
    let (real_u0, real_v0) = g.realized();
    let mut value = serde_json::to_value(&g)?;
    value["graph"] = serde_json::to_value(&g.graph)?;
    value["edge_list"] = json!(edges);
    value["realized_u0"] = json!(real_u0);
    value["realized_v0"] = json!(real_v0);
    let violation = real_u0 != g.expected_u0.counts() || real_v0 != g.expected_v0.counts();
    Ok(Output { value, violation })
}

fn run(command: Command) -> anyhow::Result<Output> {
    Ok(match command {
        Command::Centrality { file, measure, delta } => {
            let g = read_graph(&file)?;
            let m = Measure::parse(&measure, delta.as_deref())?;
            Output::ok(serde_json::to_value(m.evaluate(&g)?)?)
        }
        Command::Condorcet { file, measures, delta } => {
            let g = read_graph(&file)?;
            let scores = measures
                .iter()
                .map(|name| Measure::parse(name, delta.as_deref())?.evaluate(&g))
                .collect::<Result<Vec<_>, _>>()?;
            Output::ok(serde_json::to_value(condorcet_report(&g, &scores)?)?)
        }
        Command::Hitting { file, from, to } => {
            let g = read_graph(&file)?;
            let hm = hitting_times(&g)?;
            match from.zip(to) {
                Some((u, v)) => {
                    if u >= g.node_count() || v >= g.node_count() {
                        bail!("nodes must be below {}", g.node_count());
                    }
                    Output::ok(json!({ "from": u, "to": v, "hitting_time": hm.get(u, v).to_string() }))
                }
                None => Output::ok(serde_json::to_value(&hm)?),
            }
        }
        Command::Verify(args) => {
            let report = match args.suite.trees {
                Some(n_max) => run_tree_suite_with(&TreeSuiteConfig {
                    n_max,
                    detail_n_max: args.detail,
                    ..TreeSuiteConfig::default()
                })?,
                None => run_graph_suite(args.samples, args.n_max, args.seed)?,
            };
            Output {
                violation: !report.passed(),
                value: serde_json::to_value(&report)?,
            }
        }
        Command::Search(args) => {
            let measure = Measure::parse(&args.measure, args.delta.as_deref())?;
            let axiom: Axiom = args.axiom.parse()?;
            let generator = match args.generator {
                GeneratorKind::Trees => Generator::Trees {
                    n_min: args.n_min,
                    n_max: args.n_max,
                },
                GeneratorKind::Graphs => Generator::Graphs {
                    n_min: args.n_min,
                    n_max: args.n_max,
                    edge_prob: args.edge_prob,
                },
            };
            let outcome = search_counterexample(&measure, axiom, &generator, args.budget, args.seed)?;
            Output {
                violation: outcome.witness.is_some(),
                value: serde_json::to_value(&outcome)?,
            }
        }
        Command::Fixture { name, emit } => {
            let f = fixture_unchecked(&name)?;
            let check = verify_fixture(&f);
            let value = match emit {
                Emit::Json => {
                    let mut v = serde_json::to_value(&f)?;
                    v["verified"] = json!(check.is_ok());
                    if let Err(why) = &check {
                        v["mismatch"] = json!(why);
                    }
                    v
                }
                Emit::Edges => {
                    // Fail loudly instead of printing an unverified graph.
                    let f = fixture(&name)?;
                    json!({ "name": f.name, "edge_list": f.graph.to_edge_list() })
                }
            };
            Output {
                violation: check.is_err(),
                value,
            }
        }
        Command::Gadget(args) => gadget(args)?,
        Command::Canonical { sum, n, list } => match list {
            Some(text) => {
                let a = parse_list(&text)?;
                let (bot, trace) = reduce_to_canonical(&a)?;
                let trace: Vec<String> = trace.iter().map(ToString::to_string).collect();
                Output::ok(json!({ "input": a.to_string(), "trace": trace, "canonical": bot }))
            }
            None => {
                let (sum, n) = (sum.expect("required by clap"), n.expect("required by clap"));
                Output::ok(serde_json::to_value(canonical_bot(sum, n)?)?)
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            println!("{}", serde_json::to_string_pretty(&out.value).expect("serializable"));
            ExitCode::from(if out.violation { 1 } else { 0 })
        }
        Err(e) => {
            println!("{}", json!({ "error": format!("{e:#}") }));
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
