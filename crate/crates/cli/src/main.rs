//! Command-line front end: extremal clique bounds, tight constructions,
//! exact counting, class analysis, and exhaustive verification.
//!
//! Every number prints as an exact integer or `p/q`; there is no floating
//! point anywhere in the interface. Identical invocations produce
//! byte-identical stdout.

use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigUint;
use num::rational::BigRational;
use serde::Serialize;

use clique_extremal::analysis::{
    degeneracy, hadwiger_multipartite, hadwiger_number, is_planar, AnalysisError, MinorSearchBudget,
};
use clique_extremal::bounds::{
    degenerate_bound, degenerate_edge_bound, degree_bound, k33_minor_free_bound,
    k5_minor_free_bound, max_cliques_nm, open_problem_gap, planar_bound, planar_clique_size_bounds,
    zykov_bound, zykov_total_bound,
};
use clique_extremal::census::{clique_census, count_cliques};
use clique_extremal::construct::{
    construct_degenerate_extremal, construct_degree_extremal, construct_dtree,
    construct_extremal_nm, construct_k5_chain, construct_multipartite, construct_planar_extremal,
    construct_stacked_planar, construct_v8,
};
use clique_extremal::graph::{parse_edge_list, write_edge_list, Graph};
use clique_extremal::graph6::{decode_graph6, encode_graph6_string};
use clique_extremal::verify::{
    verify_class_bound, verify_nm_tightness, verify_planar_census, verify_zykov, GraphClass,
    VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "clique-extremal",
    version,
    about = "Exact clique counts, extremal clique bounds, tight constructions, and exhaustive verification"
)]
struct Cli {
    /// Worker threads for exhaustive scans (falls back to the
    /// CLIQUE_EXTREMAL_THREADS environment variable, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed-form bound exactly.
    Bound(BoundArgs),
    /// Generate an extremal graph.
    Construct(ConstructArgs),
    /// Count cliques of a graph read from a file or stdin.
    Count(CountArgs),
    /// Degeneracy, maximum degree, planarity, and Hadwiger number.
    Analyze(AnalyzeArgs),
    /// Exhaustively verify bounds over all labeled graphs.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct BoundArgs {
    #[command(subcommand)]
    which: BoundCmd,
    /// Emit JSON instead of the bare value.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Maximum cliques in a graph with n vertices and m edges.
    Nm {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// Bound for maximum degree delta.
    Degree {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        delta: u64,
    },
    /// Bound for d-degenerate graphs.
    Degenerate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// Edge-sensitive bound for d-degenerate graphs.
    DegenerateEdges {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: u64,
    },
    /// Bound for planar graphs with m >= 3 edges.
    Planar {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// Maximum triangle and 4-clique counts in a planar graph.
    PlanarCensus {
        #[arg(long)]
        n: u64,
    },
    /// Bound for graphs with no K_5 minor.
    K5free {
        #[arg(long)]
        n: u64,
    },
    /// Bound for graphs with no K_{3,3} minor.
    K33free {
        #[arg(long)]
        n: u64,
    },
    /// Maximum l-cliques in a graph with no (k+1)-clique.
    Zykov {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
    },
    /// Maximum cliques in a graph with no (k+1)-clique.
    ZykovTotal {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Compare 3^k against the clique-minor ceiling for K_{2,...,2}.
    OpenProblem {
        #[arg(long)]
        k: u64,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    which: ConstructCmd,
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
    /// Write to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Recount the cliques of the generated graph and check attainment.
    #[arg(long, global = true)]
    verify: bool,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Extremal (n, m)-graph: a clique, one attachment vertex, isolated rest.
    Nm {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// Disjoint copies of K_{delta+1} plus isolated vertices.
    Degree {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        delta: u64,
    },
    /// d-tree on n vertices.
    Dtree {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// d-tree plus isolated vertices, hitting a given edge count.
    Degenerate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: u64,
    },
    /// Maximal planar graph grown by face insertion.
    StackedPlanar {
        #[arg(long)]
        n: u64,
    },
    /// Stacked planar core plus isolated vertices, hitting a given edge count.
    Planar {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// The Wagner graph (8-cycle plus antipodal chords).
    V8,
    /// Chain of K_5 copies pasted on edges; n = 2 (mod 3).
    K5Chain {
        #[arg(long)]
        n: u64,
    },
    /// Complete multipartite graph with the given class sizes.
    Multipartite {
        /// Comma-separated class sizes, e.g. 2,2,2,2.
        #[arg(long)]
        parts: String,
    },
}

#[derive(Args)]
struct CountArgs {
    /// Input file; "-" or omitted reads stdin.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input file; "-" or omitted reads stdin.
    input: Option<PathBuf>,
    /// Analyze the complete multipartite graph with these class sizes
    /// instead of reading a graph; the Hadwiger number then comes from the
    /// matching formula.
    #[arg(long, conflicts_with = "input")]
    multipartite: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    /// Vertex cap for the minor search.
    #[arg(long, default_value_t = MinorSearchBudget::default().max_vertices)]
    max_vertices: usize,
    /// Branch-node cap for the minor search.
    #[arg(long, default_value_t = MinorSearchBudget::default().max_branch_nodes)]
    max_branch_nodes: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    which: VerifyCmd,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check the (n, m) maximum for every m by scanning all labeled graphs.
    Nm {
        #[arg(long)]
        n: usize,
    },
    /// Check a class bound over all labeled graphs in the class.
    Class {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        class: ClassName,
        /// Degeneracy parameter (required for --class degenerate).
        #[arg(long)]
        d: Option<usize>,
        /// Maximum-degree parameter (required for --class max-degree).
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, default_value_t = MinorSearchBudget::default().max_branch_nodes)]
        max_branch_nodes: u64,
    },
    /// Check the planar triangle and 4-clique maxima.
    PlanarCensus {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = MinorSearchBudget::default().max_branch_nodes)]
        max_branch_nodes: u64,
    },
    /// Check the clique-size maxima over K_{k+1}-free graphs.
    Zykov {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassName {
    Planar,
    K5free,
    K33free,
    Degenerate,
    MaxDegree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    Edgelist,
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| {
        std::env::var("CLIQUE_EXTREMAL_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(threads) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the worker pool")?;
    }
    match cli.command {
        Command::Bound(args) => run_bound(args),
        Command::Construct(args) => run_construct(args),
        Command::Count(args) => run_count(args),
        Command::Analyze(args) => run_analyze(args),
        Command::Verify(args) => run_verify(args),
    }
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

enum BoundValue {
    Integer(BigUint),
    Rational(BigRational),
    Pair {
        c3_max: BigUint,
        c4_max: BigUint,
    },
    Gap {
        lhs: BigUint,
        rhs: BigUint,
        exceeds: bool,
    },
}

fn run_bound(args: BoundArgs) -> Result<()> {
    let value = match args.which {
        BoundCmd::Nm { n, m } => BoundValue::Integer(max_cliques_nm(n, m)?),
        BoundCmd::Degree { n, m, delta } => BoundValue::Rational(degree_bound(n, m, delta)?),
        BoundCmd::Degenerate { n, d } => BoundValue::Integer(degenerate_bound(n, d)?),
        BoundCmd::DegenerateEdges { n, m, d } => {
            BoundValue::Rational(degenerate_edge_bound(n, m, d)?)
        }
        BoundCmd::Planar { n, m } => BoundValue::Rational(planar_bound(n, m)?),
        BoundCmd::PlanarCensus { n } => {
            let (c3_max, c4_max) = planar_clique_size_bounds(n)?;
            BoundValue::Pair { c3_max, c4_max }
        }
        BoundCmd::K5free { n } => BoundValue::Integer(k5_minor_free_bound(n)?),
        BoundCmd::K33free { n } => BoundValue::Rational(k33_minor_free_bound(n)?),
        BoundCmd::Zykov { n, k, l } => BoundValue::Rational(zykov_bound(n, k, l)?),
        BoundCmd::ZykovTotal { n, k } => BoundValue::Rational(zykov_total_bound(n, k)?),
        BoundCmd::OpenProblem { k } => {
            let gap = open_problem_gap(k)?;
            BoundValue::Gap {
                lhs: gap.lhs,
                rhs: gap.rhs,
                exceeds: gap.exceeds,
            }
        }
    };
    let line = match (&value, args.json) {
        (BoundValue::Integer(v), false) => v.to_string(),
        (BoundValue::Rational(v), false) => v.to_string(),
        (BoundValue::Pair { c3_max, c4_max }, false) => format!("c3_max={c3_max} c4_max={c4_max}"),
        (BoundValue::Gap { lhs, rhs, exceeds }, false) => {
            format!("lhs={lhs} rhs={rhs} exceeds={exceeds}")
        }
        (BoundValue::Integer(v), true) => serde_json::json!({ "value": v.to_string() }).to_string(),
        (BoundValue::Rational(v), true) => {
            serde_json::json!({ "value": v.to_string() }).to_string()
        }
        (BoundValue::Pair { c3_max, c4_max }, true) => serde_json::json!({
            "c3_max": c3_max.to_string(),
            "c4_max": c4_max.to_string(),
        })
        .to_string(),
        (BoundValue::Gap { lhs, rhs, exceeds }, true) => serde_json::json!({
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
            "exceeds": exceeds,
        })
        .to_string(),
    };
    println!("{line}");
    Ok(())
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

fn parse_parts(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .with_context(|| format!("bad class size {tok:?}"))
        })
        .collect()
}

fn run_construct(args: ConstructArgs) -> Result<()> {
    let (graph, expected): (Graph, Option<BigRational>) = match &args.which {
        ConstructCmd::Nm { n, m } => (
            construct_extremal_nm(*n, *m)?,
            Some(BigRational::from_integer(num::BigInt::from(
                max_cliques_nm(*n, *m)?,
            ))),
        ),
        ConstructCmd::Degree { n, m, delta } => (
            construct_degree_extremal(*n, *m, *delta)?,
            Some(degree_bound(*n, *m, *delta)?),
        ),
        ConstructCmd::Dtree { n, d } => (
            construct_dtree(*n, *d)?,
            Some(BigRational::from_integer(num::BigInt::from(
                degenerate_bound(*n, *d)?,
            ))),
        ),
        ConstructCmd::Degenerate { n, m, d } => (
            construct_degenerate_extremal(*n, *m, *d)?,
            Some(degenerate_edge_bound(*n, *m, *d)?),
        ),
        ConstructCmd::StackedPlanar { n } => (
            construct_stacked_planar(*n)?,
            Some(BigRational::from_integer(num::BigInt::from(
                k5_minor_free_bound(*n)?,
            ))),
        ),
        ConstructCmd::Planar { n, m } => (
            construct_planar_extremal(*n, *m)?,
            Some(planar_bound(*n, *m)?),
        ),
        ConstructCmd::V8 => (
            construct_v8(),
            Some(BigRational::from_integer(num::BigInt::from(21))),
        ),
        ConstructCmd::K5Chain { n } => (construct_k5_chain(*n)?, Some(k33_minor_free_bound(*n)?)),
        ConstructCmd::Multipartite { parts } => {
            let sizes = parse_parts(parts)?;
            let product = sizes
                .iter()
                .map(|&p| BigUint::from(p + 1))
                .product::<BigUint>();
            (
                construct_multipartite(&sizes)?,
                Some(BigRational::from_integer(num::BigInt::from(product))),
            )
        }
    };

    if args.verify {
        let count = count_cliques(&graph);
        let formula = expected.expect("every generator has a formula");
        let as_rational = BigRational::from_integer(num::BigInt::from(count.clone()));
        if as_rational != formula {
            bail!("attainment check failed: counted {count}, formula gives {formula}");
        }
        eprintln!("verified: {count} cliques, equal to the formula value");
    }

    let payload = match args.format {
        GraphFormat::Graph6 => {
            let mut s = encode_graph6_string(&graph)?;
            s.push('\n');
            s
        }
        GraphFormat::Edgelist => write_edge_list(&graph),
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, payload).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().write_all(payload.as_bytes())?,
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// count / analyze
// ---------------------------------------------------------------------------

fn read_input(path: &Option<PathBuf>) -> Result<Vec<u8>> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

/// graph6 bytes sit in 63..=126, so a leading ASCII digit (the "n m" header)
/// can only be an edge list.
fn parse_graph(bytes: &[u8], format: InputFormat) -> Result<Graph> {
    let format = match format {
        InputFormat::Auto => {
            let first = bytes
                .iter()
                .find(|b| !b.is_ascii_whitespace())
                .ok_or_else(|| anyhow!("empty input"))?;
            if first.is_ascii_digit() {
                InputFormat::Edgelist
            } else {
                InputFormat::Graph6
            }
        }
        other => other,
    };
    match format {
        InputFormat::Edgelist => {
            let text = std::str::from_utf8(bytes).context("edge list is not UTF-8")?;
            Ok(parse_edge_list(text)?)
        }
        InputFormat::Graph6 => Ok(decode_graph6(bytes)?),
        InputFormat::Auto => unreachable!(),
    }
}

fn run_count(args: CountArgs) -> Result<()> {
    let graph = parse_graph(&read_input(&args.input)?, args.format)?;
    let census = clique_census(&graph);
    println!("{}", serde_json::to_string(&census)?);
    Ok(())
}

#[derive(Serialize)]
struct AnalyzeOutput {
    n: usize,
    m: usize,
    degeneracy: usize,
    max_degree: Option<usize>,
    planar: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    planar_error: Option<String>,
    hadwiger: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hadwiger_error: Option<String>,
    hadwiger_method: &'static str,
}

fn run_analyze(args: AnalyzeArgs) -> Result<()> {
    let budget = MinorSearchBudget {
        max_vertices: args.max_vertices,
        max_branch_nodes: args.max_branch_nodes,
    };
    let (graph, formula_hadwiger) = match &args.multipartite {
        Some(parts) => {
            let sizes = parse_parts(parts)?;
            let eta = hadwiger_multipartite(&sizes)?;
            (construct_multipartite(&sizes)?, Some(eta))
        }
        None => (parse_graph(&read_input(&args.input)?, args.format)?, None),
    };

    // Budget exhaustion downgrades a field to null with a distinct error
    // entry; it is never reported as a negative answer.
    let split = |r: Result<bool, AnalysisError>| match r {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let (planar, planar_error) = split(is_planar(&graph, &budget));
    let (hadwiger, hadwiger_error, hadwiger_method) = match formula_hadwiger {
        Some(eta) => (Some(eta), None, "formula"),
        None => match hadwiger_number(&graph, &budget) {
            Ok(eta) => (Some(eta as u64), None, "minor-search"),
            Err(e) => (None, Some(e.to_string()), "minor-search"),
        },
    };

    let out = AnalyzeOutput {
        n: graph.n(),
        m: graph.m(),
        degeneracy: degeneracy(&graph),
        max_degree: graph.max_degree(),
        planar,
        planar_error,
        hadwiger,
        hadwiger_error,
        hadwiger_method,
    };
    println!("{}", serde_json::to_string(&out)?);
    Ok(())
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn run_verify(args: VerifyArgs) -> Result<()> {
    let reports: Vec<VerificationReport> = match args.which {
        VerifyCmd::Nm { n } => verify_nm_tightness(n)?,
        VerifyCmd::Class {
            n,
            class,
            d,
            delta,
            max_branch_nodes,
        } => {
            let class = match class {
                ClassName::Planar => GraphClass::Planar,
                ClassName::K5free => GraphClass::K5MinorFree,
                ClassName::K33free => GraphClass::K33MinorFree,
                ClassName::Degenerate => GraphClass::Degenerate(
                    d.ok_or_else(|| anyhow!("--class degenerate requires --d"))?,
                ),
                ClassName::MaxDegree => GraphClass::MaxDegree(
                    delta.ok_or_else(|| anyhow!("--class max-degree requires --delta"))?,
                ),
            };
            let budget = MinorSearchBudget {
                max_branch_nodes,
                ..MinorSearchBudget::default()
            };
            verify_class_bound(n, class, &budget)?
        }
        VerifyCmd::PlanarCensus {
            n,
            max_branch_nodes,
        } => {
            let budget = MinorSearchBudget {
                max_branch_nodes,
                ..MinorSearchBudget::default()
            };
            verify_planar_census(n, &budget)?
        }
        VerifyCmd::Zykov { n, k } => verify_zykov(n, k)?,
    };

    let mut failures = 0usize;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for report in &reports {
        serde_json::to_writer(&mut out, report)?;
        out.write_all(b"\n")?;
        if !report.matches {
            failures += 1;
        }
    }
    drop(out);
    if failures > 0 {
        bail!("{failures} of {} reports have match=false", reports.len());
    }
    Ok(())
}
