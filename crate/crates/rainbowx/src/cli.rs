//! Command-line front end. `run` maps every library error to a stable
//! exit code: 0 success, 1 malformed input, 2 verification failed,
//! 3 precondition violated, 4 budget exceeded.

use std::fs;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bounds::{alpha0_bound, ramsey_upper_u64, steiner_rainbow_constant, BoundParams};
use crate::detect::is_free;
use crate::error::{Error, Result};
use crate::format::{coloring_from_json, coloring_to_json, graph_from_str, graph_to_json, graph_to_text};
use crate::graph::{build_named, Graph, NamedFamily};
use crate::metrics::{ecc_rad_diam, sdiam3};
use crate::painter::{color_layered, color_p4_star_free};
use crate::pattern::{classify_family, parse_pattern, BoundedWitness};
use crate::rainbow::is_3rainbow;
use crate::reproduce::{reproduce_report, to_csv, to_text};
use crate::solver::{rx3_bounds, rx3_exact};

#[derive(Parser)]
#[command(name = "rainbowx", about = "3-rainbow indices, Steiner diameters, and forbidden-subgraph analysis", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family member
    Gen(GenArgs),
    /// Analyze a graph: metrics, index bounds, freeness battery
    Analyze(AnalyzeArgs),
    /// Produce a verified 3-rainbow coloring constructively
    Color(ColorArgs),
    /// Verify a coloring file against a graph file
    Verify(VerifyArgs),
    /// Classify a forbidden family as index-bounding or not
    Classify(ClassifyArgs),
    /// Print Ramsey-type bound values (decimal, arbitrary precision)
    Bound(BoundArgs),
    /// Recompute the small closed-form values and report agreement
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct GenArgs {
    /// complete | cycle | path | star | hairy
    #[arg(long)]
    family: String,
    /// Size parameter t of the family
    #[arg(long)]
    param: usize,
    /// Output file (stdout when absent)
    #[arg(long)]
    out: Option<String>,
    /// Emit the plain text format instead of JSON
    #[arg(long)]
    text: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input graph file (text or JSON)
    #[arg(long = "in")]
    input: String,
    /// Also compute the exact index (may take a while)
    #[arg(long = "exact-rx3")]
    exact_rx3: bool,
    /// Solver budget in seconds
    #[arg(long, default_value_t = 60)]
    budget: u64,
    /// Structured output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ColorArgs {
    /// Input graph file (text or JSON)
    #[arg(long = "in")]
    input: String,
    /// thm7 (clique scheme) | thm9 (layered scheme)
    #[arg(long)]
    method: String,
    /// Star bound r (both methods)
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Hairy-clique bound s (thm9)
    #[arg(long, default_value_t = 3)]
    s: usize,
    /// Path bound l (thm9)
    #[arg(long, default_value_t = 5)]
    ell: usize,
    /// Apply the color-saving remark variant
    #[arg(long)]
    remark: bool,
    /// Coloring output file (stdout when absent)
    #[arg(long)]
    out: Option<String>,
    /// Structured output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    coloring: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Pattern tokens (P<l>, C<n>, K<n>, K1,<r>, K<s>h) or @file graph files
    patterns: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Emit CSV rows instead of the text table
    #[arg(long)]
    csv: bool,
    /// Output file (stdout when absent)
    #[arg(long)]
    out: Option<String>,
    /// Solver budget in seconds per exact computation
    #[arg(long, default_value_t = 60)]
    budget: u64,
}

#[derive(Serialize)]
struct AnalysisReport {
    n: usize,
    m: usize,
    sdiam3: usize,
    rx3_lower: usize,
    rx3_upper: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    rx3_exact: Option<usize>,
    radius: usize,
    diameter: usize,
    free_of: std::collections::BTreeMap<String, bool>,
}

const BATTERY: [&str; 6] = ["P3", "P4", "K1,3", "K1,4", "K3h", "P5"];

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PreconditionViolated { .. } => 3,
        Error::BudgetExceeded { .. } => 4,
        Error::InconsistentColoring(_) => 2,
        _ => 1,
    }
}

fn emit(out: &Option<String>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn read_graph(path: &str) -> Result<Graph> {
    graph_from_str(&fs::read_to_string(path)?)
}

fn family(name: &str, t: usize) -> Result<NamedFamily> {
    Ok(match name {
        "complete" => NamedFamily::Complete(t),
        "cycle" => NamedFamily::Cycle(t),
        "path" => NamedFamily::Path(t),
        "star" => NamedFamily::Star(t),
        "hairy" => NamedFamily::HairyClique(t),
        other => {
            return Err(Error::InputDomain(format!(
                "unknown family '{other}' (expected complete|cycle|path|star|hairy)"
            )))
        }
    })
}

fn cmd_gen(a: &GenArgs) -> Result<i32> {
    let g = build_named(family(&a.family, a.param)?)?;
    let content = if a.text { graph_to_text(&g) } else { graph_to_json(&g) };
    emit(&a.out, &content)?;
    Ok(0)
}

fn cmd_analyze(a: &AnalyzeArgs) -> Result<i32> {
    let g = read_graph(&a.input)?;
    let sd = sdiam3(&g)?;
    let bounds = rx3_bounds(&g)?;
    let err = ecc_rad_diam(&g)?;
    let mut exceeded = None;
    let rx3 = if a.exact_rx3 {
        match rx3_exact(&g, Duration::from_secs(a.budget)) {
            Ok(r) => Some(r.value),
            Err(Error::BudgetExceeded { lower, upper }) => {
                exceeded = Some((lower, upper));
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let mut free_of = std::collections::BTreeMap::new();
    let patterns: Vec<Graph> = BATTERY
        .iter()
        .map(|t| parse_pattern(t))
        .collect::<Result<_>>()?;
    let report = is_free(&g, &patterns)?;
    for (name, entry) in BATTERY.iter().zip(report.entries.iter()) {
        free_of.insert(name.to_string(), entry.free);
    }
    let report = AnalysisReport {
        n: g.n(),
        m: g.edge_count(),
        sdiam3: sd,
        rx3_lower: exceeded.map_or(bounds.lower, |(l, _)| l),
        rx3_upper: bounds.upper,
        rx3_exact: rx3,
        radius: err.radius,
        diameter: err.diameter,
        free_of,
    };
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("n = {}", report.n);
        println!("m = {}", report.m);
        println!("sdiam3 = {}", report.sdiam3);
        match report.rx3_exact {
            Some(v) => println!("rx3 = {v}"),
            None => println!("rx3 in [{}, {}]", report.rx3_lower, report.rx3_upper),
        }
        println!("radius = {}", report.radius);
        println!("diameter = {}", report.diameter);
        for (name, free) in &report.free_of {
            println!("{name}-free = {free}");
        }
    }
    if let Some((lower, upper)) = exceeded {
        eprintln!("error: solver budget exhausted; best bracket [{lower}, {upper}]");
        return Ok(4);
    }
    Ok(0)
}

#[derive(Serialize)]
struct ColorReport {
    method: String,
    colors_used: usize,
    coloring: serde_json::Value,
}

fn cmd_color(a: &ColorArgs) -> Result<i32> {
    let g = read_graph(&a.input)?;
    let (coloring, colors_used) = match a.method.as_str() {
        "thm7" => {
            let out = color_p4_star_free(&g, a.r, a.remark)?;
            (out.coloring, out.colors_used)
        }
        "thm9" => {
            let p = BoundParams::new(a.r as u32, a.s as u32, a.ell as u32)?;
            let out = color_layered(&g, &p, a.remark)?;
            (out.coloring, out.colors_used)
        }
        other => {
            return Err(Error::InputDomain(format!(
                "unknown method '{other}' (expected thm7|thm9)"
            )))
        }
    };
    let payload = coloring_to_json(&g, &coloring);
    if a.json {
        let report = ColorReport {
            method: a.method.clone(),
            colors_used,
            coloring: serde_json::from_str(&payload).unwrap(),
        };
        let text = serde_json::to_string_pretty(&report).unwrap();
        match &a.out {
            Some(path) => {
                fs::write(path, &payload)?;
                println!("{text}");
            }
            None => println!("{text}"),
        }
    } else {
        eprintln!("colors used: {colors_used}");
        emit(&a.out, &payload)?;
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs) -> Result<i32> {
    let g = read_graph(&a.graph)?;
    let c = coloring_from_json(&g, &fs::read_to_string(&a.coloring)?)?;
    let check = is_3rainbow(&g, &c)?;
    if a.json {
        println!(
            "{}",
            serde_json::json!({
                "valid": check.valid,
                "failing_triple": check.failing_triple.map(|t| t.vertices()),
            })
        );
    } else if check.valid {
        println!("valid");
    } else {
        let t = check.failing_triple.unwrap().vertices();
        println!("invalid: no rainbow tree for triple {{{}, {}, {}}}", t[0], t[1], t[2]);
    }
    Ok(if check.valid { 0 } else { 2 })
}

fn cmd_classify(a: &ClassifyArgs) -> Result<i32> {
    if a.patterns.is_empty() {
        return Err(Error::InputDomain("classify needs at least one pattern".into()));
    }
    let family: Vec<Graph> = a
        .patterns
        .iter()
        .map(|tok| match tok.strip_prefix('@') {
            Some(path) => read_graph(path),
            None => parse_pattern(tok),
        })
        .collect::<Result<_>>()?;
    let c = classify_family(&family)?;
    let witness_text = c.witness.map(|w| match w {
        BoundedWitness::P3Member { p3 } => format!("contains P3 ({})", a.patterns[p3]),
        BoundedWitness::StarAndP4 { star, p4 } => format!(
            "contains a star ({}) and P4 ({})",
            a.patterns[star], a.patterns[p4]
        ),
        BoundedWitness::StarHairyPath { star, hairy, path } => format!(
            "contains a star ({}), a hairy-clique fragment ({}), and a long path ({})",
            a.patterns[star], a.patterns[hairy], a.patterns[path]
        ),
    });
    if a.json {
        println!(
            "{}",
            serde_json::json!({ "bounded": c.bounded, "witness": witness_text })
        );
    } else if c.bounded {
        println!("bounded: {}", witness_text.unwrap());
    } else {
        println!("unbounded");
    }
    Ok(0)
}

fn cmd_bound(a: &BoundArgs) -> Result<i32> {
    let p = BoundParams::new(a.r, a.s, a.ell)?;
    let alphas: Vec<String> = (1..=p.ell - 2)
        .map(|i| alpha0_bound(p.r, p.s, i).to_string())
        .collect();
    let ramsey = ramsey_upper_u64(a.r as u64, a.s as u64).to_string();
    let constant = steiner_rainbow_constant(&p).to_string();
    if a.json {
        println!(
            "{}",
            serde_json::json!({
                "r": a.r, "s": a.s, "ell": a.ell,
                "ramsey_upper_rs": ramsey,
                "alpha0": alphas,
                "constant": constant,
            })
        );
    } else {
        println!("ramsey_upper({}, {}) = {}", a.r, a.s, ramsey);
        for (i, v) in alphas.iter().enumerate() {
            println!("alpha0({}, {}, {}) = {}", a.r, a.s, i + 1, v);
        }
        println!("C({}, {}, {}) = {}", a.r, a.s, a.ell, constant);
    }
    Ok(0)
}

fn cmd_reproduce(a: &ReproduceArgs) -> Result<i32> {
    let rows = reproduce_report(Duration::from_secs(a.budget))?;
    let content = if a.csv { to_csv(&rows) } else { to_text(&rows) };
    emit(&a.out, &content)?;
    Ok(0)
}

/// Parses and dispatches `argv` (including the program name), returning
/// the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success exits
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Color(a) => cmd_color(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Bound(a) => cmd_bound(a),
        Command::Reproduce(a) => cmd_reproduce(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
