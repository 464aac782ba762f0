//! `nonrep`: generate words, build colorings, verify them, compute exact
//! Thue numbers of tiny graphs and render colorings as SVG.
//!
//! Exit codes: 0 pass, 1 witness found, 2 usage or input error, 3 budget
//! exhausted (or color cap reached for `pi`).

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nonrep::graphs::{build_biclique_product, build_box, build_rook};
use nonrep::verifier::{
    check_lazy_walk_rigidity_limited, exact_pi, find_repetitive_path, PiOutcome, SearchBudget,
};
use nonrep::words::{find_palindrome, find_square, generate_thue, generate_thue_star};
use nonrep::{
    color, Adjacency, ColoredGraph, ConstructionKind, ConstructionSpec, Graph, LatticeRegion, Word,
};

#[derive(Parser)]
#[command(
    name = "nonrep",
    version,
    about = "Non-repetitive colorings and their verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a prefix of the ternary or the palindrome-free word.
    GenWord(GenWordArgs),
    /// Check a word for square and palindrome factors.
    CheckWord(CheckWordArgs),
    /// Materialize a coloring.
    Color(ColorArgs),
    /// Search a coloring for repetitive paths.
    Verify(VerifyArgs),
    /// Exact Thue number of a tiny graph.
    Pi(PiArgs),
    /// Render a coloring file as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum WordKind {
    Thue,
    ThueStar,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WordFormat {
    Text,
    Json,
}

#[derive(Args)]
struct GenWordArgs {
    #[arg(long, value_enum)]
    kind: WordKind,
    #[arg(long)]
    length: usize,
    /// Comma-separated labels (3 for thue, 4 for thue-star).
    #[arg(long, value_delimiter = ',')]
    alphabet: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "text")]
    format: WordFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckWordArgs {
    #[arg(long, value_enum, conflicts_with = "file")]
    kind: Option<WordKind>,
    #[arg(long, requires = "kind")]
    length: Option<usize>,
    /// Word file, as text (needs --alphabet) or JSON.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    alphabet: Option<Vec<String>>,
    /// Also look for palindromes of length >= 2.
    #[arg(long)]
    palindromes: bool,
    /// Run the lazy-walk rigidity check up to this half length.
    #[arg(long)]
    lazy_k_max: Option<usize>,
}

#[derive(Args, Clone)]
struct SpecArgs {
    /// diagonal, grid12-base, grid12, strong16, bad-product, tensor, cart3d28, rook, biclique
    #[arg(long)]
    construction: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Inclusive bounds, `lo:hi[,lo:hi[,lo:hi]]`.
    #[arg(long, allow_hyphen_values = true)]
    region: Option<String>,
    /// Word offsets, one per slot; computed when omitted.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    offsets: Option<Vec<i64>>,
    #[arg(long)]
    adjacency: Option<String>,
    /// Tensor component base point; defaults to the region's lower corner.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    base: Option<Vec<i64>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct ColorArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: ColorFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the graph summary JSON to stderr.
    #[arg(long)]
    summary: bool,
    /// Debug dump of the edge list as `u,v` CSV.
    #[arg(long)]
    edges_csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Coloring file written by `color`.
    #[arg(long, conflicts_with = "construction")]
    file: Option<PathBuf>,
    /// Longest path length searched (2 k_max).
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    #[arg(long, default_value_t = 1_000_000_000)]
    max_nodes: u64,
    #[arg(long, env = "NONREP_PARALLELISM")]
    parallelism: Option<usize>,
    /// Smallest witness and schedule-independent reports.
    #[arg(long)]
    deterministic: bool,
    /// Report path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PiArgs {
    /// path:N, cycle:N, complete:N, grid:RxC, rook:N or biclique:N
    #[arg(long)]
    graph: String,
    #[arg(long, default_value_t = 6)]
    max_colors: usize,
}

#[derive(Args)]
struct RenderArgs {
    /// Coloring JSON written by `color`.
    #[arg(long)]
    file: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_word(kind: WordKind, length: usize, alphabet: Option<Vec<String>>) -> Result<Word> {
    Ok(match (kind, alphabet) {
        (WordKind::Thue, None) => generate_thue(length),
        (WordKind::Thue, Some(a)) => generate_thue(length).relabel(a)?,
        (WordKind::ThueStar, a) => {
            generate_thue_star(length, a.unwrap_or_else(nonrep::words::abcd))?
        }
    })
}

fn gen_word(args: GenWordArgs) -> Result<i32> {
    if args.length == 0 {
        bail!("--length must be at least 1");
    }
    let word = build_word(args.kind, args.length, args.alphabet)?;
    let text = match args.format {
        WordFormat::Text => format!("{word}\n"),
        WordFormat::Json => format!("{}\n", word.to_json()),
    };
    write_out(args.out.as_ref(), &text)?;
    Ok(0)
}

fn check_word(args: CheckWordArgs) -> Result<i32> {
    let word = match (&args.file, args.kind) {
        (Some(path), _) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            if text.trim_start().starts_with('{') {
                serde_json::from_str::<Word>(&text).context("parsing word JSON")?
            } else {
                let alphabet = args
                    .alphabet
                    .clone()
                    .ok_or_else(|| anyhow!("text word files need --alphabet"))?;
                Word::parse(&text, alphabet)?
            }
        }
        (None, Some(kind)) => {
            let length = args
                .length
                .ok_or_else(|| anyhow!("--kind needs --length"))?;
            build_word(kind, length, args.alphabet.clone())?
        }
        (None, None) => bail!("give --kind and --length, or --file"),
    };
    let square = find_square(&word);
    let palindrome = if args.palindromes {
        find_palindrome(&word, 2)
    } else {
        None
    };
    let mut report = json!({
        "length": word.len(),
        "square": square,
        "palindrome": palindrome,
    });
    let mut lazy_found = false;
    if let Some(k) = args.lazy_k_max {
        let found = check_lazy_walk_rigidity_limited(&word, k, 1000)?;
        lazy_found = !found.is_empty();
        report["lazyKMax"] = k.into();
        report["lazyCounterexamples"] = serde_json::to_value(&found)?;
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if square.is_some() || palindrome.is_some() || lazy_found {
        1
    } else {
        0
    })
}

fn parse_spec(args: &SpecArgs) -> Result<ConstructionSpec> {
    let name = args
        .construction
        .as_deref()
        .ok_or_else(|| anyhow!("--construction is required"))?;
    let kind = ConstructionKind::parse(name, args.n)?;
    let mut spec = ConstructionSpec::new(kind);
    if kind.is_lattice() {
        let region: LatticeRegion = args
            .region
            .as_deref()
            .ok_or_else(|| anyhow!("construction {name} needs --region"))?
            .parse()?;
        if let ConstructionKind::Tensor { n } = kind {
            if n != region.dim() {
                bail!(
                    "tensor --n {n} does not match a {}-dimensional region",
                    region.dim()
                );
            }
        }
        spec.region = Some(region);
        if let Some(a) = &args.adjacency {
            spec.adjacency = Some(a.parse::<Adjacency>()?);
        }
        spec.base = args.base.clone();
        spec.offsets = args.offsets.clone().unwrap_or_default();
    } else if args.region.is_some() || args.offsets.is_some() {
        bail!("construction {name} takes --n, not a region or offsets");
    }
    Ok(spec)
}

/// Tensor kinds take their dimension from the region when `--n` is absent.
fn fill_tensor_n(args: &SpecArgs) -> SpecArgs {
    let mut args = args.clone();
    if args.construction.as_deref() == Some("tensor") && args.n.is_none() {
        if let Some(r) = args
            .region
            .as_deref()
            .and_then(|r| r.parse::<LatticeRegion>().ok())
        {
            args.n = Some(r.dim());
        }
    }
    args
}

fn color_cmd(args: ColorArgs) -> Result<i32> {
    let spec = parse_spec(&fill_tensor_n(&args.spec))?;
    let cg = color(&spec)?;
    let bound = spec.kind.palette_bound();
    if cg.palette().len() > bound {
        bail!(
            "palette {} exceeds the construction bound {bound}",
            cg.palette().len()
        );
    }
    let text = match args.format {
        ColorFormat::Json => format!("{}\n", cg.to_json_string()?),
        ColorFormat::Csv => cg.to_csv(),
    };
    if args.summary {
        eprintln!("{}", cg.graph().summary_json());
    }
    if let Some(p) = &args.edges_csv {
        fs::write(p, cg.graph().edges_csv()).with_context(|| format!("writing {}", p.display()))?;
    }
    match &args.out {
        Some(p) => {
            write_out(Some(p), &text)?;
            println!("palette {}", cg.palette().len());
        }
        None => {
            print!("{text}");
            eprintln!("palette {}", cg.palette().len());
        }
    }
    Ok(0)
}

fn verify_cmd(args: VerifyArgs) -> Result<i32> {
    let cg = match &args.file {
        Some(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            ColoredGraph::from_json_str(&text)?
        }
        None => color(&parse_spec(&fill_tensor_n(&args.spec))?)?,
    };
    if args.max_len < 2 {
        bail!("--max-len must be at least 2");
    }
    let parallelism = args
        .parallelism
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let budget = SearchBudget::new(args.max_len / 2)
        .with_max_nodes(args.max_nodes)
        .with_parallelism(parallelism)
        .deterministic(args.deterministic);
    let report = find_repetitive_path(&cg, budget)?;
    write_out(args.out.as_ref(), &format!("{}\n", report.to_json_string()))?;
    eprintln!(
        "{:?}: {} nodes, palette {}",
        report.status,
        report.nodes_visited,
        cg.palette().len()
    );
    Ok(report.status.exit_code())
}

fn parse_pi_graph(spec: &str) -> Result<Graph> {
    let (family, param) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!("graph spec must look like path:4 or grid:3x3"))?;
    let num = |s: &str| -> Result<usize> { s.parse().with_context(|| format!("bad size {s:?}")) };
    Ok(match family {
        "path" => Graph::path(num(param)?)?,
        "cycle" => Graph::cycle(num(param)?)?,
        "complete" => {
            let n = num(param)?;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n, &edges)?
        }
        "grid" => {
            let (r, c) = param
                .split_once('x')
                .ok_or_else(|| anyhow!("grid size must look like 3x4"))?;
            let region =
                LatticeRegion::new(vec![0, 0], vec![num(r)? as i64 - 1, num(c)? as i64 - 1])?;
            build_box(&region, Adjacency::Cartesian)
        }
        "rook" => build_rook(num(param)?)?,
        "biclique" => build_biclique_product(num(param)?)?,
        _ => bail!("unknown graph family {family:?}"),
    })
}

fn pi_cmd(args: PiArgs) -> Result<i32> {
    let graph = parse_pi_graph(&args.graph)?;
    if graph.vertex_count() > 16 {
        bail!(
            "exact pi is limited to 16 vertices, got {}",
            graph.vertex_count()
        );
    }
    match exact_pi(&graph, args.max_colors) {
        PiOutcome::Exact { value, coloring } => {
            println!("{value}");
            let cells: Vec<_> = (0..graph.vertex_count())
                .map(|v| {
                    let mut row = graph.payload(v).to_vec();
                    row.push(coloring[v] as i64);
                    row
                })
                .collect();
            println!("{}", json!({ "pi": value, "cells": cells }));
            Ok(0)
        }
        PiOutcome::Exceeds { max_colors } => {
            println!("exceeds {max_colors}");
            Ok(3)
        }
    }
}

fn render_cmd(args: RenderArgs) -> Result<i32> {
    let text = fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let cg = ColoredGraph::from_json_str(&text)?;
    let svg = render::svg(&cg)?;
    write_out(args.out.as_ref(), &svg)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::GenWord(a) => gen_word(a),
        Command::CheckWord(a) => check_word(a),
        Command::Color(a) => color_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Pi(a) => pi_cmd(a),
        Command::Render(a) => render_cmd(a),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
