//! Command-line surface.
//!
//! Result lines read `k max_edges density` with the density to four
//! decimals; `k = 0` prints `0 0 0`. Exit codes: 0 on success, 2 for a
//! non-planar input, 3 when `k` exceeds the vertex count, 1 otherwise.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dks_core::bouter::BouterOptions;
use dks_core::gen::{gen_bouterplanar, gen_outerplanar, gen_planar, GenSpec};
use dks_core::graph::{Vertex, VertexSet};
use dks_core::oracle::{brute_force_all, DEFAULT_CAP};
use dks_core::outerplanar::OuterplanarOptions;
use dks_core::ptas::{histogram, probe, ProbeEntry, ProbeOptions, Variant};
use dks_core::solve::{leveled_components, solve, Detail, SolveOptions, SolverKind};
use dks_core::{Error, Graph};

use crate::dump;
use crate::io::{instance_embedding, read_graph, write_edge_list, write_json, Input};

#[derive(Debug, Parser)]
#[command(
    name = "dks",
    version,
    about = "Exact densest-k-subgraph on outerplanar and b-outerplanar graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve exactly, choosing the solver from the input.
    Solve(SolveArgs),
    /// Brute-force reference.
    Oracle(OracleArgs),
    /// Generate a seeded instance.
    Gen(GenArgs),
    /// Compare the layered approximation with the optimum.
    ProbePtas(ProbeArgs),
    /// Time the exact solver over a corpus and print CSV.
    Bench(BenchArgs),
    /// Print every intermediate table, or a DOT drawing.
    DumpTables(DumpArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ForceSolver {
    Outerplanar,
    Bouterplanar,
}

impl From<ForceSolver> for SolverKind {
    fn from(f: ForceSolver) -> Self {
        match f {
            ForceSolver::Outerplanar => SolverKind::Outerplanar,
            ForceSolver::Bouterplanar => SolverKind::Bouterplanar,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    /// Skip detection and run this solver.
    #[arg(long, value_enum)]
    pub force_solver: Option<ForceSolver>,
    /// Outerplanar root edge `z,u`: the tree is rooted at `(z, z)` with
    /// leftmost child `(z, u)`.
    #[arg(long, value_name = "Z,U")]
    pub root: Option<String>,
    /// Outer walk position of the level-1 root for the leveled solver.
    #[arg(long)]
    pub root_pos: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Print every `k' = 0..=k`.
    #[arg(long)]
    pub all_k: bool,
    /// Append an optimal vertex set to each line.
    #[arg(long)]
    pub witness: bool,
    /// Write every intermediate table to this file as TSV.
    #[arg(long, value_name = "FILE")]
    pub dump_tables: Option<PathBuf>,
    /// Log the rule applied at every tree node to stderr.
    #[arg(long)]
    pub trace: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub all_k: bool,
    #[arg(long)]
    pub witness: bool,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Outerplanar,
    Bouterplanar,
    Planar,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub b: u32,
    #[arg(long, default_value_t = 0.5)]
    pub rho: f64,
    #[arg(long, env = "DKS_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Output file; `.json` keeps the embedding, anything else is an edge list.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long, conflicts_with = "corpus")]
    pub graph: Option<PathBuf>,
    /// Probe every graph file in this directory.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Capped at each instance's vertex count in corpus mode.
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    /// Delete the congruent layers instead of keeping them.
    #[arg(long)]
    pub classic: bool,
    /// BFS root, by name or id.
    #[arg(long)]
    pub root: Option<String>,
    /// Largest instance the brute-force oracle is used on.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Write the worst instance of a corpus here as JSON.
    #[arg(long)]
    pub worst: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub corpus: PathBuf,
    /// Capped at each instance's vertex count.
    #[arg(long, default_value_t = 10)]
    pub k: usize,
    /// Timed runs per instance; the fastest is reported.
    #[arg(long, default_value_t = 1)]
    pub repeat: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum)]
    pub force_solver: Option<ForceSolver>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DumpFormat {
    /// Intermediate tables.
    Tsv,
    /// The leveled, triangulated graph.
    Dot,
    /// The tree the tables are computed over.
    TreeDot,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = DumpFormat::Tsv)]
    pub format: DumpFormat,
    #[command(flatten)]
    pub solver: SolverArgs,
}

/// Exit code for an error, from the first solver error in its chain.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::NotPlanar) => 2,
        Some(Error::KTooLarge { .. }) => 3,
        _ => 1,
    }
}

pub fn run(cli: Cli, out: &mut dyn std::io::Write) -> Result<()> {
    match cli.command {
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Oracle(a) => cmd_oracle(&a, out),
        Command::Gen(a) => cmd_gen(&a),
        Command::ProbePtas(a) => cmd_probe(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
        Command::DumpTables(a) => cmd_dump(&a, out),
    }
}

/// One result line.
pub fn result_line(k: usize, edges: u32, witness: Option<String>) -> String {
    let mut line = if k == 0 {
        "0 0 0".to_string()
    } else {
        format!("{k} {edges} {:.4}", edges as f64 / k as f64)
    };
    if let Some(w) = witness {
        line.push(' ');
        line.push_str(if w.is_empty() { "-" } else { &w });
    }
    line
}

fn names(g: &Graph, set: &VertexSet) -> String {
    set.iter().map(|v| g.name(v)).collect::<Vec<_>>().join(",")
}

fn print_values(
    out: &mut dyn std::io::Write,
    g: &Graph,
    k: usize,
    all_k: bool,
    values: &[u32],
    witnesses: &[VertexSet],
) -> Result<()> {
    let from = if all_k { 0 } else { k };
    for kk in from..=k {
        let w = witnesses.get(kk).map(|s| names(g, s));
        writeln!(out, "{}", result_line(kk, values[kk], w))?;
    }
    Ok(())
}

fn vertex(g: &Graph, s: &str) -> Result<Vertex> {
    if let Some(v) = g.vertex_by_name(s) {
        return Ok(v);
    }
    match s.parse::<Vertex>() {
        Ok(v) if (v as usize) < g.n() => Ok(v),
        _ => bail!("unknown vertex {s}"),
    }
}

fn solve_options(g: &Graph, a: &SolverArgs) -> Result<SolveOptions> {
    let root = match &a.root {
        Some(s) => {
            let (z, u) = s.split_once(',').context("--root expects Z,U")?;
            Some((vertex(g, z.trim())?, vertex(g, u.trim())?))
        }
        None => None,
    };
    Ok(SolveOptions {
        force: a.force_solver.map(Into::into),
        outerplanar: OuterplanarOptions {
            root,
            ..Default::default()
        },
        bouter: BouterOptions {
            root: a.root_pos,
            ..Default::default()
        },
        ..Default::default()
    })
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k > g.n() {
        return Err(Error::KTooLarge { k, n: g.n() }.into());
    }
    Ok(())
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn std::io::Write) -> Result<()> {
    let Input { graph: g, embedding } = read_graph(&a.graph)?;
    check_k(&g, a.k)?;
    let mut opts = solve_options(&g, &a.solver)?;
    opts.witness = a.witness;
    opts.outerplanar.dump = a.dump_tables.is_some();
    opts.bouter.dump = a.dump_tables.is_some();
    opts.bouter.trace = a.trace || a.dump_tables.is_some();
    let report = solve(&g, &embedding, a.k, &opts)?;
    if a.trace {
        match &report.detail {
            Detail::Bouterplanar(sol) => {
                for line in dump::trace_lines(&g, sol) {
                    eprintln!("{line}");
                }
            }
            Detail::Outerplanar(_) => eprintln!("outerplanar solver: every node folds its children"),
        }
    }
    if let Some(path) = &a.dump_tables {
        let text = match &report.detail {
            Detail::Outerplanar(sol) => dump::outerplanar_tsv(&g, sol),
            Detail::Bouterplanar(sol) => dump::bouterplanar_tsv(&g, sol),
        };
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    print_values(out, &g, a.k, a.all_k, &report.values, &report.witnesses)
}

fn cmd_oracle(a: &OracleArgs, out: &mut dyn std::io::Write) -> Result<()> {
    let g = read_graph(&a.graph)?.graph;
    check_k(&g, a.k)?;
    let res = brute_force_all(&g, a.cap)?;
    let witnesses = if a.witness { res.witnesses } else { Vec::new() };
    print_values(out, &g, a.k, a.all_k, &res.values, &witnesses)
}

fn cmd_gen(a: &GenArgs) -> Result<()> {
    let spec = GenSpec::new(a.n, a.b, a.rho, a.seed);
    let inst = match a.kind {
        GenKind::Outerplanar => gen_outerplanar(&spec)?,
        GenKind::Bouterplanar => gen_bouterplanar(&spec)?,
        GenKind::Planar => gen_planar(&spec)?,
    };
    let text = if a.out.extension().is_some_and(|e| e == "json") {
        write_json(&inst.graph, &instance_embedding(&inst)?)?
    } else {
        write_edge_list(&inst.graph)
    };
    fs::write(&a.out, text).with_context(|| format!("writing {}", a.out.display()))
}

/// Graph files of a corpus directory in name order.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("reading {}", dir.display()))? {
        let path = entry?.path();
        if path.is_file()
            && path
                .extension()
                .is_some_and(|e| e == "json" || e == "txt" || e == "edges")
        {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Applies `f` to every item on up to `jobs` threads, keeping input order.
pub fn parallel_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let slots: Vec<Mutex<Option<R>>> = items.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..jobs.clamp(1, items.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                *slots[i].lock().unwrap() = Some(f(&items[i]));
            });
        }
    });
    slots.into_iter().map(|m| m.into_inner().unwrap().unwrap()).collect()
}

const PROBE_HEADER: &str = "n,m,k,epsilon,b,variant,best,best_class,worst_class,opt,ratio,depth,class_values";

fn probe_row(e: &ProbeEntry) -> String {
    let variant = match e.variant {
        Variant::Keep => "keep",
        Variant::Delete => "delete",
    };
    let classes = e
        .class_values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";");
    format!(
        "{},{},{},{},{},{variant},{},{},{},{},{:.4},{},{classes}",
        e.n, e.m, e.k, e.epsilon, e.b, e.best, e.best_class, e.worst_class, e.opt, e.ratio, e.depth
    )
}

fn probe_one(input: &Input, k: usize, a: &ProbeArgs) -> Result<ProbeEntry> {
    let g = &input.graph;
    let root = match &a.root {
        Some(s) => vertex(g, s)?,
        None => 0,
    };
    let opts = ProbeOptions {
        variant: if a.classic { Variant::Delete } else { Variant::Keep },
        root,
        cap: a.cap,
    };
    Ok(probe(g, input.embedding.rotation.as_deref(), k, a.epsilon, &opts)?)
}

fn cmd_probe(a: &ProbeArgs, out: &mut dyn std::io::Write) -> Result<()> {
    if let Some(path) = &a.graph {
        let input = read_graph(path)?;
        check_k(&input.graph, a.k)?;
        let e = probe_one(&input, a.k, a)?;
        writeln!(out, "{PROBE_HEADER}")?;
        writeln!(out, "{}", probe_row(&e))?;
        return Ok(());
    }
    let Some(dir) = &a.corpus else {
        bail!("give --graph or --corpus");
    };
    let files = corpus_files(dir)?;
    let results = parallel_map(&files, a.jobs, |path| -> Result<(Input, ProbeEntry)> {
        let input = read_graph(path)?;
        let k = a.k.min(input.graph.n());
        let e = probe_one(&input, k, a).with_context(|| format!("probing {}", path.display()))?;
        Ok((input, e))
    });
    writeln!(out, "file,{PROBE_HEADER}")?;
    let mut entries = Vec::new();
    let mut worst: Option<(f64, usize)> = None;
    for (i, r) in results.iter().enumerate() {
        let (_, e) = r.as_ref().map_err(|e| anyhow::anyhow!("{e:#}"))?;
        let name = files[i].file_name().unwrap_or_default().to_string_lossy();
        writeln!(out, "{name},{}", probe_row(e))?;
        if worst.is_none_or(|(r, _)| e.ratio < r) {
            worst = Some((e.ratio, i));
        }
        entries.push(e.clone());
    }
    let h = histogram(&entries);
    eprintln!(
        "ratio histogram (tenths): {}",
        h.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    );
    if let Some((ratio, i)) = worst {
        eprintln!("worst instance: {} (ratio {ratio:.4})", files[i].display());
        if let Some(path) = &a.worst {
            let (input, _) = results[i].as_ref().unwrap();
            fs::write(path, write_json(&input.graph, &input.embedding)?)?;
        }
    }
    Ok(())
}

/// One timed solve per corpus file.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub b: u32,
    pub solver: SolverKind,
    pub seconds: f64,
    pub cells: usize,
}

pub const BENCH_HEADER: &str = "n,k,b,solver,wall_time,cells";

impl BenchRow {
    pub fn csv(&self) -> String {
        let solver = match self.solver {
            SolverKind::Outerplanar => "outerplanar",
            SolverKind::Bouterplanar => "bouterplanar",
        };
        format!(
            "{},{},{},{solver},{:.6},{}",
            self.n, self.k, self.b, self.seconds, self.cells
        )
    }
}

/// Fastest of `repeat` solves of one input.
pub fn bench_one(input: &Input, k: usize, force: Option<SolverKind>, repeat: usize) -> Result<BenchRow> {
    let opts = SolveOptions {
        force,
        ..Default::default()
    };
    let mut best: Option<BenchRow> = None;
    for _ in 0..repeat.max(1) {
        let start = Instant::now();
        let r = solve(&input.graph, &input.embedding, k, &opts)?;
        let seconds = start.elapsed().as_secs_f64();
        if best.as_ref().is_none_or(|b| seconds < b.seconds) {
            best = Some(BenchRow {
                n: input.graph.n(),
                k,
                b: r.depth,
                solver: r.solver,
                seconds,
                cells: r.cells,
            });
        }
    }
    Ok(best.unwrap())
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn std::io::Write) -> Result<()> {
    let files = corpus_files(&a.corpus)?;
    let force = a.force_solver.map(Into::into);
    let rows = parallel_map(&files, a.jobs, |path| -> Result<BenchRow> {
        let input = read_graph(path)?;
        let k = a.k.min(input.graph.n());
        bench_one(&input, k, force, a.repeat).with_context(|| format!("solving {}", path.display()))
    });
    writeln!(out, "{BENCH_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row?.csv())?;
    }
    Ok(())
}

fn cmd_dump(a: &DumpArgs, out: &mut dyn std::io::Write) -> Result<()> {
    let Input { graph: g, embedding } = read_graph(&a.graph)?;
    check_k(&g, a.k)?;
    let mut opts = solve_options(&g, &a.solver)?;
    if a.format == DumpFormat::Dot {
        let forests = leveled_components(&g, &embedding, &opts.bouter)?;
        out.write_all(dump::leveled_dot(&g, &forests).as_bytes())?;
        return Ok(());
    }
    opts.outerplanar.dump = true;
    opts.bouter.dump = true;
    opts.bouter.trace = true;
    let report = solve(&g, &embedding, a.k, &opts)?;
    let text = match (&report.detail, a.format) {
        (Detail::Outerplanar(sol), DumpFormat::Tsv) => dump::outerplanar_tsv(&g, sol),
        (Detail::Bouterplanar(sol), DumpFormat::Tsv) => dump::bouterplanar_tsv(&g, sol),
        (Detail::Outerplanar(sol), _) => dump::outerplanar_tree_dot(&g, sol),
        (Detail::Bouterplanar(_), _) => dump::slice_tree_dot(&g, &leveled_components(&g, &embedding, &opts.bouter)?),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}
