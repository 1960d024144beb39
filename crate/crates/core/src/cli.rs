//! The `fourtree` command line. Exit codes: 0 for a tree or a valid
//! certificate, 1 for a certificate or an invalid one, 2 for bad input.

use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use rayon::prelude::*;

use crate::certificate::{Certificate, CertificateJson, ResultJson};
use crate::error::{Error, Result};
use crate::generators::{
    connect_components, gen_bipartite, gen_cubic_structure, gen_square_structure, gen_triangle_free, rng, CubicSizes,
    SquareSizes,
};
use crate::graph::{parse_graph_text, write_graph_text, Graph, GraphFile};
use crate::oracle::{brute_force_centered_tree, brute_force_tree, brute_force_two_in_cycle};
use crate::reduction::build_centered_instance;
use crate::solver::{attach_terminals, four_in_a_tree_with, verify_result, Answer, GadgetMode, SolveOptions};

#[derive(Parser, Debug)]
#[command(name = "fourtree", version, about = "Induced trees through four vertices of a triangle-free graph")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Find an induced tree through four vertices, or a certificate that none exists.
    Solve {
        graph: PathBuf,
        /// Four query vertices; defaults to the file's `# terminals` line.
        #[arg(num_args = 0..=4)]
        vertices: Vec<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        dot: bool,
        /// Attach pendant terminals even when the queries already are terminals.
        #[arg(long)]
        always_gadget: bool,
        /// Validate the split after every augmentation step.
        #[arg(long)]
        check_steps: bool,
    },
    /// Check a certificate or a solver result against a graph.
    Verify { graph: PathBuf, certificate: PathBuf },
    /// Exhaustive search on a small graph.
    Oracle {
        graph: PathBuf,
        vertices: Vec<usize>,
        #[arg(long, value_enum, default_value_t = OracleKind::Tree)]
        kind: OracleKind,
    },
    /// Compare the solver with the oracle on random graphs.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        min_n: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write a minimized counterexample.
        #[arg(long, default_value = "counterexample.txt")]
        out: PathBuf,
        /// Pretend the solver always finds a tree, to see the harness catch it.
        #[arg(long)]
        inject_bug: bool,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Build the centered-tree instance for an induced cycle through `x` and `y`.
    Reduce { graph: PathBuf, x: usize, y: usize },
    /// Time the solver on random bipartite graphs.
    Bench {
        /// Comma-separated vertex counts; may be empty.
        #[arg(long, default_value = "500,1000,2000")]
        sizes: String,
        /// Edges per vertex.
        #[arg(long, default_value_t = 4)]
        density: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
    /// Graphviz output, coloured by the parts of a certificate if given.
    Dot {
        graph: PathBuf,
        /// A certificate or solver result.
        #[arg(long)]
        result: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenCmd {
    /// Random square structure.
    Square {
        #[arg(long, value_delimiter = ',', default_value = "1,1,1,1")]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1,1,1,1")]
        s: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, default_value_t = 0.3)]
        inner_p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the split as certificate JSON.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Random cubic structure.
    Cubic {
        #[arg(long, value_delimiter = ',', default_value = "1,1,1,1")]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0,0,0,0")]
        b: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1,1,1,1,1,1,1,1")]
        s: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, default_value_t = 0.3)]
        inner_p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Random triangle-free graph.
    Rand {
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Tree,
    Centered,
    Cycle,
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn read_graph(path: &FsPath) -> Result<GraphFile> {
    parse_graph_text(&fs::read_to_string(path)?)
}

fn queries(file: &GraphFile, vs: &[usize]) -> Result<[usize; 4]> {
    match vs.len() {
        4 => Ok([vs[0], vs[1], vs[2], vs[3]]),
        0 => file.terminals.ok_or_else(|| Error::Precondition("give four vertices or a `# terminals` line".into())),
        k => Err(Error::Precondition(format!("expected four vertices, got {k}"))),
    }
}

fn arr<const N: usize>(v: &[usize], what: &str) -> Result<[usize; N]> {
    v.try_into().map_err(|_| Error::Precondition(format!("{what} needs {N} comma-separated sizes")))
}

pub fn run(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Solve { graph, vertices, json, dot, always_gadget, check_steps } => {
            let file = read_graph(&graph)?;
            let y = queries(&file, &vertices)?;
            let gadget = if always_gadget { GadgetMode::Always } else { GadgetMode::Auto };
            let res = four_in_a_tree_with(&file.graph, y, SolveOptions { gadget, check_steps })?;
            if dot {
                let h = res.working_graph(&file.graph);
                let parts = match &res.answer {
                    Answer::Tree(t) => tree_parts(h.n(), &t.to_vec()),
                    Answer::NoTree(c) => certificate_parts(h.n(), c),
                };
                print!("{}", to_dot(h, &parts, &file));
            } else if json {
                println!("{}", serde_json::to_string_pretty(&res.to_json())?);
            } else {
                match &res.answer {
                    Answer::Tree(t) => {
                        println!("tree {}", join(&t.to_vec()));
                    }
                    Answer::NoTree(c) => {
                        println!("no tree: {} certificate", c.kind());
                        println!("{}", serde_json::to_string_pretty(&res.to_json())?);
                    }
                }
            }
            Ok(if res.has_tree() { 0 } else { 1 })
        }
        Cmd::Verify { graph, certificate } => {
            let file = read_graph(&graph)?;
            let text = fs::read_to_string(&certificate)?;
            let problems = match serde_json::from_str::<ResultJson>(&text) {
                Ok(r) => verify_result(&file.graph, &r)?,
                Err(_) => {
                    let c: CertificateJson =
                        serde_json::from_str(&text).map_err(|e| Error::Schema(format!("not a certificate: {e}")))?;
                    crate::solver::verify_certificate(&file.graph, &c)?
                }
            };
            if problems.is_empty() {
                println!("valid");
                Ok(0)
            } else {
                for p in &problems {
                    println!("{p}");
                }
                Ok(1)
            }
        }
        Cmd::Oracle { graph, vertices, kind } => {
            let g = read_graph(&graph)?.graph;
            let found = match kind {
                OracleKind::Tree => brute_force_tree(&g, &vertices, None)?.map(|t| t.to_vec()),
                OracleKind::Centered => brute_force_centered_tree(&g, &vertices)?.map(|t| t.to_vec()),
                OracleKind::Cycle => {
                    let [x, y] = arr::<2>(&vertices, "cycle")?;
                    brute_force_two_in_cycle(&g, x, y)?.map(|s| s.to_vec())
                }
            };
            match found {
                Some(vs) => {
                    println!("found {}", join(&vs));
                    Ok(0)
                }
                None => {
                    println!("none");
                    Ok(1)
                }
            }
        }
        Cmd::Fuzz { count, min_n, max_n, seed, out, inject_bug } => {
            let solver = |g: &Graph, y: [usize; 4]| -> Result<bool> {
                let res = four_in_a_tree_with(g, y, SolveOptions::default())?;
                if let Answer::NoTree(c) = &res.answer {
                    if !c.validate(res.working_graph(g)).is_empty() {
                        return Err(Error::Internal("certificate failed validation".into()));
                    }
                }
                Ok(inject_bug || res.has_tree())
            };
            let report = fuzz(count, min_n, max_n, seed, &solver)?;
            println!("{}/{} agree", report.agree, report.total);
            if let Some(case) = report.first_mismatch {
                let small = minimize(&case, &solver);
                let file = GraphFile { terminals: Some(small.y), ..GraphFile::new(small.graph.clone()) };
                fs::write(&out, write_graph_text(&file))?;
                println!(
                    "mismatch at seed {}: minimized to n = {}, m = {}, written to {}",
                    case.seed,
                    small.graph.n(),
                    small.graph.m(),
                    out.display()
                );
                return Ok(1);
            }
            Ok(0)
        }
        Cmd::Gen { what } => gen(what),
        Cmd::Reduce { graph, x, y } => {
            let g = read_graph(&graph)?.graph;
            let inst = build_centered_instance(&g, x, y)?;
            let mut file = GraphFile::new(inst.graph);
            file.terminals = Some(inst.terminals);
            file.labels.insert(inst.center, "c".into());
            for (i, &t) in inst.terminals.iter().enumerate() {
                file.labels.insert(t, format!("x{}", i + 1));
            }
            print!("{}", write_graph_text(&file));
            Ok(0)
        }
        Cmd::Bench { sizes, density, seed, reps } => {
            let sizes = sizes
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::Precondition(format!("bad size {t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            let rows = bench(&sizes, density, seed, reps)?;
            println!("{:>8} {:>9} {:>12}", "n", "m", "time_ms");
            for r in &rows {
                println!("{:>8} {:>9} {:>12.3}", r.n, r.m, r.seconds * 1e3);
            }
            if let Some(e) = fit_exponent(&rows) {
                println!("exponent of time vs n*m: {e:.3}");
            }
            Ok(0)
        }
        Cmd::Dot { graph, result } => {
            let file = read_graph(&graph)?;
            let (h, parts) = match result {
                None => (file.graph.clone(), vec![None; file.graph.n()]),
                Some(p) => {
                    let text = fs::read_to_string(p)?;
                    match serde_json::from_str::<ResultJson>(&text) {
                        Ok(ResultJson::Tree { vertices, .. }) => {
                            (file.graph.clone(), tree_parts(file.graph.n(), &vertices))
                        }
                        Ok(ResultJson::NoTree { certificate, gadgeted, queries }) => {
                            let h =
                                if gadgeted { attach_terminals(&file.graph, queries)?.0 } else { file.graph.clone() };
                            let c = Certificate::from_json(&certificate, h.n())?;
                            let parts = certificate_parts(h.n(), &c);
                            (h, parts)
                        }
                        Err(_) => {
                            let cj: CertificateJson = serde_json::from_str(&text)
                                .map_err(|e| Error::Schema(format!("not a certificate: {e}")))?;
                            let c = Certificate::from_json(&cj, file.graph.n())?;
                            (file.graph.clone(), certificate_parts(file.graph.n(), &c))
                        }
                    }
                }
            };
            print!("{}", to_dot(&h, &parts, &file));
            Ok(0)
        }
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn gen(what: GenCmd) -> Result<i32> {
    let (file, cert) = match what {
        GenCmd::Square { a, s, r, inner_p, seed, cert } => {
            let sizes = SquareSizes { a: arr(&a, "--a")?, s: arr(&s, "--s")?, r };
            let (g, t, split) = gen_square_structure(sizes, inner_p, seed)?;
            let mut f = GraphFile::new(g);
            f.terminals = Some(t.x);
            (f, cert.map(|p| (p, Certificate::Square(split))))
        }
        GenCmd::Cubic { a, b, s, r, inner_p, seed, cert } => {
            let sizes = CubicSizes { a: arr(&a, "--a")?, b: arr(&b, "--b")?, s: arr(&s, "--s")?, r };
            let (g, t, split) = gen_cubic_structure(sizes, inner_p, seed)?;
            let mut f = GraphFile::new(g);
            f.terminals = Some(t.x);
            (f, cert.map(|p| (p, Certificate::Cubic(split))))
        }
        GenCmd::Rand { n, p, seed, connected } => {
            let g = gen_triangle_free(n, p, seed);
            let g = if connected { connect_components(&g) } else { g };
            (GraphFile::new(g), None)
        }
    };
    if let Some((path, c)) = cert {
        fs::write(path, serde_json::to_string_pretty(&c.to_json())?)?;
    }
    print!("{}", write_graph_text(&file));
    Ok(0)
}

/// One fuzz case, reproducible from its seed.
#[derive(Clone, Debug)]
pub struct FuzzCase {
    pub seed: u64,
    pub graph: Graph,
    pub y: [usize; 4],
}

#[derive(Clone, Debug)]
pub struct FuzzReport {
    pub total: usize,
    pub agree: usize,
    pub first_mismatch: Option<FuzzCase>,
}

/// Connected triangle-free graph with `min_n..=max_n` vertices and four
/// random query vertices, all from `seed`.
pub fn fuzz_case(seed: u64, min_n: usize, max_n: usize) -> FuzzCase {
    let mut r = rng(seed);
    let n = r.gen_range(min_n..=max_n.max(min_n));
    let p = r.gen_range(0.15..0.6);
    let graph = connect_components(&gen_triangle_free(n, p, r.gen()));
    let y = std::array::from_fn(|_| r.gen_range(0..n));
    FuzzCase { seed, graph, y }
}

/// Exhaustive answer for the same question the solver gets.
pub fn oracle_decides(g: &Graph, y: [usize; 4]) -> Result<bool> {
    crate::oracle::has_covering_tree(g, &y)
}

pub type Decider<'a> = dyn Fn(&Graph, [usize; 4]) -> Result<bool> + Sync + 'a;

/// Runs `count` cases in parallel; case `i` uses seed `seed + i`.
pub fn fuzz(count: usize, min_n: usize, max_n: usize, seed: u64, decide: &Decider<'_>) -> Result<FuzzReport> {
    if max_n > crate::oracle::TREE_LIMIT {
        return Err(Error::TooLarge { n: max_n, limit: crate::oracle::TREE_LIMIT });
    }
    let results: Vec<(u64, bool)> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let case = fuzz_case(seed.wrapping_add(i), min_n, max_n);
            let ok = matches!(
                (decide(&case.graph, case.y), oracle_decides(&case.graph, case.y)),
                (Ok(a), Ok(b)) if a == b
            );
            (seed.wrapping_add(i), ok)
        })
        .collect();
    let agree = results.iter().filter(|r| r.1).count();
    let first_mismatch = results.iter().find(|r| !r.1).map(|r| fuzz_case(r.0, min_n, max_n));
    Ok(FuzzReport { total: count, agree, first_mismatch })
}

/// Greedily drops edges, then non-query vertices, while the decider still
/// disagrees with the oracle.
pub fn minimize(case: &FuzzCase, decide: &Decider<'_>) -> FuzzCase {
    let bad = |g: &Graph, y: [usize; 4]| match (decide(g, y), oracle_decides(g, y)) {
        (Ok(a), Ok(b)) => a != b,
        _ => true,
    };
    let mut cur = case.clone();
    loop {
        let mut changed = false;
        let edges = cur.graph.edge_list();
        for k in 0..edges.len() {
            let fewer: Vec<_> = edges.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &e)| e).collect();
            let g = Graph::new(cur.graph.n(), &fewer).expect("subgraph");
            if bad(&g, cur.y) {
                cur.graph = g;
                changed = true;
                break;
            }
        }
        if changed {
            continue;
        }
        for v in (0..cur.graph.n()).rev().filter(|v| !cur.y.contains(v)) {
            let keep = crate::graph::VertexSet::from_iter(cur.graph.n(), (0..cur.graph.n()).filter(|&u| u != v));
            let (g, map) = cur.graph.induced(&keep);
            let y = cur.y.map(|q| map.iter().position(|&o| o == q).expect("query kept"));
            if bad(&g, y) {
                cur.graph = g;
                cur.y = y;
                changed = true;
                break;
            }
        }
        if !changed {
            return cur;
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub seconds: f64,
}

/// Median solve time on connected random bipartite graphs with
/// `density * n` edges and four random queries.
pub fn bench(sizes: &[usize], density: usize, seed: u64, reps: usize) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for (k, &n) in sizes.iter().enumerate() {
        let s = seed.wrapping_add(k as u64);
        let g = connect_components(&gen_bipartite(n, density * n, s));
        let mut r = rng(s);
        let y = std::array::from_fn(|_| r.gen_range(0..n.max(1)));
        let mut times = Vec::new();
        for _ in 0..reps.max(1) {
            let t0 = Instant::now();
            four_in_a_tree_with(&g, y, SolveOptions::default())?;
            times.push(t0.elapsed().as_secs_f64());
        }
        times.sort_by(f64::total_cmp);
        rows.push(BenchRow { n, m: g.m(), seconds: times[times.len() / 2] });
    }
    Ok(rows)
}

/// Least-squares slope of `log t` against `log (n m)`; needs two sizes.
pub fn fit_exponent(rows: &[BenchRow]) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (((r.n * r.m) as f64).ln(), r.seconds.max(1e-9).ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

fn tree_parts(n: usize, vs: &[usize]) -> Vec<Option<String>> {
    let mut parts = vec![None; n];
    for &v in vs.iter().filter(|&&v| v < n) {
        parts[v] = Some("T".to_string());
    }
    parts
}

fn certificate_parts(n: usize, c: &Certificate) -> Vec<Option<String>> {
    let mut parts = vec![None; n];
    let mut put = |name: String, s: &crate::graph::VertexSet| {
        for v in s.iter().filter(|&v| v < n) {
            parts[v] = Some(name.clone());
        }
    };
    match c {
        Certificate::Square(s) => {
            for i in 0..4 {
                put(format!("A{i}"), &s.a[i]);
                put(format!("S{i}"), &s.s[i]);
            }
            put("R".into(), &s.r);
        }
        Certificate::Cubic(s) => {
            for i in 0..4 {
                put(format!("A{i}"), &s.a[i]);
                put(format!("B{i}"), &s.b[i]);
            }
            for i in 0..8 {
                put(format!("S{i}"), &s.s[i]);
            }
            put("R".into(), &s.r);
        }
        Certificate::Disconnected { component, .. } => put("C".into(), component),
    }
    parts
}

fn colour(part: &str) -> &'static str {
    match part.chars().next() {
        Some('A') => "lightblue",
        Some('B') => "khaki",
        Some('S') => match part[1..].parse::<usize>() {
            Ok(k) if k >= 4 => "salmon",
            _ => "palegreen",
        },
        Some('R') => "lightgrey",
        _ => "orange",
    }
}

/// DOT text; vertices carry their file label and part name.
pub fn to_dot(g: &Graph, parts: &[Option<String>], file: &GraphFile) -> String {
    let mut out = String::from("graph G {\n  node [style=filled, fillcolor=white];\n");
    for v in 0..g.n() {
        let name = file.labels.get(&v).cloned().unwrap_or_else(|| v.to_string());
        match parts.get(v).and_then(|p| p.as_deref()) {
            Some(p) => out.push_str(&format!("  {v} [label=\"{name}\\n{p}\", fillcolor={}];\n", colour(p))),
            None => out.push_str(&format!("  {v} [label=\"{name}\"];\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
