//! One PASS/FAIL line per criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use fourtree::cli::{bench, fit_exponent, fuzz_case};
use fourtree::cubic::{augment_cubic, validate_cubic, CubicOutcome};
use fourtree::generators::{
    all_graphs, gen_cubic_structure, gen_square_structure, random_cubic_sizes, random_square_sizes, rng,
};
use fourtree::graph::is_induced_tree;
use fourtree::oracle::brute_force_tree;
use fourtree::reduction::check_reduction;
use fourtree::solver::{attach_terminals, initial_phase, Initial, Terminals};
use fourtree::square::{augment_square, validate_square, SquareOutcome};
use fourtree::{four_in_a_tree_with, tree_covering_three, Answer, GadgetMode, Graph, SolveOptions, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn dichotomy() -> Outcome {
    const SEEDS: u64 = 10_000;
    let t0 = Instant::now();
    let opts = SolveOptions { gadget: GadgetMode::Always, check_steps: false };
    let stats: Vec<Result<bool, String>> = (0..SEEDS)
        .into_par_iter()
        .map(|seed| {
            let case = fuzz_case(seed, 5, 12);
            let (g, y) = (&case.graph, case.y);
            let res = four_in_a_tree_with(g, y, opts).map_err(|e| format!("seed {seed}: {e}"))?;
            let oracle = brute_force_tree(g, &y, None).map_err(|e| format!("seed {seed}: {e}"))?;
            match (&res.answer, &oracle) {
                (Answer::Tree(t), Some(_)) if t.is_valid(g) && y.iter().all(|&v| t.vertices.contains(v)) => Ok(true),
                (Answer::Tree(_), Some(_)) => Err(format!("seed {seed}: invalid tree")),
                (Answer::NoTree(c), None) => {
                    let bad = c.validate(res.working_graph(g));
                    if bad.is_empty() {
                        Ok(false)
                    } else {
                        Err(format!("seed {seed}: certificate fails: {}", bad[0]))
                    }
                }
                _ => Err(format!("seed {seed}: solver says tree = {}, oracle disagrees", res.has_tree())),
            }
        })
        .collect();
    let trees = stats.iter().filter(|r| matches!(r, Ok(true))).count();
    if let Some(Err(e)) = stats.iter().find(|r| r.is_err()) {
        return Err(e.clone());
    }
    let secs = t0.elapsed().as_secs_f64();
    if secs > 300.0 {
        return Err(format!("took {secs:.1} s"));
    }
    Ok(format!("{SEEDS} graphs, {trees} trees, {} certificates", SEEDS as usize - trees))
}

fn exclusivity() -> Outcome {
    const SEEDS: u64 = 1000;
    let square: Result<Vec<()>, String> = (0..SEEDS)
        .into_par_iter()
        .map(|seed| {
            let total = rng(seed).gen_range(8..=14);
            let (g, t, split) = gen_square_structure(random_square_sizes(total, seed), 0.4, seed)
                .map_err(|e| format!("square {seed}: {e}"))?;
            if !validate_square(&g, &split, &g.full_set()).is_empty() {
                return Err(format!("square {seed}: generated split is invalid"));
            }
            match brute_force_tree(&g, &t.x, None).map_err(|e| e.to_string())? {
                Some(tree) => Err(format!("square {seed}: covering tree {:?}", tree.to_vec())),
                None => Ok(()),
            }
        })
        .collect();
    square?;
    let cubic: Result<Vec<()>, String> = (0..SEEDS)
        .into_par_iter()
        .map(|seed| {
            let total = rng(seed).gen_range(12..=14);
            let (g, t, split) = gen_cubic_structure(random_cubic_sizes(total, seed), 0.4, seed)
                .map_err(|e| format!("cubic {seed}: {e}"))?;
            if !validate_cubic(&g, &split, &g.full_set()).is_empty() {
                return Err(format!("cubic {seed}: generated split is invalid"));
            }
            match brute_force_tree(&g, &t.x, None).map_err(|e| e.to_string())? {
                Some(tree) => Err(format!("cubic {seed}: covering tree {:?}", tree.to_vec())),
                None => Ok(()),
            }
        })
        .collect();
    cubic?;
    Ok(format!("{SEEDS} square and {SEEDS} cubic structures, no covering tree"))
}

/// `g` plus one vertex adjacent to a random stable set avoiding the terminals.
fn add_fresh(g: &Graph, terminals: &[usize; 4], seed: u64) -> Graph {
    let mut r = rng(seed ^ 0x5eed);
    let mut order: Vec<usize> = (0..g.n()).filter(|v| !terminals.contains(v)).collect();
    order.shuffle(&mut r);
    let want = r.gen_range(0..=order.len().min(6));
    let mut nb: Vec<usize> = Vec::new();
    for u in order {
        if nb.len() == want {
            break;
        }
        if nb.iter().all(|&w| !g.has_edge(u, w)) {
            nb.push(u);
        }
    }
    let edges: Vec<_> = nb.iter().map(|&u| (u, g.n())).collect();
    g.extended(1, &edges).expect("fresh vertex")
}

fn grown(domain: &VertexSet, v: usize) -> VertexSet {
    let mut d = domain.clone();
    d.insert(v);
    d
}

fn augmentation() -> Outcome {
    const TRIALS: u64 = 5000;
    let kinds: Result<Vec<&'static str>, String> = (0..TRIALS)
        .into_par_iter()
        .flat_map_iter(|seed| [(seed, true), (seed, false)])
        .map(|(seed, sq)| {
            let total = rng(seed).gen_range(if sq { 8..=16 } else { 12..=20 });
            if sq {
                let (g, t, split) =
                    gen_square_structure(random_square_sizes(total, seed), 0.4, seed).map_err(|e| e.to_string())?;
                let h = add_fresh(&g, &t.x, seed);
                let (dom, v) = (split.domain(), g.n());
                let (out, _) = augment_square(&h, &split, &dom, v).map_err(|e| format!("square {seed}: {e}"))?;
                let ok = match &out {
                    SquareOutcome::FoundTree(tree) => tree.is_valid(&h),
                    SquareOutcome::GrewSquare(s, d) => validate_square(&h, s, d).is_empty() && *d == grown(&dom, v),
                    SquareOutcome::BecameCubic(c, d) => {
                        validate_cubic(&h, c, d).is_empty() && d.is_subset(&grown(&dom, v))
                    }
                };
                if !ok {
                    return Err(format!("square {seed}: outcome does not validate"));
                }
                Ok(match out {
                    SquareOutcome::FoundTree(_) => "tree",
                    SquareOutcome::GrewSquare(..) => "square",
                    SquareOutcome::BecameCubic(..) => "cubic",
                })
            } else {
                let (g, t, split) =
                    gen_cubic_structure(random_cubic_sizes(total, seed), 0.4, seed).map_err(|e| e.to_string())?;
                let h = add_fresh(&g, &t.x, seed);
                let (dom, v) = (split.domain(), g.n());
                let (out, _) = augment_cubic(&h, &split, &dom, v).map_err(|e| format!("cubic {seed}: {e}"))?;
                let ok = match &out {
                    CubicOutcome::FoundTree(tree) => tree.is_valid(&h),
                    CubicOutcome::GrewCubic(c, d) => validate_cubic(&h, c, d).is_empty() && *d == grown(&dom, v),
                };
                if !ok {
                    return Err(format!("cubic {seed}: outcome does not validate"));
                }
                Ok(match out {
                    CubicOutcome::FoundTree(_) => "tree",
                    CubicOutcome::GrewCubic(..) => "cubic",
                })
            }
        })
        .collect();
    let kinds = kinds?;
    let count = |k| kinds.iter().filter(|&&x| x == k).count();
    Ok(format!(
        "{} trials: {} trees, {} grown squares, {} cubic splits",
        kinds.len(),
        count("tree"),
        count("square"),
        count("cubic")
    ))
}

fn same_set(mut a: [usize; 4], mut b: [usize; 4]) -> bool {
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn check_initial(g: &Graph, t: &Terminals) -> Result<(), String> {
    match initial_phase(g, t).map_err(|e| format!("{e} on {:?} with {:?}", g.edge_list(), t.x))? {
        Initial::Tree(tree) if tree.is_valid(g) && t.x.iter().all(|&x| tree.vertices.contains(x)) => Ok(()),
        Initial::Square(s) if validate_square(g, &s, &s.domain()).is_empty() && same_set(s.terminals, t.x) => Ok(()),
        _ => Err(format!("bad outcome on {:?} with {:?}", g.edge_list(), t.x)),
    }
}

fn first_step() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=8 {
        graphs.extend(all_graphs(n, true).map_err(|e| e.to_string())?);
    }
    let counts: Result<Vec<(usize, usize)>, String> = graphs
        .par_iter()
        .map(|g| {
            let n = g.n();
            let mut native = 0;
            let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
            for &a in &leaves {
                for &b in &leaves {
                    for &c in &leaves {
                        for &d in &leaves {
                            let x = [a, b, c, d];
                            if (0..4).any(|i| x[..i].contains(&x[i])) {
                                continue;
                            }
                            check_initial(g, &Terminals { x, gadget: None })?;
                            native += 1;
                        }
                    }
                }
            }
            let mut gadgeted = 0;
            for code in 0..n.pow(4) {
                let y = [code % n, code / n % n, code / (n * n) % n, code / (n * n * n)];
                let (h, t) = attach_terminals(g, y).map_err(|e| e.to_string())?;
                check_initial(&h, &t)?;
                gadgeted += 1;
            }
            Ok((native, gadgeted))
        })
        .collect();
    let counts = counts?;
    let native: usize = counts.iter().map(|c| c.0).sum();
    let gadgeted: usize = counts.iter().map(|c| c.1).sum();
    Ok(format!("{} graphs, {native} native and {gadgeted} gadgeted placements", graphs.len()))
}

fn reduction() -> Outcome {
    let mut pairs = 0;
    let mut graphs = 0;
    for n in 1..=7 {
        for g in all_graphs(n, false).map_err(|e| e.to_string())? {
            graphs += 1;
            for x in 0..n {
                for y in x + 1..n {
                    if g.degree(x) != 2 || g.degree(y) != 2 || g.has_edge(x, y) {
                        continue;
                    }
                    pairs += 1;
                    if !check_reduction(&g, x, y).map_err(|e| e.to_string())? {
                        return Err(format!("mismatch on {:?} with ({x}, {y})", g.edge_list()));
                    }
                }
            }
        }
    }
    Ok(format!("{graphs} graphs, {pairs} pairs"))
}

fn minimality() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=9 {
        graphs.extend(all_graphs(n, true).map_err(|e| e.to_string())?);
    }
    let triples: Result<Vec<usize>, String> = graphs
        .par_iter()
        .map(|g| {
            let n = g.n();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        let t = tree_covering_three(g, a, b, c).map_err(|e| e.to_string())?;
                        if !t.is_valid(g) {
                            return Err(format!("invalid tree on {:?} for ({a}, {b}, {c})", g.edge_list()));
                        }
                        for v in t.vertices.iter() {
                            let mut smaller = t.vertices.clone();
                            smaller.remove(v);
                            let covers = [a, b, c].iter().all(|&q| smaller.contains(q));
                            if covers && !smaller.is_empty() && is_induced_tree(g, &smaller).unwrap_or(false) {
                                return Err(format!("{v} is removable on {:?} for ({a}, {b}, {c})", g.edge_list()));
                            }
                        }
                        k += 1;
                    }
                }
            }
            Ok(k)
        })
        .collect();
    Ok(format!("{} graphs, {} triples", graphs.len(), triples?.iter().sum::<usize>()))
}

fn scaling() -> Outcome {
    let rows = bench(&[1000, 2000, 4000], 4, 1, 5).map_err(|e| e.to_string())?;
    let table: Vec<String> = rows.iter().map(|r| format!("n={} m={} {:.2} ms", r.n, r.m, r.seconds * 1e3)).collect();
    if let Some(r) = rows.iter().find(|r| r.seconds >= 30.0) {
        return Err(format!("n = {} took {:.1} s", r.n, r.seconds));
    }
    let e = fit_exponent(&rows).ok_or("no fit")?;
    let msg = format!("exponent {e:.3} ({})", table.join(", "));
    if e <= 1.3 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("solver agrees with the oracle", dichotomy),
        ("structures admit no covering tree", exclusivity),
        ("augmentation outcomes validate", augmentation),
        ("first step on all small graphs", first_step),
        ("centered reduction on all small graphs", reduction),
        ("three-vertex trees are inclusion-minimal", minimality),
        ("scaling against n*m", scaling),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let out = run();
        let secs = t0.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("PASS {} {name}: {msg} [{secs:.1} s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{secs:.1} s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
