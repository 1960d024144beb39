//! Seeded instance factories: random triangle-free graphs, random square
//! and cubic structures, and exhaustive lists of small connected graphs.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cubic::{validate_cubic, CubicSplit};
use crate::error::{Error, Result};
use crate::graph::{find_triangle, Graph, VertexSet};
use crate::solver::Terminals;
use crate::square::{validate_square, SquareSplit};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with triangles broken: while a triangle remains, the first edge
/// of the lexicographically smallest one is deleted.
pub fn gen_triangle_free(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    let mut g = Graph::new(n, &edges).expect("sampled edges are simple");
    while let Some([a, b, _]) = find_triangle(&g) {
        edges.retain(|&e| e != (a, b));
        g = Graph::new(n, &edges).expect("simple");
    }
    g
}

/// Random bipartite graph with parts of sizes `n / 2` and `n - n / 2` and
/// `m` distinct edges (fewer if the parts cannot hold `m`).
pub fn gen_bipartite(n: usize, m: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let left = n / 2;
    let right = n - left;
    let m = m.min(left * right);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = r.gen_range(0..left);
        let v = left + r.gen_range(0..right);
        if seen.insert((u, v)) {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("distinct edges")
}

/// Joins the smallest vertices of consecutive components by an edge. A
/// bridge creates no cycle, so triangle-freeness survives.
pub fn connect_components(g: &Graph) -> Graph {
    let comp = g.components();
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    for (v, &c) in comp.iter().enumerate() {
        first.entry(c).or_insert(v);
    }
    let mut reps: Vec<usize> = first.values().copied().collect();
    reps.sort_unstable();
    let extra: Vec<(usize, usize)> = reps.windows(2).map(|w| (w[0], w[1])).collect();
    g.extended(0, &extra).expect("bridges between components are new edges")
}

/// The same graph under a random permutation; returns the graph and
/// `perm[old] = new`.
pub fn relabel_random(g: &Graph, seed: u64) -> (Graph, Vec<usize>) {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng(seed));
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    (Graph::new(g.n(), &edges).expect("relabeling keeps the graph simple"), perm)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareSizes {
    pub a: [usize; 4],
    pub s: [usize; 4],
    pub r: usize,
}

impl SquareSizes {
    pub fn singletons() -> SquareSizes {
        SquareSizes { a: [1; 4], s: [1; 4], r: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubicSizes {
    pub a: [usize; 4],
    pub b: [usize; 4],
    pub s: [usize; 8],
    pub r: usize,
}

impl CubicSizes {
    pub fn singletons() -> CubicSizes {
        CubicSizes { a: [1; 4], b: [0; 4], s: [1; 8], r: 0 }
    }
}

/// Edge accumulator with contiguous vertex blocks.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    r: ChaCha8Rng,
}

impl Builder {
    fn block(&mut self, size: usize) -> Vec<usize> {
        let b: Vec<usize> = (self.n..self.n + size).collect();
        self.n += size;
        b
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u.min(v), u.max(v)));
    }

    /// A random connected bipartite graph on `block` with `block[0]` as a
    /// leaf. Returns the colour class that may receive outside neighbors:
    /// a random class of the rest, never containing the leaf.
    fn column(&mut self, block: &[usize], inner_p: f64) -> Vec<usize> {
        let rest = &block[1..];
        if rest.is_empty() {
            return vec![block[0]];
        }
        let mut colour = vec![false; rest.len()];
        for j in 1..rest.len() {
            let p = self.r.gen_range(0..j);
            colour[j] = !colour[p];
            self.edge(rest[j], rest[p]);
        }
        let mut tree: HashSet<(usize, usize)> = self.edges.iter().copied().collect();
        for i in 0..rest.len() {
            for j in i + 1..rest.len() {
                let e = (rest[i], rest[j]);
                if colour[i] != colour[j] && !tree.contains(&e) && self.r.gen_bool(inner_p.clamp(0.0, 1.0)) {
                    tree.insert(e);
                    self.edge(rest[i], rest[j]);
                }
            }
        }
        let leaf_at = self.r.gen_range(0..rest.len());
        self.edge(block[0], rest[leaf_at]);
        let side = self.r.gen_bool(0.5);
        let class: Vec<usize> = (0..rest.len()).filter(|&j| colour[j] == side).map(|j| rest[j]).collect();
        if class.is_empty() {
            (0..rest.len()).filter(|&j| colour[j] != side).map(|j| rest[j]).collect()
        } else {
            class
        }
    }

    /// Nonempty random subset of `pool`.
    fn some_of(&mut self, pool: &[usize]) -> Vec<usize> {
        loop {
            let pick: Vec<usize> = pool.iter().copied().filter(|_| self.r.gen_bool(0.5)).collect();
            if !pick.is_empty() || pool.is_empty() {
                return pick;
            }
        }
    }

    /// `R` vertices: each is attached to a random subset of one of `sides`
    /// (stable sets), or is free and hangs only on attached `R` vertices.
    fn r_part(&mut self, r: &[usize], sides: &[Vec<usize>]) {
        let mut attached = Vec::new();
        let mut free = Vec::new();
        for &v in r {
            let side = &sides[self.r.gen_range(0..sides.len())];
            if side.is_empty() || self.r.gen_bool(0.3) {
                free.push(v);
            } else {
                attached.push(v);
                for u in self.some_of(side) {
                    self.edge(v, u);
                }
            }
        }
        for &f in &free {
            for &a in &attached {
                if self.r.gen_bool(0.5) {
                    self.edge(f, a);
                }
            }
        }
    }

    fn finish(self) -> Result<Graph> {
        Graph::from_edges_dedup(self.n, &self.edges)
    }
}

fn set(n: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_iter(n, vs.iter().copied())
}

fn check_columns(a: &[usize; 4], s: &[usize]) -> Result<()> {
    for i in 0..4 {
        if a[i] == 0 || s[i] == 0 {
            return Err(Error::Infeasible(format!("A{i} and S{i} must be nonempty")));
        }
        if a[i] == 1 && s[i] > 1 {
            return Err(Error::Infeasible(format!(
                "A{i} = {{x{i}}} forces |S{i}| = 1 since the terminal has degree one"
            )));
        }
    }
    Ok(())
}

/// A random square structure. Vertices are numbered block by block:
/// `A1..A4` (terminal first), `S1..S4`, `R`.
pub fn gen_square_structure(sizes: SquareSizes, inner_p: f64, seed: u64) -> Result<(Graph, Terminals, SquareSplit)> {
    check_columns(&sizes.a, &sizes.s)?;
    let mut b = Builder { n: 0, edges: Vec::new(), r: rng(seed) };
    let a: Vec<Vec<usize>> = sizes.a.iter().map(|&k| b.block(k)).collect();
    let s: Vec<Vec<usize>> = sizes.s.iter().map(|&k| b.block(k)).collect();
    let r = b.block(sizes.r);
    for i in 0..4 {
        let class = b.column(&a[i], inner_p);
        for &v in &s[i] {
            let pick = if a[i].len() == 1 { class.clone() } else { b.some_of(&class) };
            for u in pick {
                b.edge(v, u);
            }
        }
        for &u in &s[i] {
            for &w in &s[(i + 1) % 4] {
                b.edge(u, w);
            }
        }
    }
    let sides = [[&s[0][..], &s[2][..]].concat(), [&s[1][..], &s[3][..]].concat()];
    b.r_part(&r, &sides);
    let n = b.n;
    let g = b.finish()?;
    let terminals = [a[0][0], a[1][0], a[2][0], a[3][0]];
    let split = SquareSplit {
        a: std::array::from_fn(|i| set(n, &a[i])),
        s: std::array::from_fn(|i| set(n, &s[i])),
        r: set(n, &r),
        terminals,
    };
    let bad = validate_square(&g, &split, &g.full_set());
    if !bad.is_empty() || find_triangle(&g).is_some() {
        return Err(Error::Internal(format!("generated square structure is invalid: {bad:?}")));
    }
    Ok((g, Terminals { x: terminals, gadget: None }, split))
}

/// A random cubic structure. Blocks: `A1..A4`, `B1..B4`, `S1..S8`, `R`.
pub fn gen_cubic_structure(sizes: CubicSizes, inner_p: f64, seed: u64) -> Result<(Graph, Terminals, CubicSplit)> {
    check_columns(&sizes.a, &sizes.s[..4])?;
    if sizes.s[4..].iter().filter(|&&k| k == 0).count() > 1 {
        return Err(Error::Infeasible("at most one of S5..S8 may be empty".into()));
    }
    let mut b = Builder { n: 0, edges: Vec::new(), r: rng(seed) };
    let a: Vec<Vec<usize>> = sizes.a.iter().map(|&k| b.block(k)).collect();
    let bb: Vec<Vec<usize>> = sizes.b.iter().map(|&k| b.block(k)).collect();
    let s: Vec<Vec<usize>> = sizes.s.iter().map(|&k| b.block(k)).collect();
    let r = b.block(sizes.r);
    for i in 0..4 {
        let class = b.column(&a[i], inner_p);
        for &v in &s[i] {
            let pick = if a[i].len() == 1 { class.clone() } else { b.some_of(&class) };
            for u in pick {
                b.edge(v, u);
            }
        }
        for j in (0..4).filter(|&j| j != i) {
            for &u in &s[i] {
                for &w in &s[j + 4] {
                    b.edge(u, w);
                }
            }
        }
    }
    for i in 0..4 {
        let my_tops: Vec<usize> = (0..4).filter(|&j| j != i).flat_map(|j| s[j + 4].clone()).collect();
        let mut low = Vec::new();
        let mut high = Vec::new();
        for &v in &bb[i] {
            if b.r.gen_bool(0.5) {
                low.push(v);
                for u in b.some_of(&s[i]) {
                    b.edge(v, u);
                }
            } else {
                high.push(v);
                if b.r.gen_bool(0.8) {
                    for u in b.some_of(&my_tops) {
                        b.edge(v, u);
                    }
                }
            }
        }
        for &u in &low {
            for &w in &high {
                if b.r.gen_bool(0.4) {
                    b.edge(u, w);
                }
            }
        }
    }
    let tops: Vec<usize> = s[4..].concat();
    b.r_part(&r, &[tops]);
    let n = b.n;
    let g = b.finish()?;
    let terminals = [a[0][0], a[1][0], a[2][0], a[3][0]];
    let split = CubicSplit {
        a: std::array::from_fn(|i| set(n, &a[i])),
        b: std::array::from_fn(|i| set(n, &bb[i])),
        s: std::array::from_fn(|i| set(n, &s[i])),
        r: set(n, &r),
        terminals,
    };
    let bad = validate_cubic(&g, &split, &g.full_set());
    if !bad.is_empty() || find_triangle(&g).is_some() {
        return Err(Error::Internal(format!("generated cubic structure is invalid: {bad:?}")));
    }
    Ok((g, Terminals { x: terminals, gadget: None }, split))
}

/// Random part sizes with `total` vertices in all, every size feasible.
pub fn random_square_sizes(total: usize, seed: u64) -> SquareSizes {
    let mut r = rng(seed);
    let mut sz = SquareSizes::singletons();
    for _ in 8.min(total)..total {
        match r.gen_range(0..3) {
            0 => sz.a[r.gen_range(0..4)] += 1,
            1 => sz.s[r.gen_range(0..4)] += 1,
            _ => sz.r += 1,
        }
    }
    for i in 0..4 {
        if sz.s[i] > 1 && sz.a[i] == 1 {
            sz.a[i] = 2;
        }
    }
    sz
}

pub fn random_cubic_sizes(total: usize, seed: u64) -> CubicSizes {
    let mut r = rng(seed);
    let mut sz = CubicSizes::singletons();
    if r.gen_bool(0.3) {
        sz.s[4 + r.gen_range(0..4)] = 0;
    }
    let base: usize = sz.a.iter().sum::<usize>() + sz.s.iter().sum::<usize>();
    for _ in base.min(total)..total {
        match r.gen_range(0..4) {
            0 => sz.a[r.gen_range(0..4)] += 1,
            1 => sz.b[r.gen_range(0..4)] += 1,
            2 => {
                let k = r.gen_range(0..8);
                if sz.s[k] > 0 {
                    sz.s[k] += 1;
                }
            }
            _ => sz.r += 1,
        }
    }
    for i in 0..4 {
        if sz.s[i] > 1 && sz.a[i] == 1 {
            sz.a[i] = 2;
        }
    }
    sz
}

/// All connected graphs on `n` vertices up to isomorphism (triangle-free
/// ones only if asked), by adding a vertex to each graph on `n - 1`.
pub fn all_graphs(n: usize, triangle_free: bool) -> Result<Vec<Graph>> {
    if n > 11 {
        return Err(Error::TooLarge { n, limit: 11 });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mut level: Vec<Vec<u16>> = vec![vec![0]];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for mask in 1u16..(1 << k) {
                if triangle_free && (0..k).any(|v| mask & (1 << v) != 0 && adj[v] & mask != 0) {
                    continue;
                }
                let mut h = adj.clone();
                for (v, row) in h.iter_mut().enumerate() {
                    if mask & (1 << v) != 0 {
                        *row |= 1 << k;
                    }
                }
                h.push(mask);
                let code = canonical_code(&h);
                if seen.insert(code) {
                    next.push((code, h));
                }
            }
        }
        next.sort_unstable_by_key(|x| x.0);
        level = next.into_iter().map(|x| x.1).collect();
    }
    Ok(level
        .iter()
        .map(|adj| {
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] & (1 << v) != 0).map(move |v| (u, v))).collect();
            Graph::new(n, &edges).expect("bitmask graph is simple")
        })
        .collect())
}

/// Isomorphism-invariant code: the smallest adjacency code over the leaves
/// of an individualization-refinement search.
fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    let cells = refine(adj, vec![(0..n).collect()]);
    let mut best = u64::MAX;
    search_leaves(adj, cells, &mut best);
    best
}

fn refine(adj: &[u16], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0u16, |m, &v| m | (1 << v))).collect();
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> =
                c.iter().map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search_leaves(adj: &[u16], cells: Vec<Vec<usize>>, best: &mut u64) {
    let Some(k) = cells.iter().position(|c| c.len() > 1) else {
        let n = adj.len();
        let mut label = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            label[c[0]] = i;
        }
        let mut code = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                if adj[u] & (1 << v) != 0 {
                    let (a, b) = (label[u].min(label[v]), label[u].max(label[v]));
                    code |= 1 << (b * (b - 1) / 2 + a);
                }
            }
        }
        *best = (*best).min(code);
        return;
    };
    for &v in &cells[k] {
        let mut c = cells.clone();
        let rest: Vec<usize> = c[k].iter().copied().filter(|&u| u != v).collect();
        c[k] = vec![v];
        c.insert(k + 1, rest);
        search_leaves(adj, refine(adj, c), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_free_samples() {
        assert_eq!(gen_triangle_free(6, 0.0, 1).m(), 0);
        assert_eq!(gen_triangle_free(3, 1.0, 1).m(), 2);
        for seed in 0..20 {
            let g = gen_triangle_free(12, 0.5, seed);
            assert!(find_triangle(&g).is_none());
            assert_eq!(g, gen_triangle_free(12, 0.5, seed));
        }
    }

    #[test]
    fn bipartite_and_connected() {
        let g = connect_components(&gen_bipartite(200, 300, 7));
        assert!(g.is_connected());
        assert!(find_triangle(&g).is_none());
    }

    #[test]
    fn structures() {
        let (g, _, _) = gen_square_structure(SquareSizes::singletons(), 0.3, 0).unwrap();
        assert_eq!((g.n(), g.m()), (8, 8));
        let (g, _, _) = gen_cubic_structure(CubicSizes::singletons(), 0.3, 0).unwrap();
        assert_eq!((g.n(), g.m()), (12, 16));
        let mut sz = SquareSizes::singletons();
        sz.s[0] = 2;
        assert!(matches!(gen_square_structure(sz, 0.3, 0), Err(Error::Infeasible(_))));
        sz.a[0] = 2;
        let (g, _, _) = gen_square_structure(sz, 0.3, 0).unwrap();
        assert_eq!(g.n(), 10);
        for seed in 0..200 {
            gen_square_structure(random_square_sizes(14, seed), 0.4, seed).unwrap();
            gen_cubic_structure(random_cubic_sizes(18, seed), 0.4, seed).unwrap();
        }
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| all_graphs(n, false).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        let tf: Vec<usize> = (1..=8).map(|n| all_graphs(n, true).unwrap().len()).collect();
        assert_eq!(tf, vec![1, 1, 1, 3, 6, 19, 59, 267]);
    }
}
