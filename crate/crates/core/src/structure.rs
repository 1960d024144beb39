//! Shared machinery for square and cubic splits: a per-vertex part table,
//! index symmetries, and shortest terminal paths through an `A` column.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexSet};
use crate::three_tree::InducedTree;

/// Which part of a split a vertex belongs to. `S(i)` for `i >= 4` are the
/// cubic "top" sets; `S(i + 4)` is the partner of `S(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Part {
    Out,
    A(u8),
    B(u8),
    S(u8),
    R,
}

impl Part {
    pub fn in_domain(self) -> bool {
        self != Part::Out
    }
}

/// Part table for every vertex of the graph, plus the terminals.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub part: Vec<Part>,
    pub terminals: [usize; 4],
}

impl Layout {
    pub fn domain(&self) -> VertexSet {
        let n = self.part.len();
        VertexSet::from_iter(n, (0..n).filter(|&v| self.part[v].in_domain()))
    }

    pub fn members(&self, p: Part) -> Vec<usize> {
        (0..self.part.len()).filter(|&v| self.part[v] == p).collect()
    }

    pub fn set_of(&self, p: Part) -> VertexSet {
        let n = self.part.len();
        VertexSet::from_iter(n, (0..n).filter(|&v| self.part[v] == p))
    }
}

/// A relabeling of the four columns. `perm[k]` is the actual column viewed
/// as logical column `k`; tops follow their bottoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Sym {
    pub perm: [usize; 4],
}

impl Sym {
    pub const ID: Sym = Sym { perm: [0, 1, 2, 3] };

    pub fn inverse(&self) -> [usize; 4] {
        let mut inv = [0; 4];
        for (k, &a) in self.perm.iter().enumerate() {
            inv[a] = k;
        }
        inv
    }

    /// Swap logical columns `i` and `j`.
    pub fn swap(&mut self, i: usize, j: usize) {
        self.perm.swap(i, j);
    }

    /// Rotate so that logical column 0 becomes what logical column `r` was.
    pub fn rotate(&mut self, r: usize) {
        let old = self.perm;
        for k in 0..4 {
            self.perm[k] = old[(k + r) % 4];
        }
    }

    #[cfg(test)]
    pub fn to_logical(&self, p: Part) -> Part {
        let inv = self.inverse();
        match p {
            Part::A(i) => Part::A(inv[i as usize] as u8),
            Part::B(i) => Part::B(inv[i as usize] as u8),
            Part::S(i) if i < 4 => Part::S(inv[i as usize] as u8),
            Part::S(i) => Part::S(inv[i as usize - 4] as u8 + 4),
            other => other,
        }
    }

    pub fn to_actual(&self, p: Part) -> Part {
        match p {
            Part::A(k) => Part::A(self.perm[k as usize] as u8),
            Part::B(k) => Part::B(self.perm[k as usize] as u8),
            Part::S(k) if k < 4 => Part::S(self.perm[k as usize] as u8),
            Part::S(k) => Part::S(self.perm[k as usize - 4] as u8 + 4),
            other => other,
        }
    }
}

/// A layout seen through a symmetry.
#[derive(Clone)]
pub(crate) struct View<'a> {
    pub g: &'a Graph,
    pub lay: &'a Layout,
    pub sym: Sym,
    inv: [usize; 4],
    count: [usize; 17],
}

/// Dense index of a part, `Out` excluded.
fn slot(p: Part) -> Option<usize> {
    match p {
        Part::A(i) => Some(i as usize),
        Part::B(i) => Some(4 + i as usize),
        Part::S(i) => Some(8 + i as usize),
        Part::R => Some(16),
        Part::Out => None,
    }
}

impl<'a> View<'a> {
    pub fn new(g: &'a Graph, lay: &'a Layout, sym: Sym) -> View<'a> {
        let mut count = [0; 17];
        for &p in &lay.part {
            if let Some(k) = slot(p) {
                count[k] += 1;
            }
        }
        View { g, lay, sym, inv: sym.inverse(), count }
    }

    pub fn set_sym(&mut self, sym: Sym) {
        self.sym = sym;
        self.inv = sym.inverse();
    }

    pub fn swap(&mut self, i: usize, j: usize) {
        let mut s = self.sym;
        s.swap(i, j);
        self.set_sym(s);
    }

    pub fn part(&self, v: usize) -> Part {
        match self.lay.part[v] {
            Part::A(i) => Part::A(self.inv[i as usize] as u8),
            Part::B(i) => Part::B(self.inv[i as usize] as u8),
            Part::S(i) if i < 4 => Part::S(self.inv[i as usize] as u8),
            Part::S(i) => Part::S(self.inv[i as usize - 4] as u8 + 4),
            other => other,
        }
    }

    pub fn terminal(&self, k: usize) -> usize {
        self.lay.terminals[self.sym.perm[k]]
    }

    pub fn is(&self, v: usize, p: Part) -> bool {
        self.part(v) == p
    }

    /// Neighbors of `v` in logical part `p`, increasing id.
    pub fn nbrs_in(&self, v: usize, p: Part) -> impl Iterator<Item = usize> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&u| self.part(u) == p)
    }

    pub fn touches(&self, v: usize, p: Part) -> bool {
        self.nbrs_in(v, p).next().is_some()
    }

    pub fn first_nbr(&self, v: usize, p: Part) -> Option<usize> {
        self.nbrs_in(v, p).next()
    }

    /// Smallest member of logical part `p`.
    pub fn min_of(&self, p: Part) -> Option<usize> {
        let actual = self.sym.to_actual(p);
        self.lay.part.iter().position(|&q| q == actual)
    }

    pub fn members(&self, p: Part) -> Vec<usize> {
        self.lay.members(self.sym.to_actual(p))
    }

    /// Size of logical part `p`.
    pub fn size(&self, p: Part) -> usize {
        slot(self.sym.to_actual(p)).map_or(0, |k| self.count[k])
    }

    pub fn is_complete_to_part(&self, v: usize, p: Part) -> bool {
        self.nbrs_in(v, p).count() == self.size(p)
    }

    /// Shortest path from `s` to the terminal of logical column `k` with
    /// interior in `A_k`; see [`column_path`].
    pub fn path(&self, k: usize, s: usize) -> Option<Path> {
        column_path(self.g, &self.lay.part, Part::A(self.sym.perm[k] as u8), self.terminal(k), s)
    }

    /// Length (vertex count) of [`View::path`].
    pub fn path_len(&self, k: usize, s: usize, cache: &mut ColumnDist) -> usize {
        let actual = self.sym.perm[k];
        cache.len_to(self.g, &self.lay.part, actual, self.lay.terminals[actual], s)
    }
}

/// Shortest path `s .. x` whose interior lies in the column part `a_part`,
/// choosing the smallest-id neighbor at each step.
pub(crate) fn column_path(g: &Graph, part: &[Part], a_part: Part, x: usize, s: usize) -> Option<Path> {
    let dist = column_distances(g, part, a_part, x);
    path_from_dist(g, &dist, x, s)
}

fn path_from_dist(g: &Graph, dist: &[u32], x: usize, s: usize) -> Option<Path> {
    let mut path = vec![s];
    let mut cur = s;
    if dist[s] == u32::MAX {
        let next = g.neighbors(s).iter().copied().filter(|&u| dist[u] != u32::MAX).min_by_key(|&u| (dist[u], u))?;
        path.push(next);
        cur = next;
    }
    while cur != x {
        let d = dist[cur];
        cur = *g.neighbors(cur).iter().find(|&&u| dist[u] != u32::MAX && dist[u] + 1 == d)?;
        path.push(cur);
    }
    Some(Path::new(path))
}

/// BFS distances from `x` inside `G[a_part]`; `u32::MAX` elsewhere.
pub(crate) fn column_distances(g: &Graph, part: &[Part], a_part: Part, x: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    if part[x] != a_part {
        return dist;
    }
    dist[x] = 0;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == u32::MAX && part[w] == a_part {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Lazily computed terminal distances per actual column, valid for one
/// augmentation step.
#[derive(Default)]
pub(crate) struct ColumnDist {
    dist: [Option<Vec<u32>>; 4],
}

impl ColumnDist {
    pub fn len_to(&mut self, g: &Graph, part: &[Part], col: usize, x: usize, s: usize) -> usize {
        let d = self.dist[col].get_or_insert_with(|| column_distances(g, part, Part::A(col as u8), x));
        if d[s] != u32::MAX {
            return d[s] as usize + 1;
        }
        g.neighbors(s).iter().filter(|&&u| d[u] != u32::MAX).map(|&u| d[u] as usize + 2).min().unwrap_or(usize::MAX)
    }
}

/// Fails with a triangle through `v` inside `domain ∪ {v}`, if there is one.
pub(crate) fn check_triangle_at(g: &Graph, part: &[Part], v: usize) -> Result<()> {
    let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| part[u].in_domain()).collect();
    let mark: HashSet<usize> = nb.iter().copied().collect();
    for &a in &nb {
        if let Some(&b) = g.neighbors(a).iter().find(|&&b| mark.contains(&b)) {
            let mut t = [v, a, b];
            t.sort_unstable();
            return Err(Error::Triangle(t));
        }
    }
    Ok(())
}

/// Checks that `t` induces a tree containing all terminals.
pub(crate) fn certify_tree(g: &Graph, t: VertexSet, terminals: &[usize; 4], what: &str) -> Result<VertexSet> {
    let tree = InducedTree::new(t, terminals);
    if tree.is_valid(g) {
        Ok(tree.vertices)
    } else {
        Err(Error::Internal(format!("{what}: constructed set {:?} is not a covering induced tree", tree.vertices)))
    }
}

pub(crate) fn trace_back_map(parent: &HashMap<usize, usize>, source: usize, end: usize) -> Vec<usize> {
    let mut path = vec![end];
    let mut cur = end;
    while cur != source {
        cur = parent[&cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Builds a tree from explicit pieces.
pub(crate) struct Pieces {
    pub set: VertexSet,
}

impl Pieces {
    pub fn new(n: usize) -> Pieces {
        Pieces { set: VertexSet::new(n) }
    }
    pub fn add(&mut self, vs: &[usize]) -> &mut Self {
        for &v in vs {
            self.set.insert(v);
        }
        self
    }
    pub fn path(&mut self, p: Option<Path>) -> Result<&mut Self> {
        let p = p.ok_or_else(|| Error::Internal("missing terminal path".into()))?;
        Ok(self.add(p.vertices()))
    }
    pub fn tree(&mut self, t: &InducedTree) -> &mut Self {
        for v in t.vertices.iter() {
            self.set.insert(v);
        }
        self
    }
}

/// The closest (shortest terminal path) neighbor of `x` among `parts`.
pub(crate) fn nearest(view: &View<'_>, x: usize, parts: &[Part], cache: &mut ColumnDist) -> Option<usize> {
    view.g.neighbors(x).iter().copied().filter(|&u| parts.contains(&view.part(u))).min_by_key(|&u| {
        let k = match view.part(u) {
            Part::A(k) | Part::S(k) => k as usize,
            _ => unreachable!(),
        };
        (view.path_len(k, u, cache), u)
    })
}

pub(crate) fn allowed_col(view: &View<'_>, k: usize, extra: &[usize]) -> VertexSet {
    let mut s = view.lay.set_of(view.sym.to_actual(Part::A(k as u8)));
    for &x in extra {
        s.insert(x);
    }
    s
}

pub(crate) fn min_s(view: &View<'_>, k: u8) -> Result<usize> {
    view.min_of(Part::S(k)).ok_or_else(|| Error::Internal(format!("logical S{k} is empty")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_round_trip() {
        let mut s = Sym::ID;
        s.rotate(1);
        s.swap(1, 3);
        for p in [Part::A(0), Part::A(3), Part::S(2), Part::S(5), Part::B(1), Part::R] {
            assert_eq!(s.to_logical(s.to_actual(p)), p);
        }
        let mut r = Sym::ID;
        r.rotate(2);
        assert_eq!(r.perm, [2, 3, 0, 1]);
    }

    #[test]
    fn column_path_prefers_shortest() {
        // s adjacent to a and b, A = path a-b, x pendant on b
        let g = Graph::new(4, &[(0, 1), (1, 2), (3, 0), (3, 1)]).unwrap();
        let part = vec![Part::A(0), Part::A(0), Part::A(0), Part::S(0)];
        let p = column_path(&g, &part, Part::A(0), 2, 3).unwrap();
        assert_eq!(p.vertices(), &[3, 1, 2]);
        let g2 = Graph::new(4, &[(0, 1), (1, 2), (3, 0)]).unwrap();
        let p = column_path(&g2, &part, Part::A(0), 2, 3).unwrap();
        assert_eq!(p.vertices(), &[3, 0, 1, 2]);
    }
}
