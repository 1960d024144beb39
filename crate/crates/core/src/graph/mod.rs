//! Simple undirected graphs and the induced-subgraph predicates every other
//! module leans on.
//!
//! Adjacency lists are kept sorted so that every traversal visits vertices in
//! increasing id order. All solver output is therefore reproducible.

mod format;

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use format::{parse_graph_text, write_graph_text, GraphFile};

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range ids and repeated edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Same as [`Graph::new`] but silently drops duplicate edges.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut es: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        es.sort_unstable();
        es.dedup();
        Graph::new(n, &es)
    }

    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Graph with `extra` isolated vertices appended and `new_edges` added.
    pub fn extended(&self, extra: usize, new_edges: &[(usize, usize)]) -> Result<Graph> {
        let mut es = self.edge_list();
        es.extend_from_slice(new_edges);
        Graph::new(self.n() + extra, &es)
    }

    pub fn full_set(&self) -> VertexSet {
        let mut s = VertexSet::new(self.n());
        s.bits.insert_range(..);
        s
    }

    /// Vertices reachable from `v` inside `allowed` (v itself always included).
    pub fn component_within(&self, v: usize, allowed: Option<&VertexSet>) -> VertexSet {
        let mut seen = VertexSet::new(self.n());
        seen.insert(v);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if allowed.is_some_and(|a| !a.contains(y)) || seen.contains(y) {
                    continue;
                }
                seen.insert(y);
                queue.push_back(y);
            }
        }
        seen
    }

    pub fn component(&self, v: usize) -> VertexSet {
        self.component_within(v, None)
    }

    /// Component id per vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut next = 0;
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            for v in self.component(s).iter() {
                comp[v] = next;
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.component(0).len() == self.n()
    }

    /// Subgraph induced by `z`, with vertices renumbered in increasing order.
    /// Returns the graph and the map from new id to old id.
    pub fn induced(&self, z: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = z.iter().collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let adj: Vec<Vec<usize>> = old
            .iter()
            .map(|&v| self.neighbors(v).iter().filter(|&&u| z.contains(u)).map(|&u| new_id[u]).collect())
            .collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        (Graph { adj, m }, old)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { v, n: self.n() });
        }
        Ok(())
    }
}

/// A set of vertices of a graph on `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet {
    pub fn new(universe: usize) -> VertexSet {
        VertexSet { bits: FixedBitSet::with_capacity(universe) }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> VertexSet {
        let mut s = VertexSet::new(universe);
        for v in items {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    /// Inserts `v`, growing the universe if needed.
    pub fn insert(&mut self, v: usize) {
        if v >= self.bits.len() {
            self.bits.grow(v + 1);
        }
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.bits.len() {
            self.bits.set(v, false);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.universe() > self.universe() {
            self.bits.grow(other.universe());
        }
        self.bits.union_with(&other.bits);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

/// An induced path, stored from one end to the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Path {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.0[0], *self.0.last().expect("path is never empty"))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True if consecutive vertices are adjacent, no vertex repeats and there
    /// is no chord.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let vs = &self.0;
        if vs.is_empty() {
            return false;
        }
        let set = VertexSet::from_iter(g.n(), vs.iter().copied());
        if set.len() != vs.len() {
            return false;
        }
        let pos: std::collections::HashMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for (i, &v) in vs.iter().enumerate() {
            for &u in g.neighbors(v) {
                if let Some(&j) = pos.get(&u) {
                    if j.abs_diff(i) != 1 {
                        return false;
                    }
                }
            }
            if i + 1 < vs.len() && !g.has_edge(v, vs[i + 1]) {
                return false;
            }
        }
        true
    }
}

/// Lexicographically smallest triangle, if any.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for a in 0..g.n() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            let (na, nb) = (g.neighbors(a), g.neighbors(b));
            let (mut i, mut j) = (0, 0);
            while i < na.len() && j < nb.len() {
                match na[i].cmp(&nb[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        if na[i] > b {
                            return Some([a, b, na[i]]);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    None
}

/// Triangle through `v` inside `within` (or the whole graph), if any.
pub fn triangle_at(g: &Graph, v: usize, within: Option<&VertexSet>) -> Option<[usize; 3]> {
    let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| within.is_none_or(|w| w.contains(u))).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if g.has_edge(a, b) {
                let mut t = [v, a, b];
                t.sort_unstable();
                return Some(t);
            }
        }
    }
    None
}

/// Number of edges of `G[z]`.
pub fn induced_edge_count(g: &Graph, z: &VertexSet) -> usize {
    z.iter().map(|v| g.neighbors(v).iter().filter(|&&u| z.contains(u)).count()).sum::<usize>() / 2
}

/// True iff `G[z]` is connected (empty sets count as connected).
pub fn is_connected_within(g: &Graph, z: &VertexSet) -> bool {
    match z.first() {
        None => true,
        Some(s) => g.component_within(s, Some(z)).len() == z.len(),
    }
}

/// True iff `G[z]` is a tree.
pub fn is_induced_tree(g: &Graph, z: &VertexSet) -> Result<bool> {
    if z.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(v) = z.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    Ok(induced_edge_count(g, z) + 1 == z.len() && is_connected_within(g, z))
}

/// Shortest path from `source` to the first reachable vertex of `targets`,
/// with every interior vertex in `allowed \ targets`. Neighbors are expanded
/// in increasing id order.
pub fn bfs_path(g: &Graph, source: usize, targets: &VertexSet, allowed: &VertexSet) -> Result<Option<Path>> {
    g.check_vertex(source)?;
    if !allowed.contains(source) {
        return Err(Error::Precondition(format!("source {source} is not in the allowed set")));
    }
    Ok(bfs_path_by(g, source, |v| targets.contains(v), |v| allowed.contains(v)))
}

/// Predicate form of [`bfs_path`], used by the structure engines.
pub(crate) fn bfs_path_by(
    g: &Graph,
    source: usize,
    is_target: impl Fn(usize) -> bool,
    is_allowed: impl Fn(usize) -> bool,
) -> Option<Path> {
    if is_target(source) {
        return Some(Path::new(vec![source]));
    }
    let mut parent = vec![usize::MAX; g.n()];
    parent[source] = source;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if parent[y] != usize::MAX {
                continue;
            }
            if is_target(y) {
                parent[y] = x;
                return Some(trace_back(&parent, source, y));
            }
            if is_allowed(y) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

pub(crate) fn trace_back(parent: &[usize], source: usize, end: usize) -> Path {
    let mut path = vec![end];
    let mut cur = end;
    while cur != source {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Path::new(path)
}

fn check_disjoint(x: &VertexSet, y: &VertexSet) -> Result<()> {
    match x.iter().find(|&v| y.contains(v)) {
        Some(v) => Err(Error::Overlap(v)),
        None => Ok(()),
    }
}

/// Every vertex of `x` is adjacent to every vertex of `y`.
pub fn is_complete_to(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<bool> {
    check_disjoint(x, y)?;
    Ok(x.iter().all(|a| y.iter().all(|b| g.has_edge(a, b))))
}

/// No vertex of `x` is adjacent to a vertex of `y`.
pub fn is_anticomplete_to(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<bool> {
    check_disjoint(x, y)?;
    Ok(x.iter().all(|a| g.neighbors(a).iter().all(|&b| !y.contains(b))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let es: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &es).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    #[test]
    fn build_rejects_malformed_input() {
        assert!(matches!(Graph::new(3, &[(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(Graph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange { v: 2, n: 2 })));
        assert!(matches!(Graph::new(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1))));
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.neighbors(0), &[1, 3]);
        assert_eq!(c4.m(), 4);
    }

    #[test]
    fn triangles() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(find_triangle(&k3), Some([0, 1, 2]));
        assert_eq!(find_triangle(&cycle(4)), None);
        assert_eq!(find_triangle(&cycle(5)), None);
        // two triangles, smallest one reported
        let g = Graph::new(5, &[(2, 3), (3, 4), (2, 4), (0, 3), (0, 4)]).unwrap();
        assert_eq!(find_triangle(&g), Some([0, 3, 4]));
        assert_eq!(triangle_at(&g, 2, None), Some([2, 3, 4]));
    }

    #[test]
    fn induced_tree_predicate() {
        let c4 = cycle(4);
        assert!(is_induced_tree(&c4, &set(4, &[0, 1, 2])).unwrap());
        assert!(!is_induced_tree(&c4, &set(4, &[0, 1, 2, 3])).unwrap());
        assert!(!is_induced_tree(&c4, &set(4, &[0, 2])).unwrap());
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(is_induced_tree(&k2, &set(2, &[0, 1])).unwrap());
        assert!(matches!(is_induced_tree(&k2, &VertexSet::new(2)), Err(Error::EmptySet)));
    }

    #[test]
    fn bfs_paths() {
        let c4 = cycle(4);
        let p = bfs_path(&c4, 0, &set(4, &[2]), &c4.full_set()).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2]);
        assert!(p.is_induced_in(&c4));

        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let p = bfs_path(&p3, 0, &set(3, &[0]), &p3.full_set()).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0]);

        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_path(&two, 0, &set(4, &[3]), &two.full_set()).unwrap(), None);
        assert!(bfs_path(&two, 0, &set(4, &[3]), &set(4, &[1])).is_err());
    }

    #[test]
    fn complete_and_anticomplete() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(is_complete_to(&k2, &set(2, &[0]), &set(2, &[1])).unwrap());
        let c4 = cycle(4);
        assert!(is_anticomplete_to(&c4, &set(4, &[0]), &set(4, &[2])).unwrap());
        let empty = VertexSet::new(4);
        assert!(is_complete_to(&c4, &empty, &set(4, &[1])).unwrap());
        assert!(is_anticomplete_to(&c4, &empty, &set(4, &[1])).unwrap());
        assert!(matches!(is_complete_to(&c4, &set(4, &[1]), &set(4, &[1, 2])), Err(Error::Overlap(1))));
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let c4 = cycle(4);
        let (h, map) = c4.induced(&set(4, &[1, 2, 3]));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.edge_list(), vec![(0, 1), (1, 2)]);
    }
}
