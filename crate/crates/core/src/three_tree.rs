//! Induced trees through three vertices of a triangle-free graph.
//!
//! The construction: a shortest `a`-`b` path `P`, then a BFS from `c`
//! through vertices with no neighbor on `P` until some `w` sees `P`. In a
//! triangle-free graph `w` sees one vertex of `P`, or two at distance two,
//! in which case `w` replaces the vertex between them. The union is then
//! pruned to an inclusion-minimal tree, and the result is checked.

use crate::error::{Error, Result};
use crate::graph::{bfs_path_by, find_triangle, is_induced_tree, Graph, Path, VertexSet};

/// A vertex set that induces a tree and contains `required`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedTree {
    pub vertices: VertexSet,
    pub required: Vec<usize>,
}

impl InducedTree {
    pub fn new(vertices: VertexSet, required: &[usize]) -> InducedTree {
        let mut req = required.to_vec();
        req.sort_unstable();
        req.dedup();
        InducedTree { vertices, required: req }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.vertices.to_vec()
    }

    /// True iff the set induces a tree in `g` and covers `required`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.required.iter().all(|&r| self.vertices.contains(r)) && is_induced_tree(g, &self.vertices).unwrap_or(false)
    }
}

/// Inclusion-minimal induced tree of `g` containing `a`, `b` and `c`.
pub fn tree_covering_three(g: &Graph, a: usize, b: usize, c: usize) -> Result<InducedTree> {
    tree_covering_three_in(g, &g.full_set(), a, b, c)
}

/// Same as [`tree_covering_three`] inside `G[allowed]`. The query vertices
/// may coincide.
pub fn tree_covering_three_in(g: &Graph, allowed: &VertexSet, a: usize, b: usize, c: usize) -> Result<InducedTree> {
    for v in [a, b, c] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
        if !allowed.contains(v) {
            return Err(Error::Precondition(format!("vertex {v} is not in the allowed set")));
        }
    }
    let disconnected = || Error::Disconnected(vec![a, b, c]);
    let p = bfs_path_by(g, a, |v| v == b, |v| allowed.contains(v)).ok_or_else(disconnected)?;
    let mut on_p = VertexSet::new(g.n());
    for &v in p.vertices() {
        on_p.insert(v);
    }
    let mut tree = on_p.clone();
    if !on_p.contains(c) {
        let sees_p = |v: usize| g.neighbors(v).iter().any(|&u| on_p.contains(u));
        let q = bfs_path_by(
            g,
            c,
            |v| allowed.contains(v) && !on_p.contains(v) && sees_p(v),
            |v| allowed.contains(v) && !on_p.contains(v),
        )
        .ok_or_else(disconnected)?;
        let (_, w) = q.ends();
        let pos: Vec<usize> = (0..p.len()).filter(|&i| g.has_edge(w, p.vertices()[i])).collect();
        match pos[..] {
            [_] => {}
            [i, j] if j == i + 2 => tree.remove(p.vertices()[i + 1]),
            [i, j, ..] if j == i + 1 => {
                let mut t = [w, p.vertices()[i], p.vertices()[j]];
                t.sort_unstable();
                return Err(Error::Triangle(t));
            }
            _ => return Err(triangle_or_internal(g, allowed, "attachment vertex sees the path too often")),
        }
        for &v in q.vertices() {
            tree.insert(v);
        }
    }
    let t = minimalize_tree(g, &InducedTree::new(tree, &[a, b, c]));
    if !t.is_valid(g) {
        return Err(triangle_or_internal(g, allowed, "three-vertex tree failed its check"));
    }
    Ok(t)
}

fn triangle_or_internal(g: &Graph, within: &VertexSet, msg: &str) -> Error {
    let (h, map) = g.induced(within);
    match find_triangle(&h) {
        Some(t) => {
            let mut t = t.map(|i| map[i]);
            t.sort_unstable();
            Error::Triangle(t)
        }
        None => Error::Internal(msg.to_string()),
    }
}

/// Repeatedly deletes leaves that are not required. The result is the
/// unique smallest subtree spanning the required vertices, which is what
/// an increasing-id scan with restarts also produces.
pub fn minimalize_tree(g: &Graph, t: &InducedTree) -> InducedTree {
    let mut set = t.vertices.clone();
    let required = |v: usize| t.required.binary_search(&v).is_ok();
    let mut deg = std::collections::HashMap::new();
    for v in set.iter() {
        deg.insert(v, g.neighbors(v).iter().filter(|&&u| set.contains(u)).count());
    }
    let mut stack: Vec<usize> = set.iter().filter(|&v| deg[&v] <= 1 && !required(v)).collect();
    stack.reverse();
    let mut size = set.len();
    while let Some(x) = stack.pop() {
        if !set.contains(x) || deg[&x] > 1 || size == 1 {
            continue;
        }
        set.remove(x);
        size -= 1;
        for &y in g.neighbors(x) {
            if set.contains(y) {
                let d = deg.get_mut(&y).expect("tree vertex");
                *d -= 1;
                if *d <= 1 && !required(y) {
                    stack.push(y);
                }
            }
        }
    }
    InducedTree { vertices: set, required: t.required.clone() }
}

/// A tree with exactly three leaves: its degree-3 vertex and the three legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClawDecomposition {
    pub center: usize,
    /// `legs[i]` runs from the center to `x_i`.
    pub legs: [Path; 3],
}

pub fn decompose_claw(g: &Graph, t: &InducedTree, x1: usize, x2: usize, x3: usize) -> Result<ClawDecomposition> {
    let set = &t.vertices;
    let deg = |v: usize| g.neighbors(v).iter().filter(|&&u| set.contains(u)).count();
    let big: Vec<usize> = set.iter().filter(|&v| deg(v) >= 3).collect();
    let center = match big[..] {
        [c] if deg(c) == 3 => c,
        [] => return Err(Error::Precondition("tree has no vertex of degree 3".into())),
        _ => {
            return Err(Error::Precondition(format!(
                "tree has branch vertices {big:?}, expected exactly one of degree 3"
            )))
        }
    };
    let xs = [x1, x2, x3];
    let mut legs: [Option<Path>; 3] = [None, None, None];
    for &start in g.neighbors(center).iter().filter(|&&u| set.contains(u)) {
        let mut path = vec![center, start];
        let (mut prev, mut cur) = (center, start);
        loop {
            let next: Vec<usize> = g.neighbors(cur).iter().copied().filter(|&u| set.contains(u) && u != prev).collect();
            match next[..] {
                [] => break,
                [u] => {
                    path.push(u);
                    prev = cur;
                    cur = u;
                }
                _ => return Err(Error::Precondition("tree is not a claw".into())),
            }
        }
        let i = xs
            .iter()
            .position(|&x| x == cur)
            .ok_or_else(|| Error::Precondition(format!("leaf {cur} is not one of the query vertices")))?;
        legs[i] = Some(Path::new(path));
    }
    match legs {
        [Some(a), Some(b), Some(c)] => Ok(ClawDecomposition { center, legs: [a, b, c] }),
        _ => Err(Error::Precondition("query vertices are not the three leaves".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    #[test]
    fn star_and_path() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(tree_covering_three(&star, 1, 2, 3).unwrap().to_vec(), vec![0, 1, 2, 3]);
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(tree_covering_three(&p5, 0, 2, 4).unwrap().len(), 5);
    }

    #[test]
    fn square_with_pendants() {
        // C4 a b c d = 0 1 2 3, x1-a, x2-b, x3-c = 4, 5, 6
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (5, 1), (6, 2)]).unwrap();
        let t = tree_covering_three(&g, 4, 5, 6).unwrap();
        assert_eq!(t.to_vec(), vec![0, 1, 2, 4, 5, 6]);
        assert!(t.is_valid(&g));
    }

    #[test]
    fn coinciding_queries_and_errors() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(tree_covering_three(&p3, 1, 1, 1).unwrap().to_vec(), vec![1]);
        assert_eq!(tree_covering_three(&p3, 0, 0, 2).unwrap().len(), 3);
        let two = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(tree_covering_three(&two, 0, 1, 2), Err(Error::Disconnected(_))));
        let k3 = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        // 3 attaches to the path 0-1 only through 2, which sees both ends
        assert!(matches!(tree_covering_three(&k3, 0, 1, 3), Err(Error::Triangle([0, 1, 2]))));
    }

    #[test]
    fn minimalize() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = minimalize_tree(&p4, &InducedTree::new(set(4, &[0, 1, 2, 3]), &[0, 2]));
        assert_eq!(t.to_vec(), vec![0, 1, 2]);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = minimalize_tree(&star, &InducedTree::new(set(4, &[0, 1, 2, 3]), &[1, 2, 3]));
        assert_eq!(t.len(), 4);
        // spider: center 0, legs 1-4, 2-5, 3-6; leg through 3 is useless
        let sp = Graph::new(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        let t = minimalize_tree(&sp, &InducedTree::new(sp.full_set(), &[4, 5]));
        assert_eq!(t.to_vec(), vec![0, 1, 2, 4, 5]);
    }

    #[test]
    fn claws() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = InducedTree::new(star.full_set(), &[1, 2, 3]);
        let cd = decompose_claw(&star, &t, 1, 2, 3).unwrap();
        assert_eq!(cd.center, 0);
        assert_eq!(cd.legs[1].vertices(), &[0, 2]);
        let sub = Graph::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let t = InducedTree::new(sub.full_set(), &[2, 4, 6]);
        let cd = decompose_claw(&sub, &t, 2, 4, 6).unwrap();
        assert_eq!(cd.center, 0);
        assert_eq!(cd.legs[2].vertices(), &[0, 5, 6]);
        // two branch vertices
        let two = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let t = InducedTree::new(two.full_set(), &[1, 2, 4]);
        assert!(decompose_claw(&two, &t, 1, 2, 4).is_err());
    }
}
