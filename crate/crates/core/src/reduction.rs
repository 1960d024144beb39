//! From "is there an induced cycle through `x` and `y`" to "is there an
//! induced tree with at most one branch vertex covering four terminals".
//!
//! With `N(x) = {x', x''}` and `N(y) = {y', y''}`: delete `x` and `y`, add
//! `c, x1, x2, x3, x4` with edges `c x1`, `c x2`, `c x'`, `c x''`, `x3 y'`
//! and `x4 y''`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{brute_force_centered_tree, brute_force_two_in_cycle};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenteredInstance {
    pub graph: Graph,
    pub terminals: [usize; 4],
    /// `map[old]` is the new id of each surviving original vertex.
    pub map: Vec<Option<usize>>,
    pub center: usize,
}

pub fn build_centered_instance(g: &Graph, x: usize, y: usize) -> Result<CenteredInstance> {
    for v in [x, y] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
        if g.degree(v) != 2 {
            return Err(Error::Precondition(format!("vertex {v} has degree {}, expected 2", g.degree(v))));
        }
    }
    if x == y {
        return Err(Error::Precondition("x and y coincide".into()));
    }
    if g.has_edge(x, y) {
        return Err(Error::Precondition(format!("x = {x} and y = {y} are adjacent")));
    }
    let mut map = vec![None; g.n()];
    let mut next = 0;
    for v in (0..g.n()).filter(|&v| v != x && v != y) {
        map[v] = Some(next);
        next += 1;
    }
    let id = |v: usize| map[v].expect("kept vertex");
    let mut edges: Vec<(usize, usize)> =
        g.edges().filter(|&(u, v)| ![u, v].contains(&x) && ![u, v].contains(&y)).map(|(u, v)| (id(u), id(v))).collect();
    let c = next;
    let t = [c + 1, c + 2, c + 3, c + 4];
    let nx = g.neighbors(x);
    let ny = g.neighbors(y);
    edges.extend([(c, t[0]), (c, t[1]), (c, id(nx[0])), (c, id(nx[1])), (t[2], id(ny[0])), (t[3], id(ny[1]))]);
    let graph = Graph::new(c + 5, &edges)?;
    Ok(CenteredInstance { graph, terminals: t, map, center: c })
}

/// Runs both oracles and reports whether they agree.
pub fn check_reduction(g: &Graph, x: usize, y: usize) -> Result<bool> {
    let inst = build_centered_instance(g, x, y)?;
    let cycle = brute_force_two_in_cycle(g, x, y)?.is_some();
    let tree = brute_force_centered_tree(&inst.graph, &inst.terminals)?.is_some();
    Ok(cycle == tree)
}
