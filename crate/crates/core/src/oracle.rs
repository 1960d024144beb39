//! Exhaustive searches for small graphs, used as ground truth.
//!
//! Trees are grown from one required vertex: at each step the smallest
//! boundary vertex is either added or discarded for good. A vertex with two
//! neighbors in the current tree can never be added, so each induced
//! subtree through the root is reached exactly once.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::three_tree::InducedTree;

pub const TREE_LIMIT: usize = 24;
pub const CENTERED_LIMIT: usize = 20;
pub const CYCLE_LIMIT: usize = 20;

struct Search<'a> {
    g: &'a Graph,
    nbr: Vec<u32>,
    required: u32,
    centered: bool,
    limit: usize,
    best: Option<u32>,
    /// Stop at the first hit instead of minimizing.
    first: bool,
}

impl Search<'_> {
    fn run(&mut self, s: u32, banned: u32) {
        let size = s.count_ones() as usize;
        if self.best.is_some() && self.first {
            return;
        }
        if self.required & banned != 0 {
            return;
        }
        let missing = (self.required & !s).count_ones() as usize;
        if missing == 0 {
            if self.best.is_none_or(|b| size < b.count_ones() as usize) {
                self.best = Some(s);
            }
            return;
        }
        let bound = self.best.map_or(self.limit + 1, |b| (b.count_ones() as usize).min(self.limit + 1));
        if size + missing >= bound {
            return;
        }
        let n = self.g.n();
        let cand = (0..n).find(|&u| {
            let bit = 1u32 << u;
            s & bit == 0 && banned & bit == 0 && self.nbr[u] & s != 0
        });
        let Some(u) = cand else { return };
        let bit = 1u32 << u;
        if (self.nbr[u] & s).count_ones() == 1 && !(self.centered && self.breaks_center(s, u)) {
            let mut ban = banned;
            for w in 0..n {
                let wb = 1u32 << w;
                if s & wb == 0 && w != u && ((self.nbr[w] & (s | bit)).count_ones() >= 2) {
                    ban |= wb;
                }
            }
            self.run(s | bit, ban);
        }
        self.run(s, banned | bit);
    }

    /// Adding `u` would create a second vertex of degree at least three.
    fn breaks_center(&self, s: u32, u: usize) -> bool {
        let t = s | (1 << u);
        (0..self.g.n()).filter(|&w| t & (1 << w) != 0 && (self.nbr[w] & t).count_ones() >= 3).count() > 1
    }
}

fn masks(g: &Graph, limit: usize) -> Result<Vec<u32>> {
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), limit });
    }
    Ok((0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect())
}

fn search(
    g: &Graph,
    required: &[usize],
    centered: bool,
    first: bool,
    limit: usize,
    max_size: usize,
) -> Result<Option<InducedTree>> {
    let nbr = masks(g, limit)?;
    if let Some(&v) = required.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    let Some(&root) = required.first() else {
        return Err(Error::Precondition("no required vertices".into()));
    };
    let req = required.iter().fold(0u32, |m, &v| m | (1 << v));
    let mut s = Search { g, nbr, required: req, centered, limit: max_size, best: None, first };
    let root_bit = 1u32 << root;
    let banned = 0;
    s.run(root_bit, banned);
    Ok(s.best.map(|b| {
        let set = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| b & (1 << v) != 0));
        InducedTree::new(set, required)
    }))
}

/// A smallest induced tree containing `required`, optionally with at most
/// `max_extra` vertices beyond them.
pub fn brute_force_tree(g: &Graph, required: &[usize], max_extra: Option<usize>) -> Result<Option<InducedTree>> {
    let mut req = required.to_vec();
    req.sort_unstable();
    req.dedup();
    let max = max_extra.map_or(g.n(), |e| req.len() + e);
    search(g, &req, false, false, TREE_LIMIT, max)
}

/// Whether any induced tree contains `required`; stops at the first one.
pub fn has_covering_tree(g: &Graph, required: &[usize]) -> Result<bool> {
    let mut req = required.to_vec();
    req.sort_unstable();
    req.dedup();
    Ok(search(g, &req, false, true, TREE_LIMIT, g.n())?.is_some())
}

/// An induced tree containing `required` with at most one vertex of degree
/// three or more.
pub fn brute_force_centered_tree(g: &Graph, required: &[usize]) -> Result<Option<InducedTree>> {
    let mut req = required.to_vec();
    req.sort_unstable();
    req.dedup();
    search(g, &req, true, true, CENTERED_LIMIT, g.n())
}

/// Vertex set of an induced cycle through `x` and `y`.
pub fn brute_force_two_in_cycle(g: &Graph, x: usize, y: usize) -> Result<Option<VertexSet>> {
    let nbr = masks(g, CYCLE_LIMIT)?;
    for v in [x, y] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
    }
    if x == y {
        return Err(Error::Precondition("the two cycle vertices coincide".into()));
    }
    fn dfs(nbr: &[u32], path: &mut Vec<usize>, on: u32, y: usize) -> Option<u32> {
        let x = path[0];
        let last = *path.last().expect("nonempty");
        let mut cand = nbr[last] & !on;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let others = on & !(1 << last) & !(1 << x);
            if nbr[u] & others != 0 {
                continue;
            }
            let closes = path.len() >= 2 && nbr[u] & (1 << x) != 0;
            if closes {
                let cyc = on | (1 << u);
                if cyc & (1 << y) != 0 {
                    return Some(cyc);
                }
                continue;
            }
            path.push(u);
            let r = dfs(nbr, path, on | (1 << u), y);
            path.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    let mut path = vec![x];
    Ok(dfs(&nbr, &mut path, 1 << x, y).map(|m| VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| m & (1 << v) != 0))))
}
