//! Square structures: the split type, its ten-item validator, and the
//! one-vertex augmentation step.
//!
//! Inside the augmentation all column indices are logical: the anchor
//! column is 0, its neighbors on the square are 1 and 3, the opposite
//! column is 2. A [`Sym`] maps them back.

use std::collections::{HashMap, VecDeque};

use crate::certificate::{PartTable, Violation};
use crate::cubic::CubicSplit;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexSet};
use crate::structure::{
    allowed_col, certify_tree, check_triangle_at, min_s, nearest, trace_back_map, ColumnDist, Layout, Part, Pieces,
    Sym, View,
};
use crate::three_tree::{tree_covering_three_in, InducedTree};

/// A split `(A1..A4, S1..S4, R)` of a square structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSplit {
    pub a: [VertexSet; 4],
    pub s: [VertexSet; 4],
    pub r: VertexSet,
    pub terminals: [usize; 4],
}

impl SquareSplit {
    pub fn domain(&self) -> VertexSet {
        let mut d = self.r.clone();
        for x in self.a.iter().chain(self.s.iter()) {
            d.union_with(x);
        }
        d
    }

    fn groups(&self) -> Vec<(Part, &VertexSet)> {
        let mut out = Vec::with_capacity(9);
        for i in 0..4 {
            out.push((Part::A(i as u8), &self.a[i]));
        }
        for i in 0..4 {
            out.push((Part::S(i as u8), &self.s[i]));
        }
        out.push((Part::R, &self.r));
        out
    }

    pub(crate) fn layout(&self, n: usize) -> Layout {
        let mut part = vec![Part::Out; n];
        for (p, set) in self.groups() {
            for v in set.iter() {
                part[v] = p;
            }
        }
        Layout { part, terminals: self.terminals }
    }

    pub(crate) fn from_layout(lay: &Layout) -> SquareSplit {
        let n = lay.part.len();
        let mut split = SquareSplit {
            a: std::array::from_fn(|_| VertexSet::new(n)),
            s: std::array::from_fn(|_| VertexSet::new(n)),
            r: VertexSet::new(n),
            terminals: lay.terminals,
        };
        for (v, &p) in lay.part.iter().enumerate() {
            match p {
                Part::A(i) => split.a[i as usize].insert(v),
                Part::S(i) => split.s[i as usize].insert(v),
                Part::R => split.r.insert(v),
                _ => {}
            }
        }
        split
    }
}

/// Checks the ten square-structure items over `G[domain]`. Items are
/// numbered 1 to 10 in the usual order: cover, disjoint, terminals, stable,
/// nonempty, cyclic completeness, opposite anticompleteness, `N(A_i) = S_i`,
/// `N(R) ⊆ S`, `G[A_i]` connected.
pub fn validate_square(g: &Graph, split: &SquareSplit, domain: &VertexSet) -> Vec<Violation> {
    let mut out = Vec::new();
    let t = PartTable::build(g, domain, &split.groups(), &mut out);
    t.check_terminals(g, &split.terminals, 3, &mut out);
    for i in 0..4u8 {
        let si = Part::S(i);
        if t.size(si) == 0 {
            out.push(Violation::new(5, vec![], format!("S{i} is empty")));
        }
        let next = Part::S((i + 1) % 4);
        for u in split.s[i as usize].iter().filter(|&u| u < g.n()) {
            for &w in g.neighbors(u) {
                if t.part[w] == si && u < w {
                    out.push(Violation::new(4, vec![u, w], format!("edge {u}-{w} inside S{i}")));
                }
                if i < 2 && t.part[w] == Part::S(i + 2) {
                    out.push(Violation::new(7, vec![u, w], format!("edge {u}-{w} joins S{i} and S{}", i + 2)));
                }
            }
            if let Some(w) = t.missing_partner(g, u, next) {
                out.push(Violation::new(
                    6,
                    vec![u, w],
                    format!("S{i} is not complete to S{}: {u}-{w} missing", (i + 1) % 4),
                ));
            }
        }
    }
    t.check_columns(g, 8, 10, &mut out);
    for r in split.r.iter().filter(|&r| r < g.n()) {
        for &u in g.neighbors(r) {
            if matches!(t.part[u], Part::A(_)) {
                out.push(Violation::new(9, vec![r, u], format!("R vertex {r} is adjacent to {u} outside S")));
            }
        }
    }
    out.sort_by_key(|v| v.item);
    out
}

/// `P_s`: shortest path from `s` to the terminal of column `i` with
/// interior in `A_i`.
pub fn path_to_terminal(g: &Graph, split: &SquareSplit, i: usize, s: usize) -> Result<Path> {
    if i >= 4 || s >= g.n() || !(split.s[i].contains(s) || split.a[i].contains(s)) {
        return Err(Error::Precondition(format!("vertex {s} is not in S{i} or A{i}")));
    }
    let lay = split.layout(g.n());
    crate::structure::column_path(g, &lay.part, Part::A(i as u8), split.terminals[i], s)
        .ok_or_else(|| Error::Precondition(format!("no path from {s} to the terminal through A{i}")))
}

/// Result of adding one vertex to a square structure.
#[derive(Clone, Debug)]
pub enum SquareOutcome {
    FoundTree(InducedTree),
    BecameCubic(CubicSplit, VertexSet),
    GrewSquare(SquareSplit, VertexSet),
}

/// What happened during one augmentation, in logical (anchor = column 0)
/// terms except where noted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SquareAugmentTrace {
    pub v: usize,
    /// Anchor vertex and its actual column.
    pub anchor: Option<(usize, usize)>,
    pub q_path: Option<Vec<usize>>,
    /// Vertices of `Y` complete to the two columns next to the anchor.
    pub complete_set: Vec<usize>,
    pub y: Vec<usize>,
    pub y1: Vec<usize>,
    pub y2: Vec<usize>,
    pub y3: Vec<usize>,
    /// `symmetry[k]` is the actual column playing logical column `k`.
    pub symmetry: [usize; 4],
    pub branch: &'static str,
}

/// Adds `v` to the square structure `domain` with the given split.
pub fn augment_square(
    g: &Graph,
    split: &SquareSplit,
    domain: &VertexSet,
    v: usize,
) -> Result<(SquareOutcome, SquareAugmentTrace)> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    if domain.contains(v) {
        return Err(Error::Precondition(format!("vertex {v} is already in the domain")));
    }
    let bad = validate_square(g, split, domain);
    if !bad.is_empty() {
        return Err(Error::InvalidSplit(bad));
    }
    let mut lay = split.layout(g.n());
    let mut trace = SquareAugmentTrace::default();
    let step = square_step(g, &mut lay, v, &mut trace)?;
    let outcome = match step {
        SquareStep::Grew => {
            let s = SquareSplit::from_layout(&lay);
            let mut d = domain.clone();
            d.insert(v);
            let bad = validate_square(g, &s, &d);
            if !bad.is_empty() {
                return Err(Error::Internal(format!("grown square split is invalid: {}", Error::InvalidSplit(bad))));
            }
            SquareOutcome::GrewSquare(s, d)
        }
        SquareStep::Tree(t) => SquareOutcome::FoundTree(InducedTree::new(t, &split.terminals)),
        SquareStep::Cubic(cl) => {
            let c = CubicSplit::from_layout(&cl);
            let d = cl.domain();
            let bad = crate::cubic::validate_cubic(g, &c, &d);
            if !bad.is_empty() {
                return Err(Error::Internal(format!(
                    "cubic split from a square is invalid: {}",
                    Error::InvalidSplit(bad)
                )));
            }
            SquareOutcome::BecameCubic(c, d)
        }
    };
    Ok((outcome, trace))
}

pub(crate) enum SquareStep {
    Grew,
    Tree(VertexSet),
    Cubic(Layout),
}

pub(crate) fn square_step(g: &Graph, lay: &mut Layout, v: usize, trace: &mut SquareAugmentTrace) -> Result<SquareStep> {
    check_triangle_at(g, &lay.part, v)?;
    trace.v = v;
    let mut cache = ColumnDist::default();
    let mut anchor: Option<(usize, usize, usize)> = None;
    {
        let view = View::new(g, lay, Sym::ID);
        for &u in g.neighbors(v) {
            if let Part::A(i) = lay.part[u] {
                let key = (view.path_len(i as usize, u, &mut cache), i as usize, u);
                if anchor.is_none_or(|a| key < a) {
                    anchor = Some(key);
                }
            }
        }
    }
    let Some((_, col, a1)) = anchor else {
        trace.branch = "no A neighbor";
        trace.symmetry = Sym::ID.perm;
        lay.part[v] = Part::R;
        return Ok(SquareStep::Grew);
    };
    trace.anchor = Some((a1, col));
    let mut sym = Sym::ID;
    sym.rotate(col);
    trace.symmetry = sym.perm;
    let snapshot = lay.clone();
    let view = View::new(g, &snapshot, sym);
    let blocked = |x: usize| g.neighbors(x).iter().any(|&u| matches!(view.part(u), Part::A(k) | Part::S(k) if k != 0));
    let in_c = |x: usize| view.is_complete_to_part(x, Part::S(1)) && view.is_complete_to_part(x, Part::S(3));
    let s0 = sym.to_actual(Part::S(0));
    let a0 = sym.to_actual(Part::A(0));

    if blocked(v) {
        let only_a0 = g.neighbors(v).iter().all(|&u| !matches!(view.part(u), Part::A(k) if k != 0));
        if in_c(v) && only_a0 {
            trace.branch = "v complete to both neighbor columns";
            trace.y = vec![v];
            trace.y2 = vec![v];
            trace.complete_set = vec![v];
            lay.part[v] = s0;
            return Ok(SquareStep::Grew);
        }
        let res = cascade(view.clone(), a1, vec![v], &mut cache, trace)?;
        trace.q_path = Some(vec![v]);
        return Ok(res.into_step());
    }

    // BFS over R from v
    let mut parent: HashMap<usize, usize> = HashMap::from([(v, v)]);
    let mut queue = VecDeque::from([v]);
    let mut y1 = vec![v];
    let mut y2 = Vec::new();
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if view.part(y) != Part::R || parent.contains_key(&y) {
                continue;
            }
            parent.insert(y, x);
            if blocked(y) {
                if in_c(y) {
                    y2.push(y);
                } else {
                    let q = trace_back_map(&parent, v, y);
                    trace.q_path = Some(q.clone());
                    let res = cascade(view.clone(), a1, q, &mut cache, trace)?;
                    return Ok(res.into_step());
                }
            } else {
                y1.push(y);
                queue.push_back(y);
            }
        }
    }
    // Y = component of v in G[R ∪ {v}], for the trace
    let y = g.component_within(
        v,
        Some(&{
            let mut s = snapshot.set_of(Part::R);
            s.insert(v);
            s
        }),
    );
    trace.branch = "relabel Y1 into A and Y2 into S";
    trace.complete_set = y.iter().filter(|&x| in_c(x)).collect();
    trace.y = y.to_vec();
    let y12: std::collections::HashSet<usize> = y1.iter().chain(y2.iter()).copied().collect();
    trace.y3 = y.iter().filter(|x| !y12.contains(x)).collect();
    for &x in &y1 {
        lay.part[x] = a0;
    }
    for &x in &y2 {
        lay.part[x] = s0;
    }
    y1.sort_unstable();
    y2.sort_unstable();
    trace.y1 = y1;
    trace.y2 = y2;
    Ok(SquareStep::Grew)
}

enum CascadeOut {
    Tree(VertexSet),
    /// Logical cubic parts with the symmetry in force when it was built.
    Cubic(Vec<(usize, Part)>, Sym, [usize; 4], usize),
}

impl CascadeOut {
    fn into_step(self) -> SquareStep {
        match self {
            CascadeOut::Tree(t) => SquareStep::Tree(t),
            CascadeOut::Cubic(parts, sym, terminals, n) => {
                let mut part = vec![Part::Out; n];
                for (v, p) in parts {
                    part[v] = sym.to_actual(p);
                }
                SquareStep::Cubic(Layout { part, terminals })
            }
        }
    }
}

/// The case analysis for a path `Q = v .. w` whose end `w` sees a column
/// other than the anchor's.
fn cascade(
    mut view: View<'_>,
    a1: usize,
    q: Vec<usize>,
    cache: &mut ColumnDist,
    trace: &mut SquareAugmentTrace,
) -> Result<CascadeOut> {
    let g = view.g;
    let n = g.n();
    let v = q[0];
    let w = *q.last().expect("nonempty path");
    let terms = view.lay.terminals;
    let done = |p: &mut Pieces, what: &str| -> Result<CascadeOut> {
        Ok(CascadeOut::Tree(certify_tree(g, p.set.clone(), &terms, what)?))
    };
    let assert_v = |what: &str| -> Result<()> {
        if w != v {
            return Err(Error::Internal(format!(
                "end {w} of Q has a neighbor in A but is not v ({what}); a vertex of R saw A"
            )));
        }
        Ok(())
    };

    // (a) a neighbor in A of a neighbor column
    if view.touches(w, Part::A(1)) || view.touches(w, Part::A(3)) {
        assert_v("neighbor column")?;
        if !view.touches(v, Part::A(1)) {
            view.swap(1, 3);
        }
        trace.symmetry = view.sym.perm;
        let a2 = nearest(&view, v, &[Part::A(1)], cache).expect("has an A neighbor");
        let n2 = nearest(&view, v, &[Part::A(2), Part::S(2)], cache);
        let n3 = nearest(&view, v, &[Part::A(3), Part::S(3)], cache);
        let mut p = Pieces::new(n);
        p.add(&[v]).path(view.path(0, a1))?.path(view.path(1, a2))?;
        match (n2, n3) {
            (Some(b), Some(c)) => {
                trace.branch = "v sees three other columns";
                p.path(view.path(2, b))?.path(view.path(3, c))?;
            }
            (Some(b), None) => {
                trace.branch = "v sees the opposite column";
                let s3 = if view.is(b, Part::S(2)) { b } else { min_s(&view, 2)? };
                let t3 = tree_covering_three_in(g, &allowed_col(&view, 2, &[v, s3]), v, s3, view.terminal(2))?;
                p.tree(&t3).path(view.path(3, min_s(&view, 3)?))?;
            }
            (None, Some(c)) => {
                trace.branch = "v sees the far neighbor column";
                let s4 = if view.is(c, Part::S(3)) { c } else { min_s(&view, 3)? };
                let t4 = tree_covering_three_in(g, &allowed_col(&view, 3, &[v, s4]), v, s4, view.terminal(3))?;
                p.tree(&t4).path(view.path(2, min_s(&view, 2)?))?;
            }
            (None, None) => {
                trace.branch = "v sees one neighbor column";
                let s1 = min_s(&view, 0)?;
                let t1 = tree_covering_three_in(g, &allowed_col(&view, 0, &[v, s1]), v, s1, view.terminal(0))?;
                let mut p = Pieces::new(n);
                p.tree(&t1)
                    .path(view.path(1, a2))?
                    .path(view.path(2, min_s(&view, 2)?))?
                    .path(view.path(3, min_s(&view, 3)?))?;
                return done(&mut p, trace.branch);
            }
        }
        return done(&mut p, trace.branch);
    }

    // (b), (c): a neighbor in the opposite S, or no neighbor in S1 ∪ S3
    let opp = view.first_nbr(w, Part::S(2));
    let sees13 = view.touches(w, Part::S(1)) || view.touches(w, Part::S(3));
    if opp.is_some() || !sees13 {
        let s3 = match opp {
            Some(s) => {
                trace.branch = "w sees the opposite S";
                s
            }
            None => {
                trace.branch = "w sees only the opposite A";
                if !view.touches(w, Part::A(2)) {
                    return Err(Error::Internal(format!("end {w} of Q sees no other column")));
                }
                assert_v("opposite column")?;
                min_s(&view, 2)?
            }
        };
        let t3 = tree_covering_three_in(g, &allowed_col(&view, 2, &[w, s3]), w, s3, view.terminal(2))?;
        let mut p = Pieces::new(n);
        p.add(&q)
            .path(view.path(0, a1))?
            .path(view.path(1, min_s(&view, 1)?))?
            .tree(&t3)
            .path(view.path(3, min_s(&view, 3)?))?;
        return done(&mut p, trace.branch);
    }

    if !view.touches(w, Part::S(1)) {
        view.swap(1, 3);
        trace.symmetry = view.sym.perm;
    }
    let s2 = view.first_nbr(w, Part::S(1)).expect("w sees S1");

    // (d) no neighbor in the opposite A
    if !view.touches(w, Part::A(2)) {
        let s3 = min_s(&view, 2)?;
        let mut p = Pieces::new(n);
        p.add(&q).path(view.path(0, a1))?.path(view.path(2, s3))?;
        if let Some(s4) = view.members(Part::S(3)).into_iter().find(|&s| !g.has_edge(w, s)) {
            trace.branch = "w misses a vertex of S3";
            p.path(view.path(1, s2))?.path(view.path(3, s4))?;
            return done(&mut p, trace.branch);
        }
        if let Some(s2b) = view.members(Part::S(1)).into_iter().find(|&s| !g.has_edge(w, s)) {
            trace.branch = "w misses a vertex of S1";
            let s4 = view.first_nbr(w, Part::S(3)).expect("w complete to S3");
            p.path(view.path(3, s4))?.path(view.path(1, s2b))?;
            return done(&mut p, trace.branch);
        }
        return Err(Error::Internal(format!(
            "end {w} of Q is complete to both neighbor columns with no other A neighbor, yet was treated as violating"
        )));
    }

    // (e) w = v sees the opposite A
    assert_v("opposite A after S1")?;
    let a3 = nearest(&view, v, &[Part::A(2)], cache).expect("sees A2");
    if let Some(s4) = view.first_nbr(v, Part::S(3)) {
        trace.branch = "v sees S1 and S3";
        let mut p = Pieces::new(n);
        p.add(&[v]).path(view.path(0, a1))?.path(view.path(1, s2))?.path(view.path(2, a3))?.path(view.path(3, s4))?;
        return done(&mut p, trace.branch);
    }
    let s4 = min_s(&view, 3)?;
    let s1 = min_s(&view, 0)?;
    let s3 = min_s(&view, 2)?;
    let pa1 = view.path(0, a1).ok_or_else(|| Error::Internal("no anchor path".into()))?;
    let ps2 = view.path(1, s2).ok_or_else(|| Error::Internal("no S1 path".into()))?;
    let pa3 = view.path(2, a3).ok_or_else(|| Error::Internal("no A2 path".into()))?;
    let ps4 = view.path(3, s4).ok_or_else(|| Error::Internal("no S3 path".into()))?;

    // s1 against P_{a1}, then s3 against P_{a3}
    for (s, own, own_sym) in [(s1, &pa1, 0usize), (s3, &pa3, 2usize)] {
        let hits: Vec<usize> = (0..own.len()).filter(|&i| g.has_edge(s, own.vertices()[i])).collect();
        let others: Vec<&Path> = [&pa1, &ps2, &pa3, &ps4].into_iter().filter(|p| !std::ptr::eq(*p, own)).collect();
        match hits.last() {
            None => {
                trace.branch = if own_sym == 0 { "s1 misses P_a1" } else { "s3 misses P_a3" };
                let mut p = Pieces::new(n);
                p.add(&[v, s]).add(pa1.vertices()).add(ps2.vertices()).add(pa3.vertices()).add(ps4.vertices());
                return done(&mut p, trace.branch);
            }
            Some(&j) if j > 0 => {
                trace.branch = if own_sym == 0 { "s1 sees P_a1 below a1" } else { "s3 sees P_a3 below a3" };
                let mut p = Pieces::new(n);
                p.add(&[v, s]).add(&own.vertices()[j..]);
                for o in others {
                    p.add(o.vertices());
                }
                return done(&mut p, trace.branch);
            }
            _ => {}
        }
    }

    trace.branch = "cubic structure";
    let mut parts: Vec<(usize, Part)> = Vec::new();
    for (k, path) in [&pa1, &ps2, &pa3, &ps4].into_iter().enumerate() {
        let vs = path.vertices();
        parts.push((vs[0], Part::S(k as u8)));
        for &x in &vs[1..] {
            parts.push((x, Part::A(k as u8)));
        }
    }
    parts.push((s3, Part::S(4)));
    parts.push((s1, Part::S(6)));
    parts.push((v, Part::S(7)));
    Ok(CascadeOut::Cubic(parts, view.sym, terms, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// C4 s0 s1 s2 s3 = 0..4 with pendants x_i = 4 + i.
    fn smallest() -> (Graph, SquareSplit) {
        let g = Graph::new(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let split = split_of(8, [&[4], &[5], &[6], &[7]], [&[0], &[1], &[2], &[3]], &[], [4, 5, 6, 7]);
        (g, split)
    }

    fn split_of(n: usize, a: [&[usize]; 4], s: [&[usize]; 4], r: &[usize], t: [usize; 4]) -> SquareSplit {
        let set = |x: &[usize]| VertexSet::from_iter(n, x.iter().copied());
        SquareSplit { a: a.map(set), s: s.map(set), r: set(r), terminals: t }
    }

    #[test]
    fn validator_examples() {
        let (g, split) = smallest();
        assert!(validate_square(&g, &split, &g.full_set()).is_empty());

        let es: Vec<_> = g.edge_list().into_iter().filter(|&e| e != (0, 1)).collect();
        let g2 = Graph::new(8, &es).unwrap();
        let bad = validate_square(&g2, &split, &g2.full_set());
        assert!(bad.iter().any(|v| v.item == 6), "{bad:?}");

        let g3 = g.extended(0, &[(4, 1)]).unwrap();
        let bad = validate_square(&g3, &split, &g3.full_set());
        assert!(bad.iter().any(|v| v.item == 8), "{bad:?}");

        let mut moved = split.clone();
        moved.s[0].remove(0);
        moved.r.insert(0);
        let bad = validate_square(&g, &moved, &g.full_set());
        assert!(bad.iter().any(|v| v.item == 9), "{bad:?}");
    }

    #[test]
    fn terminal_paths() {
        let (g, split) = smallest();
        assert_eq!(path_to_terminal(&g, &split, 0, 0).unwrap().vertices(), &[0, 4]);
        assert!(path_to_terminal(&g, &split, 0, 1).is_err());
    }

    #[test]
    fn isolated_vertex_goes_to_r() {
        let (g, split) = smallest();
        let g = g.extended(1, &[]).unwrap();
        let dom = split.domain();
        let (out, _) = augment_square(&g, &split, &dom, 8).unwrap();
        match out {
            SquareOutcome::GrewSquare(s, d) => {
                assert!(s.r.contains(8));
                assert_eq!(d.len(), 9);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn complete_vertex_joins_s1() {
        // v adjacent to x1's neighbor side: v sees A1 through a new A vertex?
        // Build A1 = {a, x1} with x1 - a - s0, then v adjacent to a, s1, s3.
        let edges = [(0, 1), (1, 2), (2, 3), (3, 0), (8, 0), (8, 4), (1, 5), (2, 6), (3, 7), (9, 8), (9, 1), (9, 3)];
        let g = Graph::new(10, &edges).unwrap();
        let split = split_of(10, [&[4, 8], &[5], &[6], &[7]], [&[0], &[1], &[2], &[3]], &[], [4, 5, 6, 7]);
        assert!(validate_square(&g, &split, &split.domain()).is_empty());
        let (out, trace) = augment_square(&g, &split, &split.domain(), 9).unwrap();
        match out {
            SquareOutcome::GrewSquare(s, _) => assert!(s.s[0].contains(9)),
            o => panic!("{o:?} {trace:?}"),
        }
    }

    #[test]
    fn two_columns_give_a_tree() {
        let (g, _split) = smallest();
        // v adjacent to x1? x_i must stay degree one, so hang v on new A vertices
        let edges: Vec<_> = g.edge_list().into_iter().filter(|&e| e != (0, 4) && e != (1, 5)).collect();
        let mut es = edges;
        es.extend([(8, 0), (8, 4), (9, 1), (9, 5), (10, 8), (10, 9)]);
        let g = Graph::new(11, &es).unwrap();
        let split = split_of(11, [&[4, 8], &[5, 9], &[6], &[7]], [&[0], &[1], &[2], &[3]], &[], [4, 5, 6, 7]);
        assert!(validate_square(&g, &split, &split.domain()).is_empty());
        let (out, _) = augment_square(&g, &split, &split.domain(), 10).unwrap();
        match out {
            SquareOutcome::FoundTree(t) => assert!(t.is_valid(&g)),
            o => panic!("{o:?}"),
        }
    }
}
