//! Cubic structures: the split type, its fourteen-item validator, and the
//! one-vertex augmentation step.
//!
//! Logical indices as in the square module. Bottoms are `S(0..4)`, tops
//! `S(4..8)`, and `S(i + 4)` is the partner of bottom `S(i)`: the one top
//! that `S(i)` misses.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::certificate::{PartTable, Violation};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexSet};
use crate::structure::{
    allowed_col, certify_tree, check_triangle_at, min_s, nearest, trace_back_map, ColumnDist, Layout, Part, Pieces,
    Sym, View,
};
use crate::three_tree::{tree_covering_three_in, InducedTree};

/// A split `(A1..A4, B1..B4, S1..S8, R)` of a cubic structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicSplit {
    pub a: [VertexSet; 4],
    pub b: [VertexSet; 4],
    pub s: [VertexSet; 8],
    pub r: VertexSet,
    pub terminals: [usize; 4],
}

impl CubicSplit {
    pub fn domain(&self) -> VertexSet {
        let mut d = self.r.clone();
        for x in self.a.iter().chain(self.b.iter()).chain(self.s.iter()) {
            d.union_with(x);
        }
        d
    }

    fn groups(&self) -> Vec<(Part, &VertexSet)> {
        let mut out = Vec::with_capacity(17);
        for i in 0..4 {
            out.push((Part::A(i as u8), &self.a[i]));
        }
        for i in 0..4 {
            out.push((Part::B(i as u8), &self.b[i]));
        }
        for i in 0..8 {
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

    pub(crate) fn from_layout(lay: &Layout) -> CubicSplit {
        let n = lay.part.len();
        let mut split = CubicSplit {
            a: std::array::from_fn(|_| VertexSet::new(n)),
            b: std::array::from_fn(|_| VertexSet::new(n)),
            s: std::array::from_fn(|_| VertexSet::new(n)),
            r: VertexSet::new(n),
            terminals: lay.terminals,
        };
        for (v, &p) in lay.part.iter().enumerate() {
            match p {
                Part::A(i) => split.a[i as usize].insert(v),
                Part::B(i) => split.b[i as usize].insert(v),
                Part::S(i) => split.s[i as usize].insert(v),
                Part::R => split.r.insert(v),
                Part::Out => {}
            }
        }
        split
    }
}

/// Checks the fourteen cubic-structure items over `G[domain]`.
pub fn validate_cubic(g: &Graph, split: &CubicSplit, domain: &VertexSet) -> Vec<Violation> {
    let mut out = Vec::new();
    let t = PartTable::build(g, domain, &split.groups(), &mut out);
    t.check_terminals(g, &split.terminals, 3, &mut out);
    let empty_tops: Vec<usize> = (4..8).filter(|&i| t.size(Part::S(i as u8)) == 0).collect();
    if empty_tops.len() > 1 {
        let names: Vec<String> = empty_tops.iter().map(|i| format!("S{i}")).collect();
        out.push(Violation::new(6, vec![], format!("tops {} are empty", names.join(", "))));
    }
    for i in 0..8u8 {
        let si = Part::S(i);
        if i < 4 && t.size(si) == 0 {
            out.push(Violation::new(5, vec![], format!("S{i} is empty")));
        }
        for u in split.s[i as usize].iter().filter(|&u| u < g.n()) {
            for &w in g.neighbors(u) {
                let Part::S(j) = t.part[w] else { continue };
                if w < u {
                    continue;
                }
                if j == i {
                    out.push(Violation::new(4, vec![u, w], format!("edge {u}-{w} inside S{i}")));
                } else if i < 4 && j == i + 4 {
                    out.push(Violation::new(8, vec![u, w], format!("edge {u}-{w} joins S{i} and its partner S{j}")));
                } else if (i < 4) == (j < 4) {
                    let item = if i < 4 { 9 } else { 10 };
                    out.push(Violation::new(item, vec![u, w], format!("edge {u}-{w} joins S{i} and S{j}")));
                }
            }
            if i < 4 {
                for top in (4..8u8).filter(|&k| k != i + 4) {
                    if let Some(w) = t.missing_partner(g, u, Part::S(top)) {
                        out.push(Violation::new(
                            7,
                            vec![u, w],
                            format!("S{i} is not complete to S{top}: {u}-{w} missing"),
                        ));
                    }
                }
            }
        }
    }
    t.check_columns(g, 11, 14, &mut out);
    for i in 0..4u8 {
        for b in split.b[i as usize].iter().filter(|&b| b < g.n()) {
            for &u in g.neighbors(b) {
                let ok = match t.part[u] {
                    Part::Out => true,
                    Part::B(j) => j == i,
                    Part::S(j) => j == i || (j >= 4 && j != i + 4),
                    _ => false,
                };
                if !ok {
                    out.push(Violation::new(12, vec![b, u], format!("B{i} vertex {b} is adjacent to {u}")));
                }
            }
        }
    }
    for r in split.r.iter().filter(|&r| r < g.n()) {
        for &u in g.neighbors(r) {
            if !matches!(t.part[u], Part::Out | Part::R) && !matches!(t.part[u], Part::S(j) if j >= 4) {
                out.push(Violation::new(13, vec![r, u], format!("R vertex {r} is adjacent to {u} outside the tops")));
            }
        }
    }
    out.sort_by_key(|v| v.item);
    out
}

/// `P_s` through `A_i`, as for squares.
pub fn path_to_terminal(g: &Graph, split: &CubicSplit, i: usize, s: usize) -> Result<Path> {
    if i >= 4 || s >= g.n() || !(split.s[i].contains(s) || split.a[i].contains(s)) {
        return Err(Error::Precondition(format!("vertex {s} is not in S{i} or A{i}")));
    }
    let lay = split.layout(g.n());
    crate::structure::column_path(g, &lay.part, Part::A(i as u8), split.terminals[i], s)
        .ok_or_else(|| Error::Precondition(format!("no path from {s} to the terminal through A{i}")))
}

#[derive(Clone, Debug)]
pub enum CubicOutcome {
    FoundTree(InducedTree),
    GrewCubic(CubicSplit, VertexSet),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CubicAugmentTrace {
    pub v: usize,
    pub branch: &'static str,
    pub q_path: Option<Vec<usize>>,
    pub complete_set: Vec<usize>,
    pub y: Vec<usize>,
    pub y1: Vec<usize>,
    pub y2: Vec<usize>,
    pub y3: Vec<usize>,
    pub symmetry: [usize; 4],
}

pub fn augment_cubic(
    g: &Graph,
    split: &CubicSplit,
    domain: &VertexSet,
    v: usize,
) -> Result<(CubicOutcome, CubicAugmentTrace)> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    if domain.contains(v) {
        return Err(Error::Precondition(format!("vertex {v} is already in the domain")));
    }
    let bad = validate_cubic(g, split, domain);
    if !bad.is_empty() {
        return Err(Error::InvalidSplit(bad));
    }
    let mut lay = split.layout(g.n());
    let mut trace = CubicAugmentTrace::default();
    match cubic_step(g, &mut lay, v, &mut trace)? {
        Some(t) => Ok((CubicOutcome::FoundTree(InducedTree::new(t, &split.terminals)), trace)),
        None => {
            let s = CubicSplit::from_layout(&lay);
            let mut d = domain.clone();
            d.insert(v);
            let bad = validate_cubic(g, &s, &d);
            if !bad.is_empty() {
                return Err(Error::Internal(format!("grown cubic split is invalid: {}", Error::InvalidSplit(bad))));
            }
            Ok((CubicOutcome::GrewCubic(s, d), trace))
        }
    }
}

fn top(k: usize) -> Part {
    Part::S(k as u8 + 4)
}

fn bottom(k: usize) -> Part {
    Part::S(k as u8)
}

/// Column `k`: `A_k ∪ S_k`.
fn column(k: usize) -> [Part; 2] {
    [Part::A(k as u8), Part::S(k as u8)]
}

/// One augmentation: `Some(tree)` or `None` after relabeling `lay`.
pub(crate) fn cubic_step(
    g: &Graph,
    lay: &mut Layout,
    v: usize,
    trace: &mut CubicAugmentTrace,
) -> Result<Option<VertexSet>> {
    check_triangle_at(g, &lay.part, v)?;
    trace.v = v;
    trace.symmetry = Sym::ID.perm;
    let mut cache = ColumnDist::default();
    let snapshot = lay.clone();
    let view = View::new(g, &snapshot, Sym::ID);
    let mut anchor: Option<(usize, usize, usize)> = None;
    for &u in g.neighbors(v) {
        if let Part::A(i) = snapshot.part[u] {
            let key = (view.path_len(i as usize, u, &mut cache), i as usize, u);
            if anchor.is_none_or(|a| key < a) {
                anchor = Some(key);
            }
        }
    }
    if let Some((_, col, a1)) = anchor {
        let mut view = view;
        view.swap(0, col);
        trace.symmetry = view.sym.perm;
        return with_a_neighbor(view, lay, v, a1, &mut cache, trace);
    }
    let incomplete: Vec<usize> = (0..4).filter(|&i| !view.is_complete_to_part(v, bottom(i))).collect();
    if incomplete.len() <= 1 {
        let i = incomplete.first().copied().unwrap_or(0);
        let mut view = view;
        view.swap(i, 3);
        trace.symmetry = view.sym.perm;
        return complete_to_three(view, lay, v, trace);
    }
    general(view, lay, v, trace)
}

fn tree_out(g: &Graph, p: &Pieces, terms: &[usize; 4], what: &str) -> Result<Option<VertexSet>> {
    certify_tree(g, p.set.clone(), terms, what).map(Some)
}

fn need(x: Option<usize>, what: &str) -> Result<usize> {
    x.ok_or_else(|| Error::Internal(format!("missing vertex: {what}")))
}

/// Adds `P_k(min S_k)` for each listed column.
fn add_min_paths(p: &mut Pieces, view: &View<'_>, cols: &[usize]) -> Result<()> {
    for &k in cols {
        p.path(view.path(k, min_s(view, k as u8)?))?;
    }
    Ok(())
}

fn with_a_neighbor(
    mut view: View<'_>,
    lay: &mut Layout,
    v: usize,
    a1: usize,
    cache: &mut ColumnDist,
    trace: &mut CubicAugmentTrace,
) -> Result<Option<VertexSet>> {
    let g = view.g;
    let n = g.n();
    let terms = view.lay.terminals;
    let x_parts = [Part::A(1), Part::A(2), Part::A(3), Part::S(1), Part::S(2), Part::S(3), Part::S(4)];
    let in_br = |view: &View<'_>, x: usize| matches!(view.part(x), Part::B(_) | Part::R);
    let touches_x = |view: &View<'_>, x: usize| g.neighbors(x).iter().any(|&u| x_parts.contains(&view.part(u)));

    // a path Q from v through B ∪ R to a vertex seeing X
    let q = {
        let vw = &view;
        let ok = |x: usize| x == v || in_br(vw, x);
        crate::graph::bfs_path_by(g, v, |x| ok(x) && touches_x(vw, x), ok)
    };
    if let Some(q) = q {
        let q = q.vertices().to_vec();
        trace.q_path = Some(q.clone());
        let w = *q.last().expect("nonempty");
        let cols: Vec<usize> =
            (1..4).filter(|&k| g.neighbors(w).iter().any(|&u| column(k).contains(&view.part(u)))).collect();
        let mut p = Pieces::new(n);
        p.add(&q).path(view.path(0, a1))?;
        match cols.len() {
            3 => {
                trace.branch = "w sees three columns";
                for k in 1..4 {
                    let a = need(nearest(&view, w, &column(k), cache), "column neighbor")?;
                    p.path(view.path(k, a))?;
                }
                return tree_out(g, &p, &terms, trace.branch);
            }
            2 => {
                trace.branch = "w sees two columns";
                let missing = (1..4).find(|k| !cols.contains(k)).expect("one column missing");
                view.swap(missing, 3);
                if view.size(Part::S(6)) == 0 {
                    view.swap(1, 2);
                }
                trace.symmetry = view.sym.perm;
                let s7 = need(view.min_of(Part::S(6)), "top of column 2")?;
                let a2 = need(nearest(&view, w, &column(1), cache), "column 1 neighbor")?;
                let a3 = need(nearest(&view, w, &column(2), cache), "column 2 neighbor")?;
                p.path(view.path(2, a3))?.add(&[s7]);
                add_min_paths(&mut p, &view, &[3])?;
                if g.has_edge(w, s7) {
                    p.path(view.path(1, a2))?;
                } else {
                    let s2 = if view.is(a2, Part::S(1)) { a2 } else { min_s(&view, 1)? };
                    let t2 = tree_covering_three_in(g, &allowed_col(&view, 1, &[w, s2]), view.terminal(1), w, s2)?;
                    p.tree(&t2);
                }
                return tree_out(g, &p, &terms, trace.branch);
            }
            1 => {
                view.swap(cols[0], 1);
                trace.symmetry = view.sym.perm;
                let a2 = need(nearest(&view, w, &column(1), cache), "column 1 neighbor")?;
                let s2 = if view.is(a2, Part::S(1)) { a2 } else { min_s(&view, 1)? };
                if let Some(s6) = q.iter().find_map(|&z| view.first_nbr(z, Part::S(5))) {
                    trace.branch = "Q sees the top of column 1";
                    let mut allowed = allowed_col(&view, 0, &q);
                    allowed.union_with(&allowed_col(&view, 1, &[s6]));
                    for s in view.members(Part::S(1)) {
                        allowed.insert(s);
                    }
                    let t6 = tree_covering_three_in(g, &allowed, view.terminal(0), view.terminal(1), s6)?;
                    let mut p = Pieces::new(n);
                    p.tree(&t6);
                    add_min_paths(&mut p, &view, &[2, 3])?;
                    return tree_out(g, &p, &terms, trace.branch);
                }
                add_min_paths(&mut p, &view, &[2, 3])?;
                let t2 = || tree_covering_three_in(g, &allowed_col(&view, 1, &[w, s2]), view.terminal(1), w, s2);
                if let Some(s5) = view.min_of(Part::S(4)) {
                    p.add(&[s5]);
                    if g.has_edge(w, s5) {
                        trace.branch = "w sees the top of column 0";
                        p.path(view.path(1, a2))?;
                    } else {
                        trace.branch = "top of column 0 joins three columns";
                        p.tree(&t2()?);
                    }
                    return tree_out(g, &p, &terms, trace.branch);
                }
                let hit = |z: usize| view.touches(z, Part::S(6)) || view.touches(z, Part::S(7));
                let Some(&u) = q.iter().find(|&&z| hit(z)) else {
                    trace.branch = "two tops join the columns";
                    let t6 = need(view.min_of(Part::S(6)), "top of column 2")?;
                    let t7 = need(view.min_of(Part::S(7)), "top of column 3")?;
                    p.add(&[t6, t7]).tree(&t2()?);
                    return tree_out(g, &p, &terms, trace.branch);
                };
                if !view.touches(u, Part::S(6)) {
                    view.swap(2, 3);
                    trace.symmetry = view.sym.perm;
                }
                let t7 = need(view.first_nbr(u, Part::S(6)), "top neighbor of u")?;
                let t6 = need(view.min_of(Part::S(5)), "top of column 1")?;
                let mut p = Pieces::new(n);
                p.path(view.path(0, a1))?.add(&[t6, t7]);
                add_min_paths(&mut p, &view, &[2, 3])?;
                if u != w {
                    trace.branch = "Q sees a far top before w";
                    let cut = q.iter().position(|&z| z == u).expect("u on Q");
                    p.add(&q[..=cut]);
                    add_min_paths(&mut p, &view, &[1])?;
                } else {
                    trace.branch = "w sees a far top";
                    p.add(&q).path(view.path(1, a2))?;
                }
                return tree_out(g, &p, &terms, trace.branch);
            }
            _ => {
                trace.branch = "w sees the top of column 0";
                let s5 = need(view.first_nbr(w, Part::S(4)), "top neighbor of w")?;
                p.add(&[s5]);
                add_min_paths(&mut p, &view, &[1, 2, 3])?;
                return tree_out(g, &p, &terms, trace.branch);
            }
        }
    }

    let far_tops = [Part::S(5), Part::S(6), Part::S(7)];
    let in_c = |view: &View<'_>, x: usize| far_tops.iter().all(|&t| view.is_complete_to_part(x, t));
    let sees_tops = |view: &View<'_>, x: usize| far_tops.iter().any(|&t| view.touches(x, t));
    let a0 = view.sym.to_actual(Part::A(0));
    let s0 = view.sym.to_actual(Part::S(0));
    let b0 = view.sym.to_actual(Part::B(0));
    let mut br = VertexSet::new(n);
    for x in 0..n {
        if in_br(&view, x) {
            br.insert(x);
        }
    }
    br.insert(v);
    let y = g.component_within(v, Some(&br));
    trace.y = y.to_vec();
    trace.complete_set = y.iter().filter(|&x| in_c(&view, x)).collect();

    if in_c(&view, v) {
        trace.branch = "v complete to the far tops";
        lay.part[v] = s0;
        for x in y.iter().filter(|&x| x != v) {
            lay.part[x] = b0;
        }
        trace.y2 = vec![v];
        trace.y3 = y.iter().filter(|&x| x != v).collect();
        return Ok(None);
    }
    if sees_tops(&view, v) {
        trace.q_path = Some(vec![v]);
        return claim_b(view, a1, &[v], trace);
    }
    let mut parent: HashMap<usize, usize> = HashMap::from([(v, v)]);
    let mut queue = VecDeque::from([v]);
    let mut y1 = vec![v];
    let mut y2 = Vec::new();
    while let Some(x) = queue.pop_front() {
        for &z in g.neighbors(x) {
            if !in_br(&view, z) || parent.contains_key(&z) {
                continue;
            }
            parent.insert(z, x);
            if sees_tops(&view, z) {
                if in_c(&view, z) {
                    y2.push(z);
                } else {
                    let q = trace_back_map(&parent, v, z);
                    trace.q_path = Some(q.clone());
                    return claim_b(view, a1, &q, trace);
                }
            } else {
                y1.push(z);
                queue.push_back(z);
            }
        }
    }
    trace.branch = "relabel Y1 into A, Y2 into S, Y3 into B";
    let seen: HashSet<usize> = y1.iter().chain(y2.iter()).copied().collect();
    let y3: Vec<usize> = y.iter().filter(|x| !seen.contains(x)).collect();
    for &x in &y1 {
        lay.part[x] = a0;
    }
    for &x in &y2 {
        lay.part[x] = s0;
    }
    for &x in &y3 {
        lay.part[x] = b0;
    }
    y1.sort_unstable();
    y2.sort_unstable();
    trace.y1 = y1;
    trace.y2 = y2;
    trace.y3 = y3;
    Ok(None)
}

/// `Q = v .. w` where `w` sees a far top but is not complete to them.
fn claim_b(view: View<'_>, a1: usize, q: &[usize], trace: &mut CubicAugmentTrace) -> Result<Option<VertexSet>> {
    let g = view.g;
    let w = *q.last().expect("nonempty");
    let nb: Vec<usize> = (1..4).filter(|&j| view.touches(w, top(j))).collect();
    let nn: Vec<usize> = (1..4).filter(|&j| !view.is_complete_to_part(w, top(j))).collect();
    let (j, k) = nb
        .iter()
        .flat_map(|&j| nn.iter().map(move |&k| (j, k)))
        .find(|(j, k)| j != k)
        .ok_or_else(|| Error::Internal(format!("no top pair for {w}")))?;
    let l = 6 - j - k;
    trace.branch = "w sees a far top partially";
    let tj = need(view.first_nbr(w, top(j)), "top neighbor")?;
    let tk = need(view.members(top(k)).into_iter().find(|&t| !g.has_edge(w, t)), "top non-neighbor")?;
    let mut p = Pieces::new(g.n());
    p.add(q).add(&[tj, tk]).path(view.path(0, a1))?;
    add_min_paths(&mut p, &view, &[j, k, l])?;
    tree_out(g, &p, &view.lay.terminals, trace.branch)
}

/// `v` has no neighbor in `A` and is complete to logical `S0, S1, S2`.
fn complete_to_three(
    view: View<'_>,
    lay: &mut Layout,
    v: usize,
    trace: &mut CubicAugmentTrace,
) -> Result<Option<VertexSet>> {
    let g = view.g;
    let b3 = Part::B(3);
    let ok = |x: usize| x == v || view.is(x, b3);
    let q = crate::graph::bfs_path_by(g, v, |x| ok(x) && view.touches(x, Part::S(3)), ok);
    if let Some(q) = q {
        trace.branch = "v complete to three bottoms, path to the fourth";
        let q = q.vertices().to_vec();
        trace.q_path = Some(q.clone());
        let w = *q.last().expect("nonempty");
        let s4 = need(view.first_nbr(w, Part::S(3)), "bottom neighbor")?;
        let mut p = Pieces::new(g.n());
        p.add(&q).path(view.path(3, s4))?;
        add_min_paths(&mut p, &view, &[0, 1, 2])?;
        return tree_out(g, &p, &view.lay.terminals, trace.branch);
    }
    trace.branch = "v joins the partner top of the fourth bottom";
    let mut allowed = view.lay.set_of(view.sym.to_actual(b3));
    allowed.insert(v);
    let y = g.component_within(v, Some(&allowed));
    for x in y.iter().filter(|&x| x != v) {
        lay.part[x] = Part::R;
    }
    lay.part[v] = view.sym.to_actual(Part::S(7));
    trace.y = y.to_vec();
    trace.y3 = y.iter().filter(|&x| x != v).collect();
    Ok(None)
}

/// `v` has no neighbor in `A` and misses at least two bottoms.
fn general(view: View<'_>, lay: &mut Layout, v: usize, trace: &mut CubicAugmentTrace) -> Result<Option<VertexSet>> {
    let g = view.g;
    let n = g.n();
    let terms = view.lay.terminals;
    let touched: Vec<usize> = (0..4).filter(|&i| view.touches(v, bottom(i))).collect();
    let mut p = Pieces::new(n);
    p.add(&[v]);
    match touched.len() {
        4 => {
            trace.branch = "v sees four bottoms";
            for i in 0..4 {
                p.path(view.path(i, need(view.first_nbr(v, bottom(i)), "bottom")?))?;
            }
            return tree_out(g, &p, &terms, trace.branch);
        }
        3 => {
            trace.branch = "v sees three bottoms";
            let d = (0..4).find(|i| !touched.contains(i)).expect("one untouched");
            let a = *touched
                .iter()
                .find(|&&i| !view.is_complete_to_part(v, bottom(i)))
                .ok_or_else(|| Error::Internal("v complete to three bottoms".into()))?;
            let rest: Vec<usize> = touched.iter().copied().filter(|&i| i != a).collect();
            let e = *rest
                .iter()
                .find(|&&i| view.size(top(i)) > 0)
                .ok_or_else(|| Error::Internal("two tops empty".into()))?;
            let t = need(view.min_of(top(e)), "top")?;
            let sa = need(view.members(bottom(a)).into_iter().find(|&s| !g.has_edge(v, s)), "non-neighbor")?;
            p.add(&[t]).path(view.path(a, sa))?;
            for &i in &rest {
                p.path(view.path(i, need(view.first_nbr(v, bottom(i)), "bottom")?))?;
            }
            add_min_paths(&mut p, &view, &[d])?;
            return tree_out(g, &p, &terms, trace.branch);
        }
        2 => {
            trace.branch = "v sees two bottoms";
            let (i, j) = (touched[0], touched[1]);
            let t = need(view.min_of(top(i)).or_else(|| view.min_of(top(j))), "top")?;
            p.add(&[t]);
            for c in [i, j] {
                p.path(view.path(c, need(view.first_nbr(v, bottom(c)), "bottom")?))?;
            }
            let others: Vec<usize> = (0..4).filter(|c| !touched.contains(c)).collect();
            add_min_paths(&mut p, &view, &others)?;
            return tree_out(g, &p, &terms, trace.branch);
        }
        1 => {
            let i = touched[0];
            if let Some(t) = view.first_nbr(v, top(i)) {
                trace.branch = "v sees a bottom and its partner top";
                p.add(&[t]).path(view.path(i, need(view.first_nbr(v, bottom(i)), "bottom")?))?;
                let others: Vec<usize> = (0..4).filter(|&c| c != i).collect();
                add_min_paths(&mut p, &view, &others)?;
                return tree_out(g, &p, &terms, trace.branch);
            }
        }
        _ => {}
    }

    let mut br = VertexSet::new(n);
    for x in 0..n {
        if matches!(view.part(x), Part::B(_) | Part::R) {
            br.insert(x);
        }
    }
    br.insert(v);
    let y = g.component_within(v, Some(&br));
    trace.y = y.to_vec();
    let members: Vec<usize> = y.to_vec();
    let touch = |c: usize| -> Vec<usize> {
        let p = Part::S(c as u8);
        members.iter().copied().filter(|&x| view.touches(x, p)).collect()
    };
    let classes: Vec<Vec<usize>> = (0..8).map(touch).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            pairs.push((i, j));
        }
    }
    for i in 0..4 {
        pairs.push((i, i + 4));
    }
    let mut best: Option<(usize, (usize, usize), Vec<usize>)> = None;
    for &(i, j) in &pairs {
        if classes[i].is_empty() || classes[j].is_empty() {
            continue;
        }
        if let Some(path) = multi_bfs(g, &classes[i], &classes[j], &y) {
            if best.as_ref().is_none_or(|b| path.len() < b.0) {
                best = Some((path.len(), (i, j), path));
            }
        }
    }
    let Some((_, (i, j), q)) = best else {
        let bottoms: Vec<usize> = (0..4).filter(|&c| !classes[c].is_empty()).collect();
        let target = match bottoms[..] {
            [] => {
                trace.branch = "Y sees no bottom: into R";
                Part::R
            }
            [c] => {
                trace.branch = "Y sees one bottom: into its B";
                view.sym.to_actual(Part::B(c as u8))
            }
            _ => return Err(Error::Internal("component meets two bottoms without a connecting path".into())),
        };
        for x in y.iter() {
            lay.part[x] = target;
        }
        return Ok(None);
    };
    trace.q_path = Some(q.clone());
    let (u, w) = (q[0], *q.last().expect("nonempty"));
    let mut p = Pieces::new(n);
    p.add(&q);
    if j < 4 {
        trace.branch = "path between two bottoms";
        let t = need(view.min_of(top(i)).or_else(|| view.min_of(top(j))), "top")?;
        p.add(&[t]);
        p.path(view.path(i, need(view.first_nbr(u, bottom(i)), "bottom")?))?;
        p.path(view.path(j, need(view.first_nbr(w, bottom(j)), "bottom")?))?;
        let others: Vec<usize> = (0..4).filter(|&c| c != i && c != j).collect();
        add_min_paths(&mut p, &view, &others)?;
    } else {
        trace.branch = "path from a bottom to its partner top";
        let t = need(view.first_nbr(w, top(i)), "top")?;
        p.add(&[t]);
        p.path(view.path(i, need(view.first_nbr(u, bottom(i)), "bottom")?))?;
        let others: Vec<usize> = (0..4).filter(|&c| c != i).collect();
        add_min_paths(&mut p, &view, &others)?;
    }
    tree_out(g, &p, &terms, trace.branch)
}

/// Shortest path inside `within` from a vertex of `from` to one of `to`.
fn multi_bfs(g: &Graph, from: &[usize], to: &[usize], within: &VertexSet) -> Option<Vec<usize>> {
    let target: HashSet<usize> = to.iter().copied().collect();
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &s in from {
        parent.insert(s, s);
        queue.push_back(s);
    }
    while let Some(x) = queue.pop_front() {
        if target.contains(&x) {
            let mut path = vec![x];
            let mut cur = x;
            while parent[&cur] != cur {
                cur = parent[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &z in g.neighbors(x) {
            if within.contains(z) && !parent.contains_key(&z) {
                parent.insert(z, x);
                queue.push_back(z);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `x_i = i`, `s_i = 4 + i` for the eight `S` sets: `x_i s_i` and
    /// `s_i s_{j+4}` for `j != i`.
    pub(crate) fn smallest() -> (Graph, CubicSplit) {
        let mut edges = Vec::new();
        for i in 0..4 {
            edges.push((i, 4 + i));
            for j in 0..4 {
                if i != j {
                    edges.push((4 + i, 8 + j));
                }
            }
        }
        let g = Graph::new(12, &edges).unwrap();
        let one = |v: usize| VertexSet::from_iter(12, [v]);
        let split = CubicSplit {
            a: std::array::from_fn(one),
            b: std::array::from_fn(|_| VertexSet::new(12)),
            s: std::array::from_fn(|i| one(4 + i)),
            r: VertexSet::new(12),
            terminals: [0, 1, 2, 3],
        };
        (g, split)
    }

    #[test]
    fn validator_examples() {
        let (g, split) = smallest();
        assert!(validate_cubic(&g, &split, &g.full_set()).is_empty());

        let g2 = g.extended(0, &[(4, 8)]).unwrap();
        let bad = validate_cubic(&g2, &split, &g2.full_set());
        assert!(bad.iter().any(|v| v.item == 8), "{bad:?}");

        let keep: Vec<usize> = (0..10).collect();
        let (h, _) = g.induced(&VertexSet::from_iter(12, keep));
        let mut cut = split.clone();
        cut.s[6] = VertexSet::new(10);
        cut.s[7] = VertexSet::new(10);
        for x in cut.a.iter_mut().chain(cut.b.iter_mut()).chain(cut.s.iter_mut()) {
            let vs = x.to_vec();
            *x = VertexSet::from_iter(10, vs);
        }
        cut.r = VertexSet::new(10);
        let bad = validate_cubic(&h, &cut, &h.full_set());
        assert!(bad.iter().any(|v| v.item == 6), "{bad:?}");
    }

    fn grow(g: &Graph, split: &CubicSplit, v: usize) -> (CubicOutcome, CubicAugmentTrace) {
        augment_cubic(g, split, &split.domain(), v).unwrap()
    }

    #[test]
    fn isolated_vertex_goes_to_r() {
        let (g, split) = smallest();
        let g = g.extended(1, &[]).unwrap();
        match grow(&g, &split, 12).0 {
            CubicOutcome::GrewCubic(s, _) => assert!(s.r.contains(12)),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn complete_to_three_joins_top() {
        let (g, split) = smallest();
        let g = g.extended(1, &[(12, 5), (12, 6), (12, 7)]).unwrap();
        match grow(&g, &split, 12).0 {
            CubicOutcome::GrewCubic(s, _) => assert!(s.s[4].contains(12)),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn terminal_and_partner_top_give_a_tree() {
        let (g, split) = smallest();
        let g = g.extended(1, &[(12, 0), (12, 8)]).unwrap();
        match grow(&g, &split, 12).0 {
            CubicOutcome::FoundTree(t) => assert!(t.is_valid(&g)),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn two_bottoms_give_a_tree() {
        let (g, split) = smallest();
        let g = g.extended(1, &[(12, 4), (12, 5)]).unwrap();
        match grow(&g, &split, 12).0 {
            CubicOutcome::FoundTree(t) => assert!(t.is_valid(&g)),
            o => panic!("{o:?}"),
        }
    }
}
