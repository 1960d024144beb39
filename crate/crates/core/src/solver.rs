//! The driver: gadget the query vertices into terminals, build a first
//! tree or square from a claw, then add the remaining vertices one at a time
//! until a tree appears or the structure covers the component.

use std::collections::BTreeSet;

use crate::certificate::{Certificate, CertificateJson, ResultJson};
use crate::cubic::{cubic_step, validate_cubic, CubicAugmentTrace, CubicSplit};
use crate::error::{Error, Result};
use crate::graph::{bfs_path_by, find_triangle, Graph, VertexSet};
use crate::square::{square_step, validate_square, SquareAugmentTrace, SquareSplit, SquareStep};
use crate::structure::{Layout, Part};
use crate::three_tree::{decompose_claw, tree_covering_three, tree_covering_three_in, InducedTree};

/// The four terminals of the working graph, and the query vertices they
/// hang from when a gadget was attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Terminals {
    pub x: [usize; 4],
    pub gadget: Option<[usize; 4]>,
}

/// Adds a pendant `n + i` to each `y[i]`.
pub fn attach_terminals(g: &Graph, y: [usize; 4]) -> Result<(Graph, Terminals)> {
    let n = g.n();
    if let Some(&v) = y.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { v, n });
    }
    let edges: Vec<(usize, usize)> = (0..4).map(|i| (y[i], n + i)).collect();
    let h = g.extended(4, &edges)?;
    Ok((h, Terminals { x: [n, n + 1, n + 2, n + 3], gadget: Some(y) }))
}

/// Removes the pendant terminals from a tree of the gadgeted graph.
pub fn strip_terminals(tree: &InducedTree, t: &Terminals) -> InducedTree {
    let Some(y) = t.gadget else { return tree.clone() };
    let mut set = tree.vertices.clone();
    for x in t.x {
        set.remove(x);
    }
    InducedTree::new(set, &y)
}

#[derive(Clone, Debug)]
pub enum Initial {
    Tree(InducedTree),
    Square(SquareSplit),
}

/// First step on a connected triangle-free graph whose terminals have
/// degree one: a claw over `x1, x2, x3`, then a path from `x4` to it.
pub fn initial_phase(g: &Graph, t: &Terminals) -> Result<Initial> {
    let [x1, x2, x3, x4] = t.x;
    let tree = tree_covering_three(g, x1, x2, x3)?;
    let claw = decompose_claw(g, &tree, x1, x2, x3)?;
    let c = claw.center;
    let on_t = &tree.vertices;
    let q = bfs_path_by(
        g,
        x4,
        |v| !on_t.contains(v) && g.neighbors(v).iter().any(|&u| on_t.contains(u)),
        |v| !on_t.contains(v),
    )
    .ok_or_else(|| Error::Disconnected(t.x.to_vec()))?;
    let q = q.vertices().to_vec();
    let w = *q.last().expect("nonempty");
    let legs: Vec<&[usize]> = claw.legs.iter().map(|p| p.vertices()).collect();
    let hit: Vec<Option<usize>> =
        legs.iter().map(|leg| (0..leg.len()).rev().find(|&i| g.has_edge(w, leg[i]))).collect();
    let n = g.n();
    let mut set = VertexSet::from_iter(n, q.iter().copied());
    let add = |set: &mut VertexSet, vs: &[usize]| vs.iter().for_each(|&v| set.insert(v));
    let hits: Vec<usize> = (0..3).filter(|&i| hit[i].is_some()).collect();
    let done = |set: VertexSet| -> Result<Initial> {
        let tree = InducedTree::new(set, &t.x);
        if tree.is_valid(g) {
            Ok(Initial::Tree(tree))
        } else {
            Err(Error::Internal(format!("first-step tree {:?} failed its check", tree.vertices)))
        }
    };
    match hits[..] {
        [_, _, _] => {
            for i in 0..3 {
                add(&mut set, &legs[i][hit[i].expect("hit")..]);
            }
            done(set)
        }
        [i] => {
            let allowed = VertexSet::from_iter(n, legs[i].iter().copied().chain([w]));
            let t1 = tree_covering_three_in(g, &allowed, w, c, t.x[i])?;
            add(&mut set, &t1.to_vec());
            for k in (0..3).filter(|&k| k != i) {
                add(&mut set, legs[k]);
            }
            done(set)
        }
        [i, j] => {
            let k = 3 - i - j;
            let (hi, hj) = (hit[i].expect("hit"), hit[j].expect("hit"));
            for (a, ha, b) in [(i, hi, j), (j, hj, i)] {
                if ha != 1 {
                    let allowed = VertexSet::from_iter(n, legs[b].iter().copied().chain([w]));
                    let t2 = tree_covering_three_in(g, &allowed, w, c, t.x[b])?;
                    add(&mut set, &legs[a][ha..]);
                    add(&mut set, &t2.to_vec());
                    add(&mut set, legs[k]);
                    return done(set);
                }
            }
            let part_set = |vs: &[usize]| VertexSet::from_iter(n, vs.iter().copied());
            let split = SquareSplit {
                a: [
                    part_set(&legs[i][2..]),
                    part_set(&legs[k][1..]),
                    part_set(&legs[j][2..]),
                    part_set(&q[..q.len() - 1]),
                ],
                s: [part_set(&[legs[i][1]]), part_set(&[c]), part_set(&[legs[j][1]]), part_set(&[w])],
                r: VertexSet::new(n),
                terminals: [t.x[i], t.x[k], t.x[j], x4],
            };
            Ok(Initial::Square(split))
        }
        _ => Err(Error::Internal("path from the fourth terminal sees no tree vertex".into())),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GadgetMode {
    /// Attach pendants unless the queries are already four distinct
    /// degree-one vertices.
    #[default]
    Auto,
    Always,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    pub gadget: GadgetMode,
    /// Validate the split after every augmentation, not only at the end.
    pub check_steps: bool,
}

#[derive(Clone, Debug)]
pub enum Answer {
    Tree(InducedTree),
    NoTree(Certificate),
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub answer: Answer,
    pub queries: [usize; 4],
    pub terminals: Terminals,
    /// The gadgeted graph the certificate refers to, if a gadget was used.
    pub working: Option<Graph>,
}

impl SolveResult {
    pub fn working_graph<'a>(&'a self, g: &'a Graph) -> &'a Graph {
        self.working.as_ref().unwrap_or(g)
    }

    pub fn has_tree(&self) -> bool {
        matches!(self.answer, Answer::Tree(_))
    }

    pub fn to_json(&self) -> ResultJson {
        match &self.answer {
            Answer::Tree(t) => ResultJson::Tree { vertices: t.to_vec(), queries: self.queries },
            Answer::NoTree(c) => {
                ResultJson::NoTree { certificate: c.to_json(), gadgeted: self.working.is_some(), queries: self.queries }
            }
        }
    }
}

/// Decides whether an induced tree of `g` contains `y[0..4]`.
pub fn four_in_a_tree(g: &Graph, y: [usize; 4]) -> Result<SolveResult> {
    four_in_a_tree_with(g, y, SolveOptions::default())
}

pub fn four_in_a_tree_with(g: &Graph, y: [usize; 4], opts: SolveOptions) -> Result<SolveResult> {
    if let Some(&v) = y.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    if let Some(t) = find_triangle(g) {
        return Err(Error::Triangle(t));
    }
    let native = opts.gadget == GadgetMode::Auto && (0..4).all(|i| g.degree(y[i]) == 1 && !y[..i].contains(&y[i]));
    let (working, terms) = if native {
        (None, Terminals { x: y, gadget: None })
    } else {
        let (h, t) = attach_terminals(g, y)?;
        (Some(h), t)
    };
    let h = working.as_ref().unwrap_or(g);
    let answer = solve_terminals(h, &terms, opts)?;
    let answer = match answer {
        Answer::Tree(t) => {
            let t = strip_terminals(&t, &terms);
            if !t.is_valid(g) {
                return Err(Error::Internal("stripped tree failed its check".into()));
            }
            Answer::Tree(t)
        }
        Answer::NoTree(c) => {
            let bad = c.validate(h);
            if !bad.is_empty() {
                return Err(Error::Internal(format!("final certificate is invalid: {}", Error::InvalidSplit(bad))));
            }
            Answer::NoTree(c)
        }
    };
    Ok(SolveResult { answer, queries: y, terminals: terms, working })
}

enum Mode {
    Square,
    Cubic,
}

/// The main loop on a graph whose terminals are distinct and of degree one.
fn solve_terminals(g: &Graph, t: &Terminals, opts: SolveOptions) -> Result<Answer> {
    let n = g.n();
    let comp = g.component(t.x[0]);
    if t.x.iter().any(|&x| !comp.contains(x)) {
        return Ok(Answer::NoTree(Certificate::Disconnected { component: comp, terminals: t.x }));
    }
    let (h, map) = g.induced(&comp);
    let mut back = vec![usize::MAX; n];
    for (new, &old) in map.iter().enumerate() {
        back[old] = new;
    }
    let ht = Terminals { x: t.x.map(|x| back[x]), gadget: None };
    let lift = |s: &VertexSet| VertexSet::from_iter(n, s.iter().map(|v| map[v]));

    let split = match initial_phase(&h, &ht)? {
        Initial::Tree(tree) => return Ok(Answer::Tree(InducedTree::new(lift(&tree.vertices), &t.x))),
        Initial::Square(s) => s,
    };
    let mut lay = split.layout(h.n());
    let mut mode = Mode::Square;
    let mut frontier = frontier_of(&h, &lay);
    let budget = h.n() * h.n() + 16;
    let mut steps = 0;
    while let Some(v) = frontier.pop_first() {
        steps += 1;
        if steps > budget {
            return Err(Error::Internal("augmentation budget exceeded".into()));
        }
        let tree = match mode {
            Mode::Square => match square_step(&h, &mut lay, v, &mut SquareAugmentTrace::default())? {
                SquareStep::Grew => None,
                SquareStep::Tree(tree) => Some(tree),
                SquareStep::Cubic(cl) => {
                    lay = cl;
                    mode = Mode::Cubic;
                    frontier = frontier_of(&h, &lay);
                    check_layout(&h, &lay, &mode, opts)?;
                    continue;
                }
            },
            Mode::Cubic => cubic_step(&h, &mut lay, v, &mut CubicAugmentTrace::default())?,
        };
        if let Some(tree) = tree {
            return Ok(Answer::Tree(InducedTree::new(lift(&tree), &t.x)));
        }
        for &u in h.neighbors(v) {
            if lay.part[u] == Part::Out {
                frontier.insert(u);
            }
        }
        check_layout(&h, &lay, &mode, opts)?;
    }
    if let Some(v) = (0..h.n()).find(|&v| lay.part[v] == Part::Out) {
        return Err(Error::Internal(format!("vertex {v} of the component was never placed")));
    }

    // lift back and put the other components into R
    let mut full = vec![Part::R; n];
    for (new, &old) in map.iter().enumerate() {
        full[old] = lay.part[new];
    }
    let big = Layout { part: full, terminals: lay.terminals.map(|x| map[x]) };
    Ok(Answer::NoTree(match mode {
        Mode::Square => Certificate::Square(SquareSplit::from_layout(&big)),
        Mode::Cubic => Certificate::Cubic(CubicSplit::from_layout(&big)),
    }))
}

fn frontier_of(g: &Graph, lay: &Layout) -> BTreeSet<usize> {
    (0..g.n())
        .filter(|&v| lay.part[v] == Part::Out && g.neighbors(v).iter().any(|&u| lay.part[u] != Part::Out))
        .collect()
}

fn check_layout(g: &Graph, lay: &Layout, mode: &Mode, opts: SolveOptions) -> Result<()> {
    if !opts.check_steps {
        return Ok(());
    }
    let d = lay.domain();
    let bad = match mode {
        Mode::Square => validate_square(g, &SquareSplit::from_layout(lay), &d),
        Mode::Cubic => validate_cubic(g, &CubicSplit::from_layout(lay), &d),
    };
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::Internal(format!("intermediate split is invalid: {}", Error::InvalidSplit(bad))))
    }
}

/// Parses a result JSON and checks it against `g`: trees are checked
/// directly, certificates over the graph rebuilt from the queries.
pub fn verify_result(g: &Graph, json: &ResultJson) -> Result<Vec<String>> {
    match json {
        ResultJson::Tree { vertices, queries } => {
            if let Some(&v) = vertices.iter().chain(queries.iter()).find(|&&v| v >= g.n()) {
                return Err(Error::Schema(format!("vertex {v} is not in the graph")));
            }
            let tree = InducedTree::new(VertexSet::from_iter(g.n(), vertices.iter().copied()), queries);
            Ok(if tree.is_valid(g) {
                vec![]
            } else {
                vec!["vertices do not induce a tree covering the queries".into()]
            })
        }
        ResultJson::NoTree { certificate, gadgeted, queries } => {
            let h = if *gadgeted { attach_terminals(g, *queries)?.0 } else { g.clone() };
            verify_certificate(&h, certificate)
        }
    }
}

pub fn verify_certificate(g: &Graph, json: &CertificateJson) -> Result<Vec<String>> {
    let c = Certificate::from_json(json, g.n())?;
    Ok(c.validate(g).iter().map(|v| v.to_string()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn gadget_and_strip() {
        let (h, t) = attach_terminals(&c4(), [0, 1, 2, 3]).unwrap();
        assert_eq!(h.n(), 8);
        assert_eq!(t.x, [4, 5, 6, 7]);
        let tree = InducedTree::new(VertexSet::from_iter(8, [0, 1, 4, 5]), &t.x);
        assert_eq!(strip_terminals(&tree, &t).to_vec(), vec![0, 1]);
    }

    #[test]
    fn star_is_a_tree() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = four_in_a_tree(&g, [1, 2, 3, 4]).unwrap();
        match r.answer {
            Answer::Tree(t) => assert_eq!(t.len(), 5),
            a => panic!("{a:?}"),
        }
        assert!(r.working.is_none());
    }

    #[test]
    fn path_is_a_tree() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let r = four_in_a_tree(&g, [0, 1, 3, 4]).unwrap();
        assert!(matches!(r.answer, Answer::Tree(ref t) if t.len() == 5));
    }

    #[test]
    fn square_certificate() {
        let r = four_in_a_tree(&c4(), [0, 1, 2, 3]).unwrap();
        match &r.answer {
            Answer::NoTree(c @ Certificate::Square(_)) => assert!(c.validate(r.working_graph(&c4())).is_empty()),
            a => panic!("{a:?}"),
        }
    }

    #[test]
    fn disconnected_and_triangles() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let r = four_in_a_tree(&g, [0, 1, 2, 3]).unwrap();
        assert!(matches!(r.answer, Answer::NoTree(Certificate::Disconnected { .. })));
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(four_in_a_tree(&k3, [0, 1, 2, 0]), Err(Error::Triangle(_))));
    }

    #[test]
    fn repeated_queries() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let r = four_in_a_tree(&g, [1, 1, 1, 1]).unwrap();
        assert!(matches!(r.answer, Answer::Tree(ref t) if t.to_vec() == vec![1]));
    }
}
