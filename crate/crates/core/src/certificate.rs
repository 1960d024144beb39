//! Certificates: violations reported by the validators, the certificate
//! enum returned by the solver, and their JSON forms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cubic::{validate_cubic, CubicSplit};
use crate::error::{Error, Result};
use crate::graph::{is_connected_within, Graph, VertexSet};
use crate::square::{validate_square, SquareSplit};
use crate::structure::Part;

/// One failed definition item, with the vertices or edge that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub item: u8,
    pub witness: Vec<usize>,
    pub message: String,
}

impl Violation {
    pub fn new(item: u8, witness: Vec<usize>, message: impl Into<String>) -> Violation {
        Violation { item, witness, message: message.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "item {}: {}", self.item, self.message)
    }
}

/// Why no induced tree covers the terminals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Square(SquareSplit),
    Cubic(CubicSplit),
    /// `component` is a connected component holding some terminals but not all.
    Disconnected {
        component: VertexSet,
        terminals: [usize; 4],
    },
}

impl Certificate {
    pub fn terminals(&self) -> [usize; 4] {
        match self {
            Certificate::Square(s) => s.terminals,
            Certificate::Cubic(c) => c.terminals,
            Certificate::Disconnected { terminals, .. } => *terminals,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Square(_) => "square",
            Certificate::Cubic(_) => "cubic",
            Certificate::Disconnected { .. } => "disconnected",
        }
    }

    /// Checks the certificate over all of `V(g)`.
    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let all = g.full_set();
        match self {
            Certificate::Square(s) => validate_square(g, s, &all),
            Certificate::Cubic(c) => validate_cubic(g, c, &all),
            Certificate::Disconnected { component, terminals } => validate_disconnected(g, component, terminals),
        }
    }

    pub fn to_json(&self) -> CertificateJson {
        match self {
            Certificate::Square(s) => CertificateJson::Square {
                a: s.a.clone().map(|x| x.to_vec()),
                s: s.s.clone().map(|x| x.to_vec()),
                r: s.r.to_vec(),
                terminals: s.terminals,
            },
            Certificate::Cubic(c) => CertificateJson::Cubic {
                a: c.a.clone().map(|x| x.to_vec()),
                b: c.b.clone().map(|x| x.to_vec()),
                s: c.s.clone().map(|x| x.to_vec()),
                r: c.r.to_vec(),
                terminals: c.terminals,
            },
            Certificate::Disconnected { component, terminals } => {
                CertificateJson::Disconnected { component: component.to_vec(), terminals: *terminals }
            }
        }
    }

    /// Parses a JSON certificate, rejecting vertex ids outside `0..n`.
    pub fn from_json(json: &CertificateJson, n: usize) -> Result<Certificate> {
        let set = |vs: &[usize]| -> Result<VertexSet> {
            if let Some(&v) = vs.iter().find(|&&v| v >= n) {
                return Err(Error::Schema(format!("vertex {v} is not in a graph on {n} vertices")));
            }
            Ok(VertexSet::from_iter(n, vs.iter().copied()))
        };
        let sets4 = |xs: &[Vec<usize>; 4]| -> Result<[VertexSet; 4]> {
            Ok([set(&xs[0])?, set(&xs[1])?, set(&xs[2])?, set(&xs[3])?])
        };
        let terms = |t: &[usize; 4]| -> Result<[usize; 4]> {
            set(t)?;
            Ok(*t)
        };
        Ok(match json {
            CertificateJson::Square { a, s, r, terminals } => Certificate::Square(SquareSplit {
                a: sets4(a)?,
                s: sets4(s)?,
                r: set(r)?,
                terminals: terms(terminals)?,
            }),
            CertificateJson::Cubic { a, b, s, r, terminals } => {
                let mut tops = Vec::with_capacity(8);
                for x in s {
                    tops.push(set(x)?);
                }
                Certificate::Cubic(CubicSplit {
                    a: sets4(a)?,
                    b: sets4(b)?,
                    s: tops.try_into().expect("eight sets"),
                    r: set(r)?,
                    terminals: terms(terminals)?,
                })
            }
            CertificateJson::Disconnected { component, terminals } => {
                Certificate::Disconnected { component: set(component)?, terminals: terms(terminals)? }
            }
        })
    }
}

fn validate_disconnected(g: &Graph, component: &VertexSet, terminals: &[usize; 4]) -> Vec<Violation> {
    let mut out = Vec::new();
    if component.is_empty() {
        out.push(Violation::new(1, vec![], "component is empty"));
        return out;
    }
    for v in component.iter() {
        if let Some(&u) = g.neighbors(v).iter().find(|&&u| !component.contains(u)) {
            out.push(Violation::new(1, vec![v, u], format!("edge {v}-{u} leaves the component")));
            break;
        }
    }
    if !is_connected_within(g, component) {
        out.push(Violation::new(2, component.to_vec(), "component is not connected"));
    }
    let inside = terminals.iter().filter(|&&t| component.contains(t)).count();
    if inside == 0 || inside == 4 {
        out.push(Violation::new(3, terminals.to_vec(), "component does not separate the terminals"));
    }
    out
}

/// JSON certificate schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CertificateJson {
    Square {
        #[serde(rename = "A")]
        a: [Vec<usize>; 4],
        #[serde(rename = "S")]
        s: [Vec<usize>; 4],
        #[serde(rename = "R")]
        r: Vec<usize>,
        terminals: [usize; 4],
    },
    Cubic {
        #[serde(rename = "A")]
        a: [Vec<usize>; 4],
        #[serde(rename = "B")]
        b: [Vec<usize>; 4],
        #[serde(rename = "S")]
        s: [Vec<usize>; 8],
        #[serde(rename = "R")]
        r: Vec<usize>,
        terminals: [usize; 4],
    },
    Disconnected {
        component: Vec<usize>,
        terminals: [usize; 4],
    },
}

/// JSON form of a solver result. `queries` are the original query vertices,
/// so that a verifier can rebuild the gadgeted graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "answer")]
pub enum ResultJson {
    #[serde(rename = "tree")]
    Tree { vertices: Vec<usize>, queries: [usize; 4] },
    #[serde(rename = "no-tree")]
    NoTree { certificate: CertificateJson, gadgeted: bool, queries: [usize; 4] },
}

/// Part table built from explicit part lists, collecting item 1 and 2
/// violations on the way.
pub(crate) struct PartTable {
    pub part: Vec<Part>,
    pub size: std::collections::HashMap<Part, usize>,
}

impl PartTable {
    pub fn build(g: &Graph, domain: &VertexSet, groups: &[(Part, &VertexSet)], out: &mut Vec<Violation>) -> PartTable {
        let n = g.n();
        let mut part = vec![Part::Out; n];
        let mut size = std::collections::HashMap::new();
        for &(p, set) in groups {
            size.insert(p, set.len());
            for v in set.iter() {
                if v >= n {
                    out.push(Violation::new(1, vec![v], format!("vertex {v} is not in the graph")));
                } else if part[v] != Part::Out {
                    out.push(Violation::new(
                        2,
                        vec![v],
                        format!("vertex {v} is in both {} and {}", part_name(part[v]), part_name(p)),
                    ));
                } else {
                    part[v] = p;
                }
            }
        }
        for v in 0..n {
            let assigned = part[v] != Part::Out;
            if domain.contains(v) && !assigned {
                out.push(Violation::new(1, vec![v], format!("vertex {v} is in no part")));
            } else if !domain.contains(v) && assigned {
                out.push(Violation::new(1, vec![v], format!("vertex {v} is outside the domain")));
            }
        }
        PartTable { part, size }
    }

    pub fn size(&self, p: Part) -> usize {
        self.size.get(&p).copied().unwrap_or(0)
    }

    /// Item `item`: `x_i` in `A_i`, terminals distinct, each of degree one in
    /// the domain.
    pub fn check_terminals(&self, g: &Graph, terminals: &[usize; 4], item: u8, out: &mut Vec<Violation>) {
        for (i, &x) in terminals.iter().enumerate() {
            if x >= g.n() || self.part[x] != Part::A(i as u8) {
                out.push(Violation::new(item, vec![x], format!("terminal {x} is not in A{i}")));
                continue;
            }
            if terminals[..i].contains(&x) {
                out.push(Violation::new(item, vec![x], format!("terminal {x} is repeated")));
            }
            let deg = g.neighbors(x).iter().filter(|&&u| self.part[u].in_domain()).count();
            if deg != 1 {
                out.push(Violation::new(item, vec![x], format!("terminal {x} has degree {deg} in the domain")));
            }
        }
    }

    /// Items `N(A_i) = S_i` and `G[A_i]` connected.
    pub fn check_columns(&self, g: &Graph, n_item: u8, conn_item: u8, out: &mut Vec<Violation>) {
        for i in 0..4u8 {
            let mut a_set = VertexSet::new(g.n());
            for v in 0..g.n() {
                match self.part[v] {
                    Part::A(k) if k == i => {
                        a_set.insert(v);
                        for &u in g.neighbors(v) {
                            let p = self.part[u];
                            if p.in_domain() && p != Part::A(i) && p != Part::S(i) {
                                out.push(Violation::new(
                                    n_item,
                                    vec![v, u],
                                    format!("edge {v}-{u} puts {u} ({}) in N(A{i})", part_name(p)),
                                ));
                            }
                        }
                    }
                    Part::S(k) if k == i => {
                        if !g.neighbors(v).iter().any(|&u| self.part[u] == Part::A(i)) {
                            out.push(Violation::new(
                                n_item,
                                vec![v],
                                format!("vertex {v} of S{i} has no neighbor in A{i}"),
                            ));
                        }
                    }
                    _ => {}
                }
            }
            if !is_connected_within(g, &a_set) {
                out.push(Violation::new(conn_item, a_set.to_vec(), format!("G[A{i}] is not connected")));
            }
        }
    }

    /// `u` complete to part `p`: returns a missing partner if not.
    pub fn missing_partner(&self, g: &Graph, u: usize, p: Part) -> Option<usize> {
        let cnt = g.neighbors(u).iter().filter(|&&w| self.part[w] == p).count();
        if cnt == self.size(p) {
            return None;
        }
        (0..g.n()).find(|&w| self.part[w] == p && !g.has_edge(u, w))
    }
}

pub(crate) fn part_name(p: Part) -> String {
    match p {
        Part::Out => "outside".into(),
        Part::A(i) => format!("A{i}"),
        Part::B(i) => format!("B{i}"),
        Part::S(i) => format!("S{i}"),
        Part::R => "R".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let j = CertificateJson::Square {
            a: [vec![4], vec![5], vec![6], vec![7]],
            s: [vec![0], vec![1], vec![2], vec![3]],
            r: vec![],
            terminals: [4, 5, 6, 7],
        };
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.starts_with(r#"{"kind":"square","A":[[4],"#));
        let back: CertificateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert!(matches!(Certificate::from_json(&j, 7), Err(Error::Schema(_))));
        assert!(Certificate::from_json(&j, 8).is_ok());
    }

    #[test]
    fn disconnected_certificate() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let ok = Certificate::Disconnected { component: VertexSet::from_iter(4, [0, 1]), terminals: [0, 1, 2, 3] };
        assert!(ok.validate(&g).is_empty());
        let bad = Certificate::Disconnected { component: VertexSet::from_iter(4, [0]), terminals: [0, 1, 2, 3] };
        assert_eq!(bad.validate(&g)[0].item, 1);
    }
}
