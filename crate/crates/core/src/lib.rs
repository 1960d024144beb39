//! Four-in-a-tree for triangle-free graphs, with certificates.
//!
//! Given a triangle-free graph and four vertices, [`four_in_a_tree`] returns
//! either an induced tree containing all four, or a partition of the
//! (gadgeted) graph into a square or cubic structure that rules such a tree
//! out. Both outputs can be checked independently of the solver.

pub mod certificate;
pub mod cli;
pub mod cubic;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod reduction;
pub mod solver;
pub mod square;
mod structure;
pub mod three_tree;

pub use certificate::{Certificate, Violation};
pub use error::{Error, Result};
pub use graph::{Graph, Path, VertexSet};
pub use solver::{four_in_a_tree, four_in_a_tree_with, Answer, GadgetMode, SolveOptions, SolveResult};
pub use three_tree::{tree_covering_three, InducedTree};
