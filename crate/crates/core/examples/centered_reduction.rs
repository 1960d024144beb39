//! Induced cycles through two degree-2 vertices correspond to centered
//! trees through four terminals of the reduced instance.

use fourtree::oracle::{brute_force_centered_tree, brute_force_two_in_cycle};
use fourtree::reduction::{build_centered_instance, check_reduction};
use fourtree::Graph;

fn main() -> fourtree::Result<()> {
    let c6 = Graph::new(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>())?;
    // two squares glued at vertex 0
    let bowtie = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])?;
    for (name, g, x, y) in [("C6", &c6, 0, 3), ("two squares", &bowtie, 2, 5)] {
        let inst = build_centered_instance(g, x, y)?;
        let cycle = brute_force_two_in_cycle(g, x, y)?;
        let tree = brute_force_centered_tree(&inst.graph, &inst.terminals)?;
        println!(
            "{name}: cycle {:?}, centered tree {:?} (center {}, terminals {:?})",
            cycle.map(|c| c.to_vec()),
            tree.map(|t| t.to_vec()),
            inst.center,
            inst.terminals
        );
        assert!(check_reduction(g, x, y)?);
    }
    Ok(())
}
