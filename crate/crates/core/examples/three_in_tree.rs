//! Induced trees through three vertices of the Petersen graph.

use fourtree::three_tree::{decompose_claw, minimalize_tree};
use fourtree::{tree_covering_three, Graph};

fn main() -> fourtree::Result<()> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    let g = Graph::new(10, &edges)?;

    for (a, b, c) in [(0, 2, 4), (1, 6, 8), (0, 7, 8)] {
        let t = tree_covering_three(&g, a, b, c)?;
        assert!(t.is_valid(&g));
        assert_eq!(minimalize_tree(&g, &t), t);
        print!("{a} {b} {c}: tree {:?}", t.to_vec());
        let leaves = [a, b, c];
        match decompose_claw(&g, &t, a, b, c) {
            Ok(claw) => {
                let legs: Vec<_> = claw.legs.iter().map(|p| p.vertices().to_vec()).collect();
                println!(", claw at {} with legs {legs:?}", claw.center);
            }
            Err(_) => println!(", a path (one of {leaves:?} lies between the others)"),
        }
    }
    Ok(())
}
