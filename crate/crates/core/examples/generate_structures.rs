//! Generators: random structures in the text format, and exhaustive lists.

use fourtree::generators::{all_graphs, gen_square_structure, random_square_sizes};
use fourtree::graph::{write_graph_text, GraphFile};
use fourtree::oracle::has_covering_tree;

fn main() -> fourtree::Result<()> {
    let sizes = random_square_sizes(12, 5);
    let (g, t, split) = gen_square_structure(sizes, 0.3, 5)?;
    let mut file = GraphFile::new(g.clone());
    file.terminals = Some(t.x);
    for (i, &x) in t.x.iter().enumerate() {
        file.labels.insert(x, format!("x{i}"));
    }
    print!("{}", write_graph_text(&file));
    println!("# parts: S sizes {:?}, R size {}", split.s.each_ref().map(|s| s.len()), split.r.len());
    println!("# covering tree exists: {}", has_covering_tree(&g, &t.x)?);

    for n in 1..=8 {
        println!("n = {n}: {} connected triangle-free graphs", all_graphs(n, true)?.len());
    }
    Ok(())
}
