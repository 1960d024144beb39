//! The 4-cycle has no induced tree through all of its vertices; the solver
//! returns a square certificate instead. A 5-path does.

use fourtree::{four_in_a_tree, Answer, Graph};

fn main() -> fourtree::Result<()> {
    let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let res = four_in_a_tree(&c4, [0, 1, 2, 3])?;
    let Answer::NoTree(cert) = &res.answer else { unreachable!("C4 has no such tree") };
    // the certificate refers to the graph with a pendant on each query
    let h = res.working_graph(&c4);
    assert!(cert.validate(h).is_empty());
    println!("C4: {} certificate", cert.kind());
    println!("{}", serde_json::to_string_pretty(&res.to_json())?);

    let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?;
    match four_in_a_tree(&p5, [0, 1, 3, 4])?.answer {
        Answer::Tree(t) => println!("P5: tree {:?}", t.to_vec()),
        Answer::NoTree(_) => unreachable!(),
    }
    Ok(())
}
