//! A generated cubic structure, solved, checked, then tampered with.

use fourtree::certificate::Certificate;
use fourtree::generators::{gen_cubic_structure, CubicSizes};
use fourtree::{four_in_a_tree, Answer};

fn main() -> fourtree::Result<()> {
    let sizes = CubicSizes { a: [2, 1, 1, 1], b: [1, 0, 1, 0], s: [2, 1, 1, 1, 1, 1, 0, 1], r: 3 };
    let (g, t, split) = gen_cubic_structure(sizes, 0.5, 11)?;
    println!("n = {}, m = {}, terminals {:?}", g.n(), g.m(), t.x);

    let res = four_in_a_tree(&g, t.x)?;
    let Answer::NoTree(cert) = &res.answer else { unreachable!("cubic structures have no covering tree") };
    println!("solver: {} certificate, gadget used: {}", cert.kind(), res.working.is_some());
    assert!(cert.validate(res.working_graph(&g)).is_empty());

    let mut bad = split.clone();
    let v = bad.s[0].first().expect("S0 is nonempty");
    bad.s[0].remove(v);
    bad.r.insert(v);
    for problem in Certificate::Cubic(bad).validate(&g) {
        println!("tampered: {problem}");
    }
    Ok(())
}
