//! Random small graphs: the solver against exhaustive search.

use fourtree::cli::{fuzz, fuzz_case};
use fourtree::oracle::brute_force_tree;
use fourtree::{four_in_a_tree, Graph};

fn main() -> fourtree::Result<()> {
    let case = fuzz_case(3, 8, 8);
    let smallest = brute_force_tree(&case.graph, &case.y, None)?;
    println!("seed 3: queries {:?}, smallest tree {:?}", case.y, smallest.map(|t| t.to_vec()));

    let solver = |g: &Graph, y: [usize; 4]| Ok(four_in_a_tree(g, y)?.has_tree());
    let report = fuzz(2000, 5, 12, 0, &solver)?;
    println!("{}/{} agree", report.agree, report.total);
    assert!(report.first_mismatch.is_none());
    Ok(())
}
