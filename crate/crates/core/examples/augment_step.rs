//! One augmentation step: a fresh vertex joins a square structure.

use fourtree::generators::{gen_square_structure, SquareSizes};
use fourtree::square::{augment_square, SquareOutcome};

fn main() -> fourtree::Result<()> {
    let sizes = SquareSizes { a: [2, 1, 1, 1], s: [2, 1, 1, 1], r: 1 };
    let (g, _, split) = gen_square_structure(sizes, 0.5, 1)?;
    let dom = split.domain();
    let n = g.n();
    println!("A0 {:?}, S {:?}, R {:?}", split.a[0].to_vec(), split.s.each_ref().map(|s| s.to_vec()), split.r.to_vec());
    let candidates = [vec![], vec![1], vec![1, 7], vec![1, 8], vec![1, 9], vec![10], vec![5, 8], vec![1, 10]];
    for nb in candidates {
        let edges: Vec<_> = nb.iter().map(|&u| (u, n)).collect();
        let h = g.extended(1, &edges)?;
        let (out, trace) = augment_square(&h, &split, &dom, n)?;
        let what = match out {
            SquareOutcome::FoundTree(t) => format!("tree {:?}", t.to_vec()),
            SquareOutcome::BecameCubic(c, _) => format!("cubic, S sizes {:?}", c.s.each_ref().map(|s| s.len())),
            SquareOutcome::GrewSquare(s, _) => {
                let a = (0..4).find(|&i| s.a[i].contains(n)).map(|i| format!("A{i}"));
                let c = (0..4).find(|&i| s.s[i].contains(n)).map(|i| format!("S{i}"));
                let part = a.or(c).unwrap_or_else(|| "R".into());
                format!("square, v in {part}")
            }
        };
        println!("N(v) = {nb:?}: branch {}, {what}", trace.branch);
    }
    Ok(())
}
