//! Wall time against n*m, on random bipartite graphs and on shuffled
//! square structures where every vertex goes through augmentation.

use std::time::Instant;

use fourtree::cli::{bench, fit_exponent, BenchRow};
use fourtree::four_in_a_tree;
use fourtree::generators::{gen_square_structure, relabel_random, SquareSizes};

fn main() -> fourtree::Result<()> {
    let rows = bench(&[1000, 2000, 4000, 8000], 4, 0, 3)?;
    report("random bipartite, m = 4n", &rows);

    let mut rows = Vec::new();
    for k in [100, 200, 400, 800] {
        let sizes = SquareSizes { a: [2; 4], s: [2; 4], r: k };
        let (g, t, _) = gen_square_structure(sizes, 0.5, k as u64)?;
        let (g, perm) = relabel_random(&g, 1);
        let y = t.x.map(|x| perm[x]);
        let t0 = Instant::now();
        let res = four_in_a_tree(&g, y)?;
        assert!(!res.has_tree());
        rows.push(BenchRow { n: g.n(), m: g.m(), seconds: t0.elapsed().as_secs_f64() });
    }
    report("square structures", &rows);
    Ok(())
}

fn report(title: &str, rows: &[BenchRow]) {
    println!("{title}");
    for r in rows {
        println!("  n = {:6}  m = {:7}  {:9.3} ms", r.n, r.m, r.seconds * 1e3);
    }
    if let Some(e) = fit_exponent(rows) {
        println!("  exponent vs n*m: {e:.2}");
    }
}
