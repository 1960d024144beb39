use fourtree::generators::gen_triangle_free;
use fourtree::oracle::has_covering_tree;
use fourtree::{four_in_a_tree_with, Answer, SolveOptions};
use rand::{Rng, SeedableRng};

#[test]
fn random_small_graphs_agree_with_oracle() {
    let opts = SolveOptions { check_steps: true, ..Default::default() };
    for seed in 0..3000u64 {
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = r.gen_range(5..=12);
        let p = r.gen_range(0.15..0.6);
        let g = gen_triangle_free(n, p, seed);
        let y: [usize; 4] = std::array::from_fn(|_| r.gen_range(0..n));
        let res = four_in_a_tree_with(&g, y, opts).unwrap_or_else(|e| panic!("seed {seed}: {e} on {g:?} y={y:?}"));
        let expect = has_covering_tree(&g, &y).unwrap();
        assert_eq!(res.has_tree(), expect, "seed {seed}: {g:?} y={y:?}");
        if let Answer::Tree(t) = &res.answer {
            assert!(t.is_valid(&g));
        }
    }
}
