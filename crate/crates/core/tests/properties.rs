use fourtree::generators::{connect_components, gen_triangle_free, relabel_random};
use fourtree::graph::{parse_graph_text, write_graph_text, GraphFile};
use fourtree::{four_in_a_tree, tree_covering_three, Answer};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn answers_check_out(n in 4usize..40, p in 0.05f64..0.5, seed in any::<u64>(), q in any::<[u16; 4]>()) {
        let g = connect_components(&gen_triangle_free(n, p, seed));
        let y = q.map(|v| v as usize % n);
        let res = four_in_a_tree(&g, y).unwrap();
        match &res.answer {
            Answer::Tree(t) => prop_assert!(t.is_valid(&g)),
            Answer::NoTree(c) => prop_assert!(c.validate(res.working_graph(&g)).is_empty()),
        }
    }

    #[test]
    fn decision_survives_relabeling(n in 4usize..30, p in 0.05f64..0.5, seed in any::<u64>(), q in any::<[u16; 4]>()) {
        let g = gen_triangle_free(n, p, seed);
        let y = q.map(|v| v as usize % n);
        let (h, perm) = relabel_random(&g, seed ^ 1);
        let a = four_in_a_tree(&g, y).unwrap().has_tree();
        let b = four_in_a_tree(&h, y.map(|v| perm[v])).unwrap().has_tree();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn three_trees_are_minimal(n in 3usize..30, p in 0.05f64..0.5, seed in any::<u64>(), q in any::<[u16; 3]>()) {
        let g = connect_components(&gen_triangle_free(n, p, seed));
        let [a, b, c] = q.map(|v| v as usize % n);
        let t = tree_covering_three(&g, a, b, c).unwrap();
        prop_assert!(t.is_valid(&g));
        for v in t.vertices.iter().filter(|v| ![a, b, c].contains(v)) {
            let mut s = t.vertices.clone();
            s.remove(v);
            prop_assert!(!fourtree::graph::is_induced_tree(&g, &s).unwrap());
        }
    }

    #[test]
    fn text_round_trip(n in 1usize..30, p in 0.0f64..0.6, seed in any::<u64>()) {
        let file = GraphFile::new(gen_triangle_free(n, p, seed));
        let back = parse_graph_text(&write_graph_text(&file)).unwrap();
        prop_assert_eq!(back, file);
    }
}
