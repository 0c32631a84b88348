use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use semlab::corpus::random_cactus_spec;
use semlab::format::{parse_graph, write_graph, GraphFormat};
use semlab::{make_cactus, make_cycle, CactusSpec};

proptest! {
    #[test]
    fn cactus_degrees_sum_to_twice_size(seed in any::<u64>(), max_order in 3usize..=20) {
        let mut rng = StdRng::seed_from_u64(seed);
        let spec = random_cactus_spec(&mut rng, max_order);
        let g = make_cactus(&spec).unwrap();
        let degrees = g.degree_sequence();
        prop_assert_eq!(degrees.sum(), 2 * g.size());
        prop_assert_eq!(degrees.len(), g.order());
        prop_assert_eq!(g.order(), spec.order());
        prop_assert_eq!(g.size(), spec.size());
        prop_assert!(degrees.all_even());
        prop_assert_eq!(g.component_count(), 1);
        // cycle rank of a cactus of cycles is the number of cycles
        prop_assert_eq!(g.size() + 1 - g.order(), spec.cycles.len());

        for format in [GraphFormat::EdgeList, GraphFormat::Graph6] {
            let back = parse_graph(&write_graph(&g, format), format).unwrap();
            prop_assert_eq!(back.order(), g.order());
            let mut a = back.edges().to_vec();
            let mut b = g.edges().to_vec();
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn single_cycle_cactus_is_cycle(n in 3usize..40) {
        let g = make_cactus(&CactusSpec::new(vec![n], vec![])).unwrap();
        let c = make_cycle(n).unwrap();
        prop_assert_eq!((g.order(), g.size()), (c.order(), c.size()));
        prop_assert_eq!(g.degree_sequence(), c.degree_sequence());
    }
}
