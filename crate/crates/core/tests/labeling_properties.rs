use num_rational::Ratio;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use semlab::corpus::{random_sem_instance, small_corpus};
use semlab::{edge_sums, extend_to_sem, is_extendable, valence_of, verify_sem, Graph, VertexLabeling};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=8).prop_flat_map(|p| {
        let pairs: Vec<(usize, usize)> = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 1..=pairs.len())
            .prop_map(move |edges| Graph::new(p, edges).unwrap())
    })
}

fn labeled_graph() -> impl Strategy<Value = (Graph, VertexLabeling)> {
    graph_strategy().prop_flat_map(|g| {
        let p = g.order() as u32;
        Just((1..=p).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(move |labels| (g.clone(), VertexLabeling::new(labels).unwrap()))
    })
}

proptest! {
    #[test]
    fn extension_round_trips((g, f) in labeled_graph()) {
        let sums = edge_sums(&g, &f);
        prop_assert_eq!(sums.len(), g.size());
        let p = g.order() as u32;
        prop_assert!(sums.sums().iter().all(|&s| (3..=2 * p - 1).contains(&s)));
        match extend_to_sem(&g, &f) {
            Ok(l) => {
                prop_assert!(is_extendable(&sums));
                prop_assert_eq!(verify_sem(&g, &l), Ok(()));
                prop_assert_eq!(l.valence, (g.order() + g.size()) as i64 + i64::from(sums.min().unwrap()));
                prop_assert_eq!(valence_of(&g, &f).unwrap(), Ratio::from_integer(l.valence));
            }
            Err(_) => prop_assert!(!is_extendable(&sums)),
        }
    }

    #[test]
    fn constructed_instances_extend(seed in any::<u64>(), p in 2usize..=9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (g, f) = random_sem_instance(&mut rng, p);
        let l = extend_to_sem(&g, &f).unwrap();
        prop_assert_eq!(verify_sem(&g, &l), Ok(()));
        let lo = (p + 1) as u32;
        let hi = (p + g.size()) as u32;
        prop_assert!(l.edge_labels.iter().all(|e| (lo..=hi).contains(&e.2)));
        prop_assert_eq!(valence_of(&g, &f).unwrap(), Ratio::from_integer(l.valence));
    }
}

fn for_each_bijection(p: usize, mut visit: impl FnMut(&VertexLabeling)) {
    fn rec(k: usize, labels: &mut Vec<u32>, visit: &mut dyn FnMut(&VertexLabeling)) {
        if k == labels.len() {
            visit(&VertexLabeling::new(labels.clone()).unwrap());
            return;
        }
        for i in k..labels.len() {
            labels.swap(k, i);
            rec(k + 1, labels, visit);
            labels.swap(k, i);
        }
    }
    let mut labels: Vec<u32> = (1..=p as u32).collect();
    rec(0, &mut labels, &mut visit);
}

#[test]
fn complement_duality_exhaustive() {
    for named in small_corpus(7, 15, 40, 11) {
        let g = &named.graph;
        if g.size() == 0 {
            continue;
        }
        let (p, q) = (g.order() as i64, g.size() as i64);
        for_each_bijection(g.order(), |f| {
            let dual = f.complement();
            let here = is_extendable(&edge_sums(g, f));
            assert_eq!(here, is_extendable(&edge_sums(g, &dual)), "{}", named.name);
            if here {
                let k = extend_to_sem(g, f).unwrap().valence;
                let k_dual = extend_to_sem(g, &dual).unwrap().valence;
                assert_eq!(k + k_dual, 4 * p + q + 3, "{}", named.name);
            }
        });
    }
}

#[test]
fn no_square_labeling_extends() {
    let g = semlab::make_cycle(4).unwrap();
    let mut tried = 0;
    for_each_bijection(4, |f| {
        tried += 1;
        assert!(extend_to_sem(&g, f).is_err());
    });
    assert_eq!(tried, 24);
}
