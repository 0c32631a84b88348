//! Seeded generators for test corpora: random simple graphs, random cacti
//! and graphs built around a known extendable labeling.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::graph::{make_cactus, make_cycle, make_two_cycle, Attachment, CactusSpec, Graph};
use crate::labeling::VertexLabeling;

/// Erdős–Rényi style graph: each pair is an edge with probability `density`.
pub fn random_graph<R: Rng>(rng: &mut R, p: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..p {
        for v in u + 1..p {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(p, edges).expect("pairs are distinct")
}

/// A random cactus of cycles with order at most `max_order` (at least 3).
pub fn random_cactus_spec<R: Rng>(rng: &mut R, max_order: usize) -> CactusSpec {
    let mut cycles = vec![rng.gen_range(3..=max_order.max(3))];
    let mut attachments = Vec::new();
    let mut order = cycles[0];
    loop {
        let room = max_order.saturating_sub(order);
        if room < 2 || rng.gen_bool(0.3) {
            break;
        }
        let len = rng.gen_range(3..=room + 1);
        let cycle = rng.gen_range(0..cycles.len());
        let position = rng.gen_range(0..cycles[cycle]);
        cycles.push(len);
        attachments.push(Attachment { cycle, position });
        order += len - 1;
    }
    CactusSpec::new(cycles, attachments)
}

/// A graph on `p` vertices together with a vertex labeling whose edge sums
/// are `q` distinct consecutive integers, `q` drawn at random.
pub fn random_sem_instance<R: Rng>(rng: &mut R, p: usize) -> (Graph, VertexLabeling) {
    assert!(p >= 2);
    let mut labels: Vec<u32> = (1..=p as u32).collect();
    labels.shuffle(rng);
    let mut vertex_of = vec![0; p + 1];
    for (v, &l) in labels.iter().enumerate() {
        vertex_of[l as usize] = v;
    }

    let p32 = p as u32;
    let q_max = 2 * p32 - 3;
    let q = rng.gen_range(1..=q_max);
    let lo = rng.gen_range(3..=2 * p32 - q);
    let edges = (lo..lo + q).map(|s| {
        // pairs a < b with a + b = s and both in 1..=p
        let a_lo = s.saturating_sub(p32).max(1);
        let a_hi = (s - 1) / 2;
        let a = rng.gen_range(a_lo..=a_hi);
        (vertex_of[a as usize], vertex_of[(s - a) as usize])
    });
    let g = Graph::new(p, edges.collect::<Vec<_>>()).expect("distinct sums give distinct edges");
    (g, VertexLabeling::new(labels).expect("shuffled identity"))
}

/// A named graph in a corpus.
#[derive(Clone, Debug)]
pub struct Named {
    pub name: String,
    pub graph: Graph,
}

/// Cycles, two-cycle graphs, random cacti and random simple graphs, all of
/// order at most `max_order`.
pub fn small_corpus(max_order: usize, random_cacti: usize, random_graphs: usize, seed: u64) -> Vec<Named> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 3..=max_order {
        out.push(Named {
            name: format!("C{n}"),
            graph: make_cycle(n).expect("n >= 3"),
        });
    }
    for m in 3..=max_order {
        for n in m..=max_order {
            if m + n - 1 <= max_order {
                out.push(Named {
                    name: format!("C({m},{n})"),
                    graph: make_two_cycle(m, n).expect("m, n >= 3"),
                });
            }
        }
    }
    for _ in 0..random_cacti {
        let spec = random_cactus_spec(&mut rng, max_order);
        out.push(Named {
            name: format!("cactus[{spec}]"),
            graph: make_cactus(&spec).expect("generated spec is valid"),
        });
    }
    for i in 0..random_graphs {
        let p = rng.gen_range(2..=max_order);
        let density = rng.gen_range(0.15..0.7);
        out.push(Named {
            name: format!("random#{i}(p={p})"),
            graph: random_graph(&mut rng, p, density),
        });
    }
    out
}
