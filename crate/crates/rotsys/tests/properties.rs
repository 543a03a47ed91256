//! Property suites over random graphs and random rotation systems.

use proptest::prelude::*;
use rotsys::graph::{self, goodman_total, Graph};
use rotsys::io;
use rotsys::{Dart, Embedding};

/// Deterministic shuffle so rotation systems derive from one seed.
fn shuffle<T>(items: &mut [T], seed: u64) {
    let mut state = seed | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for i in (1..items.len()).rev() {
        let j = (next() % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut at = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[at] {
                g.add_edge(u, v);
            }
            at += 1;
        }
    }
    g
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Random connected graph with a random rotation system.
fn arb_embedding() -> impl Strategy<Value = Embedding> {
    (2usize..=9, any::<u64>()).prop_flat_map(|(n, seed)| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = graph_from_bits(n, &bits);
            for v in 1..n {
                if g.neighbors(v).next().is_none() || !g.is_connected() {
                    g.add_edge(v - 1, v);
                }
            }
            let rotation: Vec<Vec<usize>> = (0..n)
                .map(|v| {
                    let mut row: Vec<usize> = g.neighbors(v).collect();
                    shuffle(&mut row, seed ^ (v as u64).wrapping_mul(0x9e3779b97f4a7c15));
                    row
                })
                .collect();
            Embedding::new(g, rotation).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph()) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn handshake_holds(g in arb_graph()) {
        prop_assert_eq!(g.degree_sequence().sum(), 2 * g.size());
    }

    #[test]
    fn goodman_identity_holds(g in arb_graph()) {
        let total = goodman_total(&g.degree_sequence(), g.order(), g.size()).unwrap();
        prop_assert_eq!(
            g.count_triangles() + g.complement().count_triangles(),
            total
        );
    }

    #[test]
    fn separator_witnesses_reverify(g in arb_graph()) {
        if !g.is_connected() {
            return Ok(());
        }
        let triangles = graph::list_separating_triangles(&g).unwrap();
        let cycles = graph::list_separating_4cycles(&g).unwrap();
        for w in triangles.iter().chain(cycles.iter()) {
            let mask = w.separator.iter().fold(0u64, |m, &v| m | 1 << v);
            let orders = g.component_orders_excluding(mask);
            prop_assert_eq!(&orders, &w.component_orders);
            prop_assert!(orders.len() >= 2);
            match w.kind {
                graph::SeparatorKind::Triangle => {
                    for i in 0..3 {
                        for j in i + 1..3 {
                            prop_assert!(g.has_edge(w.separator[i], w.separator[j]));
                        }
                    }
                }
                graph::SeparatorKind::CliqueFourCycle => {
                    for i in 0..4 {
                        for j in i + 1..4 {
                            prop_assert!(g.has_edge(w.separator[i], w.separator[j]));
                        }
                    }
                }
                graph::SeparatorKind::FourCycle => {}
            }
        }
    }

    #[test]
    fn face_walks_partition_the_darts(e in arb_embedding()) {
        let faces = e.trace_faces();
        prop_assert_eq!(faces.total_darts(), 2 * e.size());
        let mut darts: Vec<Dart> = faces.faces().iter().flatten().copied().collect();
        darts.sort();
        darts.dedup();
        prop_assert_eq!(darts.len(), 2 * e.size());
        for d in &darts {
            prop_assert!(e.graph().has_edge(d.tail, d.head));
        }
    }

    #[test]
    fn euler_parity_and_nonnegative_genus(e in arb_embedding()) {
        let n = e.order() as i64;
        let m = e.size() as i64;
        let f = e.trace_faces().face_count() as i64;
        prop_assert_eq!((2 - n + m - f).rem_euclid(2), 0);
        let genus = e.genus().unwrap();
        prop_assert_eq!(genus as i64, (2 - n + m - f) / 2);
    }

    #[test]
    fn reflection_preserves_genus_and_code(e in arb_embedding()) {
        let r = e.reflect();
        prop_assert_eq!(r.reflect(), e.clone());
        prop_assert_eq!(r.genus().unwrap(), e.genus().unwrap());
        prop_assert_eq!(r.canonical_code().unwrap(), e.canonical_code().unwrap());
    }

    #[test]
    fn canonical_code_is_relabeling_invariant(e in arb_embedding(), seed in any::<u64>()) {
        let n = e.order();
        let mut perm: Vec<usize> = (0..n).collect();
        shuffle(&mut perm, seed);
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            rot[perm[v]] = e.rotation(v).iter().map(|&w| perm[w]).collect();
        }
        let relabeled = Embedding::from_rotations(rot).unwrap();
        prop_assert_eq!(
            relabeled.canonical_code().unwrap(),
            e.canonical_code().unwrap()
        );
        // Rotating a cyclic list's starting point never changes the class.
        let mut rot2: Vec<Vec<usize>> =
            (0..n).map(|v| e.rotation(v).to_vec()).collect();
        for (v, row) in rot2.iter_mut().enumerate() {
            if !row.is_empty() {
                let by = (seed as usize ^ v) % row.len();
                row.rotate_left(by);
            }
        }
        let rotated = Embedding::new(e.graph().clone(), rot2).unwrap();
        prop_assert_eq!(
            rotated.canonical_code().unwrap(),
            e.canonical_code().unwrap()
        );
    }

    #[test]
    fn surftri_round_trip_is_exact(e in arb_embedding()) {
        let line = io::write_surftri_line(&e).unwrap();
        prop_assert_eq!(io::parse_surftri_line(&line).unwrap(), e);
    }

    #[test]
    fn planar_code_round_trip_is_exact(e in arb_embedding()) {
        let bytes = io::write_planar_code(std::slice::from_ref(&e));
        prop_assert_eq!(io::parse_planar_code(&bytes).unwrap(), vec![e]);
    }

    #[test]
    fn embedding_text_round_trip_is_exact(e in arb_embedding()) {
        let text = io::write_embedding_text(&e).unwrap();
        prop_assert_eq!(io::parse_embedding_text(&text).unwrap(), e);
    }
}
