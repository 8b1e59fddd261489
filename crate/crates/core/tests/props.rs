//! Property tests for structural invariants that should hold on random
//! inputs, not just the frozen examples.

use proptest::prelude::*;

use alpha_index::graph::{graph6_decode, graph6_encode, rotate_edges, Graph, RotationMove};
use alpha_index::spectral::{gamma_of, perron, perron_oracle};
use alpha_index::DEFAULT_TOLERANCE;

/// Random connected graph: a random recursive tree on `n` vertices plus
/// extra edges drawn from a bitmask over the vertex pairs.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<u64>(), n - 1),
                any::<u32>(),
            )
        })
        .prop_map(|(n, parent_seeds, edge_mask)| {
            let mut edges = Vec::new();
            for (i, seed) in parent_seeds.iter().enumerate() {
                let child = i + 1;
                edges.push(((*seed as usize) % child, child));
            }
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if edge_mask >> (bit % 32) & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("tree plus extra edges is a valid graph")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trips(g in connected_graph()) {
        let encoded = graph6_encode(&g);
        let decoded = graph6_decode(&encoded).unwrap();
        prop_assert_eq!(decoded, g);
    }

    #[test]
    fn index_lies_between_degree_bounds(g in connected_graph(), alpha in 0.0f64..0.95) {
        let result = perron(&g, alpha, DEFAULT_TOLERANCE).unwrap();
        let min_deg = g.min_degree() as f64;
        let max_deg = g.max_degree() as f64;
        prop_assert!(result.rho >= min_deg - 1e-9);
        prop_assert!(result.rho <= max_deg + 1e-9);
        if g.min_degree() == g.max_degree() {
            prop_assert!((result.rho - max_deg).abs() <= 1e-9);
        }
        let norm: f64 = result.perron.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assert!((norm - 1.0).abs() <= 1e-9);
        prop_assert!(result.perron.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn power_and_dense_routes_agree(g in connected_graph(), alpha in 0.0f64..0.95) {
        let fast = perron(&g, alpha, DEFAULT_TOLERANCE).unwrap();
        let dense = perron_oracle(&g, alpha).unwrap();
        prop_assert!((fast.rho - dense.rho).abs() <= 1e-9);
        for (a, b) in fast.perron.iter().zip(dense.perron.iter()) {
            prop_assert!((a - b).abs() <= 1e-7);
        }
    }

    #[test]
    fn gamma_satisfies_its_equation(rho in 2.0f64..6.0, alpha in 0.0f64..0.9) {
        let gamma = gamma_of(rho, alpha).unwrap();
        prop_assert!(gamma.value() >= 1.0);
        prop_assert!(gamma.characteristic_residual() <= 1e-9);
        prop_assert!((gamma.value() * gamma.reciprocal() - 1.0).abs() <= 1e-12);
        if rho > 2.0 + 1e-9 {
            prop_assert!(gamma.value() > 1.0);
        }
    }

    #[test]
    fn rotation_round_trips(g in connected_graph()) {
        // Move every eligible neighbor of `from` toward `to`, then move it
        // back; the double rotation must restore the original graph.
        let mut found = None;
        'outer: for from in g.vertices() {
            for to in g.vertices() {
                if from == to {
                    continue;
                }
                let moved: Vec<usize> = g
                    .neighbors(from)
                    .filter(|&w| w != to && !g.has_edge(w, to))
                    .collect();
                if !moved.is_empty() {
                    found = Some(RotationMove { from, to, moved });
                    break 'outer;
                }
            }
        }
        prop_assume!(found.is_some());
        let mv = found.unwrap();
        let rotated = rotate_edges(&g, &mv).unwrap();
        let reverse = RotationMove {
            from: mv.to,
            to: mv.from,
            moved: mv.moved.clone(),
        };
        let restored = rotate_edges(&rotated, &reverse).unwrap();
        prop_assert_eq!(restored, g);
    }
}
