//! Reproducible test corpora: the bug family grid and seeded random
//! connected graphs, with and without attached pendent paths.
//!
//! Everything here is deterministic given the seed, so suite reports can
//! be reproduced from the parameters they record.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{attach_paths_same_root, bug, prufer_decode, Bug, Graph, PendentPathSpec};

/// Seed used by suites and the command line when none is given.
pub const DEFAULT_SEED: u64 = 0xA1FA_1DE5;

/// The bug grid with clique sizes `3..=max_clique` and path sizes
/// `1..=max_path` on both sides, skipping the degenerate shape whose both
/// paths are single vertices (it has no pendent path to check).
pub fn bug_corpus(max_clique: usize, max_path: usize) -> Vec<Bug> {
    let mut graphs = Vec::new();
    for p in 3..=max_clique {
        for q in 1..=max_path {
            for r in 1..=max_path {
                if q == 1 && r == 1 {
                    continue;
                }
                graphs.push(bug(p, q, r).expect("grid parameters are valid"));
            }
        }
    }
    graphs
}

fn random_tree(rng: &mut ChaCha8Rng, order: usize) -> Graph {
    if order == 2 {
        return Graph::from_edges(2, &[(0, 1)]).expect("an edge is a valid graph");
    }
    let code: Vec<usize> = (0..order - 2).map(|_| rng.gen_range(0..order)).collect();
    prufer_decode(order, &code)
}

fn sprinkle_edges(rng: &mut ChaCha8Rng, g: &Graph, probability: f64, force_cycle: bool) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut added = false;
    let mut skipped = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.has_edge(u, v) {
                continue;
            }
            if rng.gen_bool(probability) {
                edges.push((u, v));
                added = true;
            } else {
                skipped.push((u, v));
            }
        }
    }
    if force_cycle && !added && !skipped.is_empty() {
        edges.push(skipped[rng.gen_range(0..skipped.len())]);
    }
    Graph::from_edges(g.order(), &edges).expect("adding edges keeps the graph valid")
}

/// `count` random connected graphs with orders in `min_order..=max_order`:
/// a uniform random labeled tree plus each non-tree edge independently
/// with probability 0.35.
pub fn seeded_connected_graphs(
    count: usize,
    min_order: usize,
    max_order: usize,
    seed: u64,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let order = rng.gen_range(min_order..=max_order);
            let tree = random_tree(&mut rng, order);
            sprinkle_edges(&mut rng, &tree, 0.35, false)
        })
        .collect()
}

/// `count` random connected graphs, each carrying one pendent path.
///
/// The base has order `4..=8` and always contains a cycle, so its
/// alpha-index is at least 2 for every alpha in `[0, 1)`; the attached
/// path adds `1..=8` new vertices at a random root.
pub fn seeded_pendent_instances(count: usize, seed: u64) -> Vec<(Graph, PendentPathSpec)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let order = rng.gen_range(4..=8);
            let tree = random_tree(&mut rng, order);
            let base = sprinkle_edges(&mut rng, &tree, 0.3, true);
            let root = rng.gen_range(0..order);
            let new_vertices = rng.gen_range(1..=8);
            let g = attach_paths_same_root(&base, root, new_vertices + 1, 1)
                .expect("attachment parameters are valid");
            let mut vertices = vec![root];
            vertices.extend(order..order + new_vertices);
            let path = PendentPathSpec::new(vertices).expect("chain is a valid path spec");
            (g, path)
        })
        .collect()
}
