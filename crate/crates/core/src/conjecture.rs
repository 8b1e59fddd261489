//! Empirical scans for the path-balancing conjectures and the open
//! reversal question on trees.
//!
//! Each scan walks the unbalancing chain `(p, q) -> (p-1, q+1)` for every
//! split budget and records whether balancing increased the alpha-index
//! (`Consistent` with the conjectured direction), decreased it
//! (`Reversed`), or stayed inside the epsilon band (`Indeterminate`).
//! Any record that is not consistent on the power-iteration values is
//! re-solved with the dense eigensolver before classification, so a
//! reported reversal is never a solver artifact; the recorded `lhs` and
//! `rhs` stay the power-iteration values.
//!
//! Scans report, they do not judge: a `Reversed` record outside the
//! proved zone is a finding, not an error.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    attach_paths_same_root, attach_paths_two_roots, complete, complete_minus_edge, cycle,
    enumerate_trees, graph6_encode, Graph, GraphError,
};
use crate::spectral::{perron, perron_oracle, SpectralError, DEFAULT_TOLERANCE};

/// Largest split budget used by the standard scans.
pub const DEFAULT_SPLIT_BUDGET: usize = 8;

/// Identifier for the single-root balancing conjecture.
pub const SAME_ROOT_CONJECTURE: &str = "same_root_balance";

/// Identifier for the adjacent-roots balancing conjecture.
pub const ADJACENT_ROOTS_CONJECTURE: &str = "adjacent_roots_balance";

/// Identifier for the open question on nonadjacent roots.
pub const NONADJACENT_QUESTION: &str = "nonadjacent_roots_balance";

/// Errors from conjecture scans.
#[derive(Debug, Error)]
pub enum ScanError {
    #[error("precondition unmet: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Direction of one balancing step relative to the conjectured order.
#[derive(Clone, Copy, Debug, Eq, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanDirection {
    Consistent,
    Reversed,
    Indeterminate,
}

/// One balancing-step observation.
///
/// `lhs` is the alpha-index of the less balanced attachment `(p, q)` and
/// `rhs` that of the more balanced `(p-1, q+1)`; the conjectured order is
/// `lhs < rhs`. `proved_zone` marks parameter regions already covered by
/// a theorem, where a reversal would contradict proved results rather
/// than settle an open question.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRecord {
    pub conjecture: &'static str,
    pub base_graph: String,
    pub root_u: usize,
    pub root_v: Option<usize>,
    pub p: usize,
    pub q: usize,
    pub alpha: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub direction: ScanDirection,
    pub proved_zone: bool,
}

fn classify(margin: f64, epsilon: f64) -> ScanDirection {
    if margin >= epsilon {
        ScanDirection::Consistent
    } else if margin <= -epsilon {
        ScanDirection::Reversed
    } else {
        ScanDirection::Indeterminate
    }
}

fn check_root(g: &Graph, label: &str, v: usize) -> Result<(), ScanError> {
    if v >= g.order() {
        return Err(ScanError::Precondition(format!(
            "{label} {v} is outside a graph of order {}",
            g.order()
        )));
    }
    Ok(())
}

fn check_budget(g: &Graph, max_budget: usize) -> Result<(), ScanError> {
    if g.order() + max_budget.saturating_sub(2) > crate::graph::MAX_ORDER {
        return Err(ScanError::Precondition(format!(
            "budget {max_budget} would grow a base of order {} past {} vertices",
            g.order(),
            crate::graph::MAX_ORDER
        )));
    }
    Ok(())
}

type RhoMemo = HashMap<(usize, usize, u64), f64>;

fn split_rho(
    memo: &mut RhoMemo,
    attach: &dyn Fn(usize, usize) -> Result<Graph, GraphError>,
    p: usize,
    q: usize,
    alpha: f64,
    oracle: bool,
) -> Result<f64, ScanError> {
    let key = (p, q, alpha.to_bits());
    if !oracle {
        if let Some(&value) = memo.get(&key) {
            return Ok(value);
        }
    }
    let attached = attach(p, q)?;
    let value = if oracle {
        perron_oracle(&attached, alpha)?.rho
    } else {
        perron(&attached, alpha, DEFAULT_TOLERANCE)?.rho
    };
    if !oracle {
        memo.insert(key, value);
    }
    Ok(value)
}

#[allow(clippy::too_many_arguments)]
fn scan_chain(
    conjecture: &'static str,
    base: &Graph,
    root_u: usize,
    root_v: Option<usize>,
    attach: &dyn Fn(usize, usize) -> Result<Graph, GraphError>,
    max_budget: usize,
    alphas: &[f64],
    epsilon: f64,
    proved_zone: &dyn Fn(f64, f64) -> bool,
) -> Result<Vec<ScanRecord>, ScanError> {
    let base_graph = graph6_encode(base);
    let mut memo = RhoMemo::new();
    let mut records = Vec::new();
    for split in 4..=max_budget {
        for q in 1..=(split - 2) / 2 {
            let p = split - q;
            for &alpha in alphas {
                let lhs = split_rho(&mut memo, attach, p, q, alpha, false)?;
                let rhs = split_rho(&mut memo, attach, p - 1, q + 1, alpha, false)?;
                let mut direction = classify(rhs - lhs, epsilon);
                if direction != ScanDirection::Consistent {
                    let oracle_lhs = split_rho(&mut memo, attach, p, q, alpha, true)?;
                    let oracle_rhs = split_rho(&mut memo, attach, p - 1, q + 1, alpha, true)?;
                    direction = classify(oracle_rhs - oracle_lhs, epsilon);
                }
                records.push(ScanRecord {
                    conjecture,
                    base_graph: base_graph.clone(),
                    root_u,
                    root_v,
                    p,
                    q,
                    alpha,
                    lhs,
                    rhs,
                    direction,
                    proved_zone: proved_zone(alpha, lhs),
                });
            }
        }
    }
    Ok(records)
}

/// Scans the balancing chain for two pendent paths at one root.
///
/// The conjectured direction is that every balancing step increases the
/// alpha-index. Steps at `alpha` 0 or 1/2, or with an index of at least
/// 9/4, lie in the proved zone.
pub fn scan_same_root_balance(
    g: &Graph,
    u: usize,
    max_budget: usize,
    alphas: &[f64],
    epsilon: f64,
) -> Result<Vec<ScanRecord>, ScanError> {
    check_root(g, "root", u)?;
    check_budget(g, max_budget)?;
    let attach = |p: usize, q: usize| attach_paths_same_root(g, u, p, q);
    let proved = |alpha: f64, lhs: f64| alpha == 0.0 || alpha == 0.5 || lhs >= 2.25;
    scan_chain(
        SAME_ROOT_CONJECTURE,
        g,
        u,
        None,
        &attach,
        max_budget,
        alphas,
        epsilon,
        &proved,
    )
}

/// Scans the balancing chain for pendent paths at two adjacent roots.
///
/// Both roots must have further neighbors: attaching the split paths to
/// the two ends of a bare edge produces the same path graph for every
/// split, so such bases carry no signal. Steps at `alpha` 0 or 1/2 lie in
/// the proved zone.
pub fn scan_adjacent_roots_balance(
    g: &Graph,
    u: usize,
    v: usize,
    max_budget: usize,
    alphas: &[f64],
    epsilon: f64,
) -> Result<Vec<ScanRecord>, ScanError> {
    check_root(g, "first root", u)?;
    check_root(g, "second root", v)?;
    if u == v {
        return Err(ScanError::Precondition(
            "the two roots must be distinct vertices".to_string(),
        ));
    }
    if !g.has_edge(u, v) {
        return Err(ScanError::Precondition(format!(
            "roots {u} and {v} must be adjacent"
        )));
    }
    if g.degree(u) < 2 || g.degree(v) < 2 {
        return Err(ScanError::Precondition(format!(
            "roots {u} and {v} must both have degree at least 2; attaching the split \
             paths to the two ends of a bare edge yields the same path for every split"
        )));
    }
    check_budget(g, max_budget)?;
    let attach = |p: usize, q: usize| attach_paths_two_roots(g, u, v, p, q);
    let proved = |alpha: f64, _lhs: f64| alpha == 0.0 || alpha == 0.5;
    scan_chain(
        ADJACENT_ROOTS_CONJECTURE,
        g,
        u,
        Some(v),
        &attach,
        max_budget,
        alphas,
        epsilon,
        &proved,
    )
}

/// Scans every tree up to `max_tree_order` for balancing reversals at
/// nonadjacent roots.
///
/// Iterates isomorphism classes of trees, every ordered pair of
/// nonadjacent vertices that both have degree at least 2, and the full
/// balancing chain up to `max_budget`. Nothing here is covered by a
/// theorem, so `proved_zone` is false on every record; `Reversed` records
/// are the interesting output.
pub fn search_nonadjacent_reversal(
    max_tree_order: usize,
    max_budget: usize,
    alphas: &[f64],
    epsilon: f64,
) -> Result<Vec<ScanRecord>, ScanError> {
    if !(2..=9).contains(&max_tree_order) {
        return Err(ScanError::Precondition(format!(
            "tree order limit must lie in 2..=9, got {max_tree_order}"
        )));
    }
    let mut records = Vec::new();
    for order in 2..=max_tree_order {
        for tree in enumerate_trees(order, true)? {
            check_budget(&tree, max_budget)?;
            for u in tree.vertices() {
                if tree.degree(u) < 2 {
                    continue;
                }
                for v in tree.vertices() {
                    if v == u || tree.degree(v) < 2 || tree.has_edge(u, v) {
                        continue;
                    }
                    let attach = |p: usize, q: usize| attach_paths_two_roots(&tree, u, v, p, q);
                    let proved = |_alpha: f64, _lhs: f64| false;
                    records.extend(scan_chain(
                        NONADJACENT_QUESTION,
                        &tree,
                        u,
                        Some(v),
                        &attach,
                        max_budget,
                        alphas,
                        epsilon,
                        &proved,
                    )?);
                }
            }
        }
    }
    Ok(records)
}

/// Fixed base/root pairs for the single-root scan.
pub fn same_root_standard_corpus() -> Vec<(Graph, usize)> {
    vec![
        (complete(3).expect("valid order"), 0),
        (complete(4).expect("valid order"), 0),
        (cycle(5).expect("valid order"), 0),
        (complete_minus_edge(4).expect("valid order"), 0),
    ]
}

/// Fixed base/root pairs for the adjacent-roots scan.
pub fn adjacent_roots_standard_corpus() -> Vec<(Graph, usize, usize)> {
    vec![
        (cycle(4).expect("valid order"), 0, 1),
        (cycle(5).expect("valid order"), 0, 1),
        (complete(4).expect("valid order"), 0, 1),
        (complete_minus_edge(4).expect("valid order"), 2, 3),
    ]
}
