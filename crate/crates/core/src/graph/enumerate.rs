//! Exhaustive enumeration of connected graphs and trees at desk scale.
//!
//! Connected graphs are generated by walking every upper-triangle edge mask
//! in ascending order; trees come from Pruefer sequences in ascending
//! lexicographic order. Both streams can deduplicate to one representative
//! per isomorphism class (the first graph of each class in stream order),
//! so the output order is deterministic either way.

use std::collections::HashMap;

use super::iso::{class_signature, iso_unchecked};
use super::{Graph, GraphError};

/// Default enumeration order limit (2.1M edge masks at order 7).
pub const MAX_ENUMERATION_ORDER: usize = 7;
/// Order limit with the explicit opt-in (268M edge masks at order 8).
pub const MAX_ENUMERATION_ORDER_WITH_OVERRIDE: usize = 8;
/// Largest order for tree enumeration (9^7 Pruefer sequences).
pub const MAX_TREE_ENUMERATION_ORDER: usize = 9;

/// Options for [`enumerate_connected`].
#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    /// Yield one representative per isomorphism class instead of every
    /// labeled graph.
    pub deduplicate: bool,
    /// Raise the order limit from 7 to 8.
    pub allow_order_eight: bool,
}

/// Pairs `(i, j)` with `i < j` in the fixed mask-bit order: bit `t` of an
/// edge mask corresponds to the `t`-th pair of this sequence, column-major
/// over the upper triangle, matching the graph6 bit layout.
fn pair_of_bit(t: usize) -> (usize, usize) {
    let mut j = 1;
    let mut offset = 0;
    while offset + j <= t {
        offset += j;
        j += 1;
    }
    (t - offset, j)
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("enumeration orders are within range");
    let mut rest = mask;
    while rest != 0 {
        let t = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (i, j) = pair_of_bit(t);
        g.insert_edge(i, j);
    }
    g
}

struct ClassDedup {
    representatives: Vec<Graph>,
    buckets: HashMap<u64, Vec<usize>>,
}

impl ClassDedup {
    fn new() -> Self {
        ClassDedup {
            representatives: Vec::new(),
            buckets: HashMap::new(),
        }
    }

    /// Records the graph; returns true when it starts a new class.
    fn admit(&mut self, g: &Graph) -> bool {
        let signature = class_signature(g);
        let bucket = self.buckets.entry(signature).or_default();
        if bucket
            .iter()
            .any(|&idx| iso_unchecked(&self.representatives[idx], g))
        {
            return false;
        }
        bucket.push(self.representatives.len());
        self.representatives.push(g.clone());
        true
    }
}

/// Streams connected graphs of order `n` in ascending edge-mask order.
pub fn enumerate_connected(
    n: usize,
    options: EnumerateOptions,
) -> Result<ConnectedGraphIter, GraphError> {
    let limit = if options.allow_order_eight {
        MAX_ENUMERATION_ORDER_WITH_OVERRIDE
    } else {
        MAX_ENUMERATION_ORDER
    };
    if n == 0 || n > limit {
        return Err(GraphError::OrderLimit {
            what: "connected enumeration",
            max: limit,
            got: n,
        });
    }
    let bits = n * (n - 1) / 2;
    Ok(ConnectedGraphIter {
        n,
        next_mask: 0,
        end: 1u64 << bits,
        dedup: options.deduplicate.then(ClassDedup::new),
    })
}

/// Iterator over connected graphs of a fixed order.
pub struct ConnectedGraphIter {
    n: usize,
    next_mask: u64,
    end: u64,
    dedup: Option<ClassDedup>,
}

impl Iterator for ConnectedGraphIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let g = graph_from_mask(self.n, self.next_mask);
            self.next_mask += 1;
            if !g.is_connected() {
                continue;
            }
            match &mut self.dedup {
                None => return Some(g),
                Some(dedup) => {
                    if dedup.admit(&g) {
                        return Some(g);
                    }
                }
            }
        }
        None
    }
}

/// Decodes a Pruefer sequence over `0..n` into the tree it encodes.
/// An empty sequence with `n == 2` gives the single edge.
pub(crate) fn prufer_decode(n: usize, sequence: &[usize]) -> Graph {
    debug_assert!(n >= 2 && sequence.len() == n - 2);
    let mut g = Graph::empty(n).expect("tree orders are within range");
    let mut degree = vec![1u8; n];
    for &v in sequence {
        degree[v] += 1;
    }
    let mut leaves: u32 = 0;
    for (v, &d) in degree.iter().enumerate() {
        if d == 1 {
            leaves |= 1 << v;
        }
    }
    for &v in sequence {
        let leaf = leaves.trailing_zeros() as usize;
        leaves &= leaves - 1;
        g.insert_edge(leaf, v);
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves |= 1 << v;
        }
    }
    let first = leaves.trailing_zeros() as usize;
    leaves &= leaves - 1;
    let second = leaves.trailing_zeros() as usize;
    g.insert_edge(first, second);
    g
}

/// Streams trees of order `n` (`2 <= n <= 9`) in ascending Pruefer order.
pub fn enumerate_trees(n: usize, deduplicate: bool) -> Result<TreeIter, GraphError> {
    if !(2..=MAX_TREE_ENUMERATION_ORDER).contains(&n) {
        return Err(GraphError::OrderLimit {
            what: "tree enumeration",
            max: MAX_TREE_ENUMERATION_ORDER,
            got: n,
        });
    }
    let count = (n as u64).pow(n as u32 - 2);
    Ok(TreeIter {
        n,
        next_code: 0,
        end: count,
        dedup: deduplicate.then(ClassDedup::new),
    })
}

/// Iterator over trees of a fixed order.
pub struct TreeIter {
    n: usize,
    next_code: u64,
    end: u64,
    dedup: Option<ClassDedup>,
}

impl TreeIter {
    fn decode(&self, code: u64) -> Graph {
        let len = self.n - 2;
        let mut sequence = vec![0usize; len];
        let mut rest = code;
        for slot in (0..len).rev() {
            sequence[slot] = (rest % self.n as u64) as usize;
            rest /= self.n as u64;
        }
        prufer_decode(self.n, &sequence)
    }
}

impl Iterator for TreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_code < self.end {
            let g = self.decode(self.next_code);
            self.next_code += 1;
            match &mut self.dedup {
                None => return Some(g),
                Some(dedup) => {
                    if dedup.admit(&g) {
                        return Some(g);
                    }
                }
            }
        }
        None
    }
}
