//! Graph isomorphism by pruned permutation search.
//!
//! Vertices are first partitioned by an isomorphism-invariant profile
//! (degree, sorted neighbor degrees, triangle count); the backtracking
//! search only maps vertices with equal profiles and extends along already
//! placed neighbors, which prunes hard at the orders used here.

use super::{Graph, GraphError};

/// Largest order accepted by [`is_isomorphic`].
pub const MAX_ISO_ORDER: usize = 10;

type Profile = (usize, Vec<usize>, usize);

fn vertex_profiles(g: &Graph) -> Vec<Profile> {
    g.vertices()
        .map(|v| {
            let mut nbr_degrees: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nbr_degrees.sort_unstable();
            (g.degree(v), nbr_degrees, g.triangles_at(v))
        })
        .collect()
}

/// Exact isomorphism test for graphs of order at most [`MAX_ISO_ORDER`].
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    let largest = a.order().max(b.order());
    if largest > MAX_ISO_ORDER {
        return Err(GraphError::OrderLimit {
            what: "isomorphism search",
            max: MAX_ISO_ORDER,
            got: largest,
        });
    }
    Ok(iso_unchecked(a, b))
}

/// Isomorphism test without the order guard, for internal callers that
/// already bound the order.
pub(crate) fn iso_unchecked(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let profiles_a = vertex_profiles(a);
    let profiles_b = vertex_profiles(b);
    let mut sorted_a = profiles_a.clone();
    let mut sorted_b = profiles_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return false;
    }
    let order = search_order(a, &profiles_a);
    let mut mapping = vec![usize::MAX; a.order()];
    extend(a, b, &profiles_a, &profiles_b, &order, 0, &mut mapping, 0)
}

/// Orders the vertices of `a` so each prefix stays as connected as
/// possible: start at a vertex of the rarest profile, then repeatedly take
/// the vertex with the most already placed neighbors.
fn search_order(a: &Graph, profiles: &[Profile]) -> Vec<usize> {
    let n = a.order();
    let rarity = |v: usize| profiles.iter().filter(|p| **p == profiles[v]).count();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    let mut placed_mask = 0u32;
    while let Some(pos) = pick_next(a, &remaining, placed_mask, &rarity) {
        let v = remaining.swap_remove(pos);
        placed_mask |= 1 << v;
        order.push(v);
    }
    order
}

fn pick_next(
    a: &Graph,
    remaining: &[usize],
    placed_mask: u32,
    rarity: &impl Fn(usize) -> usize,
) -> Option<usize> {
    remaining
        .iter()
        .enumerate()
        .max_by_key(|&(_, &v)| {
            let placed_neighbors = (a.neighbors_mask(v) & placed_mask).count_ones() as usize;
            // Tuple ordering: most placed neighbors, then rarest profile,
            // then highest degree, then lowest index.
            (
                placed_neighbors,
                usize::MAX - rarity(v),
                a.degree(v),
                usize::MAX - v,
            )
        })
        .map(|(pos, _)| pos)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    profiles_a: &[Profile],
    profiles_b: &[Profile],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let va = order[depth];
    'candidates: for vb in b.vertices() {
        if used & (1 << vb) != 0 || profiles_b[vb] != profiles_a[va] {
            continue;
        }
        for &ua in &order[..depth] {
            if a.has_edge(va, ua) != b.has_edge(vb, mapping[ua]) {
                continue 'candidates;
            }
        }
        mapping[va] = vb;
        if extend(a, b, profiles_a, profiles_b, order, depth + 1, mapping, used | (1 << vb)) {
            return true;
        }
    }
    mapping[va] = usize::MAX;
    false
}

/// Order-independent hash of the vertex profile multiset, used to bucket
/// candidate isomorphs during enumeration. Equal for isomorphic graphs;
/// collisions between non-isomorphic graphs only cost an extra exact check.
pub(crate) fn class_signature(g: &Graph) -> u64 {
    let mut profiles = vertex_profiles(g);
    profiles.sort_unstable();
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |byte: u8| {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    };
    feed(g.order() as u8);
    for (degree, nbr_degrees, triangles) in profiles {
        feed(0xfe);
        feed(degree as u8);
        for d in nbr_degrees {
            feed(d as u8);
        }
        feed(0xff);
        feed(triangles as u8);
    }
    hash
}
