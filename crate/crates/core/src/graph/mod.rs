//! Compact undirected graphs on at most 32 vertices.
//!
//! Adjacency is stored as one 32-bit mask per vertex, so neighborhood
//! queries, connectivity sweeps, and clique search operate on whole words.
//! Vertices are `0..order()`. Graphs are immutable once constructed; new
//! graphs come from [`Graph::from_edges`], the family constructors, or
//! [`rotate_edges`].

mod codec;
mod enumerate;
mod families;
mod iso;

pub use codec::{edgelist_decode, edgelist_encode, graph6_decode, graph6_encode};
pub use enumerate::{
    enumerate_connected, enumerate_trees, ConnectedGraphIter, EnumerateOptions, TreeIter,
    MAX_ENUMERATION_ORDER, MAX_ENUMERATION_ORDER_WITH_OVERRIDE, MAX_TREE_ENUMERATION_ORDER,
};
pub use families::{
    attach_paths_same_root, attach_paths_two_roots, attach_tree, bug, complete,
    complete_minus_edge, cycle, path, path_kite, Bug,
};
pub use iso::{is_isomorphic, MAX_ISO_ORDER};

pub(crate) use enumerate::prufer_decode;

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count; adjacency rows must fit in a `u32`.
pub const MAX_ORDER: usize = 32;

/// Errors from graph construction, traversal, and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {got} outside the supported range 1..={max}")]
    OrderOutOfRange { got: usize, max: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what} must be at least {min}, got {got}")]
    ParameterTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{what} supports order at most {max}, got {got}")]
    OrderLimit {
        what: &'static str,
        max: usize,
        got: usize,
    },
    #[error("invalid pendent path: {0}")]
    InvalidPath(String),
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),
    #[error("parent array does not describe a rooted tree: {0}")]
    NotATree(String),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// Iterates the set bit positions of a mask in ascending order.
pub(crate) fn bit_indices(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Undirected simple graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u32>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange {
                got: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph { adj: vec![0; n] })
    }

    /// Graph on `n` vertices with the given edges; duplicates are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order() && v < self.order());
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Copy of this graph with `extra` additional isolated vertices.
    pub(crate) fn grown(&self, extra: usize) -> Result<Self, GraphError> {
        let n = self.order() + extra;
        if n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange {
                got: n,
                max: MAX_ORDER,
            });
        }
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        Ok(Graph { adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Whether `{u, v}` is an edge. Panics if either vertex is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.order() && v < self.order(), "vertex out of range");
        self.adj[u] & (1 << v) != 0
    }

    /// Degree of `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bit_indices(self.adj[v])
    }

    /// All vertices.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            let above = ((!0u64 << (u + 1)) & u64::from(u32::MAX)) as u32;
            bit_indices(self.adj[u] & above).map(move |v| (u, v))
        })
    }

    /// Largest vertex degree.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).max().unwrap_or(0)
    }

    /// Smallest vertex degree.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).min().unwrap_or(0)
    }

    fn full_mask(&self) -> u32 {
        ((1u64 << self.order()) - 1) as u32
    }

    /// Vertices reachable from `start` while staying inside `allowed`.
    fn reach(&self, start: usize, allowed: u32) -> u32 {
        debug_assert!(allowed & (1 << start) != 0);
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            for v in bit_indices(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let full = self.full_mask();
        self.reach(0, full) == full
    }

    /// Largest BFS eccentricity over all vertices.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let full = self.full_mask();
        let mut diameter = 0;
        for v in self.vertices() {
            let mut seen = 1u32 << v;
            let mut frontier = seen;
            let mut depth = 0;
            while seen != full {
                let mut next = 0u32;
                for u in bit_indices(frontier) {
                    next |= self.adj[u];
                }
                next &= !seen;
                seen |= next;
                frontier = next;
                depth += 1;
            }
            diameter = diameter.max(depth);
        }
        Ok(diameter)
    }

    /// Whether deleting `v` disconnects the remaining vertices.
    ///
    /// For a connected graph this is the usual cut-vertex test. Panics if
    /// `v` is out of range.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        assert!(v < self.order(), "vertex out of range");
        let remaining = self.full_mask() & !(1u32 << v);
        if remaining == 0 {
            return false;
        }
        let start = remaining.trailing_zeros() as usize;
        self.reach(start, remaining) != remaining
    }

    /// Clique number via branch-and-bound over candidate bitmasks.
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        self.expand_clique(self.full_mask(), 0, &mut best);
        best
    }

    fn expand_clique(&self, mut candidates: u32, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        while candidates != 0 {
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.expand_clique(candidates & self.adj[v], size + 1, best);
        }
    }

    /// Number of triangles through `v`.
    pub(crate) fn triangles_at(&self, v: usize) -> usize {
        self.neighbors(v)
            .map(|u| (self.adj[v] & self.adj[u]).count_ones() as usize)
            .sum::<usize>()
            / 2
    }
}

/// A pendent path inside a host graph: the root (a cut vertex) followed by
/// the interior vertices out to the degree-1 far end. The root is always
/// the first entry, so a spec of `k` vertices describes a path contributing
/// `k - 1` vertices beyond the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendentPathSpec {
    vertices: Vec<usize>,
}

impl PendentPathSpec {
    /// Builds a spec from the root-first vertex list.
    ///
    /// Requires at least two distinct vertices; adjacency and degree
    /// conditions are checked against a host graph by [`Self::validate`].
    pub fn new(vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.len() < 2 {
            return Err(GraphError::InvalidPath(format!(
                "a pendent path needs the root plus at least one vertex, got {} vertices",
                vertices.len()
            )));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(GraphError::InvalidPath(
                "path vertices must be distinct".to_string(),
            ));
        }
        Ok(PendentPathSpec { vertices })
    }

    /// The cut vertex anchoring the path.
    pub fn root(&self) -> usize {
        self.vertices[0]
    }

    /// The degree-1 end of the path.
    pub fn far_end(&self) -> usize {
        *self.vertices.last().expect("spec holds at least two vertices")
    }

    /// Root-first vertex list.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices including the root.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false; a spec never has fewer than two vertices.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Checks the pendent-path invariants against a host graph: consecutive
    /// vertices adjacent, interior degrees 2, far end degree 1, root a cut
    /// vertex.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        for &v in &self.vertices {
            g.check_vertex(v)?;
        }
        for pair in self.vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(GraphError::InvalidPath(format!(
                    "consecutive path vertices {} and {} are not adjacent",
                    pair[0], pair[1]
                )));
            }
        }
        for &v in &self.vertices[1..self.vertices.len() - 1] {
            if g.degree(v) != 2 {
                return Err(GraphError::InvalidPath(format!(
                    "interior path vertex {} has degree {}, expected 2",
                    v,
                    g.degree(v)
                )));
            }
        }
        let end = self.far_end();
        if g.degree(end) != 1 {
            return Err(GraphError::InvalidPath(format!(
                "path end {} has degree {}, expected 1",
                end,
                g.degree(end)
            )));
        }
        if !g.is_cut_vertex(self.root()) {
            return Err(GraphError::InvalidPath(format!(
                "path root {} is not a cut vertex",
                self.root()
            )));
        }
        Ok(())
    }

    /// Perron entries along the path, root first.
    pub fn entry_values<F: Copy>(&self, x: &[F]) -> Vec<F> {
        self.vertices.iter().map(|&v| x[v]).collect()
    }
}

/// Edge rotation: delete `{from, w}` and add `{to, w}` for every `w` in
/// `moved`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationMove {
    pub from: usize,
    pub to: usize,
    pub moved: Vec<usize>,
}

/// Applies a rotation move, validating its invariants first: `from != to`,
/// the moved set is nonempty and disjoint from both pivots, and every moved
/// vertex is adjacent to `from` and non-adjacent to `to`.
pub fn rotate_edges(g: &Graph, mv: &RotationMove) -> Result<Graph, GraphError> {
    g.check_vertex(mv.from)?;
    g.check_vertex(mv.to)?;
    if mv.from == mv.to {
        return Err(GraphError::InvalidRotation(format!(
            "pivot vertices coincide at {}",
            mv.from
        )));
    }
    if mv.moved.is_empty() {
        return Err(GraphError::InvalidRotation("moved set is empty".to_string()));
    }
    let mut seen = 0u32;
    for &w in &mv.moved {
        g.check_vertex(w)?;
        if w == mv.from || w == mv.to {
            return Err(GraphError::InvalidRotation(format!(
                "moved vertex {w} coincides with a pivot"
            )));
        }
        if seen & (1 << w) != 0 {
            return Err(GraphError::InvalidRotation(format!(
                "moved vertex {w} listed twice"
            )));
        }
        seen |= 1 << w;
        if !g.has_edge(mv.from, w) {
            return Err(GraphError::InvalidRotation(format!(
                "moved vertex {w} is not adjacent to {}",
                mv.from
            )));
        }
        if g.has_edge(mv.to, w) {
            return Err(GraphError::InvalidRotation(format!(
                "moved vertex {w} is already adjacent to {}",
                mv.to
            )));
        }
    }
    let mut h = g.clone();
    for &w in &mv.moved {
        h.delete_edge(mv.from, w);
        h.insert_edge(mv.to, w);
    }
    Ok(h)
}
