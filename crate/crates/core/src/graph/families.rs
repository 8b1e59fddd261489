//! Constructors for the graph families under study.
//!
//! Path-attachment convention: "attach a path of length `p` to `u`" adds
//! `p - 1` new vertices, with `u` counted as the path's first vertex. The
//! one exception is [`path_kite`], which joins a disjoint path of `p`
//! vertices to a clique vertex through one new edge, so all `p` path
//! vertices are new. Each constructor documents which convention it uses.

use super::{Graph, GraphError, PendentPathSpec, MAX_ORDER};

fn check_at_least(what: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::ParameterTooSmall { what, min, got })
    } else {
        Ok(())
    }
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    Ok(g)
}

/// Path on `n` vertices with edges `{i, i+1}`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    Ok(g)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    check_at_least("cycle order", 3, n)?;
    let mut g = path(n)?;
    g.insert_edge(n - 1, 0);
    Ok(g)
}

/// Complete graph on `n >= 2` vertices with the edge `{0, 1}` deleted;
/// vertices 0 and 1 are the designated non-adjacent pair.
pub fn complete_minus_edge(n: usize) -> Result<Graph, GraphError> {
    check_at_least("complete-minus-edge order", 2, n)?;
    let mut g = complete(n)?;
    g.delete_edge(0, 1);
    Ok(g)
}

/// A bug graph together with its two pendent-path specs.
///
/// A side whose path length is 1 contributes no vertices beyond its root,
/// so it has no pendent path and its spec is `None`.
#[derive(Clone, Debug)]
pub struct Bug {
    pub graph: Graph,
    /// Path rooted at vertex 0, present when `q >= 2`.
    pub first_path: Option<PendentPathSpec>,
    /// Path rooted at vertex 1, present when `r >= 2`.
    pub second_path: Option<PendentPathSpec>,
}

impl Bug {
    /// The pendent paths that actually exist, first side before second.
    pub fn paths(&self) -> impl Iterator<Item = &PendentPathSpec> {
        self.first_path.iter().chain(self.second_path.iter())
    }
}

/// Bug graph: the complete graph on `p` vertices minus the edge `{0, 1}`,
/// with a path of `q` vertices rooted at 0 (adding `q - 1` vertices) and a
/// path of `r` vertices rooted at 1 (adding `r - 1` vertices). Total order
/// `p + q + r - 2`.
///
/// Layout: clique vertices `0..p`, first path `p..p+q-1`, second path
/// `p+q-1..p+q+r-2`.
pub fn bug(p: usize, q: usize, r: usize) -> Result<Bug, GraphError> {
    check_at_least("bug clique size", 2, p)?;
    check_at_least("bug first path length", 1, q)?;
    check_at_least("bug second path length", 1, r)?;
    let graph = complete_minus_edge(p)?;
    let (graph, first_path) = append_pendent_path(graph, 0, q - 1)?;
    let (graph, second_path) = append_pendent_path(graph, 1, r - 1)?;
    Ok(Bug {
        graph,
        first_path,
        second_path,
    })
}

/// Adds a chain of `extra` new vertices hanging off `root`, returning the
/// new graph and, when `extra > 0`, the root-first path spec.
fn append_pendent_path(
    g: Graph,
    root: usize,
    extra: usize,
) -> Result<(Graph, Option<PendentPathSpec>), GraphError> {
    if extra == 0 {
        return Ok((g, None));
    }
    let start = g.order();
    let mut grown = g.grown(extra)?;
    let mut previous = root;
    let mut vertices = vec![root];
    for v in start..start + extra {
        grown.insert_edge(previous, v);
        vertices.push(v);
        previous = v;
    }
    let spec = PendentPathSpec::new(vertices)?;
    Ok((grown, Some(spec)))
}

/// Path-kite: a path on `p` vertices and a complete graph on `q` vertices,
/// joined by one new edge from the path end `p - 1` to the clique vertex
/// `p`. All `p` path vertices are new relative to the clique; total order
/// `p + q`.
pub fn path_kite(p: usize, q: usize) -> Result<Graph, GraphError> {
    check_at_least("path-kite path order", 1, p)?;
    check_at_least("path-kite clique order", 1, q)?;
    if p + q > MAX_ORDER {
        return Err(GraphError::OrderOutOfRange {
            got: p + q,
            max: MAX_ORDER,
        });
    }
    let mut g = path(p)?.grown(q)?;
    for u in p..p + q {
        for v in u + 1..p + q {
            g.insert_edge(u, v);
        }
    }
    g.insert_edge(p - 1, p);
    Ok(g)
}

/// Attaches two paths of `p` and `q` vertices to the same root `u`,
/// adding `p - 1` and then `q - 1` new vertices.
pub fn attach_paths_same_root(
    g: &Graph,
    u: usize,
    p: usize,
    q: usize,
) -> Result<Graph, GraphError> {
    attach_paths_two_roots(g, u, u, p, q)
}

/// Attaches a path of `p` vertices to `u` and a path of `q` vertices to
/// `v`, adding `p - 1` and then `q - 1` new vertices. The roots may
/// coincide.
pub fn attach_paths_two_roots(
    g: &Graph,
    u: usize,
    v: usize,
    p: usize,
    q: usize,
) -> Result<Graph, GraphError> {
    if u >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: u,
            order: g.order(),
        });
    }
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    check_at_least("attached path length", 1, p)?;
    check_at_least("attached path length", 1, q)?;
    let (g, _) = append_pendent_path(g.clone(), u, p - 1)?;
    let (g, _) = append_pendent_path(g, v, q - 1)?;
    Ok(g)
}

/// Attaches a tree to `u`, identifying the tree's root with `u`.
///
/// The tree is given as a parent array over nodes `0..m`: node 0 is the
/// root and must satisfy `parent[0] == 0`; for `i >= 1`, `parent[i]` is the
/// parent of node `i`. Node 0 maps to `u` and nodes `1..m` become new
/// vertices, so the result has `m - 1` extra vertices.
pub fn attach_tree(g: &Graph, u: usize, parent: &[usize]) -> Result<Graph, GraphError> {
    if u >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: u,
            order: g.order(),
        });
    }
    let m = parent.len();
    if m == 0 {
        return Err(GraphError::NotATree("parent array is empty".to_string()));
    }
    if parent[0] != 0 {
        return Err(GraphError::NotATree(format!(
            "root entry must be 0, got parent[0] = {}",
            parent[0]
        )));
    }
    for (node, &par) in parent.iter().enumerate().skip(1) {
        if par >= m {
            return Err(GraphError::NotATree(format!(
                "parent[{node}] = {par} out of range for {m} nodes"
            )));
        }
        if par == node {
            return Err(GraphError::NotATree(format!(
                "node {node} is its own parent"
            )));
        }
    }
    // A parent array with m-1 edges is a tree exactly when every node
    // reaches the root; walk with a step budget to reject cycles.
    for start in 1..m {
        let mut node = start;
        let mut steps = 0;
        while node != 0 {
            node = parent[node];
            steps += 1;
            if steps > m {
                return Err(GraphError::NotATree(format!(
                    "node {start} never reaches the root (cycle in parent array)"
                )));
            }
        }
    }
    let base = g.order();
    let mut grown = g.grown(m - 1)?;
    let map = |node: usize| if node == 0 { u } else { base + node - 1 };
    for (node, &par) in parent.iter().enumerate().skip(1) {
        grown.insert_edge(map(node), map(par));
    }
    Ok(grown)
}
