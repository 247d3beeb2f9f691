//! Finite simple undirected graphs and the combinators built on them.
//!
//! Vertices are `0..n`. A [`Graph`] is immutable once built; every
//! combinator returns a fresh graph.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Simple undirected graph stored as sorted neighbor lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = Self::edgeless(n)?.adj;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw(adj))
    }

    /// Sorts and deduplicates neighbor lists. Callers guarantee symmetry and
    /// the absence of loops.
    pub(crate) fn from_raw(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        debug_assert!(!adj.is_empty());
        Graph {
            adj,
            edges: twice / 2,
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::edgeless(n)?;
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Ok(Self::from_raw(adj))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Panics on an empty or repeated selection.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            assert_eq!(position[v], usize::MAX, "vertex {v} selected twice");
            position[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (position[u] != usize::MAX).then_some(position[u]))
                    .collect()
            })
            .collect();
        Self::from_raw(adj)
    }

    /// Neighborhoods as bitmasks, available when `n <= 64`.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        (self.n() <= 64).then(|| {
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &u| m | (1 << u)))
                .collect()
        })
    }

    /// True when no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.n()];
        for &v in set {
            if v >= self.n() || member[v] {
                return false;
            }
            member[v] = true;
        }
        set.iter()
            .all(|&v| self.adj[v].iter().all(|&u| !member[u]))
    }

    /// True when every two vertices of `set` are adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            u < self.n() && set[i + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }
}

/// A vertex `(g, h)` of a product `G × H`, flattened as `g·|V(H)| + h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPair {
    pub g: usize,
    pub h: usize,
}

impl VertexPair {
    pub fn new(g: usize, h: usize) -> Self {
        VertexPair { g, h }
    }

    pub fn flat(self, right_order: usize) -> usize {
        self.g * right_order + self.h
    }

    pub fn from_flat(flat: usize, right_order: usize) -> Self {
        VertexPair {
            g: flat / right_order,
            h: flat % right_order,
        }
    }
}

/// Categorical product: `(g1,h1) ~ (g2,h2)` iff `g1 ~ g2` and `h1 ~ h2`.
pub fn categorical_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut adj = Vec::with_capacity(g.n() * nh);
    for a in 0..g.n() {
        for b in 0..nh {
            let mut list = Vec::with_capacity(g.degree(a) * h.degree(b));
            for &a2 in g.neighbors(a) {
                for &b2 in h.neighbors(b) {
                    list.push(VertexPair::new(a2, b2).flat(nh));
                }
            }
            adj.push(list);
        }
    }
    Graph::from_raw(adj)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let adj = (0..n)
        .map(|v| {
            let mut out = Vec::with_capacity(n - 1 - g.degree(v));
            let mut nbrs = g.neighbors(v).iter().peekable();
            for u in 0..n {
                if nbrs.peek() == Some(&&u) {
                    nbrs.next();
                } else if u != v {
                    out.push(u);
                }
            }
            out
        })
        .collect();
    Graph::from_raw(adj)
}

/// `G ⊕ H`: vertices of `H` are shifted by `|V(G)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let adj = g
        .adj
        .iter()
        .cloned()
        .chain(h.adj.iter().map(|list| list.iter().map(|&u| u + shift).collect()))
        .collect();
    Graph::from_raw(adj)
}

/// `G ⊗ H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let mut adj = disjoint_union(g, h).adj;
    for (v, list) in adj.iter_mut().enumerate() {
        if v < ng {
            list.extend(ng..ng + nh);
        } else {
            list.extend(0..ng);
        }
    }
    Graph::from_raw(adj)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A proper 2-coloring (`false`/`true` per vertex) when `g` is bipartite.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for start in 0..g.n() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for &u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// Some induced path `a - b - c - d`, if the graph has one.
pub fn find_induced_path4(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            for &a in g.neighbors(b) {
                if a == c || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d != b && d != a && !g.has_edge(d, b) && !g.has_edge(d, a) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// Some induced cycle `v0 - v1 - v2 - v3 - v4 - v0`, if the graph has one.
/// `v0` is the smallest vertex of the returned cycle.
pub fn find_induced_cycle5(g: &Graph) -> Option<[usize; 5]> {
    for a in 0..g.n() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b) {
                if c <= a || g.has_edge(c, a) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d <= a || d == b || g.has_edge(d, a) || g.has_edge(d, b) {
                        continue;
                    }
                    for &e in g.neighbors(d) {
                        if e > a
                            && e != b
                            && e != c
                            && g.has_edge(e, a)
                            && !g.has_edge(e, b)
                            && !g.has_edge(e, c)
                        {
                            return Some([a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Whether `path` is an induced path in `g` in the given order.
pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    let k = path.len();
    let distinct = (0..k).all(|i| path[i] < g.n() && !path[..i].contains(&path[i]));
    distinct
        && (0..k).all(|i| {
            (i + 1..k).all(|j| g.has_edge(path[i], path[j]) == (j == i + 1))
        })
}

/// Whether `cycle` is an induced cycle in `g` in the given order.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let distinct = (0..k).all(|i| cycle[i] < g.n() && !cycle[..i].contains(&cycle[i]));
    distinct
        && (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                g.has_edge(cycle[i], cycle[j]) == consecutive
            })
        })
}
