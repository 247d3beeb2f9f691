//! Maximum bipartite matching (Hopcroft–Karp), König vertex covers and
//! independent sets, and the fractional perfect matching test.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

const FREE: usize = usize::MAX;

/// Bipartite graph with sides `0..left` and `0..right`; edges are stored
/// from the left side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            left,
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn from_edges<I>(left: usize, right: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = Self::new(left, right);
        for (l, r) in edges {
            b.add_edge(l, r);
        }
        b
    }

    /// Panics when an endpoint is out of range.
    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(l < self.left && r < self.right, "edge ({l}, {r}) out of range");
        self.adj[l].push(r);
    }

    /// Splits `g` by a proper 2-coloring. Returns the bipartite graph and
    /// the original ids of its left and right vertices.
    pub fn from_coloring(g: &Graph, coloring: &[bool]) -> (Self, Vec<usize>, Vec<usize>) {
        let (right_ids, left_ids): (Vec<usize>, Vec<usize>) =
            (0..g.n()).partition(|&v| coloring[v]);
        let mut index = vec![0; g.n()];
        for (i, &v) in left_ids.iter().enumerate() {
            index[v] = i;
        }
        for (i, &v) in right_ids.iter().enumerate() {
            index[v] = i;
        }
        let mut b = Self::new(left_ids.len(), right_ids.len());
        for (i, &v) in left_ids.iter().enumerate() {
            for &u in g.neighbors(v) {
                assert!(coloring[u], "coloring is not proper at edge ({v}, {u})");
                b.add_edge(i, index[u]);
            }
        }
        (b, left_ids, right_ids)
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn order(&self) -> usize {
        self.left + self.right
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(l, rs)| rs.iter().map(move |&r| (l, r)))
    }

    /// Subgraph on the kept vertices, renumbered in increasing order on each
    /// side. Also returns the old ids of the kept vertices.
    pub fn induced(&self, keep_left: &[bool], keep_right: &[bool]) -> (Self, Vec<usize>, Vec<usize>) {
        let left_ids: Vec<usize> = (0..self.left).filter(|&l| keep_left[l]).collect();
        let right_ids: Vec<usize> = (0..self.right).filter(|&r| keep_right[r]).collect();
        let mut rindex = vec![FREE; self.right];
        for (i, &r) in right_ids.iter().enumerate() {
            rindex[r] = i;
        }
        let adj = left_ids
            .iter()
            .map(|&l| {
                self.adj[l]
                    .iter()
                    .filter(|&&r| keep_right[r])
                    .map(|&r| rindex[r])
                    .collect()
            })
            .collect();
        let b = BipartiteGraph {
            left: left_ids.len(),
            right: right_ids.len(),
            adj,
        };
        (b, left_ids, right_ids)
    }
}

/// Set of vertex-disjoint `(left, right)` edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Every pair is an edge of `b` and no endpoint repeats.
    pub fn is_valid_for(&self, b: &BipartiteGraph) -> bool {
        let mut used_l = vec![false; b.left];
        let mut used_r = vec![false; b.right];
        self.pairs.iter().all(|&(l, r)| {
            l < b.left
                && r < b.right
                && b.adj[l].contains(&r)
                && !core::mem::replace(&mut used_l[l], true)
                && !core::mem::replace(&mut used_r[r], true)
        })
    }
}

/// Vertices of one or both sides of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BipartiteSet {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl BipartiteSet {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

struct HopcroftKarp<'a> {
    b: &'a BipartiteGraph,
    mate_l: Vec<usize>,
    mate_r: Vec<usize>,
    dist: Vec<usize>,
}

impl HopcroftKarp<'_> {
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for l in 0..self.b.left {
            if self.mate_l[l] == FREE {
                self.dist[l] = 0;
                queue.push_back(l);
            } else {
                self.dist[l] = FREE;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &self.b.adj[l] {
                match self.mate_r[r] {
                    FREE => found = true,
                    l2 if self.dist[l2] == FREE => {
                        self.dist[l2] = self.dist[l] + 1;
                        queue.push_back(l2);
                    }
                    _ => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, l: usize) -> bool {
        for i in 0..self.b.adj[l].len() {
            let r = self.b.adj[l][i];
            let next = self.mate_r[r];
            if next == FREE || (self.dist[next] == self.dist[l] + 1 && self.dfs(next)) {
                self.mate_l[l] = r;
                self.mate_r[r] = l;
                return true;
            }
        }
        self.dist[l] = FREE;
        false
    }
}

/// Maximum-cardinality matching by layered augmentation.
pub fn max_matching(b: &BipartiteGraph) -> Matching {
    let mut hk = HopcroftKarp {
        b,
        mate_l: vec![FREE; b.left],
        mate_r: vec![FREE; b.right],
        dist: vec![FREE; b.left],
    };
    while hk.bfs() {
        for l in 0..b.left {
            if hk.mate_l[l] == FREE {
                hk.dfs(l);
            }
        }
    }
    Matching {
        pairs: (0..b.left)
            .filter(|&l| hk.mate_l[l] != FREE)
            .map(|l| (l, hk.mate_l[l]))
            .collect(),
    }
}

/// Vertices reachable from free left vertices along alternating paths.
fn alternating_reach(b: &BipartiteGraph, m: &Matching) -> (Vec<bool>, Vec<bool>) {
    let mut mate_l = vec![FREE; b.left];
    let mut mate_r = vec![FREE; b.right];
    for &(l, r) in &m.pairs {
        mate_l[l] = r;
        mate_r[r] = l;
    }
    let mut seen_l = vec![false; b.left];
    let mut seen_r = vec![false; b.right];
    let mut queue: VecDeque<usize> = (0..b.left).filter(|&l| mate_l[l] == FREE).collect();
    queue.iter().for_each(|&l| seen_l[l] = true);
    while let Some(l) = queue.pop_front() {
        for &r in &b.adj[l] {
            if seen_r[r] {
                continue;
            }
            seen_r[r] = true;
            let l2 = mate_r[r];
            if l2 != FREE && !seen_l[l2] {
                seen_l[l2] = true;
                queue.push_back(l2);
            }
        }
    }
    (seen_l, seen_r)
}

/// König cover from a maximum matching: unreached left vertices plus
/// reached right vertices. Its size equals `m.len()`.
pub fn min_vertex_cover(b: &BipartiteGraph, m: &Matching) -> BipartiteSet {
    let (seen_l, seen_r) = alternating_reach(b, m);
    BipartiteSet {
        left: (0..b.left).filter(|&l| !seen_l[l]).collect(),
        right: (0..b.right).filter(|&r| seen_r[r]).collect(),
    }
}

/// Complement of the König vertex cover; size `|V| - |max matching|`.
pub fn bipartite_max_independent_set(b: &BipartiteGraph) -> BipartiteSet {
    let m = max_matching(b);
    let (seen_l, seen_r) = alternating_reach(b, &m);
    BipartiteSet {
        left: (0..b.left).filter(|&l| seen_l[l]).collect(),
        right: (0..b.right).filter(|&r| !seen_r[r]).collect(),
    }
}

/// Whether `g` has a fractional matching of total weight `|V|/2`.
///
/// Decided on the bipartite double cover (each vertex `v` becomes `v⁺` and
/// `v⁻`, each edge `uv` becomes `u⁺v⁻` and `v⁺u⁻`): half-integrality of the
/// fractional matching polytope makes the two conditions equivalent to the
/// cover having a perfect matching.
pub fn has_fractional_perfect_matching(g: &Graph) -> bool {
    let n = g.n();
    let mut b = BipartiteGraph::new(n, n);
    for v in 0..n {
        b.adj[v].extend_from_slice(g.neighbors(v));
    }
    max_matching(&b).len() == n
}
