//! Cograph recognition (with cotrees) and splitgraph recognition (with
//! split partitions).

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{find_induced_path4, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CotreeLabel {
    /// `⊕`: children are the connected components.
    Union,
    /// `⊗`: children are the components of the complement.
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum NodeKind {
    Leaf(usize),
    Internal(CotreeLabel),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Node {
    kind: NodeKind,
    children: Vec<usize>,
    size: usize,
}

/// Rooted tree whose leaves are the vertices of a cograph and whose internal
/// nodes are labeled union or join. Nodes live in an arena and are addressed
/// by index; every node caches the number of leaves below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<Node>,
    root: usize,
}

impl Cotree {
    pub fn leaf(vertex: usize) -> Self {
        Cotree {
            nodes: vec![Node {
                kind: NodeKind::Leaf(vertex),
                children: Vec::new(),
                size: 1,
            }],
            root: 0,
        }
    }

    /// Internal node over `children`. Panics with fewer than two children.
    pub fn internal(label: CotreeLabel, children: Vec<Cotree>) -> Self {
        assert!(children.len() >= 2, "internal cotree nodes need two children");
        let mut nodes = Vec::new();
        let mut roots = Vec::with_capacity(children.len());
        for child in children {
            let offset = nodes.len();
            roots.push(child.root + offset);
            nodes.extend(child.nodes.into_iter().map(|mut node| {
                node.children.iter_mut().for_each(|c| *c += offset);
                node
            }));
        }
        let size = roots.iter().map(|&r| nodes[r].size).sum();
        nodes.push(Node {
            kind: NodeKind::Internal(label),
            children: roots,
            size,
        });
        let root = nodes.len() - 1;
        Cotree { nodes, root }
    }

    pub fn union(children: Vec<Cotree>) -> Self {
        Self::internal(CotreeLabel::Union, children)
    }

    pub fn join(children: Vec<Cotree>) -> Self {
        Self::internal(CotreeLabel::Join, children)
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of leaves, i.e. vertices of the represented graph.
    pub fn vertex_count(&self) -> usize {
        self.nodes[self.root].size
    }

    pub fn size(&self, node: usize) -> usize {
        self.nodes[node].size
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.nodes[node].children
    }

    /// `None` for leaves.
    pub fn label(&self, node: usize) -> Option<CotreeLabel> {
        match self.nodes[node].kind {
            NodeKind::Internal(label) => Some(label),
            NodeKind::Leaf(_) => None,
        }
    }

    /// The vertex stored at a leaf, `None` for internal nodes.
    pub fn leaf_vertex(&self, node: usize) -> Option<usize> {
        match self.nodes[node].kind {
            NodeKind::Leaf(v) => Some(v),
            NodeKind::Internal(_) => None,
        }
    }

    /// Vertices below `node`, in left-to-right leaf order.
    pub fn leaves(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes[node].size);
        let mut stack = vec![node];
        while let Some(x) = stack.pop() {
            match self.nodes[x].kind {
                NodeKind::Leaf(v) => out.push(v),
                NodeKind::Internal(_) => stack.extend(self.nodes[x].children.iter().rev()),
            }
        }
        out
    }

    /// Leaves are exactly `0..vertex_count()`, each once.
    pub fn leaves_are_vertex_set(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        self.leaves(self.root).into_iter().all(|v| {
            v < n && !core::mem::replace(&mut seen[v], true)
        })
    }

    /// No internal node has a child with the same label.
    pub fn is_canonical(&self) -> bool {
        self.nodes.iter().all(|node| match node.kind {
            NodeKind::Leaf(_) => true,
            NodeKind::Internal(label) => node
                .children
                .iter()
                .all(|&c| self.nodes[c].kind != NodeKind::Internal(label)),
        })
    }

    /// Nodes in an order where every child precedes its parent.
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((x, expanded)) = stack.pop() {
            if expanded {
                out.push(x);
            } else {
                stack.push((x, true));
                stack.extend(self.nodes[x].children.iter().rev().map(|&c| (c, false)));
            }
        }
        out
    }
}

/// The graph is not a cograph; `witness` is an induced path `a-b-c-d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("not a cograph: induced P4 {witness:?}")]
pub struct NotCograph {
    pub witness: [usize; 4],
}

/// Builds the canonical cotree of `g`, or returns an induced `P4`.
///
/// Vertex sets are split recursively: by connected components under a
/// union node, otherwise by components of the complement under a join node.
/// A set of two or more vertices that is connected with a connected
/// complement always contains an induced `P4`, which becomes the witness.
/// Children are ordered by their smallest vertex.
pub fn build_cotree(g: &Graph) -> Result<Cotree, NotCograph> {
    let mut nodes = Vec::with_capacity(2 * g.n());
    let mut mark = vec![false; g.n()];
    let all: Vec<usize> = (0..g.n()).collect();
    let root = build(g, all, &mut nodes, &mut mark)?;
    Ok(Cotree { nodes, root })
}

fn build(
    g: &Graph,
    verts: Vec<usize>,
    nodes: &mut Vec<Node>,
    mark: &mut [bool],
) -> Result<usize, NotCograph> {
    if verts.len() == 1 {
        nodes.push(Node {
            kind: NodeKind::Leaf(verts[0]),
            children: Vec::new(),
            size: 1,
        });
        return Ok(nodes.len() - 1);
    }
    let mut parts = components_within(g, &verts, mark, false);
    let mut label = CotreeLabel::Union;
    if parts.len() == 1 {
        parts = components_within(g, &verts, mark, true);
        label = CotreeLabel::Join;
    }
    if parts.len() == 1 {
        let sub = g.induced_subgraph(&verts);
        let p = find_induced_path4(&sub)
            .expect("a prime vertex set with two or more vertices has an induced P4");
        return Err(NotCograph {
            witness: p.map(|i| verts[i]),
        });
    }
    let mut children = Vec::with_capacity(parts.len());
    for part in parts {
        children.push(build(g, part, nodes, mark)?);
    }
    nodes.push(Node {
        kind: NodeKind::Internal(label),
        children,
        size: verts.len(),
    });
    Ok(nodes.len() - 1)
}

/// Components of `g[verts]` (or of its complement). `verts` is sorted and
/// so is every returned part; parts are ordered by smallest vertex.
fn components_within(
    g: &Graph,
    verts: &[usize],
    mark: &mut [bool],
    in_complement: bool,
) -> Vec<Vec<usize>> {
    // mark = "in verts and not yet reached"
    for &v in verts {
        mark[v] = true;
    }
    let mut parts = Vec::new();
    for &start in verts {
        if !mark[start] {
            continue;
        }
        mark[start] = false;
        let mut part = vec![start];
        let mut i = 0;
        while i < part.len() {
            let v = part[i];
            i += 1;
            if in_complement {
                for &u in verts {
                    if mark[u] && u != v && !g.has_edge(u, v) {
                        mark[u] = false;
                        part.push(u);
                    }
                }
            } else {
                for &u in g.neighbors(v) {
                    if mark[u] {
                        mark[u] = false;
                        part.push(u);
                    }
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

/// The graph described by a cotree: joins add every edge between children.
pub fn realize(tree: &Cotree) -> Graph {
    let n = tree.vertex_count();
    let mut adj = vec![Vec::new(); n];
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); tree.node_count()];
    for x in tree.postorder() {
        match tree.nodes[x].kind {
            NodeKind::Leaf(v) => below[x].push(v),
            NodeKind::Internal(label) => {
                let kids = &tree.nodes[x].children;
                if label == CotreeLabel::Join {
                    for (i, &a) in kids.iter().enumerate() {
                        for &b in &kids[i + 1..] {
                            for &u in &below[a] {
                                for &v in &below[b] {
                                    adj[u].push(v);
                                    adj[v].push(u);
                                }
                            }
                        }
                    }
                }
                let mut all = Vec::with_capacity(tree.nodes[x].size);
                for &c in kids {
                    all.append(&mut below[c]);
                }
                below[x] = all;
            }
        }
    }
    Graph::from_raw(adj)
}

/// Partition of the vertices into an independent set and a clique. Both
/// lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitPartition {
    pub independent: Vec<usize>,
    pub clique: Vec<usize>,
}

impl SplitPartition {
    pub fn new(mut independent: Vec<usize>, mut clique: Vec<usize>) -> Self {
        independent.sort_unstable();
        clique.sort_unstable();
        SplitPartition {
            independent,
            clique,
        }
    }

    /// Covers `V(g)` exactly once, the clique side is a clique and the
    /// independent side is independent.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        let covers = self
            .independent
            .iter()
            .chain(&self.clique)
            .all(|&v| v < g.n() && !core::mem::replace(&mut seen[v], true))
            && seen.iter().all(|&s| s);
        covers && g.is_clique(&self.clique) && g.is_independent(&self.independent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("not a splitgraph")]
pub struct NotSplit;

/// Split partition with the largest clique side; among those, the one whose
/// sorted clique side is lexicographically smallest.
pub fn split_partition(g: &Graph) -> Result<SplitPartition, NotSplit> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    // largest m with d_m >= m - 1 (1-based)
    let m = (1..=n)
        .filter(|&i| g.degree(order[i - 1]) >= i - 1)
        .max()
        .unwrap_or(1);
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head != m * (m - 1) + tail {
        return Err(NotSplit);
    }

    let mut in_clique = vec![false; n];
    order[..m].iter().for_each(|&v| in_clique[v] = true);
    // an independent vertex seeing the whole clique can join it
    if let Some(s) = (0..n).find(|&s| !in_clique[s] && g.degree(s) == m) {
        in_clique[s] = true;
    }
    let clique: Vec<usize> = (0..n).filter(|&v| in_clique[v]).collect();
    let independent: Vec<usize> = (0..n).filter(|&v| !in_clique[v]).collect();
    debug_assert!(g.is_clique(&clique) && g.is_independent(&independent));

    // Other maximum partitions swap one clique vertex c for one independent
    // vertex s: s must see all of C - c, and c must see nothing of S - s.
    let mut best = clique.clone();
    for &s in &independent {
        if g.degree(s) + 1 < clique.len() {
            continue;
        }
        for &c in &clique {
            let s_sees_rest = clique.iter().all(|&x| x == c || g.has_edge(s, x));
            let c_misses_rest = g.neighbors(c).iter().all(|&y| in_clique[y] || y == s);
            if s_sees_rest && c_misses_rest {
                let mut cand: Vec<usize> = clique.iter().copied().filter(|&x| x != c).collect();
                cand.push(s);
                cand.sort_unstable();
                if cand < best {
                    best = cand;
                }
            }
        }
    }
    let mut keep = vec![false; n];
    best.iter().for_each(|&v| keep[v] = true);
    let independent = (0..n).filter(|&v| !keep[v]).collect();
    Ok(SplitPartition {
        independent,
        clique: best,
    })
}
