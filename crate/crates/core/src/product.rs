//! Independence numbers of categorical products `G × H` when both factors
//! are cographs or both are splitgraphs. Every result carries an explicit
//! independent set of product vertices under flat indexing.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, VertexPair};
use crate::matching::{bipartite_max_independent_set, BipartiteGraph};
use crate::recognition::{Cotree, CotreeLabel, SplitPartition};

/// Products larger than this are not re-verified by [`AlphaResult::verify`].
pub const VERIFY_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("split partition is not valid for the {0} factor")]
    InvalidPartition(Side),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl core::fmt::Display for Side {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Which family of independent sets attained the maximum for a splitgraph
/// product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitCase {
    /// No vertex of `C1 × C2`.
    A,
    /// Exactly one vertex of `C1 × C2`.
    B,
    /// Several vertices of `C1 × C2`, all in one row or one column.
    C,
}

impl SplitCase {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitCase::A => "A",
            SplitCase::B => "B",
            SplitCase::C => "C",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaResult {
    pub value: usize,
    /// Sorted flat product vertices `g·|V(H)| + h`.
    pub certificate: Vec<usize>,
    /// Set for splitgraph products only.
    pub case: Option<SplitCase>,
}

impl AlphaResult {
    /// Re-checks the certificate against the factors. `None` when the
    /// product has more than [`VERIFY_LIMIT`] vertices.
    pub fn verify(&self, g: &Graph, h: &Graph) -> Option<bool> {
        (g.n() * h.n() <= VERIFY_LIMIT).then(|| {
            self.certificate.len() == self.value && certificate_is_independent(g, h, &self.certificate)
        })
    }
}

/// Whether the flat product vertices in `set` are distinct and pairwise
/// non-adjacent in `g × h`. The product is never materialized.
pub fn certificate_is_independent(g: &Graph, h: &Graph, set: &[usize]) -> bool {
    let nh = h.n();
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.last().is_some_and(|&x| x >= g.n() * nh) {
        return false;
    }
    sorted.iter().all(|&x| {
        let p = VertexPair::from_flat(x, nh);
        g.neighbors(p.g).iter().all(|&g2| {
            h.neighbors(p.h)
                .iter()
                .all(|&h2| sorted.binary_search(&VertexPair::new(g2, h2).flat(nh)).is_err())
        })
    })
}

#[derive(Debug, Clone, Copy)]
enum Step {
    LeafLeft,
    LeafRight,
    SumLeft,
    SumRight,
    PickLeft(usize),
    PickRight(usize),
}

/// `α(G × H)` for cographs given by their cotrees.
///
/// Subproblems are pairs of cotree nodes `(x, y)`, solved bottom-up:
/// - `x` a leaf: every pair `(x, h)` is isolated, the value is `|y|`;
///   symmetrically for `y` a leaf;
/// - a union node on either side: the product splits into independent
///   pieces, so child values add up;
/// - two join nodes: children form a grid of blocks where blocks in
///   different rows and columns are completely joined, so an independent
///   set lives in one row or one column and the value is the best child
///   substitution on either side.
pub fn alpha_product_cographs(tg: &Cotree, th: &Cotree) -> AlphaResult {
    let (ng, nh) = (tg.node_count(), th.node_count());
    let mut value = vec![0usize; ng * nh];
    let mut step = vec![Step::LeafLeft; ng * nh];
    let order_h = th.postorder();
    for x in tg.postorder() {
        for &y in &order_h {
            let at = |a: usize, b: usize| a * nh + b;
            let (v, s) = match (tg.label(x), th.label(y)) {
                (None, _) => (th.size(y), Step::LeafLeft),
                (_, None) => (tg.size(x), Step::LeafRight),
                (Some(CotreeLabel::Union), _) => (
                    tg.children(x).iter().map(|&c| value[at(c, y)]).sum(),
                    Step::SumLeft,
                ),
                (_, Some(CotreeLabel::Union)) => (
                    th.children(y).iter().map(|&c| value[at(x, c)]).sum(),
                    Step::SumRight,
                ),
                (Some(CotreeLabel::Join), Some(CotreeLabel::Join)) => {
                    let mut best = (0, Step::LeafLeft);
                    for &c in tg.children(x) {
                        if value[at(c, y)] > best.0 {
                            best = (value[at(c, y)], Step::PickLeft(c));
                        }
                    }
                    for &c in th.children(y) {
                        if value[at(x, c)] > best.0 {
                            best = (value[at(x, c)], Step::PickRight(c));
                        }
                    }
                    best
                }
            };
            value[at(x, y)] = v;
            step[at(x, y)] = s;
        }
    }

    let right_order = th.vertex_count();
    let mut certificate = Vec::new();
    let mut stack = vec![(tg.root(), th.root())];
    while let Some((x, y)) = stack.pop() {
        match step[x * nh + y] {
            Step::LeafLeft => {
                let g = tg.leaf_vertex(x).unwrap();
                certificate.extend(th.leaves(y).into_iter().map(|h| VertexPair::new(g, h).flat(right_order)));
            }
            Step::LeafRight => {
                let h = th.leaf_vertex(y).unwrap();
                certificate.extend(tg.leaves(x).into_iter().map(|g| VertexPair::new(g, h).flat(right_order)));
            }
            Step::SumLeft => stack.extend(tg.children(x).iter().map(|&c| (c, y))),
            Step::SumRight => stack.extend(th.children(y).iter().map(|&c| (x, c))),
            Step::PickLeft(c) => stack.push((c, y)),
            Step::PickRight(c) => stack.push((x, c)),
        }
    }
    certificate.sort_unstable();
    AlphaResult {
        value: value[tg.root() * nh + th.root()],
        certificate,
        case: None,
    }
}

/// Maximum independent set of the product restricted to `left ∪ right`,
/// where both lists are independent in the product. Returns flat ids.
fn bipartite_mis(g: &Graph, h: &Graph, left: &[usize], right: &[usize]) -> Vec<usize> {
    let nh = h.n();
    let mut index = vec![usize::MAX; g.n() * nh];
    for (i, &y) in right.iter().enumerate() {
        index[y] = i;
    }
    let mut b = BipartiteGraph::new(left.len(), right.len());
    for (i, &x) in left.iter().enumerate() {
        let p = VertexPair::from_flat(x, nh);
        for &g2 in g.neighbors(p.g) {
            for &h2 in h.neighbors(p.h) {
                let j = index[VertexPair::new(g2, h2).flat(nh)];
                if j != usize::MAX {
                    b.add_edge(i, j);
                }
            }
        }
    }
    debug_assert!(certificate_is_independent(g, h, left));
    debug_assert!(certificate_is_independent(g, h, right));
    let s = bipartite_max_independent_set(&b);
    s.left
        .iter()
        .map(|&i| left[i])
        .chain(s.right.iter().map(|&j| right[j]))
        .collect()
}

/// `α(G × H)` for splitgraphs with the given partitions `{S1, C1}` and
/// `{S2, C2}`.
///
/// `C1 × C2` induces the complement of a rook's graph, so an independent
/// set meets it in nothing (case A), one vertex (case B), or two or more
/// vertices sharing a row or a column (case C). Each case reduces to
/// maximum independent sets in bipartite subgraphs of the product:
/// - A: `S1×C2` against `C1×S2 ∪ S1×S2` (the last block is isolated there);
/// - B: for each `(c1, c2)`, case A minus the neighbors of `(c1, c2)`, plus
///   that vertex;
/// - C: for each row `c1`, the classes `C1×S2 ∪ S1×S2` and
///   `W ∪ {c1}×C2` with `W = {(s1, c2) : s1 ≁ c1}`; columns symmetrically.
///
/// Ties between cases report the earliest case.
pub fn alpha_product_splitgraphs(
    g: &Graph,
    pg: &SplitPartition,
    h: &Graph,
    ph: &SplitPartition,
) -> Result<AlphaResult, ProductError> {
    if !pg.is_valid_for(g) {
        return Err(ProductError::InvalidPartition(Side::Left));
    }
    if !ph.is_valid_for(h) {
        return Err(ProductError::InvalidPartition(Side::Right));
    }
    let nh = h.n();
    let flat = |a: usize, b: usize| VertexPair::new(a, b).flat(nh);
    let block = |xs: &[usize], ys: &[usize]| -> Vec<usize> {
        xs.iter().flat_map(|&a| ys.iter().map(move |&b| flat(a, b))).collect()
    };
    let (s1, c1, s2, c2) = (&pg.independent, &pg.clique, &ph.independent, &ph.clique);
    let sc = block(s1, c2);
    let cs = block(c1, s2);
    let ss = block(s1, s2);
    let cs_ss: Vec<usize> = cs.iter().chain(&ss).copied().collect();

    let mut best = bipartite_mis(g, h, &sc, &cs_ss);
    let mut case = SplitCase::A;

    for &a in c1 {
        for &b in c2 {
            let adjacent = |x: usize| {
                let p = VertexPair::from_flat(x, nh);
                g.has_edge(a, p.g) && h.has_edge(b, p.h)
            };
            let left: Vec<usize> = sc.iter().copied().filter(|&x| !adjacent(x)).collect();
            let right: Vec<usize> = cs_ss.iter().copied().filter(|&x| !adjacent(x)).collect();
            let mut set = bipartite_mis(g, h, &left, &right);
            if set.len() + 1 > best.len() {
                set.push(flat(a, b));
                best = set;
                case = SplitCase::B;
            }
        }
    }

    for &row in c1 {
        let w = block(
            &s1.iter().copied().filter(|&s| !g.has_edge(s, row)).collect::<Vec<_>>(),
            c2,
        );
        let other: Vec<usize> = w.into_iter().chain(c2.iter().map(|&b| flat(row, b))).collect();
        let set = bipartite_mis(g, h, &cs_ss, &other);
        if set.len() > best.len() {
            best = set;
            case = SplitCase::C;
        }
    }
    let sc_ss: Vec<usize> = sc.iter().chain(&ss).copied().collect();
    for &col in c2 {
        let w = block(
            c1,
            &s2.iter().copied().filter(|&s| !h.has_edge(s, col)).collect::<Vec<_>>(),
        );
        let other: Vec<usize> = w.into_iter().chain(c1.iter().map(|&a| flat(a, col))).collect();
        let set = bipartite_mis(g, h, &sc_ss, &other);
        if set.len() > best.len() {
            best = set;
            case = SplitCase::C;
        }
    }

    best.sort_unstable();
    Ok(AlphaResult {
        value: best.len(),
        certificate: best,
        case: Some(case),
    })
}
