//! Named graph families and seeded random cographs and splitgraphs.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::graph::{complement, disjoint_union, join, Graph};
use crate::recognition::{realize, Cotree, CotreeLabel};

/// SplitMix64. Fixed so that seeded instances are reproducible anywhere.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (by modulo reduction). Panics on zero.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    /// True with probability `percent / 100`.
    pub fn chance(&mut self, percent: usize) -> bool {
        self.below(100) < percent
    }

    pub fn bit(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            items.swap(i, self.below(i + 1));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: Family, reason: &'static str },
    #[error("malformed generator spec `{0}`")]
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    CompleteMultipartite,
    Rook,
    RookComplement,
    Paw,
    Cycle,
    Star,
    Path,
    RandomCograph,
    RandomSplitgraph,
    RandomGraph,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Complete,
        Family::CompleteMultipartite,
        Family::Rook,
        Family::RookComplement,
        Family::Paw,
        Family::Cycle,
        Family::Star,
        Family::Path,
        Family::RandomCograph,
        Family::RandomSplitgraph,
        Family::RandomGraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteMultipartite => "complete_multipartite",
            Family::Rook => "rook",
            Family::RookComplement => "rook_complement",
            Family::Paw => "paw",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Path => "path",
            Family::RandomCograph => "random_cograph",
            Family::RandomSplitgraph => "random_splitgraph",
            Family::RandomGraph => "random_graph",
        }
    }

    pub fn is_random(self) -> bool {
        matches!(
            self,
            Family::RandomCograph | Family::RandomSplitgraph | Family::RandomGraph
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GeneratorError::UnknownFamily(s.to_string()))
    }
}

/// A named family with integer parameters, written `family:p1,p2[:seed=S]`.
///
/// | family | parameters |
/// |---|---|
/// | `complete` | `n` |
/// | `complete_multipartite` | part sizes |
/// | `rook`, `rook_complement` | `m,n` (vertex `(i,j)` is `i·n + j`) |
/// | `paw` | none (`K1 ⊗ (K2 ⊕ K1)`, center `0`) |
/// | `cycle` | `n >= 3` |
/// | `star` | leaves `k` (center `0`) |
/// | `path` | `n` |
/// | `random_cograph` | `n` |
/// | `random_splitgraph` | `n[,p]`, cross-edge percent `p` (default 50) |
/// | `random_graph` | `n,p`, edge percent `p` |
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub family: Family,
    pub params: Vec<usize>,
    /// Random families draw from this seed, `0` when unset.
    pub seed: Option<u64>,
}

impl GeneratorSpec {
    pub fn new(family: Family, params: Vec<usize>) -> Self {
        GeneratorSpec {
            family,
            params,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        for (i, p) in self.params.iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { ':' } else { ',' })?;
        }
        if let Some(seed) = self.seed {
            if self.params.is_empty() {
                f.write_str(":")?;
            }
            write!(f, ":seed={seed}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorSpec {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || GeneratorError::Malformed(s.to_string());
        let mut fields = s.trim().split(':');
        let family: Family = fields.next().unwrap_or("").parse()?;
        let params = match fields.next() {
            None | Some("") => Vec::new(),
            Some(list) => list
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| malformed()))
                .collect::<Result<_, _>>()?,
        };
        let seed = match fields.next() {
            None => None,
            Some(field) => Some(
                field
                    .strip_prefix("seed=")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(malformed)?,
            ),
        };
        if fields.next().is_some() {
            return Err(malformed());
        }
        Ok(GeneratorSpec {
            family,
            params,
            seed,
        })
    }
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n).expect("n >= 1")
}

/// Join of independent sets of the given sizes; parts are numbered
/// consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut part_of = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(i, p));
    }
    let n = part_of.len();
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| {
            let part_of = &part_of;
            (u + 1..n).filter(move |&v| part_of[u] != part_of[v]).map(move |v| (u, v))
        }),
    )
    .expect("at least one vertex")
}

/// Line graph of `K_{m,n}`: grid cells `(i, j) -> i·n + j`, adjacent when
/// they share a row or a column.
pub fn rook(m: usize, n: usize) -> Graph {
    let total = m * n;
    Graph::from_edges(
        total,
        (0..total).flat_map(|u| {
            (u + 1..total)
                .filter(move |&v| u / n == v / n || u % n == v % n)
                .map(move |v| (u, v))
        }),
    )
    .expect("m, n >= 1")
}

/// `K1 ⊗ (K2 ⊕ K1)` with center `0`, triangle `0,1,2` and pendant `3`.
pub fn paw() -> Graph {
    join(
        &Graph::edgeless(1).unwrap(),
        &disjoint_union(&complete(2), &Graph::edgeless(1).unwrap()),
    )
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("n >= 1")
}

/// `K_{1,k}` with center `0`.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).unwrap()
}

/// Random cotree on `n` leaves: the shuffled leaf set is cut at a uniform
/// point, recursively, and labels alternate down the tree from a random
/// root label. The result is canonical.
pub fn random_cotree(n: usize, rng: &mut SplitMix64) -> Cotree {
    assert!(n >= 1);
    let mut verts: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut verts);
    let label = if rng.bit() {
        CotreeLabel::Join
    } else {
        CotreeLabel::Union
    };
    cotree_over(&mut verts, label, rng)
}

fn cotree_over(verts: &mut [usize], label: CotreeLabel, rng: &mut SplitMix64) -> Cotree {
    if verts.len() == 1 {
        return Cotree::leaf(verts[0]);
    }
    rng.shuffle(verts);
    let cut = 1 + rng.below(verts.len() - 1);
    let flipped = match label {
        CotreeLabel::Union => CotreeLabel::Join,
        CotreeLabel::Join => CotreeLabel::Union,
    };
    let (a, b) = verts.split_at_mut(cut);
    let left = cotree_over(a, flipped, rng);
    let right = cotree_over(b, flipped, rng);
    Cotree::internal(label, alloc::vec![left, right])
}

pub fn random_cograph(n: usize, rng: &mut SplitMix64) -> Graph {
    realize(&random_cotree(n, rng))
}

/// Clique size uniform in `0..=n`, vertices shuffled, each clique /
/// independent pair joined with probability `percent / 100`.
pub fn random_splitgraph(n: usize, percent: usize, rng: &mut SplitMix64) -> Graph {
    assert!(n >= 1);
    let c = rng.below(n + 1);
    let mut verts: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut verts);
    let (clique, independent) = verts.split_at(c);
    let mut edges = Vec::new();
    for (i, &u) in clique.iter().enumerate() {
        edges.extend(clique[i + 1..].iter().map(|&v| (u, v)));
    }
    for &u in clique {
        for &s in independent {
            if rng.chance(percent) {
                edges.push((u, s));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Erdős–Rényi `G(n, percent / 100)`.
pub fn random_graph(n: usize, percent: usize, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(percent) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("n >= 1")
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GeneratorError> {
    let family = spec.family;
    let p = spec.params.as_slice();
    let bad = |reason| Err(GeneratorError::InvalidParameters { family, reason });
    let mut rng = SplitMix64::new(spec.seed.unwrap_or(0));
    match (family, p) {
        (Family::Complete, &[n]) if n >= 1 => Ok(complete(n)),
        (Family::Complete, _) => bad("expected one size n >= 1"),
        (Family::CompleteMultipartite, parts) if !parts.is_empty() && parts.iter().all(|&q| q >= 1) => {
            Ok(complete_multipartite(parts))
        }
        (Family::CompleteMultipartite, _) => bad("expected one or more part sizes >= 1"),
        (Family::Rook, &[m, n]) if m >= 1 && n >= 1 => Ok(rook(m, n)),
        (Family::RookComplement, &[m, n]) if m >= 1 && n >= 1 => Ok(complement(&rook(m, n))),
        (Family::Rook | Family::RookComplement, _) => bad("expected m,n >= 1"),
        (Family::Paw, []) => Ok(paw()),
        (Family::Paw, _) => bad("takes no parameters"),
        (Family::Cycle, &[n]) if n >= 3 => Ok(cycle(n)),
        (Family::Cycle, _) => bad("expected one length n >= 3"),
        (Family::Star, &[k]) => Ok(star(k)),
        (Family::Star, _) => bad("expected one leaf count"),
        (Family::Path, &[n]) if n >= 1 => Ok(path(n)),
        (Family::Path, _) => bad("expected one length n >= 1"),
        (Family::RandomCograph, &[n]) if n >= 1 => Ok(random_cograph(n, &mut rng)),
        (Family::RandomCograph, _) => bad("expected one size n >= 1"),
        (Family::RandomSplitgraph, &[n]) if n >= 1 => Ok(random_splitgraph(n, 50, &mut rng)),
        (Family::RandomSplitgraph, &[n, q]) if n >= 1 && q <= 100 => {
            Ok(random_splitgraph(n, q, &mut rng))
        }
        (Family::RandomSplitgraph, _) => bad("expected n >= 1 and optional percent <= 100"),
        (Family::RandomGraph, &[n, q]) if n >= 1 && q <= 100 => Ok(random_graph(n, q, &mut rng)),
        (Family::RandomGraph, _) => bad("expected n >= 1 and percent <= 100"),
    }
}
