//! Tensor capacity of cographs through neighborhood profiles, and the
//! `1` versus `≤ 1/2` decision for arbitrary graphs.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::matching::has_fractional_perfect_matching;
use crate::ratio::Ratio;
use crate::recognition::{Cotree, CotreeLabel};

/// `table[k]` is the smallest `|N(I)|` over independent sets `I` with
/// `|I| = k`, for `k = 0..=α(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodProfile {
    pub table: Vec<usize>,
    pub nvertices: usize,
}

impl NeighborhoodProfile {
    pub fn alpha(&self) -> usize {
        self.table.len() - 1
    }

    /// `ℓ(0) = 0`, nondecreasing, and `ℓ(k) <= n - k`.
    pub fn is_consistent(&self) -> bool {
        self.table.first() == Some(&0)
            && self.table.windows(2).all(|w| w[0] <= w[1])
            && self
                .table
                .iter()
                .enumerate()
                .all(|(k, &l)| k + l <= self.nvertices)
    }
}

fn leaf_profile() -> NeighborhoodProfile {
    NeighborhoodProfile {
        table: vec![0, 0],
        nvertices: 1,
    }
}

/// Independent sets of a union are unions of independent sets of the parts,
/// so tables combine by min-plus convolution.
fn union_profile(a: &NeighborhoodProfile, b: &NeighborhoodProfile) -> NeighborhoodProfile {
    let mut table = vec![usize::MAX; a.table.len() + b.table.len() - 1];
    for (i, &x) in a.table.iter().enumerate() {
        for (j, &y) in b.table.iter().enumerate() {
            table[i + j] = table[i + j].min(x + y);
        }
    }
    NeighborhoodProfile {
        table,
        nvertices: a.nvertices + b.nvertices,
    }
}

/// A nonempty independent set of a join lies inside one side and sees the
/// whole other side.
fn join_profile(a: &NeighborhoodProfile, b: &NeighborhoodProfile) -> NeighborhoodProfile {
    let len = a.table.len().max(b.table.len());
    let table = (0..len)
        .map(|k| {
            if k == 0 {
                return 0;
            }
            let via_a = a.table.get(k).map(|&l| l + b.nvertices);
            let via_b = b.table.get(k).map(|&l| l + a.nvertices);
            via_a.into_iter().chain(via_b).min().unwrap()
        })
        .collect();
    NeighborhoodProfile {
        table,
        nvertices: a.nvertices + b.nvertices,
    }
}

/// Exact `ℓ`-table of the cograph represented by `tree`. Nodes with more
/// than two children are folded left to right.
pub fn neighborhood_profile(tree: &Cotree) -> NeighborhoodProfile {
    let mut tables: Vec<Option<NeighborhoodProfile>> = vec![None; tree.node_count()];
    for x in tree.postorder() {
        let profile = match tree.label(x) {
            None => leaf_profile(),
            Some(label) => {
                let combine = match label {
                    CotreeLabel::Union => union_profile,
                    CotreeLabel::Join => join_profile,
                };
                let mut kids = tree.children(x).iter().map(|&c| tables[c].take().unwrap());
                let first = kids.next().unwrap();
                kids.fold(first, |acc, p| combine(&acc, &p))
            }
        };
        tables[x] = Some(profile);
    }
    tables[tree.root()].take().unwrap()
}

/// `a(G)` together with an independent set size attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BestRatio {
    pub value: Ratio,
    pub size: usize,
}

/// `max_{k >= 1} k / (k + ℓ(k))`; ties keep the smallest `k`.
pub fn a_ratio(profile: &NeighborhoodProfile) -> BestRatio {
    let mut best = BestRatio {
        value: Ratio::ZERO,
        size: 0,
    };
    for (k, &l) in profile.table.iter().enumerate().skip(1) {
        let r = Ratio::from_usize(k, k + l);
        if r > best.value {
            best = BestRatio { value: r, size: k };
        }
    }
    best
}

/// `Θᵀ` or `a*`: exactly one, or a ratio of at most one half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CapacityValue {
    One,
    Ratio(Ratio),
}

impl CapacityValue {
    pub fn as_ratio(self) -> Ratio {
        match self {
            CapacityValue::One => Ratio::ONE,
            CapacityValue::Ratio(r) => r,
        }
    }
}

impl Ord for CapacityValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_ratio().cmp(&other.as_ratio())
    }
}

impl PartialOrd for CapacityValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CapacityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CapacityValue::One => f.write_str("1"),
            CapacityValue::Ratio(r) => write!(f, "{r}"),
        }
    }
}

/// `a*`: one when `r > 1/2`, otherwise `r` itself.
pub fn a_star(r: Ratio) -> CapacityValue {
    if r > Ratio::HALF {
        CapacityValue::One
    } else {
        CapacityValue::Ratio(r)
    }
}

pub fn tensor_capacity_cograph(tree: &Cotree) -> CapacityValue {
    a_star(a_ratio(&neighborhood_profile(tree)).value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trichotomy {
    One,
    AtMostHalf,
}

impl Trichotomy {
    pub fn as_str(self) -> &'static str {
        match self {
            Trichotomy::One => "ONE",
            Trichotomy::AtMostHalf => "AT_MOST_HALF",
        }
    }
}

/// `Θᵀ(G) = 1` exactly when `G` has no fractional perfect matching;
/// otherwise `Θᵀ(G) <= 1/2`. Works for any graph.
pub fn capacity_trichotomy(g: &Graph) -> Trichotomy {
    if has_fractional_perfect_matching(g) {
        Trichotomy::AtMostHalf
    } else {
        Trichotomy::One
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CapacityError {
    #[error("binding number relation needs a(G) > 1/2, got {0}")]
    OutOfRegime(Ratio),
}

/// Binding number `(1 - a) / a`, valid when `a > 1/2`.
pub fn binding_from_a(a: Ratio) -> Result<Ratio, CapacityError> {
    if a <= Ratio::HALF || a > Ratio::ONE {
        return Err(CapacityError::OutOfRegime(a));
    }
    Ok(a.one_minus().unwrap().checked_div(a).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::build_cotree;
    use alloc::string::ToString;

    fn profile_of(g: &Graph) -> NeighborhoodProfile {
        neighborhood_profile(&build_cotree(g).unwrap())
    }

    #[test]
    fn small_profiles() {
        assert_eq!(profile_of(&Graph::edgeless(1).unwrap()).table, vec![0, 0]);
        let k2_k1 = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(profile_of(&k2_k1).table, vec![0, 0, 1]);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = profile_of(&star);
        assert_eq!(p.table, vec![0, 1, 1, 1]);
        assert!(p.is_consistent());
    }

    #[test]
    fn a_values() {
        let k5 = profile_of(&Graph::complete(5).unwrap());
        assert_eq!(k5.table, vec![0, 4]);
        assert_eq!(a_ratio(&k5).value, Ratio::new(1, 5));
        let star = profile_of(&Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap());
        assert_eq!(a_ratio(&star), BestRatio { value: Ratio::new(3, 4), size: 3 });
    }

    #[test]
    fn a_star_boundary() {
        assert_eq!(a_star(Ratio::new(3, 4)), CapacityValue::One);
        assert_eq!(a_star(Ratio::HALF), CapacityValue::Ratio(Ratio::HALF));
        assert_eq!(a_star(Ratio::new(1, 7)), CapacityValue::Ratio(Ratio::new(1, 7)));
    }

    #[test]
    fn capacities() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = build_cotree(&c4).unwrap();
        assert_eq!(tensor_capacity_cograph(&t), CapacityValue::Ratio(Ratio::HALF));
        let k1 = build_cotree(&Graph::edgeless(1).unwrap()).unwrap();
        assert_eq!(tensor_capacity_cograph(&k1), CapacityValue::One);
        assert_eq!(CapacityValue::One.to_string(), "1");
        assert_eq!(CapacityValue::Ratio(Ratio::new(2, 5)).to_string(), "2/5");
        assert!(CapacityValue::One > CapacityValue::Ratio(Ratio::HALF));
    }

    #[test]
    fn trichotomy() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(capacity_trichotomy(&star), Trichotomy::One);
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(capacity_trichotomy(&c5), Trichotomy::AtMostHalf);
        assert_eq!(capacity_trichotomy(&Graph::complete(2).unwrap()), Trichotomy::AtMostHalf);
    }

    #[test]
    fn binding_number() {
        assert_eq!(binding_from_a(Ratio::new(3, 4)), Ok(Ratio::new(1, 3)));
        assert_eq!(binding_from_a(Ratio::new(2, 3)), Ok(Ratio::HALF));
        assert_eq!(
            binding_from_a(Ratio::HALF),
            Err(CapacityError::OutOfRegime(Ratio::HALF))
        );
    }
}
