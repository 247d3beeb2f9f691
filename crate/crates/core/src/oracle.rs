//! Exhaustive reference computations. They share no code path with the
//! cotree, splitgraph or matching algorithms and exist to check them.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{categorical_product, Graph};
use crate::ratio::Ratio;
use crate::recognition::SplitPartition;

pub const ALPHA_CAP: usize = 40;
pub const A_CAP: usize = 32;
pub const PROFILE_CAP: usize = 24;
pub const PARTITION_CAP: usize = 20;
pub const POWER_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph with {n} vertices exceeds the oracle cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph power exponent must be at least 1")]
    ZeroExponent,
}

fn check_cap(g: &Graph, cap: usize) -> Result<Vec<u64>, OracleError> {
    if g.n() > cap {
        return Err(OracleError::TooLarge { n: g.n(), cap });
    }
    Ok(g.neighbor_masks().unwrap())
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// A value with a witnessing vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certified<T> {
    pub value: T,
    pub set: Vec<usize>,
}

struct AlphaSearch<'a> {
    nbr: &'a [u64],
    best: u64,
    best_size: u32,
}

impl AlphaSearch<'_> {
    /// Greedy clique cover of `cand`; its size bounds `α(G[cand])`.
    fn clique_cover(&self, mut cand: u64) -> u32 {
        let mut cliques = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            let mut common = cand & self.nbr[v];
            while common != 0 {
                let u = common.trailing_zeros() as usize;
                cand &= !(1 << u);
                common &= self.nbr[u] & !(1 << u);
            }
            cliques += 1;
        }
        cliques
    }

    fn search(&mut self, mut chosen: u64, mut cand: u64) {
        // vertices of degree <= 1 in G[cand] belong to some maximum set
        loop {
            let low = bits(cand).find(|&v| (self.nbr[v] & cand).count_ones() <= 1);
            match low {
                Some(v) => {
                    chosen |= 1 << v;
                    cand &= !(self.nbr[v] | 1 << v);
                }
                None => break,
            }
        }
        let size = chosen.count_ones();
        if cand == 0 {
            if size > self.best_size {
                self.best = chosen;
                self.best_size = size;
            }
            return;
        }
        if size + self.clique_cover(cand) <= self.best_size {
            return;
        }
        let v = bits(cand)
            .max_by_key(|&v| (self.nbr[v] & cand).count_ones())
            .unwrap();
        self.search(chosen | 1 << v, cand & !(self.nbr[v] | 1 << v));
        self.search(chosen, cand & !(1 << v));
    }
}

/// Maximum independent set by branch and bound over neighbor bitmasks, for
/// graphs with at most [`ALPHA_CAP`] vertices.
pub fn brute_alpha(g: &Graph) -> Result<Certified<usize>, OracleError> {
    let nbr = check_cap(g, ALPHA_CAP)?;
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut s = AlphaSearch {
        nbr: &nbr,
        best: 0,
        best_size: 0,
    };
    s.search(0, all);
    Ok(Certified {
        value: s.best_size as usize,
        set: bits(s.best).collect(),
    })
}

struct RatioSearch<'a> {
    nbr: &'a [u64],
    best: Option<(Ratio, u64)>,
}

impl RatioSearch<'_> {
    /// `chosen` is independent, `seen = N(chosen)`, `cand` are the vertices
    /// still allowed to join.
    fn search(&mut self, mut chosen: u64, seen: u64, mut cand: u64) {
        // a candidate whose neighbors are all in `seen` only improves the ratio
        loop {
            let free = bits(cand).find(|&v| self.nbr[v] & !seen == 0);
            match free {
                Some(v) => {
                    chosen |= 1 << v;
                    cand &= !(1 << v);
                }
                None => break,
            }
        }
        let k = chosen.count_ones() as usize;
        let l = seen.count_ones() as usize;
        if k > 0 {
            let r = Ratio::from_usize(k, k + l);
            if self.best.is_none_or(|(b, _)| r > b) {
                self.best = Some((r, chosen));
            }
        }
        if cand == 0 {
            return;
        }
        let reach = k + cand.count_ones() as usize;
        if let Some((b, _)) = self.best {
            if Ratio::from_usize(reach, reach + l) <= b {
                return;
            }
        }
        let v = bits(cand)
            .min_by_key(|&v| (self.nbr[v] & !seen).count_ones())
            .unwrap();
        self.search(chosen | 1 << v, seen | self.nbr[v], cand & !(1 << v | self.nbr[v]));
        self.search(chosen, seen, cand & !(1 << v));
    }
}

/// `a(G) = max |I| / (|I| + |N(I)|)` over nonempty independent sets, by
/// exhaustive search with ratio bounds, for at most [`A_CAP`] vertices.
pub fn brute_a(g: &Graph) -> Result<Certified<Ratio>, OracleError> {
    let nbr = check_cap(g, A_CAP)?;
    let mut s = RatioSearch {
        nbr: &nbr,
        best: None,
    };
    s.search(0, 0, (1u64 << g.n()) - 1);
    let (value, set) = s.best.unwrap();
    Ok(Certified {
        value,
        set: bits(set).collect(),
    })
}

/// `ℓ(k)` for every `k <= α(G)` by plain enumeration of independent sets.
pub fn brute_profile(g: &Graph) -> Result<Vec<usize>, OracleError> {
    let nbr = check_cap(g, PROFILE_CAP)?;
    let mut table: Vec<usize> = vec![0];
    let mut stack = vec![(0usize, 0u64, 0u64)];
    while let Some((next, chosen, seen)) = stack.pop() {
        let k = chosen.count_ones() as usize;
        let l = seen.count_ones() as usize;
        if k == table.len() {
            table.push(l);
        } else {
            table[k] = table[k].min(l);
        }
        for (v, &nv) in nbr.iter().enumerate().skip(next) {
            if (chosen | seen) & (1 << v) == 0 {
                stack.push((v + 1, chosen | 1 << v, seen | nv));
            }
        }
    }
    Ok(table)
}

/// `i(G) = α(G) / |V(G)|`.
pub fn independence_ratio(g: &Graph) -> Result<Ratio, OracleError> {
    Ok(Ratio::from_usize(brute_alpha(g)?.value, g.n()))
}

/// `G^k = G × … × G`, associated to the left. At most [`POWER_CAP`]
/// vertices.
pub fn graph_power(g: &Graph, k: u32) -> Result<Graph, OracleError> {
    if k == 0 {
        return Err(OracleError::ZeroExponent);
    }
    let n = g
        .n()
        .checked_pow(k)
        .filter(|&n| n <= POWER_CAP)
        .ok_or(OracleError::TooLarge {
            n: g.n().saturating_pow(k),
            cap: POWER_CAP,
        })?;
    let mut out = g.clone();
    for _ in 1..k {
        out = categorical_product(&out, g);
    }
    debug_assert_eq!(out.n(), n);
    Ok(out)
}

/// Every valid split partition of `g`, by enumeration of clique sides.
pub fn enumerate_split_partitions(g: &Graph) -> Result<Vec<SplitPartition>, OracleError> {
    check_cap(g, PARTITION_CAP)?;
    let n = g.n();
    Ok((0u32..1 << n)
        .map(|mask| {
            let (c, s): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| mask & (1 << v) != 0);
            SplitPartition::new(s, c)
        })
        .filter(|p| p.is_valid_for(g))
        .collect())
}
