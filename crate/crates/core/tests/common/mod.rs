#![allow(dead_code)]

use catprod_core::generators::{random_cograph, random_graph, random_splitgraph};
use catprod_core::{Graph, SplitMix64};

/// Graph on `n` vertices whose edges follow the bits of `mask` over the
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(
        n,
        pairs.enumerate().filter(|(i, _)| mask.rotate_right(*i as u32) & 1 == 1).map(|(_, e)| e),
    )
    .unwrap()
}

pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * (n - 1) / 2;
    (0u64..1 << pairs).map(move |m| graph_from_mask(n, m))
}

/// Random cograph pair with `n_g * n_h <= max_product`.
pub fn cograph_pair(rng: &mut SplitMix64, max_product: usize) -> (Graph, Graph) {
    let (a, b) = sizes(rng, max_product);
    (random_cograph(a, rng), random_cograph(b, rng))
}

pub fn splitgraph_pair(rng: &mut SplitMix64, max_product: usize) -> (Graph, Graph) {
    let (a, b) = sizes(rng, max_product);
    let (p, q) = (rng.below(101), rng.below(101));
    (random_splitgraph(a, p, rng), random_splitgraph(b, q, rng))
}

pub fn sizes(rng: &mut SplitMix64, max_product: usize) -> (usize, usize) {
    let a = 1 + rng.below(max_product.min(10));
    let b = 1 + rng.below((max_product / a).min(10));
    (a, b)
}

pub fn connected_random_graph(rng: &mut SplitMix64, n: usize) -> Graph {
    loop {
        let g = random_graph(n, 20 + rng.below(70), rng);
        if catprod_core::connected_components(&g).len() == 1 {
            return g;
        }
    }
}
