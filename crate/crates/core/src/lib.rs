//! Maximum independent sets in categorical products of cographs and
//! splitgraphs, and the tensor capacity (ultimate categorical independence
//! ratio) of cographs.
//!
//! The crate is `no_std` and only needs `alloc`. Text formats, the CLI and
//! anything touching the filesystem live in the `catprod` companion crate.

#![no_std]

extern crate alloc;

pub mod capacity;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod product;
pub mod ratio;
pub mod recognition;

pub use capacity::{
    a_ratio, a_star, binding_from_a, capacity_trichotomy, neighborhood_profile,
    tensor_capacity_cograph, BestRatio, CapacityError, CapacityValue, NeighborhoodProfile,
    Trichotomy,
};
pub use generators::{generate, Family, GeneratorError, GeneratorSpec, SplitMix64};
pub use graph::{
    categorical_product, complement, connected_components, disjoint_union, find_induced_cycle5,
    find_induced_path4, is_bipartite, join, two_coloring, Graph, GraphError, VertexPair,
};
pub use matching::{
    bipartite_max_independent_set, has_fractional_perfect_matching, max_matching,
    BipartiteGraph, BipartiteSet, Matching,
};
pub use oracle::{brute_a, brute_alpha, graph_power, independence_ratio, OracleError};
pub use product::{
    alpha_product_cographs, alpha_product_splitgraphs, certificate_is_independent, AlphaResult,
    ProductError, SplitCase,
};
pub use ratio::Ratio;
pub use recognition::{
    build_cotree, realize, split_partition, Cotree, CotreeLabel, NotCograph, NotSplit,
    SplitPartition,
};
