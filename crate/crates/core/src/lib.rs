//! Minimum-dimension isometric embeddings of trees into integer lattices.
//!
//! A tree with `n` leaves embeds isometrically into `Z^d` for
//! `d = ceil(n / 2)` and into no smaller lattice. This crate builds such
//! embeddings, derives hypercube and grid addressing schemes from them, and
//! checks minimality with contraction certificates and an exhaustive search.

pub mod address;
pub mod cli;
pub mod embed;
pub mod tree;
pub mod verify;

pub use address::{grid_address, hypercube_address, AddressError, AddressScheme, AddressTable};
pub use embed::{
    embed_spider, embed_tree, grid_profile, lattice_dimension, normalize, pruning_sequence,
    EmbedError, Embedding, GridProfile, LatticePoint, PrunedPair,
};
pub use tree::{
    parse_edge_list, DistanceIndex, HangingPath, ShapeClass, Tree, TreeError, VertexId,
};
pub use verify::{
    admits_embedding, brute_force_min_dimension, contract_inner_edge, contract_to_star,
    verify_isometric, verify_isometric_parallel, verify_sampled, ContractionStep, IsometryReport,
    LeafDirection, LowerBoundCertificate, VerifyError, Violation,
};
