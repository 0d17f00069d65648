//! Pivots, fundamental graphs, binary matroids and cut-rank over GF(2),
//! with seeded property campaigns that check them against brute force.
//!
//! All text formats are line-oriented ASCII with 0-based indices; lines
//! starting with `#` are comments.

pub mod cutrank;
pub mod error;
pub mod extremal;
pub mod gf2;
pub mod graph;
pub mod matroid;
pub mod pivot;
pub mod structure;
pub mod text;
pub mod verify;

pub use cutrank::{cut_rank, find_low_rank_separation, is_k_rank_connected, Separation};
pub use error::{Error, Result};
pub use extremal::{gen_c6_blowup_example, gen_ktt_example, gen_random_instance, Instance, Provenance};
pub use gf2::{matrix_pivot, rank, xor_rank, BitMatrix};
pub use graph::{
    blow_up, degree_stats, find_complete_bipartite, is_c4_free, vertex_connectivity, BiGraph, Biclique, DegreeStats,
    Degrees, Graph, Side,
};
pub use matroid::{
    cographic_matroid, fundamental_graph, graphic_matroid, BinaryMatroid, ConnectivityWitness, MultiGraph,
    SpanningTree,
};
pub use pivot::{are_isomorphic, canonical_form, is_pivot_minor, pivot, pivot_orbit, PivotMinorStep};
pub use structure::{
    constant_block_partition, perturbation_partition, split_tree, BlockPartition, BlockTag, Perturbation, TreeSplit,
};
pub use verify::{run_campaign, Campaign, CampaignParams, CampaignReport, Check, Outcome, Source};
