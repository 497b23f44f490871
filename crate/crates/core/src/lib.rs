//! Frustrated triangles in small graphs.
//!
//! A triple of vertices is frustrated when it spans one or three edges, and
//! `f(G)` counts them. This crate counts `f` three independent ways, works
//! with vertex switching (which preserves `f`), computes the exact set `F_n`
//! of attainable values for `n <= 8`, builds the graph families that realize
//! the structure of `F_n`, and checks that structure exhaustively.

pub mod constructors;
pub mod error;
pub mod frustration;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod spectrum;
pub mod switching;
pub mod theory;

pub use constructors::{
    clique_plus_matching, complete_bipartite, counterexample_pair, extremal_for_edges, matching,
    star, thm2_family, Thm2Params,
};
pub use error::{Error, Result};
pub use frustration::{
    f_degree_formula, f_k_count, f_pair_formula, f_scan, flip_pair_delta, frustrated_on_pair,
    parity_of_f, FrustrationCount, Parity,
};
pub use graph::{Graph, StructureProfile, MAX_VERTICES};
pub use graph6::Graph6Error;
pub use iso::{are_isomorphic, is_isomorphism};
pub use spectrum::{
    enumerate_full, pair_set, restricted_spectra, restricted_spectrum, spectrum_by_recursion,
    spectrum_recursive, verify_structure, verify_thm1_structure, verify_thm2_family, verify_thm3,
    EnumerationOptions, Method, RestrictedSpectrum, SpectrumResult,
};
pub use switching::{
    flip_vertex, isolate_normal_form, odd_pair_count, switch_subset, switching_equivalent,
    t_exact, Bipartition, SwitchWitness, TExact,
};
pub use theory::{
    bipartite_distance, classify_f, interval_superset, interval_table, max_f_for_edges,
    min_f_for_edges, Band, BipartiteDistance, Classification, IntervalTable, MaxBound, MinBound,
};
