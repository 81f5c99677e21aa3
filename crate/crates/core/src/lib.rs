//! Snark search toolkit.
//!
//! Decides 3-edge-colourability and computes the oddness of bridgeless
//! cubic graphs (by perfect-matching enumeration and, independently, by
//! direct 2-factor search), computes girth, connectivity, cyclic edge
//! connectivity and automorphism group order, and generates connected
//! cubic graphs of small order without isomorphic duplicates.

pub mod coloring;
pub mod connectivity;
pub mod error;
pub mod format;
pub mod generation;
pub mod graph;
pub mod oddness;
pub mod pipeline;
pub mod symmetry;

pub use coloring::{chromatic_index, find_three_edge_coloring, is_snark, EdgeColoring};
pub use connectivity::{
    connectivity_class, connectivity_report, cyclic_edge_connectivity, edge_connectivity,
    vertex_connectivity, ConnectivityClass, ConnectivityReport, CyclicEdgeConnectivity,
};
pub use error::{ConnectivityError, GenerationError, GraphError, OddnessError, PipelineError};
pub use format::{encode_graph6, parse_graph, parse_graph6, write_graph, GraphText, TextFormat};
pub use generation::{GenConfig, GenSpec, Generator};
pub use graph::{Component, CubicGraph, EdgeCut};
pub use oddness::{
    oddness, oddness_by_matchings, oddness_by_two_factors, OddnessMethod, OddnessMode,
    OddnessResult, PerfectMatching, TwoFactor,
};
pub use symmetry::{are_isomorphic, canonical_form, CanonicalForm};
