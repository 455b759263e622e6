//! Hexagon-shaped benzenoids O{p,q,r}, their Kekulé structures (perfect
//! matchings), and the correspondence between Kekulé structures of O{n,2,r}
//! and 2 x n weakly increasing matrices with bound r + 1.

mod graph;
mod matching;
mod vbars;

pub use graph::{build_benzenoid, BenzenoidGraph, Edge, EdgeId, EdgeKind, Hexagon, Vertex, VertexId};
pub use matching::{
    constrained_completion, enumerate_kekule, is_kekule, KekuleStructure, MatchingSearch, DEFAULT_EDGE_BUDGET,
};
pub use vbars::{
    enumerate_vbar_tuples, extract_vbars, kekule_to_matrix, matrix_to_kekule, reconstruct_from_vbars,
    validate_vbar_tuple, VBarTuple,
};
