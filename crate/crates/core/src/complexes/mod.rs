//! Graphs, simplicial complexes, their ideals and combinatorial classifiers.

pub mod classify;
pub mod complex;
pub mod graph;

pub use classify::{base_form, condition_v, condition_vi, contains_induced, is_chordal, is_near_cone, BaseForm, Peeling};
pub use complex::{edge_ideal, graph_face_ideal, shifted_complex, SimplicialComplex};
pub use graph::Graph;
