//! Vertex sets of boolean quadric, linear ordering, stable-set and
//! double-covering polytopes, faces cut out by supporting hyperplanes, and
//! exact machine checks of the embeddings between them.
//!
//! Every polytope is handled through its vertex set. A face is the subset of
//! vertices lying on a family of supporting hyperplanes, so face extraction is
//! exact filtering over 0/1 vectors. Questions that need the convex hull
//! (membership, adjacency, face certificates) go through an exact rational
//! simplex in [`geometry`].

pub mod affine;
pub mod constructions;
pub mod error;
pub mod faces;
pub mod form;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod layout;
pub mod limits;
pub mod permutation;
pub mod vertex;

pub use affine::AffineMapQ;
pub use error::{Error, Result};
pub use faces::{extract_face, is_valid_inequality, three_cycle_forms, FaceSystem};
pub use form::{LinearForm, Relation};
pub use generators::{
    bqp_vertices, dcp_vertices, dcp_vertices_naive, lop_vertices, lop_vertices_oracle,
    stable_vertices, FourOnesMatrix, Graph,
};
pub use layout::{pair_index, CoordLabel, CoordLayout, LayoutKind};
pub use limits::Limits;
pub use permutation::Permutation;
pub use vertex::{Vertex01, VertexSet};
