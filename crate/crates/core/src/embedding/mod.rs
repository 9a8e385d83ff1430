//! Plane pseudographs as combinatorial embeddings.
//!
//! An [`EmbeddedGraph`] is a rotation system over [`Dart`]s. Everything else
//! in the crate (face walks, facial distances, conflict graphs, charges) is
//! derived from it, so the rotation system is the single source of truth for
//! the faces of a graph.

mod dart;
pub mod generate;
mod graph;
mod medial;
mod peg;
mod profile;
mod surgery;

pub use dart::Dart;
pub use generate::{catalog, Family};
pub use graph::{EmbeddedGraph, FaceWalk, Warning};
pub use medial::{medial, Medial};
pub use peg::{parse_peg, to_peg};
pub use profile::{face_profiles, FaceProfile};
pub use surgery::Surgery;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} rotation lists, found {found}")]
    RotationCount { expected: usize, found: usize },
    #[error("edge {edge} has endpoint {vertex} out of range")]
    EndpointOutOfRange { edge: usize, vertex: usize },
    #[error("dart {dart} listed at vertex {vertex} is out of range")]
    DartOutOfRange { vertex: usize, dart: usize },
    #[error("duplicate dart {dart}")]
    DuplicateDart { dart: usize },
    #[error("dart {dart} does not appear in any rotation")]
    MissingDart { dart: usize },
    #[error("dart {dart} listed at vertex {listed_at}, but its endpoint is {expected}")]
    WrongVertex { dart: usize, listed_at: usize, expected: usize },
    #[error("rotation system is not a plane embedding (V - E + F = {euler} with {components} component(s))")]
    NotPlane { euler: i64, components: usize },
    #[error("edge {edge} out of range (graph has {m} edges)")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("face {face} out of range (graph has {count} faces)")]
    FaceOutOfRange { face: usize, count: usize },
    #[error("non-simple face {face}: its walk repeats a vertex")]
    NonSimpleFace { face: usize },
    #[error("edges {e} and {f} share a vertex")]
    EdgesShareVertex { e: usize, f: usize },
    #[error("edge {edge} does not occur exactly once on face {face}")]
    NotOnFace { edge: usize, face: usize },
    #[error("edge {edge} is a loop")]
    LoopEdge { edge: usize },
    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}
