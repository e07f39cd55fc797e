use thiserror::Error;

use crate::face::Face;

/// Errors raised by the complex, graph and construction layers.
///
/// Vertex indices in error payloads are 0-based, as everywhere inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} lies in no facet")]
    VertexUncovered(usize),
    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    CapacityExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("facet list is empty")]
    NoFacets,
    #[error("dimension mismatch: ring dimension {d} does not match vector of length {len}")]
    DimensionMismatch { d: usize, len: usize },
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("restriction to {0} contains no vertex of the complex")]
    EmptyRestriction(Face),
    #[error("not a subcomplex: face {0} is missing from the base complex")]
    NotASubcomplex(Face),
    #[error("complex is not flag")]
    NotFlag,
    #[error("complex is not pure")]
    NotPure,
    #[error("complex is not vertex decomposable")]
    NotVertexDecomposable,
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("sequence {0:?} is not the f-vector of a simplicial complex")]
    NotAnFVector(Vec<u64>),
    #[error("sequence {0:?} has negative face counts")]
    NegativeFaceCount(Vec<i64>),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("structure condition failed: {0}")]
    StructureConditionFailed(String),
    #[error("property not satisfied at vertex {vertex}")]
    PropertyNotSatisfied { vertex: usize },
    #[error("neighborhood property fails on color class {color}")]
    NpPropertyAbsent { color: usize },
    #[error("complex is not balanced")]
    NotBalanced,
    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u64),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("worker pool: {0}")]
    WorkerPool(String),
    #[error("report output: {0}")]
    Report(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
