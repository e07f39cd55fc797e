//! Flag simplicial complexes and their face numbers.
//!
//! Complexes live on at most 63 vertices and store faces as bitmasks.
//! Flag complexes are built as independence complexes of graphs. On top of
//! that sit f- and h-vectors, Kruskal-Katona admissibility, simplicial
//! homology and Cohen-Macaulayness, vertex decomposability, the
//! constructions relating h-vectors of flag complexes to f-vectors of
//! smaller complexes, and an exhaustive survey over small graphs.
//!
//! Vertices are 0-based inside the library; the text formats in [`io`] are
//! 1-based.

pub mod canon;
pub mod coloring;
pub mod complex;
pub mod constructions;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod face;
pub mod graph;
pub mod homology;
pub mod io;
pub mod kruskal_katona;
pub mod series;
pub mod survey;
pub mod vectors;

pub use canon::CanonicalKey;
pub use coloring::Coloring;
pub use complex::{Induced, SimplicialComplex};
pub use decomposition::DecompositionTree;
pub use error::{Error, Result};
pub use face::Face;
pub use graph::{Graph, Matching};
pub use homology::{FieldChoice, HomologyProfile};
pub use series::IntegerSeries;
pub use vectors::{FVector, HVector};
