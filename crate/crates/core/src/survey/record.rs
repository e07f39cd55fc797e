use serde::Serialize;

use crate::canon::CanonicalKey;
use crate::complex::SimplicialComplex;
use crate::decomposition::vertex_decomposable;
use crate::enumerate::{flag_realization, ENUMERATION_MAX_VERTICES};
use crate::error::Result;
use crate::graph::Graph;
use crate::homology::{is_cm, is_strongly_connected, FieldChoice};
use crate::kruskal_katona::is_f_vector;
use crate::vectors::{FVector, HVector};

/// The five conditions of the structure theorem for a `(d-1)`-dimensional
/// flag complex on `2d` vertices without cone points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub ordered_right_matching: bool,
    pub strongly_connected: bool,
    /// Over both the rationals and GF(2).
    pub cohen_macaulay: bool,
    pub unique_matching_unmixed: bool,
    pub vertex_decomposable: bool,
}

pub const CONDITION_NAMES: [&str; 5] = [
    "ordered_right_matching",
    "strongly_connected",
    "cohen_macaulay",
    "unique_matching_unmixed",
    "vertex_decomposable",
];

impl Equivalence {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.ordered_right_matching,
            self.strongly_connected,
            self.cohen_macaulay,
            self.unique_matching_unmixed,
            self.vertex_decomposable,
        ]
    }
}

/// Everything the survey records about the independence complex of one
/// graph class.
#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub key: CanonicalKey,
    pub n: usize,
    pub dim: isize,
    pub pure: bool,
    pub flag: bool,
    pub balanced: bool,
    pub cone_points: usize,
    pub vd: bool,
    pub cm0: bool,
    pub cm2: bool,
    pub f: FVector,
    pub h: HVector,
    /// The trimmed h-vector satisfies the Kruskal-Katona bounds.
    pub kk_ok: bool,
    /// The trimmed h-vector is the f-vector of some flag complex.
    pub flag_realizable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<Equivalence>,
    #[serde(skip)]
    pub graph: Graph,
}

impl ClassRecord {
    /// Cohen-Macaulay over at least one of the tested fields.
    pub fn cm(&self) -> bool {
        self.cm0 || self.cm2
    }

    pub fn complex(&self) -> SimplicialComplex {
        self.graph.independence_complex()
    }

    /// The trimmed h-vector read as an f-vector, if all its entries are
    /// positive.
    pub fn h_as_f(&self) -> Option<FVector> {
        self.h.as_f_candidate().and_then(|v| FVector::new(v).ok())
    }
}

pub fn analyze_class(key: CanonicalKey, graph: Graph) -> Result<ClassRecord> {
    let delta = graph.independence_complex();
    let n = delta.n();
    let pure = delta.is_pure();
    let cone_points = delta.cone_points().len();
    let cm0 = is_cm(&delta, FieldChoice::Rational);
    let cm2 = is_cm(&delta, FieldChoice::GF2);
    let vd = pure && vertex_decomposable(&delta)?;
    let h = delta.h_vector();
    let candidate = h.as_f_candidate();
    let kk_ok = candidate.as_deref().is_some_and(is_f_vector);
    let flag_realizable = match candidate {
        Some(seq) if kk_ok && seq.get(1).map_or(0, |&v| v as usize) <= ENUMERATION_MAX_VERTICES => {
            flag_realization(&FVector::new(seq)?)?.is_some()
        }
        _ => false,
    };
    let d = delta.d();
    let equivalence = (n == 2 * d && cone_points == 0).then(|| Equivalence {
        ordered_right_matching: graph.ordered_right_matching().is_some(),
        strongly_connected: is_strongly_connected(&delta),
        cohen_macaulay: cm0 && cm2,
        unique_matching_unmixed: graph.has_unique_perfect_matching() && graph.is_unmixed(),
        vertex_decomposable: vd,
    });
    Ok(ClassRecord {
        key,
        n,
        dim: delta.dim(),
        pure,
        flag: delta.is_flag(),
        balanced: delta.is_balanced(),
        cone_points,
        vd,
        cm0,
        cm2,
        f: delta.f_vector(),
        h,
        kk_ok,
        flag_realizable,
        equivalence,
        graph,
    })
}
