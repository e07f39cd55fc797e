//! Vertex decomposability: shedding vertices, a memoized decision
//! procedure, replayable witnesses, and the deletion/link h-vector
//! comparison at a shedding vertex.

use std::sync::OnceLock;

use dashmap::DashMap;
use serde::Serialize;

use crate::canon::CanonicalKey;
use crate::complex::{Induced, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::{is_cm, FieldChoice};

/// Complexes up to this many vertices (after cone points are stripped) are
/// memoized by canonical form.
pub const MEMO_MAX_VERTICES: usize = 16;

/// A vertex decomposition, with vertices in the labels of the complex it
/// decomposes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum DecompositionTree {
    /// The complex is the simplex on these vertices (possibly `{∅}`).
    Simplex { vertices: Vec<usize> },
    /// Every facet contains `cone_points`; `base` decomposes their link.
    Cone {
        cone_points: Vec<usize>,
        base: Box<DecompositionTree>,
    },
    /// `vertex` is shedding; the subtrees decompose deletion and link.
    Shed {
        vertex: usize,
        deletion: Box<DecompositionTree>,
        link: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    fn lift(self, labels: &[usize]) -> DecompositionTree {
        let map = |v: Vec<usize>| v.into_iter().map(|x| labels[x]).collect();
        match self {
            DecompositionTree::Simplex { vertices } => DecompositionTree::Simplex {
                vertices: map(vertices),
            },
            DecompositionTree::Cone { cone_points, base } => DecompositionTree::Cone {
                cone_points: map(cone_points),
                base: Box::new(base.lift(labels)),
            },
            DecompositionTree::Shed {
                vertex,
                deletion,
                link,
            } => DecompositionTree::Shed {
                vertex: labels[vertex],
                deletion: Box::new(deletion.lift(labels)),
                link: Box::new(link.lift(labels)),
            },
        }
    }

    /// Shedding vertices along the deletion spine, outermost first.
    pub fn shedding_order(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut node = self;
        loop {
            match node {
                DecompositionTree::Simplex { .. } => return out,
                DecompositionTree::Cone { base, .. } => node = base,
                DecompositionTree::Shed {
                    vertex, deletion, ..
                } => {
                    out.push(*vertex);
                    node = deletion;
                }
            }
        }
    }

    /// Replays the tree against `complex` from scratch, re-checking every
    /// shedding condition.
    pub fn verify(&self, complex: &SimplicialComplex) -> bool {
        replay(complex.facets(), self)
    }
}

fn replay(facets: &[Face], tree: &DecompositionTree) -> bool {
    let Some(first) = facets.first() else {
        return false;
    };
    if facets.iter().any(|f| f.len() != first.len()) {
        return false;
    }
    match tree {
        DecompositionTree::Simplex { vertices } => {
            facets.len() == 1 && facets[0] == Face::from_vertices(vertices.iter().copied())
        }
        DecompositionTree::Cone { cone_points, base } => {
            let cone = Face::from_vertices(cone_points.iter().copied());
            if cone.is_empty() || !facets.iter().all(|f| cone.is_subset(*f)) {
                return false;
            }
            let rest: Vec<Face> = facets.iter().map(|f| f.difference(cone)).collect();
            replay(&rest, base)
        }
        DecompositionTree::Shed {
            vertex,
            deletion,
            link,
        } => {
            let v = *vertex;
            let (with, without): (Vec<Face>, Vec<Face>) =
                facets.iter().partition(|f| f.contains(v));
            let link_facets: Vec<Face> = with.iter().map(|f| f.without(v)).collect();
            if with.is_empty() || without.is_empty() {
                return false;
            }
            // each F \ v must lie in a facet avoiding v
            let shedding = link_facets
                .iter()
                .all(|l| without.iter().any(|g| l.is_subset(*g)));
            shedding && replay(&without, deletion) && replay(&link_facets, link)
        }
    }
}

/// Vertices `v` such that no facet of `Δ \ v` is a face of `link v`.
pub fn shedding_vertices(complex: &SimplicialComplex) -> Result<Face> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(shedding_unchecked(complex))
}

fn shedding_unchecked(complex: &SimplicialComplex) -> Face {
    complex
        .vertex_set()
        .iter()
        .filter(|&v| is_shedding(complex, v))
        .collect()
}

fn is_shedding(complex: &SimplicialComplex, v: usize) -> bool {
    let s = Face::singleton(v);
    let link = complex.link_facets(s);
    complex
        .deletion_facets(s)
        .iter()
        .all(|g| !link.iter().any(|l| g.is_subset(*l)))
}

fn memo() -> &'static DashMap<CanonicalKey, bool> {
    static MEMO: OnceLock<DashMap<CanonicalKey, bool>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

fn split(complex: &SimplicialComplex, v: usize) -> (Induced, Induced) {
    let s = Face::singleton(v);
    (
        Induced::compact(complex.deletion_facets(s)),
        Induced::compact(complex.link_facets(s)),
    )
}

fn decide(complex: &SimplicialComplex) -> bool {
    if !complex.is_pure() {
        return false;
    }
    if complex.is_simplex() {
        return true;
    }
    let (base, cone) = complex.strip_cone_points();
    if !cone.is_empty() {
        return decide(&base.complex);
    }
    let key = complex
        .canonical_form_with_limit(MEMO_MAX_VERTICES)
        .ok();
    if let Some(hit) = key.as_ref().and_then(|k| memo().get(k).map(|e| *e)) {
        return hit;
    }
    let answer = shedding_unchecked(complex).iter().any(|v| {
        let (del, link) = split(complex, v);
        decide(&del.complex) && decide(&link.complex)
    });
    if let Some(k) = key {
        memo().insert(k, answer);
    }
    answer
}

fn witness(complex: &SimplicialComplex) -> DecompositionTree {
    if complex.is_simplex() {
        return DecompositionTree::Simplex {
            vertices: complex.vertex_set().to_vec(),
        };
    }
    let (base, cone) = complex.strip_cone_points();
    if !cone.is_empty() {
        return DecompositionTree::Cone {
            cone_points: cone.to_vec(),
            base: Box::new(witness(&base.complex).lift(&base.labels)),
        };
    }
    for v in shedding_unchecked(complex).iter() {
        let (del, link) = split(complex, v);
        if decide(&del.complex) && decide(&link.complex) {
            return DecompositionTree::Shed {
                vertex: v,
                deletion: Box::new(witness(&del.complex).lift(&del.labels)),
                link: Box::new(witness(&link.complex).lift(&link.labels)),
            };
        }
    }
    unreachable!("witness requested for a complex that is not vertex decomposable")
}

/// Decides vertex decomposability; on success returns a witness whose
/// shedding vertices are tried in ascending label order.
pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> Result<Option<DecompositionTree>> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(decide(complex).then(|| witness(complex)))
}

/// The decision alone, without building a witness.
pub fn vertex_decomposable(complex: &SimplicialComplex) -> Result<bool> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(decide(complex))
}

/// `h_i(link v) <= h_i(Δ \ v)` for all `i`, at a shedding vertex `v` whose
/// deletion and link are Cohen-Macaulay over `Q`.
pub fn deletion_link_h_inequality(complex: &SimplicialComplex, v: usize) -> Result<bool> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    if v >= complex.n() || !is_shedding(complex, v) {
        return Err(Error::PreconditionFailed(format!(
            "vertex {v} is not a shedding vertex"
        )));
    }
    let (del, link) = split(complex, v);
    for (name, c) in [("deletion", &del.complex), ("link", &link.complex)] {
        if !is_cm(c, FieldChoice::Rational) {
            return Err(Error::PreconditionFailed(format!(
                "{name} of vertex {v} is not Cohen-Macaulay"
            )));
        }
    }
    let hd = del.complex.h_vector();
    let hl = link.complex.h_vector();
    let len = hd.len().max(hl.len());
    Ok((0..len).all(|i| hl.get(i) <= hd.get(i)))
}
