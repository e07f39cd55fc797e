use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::decomposition::{is_vertex_decomposable, DecompositionTree};
use crate::error::{Error, Result};
use crate::kruskal_katona::revlex_complex;
use crate::vectors::FVector;

/// One gluing step: the rev-lex complexes built from the deletion and link
/// results, and whether the second sits inside the first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NestingStep {
    pub shedding_vertex: usize,
    pub f_deletion: FVector,
    pub f_link: FVector,
    pub nested: bool,
}

#[derive(Clone, Debug)]
pub struct HToF {
    pub complex: SimplicialComplex,
    pub steps: Vec<NestingStep>,
}

/// A complex `Γ` with `f(Γ) = h(Δ)` for a vertex decomposable flag `Δ`.
///
/// Follows a decomposition: a simplex gives `{∅}`; a cone gives the same
/// as its base; at a shedding vertex the results `Γ1`, `Γ2` for deletion and
/// link are replaced by their rev-lex complexes and glued as
/// `Γ1 ∗_{Γ2} {u}` with a new vertex `u`.
pub fn h_to_f_complex(delta: &SimplicialComplex) -> Result<HToF> {
    if !delta.is_flag() {
        return Err(Error::NotFlag);
    }
    let tree = is_vertex_decomposable(delta)?.ok_or(Error::NotVertexDecomposable)?;
    let mut steps = Vec::new();
    let complex = build(&tree, &mut steps)?;
    Ok(HToF { complex, steps })
}

fn build(tree: &DecompositionTree, steps: &mut Vec<NestingStep>) -> Result<SimplicialComplex> {
    match tree {
        DecompositionTree::Simplex { .. } => Ok(SimplicialComplex::empty_face()),
        DecompositionTree::Cone { base, .. } => build(base, steps),
        DecompositionTree::Shed {
            vertex,
            deletion,
            link,
        } => {
            let g1 = build(deletion, steps)?;
            let g2 = build(link, steps)?;
            let r1 = revlex_complex(&g1.f_vector())?;
            let r2 = revlex_complex(&g2.f_vector())?;
            let glued = r1.star_along(&r2);
            steps.push(NestingStep {
                shedding_vertex: *vertex,
                f_deletion: g1.f_vector(),
                f_link: g2.f_vector(),
                nested: glued.is_ok(),
            });
            glued.map_err(|_| {
                Error::StructureConditionFailed(format!(
                    "rev-lex complex of {} is not inside that of {}",
                    g2.f_vector(),
                    g1.f_vector()
                ))
            })
        }
    }
}
