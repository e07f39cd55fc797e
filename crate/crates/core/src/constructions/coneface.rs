use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::{is_cm, FieldChoice};
use crate::vectors::{FVector, HVector};

fn require_balanced_flag(delta: &SimplicialComplex) -> Result<()> {
    if !delta.is_flag() {
        return Err(Error::NotFlag);
    }
    if !delta.is_balanced() {
        return Err(Error::NotBalanced);
    }
    Ok(())
}

/// Checks that every vertex `v` has some `a ∈ F0` with `(F0 \ a) ∪ v` a
/// facet; reports the first vertex that fails.
pub fn check_cfp(delta: &SimplicialComplex, f0: Face) -> Result<()> {
    if !delta.facets().contains(&f0) {
        return Err(Error::NotAFace(f0));
    }
    for v in 0..delta.n() {
        let ok = f0.contains(v)
            || f0
                .iter()
                .any(|a| delta.facets().binary_search(&f0.without(a).with(v)).is_ok());
        if !ok {
            return Err(Error::PropertyNotSatisfied { vertex: v });
        }
    }
    Ok(())
}

/// The first facet (in mask order) with the cone-face property.
pub fn cfp_facet(delta: &SimplicialComplex) -> Result<Option<Face>> {
    require_balanced_flag(delta)?;
    Ok(delta
        .facets()
        .iter()
        .copied()
        .find(|&f| check_cfp(delta, f).is_ok()))
}

/// What follows from the cone-face property at `f0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeFaceCheck {
    pub h: HVector,
    /// f-vector of the restriction to the vertices outside `f0`.
    pub f_rest: FVector,
    pub cm_rational: bool,
    pub cm_gf2: bool,
}

impl ConeFaceCheck {
    /// `h(Δ) = f(Δ_{V \ F0})` and Cohen-Macaulay over both fields.
    pub fn holds(&self) -> bool {
        self.h.trimmed().as_slice() == self.f_rest.to_signed().as_slice()
            && self.cm_rational
            && self.cm_gf2
    }
}

pub fn verify_coneface(delta: &SimplicialComplex, f0: Face) -> Result<ConeFaceCheck> {
    require_balanced_flag(delta)?;
    check_cfp(delta, f0)?;
    let rest = Face::full(delta.n()).difference(f0);
    let f_rest = if rest.is_empty() {
        SimplicialComplex::empty_face().f_vector()
    } else {
        delta.restrict(rest)?.complex.f_vector()
    };
    Ok(ConeFaceCheck {
        h: delta.h_vector(),
        f_rest,
        cm_rational: is_cm(delta, FieldChoice::Rational),
        cm_gf2: is_cm(delta, FieldChoice::GF2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::polarize;
    use crate::graph::Graph;

    #[test]
    fn simplex() {
        let s = SimplicialComplex::simplex(3);
        let f0 = cfp_facet(&s).unwrap().unwrap();
        assert_eq!(f0, Face::full(3));
        let check = verify_coneface(&s, f0).unwrap();
        assert_eq!(check.h.trimmed().as_slice(), &[1]);
        assert!(check.holds());
    }

    #[test]
    fn polarization_u_side() {
        let gamma = Graph::path(3).independence_complex();
        let p = polarize(&gamma).unwrap();
        let u = Face::full(3);
        let check = verify_coneface(&p.complex, u).unwrap();
        assert!(check.holds());
        assert_eq!(check.f_rest, gamma.f_vector());
    }

    #[test]
    fn violation_names_vertex() {
        // a path on four vertices: 0-1-2-3 as a 1-dimensional complex
        let path = SimplicialComplex::from_lists(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        assert_eq!(
            check_cfp(&path, Face::from_vertices([0, 1])),
            Err(Error::PropertyNotSatisfied { vertex: 3 })
        );
    }
}
