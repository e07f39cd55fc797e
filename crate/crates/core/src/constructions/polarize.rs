use serde::Serialize;

use crate::coloring::Coloring;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::MAX_VERTICES;
use crate::graph::Graph;

/// `Δ(G)` where `G` has edges `{u_i, v_i}` for every vertex `i` of the
/// source and `{v_i, v_j}` for every non-edge `{i, j}` of the source.
/// Vertex `i` of the source becomes `u_i = i` and `v_i = n + i`.
#[derive(Clone, Debug, Serialize)]
pub struct Polarization {
    #[serde(skip)]
    pub complex: SimplicialComplex,
    #[serde(skip)]
    pub graph: Graph,
    /// `(u_i, v_i)` for each source vertex `i`.
    pub pairs: Vec<(usize, usize)>,
    /// `col(u_i) = col(v_i) = i`.
    pub coloring: Coloring,
}

/// Balanced, vertex decomposable flag complex whose h-vector is the
/// f-vector of the flag complex `gamma`.
pub fn polarize(gamma: &SimplicialComplex) -> Result<Polarization> {
    let n = gamma.n();
    if 2 * n > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "source vertices for polarization",
            got: n,
            limit: MAX_VERTICES / 2,
        });
    }
    let nonfaces = gamma.nonface_graph()?;
    let mut g = Graph::empty(2 * n);
    for i in 0..n {
        g.add_edge(i, n + i);
    }
    for (i, j) in nonfaces.edges() {
        g.add_edge(n + i, n + j);
    }
    let pairs = (0..n).map(|i| (i, n + i)).collect();
    let coloring = Coloring::new((0..2 * n).map(|v| v % n.max(1)).collect(), n);
    Ok(Polarization {
        complex: g.independence_complex(),
        graph: g,
        pairs,
        coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::Face;

    #[test]
    fn edge_becomes_four_cycle() {
        let p = polarize(&SimplicialComplex::simplex(2)).unwrap();
        // u1=0, u2=1, v1=2, v2=3
        let expected = SimplicialComplex::from_lists(4, &[&[0, 1], &[0, 3], &[1, 2], &[2, 3]]).unwrap();
        assert_eq!(p.complex, expected);
        assert_eq!(p.complex.f_vector().as_slice(), &[1, 4, 4]);
        assert_eq!(p.complex.h_vector().as_slice(), &[1, 2, 1]);
    }

    #[test]
    fn two_points() {
        let gamma = SimplicialComplex::from_lists(2, &[&[0], &[1]]).unwrap();
        let p = polarize(&gamma).unwrap();
        assert_eq!(
            p.complex.facets(),
            &[
                Face::from_vertices([0, 1]),
                Face::from_vertices([1, 2]),
                Face::from_vertices([0, 3]),
            ]
        );
        assert_eq!(p.complex.f_vector().as_slice(), &[1, 4, 3]);
        assert_eq!(p.complex.h_vector().as_slice(), &[1, 2, 0]);
        assert!(p.coloring.is_proper_for(&p.complex));
    }

    #[test]
    fn rejects_non_flag() {
        assert_eq!(
            polarize(&SimplicialComplex::simplex_boundary(3)).unwrap_err(),
            Error::NotFlag
        );
    }

    #[test]
    fn empty_face_polarizes_to_itself() {
        let p = polarize(&SimplicialComplex::empty_face()).unwrap();
        assert_eq!(p.complex, SimplicialComplex::empty_face());
    }
}
