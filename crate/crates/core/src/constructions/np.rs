use serde::Serialize;

use crate::coloring::Coloring;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::graph::Graph;
use crate::homology::{is_cm, FieldChoice};
use crate::vectors::FVector;

/// For one color class `V_i` with more than two vertices: a pair
/// `(y1, y2)` such that every `x ∈ V_i` has `N[y1] ⊆ N[x]` or
/// `N[y2] ⊆ N[x]` in the nonface graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NpPair {
    pub color: usize,
    pub y1: usize,
    pub y2: usize,
}

/// One rewiring step: the nonface edge `{x, y}` is removed and `{x, z}`
/// added, `z` a cone point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NpStep {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub f_after: FVector,
    pub cone_points_after: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct NpModification {
    #[serde(skip)]
    pub complex: SimplicialComplex,
    #[serde(skip)]
    pub graph: Graph,
    pub pairs: Vec<NpPair>,
    pub steps: Vec<NpStep>,
    pub coloring: Coloring,
    pub cm_rational: bool,
    pub cm_gf2: bool,
}

fn dominated(g: &Graph, y: usize, x: usize) -> bool {
    g.closed_neighbors(y).is_subset(g.closed_neighbors(x))
}

fn pairs_for(g: &Graph, classes: &[Face]) -> Result<Vec<NpPair>> {
    let mut out = Vec::new();
    for (color, class) in classes.iter().enumerate() {
        if class.len() <= 2 {
            continue;
        }
        let members = class.to_vec();
        let found = members.iter().enumerate().find_map(|(i, &y1)| {
            members[i + 1..].iter().find_map(|&y2| {
                members
                    .iter()
                    .all(|&x| dominated(g, y1, x) || dominated(g, y2, x))
                    .then_some(NpPair { color, y1, y2 })
            })
        });
        out.push(found.ok_or(Error::NpPropertyAbsent { color })?);
    }
    Ok(out)
}

fn check_coloring(delta: &SimplicialComplex, coloring: &Coloring) -> Result<Coloring> {
    if !delta.is_flag() {
        return Err(Error::NotFlag);
    }
    if !coloring.is_proper_for(delta) || coloring.num_colors() != delta.d() {
        return Err(Error::NotBalanced);
    }
    Ok(coloring.normalized())
}

/// The neighborhood pair of every color class with more than two vertices.
/// Classes are numbered in order of their smallest vertex; within a class
/// the lexicographically first valid pair is returned.
pub fn np_property(delta: &SimplicialComplex, coloring: &Coloring) -> Result<Vec<NpPair>> {
    let coloring = check_coloring(delta, coloring)?;
    pairs_for(&delta.nonface_graph()?, &coloring.classes())
}

/// Rewires a Cohen-Macaulay balanced flag complex on `2d` vertices with `r`
/// cone points and `r` excess vertices into one without cone points and
/// with the same f-vector.
///
/// Excess vertices `x` (class members other than the pair) are taken by
/// class, then label, and matched to cone points in ascending order. For
/// each, `y_x` is a pair member whose closed neighborhood lies in `N[x]`,
/// the lower label when both do.
pub fn np_modify(delta: &SimplicialComplex, coloring: &Coloring) -> Result<NpModification> {
    let coloring = check_coloring(delta, coloring)?;
    let d = delta.d();
    if delta.n() != 2 * d {
        return Err(Error::PreconditionFailed(format!(
            "{} vertices, expected twice the ring dimension {d}",
            delta.n()
        )));
    }
    if !is_cm(delta, FieldChoice::Rational) {
        return Err(Error::PreconditionFailed("complex is not Cohen-Macaulay".into()));
    }
    let g0 = delta.nonface_graph()?;
    let classes = coloring.classes();
    let pairs = pairs_for(&g0, &classes)?;
    let mut excess: Vec<(usize, usize)> = Vec::new();
    for p in &pairs {
        for x in classes[p.color].iter() {
            if x == p.y1 || x == p.y2 {
                continue;
            }
            let y = if dominated(&g0, p.y1, x) { p.y1 } else { p.y2 };
            excess.push((x, y));
        }
    }
    let cones = delta.cone_points().to_vec();
    if excess.len() != cones.len() {
        return Err(Error::PreconditionFailed(format!(
            "{} excess vertices but {} cone points",
            excess.len(),
            cones.len()
        )));
    }
    let f0 = delta.f_vector();
    let mut g = g0;
    let mut colors = coloring.colors().to_vec();
    let mut steps = Vec::new();
    let mut cone_count = cones.len();
    for (&(x, y), &z) in excess.iter().zip(&cones) {
        g.remove_edge(x, y);
        g.add_edge(x, z);
        colors[x] = colors[z];
        let c = g.independence_complex();
        let f_after = c.f_vector();
        let cone_points_after = c.cone_points().len();
        if f_after != f0 || cone_points_after + 1 != cone_count {
            return Err(Error::StructureConditionFailed(format!(
                "step ({x}, {y}, {z}) changed the f-vector to {f_after} with {cone_points_after} cone points"
            )));
        }
        cone_count = cone_points_after;
        steps.push(NpStep {
            x,
            y,
            z,
            f_after,
            cone_points_after,
        });
    }
    let complex = g.independence_complex();
    let coloring = Coloring::new(colors, d);
    if !coloring.is_proper_for(&complex) {
        return Err(Error::StructureConditionFailed(
            "rewired complex is not balanced under the moved coloring".into(),
        ));
    }
    Ok(NpModification {
        cm_rational: is_cm(&complex, FieldChoice::Rational),
        cm_gf2: is_cm(&complex, FieldChoice::GF2),
        complex,
        graph: g,
        pairs,
        steps,
        coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 1-based edge list to a graph.
    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let e: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn clique_edges(sets: &[&[usize]]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in sets {
            for (i, &a) in s.iter().enumerate() {
                for &b in &s[i + 1..] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn pairwise_incomparable_neighborhoods_fail() {
        // cliques {1,4,6}, {2,5,7}, {3,8}; N[1] adds 5, N[4] adds 7, N[6] adds 2
        let mut edges = clique_edges(&[&[1, 4, 6], &[2, 5, 7], &[3, 8]]);
        edges.extend([(1, 5), (4, 7), (6, 2)]);
        let g = graph(8, &edges);
        let delta = g.independence_complex();
        let coloring = delta.find_balanced_coloring().unwrap();
        assert_eq!(
            coloring.normalized().classes()[0],
            Face::from_vertices([0, 3, 5])
        );
        assert_eq!(
            g.closed_neighbors(0),
            Face::from_vertices([0, 3, 5, 4])
        );
        assert_eq!(
            np_property(&delta, &coloring),
            Err(Error::NpPropertyAbsent { color: 0 })
        );
    }

    #[test]
    fn two_cone_points_rewired() {
        // cliques {1,4,7}, {2,5,8}, {3,6}; cross edges as stated, plus
        // {1,5} and {1,6}; 9 and 10 are cone points
        let mut edges = clique_edges(&[&[1, 4, 7], &[2, 5, 8], &[3, 6]]);
        edges.extend([(7, 3), (7, 2), (7, 8), (2, 6), (8, 6), (1, 5), (1, 6)]);
        let g = graph(10, &edges);
        let delta = g.independence_complex();
        assert_eq!(delta.cone_points(), Face::from_vertices([8, 9]));
        assert_eq!(g.closed_neighbors(3), Face::from_vertices([0, 3, 6]));
        assert_eq!(g.closed_neighbors(6), Face::from_vertices([0, 3, 6, 1, 2, 7]));
        assert_eq!(g.closed_neighbors(1), g.closed_neighbors(7));
        let coloring = delta.find_balanced_coloring().unwrap();
        let m = np_modify(&delta, &coloring).unwrap();
        let moves: Vec<(usize, usize, usize)> = m.steps.iter().map(|s| (s.x + 1, s.y + 1, s.z + 1)).collect();
        assert_eq!(moves, vec![(7, 4, 9), (8, 2, 10)]);
        assert_eq!(m.complex.f_vector(), delta.f_vector());
        assert!(m.complex.cone_points().is_empty());
        assert!(m.cm_rational && m.cm_gf2);
        assert!(m.complex.is_balanced());
    }
}
