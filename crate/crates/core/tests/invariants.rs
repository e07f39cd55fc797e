//! Exhaustive sweeps over small graphs and complexes.

mod common;

use std::collections::BTreeSet;

use flagcx_core::complex::star;
use flagcx_core::constructions::{cfp_facet, polarize, verify_coneface};
use flagcx_core::decomposition::{is_vertex_decomposable, shedding_vertices};
use flagcx_core::enumerate::graph_classes;
use flagcx_core::homology::{is_cm, reduced_betti};
use flagcx_core::kruskal_katona::revlex_complex;
use flagcx_core::series::koszul_obstruction;
use flagcx_core::{Face, FVector, FieldChoice, Graph, SimplicialComplex};

use common::*;

fn graphs(range: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    range
        .flat_map(|n| graph_classes(n).unwrap().iter().map(|c| c.graph.clone()).collect::<Vec<_>>())
        .collect()
}

fn masks(c: &SimplicialComplex) -> Vec<u64> {
    c.faces().iter().map(|f| f.mask()).collect()
}

fn maximal(faces: &[u64]) -> Vec<Face> {
    faces
        .iter()
        .copied()
        .filter(|&s| !faces.iter().any(|&t| t != s && t & s == s))
        .map(Face::from_mask)
        .collect()
}

/// Complexes whose vertex set is all of `0..n`, as face lists.
fn covering_complexes(n: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for_each_complex(n, |faces| {
        let support = faces.iter().fold(0, |a, &s| a | s);
        if support == (1u64 << n) - 1 {
            out.push(faces.to_vec());
        }
    });
    out
}

#[test]
fn flag_complex_and_nonface_graph_invert_each_other() {
    for g in graphs(1..=7) {
        let delta = g.independence_complex();
        assert!(delta.is_flag());
        assert_eq!(delta.nonface_graph().unwrap(), g);
        let faces = independent_sets(g.n(), &adjacency(g.n(), &g.edges()));
        assert_eq!(masks(&delta).into_iter().collect::<BTreeSet<_>>(), faces.into_iter().collect());
    }
}

#[test]
fn star_adds_face_counts() {
    for n in 1..=4 {
        let all = covering_complexes(n);
        for base in &all {
            let base_facets = maximal(base);
            let f1 = f_of_faces(base);
            let base_set: BTreeSet<u64> = base.iter().copied().collect();
            // every subcomplex of the base, on any subset of its vertices
            for_each_complex(n, |sub| {
                if !sub.iter().all(|s| base_set.contains(s)) {
                    return;
                }
                let apex = Face::singleton(n);
                let facets = star(&base_facets, &maximal(sub), &[apex]);
                let c = SimplicialComplex::from_facets(n + 1, facets).unwrap();
                let f2 = f_of_faces(sub);
                let mut want = f1.clone();
                want.resize(want.len().max(f2.len() + 1), 0);
                for (i, &x) in f2.iter().enumerate() {
                    want[i + 1] += x;
                }
                assert_eq!(c.f_vector().as_slice(), want.as_slice());
            });
        }
    }
}

#[test]
fn complex_rebuilt_from_deletion_and_link_of_any_face() {
    for n in 1..=5 {
        for faces in covering_complexes(n) {
            let delta = SimplicialComplex::from_facets(n, maximal(&faces)).unwrap();
            for &s in faces.iter().filter(|&&s| s != 0) {
                let f = Face::from_mask(s);
                let del = delta.delete_face(f).unwrap().lifted_facets();
                let link = delta.link(f).unwrap().lifted_facets();
                let rebuilt = SimplicialComplex::from_facets(n, star(&del, &link, &[f])).unwrap();
                assert_eq!(rebuilt, delta, "face {f}");
            }
        }
    }
}

#[test]
fn balanced_colorings_are_proper() {
    for g in graphs(1..=7) {
        let delta = g.independence_complex();
        if let Some(c) = delta.find_balanced_coloring() {
            assert!(c.num_colors() == delta.d());
            assert!(c.colors().iter().all(|&x| x < delta.d()));
            assert!(is_proper_coloring(&masks(&delta), c.colors()));
        }
    }
}

#[test]
fn minimal_covers_complement_maximal_independent_sets() {
    for g in graphs(1..=7) {
        let full = Face::full(g.n());
        let covers: BTreeSet<Face> = g.minimal_vertex_covers().into_iter().collect();
        let complements: BTreeSet<Face> = g.maximal_independent_sets().iter().map(|&s| full.difference(s)).collect();
        assert_eq!(covers, complements);
        let oracle: BTreeSet<Face> = minimal_vertex_covers(g.n(), &adjacency(g.n(), &g.edges()))
            .into_iter()
            .map(Face::from_mask)
            .collect();
        assert_eq!(covers, oracle);
    }
}

#[test]
fn unmixed_iff_pure() {
    for g in graphs(1..=7) {
        let adj = adjacency(g.n(), &g.edges());
        assert_eq!(g.is_unmixed(), g.independence_complex().is_pure());
        assert_eq!(g.is_unmixed(), unmixed(g.n(), &adj));
    }
}

#[test]
fn half_cover_graphs_have_perfect_matchings() {
    for d in 1..=4 {
        for class in graph_classes(2 * d).unwrap().iter() {
            let g = &class.graph;
            if !g.isolated_vertices().is_empty() || g.covering_number() != d {
                continue;
            }
            let maximum: Vec<Face> = g.maximal_independent_sets().into_iter().filter(|s| s.len() == d).collect();
            let covered = maximum.iter().fold(Face::EMPTY, |a, &s| a.union(s));
            if covered != Face::full(2 * d) {
                continue;
            }
            let m = g.perfect_matching().expect("perfect matching");
            assert!(m.is_perfect(2 * d));
            assert!(perfect_matchings(2 * d, &adjacency(2 * d, &g.edges())) > 0);
        }
    }
}

#[test]
fn right_edges_by_neighbors_and_by_covers() {
    for g in graphs(2..=7) {
        let covers = minimal_vertex_covers(g.n(), &adjacency(g.n(), &g.edges()));
        for (a, b) in g.edges() {
            let by_covers = covers.iter().all(|c| (c >> a & 1) + (c >> b & 1) == 1);
            assert_eq!(g.is_right_edge(a, b).unwrap(), by_covers, "{g:?} edge {a}-{b}");
        }
    }
}

#[test]
fn euler_characteristic_matches_betti_numbers() {
    let mut complexes: Vec<SimplicialComplex> = graphs(1..=7).iter().map(Graph::independence_complex).collect();
    for n in 1..=4 {
        for faces in covering_complexes(n) {
            complexes.push(SimplicialComplex::from_facets(n, maximal(&faces)).unwrap());
        }
    }
    for c in &complexes {
        let f = c.f_vector();
        // sum_{i >= -1} (-1)^i f_i
        let chi: i64 = f
            .as_slice()
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 1 { x as i64 } else { -(x as i64) })
            .sum();
        for field in [FieldChoice::Rational, FieldChoice::GF2, FieldChoice::Prime(3)] {
            assert_eq!(reduced_betti(c, field).euler_characteristic(), chi, "{c:?}");
        }
    }
}

#[test]
fn vertex_decomposable_complexes_are_cohen_macaulay() {
    let mut vd = 0;
    for g in graphs(1..=7) {
        let delta = g.independence_complex();
        if !delta.is_pure() {
            continue;
        }
        if let Some(tree) = is_vertex_decomposable(&delta).unwrap() {
            vd += 1;
            assert!(tree.verify(&delta));
            assert!(is_cm(&delta, FieldChoice::Rational), "{g:?}");
            assert!(is_cm(&delta, FieldChoice::GF2), "{g:?}");
        }
    }
    assert!(vd > 0);
}

#[test]
fn h_vector_splits_at_shedding_vertices() {
    for g in graphs(2..=7) {
        let delta = g.independence_complex();
        if !delta.is_pure() {
            continue;
        }
        for v in shedding_vertices(&delta).unwrap().iter() {
            let del = delta.delete_vertex(v).unwrap().complex;
            let link = delta.link(Face::singleton(v)).unwrap().complex;
            let d = delta.d();
            let h = h_of_f(&f_of_faces(&masks(&delta)), d);
            let hd = h_of_f(&f_of_faces(&masks(&del)), d);
            let hl = h_of_f(&f_of_faces(&masks(&link)), d - 1);
            for i in 0..=d {
                let shifted = if i == 0 { 0 } else { hl[i - 1] };
                assert_eq!(h[i], hd[i] + shifted, "{g:?} vertex {v}");
            }
        }
    }
}

#[test]
fn revlex_complexes_realize_and_nest() {
    // every admissible f with f_0 <= 6
    let all: Vec<Vec<u64>> = all_f_vectors(6).into_iter().filter(|f| f.len() > 1).collect();
    let mut built = Vec::new();
    for seq in &all {
        let f = FVector::new(seq.clone()).unwrap();
        let c = revlex_complex(&f).unwrap();
        assert_eq!(c.f_vector(), f);
        let faces: BTreeSet<u64> = masks(&c).into_iter().collect();
        for &s in &faces {
            for v in 0..64 {
                if s >> v & 1 == 1 {
                    assert!(faces.contains(&(s & !(1 << v))));
                }
            }
        }
        built.push((seq.clone(), faces));
    }
    for (a, fa) in &built {
        for (b, fb) in &built {
            let below = a.len() <= b.len() && a.iter().zip(b).all(|(x, y)| x <= y);
            if below {
                assert!(fa.is_subset(fb), "{a:?} not nested in {b:?}");
            }
        }
    }
}

#[test]
fn polarizations_have_cone_faces_and_no_koszul_obstruction() {
    for g in graphs(1..=6) {
        let gamma = g.independence_complex();
        let p = polarize(&gamma).unwrap();
        assert_eq!(koszul_obstruction(&p.complex.h_vector(), 16), None, "{g:?}");
        if g.n() <= 5 {
            let f0 = cfp_facet(&p.complex).unwrap().expect("cone-face facet");
            assert!(verify_coneface(&p.complex, f0).unwrap().holds(), "{g:?}");
        }
    }
}
