mod common;

use proptest::prelude::*;

use flagcx_core::decomposition::is_vertex_decomposable;
use flagcx_core::homology::{is_cm, reduced_betti};
use flagcx_core::io::{parse_complex, parse_graph, write_complex, write_graph};
use flagcx_core::kruskal_katona::{is_f_vector, revlex_complex};
use flagcx_core::series::{poincare_coeffs, verify_reciprocal};
use flagcx_core::vectors::{f_from_h, h_vector};
use flagcx_core::{Face, FVector, FieldChoice, Graph, HVector, SimplicialComplex};

use common::*;

fn complex_strategy(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 1..8).prop_map(move |masks| {
            let mut facets: Vec<Face> = masks.into_iter().map(Face::from_mask).collect();
            // cover every vertex
            facets.extend((0..n).map(Face::singleton));
            SimplicialComplex::from_facets(n, facets).unwrap()
        })
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let m = pairs.len();
        prop::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn with_permutation<T: std::fmt::Debug + Clone>(
    s: impl Strategy<Value = T>,
    size: impl Fn(&T) -> usize + Clone + 'static,
) -> impl Strategy<Value = (T, Vec<usize>)> {
    s.prop_flat_map(move |x| {
        let n = size(&x);
        (Just(x), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn h_round_trips_and_matches_oracle(c in complex_strategy(8)) {
        let f = c.f_vector();
        let h = h_vector(&f, c.d()).unwrap();
        let expected = h_of_f(f.as_slice(), c.d());
        prop_assert_eq!(h.as_slice(), expected.as_slice());
        prop_assert_eq!(f_from_h(&h, c.d()).unwrap(), f);
        if c.is_pure() {
            prop_assert_eq!(h.as_slice().iter().sum::<i64>(), c.facets().len() as i64);
        }
    }

    #[test]
    fn homology_ignores_labels((c, perm) in with_permutation(complex_strategy(7), |c: &SimplicialComplex| c.n())) {
        let relabeled = c.relabel(&perm);
        for field in [FieldChoice::Rational, FieldChoice::GF2] {
            prop_assert_eq!(reduced_betti(&c, field), reduced_betti(&relabeled, field));
            prop_assert_eq!(is_cm(&c, field), is_cm(&relabeled, field));
        }
        prop_assert_eq!(c.canonical_form().unwrap(), relabeled.canonical_form().unwrap());
        prop_assert_eq!(c.f_vector(), relabeled.f_vector());
    }

    #[test]
    fn graph_invariants_ignore_labels((g, perm) in with_permutation(graph_strategy(8), |g: &Graph| g.n())) {
        let h = g.relabel(&perm);
        prop_assert_eq!(g.canonical_form().0, h.canonical_form().0);
        let (a, b) = (g.independence_complex(), h.independence_complex());
        prop_assert_eq!(a.f_vector(), b.f_vector());
        prop_assert_eq!(g.has_unique_perfect_matching(), h.has_unique_perfect_matching());
        prop_assert_eq!(g.ordered_right_matching().is_some(), h.ordered_right_matching().is_some());
        if a.is_pure() {
            let (va, vb) = (is_vertex_decomposable(&a).unwrap(), is_vertex_decomposable(&b).unwrap());
            prop_assert_eq!(va.is_some(), vb.is_some());
        }
    }

    #[test]
    fn decompositions_replay(g in graph_strategy(9)) {
        let delta = g.independence_complex();
        if delta.is_pure() {
            if let Some(tree) = is_vertex_decomposable(&delta).unwrap() {
                prop_assert!(tree.verify(&delta));
                prop_assert!(is_cm(&delta, FieldChoice::Rational));
                prop_assert!(is_cm(&delta, FieldChoice::GF2));
            }
        }
    }

    #[test]
    fn matchings_match_brute_force(g in graph_strategy(8)) {
        let adj = adjacency(g.n(), &g.edges());
        let count = perfect_matchings(g.n(), &adj);
        prop_assert_eq!(g.count_perfect_matchings(usize::MAX), count);
        prop_assert_eq!(g.has_unique_perfect_matching(), count == 1);
        prop_assert_eq!(g.perfect_matching().is_some(), count > 0);
    }

    #[test]
    fn kruskal_katona_matches_revlex(seq in prop::collection::vec(1u64..20, 1..5)) {
        let mut full = vec![1];
        full.extend(seq);
        let admissible = is_f_vector(&full);
        if admissible {
            let f = FVector::new(full.clone()).unwrap();
            prop_assert_eq!(revlex_complex(&f).unwrap().f_vector(), f);
        }
        if full[1] <= 5 {
            prop_assert_eq!(admissible, all_f_vectors(full[1] as usize).contains(&full));
        }
    }

    #[test]
    fn series_inverts_denominator(h in prop::collection::vec(-6i64..12, 1..5), terms in 1usize..24) {
        let mut h = h;
        h[0] = 1;
        let hv = HVector::new(h.clone());
        let s = poincare_coeffs(&hv, terms);
        prop_assert!(verify_reciprocal(&hv, &s));
        let oracle: Vec<String> = reciprocal(&h, terms).iter().map(|a| a.to_string()).collect();
        let got: Vec<String> = s.coeffs().iter().map(|a| a.to_string()).collect();
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn text_formats_round_trip(c in complex_strategy(10), g in graph_strategy(10)) {
        prop_assert_eq!(parse_complex(&write_complex(&c)).unwrap(), c.clone());
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}
