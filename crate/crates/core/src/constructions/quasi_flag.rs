use std::sync::OnceLock;

use dashmap::DashMap;

use crate::complex::{maximal_faces, Induced, SimplicialComplex};
use crate::enumerate::{complexes_with_f_vector, flag_realization};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::kruskal_katona::is_f_vector;
use crate::vectors::FVector;

/// Largest vertex count the quasi-flag search accepts.
pub const QUASI_FLAG_MAX_VERTICES: usize = 8;

/// How the recursion treats the deletion and the link of the chosen vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuasiFlagMode {
    /// Only their f-vectors must be those of quasi-flag complexes.
    FVector,
    /// The deletion and link must themselves be quasi-flag.
    Strict,
}

fn check_size(n: usize, bound: usize) -> Result<()> {
    let limit = bound.min(QUASI_FLAG_MAX_VERTICES);
    if n > limit {
        return Err(Error::CapacityExceeded {
            what: "vertices for quasi-flag search",
            got: n,
            limit,
        });
    }
    Ok(())
}

/// `link v` equals the induced subcomplex on its own vertex set.
fn link_is_induced(complex: &SimplicialComplex, v: usize) -> bool {
    let link = complex.link_facets(Face::singleton(v));
    let w = link.iter().fold(Face::EMPTY, |a, &f| a.union(f));
    maximal_faces(complex.restriction_facets(w)) == link
}

/// `{∅}` (no vertices) is quasi-flag; otherwise some vertex `v` has an
/// induced link, and deletion and link pass the test selected by `mode`.
pub fn is_quasi_flag(complex: &SimplicialComplex, mode: QuasiFlagMode) -> Result<bool> {
    check_size(complex.n(), QUASI_FLAG_MAX_VERTICES)?;
    decide(complex, mode)
}

fn decide(complex: &SimplicialComplex, mode: QuasiFlagMode) -> Result<bool> {
    if complex.n() == 0 {
        return Ok(true);
    }
    for v in 0..complex.n() {
        if !link_is_induced(complex, v) {
            continue;
        }
        let s = Face::singleton(v);
        let del = Induced::compact(complex.deletion_facets(s)).complex;
        let link = Induced::compact(complex.link_facets(s)).complex;
        let ok = match mode {
            QuasiFlagMode::FVector => {
                f_vector_decide(&del.f_vector())? && f_vector_decide(&link.f_vector())?
            }
            QuasiFlagMode::Strict => decide(&del, mode)? && decide(&link, mode)?,
        };
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

fn memo() -> &'static DashMap<FVector, bool> {
    static MEMO: OnceLock<DashMap<FVector, bool>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// Whether some complex with f-vector `f` is quasi-flag (in the f-vector
/// form of the recursion). `f` may have at most `n_bound` vertices, and
/// `n_bound` is capped at [`QUASI_FLAG_MAX_VERTICES`].
pub fn fvector_is_quasi_flag(f: &FVector, n_bound: usize) -> Result<bool> {
    check_size(f.vertices() as usize, n_bound)?;
    f_vector_decide(f)
}

fn f_vector_decide(f: &FVector) -> Result<bool> {
    if !is_f_vector(f.as_slice()) {
        return Ok(false);
    }
    if let Some(hit) = memo().get(f).map(|e| *e) {
        return Ok(hit);
    }
    // flag complexes are quasi-flag
    let answer = if flag_realization(f)?.is_some() {
        true
    } else {
        let mut any = false;
        for c in complexes_with_f_vector(f)? {
            if decide(&c, QuasiFlagMode::FVector)? {
                any = true;
                break;
            }
        }
        any
    };
    memo().insert(f.clone(), answer);
    Ok(answer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn fv(v: &[u64]) -> FVector {
        FVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn complete_graphs_are_not_quasi_flag() {
        for n in 3..=5 {
            let kn = SimplicialComplex::from_facets(
                n,
                crate::face::k_subsets(n, 2).collect(),
            )
            .unwrap();
            for mode in [QuasiFlagMode::FVector, QuasiFlagMode::Strict] {
                assert!(!is_quasi_flag(&kn, mode).unwrap());
            }
            let f: Vec<u64> = vec![1, n as u64, (n * (n - 1) / 2) as u64];
            assert!(!fvector_is_quasi_flag(&fv(&f), 8).unwrap());
        }
    }

    #[test]
    fn one_four_five_one() {
        let c = SimplicialComplex::from_lists(4, &[&[0, 1], &[0, 2], &[1, 2, 3]]).unwrap();
        // only vertex 3 has an induced link
        let induced: Vec<usize> = (0..4).filter(|&v| link_is_induced(&c, v)).collect();
        assert_eq!(induced, vec![3]);
        assert!(!is_quasi_flag(&c, QuasiFlagMode::FVector).unwrap());
        assert!(!fvector_is_quasi_flag(&fv(&[1, 4, 5, 1]), 8).unwrap());
    }

    #[test]
    fn flag_complexes_are_quasi_flag() {
        let c5 = Graph::cycle(5).independence_complex();
        assert!(is_quasi_flag(&c5, QuasiFlagMode::FVector).unwrap());
        assert!(is_quasi_flag(&c5, QuasiFlagMode::Strict).unwrap());
        assert!(is_quasi_flag(&SimplicialComplex::empty_face(), QuasiFlagMode::Strict).unwrap());
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            fvector_is_quasi_flag(&fv(&[1, 9]), 8),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(matches!(
            fvector_is_quasi_flag(&fv(&[1, 5]), 4),
            Err(Error::CapacityExceeded { .. })
        ));
    }
}
