//! Binomial representations, shadow bounds and rev-lex complexes.
//!
//! Indexing convention: entry `k` of a face-count sequence counts faces with
//! `k` vertices (so entry 0 is the empty face). The bound on entry `k + 1` is
//! computed from the `k`-binomial representation of entry `k`.

use serde::Serialize;

use crate::complex::{maximal_faces, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{k_subsets, Face, MAX_VERTICES};
use crate::vectors::{binomial, FVector};

/// `m = C(a_i, i) + C(a_{i-1}, i-1) + .. + C(a_j, j)` with
/// `a_i > a_{i-1} > .. > a_j >= j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialRep {
    /// `(a_k, k)` pairs, `k` descending.
    pub terms: Vec<(u64, u64)>,
}

impl BinomialRep {
    pub fn value(&self) -> u64 {
        self.terms.iter().map(|&(a, k)| binomial(a, k)).sum()
    }
}

/// Greedy `i`-binomial representation of `m`; empty for `m = 0`.
pub fn binomial_rep(m: u64, i: u64) -> BinomialRep {
    let mut terms = Vec::new();
    let mut rest = m;
    let mut k = i;
    while rest > 0 && k > 0 {
        // largest a with C(a, k) <= rest
        let mut a = k;
        while binomial(a + 1, k) <= rest {
            a += 1;
        }
        terms.push((a, k));
        rest -= binomial(a, k);
        k -= 1;
    }
    debug_assert_eq!(rest, 0);
    BinomialRep { terms }
}

/// `m^(i) = sum C(a_k, k + 1)`: the most `(i+1)`-sets that can have all their
/// `i`-subsets among `m` given `i`-sets.
pub fn kk_bound(m: u64, i: u64) -> u64 {
    binomial_rep(m, i)
        .terms
        .iter()
        .map(|&(a, k)| binomial(a, k + 1))
        .sum()
}

/// The first entry of a sequence that exceeds its shadow bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Position in the sequence (number of vertices per face).
    pub index: usize,
    pub value: u64,
    pub bound: u64,
}

/// Why a sequence fails to be an f-vector, if it does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Inadmissible {
    /// Entry 0 is not 1.
    BadLeadingEntry { value: u64 },
    /// A zero count followed by a nonzero one, or a trailing zero.
    ZeroEntry { index: usize },
    Bound(Violation),
}

/// `None` if `seq` is the f-vector of a simplicial complex.
pub fn first_violation(seq: &[u64]) -> Option<Inadmissible> {
    match seq.first() {
        Some(&1) => {}
        other => {
            return Some(Inadmissible::BadLeadingEntry {
                value: other.copied().unwrap_or(0),
            })
        }
    }
    if let Some(index) = seq.iter().position(|&x| x == 0) {
        return Some(Inadmissible::ZeroEntry { index });
    }
    for k in 1..seq.len().saturating_sub(1) {
        let bound = kk_bound(seq[k], k as u64);
        if seq[k + 1] > bound {
            return Some(Inadmissible::Bound(Violation {
                index: k + 1,
                value: seq[k + 1],
                bound,
            }));
        }
    }
    None
}

pub fn is_f_vector(seq: &[u64]) -> bool {
    first_violation(seq).is_none()
}

/// The rev-lex (compressed) complex with f-vector `f`: for each `k`, the
/// first `f_k` `k`-subsets of `{0, 1, ..}` in colex order.
pub fn revlex_complex(f: &FVector) -> Result<SimplicialComplex> {
    let seq = f.as_slice();
    if !is_f_vector(seq) {
        return Err(Error::NotAnFVector(seq.to_vec()));
    }
    let n = f.vertices() as usize;
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "vertex count",
            got: n,
            limit: MAX_VERTICES,
        });
    }
    let mut faces: Vec<Face> = Vec::new();
    for (k, &count) in seq.iter().enumerate().skip(1) {
        faces.extend(k_subsets(n, k).take(count as usize));
    }
    if faces.is_empty() {
        return Ok(SimplicialComplex::empty_face());
    }
    Ok(SimplicialComplex::normalized(n, maximal_faces(faces)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(v: &[u64]) -> FVector {
        FVector::new(v.to_vec()).unwrap()
    }

    /// Direct search for the greedy top coefficient.
    fn greedy_top(m: u64, i: u64) -> u64 {
        (i..200).take_while(|&a| binomial(a, i) <= m).last().unwrap()
    }

    #[test]
    fn representations() {
        let r = binomial_rep(5, 2);
        assert_eq!(r.terms, vec![(3, 2), (2, 1)]);
        assert_eq!(r.terms[0].0, greedy_top(5, 2));
        assert_eq!(binomial_rep(35, 3).terms, vec![(7, 3)]);
        assert_eq!(binomial_rep(1, 4).terms, vec![(4, 4)]);
        for m in 1..300 {
            for i in 1..6 {
                let r = binomial_rep(m, i);
                assert_eq!(r.value(), m);
                assert!(r.terms.windows(2).all(|w| w[0].0 > w[1].0));
                assert!(r.terms.iter().all(|&(a, k)| a >= k && k >= 1));
            }
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(kk_bound(3, 2), 1);
        assert_eq!(kk_bound(6, 2), 4);
        assert_eq!(kk_bound(0, 3), 0);
        assert_eq!(kk_bound(4, 1), 6);
    }

    #[test]
    fn admissibility() {
        assert!(is_f_vector(&[1, 4, 5, 1]));
        assert_eq!(
            first_violation(&[1, 3, 4]),
            Some(Inadmissible::Bound(Violation { index: 2, value: 4, bound: 3 }))
        );
        assert!(!is_f_vector(&[2, 1]));
        assert!(!is_f_vector(&[1, 0, 0]));
        assert!(is_f_vector(&[1]));
    }

    #[test]
    fn revlex_examples() {
        let c = revlex_complex(&fv(&[1, 3, 1])).unwrap();
        assert_eq!(
            c.facets(),
            &[Face::from_vertices([0, 1]), Face::singleton(2)]
        );
        let c = revlex_complex(&fv(&[1, 4])).unwrap();
        assert_eq!(c.facets().len(), 4);
        assert_eq!(revlex_complex(&fv(&[1])).unwrap(), SimplicialComplex::empty_face());
        assert!(revlex_complex(&fv(&[1, 3, 4])).is_err());
    }

    #[test]
    fn revlex_realizes_every_admissible_vector() {
        // all admissible sequences with entries up to 20 and length up to 5
        fn walk(seq: &mut Vec<u64>, checked: &mut usize) {
            if is_f_vector(seq) {
                let c = revlex_complex(&fv(seq)).unwrap();
                assert_eq!(c.f_vector().as_slice(), seq.as_slice());
                *checked += 1;
            } else {
                return;
            }
            if seq.len() == 5 {
                return;
            }
            for x in 1..=20 {
                seq.push(x);
                walk(seq, checked);
                seq.pop();
            }
        }
        let mut checked = 0;
        walk(&mut vec![1], &mut checked);
        assert!(checked > 1000);
    }
}
