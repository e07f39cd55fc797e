//! Reduced simplicial homology over `Q` or `F_p`, Reisner's criterion, and
//! strong connectivity.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Coefficient field, identified by its characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FieldChoice {
    pub const GF2: FieldChoice = FieldChoice::Prime(2);

    pub fn from_characteristic(c: u64) -> Result<Self> {
        match c {
            0 => Ok(FieldChoice::Rational),
            p if is_prime(p) && p < 1 << 31 => Ok(FieldChoice::Prime(p)),
            other => Err(Error::BadCharacteristic(other)),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldChoice::Rational => 0,
            FieldChoice::Prime(p) => p,
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => f.write_str("Q"),
            FieldChoice::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for FieldChoice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.characteristic())
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, .., β̃_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub field: FieldChoice,
    pub betti: Vec<u64>,
}

impl HomologyProfile {
    /// `β̃_i` for `i >= -1`; zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.betti.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    /// `sum (-1)^i β̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Faces grouped by number of vertices, each group sorted.
fn faces_by_size(complex: &SimplicialComplex) -> Vec<Vec<Face>> {
    let mut by = vec![Vec::new(); complex.d() + 1];
    for f in complex.faces() {
        by[f.len()].push(f);
    }
    for v in &mut by {
        v.sort_unstable();
    }
    by
}

/// Boundary matrix from faces with `k` vertices to faces with `k - 1`, as
/// sparse columns of `(row, ±1)`.
fn boundary_columns(lower: &[Face], upper: &[Face]) -> Vec<Vec<(usize, i8)>> {
    let index: HashMap<Face, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    upper
        .iter()
        .map(|&f| {
            f.iter()
                .enumerate()
                .map(|(pos, v)| (index[&f.without(v)], if pos % 2 == 0 { 1 } else { -1 }))
                .collect()
        })
        .collect()
}

/// Rank of the boundary map `C_i -> C_{i-1}` (faces of dimension `i` to
/// dimension `i - 1`); `i = 0` is the augmentation.
pub fn boundary_rank(complex: &SimplicialComplex, i: isize, field: FieldChoice) -> usize {
    let by = faces_by_size(complex);
    let k = (i + 1) as usize;
    if i < 0 || k >= by.len() {
        return 0;
    }
    rank_of(&by[k - 1], &by[k], field)
}

fn rank_of(lower: &[Face], upper: &[Face], field: FieldChoice) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let cols = boundary_columns(lower, upper);
    match field {
        FieldChoice::Prime(2) => rank_gf2(lower.len(), &cols),
        FieldChoice::Prime(p) => rank_mod_p(lower.len(), &cols, p),
        FieldChoice::Rational => rank_rational(lower.len(), &cols),
    }
}

fn rank_gf2(rows: usize, cols: &[Vec<(usize, i8)>]) -> usize {
    let words = rows.div_ceil(64);
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; rows];
    let mut rank = 0;
    for col in cols {
        let mut v = vec![0u64; words];
        for &(r, _) in col {
            v[r / 64] ^= 1 << (r % 64);
        }
        loop {
            let Some(lead) = v.iter().enumerate().rev().find(|(_, &w)| w != 0) else {
                break;
            };
            let pivot = lead.0 * 64 + 63 - lead.1.leading_zeros() as usize;
            match &basis[pivot] {
                Some(b) => v.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
                None => {
                    basis[pivot] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn rank_mod_p(rows: usize, cols: &[Vec<(usize, i8)>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = cols
        .iter()
        .map(|c| {
            let mut v = vec![0u64; rows];
            for &(r, s) in c {
                v[r] = if s > 0 { 1 } else { p - 1 };
            }
            v
        })
        .collect();
    let inv = |a: u64| pow_mod(a, p - 2, p);
    let mut rank = 0;
    for r in 0..rows {
        let Some(piv) = (rank..m.len()).find(|&c| m[c][r] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let scale = inv(m[rank][r]);
        for x in m[rank].iter_mut() {
            *x = *x * scale % p;
        }
        let pivot_col = m[rank].clone();
        for c in rank + 1..m.len() {
            let factor = m[c][r];
            if factor != 0 {
                for (x, &y) in m[c].iter_mut().zip(&pivot_col) {
                    *x = (*x + (p - factor) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Fraction-free (Bareiss) elimination; runs on `i128` and restarts on
/// `BigInt` if an intermediate overflows.
fn rank_rational(rows: usize, cols: &[Vec<(usize, i8)>]) -> usize {
    let small: Vec<Vec<i128>> = cols
        .iter()
        .map(|c| {
            let mut v = vec![0; rows];
            for &(r, s) in c {
                v[r] = s as i128;
            }
            v
        })
        .collect();
    if let Some(r) = bareiss_i128(small) {
        return r;
    }
    bareiss_big(
        cols.iter()
            .map(|c| {
                let mut v = vec![BigInt::zero(); rows];
                for &(r, s) in c {
                    v[r] = BigInt::from(s);
                }
                v
            })
            .collect(),
    )
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let width = m.first().map_or(0, |v| v.len());
    let mut prev: i128 = 1;
    let mut rank = 0;
    for r in 0..width {
        let Some(piv) = (rank..m.len()).find(|&c| m[c][r] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let pivot = m[rank][r];
        let (head, tail) = m.split_at_mut(rank + 1);
        let pc = &head[rank];
        for col in tail.iter_mut() {
            let f = col[r];
            for j in 0..width {
                let num = pivot.checked_mul(col[j])?.checked_sub(f.checked_mul(pc[j])?)?;
                col[j] = num / prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let width = m.first().map_or(0, |v| v.len());
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for r in 0..width {
        let Some(piv) = (rank..m.len()).find(|&c| !m[c][r].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let pivot = m[rank][r].clone();
        let (head, tail) = m.split_at_mut(rank + 1);
        let pc = &head[rank];
        for col in tail.iter_mut() {
            let f = col[r].clone();
            for j in 0..width {
                col[j] = (&pivot * &col[j] - &f * &pc[j]) / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers from `f_i - rank ∂_i - rank ∂_{i+1}`.
pub fn reduced_betti(complex: &SimplicialComplex, field: FieldChoice) -> HomologyProfile {
    let by = faces_by_size(complex);
    // ranks[k] = rank of the map from faces of size k to size k - 1
    let ranks: Vec<usize> = (0..=by.len())
        .map(|k| {
            if k == 0 || k >= by.len() {
                0
            } else {
                rank_of(&by[k - 1], &by[k], field)
            }
        })
        .collect();
    let betti = (0..by.len())
        .map(|k| (by[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect();
    HomologyProfile { field, betti }
}

/// Connected 1-skeleton, by union-find over facets.
fn is_connected(complex: &SimplicialComplex) -> bool {
    let n = complex.n();
    if n == 0 {
        return true;
    }
    let mut reach = complex.facets()[0];
    loop {
        let grown = complex
            .facets()
            .iter()
            .filter(|f| !f.intersection(reach).is_empty())
            .fold(reach, |acc, &f| acc.union(f));
        if grown == reach {
            return reach == Face::full(n);
        }
        reach = grown;
    }
}

/// Ranks modulo this prime never exceed rational ranks, so a complex that
/// is acyclic in some degree modulo it is acyclic there over the rationals.
const FILTER_PRIME: u64 = 2_147_483_647;

/// `β̃_i = 0` for all `i < dim`.
fn homology_below_top_vanishes(complex: &SimplicialComplex, field: FieldChoice) -> bool {
    match complex.dim() {
        // nonempty complexes have β̃_{-1} = 0
        d if d <= 0 => true,
        1 => is_connected(complex),
        d => {
            if !is_connected(complex) {
                return false;
            }
            // cones are acyclic
            if !complex.cone_points().is_empty() {
                return true;
            }
            let vanishes = |field| {
                let p = reduced_betti(complex, field);
                (1..d).all(|i| p.get(i) == 0)
            };
            match field {
                FieldChoice::Rational => vanishes(FieldChoice::Prime(FILTER_PRIME)) || vanishes(field),
                _ => vanishes(field),
            }
        }
    }
}

/// Reisner's criterion: every link (of every face, including the empty
/// one) has vanishing reduced homology below its top dimension.
pub fn is_cm(complex: &SimplicialComplex, field: FieldChoice) -> bool {
    if !complex.is_pure() {
        return false;
    }
    complex.faces().into_iter().all(|f| {
        let link = crate::complex::Induced::compact(complex.link_facets(f));
        homology_below_top_vanishes(&link.complex, field)
    })
}

/// Pure, with the facet-ridge graph connected.
pub fn is_strongly_connected(complex: &SimplicialComplex) -> bool {
    if !complex.is_pure() {
        return false;
    }
    let facets = complex.facets();
    let ridge = complex.d().saturating_sub(1);
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..facets.len() {
            if !seen[j] && facets[i].intersection(facets[j]).len() == ridge {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
