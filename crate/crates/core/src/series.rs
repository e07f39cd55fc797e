//! Reciprocal power series of `p(z) = sum (-1)^i h_i z^i`.
//!
//! A negative coefficient of `1/p(z)` shows that no Koszul algebra has
//! Hilbert series `p(-z)`, which rules `h` out as the h-vector of a
//! Cohen-Macaulay flag complex.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::vectors::HVector;

/// Exact coefficients `a_0, .., a_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSeries(pub Vec<BigInt>);

impl IntegerSeries {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Index of the first negative coefficient.
    pub fn first_negative(&self) -> Option<usize> {
        self.0.iter().position(|a| a.is_negative())
    }
}

impl Serialize for IntegerSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|a| a.to_string()))
    }
}

/// Signed denominator coefficients `(-1)^i h_i`.
fn denominator(h: &HVector) -> Vec<BigInt> {
    h.as_slice()
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let x = BigInt::from(x);
            if i % 2 == 0 {
                x
            } else {
                -x
            }
        })
        .collect()
}

/// `terms` coefficients of `1/p(z)`, from
/// `a_n = sum_{i>=1} (-1)^{i+1} h_i a_{n-i}`. Requires `h_0 = 1`.
pub fn poincare_coeffs(h: &HVector, terms: usize) -> IntegerSeries {
    assert_eq!(h.get(0), 1, "constant term must be 1");
    let p = denominator(h);
    let mut a: Vec<BigInt> = Vec::with_capacity(terms);
    for n in 0..terms {
        if n == 0 {
            a.push(BigInt::one());
            continue;
        }
        let mut s = BigInt::zero();
        for (i, pi) in p.iter().enumerate().skip(1).take(n) {
            s -= pi * &a[n - i];
        }
        a.push(s);
    }
    IntegerSeries(a)
}

/// Least `n < horizon` with `a_n < 0`.
pub fn koszul_obstruction(h: &HVector, horizon: usize) -> Option<usize> {
    poincare_coeffs(h, horizon).first_negative()
}

/// Checks `p(z) * series = 1` up to the length of the series.
pub fn verify_reciprocal(h: &HVector, series: &IntegerSeries) -> bool {
    let p = denominator(h);
    let a = series.coeffs();
    (0..a.len()).all(|n| {
        let mut s = BigInt::zero();
        for (i, pi) in p.iter().enumerate().take(n + 1) {
            s += pi * &a[n - i];
        }
        s == if n == 0 { BigInt::one() } else { BigInt::zero() }
    })
}
