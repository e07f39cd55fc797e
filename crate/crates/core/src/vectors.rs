//! Face vectors and h-vectors, and the exact transforms between them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// `(f_{-1}, f_0, .., f_{d-1})`: entry `i` counts the faces with `i` vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// Wraps raw counts. The first entry must be 1 and counts must not vanish
    /// before the end.
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.first() != Some(&1) || entries.iter().any(|&x| x == 0) {
            return Err(Error::NotAnFVector(entries));
        }
        Ok(FVector(entries))
    }

    pub(crate) fn from_counts_unchecked(entries: Vec<u64>) -> Self {
        FVector(entries)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// Ring dimension `d = dim + 1`.
    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    /// Number of faces with `k` vertices (zero beyond the top dimension).
    pub fn count(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn vertices(&self) -> u64 {
        self.count(1)
    }

    /// The same counts read as an h-vector candidate.
    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64).collect()
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// `(h_0, .., h_d)`. Entries may be negative for complexes that are not
/// Cohen-Macaulay; the stored form keeps trailing zeros so that `d` is
/// recoverable from the length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn new(entries: Vec<i64>) -> Self {
        HVector(entries)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Trailing zeros removed: `(h_0, .., h_s)` with `h_s != 0`.
    pub fn trimmed(&self) -> HVector {
        let mut v = self.0.clone();
        while v.len() > 1 && v.last() == Some(&0) {
            v.pop();
        }
        HVector(v)
    }

    /// The trimmed vector as a face-count sequence, if every entry is positive.
    pub fn as_f_candidate(&self) -> Option<Vec<u64>> {
        let t = self.trimmed();
        t.0.iter()
            .map(|&x| u64::try_from(x).ok().filter(|&x| x > 0))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl fmt::Debug for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// `h_j = sum_{i<=j} (-1)^{j-i} C(d-i, j-i) f_{i-1}` for `j = 0..=d`.
///
/// `d` must be the ring dimension of the complex the f-vector came from,
/// i.e. `f.len() - 1`.
pub fn h_vector(f: &FVector, d: usize) -> Result<HVector> {
    if d != f.d() {
        return Err(Error::DimensionMismatch { d, len: f.0.len() });
    }
    let h = (0..=d)
        .map(|j| {
            let s: i128 = (0..=j)
                .map(|i| {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial((d - i) as u64, (j - i) as u64) as i128 * f.count(i) as i128
                })
                .sum();
            i64::try_from(s).expect("h-vector entry overflow")
        })
        .collect();
    Ok(HVector(h))
}

/// Inverse transform: `f_{i-1} = sum_{j<=i} C(d-j, i-j) h_j` for `i = 0..=d`.
///
/// `h` is zero-padded up to length `d + 1`. Fails if a resulting count is
/// negative, which cannot happen when `h` came from a complex of ring
/// dimension `d`.
pub fn f_from_h(h: &HVector, d: usize) -> Result<FVector> {
    if h.len() > d + 1 && h.0[d + 1..].iter().any(|&x| x != 0) {
        return Err(Error::DimensionMismatch { d, len: h.len() });
    }
    let f: Vec<i64> = (0..=d)
        .map(|i| {
            let s: i128 = (0..=i)
                .map(|j| binomial((d - j) as u64, (i - j) as u64) as i128 * h.get(j) as i128)
                .sum();
            i64::try_from(s).expect("f-vector entry overflow")
        })
        .collect();
    if f.iter().any(|&x| x < 0) {
        return Err(Error::NegativeFaceCount(f));
    }
    Ok(FVector(f.into_iter().map(|x| x as u64).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(v: &[u64]) -> FVector {
        FVector::new(v.to_vec()).unwrap()
    }

    /// Expands `sum_i f_{i-1} (t-1)^{d-i}` as a polynomial and reads off the
    /// coefficients of `t^{d-j}`.
    fn h_by_polynomial(f: &[u64]) -> Vec<i64> {
        let d = f.len() - 1;
        let mut poly = vec![0i64; d + 1]; // poly[k] = coefficient of t^k
        for (i, &fi) in f.iter().enumerate() {
            // (t - 1)^{d-i}
            let e = d - i;
            let mut p = vec![1i64];
            for _ in 0..e {
                let mut q = vec![0i64; p.len() + 1];
                for (k, &c) in p.iter().enumerate() {
                    q[k + 1] += c;
                    q[k] -= c;
                }
                p = q;
            }
            for (k, &c) in p.iter().enumerate() {
                poly[k] += c * fi as i64;
            }
        }
        (0..=d).map(|j| poly[d - j]).collect()
    }

    #[test]
    fn empty_triangle() {
        let h = h_vector(&fv(&[1, 3, 3]), 2).unwrap();
        assert_eq!(h.as_slice(), &[1, 1, 1]);
        assert_eq!(h.as_slice(), h_by_polynomial(&[1, 3, 3]).as_slice());
    }

    #[test]
    fn simplex_has_trivial_h() {
        for d in 0..8u64 {
            let f: Vec<u64> = (0..=d).map(|k| binomial(d, k)).collect();
            let h = h_vector(&fv(&f), d as usize).unwrap();
            assert_eq!(h.trimmed().as_slice(), &[1]);
        }
    }

    #[test]
    fn six_one_example() {
        let h = h_vector(&fv(&[1, 9, 20, 12]), 3).unwrap();
        assert_eq!(h.as_slice(), &[1, 6, 5, 0]);
        assert_eq!(h.as_slice(), h_by_polynomial(&[1, 9, 20, 12]).as_slice());
    }

    #[test]
    fn f_from_h_examples() {
        assert_eq!(
            f_from_h(&HVector::new(vec![1, 5, 3]), 3).unwrap().as_slice(),
            &[1, 8, 16, 9]
        );
        // oracle: h(1,8,16,9) by polynomial expansion is (1,5,3,0)
        assert_eq!(h_by_polynomial(&[1, 8, 16, 9]), vec![1, 5, 3, 0]);
        assert_eq!(
            f_from_h(&HVector::new(vec![1]), 2).unwrap().as_slice(),
            &[1, 2, 1]
        );
    }

    #[test]
    fn dimension_must_match() {
        assert!(matches!(
            h_vector(&fv(&[1, 3, 3]), 1),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(h_vector(&fv(&[1, 3, 3]), 3).is_err());
        assert!(f_from_h(&HVector::new(vec![1, 2, 3]), 1).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(62, 31), 465428353255261088);
    }

    #[test]
    fn trimmed_and_candidate() {
        let h = HVector::new(vec![1, 5, 3, 0, 0]);
        assert_eq!(h.trimmed().as_slice(), &[1, 5, 3]);
        assert_eq!(h.as_f_candidate(), Some(vec![1, 5, 3]));
        assert_eq!(HVector::new(vec![1, 2, -1]).as_f_candidate(), None);
    }

    proptest::proptest! {
        #[test]
        fn transform_matches_polynomial_expansion(f in proptest::collection::vec(1u64..40, 1..7)) {
            let mut f = f;
            f[0] = 1;
            let d = f.len() - 1;
            let h = h_vector(&FVector(f.clone()), d).unwrap();
            let expected = h_by_polynomial(&f);
            proptest::prop_assert_eq!(h.as_slice(), expected.as_slice());
            let back = f_from_h(&h, d).unwrap();
            proptest::prop_assert_eq!(back.as_slice(), f.as_slice());
        }
    }
}
