//! Faces as single-word vertex bit masks.

use std::fmt;

/// Hard cap on the number of vertices of any complex or graph.
pub const MAX_VERTICES: usize = 63;

/// A set of at most [`MAX_VERTICES`] vertices, bit `v` set iff `v` is a member.
///
/// The derived ordering compares raw mask values, which for sets of equal
/// cardinality is the colex (squashed) order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        Face(1u64 << v)
    }

    /// The face `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        Face(vertices.into_iter().fold(0u64, |m, v| {
            debug_assert!(v < 64);
            m | (1u64 << v)
        }))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension `|F| - 1`; the empty face has dimension -1.
    #[inline]
    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    #[inline]
    pub const fn with(self, v: usize) -> Face {
        Face(self.0 | 1u64 << v)
    }

    #[inline]
    pub const fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u64 << v))
    }

    /// Largest member, if any.
    #[inline]
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of this face, the empty face included.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// Image of the face under a vertex map `v -> map[v]`.
    pub fn map(self, map: &[usize]) -> Face {
        Face::from_vertices(self.iter().map(|v| map[v]))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Face::from_vertices(iter)
    }
}

impl IntoIterator for Face {
    type Item = usize;
    type IntoIter = Vertices;

    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Subset walk `s -> (s - set) & set`, ascending in mask value.
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        let nxt = cur.wrapping_sub(self.set) & self.set;
        self.next = (nxt != 0).then_some(nxt);
        Some(Face(cur))
    }
}

/// Iterates the `k`-subsets of `{0, .., n-1}` in colex order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Face> {
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let start = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    let mut cur = start;
    std::iter::from_fn(move || {
        let c = cur?;
        if k > 0 && (n < 64 && c >= limit) {
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                Some((((ripple ^ c) >> 2) / low) | ripple)
            }
        };
        Some(Face(c))
    })
}
