//! Canonical labeling of small set systems (facet lists, edge lists).
//!
//! The search walks an individualization/refinement tree: vertex colors are
//! refined to a stable partition, then the first non-singleton cell is split
//! by individualizing each of its members in turn. Every leaf is a total
//! order of the vertices; the key is the lexicographically least sorted list
//! of relabeled masks over all leaves. Refinement and cell selection depend
//! only on the structure, so the key is an isomorphism invariant.
//!
//! Branches that differ by a transposition automorphism are skipped.

use std::fmt;

use serde::{Serialize, Serializer};

/// Default vertex limit for complex canonical forms.
pub const CANON_MAX_VERTICES: usize = 10;

/// An isomorphism-class key: the vertex count plus the canonical mask list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: usize,
    sets: Vec<u64>,
}

impl CanonicalKey {
    pub fn new(n: usize, sets: Vec<u64>) -> Self {
        CanonicalKey { n, sets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{s:x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[inline]
fn mix(mut x: u64) -> u64 {
    // splitmix64 finalizer; fixed so that keys are stable across builds
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

struct Search<'a> {
    n: usize,
    sets: &'a [u64],
    sorted: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    /// Re-ranks `colors` by `(color, signature)` until the number of cells is
    /// stable. Cells keep their relative order, so refinement only splits.
    fn refine(&self, colors: &mut [u32]) {
        let mut cells = count_cells(colors);
        loop {
            let mut sig = vec![0u64; self.n];
            for &s in self.sets {
                // multiset hash of member colors, size included
                let mut h = mix(s.count_ones() as u64);
                let mut m = s;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    h = h.wrapping_add(mix(colors[v] as u64 + 0x51));
                }
                let hs = mix(h);
                let mut m = s;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    sig[v] = sig[v].wrapping_add(hs);
                }
            }
            let mut keyed: Vec<(u32, u64, usize)> =
                (0..self.n).map(|v| (colors[v], sig[v], v)).collect();
            keyed.sort_unstable();
            let mut rank = 0u32;
            for i in 0..keyed.len() {
                if i > 0 && (keyed[i].0, keyed[i].1) != (keyed[i - 1].0, keyed[i - 1].1) {
                    rank += 1;
                }
                colors[keyed[i].2] = rank;
            }
            let now = count_cells(colors);
            if now == cells {
                return;
            }
            cells = now;
        }
    }

    fn swap_is_automorphism(&self, u: usize, v: usize) -> bool {
        let mut img: Vec<u64> = self.sets.iter().map(|&s| swap_bits(s, u, v)).collect();
        img.sort_unstable();
        img == self.sorted
    }

    fn descend(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        if count_cells(&colors) == self.n {
            self.leaf(&colors);
            return;
        }
        // first non-singleton cell in color order
        let mut size = vec![0usize; self.n];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..self.n).find(|&c| size[c] > 1).unwrap() as u32;
        let members: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.swap_is_automorphism(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<u32> = colors.iter().map(|&c| c * 2 + 1).collect();
            next[v] -= 1;
            self.descend(next);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut enc: Vec<u64> = self
            .sets
            .iter()
            .map(|&s| {
                let mut out = 0u64;
                let mut m = s;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    out |= 1u64 << perm[v];
                }
                out
            })
            .collect();
        enc.sort_unstable();
        match &self.best {
            Some((b, _)) if *b <= enc => {}
            _ => self.best = Some((enc, perm)),
        }
    }
}

fn count_cells(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[inline]
fn swap_bits(s: u64, u: usize, v: usize) -> u64 {
    let bu = s >> u & 1;
    let bv = s >> v & 1;
    if bu == bv {
        s
    } else {
        s ^ (1u64 << u | 1u64 << v)
    }
}

/// Canonical form of a set system on `n` vertices.
///
/// Returns the sorted relabeled masks and the labeling `perm` (vertex `v`
/// becomes `perm[v]`) that produces them.
pub fn canonize(n: usize, sets: &[u64]) -> (Vec<u64>, Vec<usize>) {
    if n == 0 {
        let mut s = sets.to_vec();
        s.sort_unstable();
        return (s, Vec::new());
    }
    let mut sorted = sets.to_vec();
    sorted.sort_unstable();
    let mut search = Search {
        n,
        sets,
        sorted,
        best: None,
    };
    search.descend(vec![0; n]);
    search.best.expect("search reaches at least one leaf")
}
