//! Brute-force reference computations on raw bitmasks. Nothing here calls
//! into the library, so agreement with it is independent evidence.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every subset of `0..n` independent in the graph given by adjacency
/// masks, the empty set included.
pub fn independent_sets(n: usize, adj: &[u64]) -> Vec<u64> {
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .collect()
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for &(a, b) in edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    adj
}

/// Face counts `(f_{-1}, f_0, ..)` of a face list.
pub fn f_of_faces(faces: &[u64]) -> Vec<u64> {
    let mut f = Vec::new();
    for &s in faces {
        let k = s.count_ones() as usize;
        if f.len() <= k {
            f.resize(k + 1, 0);
        }
        f[k] += 1;
    }
    f
}

/// h from f through `sum_i h_i t^(d-i) = sum_i f_(i-1) (t-1)^(d-i)`,
/// expanded coefficient by coefficient.
pub fn h_of_f(f: &[u64], d: usize) -> Vec<i64> {
    // coefficient of t^k in the right-hand side
    let mut poly = vec![0i64; d + 1];
    for (i, &fi) in f.iter().enumerate() {
        let e = d - i;
        for k in 0..=e {
            let sign = if (e - k) % 2 == 0 { 1 } else { -1 };
            poly[k] += sign * fi as i64 * binom(e as u64, k as u64) as i64;
        }
    }
    (0..=d).map(|j| poly[d - j]).collect()
}

/// Calls `visit` with the face list of every nonempty downset of the
/// subsets of `0..n`, i.e. every simplicial complex on a subset of the
/// vertices, `{∅}` included.
pub fn for_each_complex(n: usize, mut visit: impl FnMut(&[u64])) {
    let mut order: Vec<u64> = (1u64..1 << n).collect();
    order.sort_by_key(|s| (s.count_ones(), *s));
    let mut member = vec![false; 1 << n];
    member[0] = true;
    let mut faces = vec![0u64];
    fn go(
        i: usize,
        order: &[u64],
        member: &mut Vec<bool>,
        faces: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64]),
    ) {
        if i == order.len() {
            visit(faces);
            return;
        }
        let s = order[i];
        let allowed = (0..64).filter(|v| s >> v & 1 == 1).all(|v| member[(s & !(1 << v)) as usize]);
        if allowed {
            member[s as usize] = true;
            faces.push(s);
            go(i + 1, order, member, faces, visit);
            faces.pop();
            member[s as usize] = false;
        }
        go(i + 1, order, member, faces, visit);
    }
    go(0, &order, &mut member, &mut faces, &mut visit);
}

/// All f-vectors of complexes on at most `n` vertices, by exhaustive
/// enumeration.
pub fn all_f_vectors(n: usize) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    for_each_complex(n, |faces| {
        out.insert(f_of_faces(faces));
    });
    out
}

/// Number of perfect matchings, by recursion on the lowest unmatched
/// vertex.
pub fn perfect_matchings(n: usize, adj: &[u64]) -> usize {
    fn go(left: u64, adj: &[u64]) -> usize {
        if left == 0 {
            return 1;
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !(1 << v);
        (0..64)
            .filter(|&w| rest >> w & 1 == 1 && adj[v] >> w & 1 == 1)
            .map(|w| go(rest & !(1 << w), adj))
            .sum()
    }
    if n % 2 == 1 {
        return 0;
    }
    go((1u64 << n) - 1, adj)
}

pub fn is_vertex_cover(n: usize, adj: &[u64], c: u64) -> bool {
    (0..n).all(|v| c >> v & 1 == 1 || adj[v] & !c == 0)
}

/// Inclusion-minimal vertex covers.
pub fn minimal_vertex_covers(n: usize, adj: &[u64]) -> Vec<u64> {
    let covers: Vec<u64> = (0u64..1 << n).filter(|&c| is_vertex_cover(n, adj, c)).collect();
    covers
        .iter()
        .copied()
        .filter(|&c| (0..n).all(|v| c >> v & 1 == 0 || !is_vertex_cover(n, adj, c & !(1 << v))))
        .collect()
}

/// Every minimal vertex cover has the same size.
pub fn unmixed(n: usize, adj: &[u64]) -> bool {
    let sizes: BTreeSet<u32> = minimal_vertex_covers(n, adj).iter().map(|c| c.count_ones()).collect();
    sizes.len() <= 1
}

pub fn is_triangle_free(n: usize, adj: &[u64]) -> bool {
    (0..n).all(|a| (0..n).all(|b| adj[a] >> b & 1 == 0 || adj[a] & adj[b] == 0))
}

/// Coefficients of `1 / sum (-1)^i h_i z^i` in i128.
pub fn reciprocal(h: &[i64], terms: usize) -> Vec<i128> {
    let p: Vec<i128> = h
        .iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i128 } else { -(x as i128) })
        .collect();
    let mut a = vec![0i128; terms];
    for k in 0..terms {
        let mut s = if k == 0 { 1 } else { 0 };
        for j in 1..p.len().min(k + 1) {
            s -= p[j] * a[k - j];
        }
        a[k] = s / p[0];
    }
    a
}

/// Colors in `colors` are a proper `k`-coloring of every face.
pub fn is_proper_coloring(faces: &[u64], colors: &[usize]) -> bool {
    faces.iter().all(|&s| {
        let mut seen = 0u64;
        (0..64).filter(|v| s >> v & 1 == 1).all(|v| {
            let bit = 1 << colors[v];
            let fresh = seen & bit == 0;
            seen |= bit;
            fresh
        })
    })
}
