//! Simple graphs on at most 63 vertices, with the independence-complex side
//! of the flag dictionary: covers, matchings and right edges.

use std::fmt;

use serde::Serialize;

use crate::canon::{canonize, CanonicalKey};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// A simple graph stored as per-vertex neighbor masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

/// Edges `(u_i, v_i)` with pairwise disjoint endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        let covered = self
            .pairs
            .iter()
            .fold(Face::EMPTY, |acc, &(u, v)| acc.with(u).with(v));
        2 * self.pairs.len() == n && covered == Face::full(n)
    }

    pub fn u_side(&self) -> Face {
        self.pairs.iter().map(|p| p.0).collect()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph { adj: vec![0; n] }
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!((0..adj.len()).all(|v| adj[v] >> v & 1 == 0));
        Graph { adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::NotAnEdge(a, b));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|a| {
                Face::from_mask(self.adj[a] & !((2u64 << a) - 1))
                    .iter()
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Face {
        Face::from_mask(self.adj[v])
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> Face {
        self.neighbors(v).with(v)
    }

    /// `(N(v), N[v])`.
    pub fn neighborhoods(&self, v: usize) -> (Face, Face) {
        (self.neighbors(v), self.closed_neighbors(v))
    }

    /// `N(W) = (∪_{v∈W} N(v)) \ W`.
    pub fn neighborhood_of_set(&self, w: Face) -> Face {
        w.iter()
            .fold(Face::EMPTY, |acc, v| acc.union(self.neighbors(v)))
            .difference(w)
    }

    pub fn isolated_vertices(&self) -> Face {
        (0..self.n()).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn is_independent(&self, s: Face) -> bool {
        s.iter().all(|v| self.adj[v] & s.mask() == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = Face::full(self.n()).mask();
        Graph {
            adj: (0..self.n())
                .map(|v| all & !self.adj[v] & !(1 << v))
                .collect(),
        }
    }

    /// Subgraph induced on `w`, renumbered; `labels[i]` is the old vertex.
    pub fn induced(&self, w: Face) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = w.iter().collect();
        let mut g = Graph::empty(labels.len());
        for (i, &a) in labels.iter().enumerate() {
            for (j, &b) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, labels)
    }

    /// Applies `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n());
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b]);
        }
        g
    }

    /// Isomorphism-class key and the relabeling that realizes it.
    pub fn canonical_form(&self) -> (CanonicalKey, Vec<usize>) {
        let sets: Vec<u64> = self
            .edges()
            .into_iter()
            .map(|(a, b)| 1u64 << a | 1u64 << b)
            .collect();
        let (key, perm) = canonize(self.n(), &sets);
        (CanonicalKey::new(self.n(), key), perm)
    }

    /// Maximal independent sets, by Bron-Kerbosch with pivoting on the
    /// complement; sorted by mask.
    pub fn maximal_independent_sets(&self) -> Vec<Face> {
        let n = self.n();
        let mut out = Vec::new();
        // non-neighbors, i.e. complement adjacency
        let co: Vec<u64> = (0..n)
            .map(|v| Face::full(n).mask() & !self.adj[v] & !(1 << v))
            .collect();
        fn bk(r: u64, mut p: u64, mut x: u64, co: &[u64], out: &mut Vec<Face>) {
            if p == 0 {
                if x == 0 {
                    out.push(Face::from_mask(r));
                }
                return;
            }
            let pivot_pool = p | x;
            let pivot = Face::from_mask(pivot_pool)
                .iter()
                .max_by_key(|&u| (co[u] & p).count_ones())
                .unwrap();
            let mut cand = p & !co[pivot];
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                bk(r | 1 << v, p & co[v], x & co[v], co, out);
                p &= !(1 << v);
                x |= 1 << v;
            }
        }
        bk(0, Face::full(n).mask(), 0, &co, &mut out);
        out.sort_unstable();
        out
    }

    /// `Δ(G)`: the complex of independent sets.
    pub fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex::normalized(self.n(), self.maximal_independent_sets())
    }

    /// Minimal vertex covers: complements of maximal independent sets.
    pub fn minimal_vertex_covers(&self) -> Vec<Face> {
        let all = Face::full(self.n());
        let mut v: Vec<Face> = self
            .maximal_independent_sets()
            .into_iter()
            .map(|s| all.difference(s))
            .collect();
        v.sort_unstable();
        v
    }

    /// `τ(G)`, the least size of a minimal vertex cover.
    pub fn covering_number(&self) -> usize {
        self.minimal_vertex_covers()
            .iter()
            .map(|c| c.len())
            .min()
            .unwrap_or(0)
    }

    /// All minimal vertex covers have one size.
    pub fn is_unmixed(&self) -> bool {
        let covers = self.minimal_vertex_covers();
        covers.iter().all(|c| c.len() == covers[0].len())
    }

    /// Counts perfect matchings, stopping once `limit` is reached.
    pub fn count_perfect_matchings(&self, limit: usize) -> usize {
        let mut count = 0;
        self.matchings_rec(Face::full(self.n()).mask(), &mut Vec::new(), &mut |_| {
            count += 1;
            count < limit
        });
        count
    }

    /// First perfect matching in the lowest-uncovered-vertex search order.
    pub fn perfect_matching(&self) -> Option<Matching> {
        let mut found = None;
        self.matchings_rec(Face::full(self.n()).mask(), &mut Vec::new(), &mut |m| {
            found = Some(Matching { pairs: m.to_vec() });
            false
        });
        found
    }

    pub fn has_unique_perfect_matching(&self) -> bool {
        self.count_perfect_matchings(2) == 1
    }

    /// Visits every perfect matching of the vertices in `free` (restricted to
    /// edges accepted by the graph); the visitor returns `false` to stop.
    /// Returns `false` if stopped.
    fn matchings_rec(
        &self,
        free: u64,
        stack: &mut Vec<(usize, usize)>,
        visit: &mut dyn FnMut(&[(usize, usize)]) -> bool,
    ) -> bool {
        self.matchings_filtered(free, stack, &|_, _| true, visit)
    }

    fn matchings_filtered(
        &self,
        free: u64,
        stack: &mut Vec<(usize, usize)>,
        accept: &dyn Fn(usize, usize) -> bool,
        visit: &mut dyn FnMut(&[(usize, usize)]) -> bool,
    ) -> bool {
        if free == 0 {
            return visit(stack);
        }
        let v = free.trailing_zeros() as usize;
        let mut partners = self.adj[v] & free;
        while partners != 0 {
            let w = partners.trailing_zeros() as usize;
            partners &= partners - 1;
            if !accept(v, w) {
                continue;
            }
            stack.push((v, w));
            let go_on =
                self.matchings_filtered(free & !(1 << v) & !(1 << w), stack, accept, visit);
            stack.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    /// `{i, j}` is right iff for all edges `{i, i'}`, `{j, j'}` (other than
    /// `{i, j}` itself) `{i', j'}` is an edge; a common neighbor `i' = j'`
    /// violates the condition.
    pub fn is_right_edge(&self, i: usize, j: usize) -> Result<bool> {
        if i >= self.n() || j >= self.n() || !self.has_edge(i, j) {
            return Err(Error::NotAnEdge(i, j));
        }
        Ok(self.right_unchecked(i, j))
    }

    fn right_unchecked(&self, i: usize, j: usize) -> bool {
        let ni = self.neighbors(i).without(j);
        let nj = self.neighbors(j).without(i);
        ni.iter()
            .all(|a| nj.iter().all(|b| a != b && self.has_edge(a, b)))
    }

    /// Every vertex lies on a right edge.
    pub fn weak_square_condition(&self) -> bool {
        let mut covered = Face::EMPTY;
        for (a, b) in self.edges() {
            if self.right_unchecked(a, b) {
                covered = covered.with(a).with(b);
            }
        }
        covered == Face::full(self.n())
    }

    /// A perfect matching of right edges `{u_i, v_i}` with `{u_1, .., u_d}`
    /// independent and `{u_i, v_j} ∈ E ⇒ i <= j`, if one exists.
    ///
    /// Searches all right-edge perfect matchings and all side assignments;
    /// for each, the order is a topological sort of `a -> b` whenever
    /// `u_a ~ v_b`, smallest `u` first among ready pairs.
    pub fn ordered_right_matching(&self) -> Option<Matching> {
        let n = self.n();
        if n % 2 == 1 {
            return None;
        }
        if n == 0 {
            return Some(Matching { pairs: Vec::new() });
        }
        let mut result = None;
        self.matchings_filtered(
            Face::full(n).mask(),
            &mut Vec::new(),
            &|a, b| self.right_unchecked(a, b),
            &mut |m| {
                result = self.orient_and_order(m);
                result.is_none()
            },
        );
        result
    }

    fn orient_and_order(&self, m: &[(usize, usize)]) -> Option<Matching> {
        let d = m.len();
        for flips in 0u64..(1u64 << d) {
            let pairs: Vec<(usize, usize)> = m
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if flips >> i & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            let u: Face = pairs.iter().map(|p| p.0).collect();
            if !self.is_independent(u) {
                continue;
            }
            // pred[b] = pairs that must precede pair b
            let pred: Vec<u64> = (0..d)
                .map(|b| {
                    (0..d)
                        .filter(|&a| a != b && self.has_edge(pairs[a].0, pairs[b].1))
                        .fold(0u64, |acc, a| acc | 1 << a)
                })
                .collect();
            let mut placed = 0u64;
            let mut order = Vec::with_capacity(d);
            while order.len() < d {
                let ready = (0..d)
                    .filter(|&b| placed >> b & 1 == 0 && pred[b] & !placed == 0)
                    .min_by_key(|&b| pairs[b].0);
                match ready {
                    Some(b) => {
                        placed |= 1 << b;
                        order.push(pairs[b]);
                    }
                    None => break,
                }
            }
            if order.len() == d {
                return Some(Matching { pairs: order });
            }
        }
        None
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
