//! Simplicial complexes stored as normalized facet lists.

use std::collections::HashSet;
use std::fmt;

use crate::canon::{canonize, CanonicalKey, CANON_MAX_VERTICES};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::graph::Graph;
use crate::vectors::{h_vector, FVector, HVector};

/// A simplicial complex on the vertex set `{0, .., n-1}`.
///
/// Invariants: the facets are pairwise incomparable, every vertex lies in
/// some facet, and the facet list is sorted by mask value. The complex
/// `{∅}` is represented with `n = 0` and the single facet `∅`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

/// A complex derived from a parent by link, deletion or restriction, with
/// its vertices renumbered `0..k`. `labels[i]` is the parent vertex behind
/// vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub complex: SimplicialComplex,
    pub labels: Vec<usize>,
}

impl Induced {
    /// Builds the compacted complex spanned by `faces`, given in parent labels.
    pub(crate) fn compact(faces: Vec<Face>) -> Induced {
        let support = faces.iter().fold(Face::EMPTY, |a, &f| a.union(f));
        let labels: Vec<usize> = support.iter().collect();
        let mut to_new = [usize::MAX; 64];
        for (i, &v) in labels.iter().enumerate() {
            to_new[v] = i;
        }
        let facets = faces.into_iter().map(|f| f.map(&to_new)).collect();
        let complex = SimplicialComplex::normalized(labels.len(), facets);
        Induced { complex, labels }
    }

    /// Maps a face of the derived complex back to parent labels.
    pub fn lift(&self, face: Face) -> Face {
        face.map(&self.labels)
    }

    /// Facets of the derived complex in parent labels.
    pub fn lifted_facets(&self) -> Vec<Face> {
        self.complex.facets.iter().map(|&f| self.lift(f)).collect()
    }
}

/// Keeps only inclusion-maximal faces, sorted by mask value.
pub(crate) fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|&k| f.is_subset(k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

/// `Δ ∪ {F' ∪ F : F' ∈ Δ', F ∈ Γ}` at the level of facets, all sets in one
/// common labeling. `along` must describe a subcomplex of `base` and `other`
/// must be vertex-disjoint from `base`.
pub fn star(base: &[Face], along: &[Face], other: &[Face]) -> Vec<Face> {
    let mut faces = base.to_vec();
    for &a in along {
        for &o in other {
            faces.push(a.union(o));
        }
    }
    maximal_faces(faces)
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets` on `n` vertices. Non-maximal
    /// entries are dropped.
    pub fn from_facets(n: usize, facets: Vec<Face>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        if facets.is_empty() {
            return Err(Error::NoFacets);
        }
        let all = Face::full(n);
        let mut covered = Face::EMPTY;
        for &f in &facets {
            if !f.is_subset(all) {
                let vertex = f.difference(all).min_vertex().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            covered = covered.union(f);
        }
        if let Some(v) = all.difference(covered).min_vertex() {
            return Err(Error::VertexUncovered(v));
        }
        Ok(Self::normalized(n, facets))
    }

    /// Convenience constructor from vertex lists.
    pub fn from_lists(n: usize, facets: &[&[usize]]) -> Result<Self> {
        Self::from_facets(
            n,
            facets
                .iter()
                .map(|f| Face::from_vertices(f.iter().copied()))
                .collect(),
        )
    }

    pub(crate) fn normalized(n: usize, facets: Vec<Face>) -> Self {
        let facets = maximal_faces(facets);
        debug_assert_eq!(
            facets.iter().fold(Face::EMPTY, |a, &f| a.union(f)),
            Face::full(n)
        );
        SimplicialComplex { n, facets }
    }

    /// The complex `{∅}`.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            n: 0,
            facets: vec![Face::EMPTY],
        }
    }

    /// The full simplex on `n` vertices (`{∅}` for `n = 0`).
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![Face::full(n)],
        }
    }

    /// All proper faces of the simplex on `n >= 1` vertices.
    pub fn simplex_boundary(n: usize) -> Self {
        assert!(n >= 2, "boundary of a simplex needs two vertices");
        let all = Face::full(n);
        Self::normalized(n, (0..n).map(|v| all.without(v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.n)
    }

    /// `max |F| - 1` over facets; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// Ring dimension `dim + 1`.
    pub fn d(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn is_pure(&self) -> bool {
        let k = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == k)
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Vertices lying in every facet.
    pub fn cone_points(&self) -> Face {
        self.facets
            .iter()
            .fold(Face::full(self.n), |acc, &f| acc.intersection(f))
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| face.is_subset(f))
    }

    /// Every face, deduplicated, ordered by cardinality then mask.
    pub fn faces(&self) -> Vec<Face> {
        let set = self.face_set();
        let mut v: Vec<Face> = set.into_iter().collect();
        v.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    pub fn face_set(&self) -> HashSet<Face> {
        let mut set = HashSet::new();
        for &f in &self.facets {
            for s in f.subsets() {
                set.insert(s);
            }
        }
        set
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.d() + 1];
        for f in self.face_set() {
            counts[f.len()] += 1;
        }
        FVector::from_counts_unchecked(counts)
    }

    pub fn h_vector(&self) -> HVector {
        h_vector(&self.f_vector(), self.d()).expect("f-vector length matches dimension")
    }

    /// `link_Δ F = {G ∈ Δ : G ∩ F = ∅, G ∪ F ∈ Δ}`, renumbered.
    pub fn link(&self, face: Face) -> Result<Induced> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face));
        }
        Ok(Induced::compact(self.link_facets(face)))
    }

    /// Facets of the link of `face`, in this complex's labels.
    pub(crate) fn link_facets(&self, face: Face) -> Vec<Face> {
        maximal_faces(
            self.facets
                .iter()
                .filter(|&&f| face.is_subset(f))
                .map(|&f| f.difference(face))
                .collect(),
        )
    }

    /// Face deletion `Δ \ F = {G ∈ Δ : F ⊄ G}`, renumbered.
    pub fn delete_face(&self, face: Face) -> Result<Induced> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face));
        }
        if face.is_empty() {
            return Err(Error::PreconditionFailed(
                "deleting the empty face leaves no faces".into(),
            ));
        }
        Ok(Induced::compact(self.deletion_facets(face)))
    }

    pub(crate) fn deletion_facets(&self, face: Face) -> Vec<Face> {
        let mut out = Vec::with_capacity(self.facets.len());
        for &f in &self.facets {
            if face.is_subset(f) {
                out.extend(face.iter().map(|v| f.without(v)));
            } else {
                out.push(f);
            }
        }
        maximal_faces(out)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Induced> {
        self.delete_face(Face::singleton(v))
    }

    /// Induced subcomplex `Δ_W = {G ∈ Δ : G ⊆ W}`, renumbered.
    pub fn restrict(&self, w: Face) -> Result<Induced> {
        if w.intersection(self.vertex_set()).is_empty() {
            return Err(Error::EmptyRestriction(w));
        }
        Ok(Induced::compact(self.restriction_facets(w)))
    }

    pub(crate) fn restriction_facets(&self, w: Face) -> Vec<Face> {
        maximal_faces(self.facets.iter().map(|&f| f.intersection(w)).collect())
    }

    /// `Δ1 ∗_{Δ2} {u}` with the apex `u = n`. The vertices of `along` are read
    /// in the labels of `self`.
    pub fn star_along(&self, along: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.n >= MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                got: self.n + 1,
                limit: MAX_VERTICES,
            });
        }
        if let Some(&bad) = along.facets.iter().find(|&&f| !self.contains_face(f)) {
            return Err(Error::NotASubcomplex(bad));
        }
        let apex = Face::singleton(self.n);
        let facets = star(&self.facets, &along.facets, &[apex]);
        Ok(Self::normalized(self.n + 1, facets))
    }

    /// Cone with apex `n`.
    pub fn cone(&self) -> Result<SimplicialComplex> {
        self.star_along(self)
    }

    /// Inclusion-minimal non-faces, sorted by cardinality then mask.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let faces = self.face_set();
        let all = self.vertex_set();
        let mut found = HashSet::new();
        for &g in &faces {
            for v in all.difference(g).iter() {
                let c = g.with(v);
                if faces.contains(&c) || found.contains(&c) {
                    continue;
                }
                if c.iter().all(|w| faces.contains(&c.without(w))) {
                    found.insert(c);
                }
            }
        }
        let mut v: Vec<Face> = found.into_iter().collect();
        v.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|f| f.len() == 2)
    }

    /// The graph `G_Δ` of minimal non-faces, defined for flag complexes.
    pub fn nonface_graph(&self) -> Result<Graph> {
        if !self.is_flag() {
            return Err(Error::NotFlag);
        }
        Ok(self.complement_of_skeleton())
    }

    /// Vertex pairs that are not edges of the complex.
    pub(crate) fn complement_of_skeleton(&self) -> Graph {
        let skel = self.skeleton();
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !skel.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// The 1-skeleton as a graph.
    pub fn skeleton(&self) -> Graph {
        let mut adj = vec![0u64; self.n];
        for &f in &self.facets {
            for v in f.iter() {
                adj[v] |= f.without(v).mask();
            }
        }
        Graph::from_adjacency(adj)
    }

    /// A proper `(dim + 1)`-coloring of the 1-skeleton, found by
    /// backtracking in ascending vertex order with lowest colors first.
    pub fn find_balanced_coloring(&self) -> Option<Coloring> {
        let k = self.d();
        let skel = self.skeleton();
        let mut colors = vec![usize::MAX; self.n];
        fn go(v: usize, k: usize, used: usize, g: &Graph, colors: &mut [usize]) -> bool {
            if v == colors.len() {
                return true;
            }
            // only one fresh color is tried, the others are symmetric
            for c in 0..k.min(used + 1) {
                if g.neighbors(v).iter().any(|w| w < v && colors[w] == c) {
                    continue;
                }
                colors[v] = c;
                if go(v + 1, k, used.max(c + 1), g, colors) {
                    return true;
                }
            }
            colors[v] = usize::MAX;
            false
        }
        go(0, k, 0, &skel, &mut colors).then(|| Coloring::new(colors, k))
    }

    pub fn is_balanced(&self) -> bool {
        self.find_balanced_coloring().is_some()
    }

    /// Applies `v -> perm[v]` (a permutation of `0..n`).
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        assert_eq!(perm.len(), self.n);
        Self::normalized(self.n, self.facets.iter().map(|f| f.map(perm)).collect())
    }

    /// Canonical isomorphism-class key, for complexes on at most
    /// [`CANON_MAX_VERTICES`] vertices.
    pub fn canonical_form(&self) -> Result<CanonicalKey> {
        self.canonical_form_with_limit(CANON_MAX_VERTICES)
    }

    pub fn canonical_form_with_limit(&self, limit: usize) -> Result<CanonicalKey> {
        if self.n > limit {
            return Err(Error::CapacityExceeded {
                what: "vertices for canonical form",
                got: self.n,
                limit,
            });
        }
        let masks: Vec<u64> = self.facets.iter().map(|f| f.mask()).collect();
        let (sets, _) = canonize(self.n, &masks);
        Ok(CanonicalKey::new(self.n, sets))
    }

    /// Removes every cone point; returns the remaining complex and the cone
    /// points that were removed (in this complex's labels).
    pub fn strip_cone_points(&self) -> (Induced, Face) {
        let cone = self.cone_points();
        (Induced::compact(self.link_facets(cone)), cone)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=[", self.n)?;
        for (i, x) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("])")
    }
}
