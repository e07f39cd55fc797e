//! Exhaustive enumeration: graphs up to isomorphism, flag f-vectors with a
//! realizing graph, and complexes with a prescribed f-vector.

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::canon::CanonicalKey;
use crate::complex::{maximal_faces, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{k_subsets, Face};
use crate::graph::Graph;
use crate::kruskal_katona::is_f_vector;
use crate::vectors::FVector;

/// Largest vertex count for graph enumeration.
pub const ENUMERATION_MAX_VERTICES: usize = 9;

/// Number of isomorphism classes of graphs on `n` vertices, `n <= 9`.
pub const GRAPH_CLASS_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

/// A graph class: its canonical key and the canonically labeled member.
#[derive(Clone, Debug)]
pub struct GraphClass {
    pub key: CanonicalKey,
    pub graph: Graph,
}

type Classes = Arc<Vec<GraphClass>>;

static CLASSES: [OnceLock<Classes>; ENUMERATION_MAX_VERTICES + 1] =
    [const { OnceLock::new() }; ENUMERATION_MAX_VERTICES + 1];

fn capacity(n: usize, limit: usize, what: &'static str) -> Result<()> {
    if n > limit {
        return Err(Error::CapacityExceeded { what, got: n, limit });
    }
    Ok(())
}

fn canonical_class(g: &Graph) -> GraphClass {
    let (key, perm) = g.canonical_form();
    GraphClass {
        key,
        graph: g.relabel(&perm),
    }
}

/// One graph per isomorphism class on `n` vertices, sorted by key.
///
/// Classes on `n` vertices are the canonical forms of the classes on
/// `n - 1` vertices extended by a new vertex in every possible way. Results
/// are cached for the life of the process.
pub fn graph_classes(n: usize) -> Result<Classes> {
    capacity(n, ENUMERATION_MAX_VERTICES, "vertices for graph enumeration")?;
    if let Some(c) = CLASSES[n].get() {
        return Ok(c.clone());
    }
    let classes = if n == 0 {
        vec![canonical_class(&Graph::empty(0))]
    } else {
        let smaller = graph_classes(n - 1)?;
        let mut found: Vec<GraphClass> = smaller
            .par_iter()
            .flat_map_iter(|c| {
                (0u64..1 << (n - 1)).map(move |nbrs| {
                    let mut g = Graph::empty(n);
                    for (a, b) in c.graph.edges() {
                        g.add_edge(a, b);
                    }
                    for w in Face::from_mask(nbrs).iter() {
                        g.add_edge(n - 1, w);
                    }
                    canonical_class(&g)
                })
            })
            .collect();
        found.par_sort_unstable_by(|a, b| a.key.cmp(&b.key));
        found.dedup_by(|a, b| a.key == b.key);
        found
    };
    Ok(CLASSES[n].get_or_init(|| Arc::new(classes)).clone())
}

static FLAG_F: [OnceLock<Arc<BTreeMap<FVector, Graph>>>; ENUMERATION_MAX_VERTICES + 1] =
    [const { OnceLock::new() }; ENUMERATION_MAX_VERTICES + 1];

/// Every f-vector of a flag complex on exactly `n` vertices, each with the
/// first graph (in class order) whose independence complex realizes it.
pub fn flag_f_vectors(n: usize) -> Result<Arc<BTreeMap<FVector, Graph>>> {
    capacity(n, ENUMERATION_MAX_VERTICES, "vertices for graph enumeration")?;
    if let Some(m) = FLAG_F[n].get() {
        return Ok(m.clone());
    }
    let classes = graph_classes(n)?;
    let fs: Vec<FVector> = classes
        .par_iter()
        .map(|c| c.graph.independence_complex().f_vector())
        .collect();
    let mut map = BTreeMap::new();
    for (f, c) in fs.into_iter().zip(classes.iter()) {
        map.entry(f).or_insert_with(|| c.graph.clone());
    }
    Ok(FLAG_F[n].get_or_init(|| Arc::new(map)).clone())
}

/// A graph whose independence complex has f-vector `f`, if one exists.
pub fn flag_realization(f: &FVector) -> Result<Option<Graph>> {
    let n = f.vertices() as usize;
    Ok(flag_f_vectors(n)?.get(f).cloned())
}

/// All complexes with f-vector `f`, one per isomorphism class, in
/// canonical-key order.
///
/// Faces are chosen level by level: the 1-skeleton runs over graph classes
/// with the right edge count, each higher level over subsets of the sets
/// whose boundary is already present, deduplicating by canonical form after
/// every level.
pub fn complexes_with_f_vector(f: &FVector) -> Result<Vec<SimplicialComplex>> {
    let seq = f.as_slice();
    if !is_f_vector(seq) {
        return Ok(Vec::new());
    }
    let n = f.vertices() as usize;
    if seq.len() == 1 {
        return Ok(vec![SimplicialComplex::empty_face()]);
    }
    capacity(n, ENUMERATION_MAX_VERTICES, "vertices for complex enumeration")?;
    let points: Vec<Face> = (0..n).map(Face::singleton).collect();
    let mut level: Vec<Vec<Face>> = if seq.len() == 2 {
        vec![points]
    } else {
        graph_classes(n)?
            .iter()
            .filter(|c| c.graph.edge_count() as u64 == seq[2])
            .map(|c| {
                let mut faces = points.clone();
                faces.extend(c.graph.edges().into_iter().map(|(a, b)| Face::from_vertices([a, b])));
                faces
            })
            .collect()
    };
    for (k, &count) in seq.iter().enumerate().skip(3) {
        let mut seen: HashSet<CanonicalKey> = HashSet::new();
        let mut next = Vec::new();
        for faces in &level {
            let present: HashSet<Face> = faces.iter().copied().collect();
            let candidates: Vec<Face> = k_subsets(n, k)
                .filter(|s| s.iter().all(|v| present.contains(&s.without(v))))
                .collect();
            for choice in combinations(candidates.len(), count as usize) {
                let mut grown = faces.clone();
                grown.extend(choice.iter().map(|&i| candidates[i]));
                let facets = maximal_faces(grown.clone());
                let key = SimplicialComplex::normalized(n, facets)
                    .canonical_form_with_limit(n)?;
                if seen.insert(key) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    let mut out: Vec<(CanonicalKey, SimplicialComplex)> = Vec::with_capacity(level.len());
    for faces in level {
        let c = SimplicialComplex::normalized(n, maximal_faces(faces));
        out.push((c.canonical_form_with_limit(n)?, c));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    Ok(out.into_iter().map(|(_, c)| c).collect())
}

/// Index sets of size `k` from `0..m`, in lexicographic order.
fn combinations(m: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= m).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < m - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}
