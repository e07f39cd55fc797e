use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::canon::CanonicalKey;
use crate::constructions::{fvector_is_quasi_flag, matching_quotient, polarize, QUASI_FLAG_MAX_VERTICES};
use crate::enumerate::{flag_f_vectors, flag_realization};
use crate::error::Result;
use crate::graph::Graph;

use super::record::{ClassRecord, CONDITION_NAMES};

/// One swept statement with its counterexample slots.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub statement: &'static str,
    pub scope: String,
    pub checked: usize,
    pub counterexamples: Vec<String>,
    pub verdict: String,
}

impl Check {
    fn new(name: &'static str, statement: &'static str, scope: String) -> Self {
        Check {
            name,
            statement,
            scope,
            checked: 0,
            counterexamples: Vec::new(),
            verdict: String::new(),
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.counterexamples.push(describe());
        }
    }

    fn finish(mut self, max_vertices: usize) -> Self {
        self.verdict = if self.counterexamples.is_empty() {
            format!("no counterexample at scale n <= {max_vertices}")
        } else {
            format!("counterexample found at scale n <= {max_vertices}")
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// 1-based edge list.
pub fn one_based_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().into_iter().map(|(a, b)| (a + 1, b + 1)).collect()
}

/// A distinct h-vector of a Cohen-Macaulay flag complex, the first class
/// realizing it, and a flag complex with that f-vector when one exists.
#[derive(Clone, Debug, Serialize)]
pub struct HWitness {
    pub h: Vec<i64>,
    pub complex: CanonicalKey,
    pub nonface_edges: Vec<(usize, usize)>,
    pub flag_realization: Option<Vec<(usize, usize)>>,
}

/// A triangle-free graph with `n` vertices and `m` edges; its clique complex
/// is a flag complex with f-vector `(1, n, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteWitness {
    pub n: u64,
    pub m: u64,
    pub edges: Vec<(usize, usize)>,
}

/// The first `m` edges of `K_{⌊n/2⌋, ⌈n/2⌉}` in row order, if
/// `m <= ⌊n²/4⌋`.
pub fn bipartite_witness(n: usize, m: usize) -> Option<Graph> {
    let a = n / 2;
    let b = n - a;
    if m > a * b {
        return None;
    }
    let mut g = Graph::empty(n);
    for e in 0..m {
        g.add_edge(e / b, a + e % b);
    }
    Some(g)
}

#[derive(Clone, Debug, Serialize)]
pub struct AgreementMatrix {
    pub conditions: [&'static str; 5],
    /// Graphs on `2d` vertices whose independence complex has dimension
    /// `d - 1` and no cone points.
    pub qualifying: usize,
    pub qualifying_pure: usize,
    /// Per condition, how many qualifying complexes satisfy it.
    pub satisfied: [usize; 5],
    /// `disagreements[i][j]`: complexes on which conditions `i` and `j`
    /// differ.
    pub disagreements: [[usize; 5]; 5],
}

impl AgreementMatrix {
    pub fn total_disagreements(&self) -> usize {
        self.disagreements.iter().flatten().sum()
    }
}

/// Both sides of the half-dimension set equality for one `d`.
#[derive(Clone, Debug, Serialize)]
pub struct SetEquality {
    pub d: usize,
    pub h_vectors: Vec<Vec<i64>>,
    pub flag_f_vectors: Vec<Vec<i64>>,
    pub equal: bool,
}

pub(super) struct Index<'a> {
    records: &'a [ClassRecord],
    by_key: HashMap<&'a CanonicalKey, usize>,
}

impl<'a> Index<'a> {
    pub(super) fn new(records: &'a [ClassRecord]) -> Self {
        let by_key = records.iter().enumerate().map(|(i, r)| (&r.key, i)).collect();
        Index { records, by_key }
    }

    fn get(&self, g: &Graph) -> Option<&'a ClassRecord> {
        let key = g.canonical_form().0;
        self.by_key.get(&key).map(|&i| &self.records[i])
    }
}

/// The survey record of the polarization of the independence complex of
/// `gamma`, with a description of what went wrong otherwise.
fn polarization_record<'a>(index: &Index<'a>, gamma: &Graph) -> std::result::Result<&'a ClassRecord, String> {
    let p = polarize(&gamma.independence_complex()).map_err(|e| e.to_string())?;
    index
        .get(&p.graph)
        .ok_or_else(|| format!("polarization of {:?} is outside the survey", one_based_edges(gamma)))
}

fn h_slice(r: &ClassRecord) -> Vec<i64> {
    r.h.trimmed().into_vec()
}

pub(super) fn h_witnesses(records: &[ClassRecord]) -> Result<Vec<HWitness>> {
    let mut seen = BTreeMap::new();
    for r in records.iter().filter(|r| r.cm()) {
        seen.entry(h_slice(r)).or_insert(r);
    }
    let mut out = Vec::with_capacity(seen.len());
    for (h, r) in seen {
        let realization = match r.h_as_f() {
            Some(f) if r.flag_realizable => flag_realization(&f)?.map(|g| one_based_edges(&g)),
            _ => None,
        };
        out.push(HWitness {
            h,
            complex: r.key.clone(),
            nonface_edges: one_based_edges(&r.graph),
            flag_realization: realization,
        });
    }
    Ok(out)
}

/// h-vectors of Cohen-Macaulay flag complexes satisfy the Kruskal-Katona
/// bounds.
pub(super) fn h_is_f_vector(records: &[ClassRecord], max: usize) -> Check {
    let mut c = Check::new(
        "cm_flag_h_is_f_vector",
        "the h-vector of every Cohen-Macaulay flag complex is the f-vector of a simplicial complex",
        format!("Cohen-Macaulay flag complexes on n <= {max} vertices"),
    );
    for r in records.iter().filter(|r| r.cm()) {
        c.expect(r.kk_ok, || format!("{} has h = {}", r.key, r.h));
    }
    c.finish(max)
}

/// Left-to-right inclusion: h-vectors of the selected complexes are flag
/// f-vectors.
fn h_is_flag_f(
    records: &[ClassRecord],
    max: usize,
    name: &'static str,
    statement: &'static str,
    scope: String,
    select: impl Fn(&ClassRecord) -> bool,
) -> Check {
    let mut c = Check::new(name, statement, scope);
    for r in records.iter().filter(|r| select(r)) {
        c.expect(r.flag_realizable, || format!("{} has h = {}", r.key, r.h));
    }
    c.finish(max)
}

pub(super) fn cm_h_is_flag_f(records: &[ClassRecord], max: usize) -> Check {
    h_is_flag_f(
        records,
        max,
        "cm_flag_h_is_flag_f",
        "the h-vector of every Cohen-Macaulay flag complex is the f-vector of a flag complex",
        format!("Cohen-Macaulay flag complexes on n <= {max} vertices"),
        ClassRecord::cm,
    )
}

pub(super) fn balanced_vd_h_is_flag_f(records: &[ClassRecord], max: usize) -> Check {
    h_is_flag_f(
        records,
        max,
        "balanced_vd_flag_h_is_flag_f",
        "the h-vector of every balanced vertex-decomposable flag complex is the f-vector of a flag complex",
        format!("balanced vertex-decomposable flag complexes on n <= {max} vertices"),
        |r| r.vd && r.balanced,
    )
}

/// Right-to-left inclusion: every flag f-vector on at most `max / 2`
/// vertices is the h-vector of a balanced vertex-decomposable (hence
/// Cohen-Macaulay) flag complex, its polarization.
pub(super) fn flag_f_is_h(index: &Index, max: usize) -> Result<Check> {
    let mut c = Check::new(
        "flag_f_is_balanced_vd_h",
        "every f-vector of a flag complex is the h-vector of a balanced vertex-decomposable flag complex",
        format!("flag complexes on m <= {} vertices, polarized to 2m vertices", max / 2),
    );
    for m in 1..=max / 2 {
        for (f, gamma) in flag_f_vectors(m)?.iter() {
            let verdict = polarization_record(index, gamma).and_then(|r| {
                let ok = r.vd && r.balanced && r.cm0 && r.cm2 && r.cone_points == 0 && h_slice(r) == f.to_signed();
                if ok {
                    Ok(())
                } else {
                    Err(format!("polarization {} of f = {f} has h = {}", r.key, r.h))
                }
            });
            c.expect(verdict.is_ok(), || verdict.unwrap_err());
        }
    }
    Ok(c.finish(max))
}

pub(super) fn quasi_flag_inclusion(records: &[ClassRecord], max: usize) -> Result<Check> {
    let mut c = Check::new(
        "balanced_vd_flag_h_is_quasi_flag_f",
        "the h-vector of every balanced vertex-decomposable flag complex is the f-vector of a quasi-flag complex",
        format!(
            "balanced vertex-decomposable flag complexes on n <= {max} vertices with h_1 <= {QUASI_FLAG_MAX_VERTICES}"
        ),
    );
    for r in records.iter().filter(|r| r.vd && r.balanced) {
        let Some(f) = r.h_as_f() else {
            c.expect(false, || format!("{} has h = {}", r.key, r.h));
            continue;
        };
        if f.vertices() as usize > QUASI_FLAG_MAX_VERTICES {
            continue;
        }
        let ok = fvector_is_quasi_flag(&f, QUASI_FLAG_MAX_VERTICES)?;
        c.expect(ok, || format!("{} has h = {}", r.key, r.h));
    }
    Ok(c.finish(max))
}

/// `h = (1, n, m)` forces `m <= ⌊n²/4⌋`; each pair gets a bipartite witness.
pub(super) fn quadratic_bound(records: &[ClassRecord], max: usize) -> (Check, Vec<BipartiteWitness>) {
    let mut c = Check::new(
        "cm_flag_h2_quadratic_bound",
        "a Cohen-Macaulay flag complex with h = (1, n, m) has m <= n^2/4, realized by a bipartite graph",
        format!("Cohen-Macaulay flag complexes on n <= {max} vertices with h of length 3"),
    );
    let pairs: BTreeSet<(u64, u64)> = records
        .iter()
        .filter(|r| r.cm())
        .filter_map(|r| match h_slice(r).as_slice() {
            &[1, n, m] => Some((n as u64, m as u64)),
            _ => None,
        })
        .collect();
    let mut witnesses = Vec::new();
    for (n, m) in pairs {
        let g = bipartite_witness(n as usize, m as usize);
        let verified = g.as_ref().is_some_and(|g| {
            let clique_complex = g.complement().independence_complex();
            clique_complex.is_flag() && clique_complex.f_vector().as_slice() == [1, n, m]
        });
        c.expect(m <= n * n / 4 && verified, || format!("h = (1,{n},{m})"));
        if let (true, Some(g)) = (verified, g) {
            witnesses.push(BipartiteWitness {
                n,
                m,
                edges: one_based_edges(&g),
            });
        }
    }
    (c.finish(max), witnesses)
}

/// A Cohen-Macaulay flag complex without cone points has at least `2d`
/// vertices.
pub(super) fn cone_free_vertex_bound(records: &[ClassRecord], max: usize) -> Check {
    let mut c = Check::new(
        "cone_free_cm_flag_vertex_bound",
        "a Cohen-Macaulay flag complex of dimension d - 1 without cone points has at least 2d vertices",
        format!("Cohen-Macaulay flag complexes without cone points on n <= {max} vertices"),
    );
    for r in records.iter().filter(|r| r.cm() && r.cone_points == 0) {
        let d = (r.dim + 1) as usize;
        c.expect(r.n >= 2 * d, || format!("{} has {} vertices and dimension {}", r.key, r.n, r.dim));
    }
    c.finish(max)
}

pub(super) fn structure_theorem(records: &[ClassRecord], max: usize) -> (Check, AgreementMatrix) {
    let mut c = Check::new(
        "half_dimension_equivalences",
        "for a (d-1)-dimensional flag complex on 2d vertices without cone points: ordered right matching, \
         strong connectivity, Cohen-Macaulayness, unique perfect matching with unmixed graph, and vertex \
         decomposability are equivalent",
        format!("graphs on 2d <= {max} vertices"),
    );
    let mut matrix = AgreementMatrix {
        conditions: CONDITION_NAMES,
        qualifying: 0,
        qualifying_pure: 0,
        satisfied: [0; 5],
        disagreements: [[0; 5]; 5],
    };
    for r in records {
        let Some(e) = r.equivalence else { continue };
        let a = e.as_array();
        matrix.qualifying += 1;
        matrix.qualifying_pure += usize::from(r.pure);
        for i in 0..5 {
            matrix.satisfied[i] += usize::from(a[i]);
            for j in 0..5 {
                matrix.disagreements[i][j] += usize::from(a[i] != a[j]);
            }
        }
        c.expect(a.iter().all(|&x| x == a[0]), || format!("{} has conditions {a:?}", r.key));
    }
    (c.finish(max), matrix)
}

/// `{h(Δ)}` over Cohen-Macaulay `(d-1)`-dimensional flag complexes on `2d`
/// vertices without cone points equals `{f(Γ)}` over flag complexes on `d`
/// vertices. The left side is mapped across by the matching quotient, the
/// right side by polarization.
pub(super) fn half_dimension_sets(index: &Index, records: &[ClassRecord], max: usize) -> Result<(Check, Vec<SetEquality>)> {
    let mut c = Check::new(
        "half_dimension_h_equals_flag_f",
        "h-vectors of Cohen-Macaulay (d-1)-dimensional flag complexes on 2d vertices without cone points \
         are exactly the f-vectors of flag complexes on d vertices",
        format!("2d <= {max}"),
    );
    let mut sets = Vec::new();
    for d in 1..=max / 2 {
        let mut lhs = BTreeSet::new();
        for r in records.iter().filter(|r| r.n == 2 * d && r.dim + 1 == d as isize && r.cone_points == 0 && r.cm()) {
            let h = h_slice(r);
            let quotient = matching_quotient(&r.complex());
            let ok = quotient.as_ref().is_ok_and(|q| q.complex.f_vector().to_signed() == h);
            c.expect(ok, || match &quotient {
                Ok(q) => format!("{}: quotient has f = {}, h = {}", r.key, q.complex.f_vector(), r.h),
                Err(e) => format!("{}: {e}", r.key),
            });
            lhs.insert(h);
        }
        let flag = flag_f_vectors(d)?;
        let mut rhs = BTreeSet::new();
        for (f, gamma) in flag.iter() {
            let verdict = polarization_record(index, gamma).and_then(|r| {
                if r.cm() && r.cone_points == 0 && r.dim + 1 == d as isize && h_slice(r) == f.to_signed() {
                    Ok(())
                } else {
                    Err(format!("polarization {} of f = {f} has h = {}", r.key, r.h))
                }
            });
            c.expect(verdict.is_ok(), || verdict.unwrap_err());
            rhs.insert(f.to_signed());
        }
        let equal = lhs == rhs;
        c.expect(equal, || format!("d = {d}: the two sets differ"));
        sets.push(SetEquality {
            d,
            h_vectors: lhs.into_iter().collect(),
            flag_f_vectors: rhs.into_iter().collect(),
            equal,
        });
    }
    Ok((c.finish(max), sets))
}
