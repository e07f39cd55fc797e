//! Exhaustive survey over all graphs on at most nine vertices.
//!
//! Every isomorphism class is analyzed independently on a worker pool;
//! results are collected in class order, so the report does not depend on
//! the number of workers.

mod checks;
mod record;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::CanonicalKey;
use crate::enumerate::{graph_classes, ENUMERATION_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::vectors::FVector;

pub use checks::{
    bipartite_witness, one_based_edges, AgreementMatrix, BipartiteWitness, Check, HWitness, SetEquality,
};
pub use record::{analyze_class, ClassRecord, Equivalence, CONDITION_NAMES};

/// Largest vertex count for the checks on `2d`-vertex complexes.
pub const STRUCTURE_MAX_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurveyConfig {
    pub max_vertices: usize,
    pub jobs: usize,
}

/// Counts for one vertex count `n`.
#[derive(Clone, Debug, Serialize)]
pub struct Tally {
    pub n: usize,
    /// Graph classes; each has exactly one flag independence complex.
    pub graphs: usize,
    pub pure: usize,
    pub cm: usize,
    pub vd: usize,
    pub balanced: usize,
    pub balanced_vd: usize,
    pub cm_field_disagreements: Vec<CanonicalKey>,
    pub f_vectors: Vec<FVector>,
    pub cm_h_vectors: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyReport {
    pub max_vertices: usize,
    pub tallies: Vec<Tally>,
    pub checks: Vec<Check>,
    pub h_witnesses: Vec<HWitness>,
    pub bipartite_witnesses: Vec<BipartiteWitness>,
    pub agreement: AgreementMatrix,
    pub half_dimension_sets: Vec<SetEquality>,
    #[serde(skip)]
    pub classes: Vec<ClassRecord>,
}

impl SurveyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Report(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    /// One row per class.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let report = |e: csv::Error| Error::Report(e.to_string());
        w.write_record([
            "key",
            "n",
            "dim",
            "pure",
            "flag",
            "balanced",
            "cone_points",
            "vd",
            "cm0",
            "cm2",
            "f",
            "h",
            "kk_ok",
            "flag_realizable",
        ])
        .map_err(report)?;
        for r in &self.classes {
            w.write_record([
                r.key.to_string(),
                r.n.to_string(),
                r.dim.to_string(),
                r.pure.to_string(),
                r.flag.to_string(),
                r.balanced.to_string(),
                r.cone_points.to_string(),
                r.vd.to_string(),
                r.cm0.to_string(),
                r.cm2.to_string(),
                r.f.to_string(),
                r.h.to_string(),
                r.kk_ok.to_string(),
                r.flag_realizable.to_string(),
            ])
            .map_err(report)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Report(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Report(e.to_string()))
    }
}

/// Analyzes every class on `1..=max_vertices` vertices on a pool of
/// `jobs` workers.
pub fn analyze_classes(config: SurveyConfig) -> Result<Vec<ClassRecord>> {
    if config.max_vertices > ENUMERATION_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "vertices for the survey",
            got: config.max_vertices,
            limit: ENUMERATION_MAX_VERTICES,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::WorkerPool(e.to_string()))?;
    pool.install(|| {
        let mut out = Vec::new();
        for n in 1..=config.max_vertices {
            let classes = graph_classes(n)?;
            let records: Result<Vec<ClassRecord>> = classes
                .par_iter()
                .map(|c| analyze_class(c.key.clone(), c.graph.clone()))
                .collect();
            out.extend(records?);
        }
        Ok(out)
    })
}

fn tally(n: usize, records: &[ClassRecord]) -> Tally {
    let rs: Vec<&ClassRecord> = records.iter().filter(|r| r.n == n).collect();
    let count = |p: &dyn Fn(&ClassRecord) -> bool| rs.iter().filter(|r| p(r)).count();
    Tally {
        n,
        graphs: rs.len(),
        pure: count(&|r| r.pure),
        cm: count(&|r| r.cm()),
        vd: count(&|r| r.vd),
        balanced: count(&|r| r.balanced),
        balanced_vd: count(&|r| r.balanced && r.vd),
        cm_field_disagreements: rs.iter().filter(|r| r.cm0 != r.cm2).map(|r| r.key.clone()).collect(),
        f_vectors: rs.iter().map(|r| r.f.clone()).collect::<BTreeSet<_>>().into_iter().collect(),
        cm_h_vectors: rs
            .iter()
            .filter(|r| r.cm())
            .map(|r| r.h.trimmed().into_vec())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    }
}

/// Runs every check at scale `n <= max_vertices`. The checks on complexes
/// with `2d` vertices are limited to `2d <= 8`.
pub fn run_survey(config: SurveyConfig) -> Result<SurveyReport> {
    let classes = analyze_classes(config)?;
    let max = config.max_vertices;
    let index = checks::Index::new(&classes);
    let (quadratic, bipartite_witnesses) = checks::quadratic_bound(&classes, max);
    let structure_max = max.min(STRUCTURE_MAX_VERTICES);
    let structure: Vec<ClassRecord> = classes.iter().filter(|r| r.n <= structure_max).cloned().collect();
    let (equivalences, agreement) = checks::structure_theorem(&structure, structure_max);
    let (sets_check, half_dimension_sets) = checks::half_dimension_sets(&index, &structure, structure_max)?;
    let checks = vec![
        checks::h_is_f_vector(&classes, max),
        checks::cm_h_is_flag_f(&classes, max),
        checks::balanced_vd_h_is_flag_f(&classes, max),
        checks::flag_f_is_h(&index, max)?,
        checks::quasi_flag_inclusion(&classes, max)?,
        quadratic,
        checks::cone_free_vertex_bound(&classes, max),
        equivalences,
        sets_check,
    ];
    let h_witnesses = checks::h_witnesses(&classes)?;
    let tallies = (1..=max).map(|n| tally(n, &classes)).collect();
    drop(index);
    Ok(SurveyReport {
        max_vertices: max,
        tallies,
        checks,
        h_witnesses,
        bipartite_witnesses,
        agreement,
        half_dimension_sets,
        classes,
    })
}
