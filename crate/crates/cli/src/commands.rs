use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::json;

use flagcx_core::constructions::{h_to_f_complex, matching_quotient, polarize};
use flagcx_core::decomposition::is_vertex_decomposable;
use flagcx_core::enumerate::{flag_realization, ENUMERATION_MAX_VERTICES};
use flagcx_core::homology::{is_cm, is_strongly_connected, reduced_betti};
use flagcx_core::io::{parse_complex, parse_graph, write_complex};
use flagcx_core::kruskal_katona::{first_violation, Inadmissible};
use flagcx_core::series::poincare_coeffs;
use flagcx_core::survey::{run_survey, SurveyConfig};
use flagcx_core::{FVector, FieldChoice, HVector, SimplicialComplex};

use crate::{Construction, Format, ReportFormat, Status};

fn read_complex(path: &Path, graph: bool) -> Result<SimplicialComplex> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let complex = if graph {
        parse_graph(&text)?.independence_complex()
    } else {
        parse_complex(&text)?
    };
    Ok(complex)
}

fn one_based(v: impl IntoIterator<Item = usize>) -> Vec<usize> {
    v.into_iter().map(|x| x + 1).collect()
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    dim: isize,
    facets: usize,
    f: FVector,
    h: HVector,
    pure: bool,
    flag: bool,
    /// 1-based colors of a balanced coloring, if one exists.
    balanced_coloring: Option<Vec<usize>>,
    cone_points: Vec<usize>,
    field: FieldChoice,
    reduced_betti: Vec<u64>,
    cohen_macaulay: bool,
    strongly_connected: bool,
    vertex_decomposable: Option<bool>,
    shedding_order: Option<Vec<usize>>,
    h_admissible: bool,
    h_flag_realizable: Option<bool>,
}

pub fn analyze(path: &Path, field: &str, format: Format, graph: bool) -> Result<Status> {
    let characteristic: u64 = match field {
        "p" => bail!("--field p needs the prime itself, e.g. --field 3"),
        s => s.parse().with_context(|| format!("bad field `{s}`"))?,
    };
    let field = FieldChoice::from_characteristic(characteristic)?;
    let delta = read_complex(path, graph)?;
    let h = delta.h_vector();
    let candidate = h.as_f_candidate();
    let h_admissible = candidate.as_deref().is_some_and(|s| first_violation(s).is_none());
    let h_flag_realizable = match candidate {
        Some(s) if h_admissible && s.get(1).map_or(0, |&v| v as usize) <= ENUMERATION_MAX_VERTICES => {
            Some(flag_realization(&FVector::new(s)?)?.is_some())
        }
        _ => None,
    };
    let tree = if delta.is_pure() {
        Some(is_vertex_decomposable(&delta)?)
    } else {
        None
    };
    let a = Analysis {
        n: delta.n(),
        dim: delta.dim(),
        facets: delta.facets().len(),
        f: delta.f_vector(),
        h,
        pure: delta.is_pure(),
        flag: delta.is_flag(),
        balanced_coloring: delta
            .find_balanced_coloring()
            .map(|c| one_based(c.normalized().colors().iter().copied())),
        cone_points: one_based(delta.cone_points().iter()),
        field,
        reduced_betti: reduced_betti(&delta, field).betti,
        cohen_macaulay: is_cm(&delta, field),
        strongly_connected: is_strongly_connected(&delta),
        vertex_decomposable: tree.as_ref().map(Option::is_some),
        shedding_order: tree.flatten().map(|t| one_based(t.shedding_order())),
        h_admissible,
        h_flag_realizable,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&a)?),
        Format::Text => {
            println!("vertices: {}", a.n);
            println!("dimension: {}", a.dim);
            println!("facets: {}", a.facets);
            println!("f: {}", a.f);
            println!("h: {}", a.h);
            println!("pure: {}", a.pure);
            println!("flag: {}", a.flag);
            match &a.balanced_coloring {
                Some(c) => println!("balanced: true {c:?}"),
                None => println!("balanced: false"),
            }
            println!("cone points: {:?}", a.cone_points);
            println!("reduced betti over {}: {:?}", a.field, a.reduced_betti);
            println!("cohen-macaulay over {}: {}", a.field, a.cohen_macaulay);
            println!("strongly connected: {}", a.strongly_connected);
            match (a.vertex_decomposable, &a.shedding_order) {
                (None, _) => println!("vertex decomposable: false (not pure)"),
                (Some(true), Some(order)) => println!("vertex decomposable: true, shedding order {order:?}"),
                (Some(v), _) => println!("vertex decomposable: {v}"),
            }
            println!("h admissible: {}", a.h_admissible);
            match a.h_flag_realizable {
                Some(v) => println!("h flag realizable: {v}"),
                None => println!("h flag realizable: not decided"),
            }
        }
    }
    Ok(Status::Ok)
}

fn emit(complex: &SimplicialComplex, verification: serde_json::Value, ok: bool) -> Result<Status> {
    print!("{}", write_complex(complex));
    println!("# verification");
    for line in serde_json::to_string_pretty(&verification)?.lines() {
        println!("# {line}");
    }
    Ok(if ok { Status::Ok } else { Status::VerificationFailed })
}

pub fn construct(kind: Construction, path: &Path, graph: bool) -> Result<Status> {
    let input = read_complex(path, graph)?;
    match kind {
        Construction::Polarize => {
            let p = polarize(&input)?;
            let out = &p.complex;
            let h_equals_f = out.h_vector().trimmed().into_vec() == input.f_vector().to_signed();
            let checks = json!({
                "flag": out.is_flag(),
                "balanced": p.coloring.is_proper_for(out),
                "cone_point_free": out.cone_points().is_empty(),
                "vertex_decomposable": is_vertex_decomposable(out)?.is_some(),
                "h_equals_input_f": h_equals_f,
            });
            let ok = checks.as_object().unwrap().values().all(|v| v == true);
            let block = json!({
                "construction": "polarize",
                "input_f": input.f_vector(),
                "output_h": out.h_vector(),
                "pairs": p.pairs.iter().map(|&(u, v)| (u + 1, v + 1)).collect::<Vec<_>>(),
                "checks": checks,
                "ok": ok,
            });
            emit(out, block, ok)
        }
        Construction::H2f => {
            let r = h_to_f_complex(&input)?;
            let f_equals_h = r.complex.f_vector().to_signed() == input.h_vector().trimmed().into_vec();
            let nested = r.steps.iter().all(|s| s.nested);
            let ok = f_equals_h && nested;
            let steps: Vec<_> = r
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "shedding_vertex": s.shedding_vertex + 1,
                        "f_deletion": s.f_deletion,
                        "f_link": s.f_link,
                        "nested": s.nested,
                    })
                })
                .collect();
            let block = json!({
                "construction": "h2f",
                "input_h": input.h_vector(),
                "output_f": r.complex.f_vector(),
                "steps": steps,
                "checks": { "f_equals_input_h": f_equals_h, "all_nested": nested },
                "ok": ok,
            });
            emit(&r.complex, block, ok)
        }
        Construction::Quotient => {
            let q = matching_quotient(&input)?;
            let f_equals_h = q.complex.f_vector().to_signed() == input.h_vector().trimmed().into_vec();
            let block = json!({
                "construction": "quotient",
                "input_h": input.h_vector(),
                "output_f": q.complex.f_vector(),
                "matching": q.matching.pairs.iter().map(|&(u, v)| (u + 1, v + 1)).collect::<Vec<_>>(),
                "checks": { "f_equals_input_h": f_equals_h, "flag": q.complex.is_flag() },
                "ok": f_equals_h,
            });
            emit(&q.complex, block, f_equals_h)
        }
    }
}

fn parse_all<T: std::str::FromStr>(tokens: &[String]) -> Result<Vec<T>> {
    tokens
        .iter()
        .flat_map(|t| t.split(',').filter(|s| !s.is_empty()))
        .map(|t| t.trim().parse().map_err(|_| anyhow::anyhow!("bad entry `{t}`")))
        .collect()
}

pub fn kk(tokens: &[String]) -> Result<Status> {
    let seq: Vec<u64> = parse_all(tokens)?;
    match first_violation(&seq) {
        None => println!("admissible: true"),
        Some(why) => {
            println!("admissible: false");
            match why {
                Inadmissible::BadLeadingEntry { value } => println!("first entry is {value}, expected 1"),
                Inadmissible::ZeroEntry { index } => println!("zero entry at index {index}"),
                Inadmissible::Bound(v) => println!(
                    "first violated bound: index {}: {} > {}",
                    v.index, v.value, v.bound
                ),
            }
        }
    }
    Ok(Status::Ok)
}

pub fn poincare(tokens: &[String], terms: usize) -> Result<Status> {
    let h = HVector::new(parse_all(tokens)?);
    let series = poincare_coeffs(&h, terms);
    let first = series.first_negative();
    println!("{:>4}  coefficient", "k");
    for (k, a) in series.coeffs().iter().enumerate() {
        let mark = if first == Some(k) { "  <- first negative" } else { "" };
        println!("{k:>4}  {a}{mark}");
    }
    match first {
        Some(k) => println!("obstruction at z^{k}"),
        None => println!("no negative coefficient in {terms} terms"),
    }
    Ok(Status::Ok)
}

pub fn survey(max_vertices: usize, jobs: Option<usize>, out: &Path, format: ReportFormat) -> Result<Status> {
    let jobs = match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let report = run_survey(SurveyConfig { max_vertices, jobs })?;
    let text = match format {
        ReportFormat::Json => report.to_json()?,
        ReportFormat::Csv => report.to_csv()?,
    };
    fs::write(out, text).with_context(|| format!("writing {}", out.display()))?;
    for c in &report.checks {
        println!("{}: {} ({} checked)", c.name, c.verdict, c.checked);
    }
    Ok(if report.passed() {
        Status::Ok
    } else {
        Status::VerificationFailed
    })
}
