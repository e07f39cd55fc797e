//! Text formats for complexes and graphs.
//!
//! One facet (or edge) per line as whitespace-separated 1-based labels.
//! Lines starting with `#` and blank lines are ignored. The vertex count is
//! the largest label unless a header line `n=<k>` sets it.

use std::fmt::Write;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::graph::Graph;

struct Parsed {
    n: usize,
    rows: Vec<(usize, Vec<usize>)>,
}

fn parse_rows(text: &str) -> Result<Parsed> {
    let mut header: Option<usize> = None;
    let mut rows = Vec::new();
    let mut max_label = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(value) = line.strip_prefix("n=") {
            if header.is_some() {
                return Err(parse_error(line_no, "duplicate n= header"));
            }
            let n: usize = value
                .trim()
                .parse()
                .map_err(|_| parse_error(line_no, format!("bad vertex count `{}`", value.trim())))?;
            header = Some(n);
            continue;
        }
        let mut labels = Vec::new();
        for token in line.split_whitespace() {
            let label: usize = token
                .parse()
                .ok()
                .filter(|&x| x >= 1)
                .ok_or_else(|| parse_error(line_no, format!("bad vertex label `{token}`")))?;
            if label > MAX_VERTICES {
                return Err(Error::CapacityExceeded {
                    what: "vertex label",
                    got: label,
                    limit: MAX_VERTICES,
                });
            }
            max_label = max_label.max(label);
            labels.push(label - 1);
        }
        rows.push((line_no, labels));
    }
    let n = match header {
        Some(n) if n < max_label => {
            return Err(Error::VertexOutOfRange {
                vertex: max_label - 1,
                n,
            })
        }
        Some(n) => n,
        None => max_label,
    };
    Ok(Parsed { n, rows })
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a facet file. A file with no facets describes `{∅}`.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let parsed = parse_rows(text)?;
    if parsed.rows.is_empty() {
        return match parsed.n {
            0 => Ok(SimplicialComplex::empty_face()),
            _ => Err(Error::VertexUncovered(0)),
        };
    }
    let mut facets = Vec::with_capacity(parsed.rows.len());
    for (line, labels) in parsed.rows {
        let face = Face::from_vertices(labels.iter().copied());
        if face.len() != labels.len() {
            return Err(parse_error(line, "repeated vertex in facet"));
        }
        facets.push(face);
    }
    SimplicialComplex::from_facets(parsed.n, facets)
}

/// Parses a graph file: one edge per line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let parsed = parse_rows(text)?;
    let mut edges = Vec::with_capacity(parsed.rows.len());
    for (line, labels) in parsed.rows {
        match labels[..] {
            [a, b] if a != b => edges.push((a, b)),
            _ => return Err(parse_error(line, "an edge needs two distinct labels")),
        }
    }
    Graph::from_edges(parsed.n, &edges)
}

/// Writes facets 1-based with an `n=` header.
pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = format!("n={}\n", complex.n());
    for f in complex.facets() {
        if f.is_empty() {
            continue;
        }
        let labels: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "{}", labels.join(" ")).unwrap();
    }
    out
}

/// Writes edges 1-based with an `n=` header.
pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("n={}\n", graph.n());
    for (a, b) in graph.edges() {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let c = SimplicialComplex::from_lists(4, &[&[0, 1], &[0, 2], &[1, 2, 3]]).unwrap();
        let text = write_complex(&c);
        assert_eq!(text, "n=4\n1 2\n1 3\n2 3 4\n");
        assert_eq!(parse_complex(&text).unwrap(), c);
        let g = Graph::cycle(5);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let e = SimplicialComplex::empty_face();
        assert_eq!(parse_complex(&write_complex(&e)).unwrap(), e);
    }

    #[test]
    fn comments_blank_lines_and_header() {
        let text = "# empty triangle\n\n1 2\n  2 3\n1 3\n";
        let c = parse_complex(text).unwrap();
        assert_eq!(c, SimplicialComplex::simplex_boundary(3));
        let g = parse_graph("n=4\n1 2\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.isolated_vertices(), Face::from_vertices([2, 3]));
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(
            parse_complex("1 2\n1 x\n"),
            Err(Error::Parse {
                line: 2,
                message: "bad vertex label `x`".into()
            })
        );
        assert!(matches!(parse_complex("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_complex("n=3\n1 2\n"), Err(Error::VertexUncovered(2)));
        assert!(matches!(parse_complex("n=2\n1 3\n"), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(parse_graph("1 2 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_complex("64\n"), Err(Error::CapacityExceeded { .. })));
    }
}
