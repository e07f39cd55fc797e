//! Inputs shared by the benchmarks under `benches/`.

use flagcx_core::{Graph, SimplicialComplex};

/// A graph on `2k` vertices: the path `0..k` with a pendant edge at every
/// vertex. Its independence complex is vertex decomposable of dimension
/// `k - 1`.
pub fn whisker_path(k: usize) -> Graph {
    let mut g = Graph::empty(2 * k);
    for i in 0..k {
        g.add_edge(i, k + i);
        if i + 1 < k {
            g.add_edge(i, i + 1);
        }
    }
    g
}

/// Named nonface graphs of increasing size.
pub fn graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("cycle9", Graph::cycle(9)),
        ("path12", Graph::path(12)),
        ("whiskers6", whisker_path(6)),
        ("whiskers8", whisker_path(8)),
    ]
}

pub fn complexes() -> Vec<(&'static str, SimplicialComplex)> {
    graphs()
        .into_iter()
        .map(|(name, g)| (name, g.independence_complex()))
        .collect()
}
