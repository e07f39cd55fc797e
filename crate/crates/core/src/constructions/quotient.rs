use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{Graph, Matching};

/// The flag complex on `d` vertices read off an ordered right matching of
/// `G_Δ`.
#[derive(Clone, Debug, Serialize)]
pub struct Quotient {
    #[serde(skip)]
    pub complex: SimplicialComplex,
    #[serde(skip)]
    pub graph: Graph,
    pub matching: Matching,
}

/// For a `(d-1)`-dimensional flag complex on `2d` vertices without cone
/// points whose nonface graph has an ordered right matching
/// `(u_1, v_1), .., (u_d, v_d)`: the independence complex of the graph on
/// `d` vertices with `{h, k}` an edge iff one of `{v_h, v_k}`, `{u_h, v_k}`,
/// `{u_k, v_h}` is an edge of `G_Δ`. Its f-vector is `h(Δ)`.
pub fn matching_quotient(delta: &SimplicialComplex) -> Result<Quotient> {
    let g = delta.nonface_graph()?;
    let d = delta.d();
    let fail = |why: &str| Err(Error::StructureConditionFailed(why.to_string()));
    if delta.n() != 2 * d {
        return fail("vertex count is not twice the ring dimension");
    }
    if !delta.cone_points().is_empty() {
        return fail("complex has cone points");
    }
    let Some(matching) = g.ordered_right_matching() else {
        return fail("nonface graph has no ordered right matching");
    };
    let p = &matching.pairs;
    let mut q = Graph::empty(d);
    for h in 0..d {
        for k in h + 1..d {
            let (uh, vh) = p[h];
            let (uk, vk) = p[k];
            if g.has_edge(vh, vk) || g.has_edge(uh, vk) || g.has_edge(uk, vh) {
                q.add_edge(h, k);
            }
        }
    }
    Ok(Quotient {
        complex: q.independence_complex(),
        graph: q,
        matching,
    })
}
