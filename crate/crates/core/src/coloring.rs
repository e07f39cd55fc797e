use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::face::Face;

/// A vertex coloring with colors `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Self {
        debug_assert!(colors.iter().all(|&c| c < k));
        Coloring { colors, k }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    /// Color classes `V_0, .., V_{k-1}`.
    pub fn classes(&self) -> Vec<Face> {
        let mut classes = vec![Face::EMPTY; self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c] = classes[c].with(v);
        }
        classes
    }

    /// Renumbers colors so that classes appear in order of their smallest vertex.
    pub fn normalized(&self) -> Coloring {
        let mut order: Vec<usize> = (0..self.k).collect();
        let classes = self.classes();
        order.sort_by_key(|&c| classes[c].min_vertex().unwrap_or(usize::MAX));
        let mut rank = vec![0; self.k];
        for (r, &c) in order.iter().enumerate() {
            rank[c] = r;
        }
        Coloring::new(self.colors.iter().map(|&c| rank[c]).collect(), self.k)
    }

    /// No facet holds two vertices of one color.
    pub fn is_proper_for(&self, complex: &SimplicialComplex) -> bool {
        self.colors.len() == complex.n()
            && complex.facets().iter().all(|f| {
                let mut seen = 0u64;
                f.iter().all(|v| {
                    let bit = 1u64 << self.colors[v];
                    let fresh = seen & bit == 0;
                    seen |= bit;
                    fresh
                })
            })
    }
}
