//! Additive-one approximation for the minimum number of colors, using a
//! minimum vertex cover of the underlying graph.
//!
//! The subgraph induced by the cover is colored optimally; every vertex
//! outside the cover is independent, so one extra color shared by all of
//! them in every slot keeps each remaining edge properly colored.

use crate::error::Result;
use crate::graph::{Instance, TemporalColoring, TemporalGraph, VertexPair};
use crate::solver::{minimize_with, solve_decision_with, SolverConfig};

/// A vertex subset of the underlying graph, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover(pub Vec<usize>);

impl VertexCover {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn covers(&self, edges: &[VertexPair]) -> bool {
        edges
            .iter()
            .all(|(u, v)| self.0.binary_search(u).is_ok() || self.0.binary_search(v).is_ok())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Choice {
    Open,
    In,
    Out,
}

/// Whether the undecided vertices can be completed to a cover using at
/// most `budget` more vertices. Branches on the first uncovered edge.
fn completable(edges: &[VertexPair], choice: &mut [Choice], budget: usize) -> bool {
    let Some(&(u, v)) = edges
        .iter()
        .find(|&&(u, v)| choice[u] != Choice::In && choice[v] != Choice::In)
    else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let try_take = |w: usize, choice: &mut [Choice]| {
        if choice[w] == Choice::Out {
            return false;
        }
        choice[w] = Choice::In;
        let ok = completable(edges, choice, budget - 1);
        choice[w] = Choice::Open;
        ok
    };
    try_take(u, choice) || try_take(v, choice)
}

/// Minimum vertex cover; among all minimum covers the lexicographically
/// smallest ascending vertex list.
pub fn min_vertex_cover(n: usize, edges: &[VertexPair]) -> VertexCover {
    let mut choice = vec![Choice::Open; n];
    let size = (0..=n)
        .find(|&s| completable(edges, &mut choice, s))
        .expect("all vertices form a cover");
    let mut left = size;
    let mut cover = Vec::with_capacity(size);
    for v in 0..n {
        if left == 0 {
            break;
        }
        choice[v] = Choice::In;
        if completable(edges, &mut choice, left - 1) {
            cover.push(v);
            left -= 1;
        } else {
            choice[v] = Choice::Out;
        }
    }
    VertexCover(cover)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub cover: VertexCover,
    /// Optimum for the subgraph induced by the cover (0 if the cover is
    /// empty).
    pub k_star: u32,
    pub k_out: u32,
    pub coloring: TemporalColoring,
    /// With tightening: whether `k_out` is provably optimal for the whole
    /// graph.
    pub exact: Option<bool>,
}

pub fn approx_coloring(g: &TemporalGraph, delta: usize) -> Result<Approximation> {
    approx_coloring_with(g, delta, &SolverConfig::default(), false)
}

pub fn approx_coloring_with(
    g: &TemporalGraph,
    delta: usize,
    cfg: &SolverConfig,
    tighten: bool,
) -> Result<Approximation> {
    // Validates Δ against the lifetime.
    Instance::new(g.clone(), delta, 1)?;
    let (n, lifetime) = (g.n(), g.lifetime());
    let cover = min_vertex_cover(n, &g.underlying_edges());

    let (k_star, inner) = if cover.is_empty() {
        (0, None)
    } else {
        let sub = g.induced(&cover.0)?;
        let (k, w) = minimize_with(&sub, delta, cfg)?;
        (k, Some(w))
    };
    let outside = n - cover.len();
    let k_out = if outside > 0 { k_star + 1 } else { k_star }.max(1);

    let mut colors = vec![k_star + 1; n * lifetime];
    if let Some(w) = &inner {
        for t in 1..=lifetime {
            for (i, &v) in cover.0.iter().enumerate() {
                colors[(t - 1) * n + v] = w.get(t, i);
            }
        }
    }
    let coloring = TemporalColoring::new(n, lifetime, k_out, colors)?;

    let exact = if tighten && outside > 0 && k_star > 0 {
        let full = Instance::new(g.clone(), delta, k_star)?;
        Some(!solve_decision_with(&full, cfg)?.is_yes())
    } else if tighten {
        Some(true)
    } else {
        None
    };
    Ok(Approximation {
        cover,
        k_star,
        k_out,
        coloring,
        exact,
    })
}
