//! Instance generators from hardness constructions, used as test fixtures,
//! plus witness builders for their constructive directions.

mod four_coloring;
mod one_in_three;
mod sliding;
mod temporal;

pub use four_coloring::{from_4coloring, witness_from_4coloring};
pub use one_in_three::{from_1in3sat, OneInThreeLayout};
pub use sliding::{
    compose_and, from_exact34sat_sw, witness_for_composition, witness_from_assignment, SlidingLayout,
};
pub use temporal::{from_exact34sat_tc, TemporalLayout};

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{TemporalGraph, VertexPair};

/// Each (pair, slot) is active independently with probability `p`; pairs
/// are visited in lexicographic order and slots ascending. The declared
/// lifetime is always `lifetime`.
pub fn random_instance(n: usize, lifetime: usize, p: f64, seed: u64) -> TemporalGraph {
    let p = p.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let labels: Vec<usize> = (1..=lifetime).filter(|_| rng.gen_bool(p)).collect();
            if !labels.is_empty() {
                edges.push((u, v, labels));
            }
        }
    }
    TemporalGraph::new(n, lifetime, edges).expect("generated labels are valid")
}

/// Largest vertex degree of the underlying graph.
pub fn max_degree(g: &TemporalGraph) -> usize {
    let mut deg = vec![0usize; g.n()];
    for e in g.edges() {
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

/// Size of the largest connected component of any snapshot, counting only
/// vertices with at least one edge in that snapshot.
pub fn max_snapshot_component(g: &TemporalGraph) -> usize {
    (1..=g.lifetime())
        .map(|t| {
            let edges = g.snapshot_edges(t).expect("slot in range");
            largest_component(g.n(), &edges)
        })
        .max()
        .unwrap_or(0)
}

fn largest_component(n: usize, edges: &[VertexPair]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    let touched: std::collections::BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    for v in touched {
        *sizes.entry(find(&mut parent, v)).or_default() += 1;
    }
    sizes.into_values().max().unwrap_or(0)
}

/// Deterministic 2-coloring of `edges` on `n` vertices by breadth-first
/// search from the smallest uncolored vertex; untouched vertices get 1.
/// None if the graph has an odd cycle.
pub(crate) fn two_color(n: usize, edges: &[VertexPair]) -> Option<Vec<u32>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut color = vec![0u32; n];
    for s in 0..n {
        if color[s] != 0 {
            continue;
        }
        color[s] = 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if color[y] == 0 {
                    color[y] = 3 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return None;
                }
            }
        }
    }
    Some(color)
}
