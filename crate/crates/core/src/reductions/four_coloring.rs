//! Graph 4-Coloring to Temporal 2-Coloring.
//!
//! Slots 1 and 2 are complete graphs; every non-edge of the input gets one
//! private slot holding only that pair. A 2-coloring of the first two slots
//! is a pair of bipartite spanning subgraphs, which together cover exactly
//! the edges a 4-coloring separates.

use crate::error::{Error, Result};
use crate::graph::{Instance, TemporalColoring, TemporalGraph, VertexPair};

fn non_edges(n: usize, edges: &[VertexPair]) -> Vec<VertexPair> {
    let mut present = vec![false; n * n];
    for &(u, v) in edges {
        present[u * n + v] = true;
        present[v * n + u] = true;
    }
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !present[u * n + v])
        .collect()
}

fn check_static(n: usize, edges: &[VertexPair]) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidGraph("need at least 2 vertices".into()));
    }
    // Reuses the temporal validation for loops, range and duplicates.
    TemporalGraph::new(n, 1, edges.iter().map(|&(u, v)| (u, v, vec![1]))).map(|_| ())
}

/// Non-edge slots appear in lexicographic order of the pair, starting at
/// slot 3. Δ = T and k = 2.
pub fn from_4coloring(n: usize, edges: &[VertexPair]) -> Result<Instance> {
    check_static(n, edges)?;
    let complete: Vec<VertexPair> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut snapshots = vec![complete.clone(), complete];
    snapshots.extend(non_edges(n, edges).into_iter().map(|p| vec![p]));
    let lifetime = snapshots.len();
    Instance::new(TemporalGraph::from_snapshots(n, &snapshots)?, lifetime, 2)
}

/// Temporal 2-coloring of [`from_4coloring`] built from a proper coloring
/// with colors in `1..=4`.
pub fn witness_from_4coloring(n: usize, edges: &[VertexPair], phi: &[u32]) -> Result<TemporalColoring> {
    check_static(n, edges)?;
    if phi.len() != n {
        return Err(Error::InvalidColoring(format!(
            "coloring has {} entries for {n} vertices",
            phi.len()
        )));
    }
    if let Some(v) = (0..n).find(|&v| !(1..=4).contains(&phi[v])) {
        return Err(Error::InvalidColoring(format!(
            "vertex {v} has color {} outside 1..=4",
            phi[v]
        )));
    }
    if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| phi[u] == phi[v]) {
        return Err(Error::InvalidColoring(format!("edge ({u},{v}) is monochromatic")));
    }
    let mut rows = vec![
        phi.iter().map(|&c| if c <= 2 { 1 } else { 2 }).collect::<Vec<u32>>(),
        phi.iter().map(|&c| if c % 2 == 1 { 1 } else { 2 }).collect(),
    ];
    for (_, v) in non_edges(n, edges) {
        let mut row = vec![1u32; n];
        row[v] = 2;
        rows.push(row);
    }
    TemporalColoring::from_rows(2, &rows)
}
