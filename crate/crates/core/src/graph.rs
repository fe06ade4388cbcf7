//! Temporal graph data model.
//!
//! Vertices are `0..n`, time slots are `1..=T` and colors are `1..=k`.
//! Every edge carries a strictly increasing, nonempty list of the slots in
//! which it is active. Edges are kept sorted by `(u, v)` so that edge
//! indices follow lexicographic order.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A vertex pair `(u, v)` with `u < v`.
pub type VertexPair = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemporalEdge {
    pub u: usize,
    pub v: usize,
    /// Active slots, strictly increasing, each in `1..=T`.
    pub labels: Vec<usize>,
}

impl TemporalEdge {
    pub fn pair(&self) -> VertexPair {
        (self.u, self.v)
    }

    pub fn is_active(&self, t: usize) -> bool {
        self.labels.binary_search(&t).is_ok()
    }

    /// Whether the edge is active somewhere in `start..=end`.
    pub fn active_in(&self, start: usize, end: usize) -> bool {
        let i = self.labels.partition_point(|&l| l < start);
        i < self.labels.len() && self.labels[i] <= end
    }
}

/// A temporal graph `(G, λ)` with a declared lifetime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemporalGraph {
    n: usize,
    lifetime: usize,
    edges: Vec<TemporalEdge>,
}

impl TemporalGraph {
    /// Builds a graph from `(u, v, labels)` triples.
    ///
    /// Pairs given as `(v, u)` are normalized; labels must already be
    /// strictly increasing. The declared lifetime may exceed the largest
    /// label (trailing trivial snapshots), see [`TemporalGraph::is_tight`].
    pub fn new<I>(n: usize, lifetime: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<usize>)>,
    {
        let mut out = Vec::new();
        for (a, b, labels) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) references vertex >= n={n}"
                )));
            }
            check_labels(&labels, lifetime)
                .map_err(|m| Error::InvalidGraph(format!("edge ({u},{v}): {m}")))?;
            out.push(TemporalEdge { u, v, labels });
        }
        out.sort_by_key(|e| (e.u, e.v));
        if let Some(w) = out.windows(2).find(|w| w[0].pair() == w[1].pair()) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({},{})",
                w[0].u, w[0].v
            )));
        }
        Ok(TemporalGraph {
            n,
            lifetime,
            edges: out,
        })
    }

    /// Graph on `n` vertices whose snapshots are given slot by slot.
    /// `snapshots[i]` holds the pairs active at slot `i + 1`.
    pub fn from_snapshots(n: usize, snapshots: &[Vec<VertexPair>]) -> Result<Self> {
        let mut labels: std::collections::BTreeMap<VertexPair, Vec<usize>> = Default::default();
        for (i, snap) in snapshots.iter().enumerate() {
            for &(a, b) in snap {
                let key = if a < b { (a, b) } else { (b, a) };
                let entry = labels.entry(key).or_default();
                if entry.last() != Some(&(i + 1)) {
                    entry.push(i + 1);
                }
            }
        }
        Self::new(
            n,
            snapshots.len(),
            labels.into_iter().map(|((u, v), l)| (u, v, l)),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lifetime(&self) -> usize {
        self.lifetime
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Largest label over all edges, 0 if there are no edges.
    pub fn max_label(&self) -> usize {
        self.edges
            .iter()
            .filter_map(|e| e.labels.last().copied())
            .max()
            .unwrap_or(0)
    }

    /// True when the declared lifetime equals the largest label, or the
    /// graph has no edges.
    pub fn is_tight(&self) -> bool {
        self.edges.is_empty() || self.max_label() == self.lifetime
    }

    /// Total number of (edge, slot) activations.
    pub fn label_count(&self) -> usize {
        self.edges.iter().map(|e| e.labels.len()).sum()
    }

    fn check_slot(&self, t: usize) -> Result<()> {
        if t == 0 || t > self.lifetime {
            return Err(Error::SlotOutOfRange {
                slot: t,
                lifetime: self.lifetime,
            });
        }
        Ok(())
    }

    /// The edge set `E_t` of the snapshot at slot `t`.
    pub fn snapshot_edges(&self, t: usize) -> Result<Vec<VertexPair>> {
        self.check_slot(t)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.is_active(t))
            .map(TemporalEdge::pair)
            .collect())
    }

    pub fn is_trivial(&self, t: usize) -> bool {
        !self.edges.iter().any(|e| e.is_active(t))
    }

    /// Edge indices active at each slot; entry `i` is slot `i + 1`.
    pub fn snapshot_index(&self) -> Vec<Vec<usize>> {
        let mut snaps = vec![Vec::new(); self.lifetime];
        for (i, e) in self.edges.iter().enumerate() {
            for &t in &e.labels {
                snaps[t - 1].push(i);
            }
        }
        snaps
    }

    /// `E[W_t]`, the union of snapshots `t..=t+Δ-1`.
    pub fn window_edges(&self, t: usize, delta: usize) -> Result<Vec<VertexPair>> {
        let range = WindowRange::of_delta(t, delta, self.lifetime)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.active_in(range.start, range.end))
            .map(TemporalEdge::pair)
            .collect())
    }

    /// Restriction to the slots in `slots` (strictly increasing); slot `S[i]`
    /// becomes slot `i + 1`. Edges left without labels are dropped.
    pub fn restrict(&self, slots: &[usize]) -> Result<TemporalGraph> {
        if slots.is_empty() {
            return Err(Error::EmptySlotSet);
        }
        for &t in slots {
            self.check_slot(t)?;
        }
        if slots.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGraph(
                "restriction slots must be strictly increasing".into(),
            ));
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let labels: Vec<usize> = slots
                    .iter()
                    .enumerate()
                    .filter(|(_, &t)| e.is_active(t))
                    .map(|(i, _)| i + 1)
                    .collect();
                (!labels.is_empty()).then_some(TemporalEdge {
                    u: e.u,
                    v: e.v,
                    labels,
                })
            })
            .collect();
        Ok(TemporalGraph {
            n: self.n,
            lifetime: slots.len(),
            edges,
        })
    }

    /// Inserts a trivial snapshot after every `delta` consecutive slots.
    ///
    /// Slot `t` moves to `t + (t-1)/delta`; the new lifetime is
    /// `T + T/delta`.
    pub fn lift_delta(&self, delta: usize) -> Result<TemporalGraph> {
        if delta == 0 || delta > self.lifetime {
            return Err(Error::InvalidInstance(format!(
                "delta {delta} outside [1, {}]",
                self.lifetime
            )));
        }
        let map = |t: usize| t + (t - 1) / delta;
        let edges = self
            .edges
            .iter()
            .map(|e| TemporalEdge {
                u: e.u,
                v: e.v,
                labels: e.labels.iter().map(|&t| map(t)).collect(),
            })
            .collect();
        Ok(TemporalGraph {
            n: self.n,
            lifetime: self.lifetime + self.lifetime / delta,
            edges,
        })
    }

    /// Static edge set of the underlying graph.
    pub fn underlying_edges(&self) -> Vec<VertexPair> {
        self.edges.iter().map(TemporalEdge::pair).collect()
    }

    /// Subgraph induced by `vertices` (any order, no repeats), renumbered
    /// `0..vertices.len()` in the given order. Labels and lifetime are kept.
    pub fn induced(&self, vertices: &[usize]) -> Result<TemporalGraph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n || pos[v] != usize::MAX {
                return Err(Error::InvalidGraph(format!(
                    "bad or repeated vertex {v} in induced subgraph"
                )));
            }
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| pos[e.u] != usize::MAX && pos[e.v] != usize::MAX)
            .map(|e| (pos[e.u], pos[e.v], e.labels.clone()));
        TemporalGraph::new(vertices.len(), self.lifetime, edges)
    }

    /// Removes slot `t` from every edge label, turning it into a trivial
    /// snapshot. Fails if some edge would lose its last label.
    pub fn clear_slot(&self, t: usize) -> Result<TemporalGraph> {
        self.check_slot(t)?;
        let mut edges = self.edges.clone();
        for e in &mut edges {
            if let Ok(i) = e.labels.binary_search(&t) {
                if e.labels.len() == 1 {
                    return Err(Error::InvalidGraph(format!(
                        "clearing slot {t} would leave edge ({},{}) without labels",
                        e.u, e.v
                    )));
                }
                e.labels.remove(i);
            }
        }
        Ok(TemporalGraph {
            n: self.n,
            lifetime: self.lifetime,
            edges,
        })
    }

    /// Same graph with a larger declared lifetime (appended trivial slots).
    pub fn with_lifetime(&self, lifetime: usize) -> Result<TemporalGraph> {
        if lifetime < self.max_label() {
            return Err(Error::InvalidGraph(format!(
                "lifetime {lifetime} below max label {}",
                self.max_label()
            )));
        }
        Ok(TemporalGraph {
            n: self.n,
            lifetime,
            edges: self.edges.clone(),
        })
    }
}

fn check_labels(labels: &[usize], lifetime: usize) -> std::result::Result<(), String> {
    if labels.is_empty() {
        return Err("empty label list".into());
    }
    if let Some(&t) = labels.iter().find(|&&t| t == 0 || t > lifetime) {
        return Err(format!("label {t} outside [1, {lifetime}]"));
    }
    if labels.windows(2).any(|w| w[0] >= w[1]) {
        return Err("labels not strictly increasing".into());
    }
    Ok(())
}

/// A contiguous slot interval `[start, end]`, both inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WindowRange {
    pub start: usize,
    pub end: usize,
}

impl WindowRange {
    pub fn new(start: usize, end: usize, lifetime: usize) -> Result<Self> {
        if start == 0 || start > end || end > lifetime {
            return Err(Error::WindowOutOfRange {
                start,
                end,
                lifetime,
            });
        }
        Ok(WindowRange { start, end })
    }

    /// The Δ-window `W_t = [t, t+Δ-1]`.
    pub fn of_delta(t: usize, delta: usize, lifetime: usize) -> Result<Self> {
        if delta == 0 {
            return Err(Error::InvalidInstance("delta must be positive".into()));
        }
        Self::new(t, t + delta - 1, lifetime)
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, t: usize) -> bool {
        self.start <= t && t <= self.end
    }

    pub fn contains_range(&self, other: &WindowRange) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn slots(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

/// A decision instance: graph, window length Δ and color budget k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: TemporalGraph,
    pub delta: usize,
    pub k: u32,
}

impl Instance {
    pub fn new(graph: TemporalGraph, delta: usize, k: u32) -> Result<Self> {
        if delta == 0 || delta > graph.lifetime() {
            return Err(Error::InvalidInstance(format!(
                "delta {delta} outside [1, {}]",
                graph.lifetime()
            )));
        }
        if k == 0 {
            return Err(Error::InvalidInstance("k must be at least 1".into()));
        }
        Ok(Instance { graph, delta, k })
    }

    /// Number of Δ-windows, `T - Δ + 1`.
    pub fn window_count(&self) -> usize {
        self.graph.lifetime() - self.delta + 1
    }
}

/// A temporal coloring: one row of `n` colors per slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TemporalColoring {
    n: usize,
    lifetime: usize,
    k: u32,
    colors: Vec<u32>,
}

impl TemporalColoring {
    /// `colors` is row-major: entry `(t-1)*n + v` is the color of `(v, t)`.
    pub fn new(n: usize, lifetime: usize, k: u32, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != n * lifetime {
            return Err(Error::InvalidColoring(format!(
                "expected {} entries, got {}",
                n * lifetime,
                colors.len()
            )));
        }
        if let Some(i) = colors.iter().position(|&c| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange {
                slot: i / n.max(1) + 1,
                vertex: i % n.max(1),
                color: colors[i],
                k,
            });
        }
        Ok(TemporalColoring {
            n,
            lifetime,
            k,
            colors,
        })
    }

    pub fn from_rows(k: u32, rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidColoring("ragged rows".into()));
        }
        Self::new(n, rows.len(), k, rows.concat())
    }

    /// Everything colored 1.
    pub fn uniform(n: usize, lifetime: usize, k: u32) -> Self {
        TemporalColoring {
            n,
            lifetime,
            k: k.max(1),
            colors: vec![1; n * lifetime],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lifetime(&self) -> usize {
        self.lifetime
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn get(&self, t: usize, v: usize) -> u32 {
        self.colors[(t - 1) * self.n + v]
    }

    pub fn row(&self, t: usize) -> &[u32] {
        &self.colors[(t - 1) * self.n..t * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        (1..=self.lifetime).map(move |t| self.row(t))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    /// Number of distinct colors used, `|φ|`.
    pub fn size(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }
}
