//! Exact solver for sliding Δ-window temporal k-coloring.
//!
//! The lifetime is tiled by windows `W_i = [iΔ+1, min((i+2)Δ, T)]`; two
//! consecutive windows share exactly Δ slots, and every Δ-window lies inside
//! one of them. Internally proper colorings of `W_0` are enumerated, keyed by
//! their last Δ rows, and each surviving key is extended by the fresh rows of
//! the next window. Colorings that agree on a Δ-slot overlap compose, so the
//! instance is a yes-instance iff some key survives the last window.
//!
//! Trivial snapshots are always colored all-1, which keeps the number of
//! distinct keys bounded by the non-trivial slots.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{BudgetKind, Error, Result};
use crate::graph::{Instance, TemporalColoring, TemporalGraph, WindowRange};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Candidate rows tried while enumerating one layer of windows.
    pub max_enumeration: u64,
    /// Distinct overlap states kept between two layers.
    pub max_states: u64,
    /// Fix vertex 0 to color 1 in the first non-trivial slot.
    pub symmetry_breaking: bool,
    /// For Δ = T, use the covered-edge-set DP when `2^m <= max_states`.
    pub delta_t_fast_path: bool,
    /// Worker cap; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_enumeration: 10_000_000,
            max_states: 1_000_000,
            symmetry_breaking: false,
            delta_t_fast_path: true,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(TemporalColoring),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn witness(&self) -> Option<&TemporalColoring> {
        match self {
            Decision::Yes(c) => Some(c),
            Decision::No => None,
        }
    }
}

/// Coloring of a contiguous slot range, row-major (`len × n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WindowColoring {
    pub range: WindowRange,
    pub colors: Vec<u32>,
}

impl WindowColoring {
    pub fn row(&self, n: usize, t: usize) -> &[u32] {
        let r = t - self.range.start;
        &self.colors[r * n..(r + 1) * n]
    }
}

/// The last Δ rows of a window coloring; the key two windows must agree on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverlapState(pub Vec<u32>);

/// The solver's window tiling of `[1, T]`.
pub fn solver_windows(lifetime: usize, delta: usize) -> Vec<WindowRange> {
    if lifetime <= 2 * delta {
        return vec![WindowRange {
            start: 1,
            end: lifetime,
        }];
    }
    let last = lifetime.div_ceil(delta) - 2;
    (0..=last)
        .map(|i| WindowRange {
            start: i * delta + 1,
            end: ((i + 2) * delta).min(lifetime),
        })
        .collect()
}

/// Index of the solver window containing the Δ-window starting at `t`.
pub fn covering_window(t: usize, lifetime: usize, delta: usize) -> usize {
    let count = solver_windows(lifetime, delta).len();
    ((t - 1) / delta).min(count - 1)
}

/// Precomputed per-instance tables.
struct Prepared<'a> {
    n: usize,
    delta: usize,
    k: u32,
    ends: Vec<(usize, usize)>,
    labels: Vec<&'a [usize]>,
    trivial: Vec<bool>,
    /// Edge indices in `E[W_w]`, entry `w - 1`.
    window_edges: Vec<Vec<usize>>,
    /// Slot where vertex 0 is pinned to color 1, if symmetry breaking is on.
    pinned: Option<usize>,
    max_enumeration: u64,
}

impl<'a> Prepared<'a> {
    fn new(g: &'a TemporalGraph, delta: usize, k: u32, cfg: &SolverConfig) -> Self {
        let lifetime = g.lifetime();
        let snaps = g.snapshot_index();
        let trivial: Vec<bool> = snaps.iter().map(Vec::is_empty).collect();
        let window_edges = (1..=lifetime + 1 - delta)
            .map(|w| {
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.active_in(w, w + delta - 1))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let pinned = if cfg.symmetry_breaking {
            trivial.iter().position(|&t| !t).map(|i| i + 1)
        } else {
            None
        };
        Prepared {
            n: g.n(),
            delta,
            // A row never needs more than n distinct colors, and rows can
            // be recolored independently, so k beyond n adds nothing.
            k: k.min(g.n().max(1) as u32),
            ends: g.edges().iter().map(|e| (e.u, e.v)).collect(),
            labels: g.edges().iter().map(|e| e.labels.as_slice()).collect(),
            trivial,
            window_edges,
            pinned,
            max_enumeration: cfg.max_enumeration,
        }
    }

    /// Whether Δ-window `w` is properly colored by `buf`, whose first row is
    /// slot `base`.
    fn window_ok(&self, w: usize, base: usize, buf: &[u32]) -> bool {
        let n = self.n;
        let hi = w + self.delta - 1;
        self.window_edges[w - 1].iter().all(|&e| {
            let (u, v) = self.ends[e];
            let ls = self.labels[e];
            let from = ls.partition_point(|&l| l < w);
            ls[from..]
                .iter()
                .take_while(|&&l| l <= hi)
                .any(|&l| buf[(l - base) * n + u] != buf[(l - base) * n + v])
        })
    }

    fn bump(&self, counter: &AtomicU64) -> Result<()> {
        if counter.fetch_add(1, Ordering::Relaxed) + 1 > self.max_enumeration {
            return Err(Error::BudgetExceeded {
                kind: BudgetKind::Enumeration,
                limit: self.max_enumeration,
            });
        }
        Ok(())
    }

    /// Depth-first enumeration of the rows of `range` after the first
    /// `fixed` rows already in `buf`, in lexicographic order. Calls `visit`
    /// on every internally proper completion.
    fn enumerate<F>(
        &self,
        range: WindowRange,
        buf: &mut [u32],
        fixed: usize,
        counter: &AtomicU64,
        visit: &mut F,
    ) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        self.descend(range, range.start + fixed, buf, counter, visit)
    }

    fn descend<F>(
        &self,
        range: WindowRange,
        s: usize,
        buf: &mut [u32],
        counter: &AtomicU64,
        visit: &mut F,
    ) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        if s > range.end {
            return Ok(visit(buf));
        }
        let n = self.n;
        let base = range.start;
        let r = (s - base) * n;
        buf[r..r + n].fill(1);
        let check = s + 1 >= base + self.delta;
        let w = (s + 1).saturating_sub(self.delta);
        let locked = usize::from(self.pinned == Some(s));
        loop {
            self.bump(counter)?;
            if (!check || self.window_ok(w, base, buf))
                && self.descend(range, s + 1, buf, counter, visit)?.is_break()
            {
                return Ok(ControlFlow::Break(()));
            }
            if self.trivial[s - 1] || !next_row(&mut buf[r..r + n], locked, self.k) {
                return Ok(ControlFlow::Continue(()));
            }
        }
    }
}

/// Advances `row` to the next row in lexicographic order, leaving the first
/// `locked` entries alone. Returns false after the last row.
fn next_row(row: &mut [u32], locked: usize, k: u32) -> bool {
    for v in (locked..row.len()).rev() {
        if row[v] < k {
            row[v] += 1;
            row[v + 1..].fill(1);
            return true;
        }
    }
    false
}

/// Every internally proper coloring of `range` (trivial slots all-1) in
/// lexicographic row-major order. The range must hold between Δ and 2Δ slots.
pub fn enumerate_window_colorings(
    g: &TemporalGraph,
    range: WindowRange,
    delta: usize,
    k: u32,
    cfg: &SolverConfig,
) -> Result<Vec<WindowColoring>> {
    if delta == 0 || delta > g.lifetime() || k == 0 {
        return Err(Error::InvalidInstance(format!(
            "need 1 <= delta <= T and k >= 1, got delta={delta}, k={k}"
        )));
    }
    WindowRange::new(range.start, range.end, g.lifetime())?;
    if range.len() < delta || range.len() > 2 * delta {
        return Err(Error::InvalidInstance(format!(
            "window length {} not in [{delta}, {}]",
            range.len(),
            2 * delta
        )));
    }
    let prep = Prepared::new(g, delta, k, cfg);
    let mut buf = vec![1u32; range.len() * g.n()];
    let counter = AtomicU64::new(0);
    let mut out = Vec::new();
    let _ = prep.enumerate(range, &mut buf, 0, &counter, &mut |c| {
        out.push(WindowColoring {
            range,
            colors: c.to_vec(),
        });
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Decides the instance and returns a witness on yes.
pub fn solve_decision(inst: &Instance) -> Result<Decision> {
    solve_decision_with(inst, &SolverConfig::default())
}

pub fn solve_decision_with(inst: &Instance, cfg: &SolverConfig) -> Result<Decision> {
    let g = &inst.graph;
    let m = g.edge_count();
    if m == 0 {
        return Ok(Decision::Yes(TemporalColoring::uniform(
            g.n(),
            g.lifetime(),
            inst.k,
        )));
    }
    if inst.k == 1 {
        // One color never separates two endpoints.
        return Ok(Decision::No);
    }
    let fast = cfg.delta_t_fast_path
        && inst.delta == g.lifetime()
        && m < 63
        && (1u64 << m) <= cfg.max_states;
    let run = || {
        if fast {
            covered_edge_dp(inst, cfg)
        } else {
            window_dp(inst, cfg)
        }
    };
    match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::InvalidInstance(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

fn to_coloring(inst: &Instance, colors: Vec<u32>) -> Decision {
    Decision::Yes(
        TemporalColoring::new(inst.graph.n(), inst.graph.lifetime(), inst.k, colors)
            .expect("solver colors stay within 1..=k"),
    )
}

/// Layer of retained overlap states.
struct Layer {
    keys: Vec<OverlapState>,
    /// For layer 0: rows of slots `1..=Δ`; later layers: unused.
    prefix: Vec<Vec<u32>>,
    /// Index of the parent state in the previous layer.
    parent: Vec<usize>,
}

fn window_dp(inst: &Instance, cfg: &SolverConfig) -> Result<Decision> {
    let g = &inst.graph;
    let (n, delta) = (g.n(), inst.delta);
    let prep = Prepared::new(g, delta, inst.k, cfg);
    let windows = solver_windows(g.lifetime(), delta);
    let counter = AtomicU64::new(0);

    if windows.len() == 1 {
        let w = windows[0];
        let mut buf = vec![1u32; w.len() * n];
        let mut found = None;
        let _ = prep.enumerate(w, &mut buf, 0, &counter, &mut |c| {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        })?;
        return Ok(found.map_or(Decision::No, |c| to_coloring(inst, c)));
    }

    let span = delta * n;
    let state_cap = |len: usize| -> Result<()> {
        if len as u64 > cfg.max_states {
            return Err(Error::BudgetExceeded {
                kind: BudgetKind::States,
                limit: cfg.max_states,
            });
        }
        Ok(())
    };

    // Layer 0: every internally proper coloring of W_0, keyed by its tail.
    let w0 = windows[0];
    let mut first = Layer {
        keys: Vec::new(),
        prefix: Vec::new(),
        parent: Vec::new(),
    };
    let mut index: HashMap<OverlapState, usize> = HashMap::new();
    let mut buf = vec![1u32; w0.len() * n];
    let mut overflow = false;
    let _ = prep.enumerate(w0, &mut buf, 0, &counter, &mut |c| {
        let key = OverlapState(c[span..].to_vec());
        if let Entry::Vacant(slot) = index.entry(key.clone()) {
            slot.insert(first.keys.len());
            first.keys.push(key);
            first.prefix.push(c[..span].to_vec());
            if first.keys.len() as u64 > cfg.max_states {
                overflow = true;
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    if overflow {
        state_cap(first.keys.len())?;
    }
    let mut layers = vec![first];

    for (i, &w) in windows.iter().enumerate().skip(1) {
        let prev = layers.last().expect("layer 0 exists");
        if prev.keys.is_empty() {
            return Ok(Decision::No);
        }
        let counter = AtomicU64::new(0);
        let is_last = i + 1 == windows.len();
        let fresh_len = (w.len() - delta) * n;
        // Extensions per state, computed in parallel and merged in state
        // order so the outcome does not depend on scheduling.
        let ext: Vec<Result<Vec<Vec<u32>>>> = prev
            .keys
            .par_iter()
            .map(|key| {
                let mut buf = vec![1u32; w.len() * n];
                buf[..span].copy_from_slice(&key.0);
                let mut found = Vec::new();
                let _ = prep.enumerate(w, &mut buf, delta, &counter, &mut |c| {
                    found.push(c[span..].to_vec());
                    if is_last {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                })?;
                debug_assert!(found.iter().all(|f| f.len() == fresh_len));
                Ok(found)
            })
            .collect();
        let ext = ext.into_iter().collect::<Result<Vec<_>>>()?;

        if is_last {
            let Some((p, fresh)) = ext
                .into_iter()
                .enumerate()
                .find_map(|(p, f)| f.into_iter().next().map(|f| (p, f)))
            else {
                return Ok(Decision::No);
            };
            return Ok(to_coloring(inst, reconstruct(&layers, p, fresh)));
        }

        let mut next = Layer {
            keys: Vec::new(),
            prefix: Vec::new(),
            parent: Vec::new(),
        };
        let mut index: HashMap<OverlapState, ()> = HashMap::new();
        for (p, list) in ext.into_iter().enumerate() {
            for fresh in list {
                let key = OverlapState(fresh);
                if let Entry::Vacant(slot) = index.entry(key.clone()) {
                    slot.insert(());
                    next.keys.push(key);
                    next.parent.push(p);
                    state_cap(next.keys.len())?;
                }
            }
        }
        layers.push(next);
    }
    unreachable!("the last window returns")
}

fn reconstruct(layers: &[Layer], mut p: usize, fresh: Vec<u32>) -> Vec<u32> {
    let mut parts = vec![fresh];
    for (i, layer) in layers.iter().enumerate().rev() {
        parts.push(layer.keys[p].0.clone());
        if i == 0 {
            parts.push(layer.prefix[p].clone());
        } else {
            p = layer.parent[p];
        }
    }
    parts.into_iter().rev().flatten().collect()
}

/// Δ = T: state is the set of edges not yet properly colored; each slot
/// colors only the vertices it touches (others get color 1).
fn covered_edge_dp(inst: &Instance, cfg: &SolverConfig) -> Result<Decision> {
    let g = &inst.graph;
    let n = g.n();
    let k = inst.k.min(n.max(1) as u32);
    let snaps = g.snapshot_index();
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let full: u64 = (1u64 << g.edge_count()) - 1;
    let mut work = 0u64;

    // Per slot: achievable covered masks, each with the first coloring of
    // the touched vertices that achieves it.
    let mut options: Vec<Vec<(u64, Vec<u32>)>> = Vec::with_capacity(snaps.len());
    for snap in &snaps {
        let mut touched: Vec<usize> = snap.iter().flat_map(|&e| [ends[e].0, ends[e].1]).collect();
        touched.sort_unstable();
        touched.dedup();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in touched.iter().enumerate() {
            pos[v] = i;
        }
        let mut seen: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        let mut row = vec![1u32; touched.len()];
        loop {
            work += 1;
            if work > cfg.max_enumeration {
                return Err(Error::BudgetExceeded {
                    kind: BudgetKind::Enumeration,
                    limit: cfg.max_enumeration,
                });
            }
            let mask = snap
                .iter()
                .filter(|&&e| row[pos[ends[e].0]] != row[pos[ends[e].1]])
                .fold(0u64, |acc, &e| acc | (1 << e));
            seen.entry(mask).or_insert_with(|| {
                let mut full_row = vec![1u32; n];
                for (i, &v) in touched.iter().enumerate() {
                    full_row[v] = row[i];
                }
                full_row
            });
            if !next_row(&mut row, 0, k) {
                break;
            }
        }
        options.push(seen.into_iter().collect());
    }

    // Forward reachability with back-pointers: state -> (prev state, option).
    let mut layers: Vec<BTreeMap<u64, (u64, usize)>> = Vec::with_capacity(snaps.len());
    let mut current: BTreeMap<u64, (u64, usize)> = BTreeMap::new();
    current.insert(full, (full, usize::MAX));
    for opts in &options {
        let mut next: BTreeMap<u64, (u64, usize)> = BTreeMap::new();
        for &state in current.keys() {
            for (i, (mask, _)) in opts.iter().enumerate() {
                next.entry(state & !mask).or_insert((state, i));
            }
        }
        if next.len() as u64 > cfg.max_states {
            return Err(Error::BudgetExceeded {
                kind: BudgetKind::States,
                limit: cfg.max_states,
            });
        }
        layers.push(std::mem::replace(&mut current, next));
    }
    if !current.contains_key(&0) {
        return Ok(Decision::No);
    }
    let mut rows = Vec::with_capacity(snaps.len());
    let mut state = 0u64;
    let mut step = current;
    for t in (0..snaps.len()).rev() {
        let (prev, opt) = step[&state];
        rows.push(options[t][opt].1.clone());
        state = prev;
        step = std::mem::take(&mut layers[t]);
    }
    rows.reverse();
    Ok(to_coloring(inst, rows.concat()))
}

/// Smallest k admitting a proper coloring, by ascending scan.
pub fn minimize(g: &TemporalGraph, delta: usize) -> Result<(u32, TemporalColoring)> {
    minimize_with(g, delta, &SolverConfig::default())
}

pub fn minimize_with(
    g: &TemporalGraph,
    delta: usize,
    cfg: &SolverConfig,
) -> Result<(u32, TemporalColoring)> {
    let top = g.n().max(1) as u32;
    for k in 1..=top {
        let inst = Instance::new(g.clone(), delta, k)?;
        if let Decision::Yes(w) = solve_decision_with(&inst, cfg)? {
            return Ok((k, w));
        }
    }
    unreachable!("n distinct colors per slot color every edge properly")
}
