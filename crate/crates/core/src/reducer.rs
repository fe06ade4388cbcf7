//! Preprocessing that bounds the number of non-trivial snapshots in every
//! Δ-window by a function of n.
//!
//! Sliding over the Δ-windows from left to right, whenever a non-empty
//! snapshot occurs more than `2n²` times inside the current window, its
//! median occurrence is replaced by the trivial snapshot. The median has at
//! least `n²` copies on each side inside the window, so every window that
//! loses it still sees `n²` copies of the same snapshot.

use std::collections::{BTreeSet, HashMap};

use log::debug;

use crate::error::Result;
use crate::graph::{Instance, TemporalGraph, VertexPair};
use crate::solver::{solve_decision_with, Decision, SolverConfig};

/// Canonical encoding of a snapshot: its sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnapshotKey(pub Vec<VertexPair>);

/// One replaced slot and the same-key occurrences around it at the time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Replacement {
    pub slot: usize,
    pub window_start: usize,
    pub earlier: usize,
    pub later: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub instance: Instance,
    /// Replacements in the order they were made.
    pub replaced: Vec<Replacement>,
}

/// Per-window cap on the copies of one snapshot: `2n²`.
pub fn copy_threshold(n: usize) -> usize {
    2 * n * n
}

/// Guaranteed bound on non-trivial snapshots per Δ-window after reduction,
/// `2 · 2^{C(n,2)} · n²` (saturating).
pub fn window_bound(n: usize) -> u128 {
    let pairs = n * n.saturating_sub(1) / 2;
    let distinct = if pairs >= 120 { u128::MAX } else { 1u128 << pairs };
    distinct
        .saturating_mul(2)
        .saturating_mul((n * n) as u128)
}

pub fn snapshot_keys(g: &TemporalGraph) -> Vec<SnapshotKey> {
    g.snapshot_index()
        .into_iter()
        .map(|idx| SnapshotKey(idx.into_iter().map(|e| g.edges()[e].pair()).collect()))
        .collect()
}

/// Largest number of non-trivial snapshots in any Δ-window.
pub fn max_nontrivial_per_window(g: &TemporalGraph, delta: usize) -> usize {
    let flags: Vec<usize> = (1..=g.lifetime())
        .map(|t| usize::from(!g.is_trivial(t)))
        .collect();
    flags
        .windows(delta.min(flags.len()).max(1))
        .map(|w| w.iter().sum())
        .max()
        .unwrap_or(0)
}

pub fn reduce_snapshots(inst: &Instance) -> Instance {
    reduce_snapshots_report(inst).instance
}

pub fn reduce_snapshots_report(inst: &Instance) -> Reduction {
    let g = &inst.graph;
    let (n, lifetime, delta) = (g.n(), g.lifetime(), inst.delta);
    let threshold = copy_threshold(n);
    let half = n * n;

    // Key ids in order of first appearance; None marks a trivial slot.
    let mut ids: HashMap<SnapshotKey, usize> = HashMap::new();
    let mut slot_key: Vec<Option<usize>> = Vec::with_capacity(lifetime);
    for key in snapshot_keys(g) {
        if key.0.is_empty() {
            slot_key.push(None);
        } else {
            let next = ids.len();
            slot_key.push(Some(*ids.entry(key).or_insert(next)));
        }
    }
    let mut occ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ids.len()];
    let mut replaced = Vec::new();

    let mut thin = |id: usize, start: usize, occ: &mut Vec<BTreeSet<usize>>, slot_key: &mut Vec<Option<usize>>| {
        while occ[id].len() > threshold {
            let c = occ[id].len();
            let mid = (c - 1) / 2;
            let slot = *occ[id].iter().nth(mid).expect("mid < len");
            let (earlier, later) = (mid, c - 1 - mid);
            assert!(earlier >= half && later >= half, "median must have n² copies per side");
            occ[id].remove(&slot);
            slot_key[slot - 1] = None;
            debug!("slot {slot} -> trivial (window {start}, {earlier} before, {later} after)");
            replaced.push(Replacement {
                slot,
                window_start: start,
                earlier,
                later,
            });
        }
    };

    for t in 1..=delta {
        if let Some(id) = slot_key[t - 1] {
            occ[id].insert(t);
        }
    }
    for id in 0..occ.len() {
        thin(id, 1, &mut occ, &mut slot_key);
    }
    for start in 2..=lifetime + 1 - delta {
        if let Some(id) = slot_key[start - 2] {
            occ[id].remove(&(start - 1));
        }
        let entering = start + delta - 1;
        if let Some(id) = slot_key[entering - 1] {
            occ[id].insert(entering);
            thin(id, start, &mut occ, &mut slot_key);
        }
    }

    let mut graph = g.clone();
    let mut slots: Vec<usize> = replaced.iter().map(|r| r.slot).collect();
    slots.sort_unstable();
    for s in slots {
        graph = graph
            .clear_slot(s)
            .expect("replaced snapshots keep copies elsewhere");
    }
    Reduction {
        instance: Instance {
            graph,
            delta,
            k: inst.k,
        },
        replaced,
    }
}

/// Snapshot reduction followed by the exact solver. A yes witness for the
/// reduced instance is also proper for the original one.
pub fn solve_fpt(inst: &Instance) -> Result<Decision> {
    solve_fpt_with(inst, &SolverConfig::default())
}

pub fn solve_fpt_with(inst: &Instance, cfg: &SolverConfig) -> Result<Decision> {
    solve_decision_with(&reduce_snapshots(inst), cfg)
}
