//! Checks proper sliding Δ-window temporal colorings.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Instance, TemporalColoring, TemporalEdge, TemporalGraph};

/// An edge present in window `W_t` that is never properly colored inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub t: usize,
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Proper,
    Violation(Violation),
}

impl Verdict {
    pub fn is_proper(&self) -> bool {
        matches!(self, Verdict::Proper)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Proper => f.write_str("PROPER"),
            Verdict::Violation(x) => write!(f, "VIOLATION t={} edge={},{}", x.t, x.u, x.v),
        }
    }
}

/// Decides whether `col` is a proper sliding Δ-window temporal coloring of
/// `inst.graph` using colors in `1..=inst.k`.
///
/// The first violation in lexicographic `(t, u, v)` order is reported.
pub fn is_proper(inst: &Instance, col: &TemporalColoring) -> Result<Verdict> {
    let g = &inst.graph;
    if col.n() != g.n() || col.lifetime() != g.lifetime() {
        return Err(Error::DimensionMismatch {
            n: g.n(),
            t: g.lifetime(),
            found_n: col.n(),
            found_t: col.lifetime(),
        });
    }
    for t in 1..=col.lifetime() {
        for (v, &c) in col.row(t).iter().enumerate() {
            if c == 0 || c > inst.k {
                return Err(Error::ColorOutOfRange {
                    slot: t,
                    vertex: v,
                    color: c,
                    k: inst.k,
                });
            }
        }
    }
    Ok(match first_violation(g, inst.delta, col.as_slice()) {
        Some(x) => Verdict::Violation(x),
        None => Verdict::Proper,
    })
}

/// Core check on a raw row-major color table; no range validation.
pub(crate) fn first_violation(g: &TemporalGraph, delta: usize, colors: &[u32]) -> Option<Violation> {
    let n = g.n();
    let last_start = g.lifetime() + 1 - delta;
    // Edges are sorted by (u, v), so the first edge reaching the smallest
    // window start is the lexicographic minimum.
    let mut best: Option<Violation> = None;
    for e in g.edges() {
        let bound = best.map_or(last_start, |b| b.t);
        if let Some(t) = first_bad_window(e, delta, last_start.min(bound), n, colors) {
            if best.is_none_or(|b| t < b.t) {
                best = Some(Violation { t, u: e.u, v: e.v });
            }
        }
    }
    best
}

/// Smallest window start `t <= last_start` whose window contains a label
/// of `e` but no slot where `e` is temporally properly colored.
fn first_bad_window(
    e: &TemporalEdge,
    delta: usize,
    last_start: usize,
    n: usize,
    colors: &[u32],
) -> Option<usize> {
    let proper: Vec<usize> = e
        .labels
        .iter()
        .copied()
        .filter(|&t| colors[(t - 1) * n + e.u] != colors[(t - 1) * n + e.v])
        .collect();
    let mut next = 1;
    let mut p = 0;
    for &l in &e.labels {
        let lo = (l + 1).saturating_sub(delta).max(1).max(next);
        let hi = l.min(last_start);
        for t in lo..=hi {
            // First proper slot at or after t.
            while p < proper.len() && proper[p] < t {
                p += 1;
            }
            if p == proper.len() || proper[p] > t + delta - 1 {
                return Some(t);
            }
        }
        next = next.max(hi + 1);
    }
    None
}

/// Number of distinct colors used anywhere in the table.
pub fn coloring_size(col: &TemporalColoring) -> usize {
    col.size()
}
