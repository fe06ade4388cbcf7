//! Monotone Exactly 1-in-3 SAT to sliding 2-window temporal 2-coloring
//! whose underlying graph has a vertex cover of size 17.
//!
//! Vertex layout: `u_1..u_4` are `0..4`, `v_i` is `4 + (i-1)`, and
//! `w_1..w_13` follow at `4 + n ..`. Slot `t` has type `t mod 4`, with
//! type 4 meaning divisible by four.

use crate::error::{Error, Result};
use crate::graph::{Instance, TemporalGraph, VertexPair};
use crate::sat::TripleSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneInThreeLayout {
    pub vars: usize,
    pub triples: usize,
}

impl OneInThreeLayout {
    pub fn of(ts: &TripleSystem) -> Self {
        OneInThreeLayout {
            vars: ts.vars,
            triples: ts.triples.len(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        4 + self.vars + 13
    }

    pub fn lifetime(&self) -> usize {
        4 * self.triples
    }

    pub fn u(&self, i: usize) -> usize {
        i - 1
    }

    pub fn v(&self, i: usize) -> usize {
        4 + i - 1
    }

    pub fn w(&self, i: usize) -> usize {
        4 + self.vars + i - 1
    }

    /// `{u_1..u_4, w_1..w_13}`, ascending.
    pub fn cover(&self) -> Vec<usize> {
        (1..=4).map(|i| self.u(i)).chain((1..=13).map(|i| self.w(i))).collect()
    }

    pub fn slot_type(t: usize) -> usize {
        match t % 4 {
            0 => 4,
            r => r,
        }
    }
}

pub fn from_1in3sat(ts: &TripleSystem) -> Result<Instance> {
    if ts.triples.is_empty() {
        return Err(Error::InvalidFormula("need at least one triple".into()));
    }
    // Revalidate: the fields are public.
    let ts = TripleSystem::new(ts.vars, ts.triples.clone())?;
    let lay = OneInThreeLayout::of(&ts);
    let (u, v, w) = (|i| lay.u(i), |i| lay.v(i), |i| lay.w(i));
    let mut snapshots: Vec<Vec<VertexPair>> = Vec::with_capacity(lay.lifetime());
    for t in 1..=lay.lifetime() {
        let ty = OneInThreeLayout::slot_type(t);
        let mut s = Vec::new();
        if ty % 2 == 1 {
            s.extend([(u(1), u(2)), (u(1), u(3)), (u(2), u(4))]);
        } else {
            s.push((u(3), u(4)));
        }
        for i in 1..=ts.vars {
            s.push((u(3), v(i)));
            s.push((u(4), v(i)));
        }
        s.extend([(w(1), w(2)), (w(1), w(3)), (w(2), w(3))]);
        s.extend([(w(11), w(12)), (w(11), w(13)), (w(12), w(13))]);
        s.extend([(w(4), w(7)), (w(5), w(8)), (w(6), w(9))]);
        if ty == 2 {
            s.extend([(w(1), w(4)), (w(2), w(5)), (w(3), w(6))]);
            s.extend([(u(3), w(10)), (w(7), w(10)), (w(8), w(10)), (w(9), w(10))]);
            let [a, b, c] = ts.triples[(t + 2) / 4 - 1];
            s.extend([(v(a), w(1)), (v(b), w(2)), (v(c), w(3))]);
        }
        if ty == 3 {
            s.extend([(w(4), w(9)), (w(5), w(7)), (w(6), w(8))]);
            s.extend([(w(7), w(11)), (w(8), w(12)), (w(9), w(13))]);
        }
        snapshots.push(s);
    }
    let g = TemporalGraph::from_snapshots(lay.vertex_count(), &snapshots)?;
    Instance::new(g, 2, 2)
}
