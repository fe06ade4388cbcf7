//! Exact (3,4)-SAT to Temporal 2-Coloring with few edges per snapshot.
//!
//! Vertex layout: `w_1..w_4` are `0..4`. Variable `x_i` (1-based) owns the
//! block starting at `4 + 9(i-1)`: `v^(1)..v^(8)` then `u_x`. Clause `c_j`
//! owns the single vertex `u_c = 4 + 9n + (j-1)`.
//!
//! Slots: variable `x_i` is slot `i`; clause `c_j` uses slots `n + 2j - 1`
//! and `n + 2j`.

use crate::error::Result;
use crate::graph::{Instance, TemporalGraph, VertexPair};
use crate::sat::CnfFormula;

/// Vertex and slot numbering of [`from_exact34sat_tc`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TemporalLayout {
    pub vars: usize,
    pub clauses: usize,
}

impl TemporalLayout {
    pub fn of(f: &CnfFormula) -> Self {
        TemporalLayout {
            vars: f.vars,
            clauses: f.clause_count(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        4 + 9 * self.vars + self.clauses
    }

    pub fn lifetime(&self) -> usize {
        self.vars + 2 * self.clauses
    }

    /// `w_l` for `l` in `1..=4`.
    pub fn w(&self, l: usize) -> usize {
        l - 1
    }

    /// `v^(j)` of variable `x` (both 1-based).
    pub fn v(&self, x: usize, j: usize) -> usize {
        4 + 9 * (x - 1) + (j - 1)
    }

    pub fn u_var(&self, x: usize) -> usize {
        4 + 9 * (x - 1) + 8
    }

    pub fn u_clause(&self, c: usize) -> usize {
        4 + 9 * self.vars + (c - 1)
    }

    pub fn variable_slot(&self, x: usize) -> usize {
        x
    }

    /// The two slots of clause `c` (1-based).
    pub fn clause_slots(&self, c: usize) -> (usize, usize) {
        (self.vars + 2 * c - 1, self.vars + 2 * c)
    }
}

pub fn from_exact34sat_tc(f: &CnfFormula) -> Result<Instance> {
    f.check_exact34()?;
    let lay = TemporalLayout::of(f);
    let mut snapshots: Vec<Vec<VertexPair>> = Vec::with_capacity(lay.lifetime());
    for x in 1..=f.vars {
        let mut s: Vec<VertexPair> = (1..=8).map(|j| (lay.v(x, j), lay.v(x, j % 8 + 1))).collect();
        for l in 1..=4 {
            s.push((lay.w(l), lay.v(x, 2 * l - 1)));
            s.push((lay.w(l), lay.v(x, 2 * l)));
            s.push((lay.w(l), lay.u_var(x)));
        }
        snapshots.push(s);
    }
    let occ = f.occurrence_numbers();
    for (c, clause) in f.clauses.iter().enumerate() {
        let mut first: Vec<VertexPair> = (1..=4).map(|l| (lay.w(l), lay.u_clause(c + 1))).collect();
        let mut corners = Vec::with_capacity(3);
        for (s, &lit) in clause.iter().enumerate() {
            let (x, l) = (lit.unsigned_abs() as usize, occ[c][s]);
            first.push((lay.w(l), lay.v(x, 2 * l - 1)));
            first.push((lay.w(l), lay.v(x, 2 * l)));
            let y = usize::from(lit > 0);
            corners.push(lay.v(x, 2 * l - y));
        }
        let triangle = vec![
            (corners[0], corners[1]),
            (corners[0], corners[2]),
            (corners[1], corners[2]),
        ];
        first.extend(&triangle);
        snapshots.push(first);
        snapshots.push(triangle);
    }
    let g = TemporalGraph::from_snapshots(lay.vertex_count(), &snapshots)?;
    let lifetime = g.lifetime();
    Instance::new(g, lifetime, 2)
}
