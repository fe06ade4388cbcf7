//! Exact (3,4)-SAT to sliding 2-window temporal 2-coloring with T = 3, and
//! the AND-composition of several such instances.
//!
//! Vertex layout, all indices 1-based inside a gadget:
//! - variable `x` owns `5(x-1) .. 5(x-1)+5`, i.e. `v^(1)..v^(5)`;
//! - clause `c` owns 18 vertices from `5n + 18(c-1)`: the core
//!   `c^(1..3)`, the extension `(j,1), (j,2)` for `j = 1..3`, then the
//!   auxiliaries `(j,1,1), (j,1,2), (j,2,1)` for `j = 1..3`.

use crate::error::{Error, Result};
use crate::graph::{Instance, TemporalColoring, TemporalGraph, VertexPair};
use crate::sat::CnfFormula;

use super::two_color;

/// Vertex numbering of [`from_exact34sat_sw`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlidingLayout {
    pub vars: usize,
    pub clauses: usize,
}

impl SlidingLayout {
    pub fn of(f: &CnfFormula) -> Self {
        SlidingLayout {
            vars: f.vars,
            clauses: f.clause_count(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        5 * self.vars + 18 * self.clauses
    }

    /// `v^(j)` of variable `x`, `j` in `1..=5`.
    pub fn var(&self, x: usize, j: usize) -> usize {
        5 * (x - 1) + (j - 1)
    }

    fn clause_base(&self, c: usize) -> usize {
        5 * self.vars + 18 * (c - 1)
    }

    /// Core vertex `j` in `1..=3` of clause `c`.
    pub fn core(&self, c: usize, j: usize) -> usize {
        self.clause_base(c) + (j - 1)
    }

    /// Extension vertex `(j, a)`, `a` in `1..=2`.
    pub fn ext(&self, c: usize, j: usize, a: usize) -> usize {
        self.clause_base(c) + 3 + 2 * (j - 1) + (a - 1)
    }

    /// Auxiliary vertex `(j, a, b)` for `(a, b)` in `{(1,1), (1,2), (2,1)}`.
    pub fn aux(&self, c: usize, j: usize, a: usize, b: usize) -> usize {
        let off = match (a, b) {
            (1, 1) => 0,
            (1, 2) => 1,
            (2, 1) => 2,
            _ => panic!("no auxiliary vertex ({j},{a},{b})"),
        };
        self.clause_base(c) + 9 + 3 * (j - 1) + off
    }
}

/// The three snapshots of the T = 3 construction.
fn snapshots(f: &CnfFormula) -> [Vec<VertexPair>; 3] {
    let lay = SlidingLayout::of(f);
    let mut base = Vec::new();
    for x in 1..=f.vars {
        base.push((lay.var(x, 1), lay.var(x, 2)));
        base.push((lay.var(x, 2), lay.var(x, 3)));
    }
    for c in 1..=lay.clauses {
        base.push((lay.core(c, 1), lay.core(c, 2)));
        base.push((lay.core(c, 2), lay.core(c, 3)));
        base.push((lay.core(c, 1), lay.core(c, 3)));
        for j in 1..=3 {
            base.push((lay.ext(c, j, 1), lay.ext(c, j, 2)));
        }
    }

    let mut second = base.clone();
    for x in 1..=f.vars {
        second.push((lay.var(x, 1), lay.var(x, 3)));
    }
    for c in 1..=lay.clauses {
        second.push((lay.core(c, 2), lay.ext(c, 1, 2)));
        second.push((lay.core(c, 1), lay.ext(c, 1, 1)));
        second.push((lay.core(c, 2), lay.ext(c, 2, 1)));
        second.push((lay.core(c, 3), lay.ext(c, 2, 2)));
        second.push((lay.core(c, 1), lay.ext(c, 3, 2)));
        second.push((lay.core(c, 3), lay.ext(c, 3, 1)));
    }

    let mut third = base.clone();
    for x in 1..=f.vars {
        third.push((lay.var(x, 3), lay.var(x, 4)));
        third.push((lay.var(x, 4), lay.var(x, 5)));
        third.push((lay.var(x, 1), lay.var(x, 5)));
    }
    for (i, clause) in f.clauses.iter().enumerate() {
        let c = i + 1;
        for j in 1..=3 {
            third.push((lay.aux(c, j, 1, 1), lay.aux(c, j, 1, 2)));
            third.push((lay.aux(c, j, 1, 2), lay.ext(c, j, 1)));
            third.push((lay.aux(c, j, 2, 1), lay.ext(c, j, 2)));
        }
        for (s, &lit) in clause.iter().enumerate() {
            let (j, x) = (s + 1, lit.unsigned_abs() as usize);
            let (a, b) = if lit > 0 { (2, 3) } else { (1, 2) };
            third.push((lay.var(x, a), lay.aux(c, j, 1, 1)));
            third.push((lay.var(x, b), lay.aux(c, j, 2, 1)));
        }
    }
    [base, second, third]
}

/// T = 3, Δ = 2, k = 2, with `5n + 18m` vertices.
pub fn from_exact34sat_sw(f: &CnfFormula) -> Result<Instance> {
    f.check_exact34()?;
    let lay = SlidingLayout::of(f);
    let g = TemporalGraph::from_snapshots(lay.vertex_count(), &snapshots(f))?;
    Instance::new(g, 2, 2)
}

fn monochromatic<'a>(edges: &'a [VertexPair], row: &'a [u32]) -> impl Iterator<Item = VertexPair> + 'a {
    edges.iter().copied().filter(move |&(u, v)| row[u] == row[v])
}

fn check_assignment(f: &CnfFormula, assignment: &[bool]) -> Result<()> {
    f.check_exact34()?;
    if assignment.len() != f.vars {
        return Err(Error::Unsatisfied(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            f.vars
        )));
    }
    if let Some(c) = f
        .clauses
        .iter()
        .position(|c| !c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    {
        return Err(Error::Unsatisfied(format!("clause {} is false", c + 1)));
    }
    Ok(())
}

/// The three rows of a proper coloring of [`from_exact34sat_sw`].
fn witness_rows(f: &CnfFormula, assignment: &[bool]) -> Result<[Vec<u32>; 3]> {
    check_assignment(f, assignment)?;
    let lay = SlidingLayout::of(f);
    let n = lay.vertex_count();
    let mut mid = vec![1u32; n];
    for x in 1..=f.vars {
        let colors = if assignment[x - 1] {
            [1, 1, 2, 2, 2]
        } else {
            [2, 1, 1, 2, 2]
        };
        for (j, &col) in colors.iter().enumerate() {
            mid[lay.var(x, j + 1)] = col;
        }
    }
    for (i, clause) in f.clauses.iter().enumerate() {
        let c = i + 1;
        let j = 1 + clause
            .iter()
            .position(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
            .expect("clause satisfied");
        // Core edge {c_j, c_(j mod 3 + 1)} stays monochromatic.
        let odd = (j + 1) % 3 + 1;
        for q in 1..=3 {
            mid[lay.core(c, q)] = if q == odd { 2 } else { 1 };
        }
        for (jj, a, q) in [(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 3), (3, 1, 3), (3, 2, 1)] {
            mid[lay.ext(c, jj, a)] = 3 - mid[lay.core(c, q)];
        }
    }

    let [s1, s2, s3] = snapshots(f);
    if let Some((u, v)) = monochromatic(&s2, &mid).find(|e| !s1.contains(e)) {
        return Err(Error::InvalidColoring(format!(
            "slot-2 edge ({u},{v}) left monochromatic"
        )));
    }
    let need1: Vec<VertexPair> = monochromatic(&s1, &mid).collect();
    let mut need3: Vec<VertexPair> = s3.iter().copied().filter(|e| !s1.contains(e)).collect();
    need3.extend(need1.iter().copied());
    let first = two_color(n, &need1)
        .ok_or_else(|| Error::InvalidColoring("slot 1 requirements not bipartite".into()))?;
    let last = two_color(n, &need3)
        .ok_or_else(|| Error::InvalidColoring("slot 3 requirements not bipartite".into()))?;
    Ok([first, mid, last])
}

/// Proper sliding 2-window 2-coloring of [`from_exact34sat_sw`] built from
/// a satisfying assignment (`assignment[i]` is variable `i + 1`).
pub fn witness_from_assignment(f: &CnfFormula, assignment: &[bool]) -> Result<TemporalColoring> {
    TemporalColoring::from_rows(2, &witness_rows(f, assignment)?)
}

fn check_family(fs: &[CnfFormula]) -> Result<SlidingLayout> {
    let first = fs
        .first()
        .ok_or_else(|| Error::InvalidFormula("composition needs at least one formula".into()))?;
    let lay = SlidingLayout::of(first);
    for (i, f) in fs.iter().enumerate() {
        f.check_exact34()?;
        if SlidingLayout::of(f) != lay {
            return Err(Error::InvalidFormula(format!(
                "formula {} has {} variables and {} clauses, expected {} and {}",
                i + 1,
                f.vars,
                f.clause_count(),
                lay.vars,
                lay.clauses
            )));
        }
    }
    Ok(lay)
}

/// Blocks of five snapshots per formula (the T = 3 construction followed
/// by two copies of its first snapshot) on one shared vertex set.
/// T = 5ℓ, Δ = 2, k = 2.
pub fn compose_and(fs: &[CnfFormula]) -> Result<Instance> {
    let lay = check_family(fs)?;
    let mut all = Vec::with_capacity(5 * fs.len());
    for f in fs {
        let [s1, s2, s3] = snapshots(f);
        all.extend([s1.clone(), s2, s3, s1.clone(), s1]);
    }
    let g = TemporalGraph::from_snapshots(lay.vertex_count(), &all)?;
    Instance::new(g, 2, 2)
}

/// Rows 4 and 5 of a block, chosen per connected component of the first
/// snapshot: edges left monochromatic in row 3 must be proper in row 4,
/// every edge must be proper in row 4 or 5, and edges monochromatic in the
/// next block's first row must be proper in row 5.
fn bridge_rows(n: usize, base: &[VertexPair], row3: &[u32], next: Option<&[u32]>) -> Result<[Vec<u32>; 2]> {
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in base {
        adj[u].push(v);
        adj[v].push(u);
    }
    for s in 0..n {
        if comp_of[s] != usize::MAX || adj[s].is_empty() {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![s];
        let mut members = Vec::new();
        comp_of[s] = id;
        while let Some(x) = stack.pop() {
            members.push(x);
            for &y in &adj[x] {
                if comp_of[y] == usize::MAX {
                    comp_of[y] = id;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }

    let mut r4 = vec![1u32; n];
    let mut r5 = vec![1u32; n];
    for members in &comps {
        let edges: Vec<VertexPair> = base
            .iter()
            .copied()
            .filter(|&(u, _)| comp_of[u] == comp_of[members[0]])
            .collect();
        let size = members.len();
        let found = (0u64..1 << (2 * size)).find(|&bits| {
            for (i, &v) in members.iter().enumerate() {
                r4[v] = 1 + (bits >> (2 * size - 1 - i) & 1) as u32;
                r5[v] = 1 + (bits >> (size - 1 - i) & 1) as u32;
            }
            edges.iter().all(|&(u, v)| {
                let p4 = r4[u] != r4[v];
                let p5 = r5[u] != r5[v];
                (p4 || p5)
                    && (row3[u] != row3[v] || p4)
                    && next.is_none_or(|nx| nx[u] != nx[v] || p5)
            })
        });
        if found.is_none() {
            return Err(Error::InvalidColoring(format!(
                "no bridging rows for component at vertex {}",
                members[0]
            )));
        }
    }
    Ok([r4, r5])
}

/// Proper coloring of [`compose_and`] from one satisfying assignment per
/// formula.
pub fn witness_for_composition(fs: &[CnfFormula], assignments: &[Vec<bool>]) -> Result<TemporalColoring> {
    let lay = check_family(fs)?;
    if assignments.len() != fs.len() {
        return Err(Error::Unsatisfied(format!(
            "{} assignments for {} formulas",
            assignments.len(),
            fs.len()
        )));
    }
    let blocks = fs
        .iter()
        .zip(assignments)
        .map(|(f, a)| witness_rows(f, a))
        .collect::<Result<Vec<_>>>()?;
    let [base, _, _] = snapshots(&fs[0]);
    let mut rows = Vec::with_capacity(5 * fs.len());
    for (b, block) in blocks.iter().enumerate() {
        let next = blocks.get(b + 1).map(|nb| nb[0].as_slice());
        let [r4, r5] = bridge_rows(lay.vertex_count(), &base, &block[2], next)?;
        rows.extend(block.iter().cloned());
        rows.push(r4);
        rows.push(r5);
    }
    TemporalColoring::from_rows(2, &rows)
}
