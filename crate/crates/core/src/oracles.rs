//! Exhaustive ground-truth deciders. These favour obviousness over speed
//! and share no search code with the solver.

use std::collections::BTreeSet;

use crate::error::{BudgetKind, Error, Result};
use crate::graph::{Instance, TemporalColoring, TemporalGraph, VertexPair};
use crate::sat::{CnfFormula, TripleSystem};
use crate::solver::Decision;
use crate::verifier::first_violation;

/// Limits on exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of enumerated candidates.
    pub max_candidates: u64,
    /// Maximum number of DP states.
    pub max_states: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_candidates: 1_000_000,
            max_states: 10_000_000,
        }
    }
}

impl Budget {
    pub fn candidates(max_candidates: u64) -> Self {
        Budget {
            max_candidates,
            ..Budget::default()
        }
    }

    fn check(&self, count: Option<u128>, kind: BudgetKind, limit: u64) -> Result<()> {
        match count {
            Some(c) if c <= limit as u128 => Ok(()),
            _ => Err(Error::BudgetExceeded { kind, limit }),
        }
    }
}

fn pow(base: u32, exp: usize) -> Option<u128> {
    (base as u128).checked_pow(u32::try_from(exp).ok()?)
}

/// Advances `digits` (entries in `1..=k`) to the next tuple in
/// lexicographic order; false after the last one.
fn odometer(digits: &mut [u32], k: u32) -> bool {
    for i in (0..digits.len()).rev() {
        if digits[i] < k {
            digits[i] += 1;
            for d in &mut digits[i + 1..] {
                *d = 1;
            }
            return true;
        }
    }
    false
}

/// Tries all `k^{nT}` colorings in lexicographic order.
pub fn brute_force_decision(inst: &Instance, budget: &Budget) -> Result<Decision> {
    let g = &inst.graph;
    let cells = g.n() * g.lifetime();
    budget.check(pow(inst.k, cells), BudgetKind::Candidates, budget.max_candidates)?;
    let mut table = vec![1u32; cells];
    loop {
        if first_violation(g, inst.delta, &table).is_none() {
            let col = TemporalColoring::new(g.n(), g.lifetime(), inst.k, table)?;
            return Ok(Decision::Yes(col));
        }
        if !odometer(&mut table, inst.k) {
            return Ok(Decision::No);
        }
    }
}

/// Smallest k with a yes answer from [`brute_force_decision`].
pub fn brute_force_minimize(g: &TemporalGraph, delta: usize, budget: &Budget) -> Result<u32> {
    for k in 1..=g.n().max(1) as u32 {
        let inst = Instance::new(g.clone(), delta, k)?;
        if brute_force_decision(&inst, budget)?.is_yes() {
            return Ok(k);
        }
    }
    Err(Error::InvalidInstance(
        "no coloring with n colors; graph is malformed".into(),
    ))
}

/// Temporal Coloring (Δ = T) by reachability over sets of edges that still
/// need a properly colored slot.
pub fn temporal_coloring_dp(g: &TemporalGraph, k: u32, budget: &Budget) -> Result<bool> {
    let m = g.edge_count();
    if m >= 64 {
        return Err(Error::BudgetExceeded {
            kind: BudgetKind::EdgeSets,
            limit: budget.max_states,
        });
    }
    budget.check(Some(1u128 << m), BudgetKind::EdgeSets, budget.max_states)?;
    let all: u64 = if m == 0 { 0 } else { u64::MAX >> (64 - m) };
    let mut reach: BTreeSet<u64> = BTreeSet::from([all]);
    for t in 1..=g.lifetime() {
        let active: Vec<(usize, VertexPair)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_active(t))
            .map(|(i, e)| (i, e.pair()))
            .collect();
        let touched: Vec<usize> = active
            .iter()
            .flat_map(|&(_, (u, v))| [u, v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        budget.check(pow(k, touched.len()), BudgetKind::Candidates, budget.max_candidates)?;
        let mut color = vec![1u32; g.n()];
        let mut digits = vec![1u32; touched.len()];
        let mut covers = BTreeSet::new();
        loop {
            for (i, &v) in touched.iter().enumerate() {
                color[v] = digits[i];
            }
            let mask = active
                .iter()
                .filter(|(_, (u, v))| color[*u] != color[*v])
                .fold(0u64, |acc, (i, _)| acc | 1 << i);
            covers.insert(mask);
            if !odometer(&mut digits, k) {
                break;
            }
        }
        reach = reach
            .iter()
            .flat_map(|&s| covers.iter().map(move |&c| s & !c))
            .collect();
    }
    Ok(reach.contains(&0))
}

pub const MAX_SAT_VARS: usize = 24;

fn assignments(vars: usize) -> Result<impl Iterator<Item = Vec<bool>>> {
    if vars > MAX_SAT_VARS {
        return Err(Error::TooManyVariables {
            found: vars,
            limit: MAX_SAT_VARS,
        });
    }
    Ok((0u64..1 << vars).map(move |mask| (0..vars).map(|i| mask >> i & 1 == 1).collect()))
}

/// First satisfying assignment in binary-counter order (bit i is variable
/// i+1), if any.
pub fn sat_bruteforce(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    Ok(assignments(f.vars)?.find(|a| f.is_satisfied_by(a)))
}

/// First assignment with exactly one true variable per triple, if any.
pub fn one_in_three_bruteforce(ts: &TripleSystem) -> Result<Option<Vec<bool>>> {
    Ok(assignments(ts.vars)?.find(|a| ts.is_satisfied_by(a)))
}

/// Whether a static graph on `n` vertices has a proper coloring with at
/// most `c` colors, by trying all `c^n` assignments.
pub fn chromatic_at_most(n: usize, edges: &[VertexPair], c: u32, budget: &Budget) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    if c == 0 {
        return Ok(false);
    }
    budget.check(pow(c, n), BudgetKind::Candidates, budget.max_candidates)?;
    let mut color = vec![1u32; n];
    loop {
        if edges.iter().all(|&(u, v)| color[u] != color[v]) {
            return Ok(true);
        }
        if !odometer(&mut color, c) {
            return Ok(false);
        }
    }
}
