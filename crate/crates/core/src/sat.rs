//! SAT-side inputs for the reduction generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A CNF formula over variables `1..=vars`. Literals are nonzero signed
/// variable indices, negative meaning negated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    pub vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            if let Some(&l) = c.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > vars) {
                return Err(Error::InvalidFormula(format!(
                    "clause {} has literal {l} outside variables 1..={vars}",
                    i + 1
                )));
            }
        }
        Ok(CnfFormula { vars, clauses })
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Exact (3,4) form: three distinct variables per clause and four
    /// occurrences per variable.
    pub fn check_exact34(&self) -> Result<()> {
        let mut occ = vec![0usize; self.vars + 1];
        for (i, c) in self.clauses.iter().enumerate() {
            if c.len() != 3 {
                return Err(Error::InvalidFormula(format!(
                    "clause {} has {} literals, expected 3",
                    i + 1,
                    c.len()
                )));
            }
            let mut vs: Vec<u32> = c.iter().map(|l| l.unsigned_abs()).collect();
            vs.sort_unstable();
            vs.dedup();
            if vs.len() != 3 {
                return Err(Error::InvalidFormula(format!(
                    "clause {} repeats a variable",
                    i + 1
                )));
            }
            for v in vs {
                occ[v as usize] += 1;
            }
        }
        if let Some(v) = (1..=self.vars).find(|&v| occ[v] != 4) {
            return Err(Error::InvalidFormula(format!(
                "variable {v} occurs {} times, expected 4",
                occ[v]
            )));
        }
        Ok(())
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.vars
            && self.clauses.iter().all(|c| {
                c.iter()
                    .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
            })
    }

    /// For each clause position `(clause, j)`, which occurrence (1-based)
    /// of its variable this is, counting clauses in order.
    pub fn occurrence_numbers(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![0usize; self.vars + 1];
        self.clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|l| {
                        let v = l.unsigned_abs() as usize;
                        seen[v] += 1;
                        seen[v]
                    })
                    .collect()
            })
            .collect()
    }

    /// Seeded random Exact (3,4) formula on `vars` variables (`vars`
    /// divisible by 3, giving `4·vars/3` clauses). Variable occurrences are
    /// shuffled into clause slots and rejected until every clause has three
    /// distinct variables; signs are uniform.
    pub fn random_exact34(vars: usize, seed: u64) -> Result<Self> {
        if vars == 0 || !vars.is_multiple_of(3) {
            return Err(Error::InvalidFormula(format!(
                "Exact (3,4) needs a positive multiple of 3 variables, got {vars}"
            )));
        }
        let clauses = 4 * vars / 3;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pool: Vec<i32> = (1..=vars as i32).flat_map(|v| [v; 4]).collect();
        for _ in 0..100_000 {
            pool.shuffle(&mut rng);
            let ok = pool
                .chunks(3)
                .all(|c| c[0] != c[1] && c[0] != c[2] && c[1] != c[2]);
            if ok {
                let cls = pool
                    .chunks(3)
                    .map(|c| {
                        c.iter()
                            .map(|&v| if rng.gen_bool(0.5) { v } else { -v })
                            .collect()
                    })
                    .collect();
                debug_assert_eq!(pool.len(), 3 * clauses);
                return CnfFormula::new(vars, cls);
            }
        }
        Err(Error::InvalidFormula(
            "rejection sampling did not find an Exact (3,4) layout".into(),
        ))
    }
}

/// Variable triples for Monotone Exactly 1-in-3 SAT.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleSystem {
    pub vars: usize,
    pub triples: Vec<[usize; 3]>,
}

impl TripleSystem {
    /// Variables are 1-based; each triple needs three distinct variables.
    pub fn new(vars: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        for (i, t) in triples.iter().enumerate() {
            if t.iter().any(|&x| x == 0 || x > vars) {
                return Err(Error::InvalidFormula(format!(
                    "triple {} references a variable outside 1..={vars}",
                    i + 1
                )));
            }
            if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                return Err(Error::InvalidFormula(format!(
                    "triple {} repeats a variable",
                    i + 1
                )));
            }
        }
        Ok(TripleSystem { vars, triples })
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.vars
            && self
                .triples
                .iter()
                .all(|t| t.iter().filter(|&&x| assignment[x - 1]).count() == 1)
    }

    pub fn random(vars: usize, triples: usize, seed: u64) -> Result<Self> {
        if vars < 3 {
            return Err(Error::InvalidFormula("need at least 3 variables".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ts = (0..triples)
            .map(|_| {
                let mut pick: Vec<usize> = (1..=vars).collect();
                pick.shuffle(&mut rng);
                [pick[0], pick[1], pick[2]]
            })
            .collect();
        TripleSystem::new(vars, ts)
    }
}
