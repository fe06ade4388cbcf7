use std::fmt;

use thiserror::Error;

/// What a budget bounded when it ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    /// Candidate colorings (or rows) explored while enumerating a window.
    Enumeration,
    /// Distinct overlap states retained between two windows.
    States,
    /// Exhaustive candidates of a brute-force oracle.
    Candidates,
    /// Subsets of edges tracked by a covered-edge-set DP.
    EdgeSets,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BudgetKind::Enumeration => "window enumeration",
            BudgetKind::States => "retained states",
            BudgetKind::Candidates => "brute-force candidates",
            BudgetKind::EdgeSets => "covered-edge sets",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid temporal graph: {0}")]
    InvalidGraph(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("slot {slot} outside lifetime [1, {lifetime}]")]
    SlotOutOfRange { slot: usize, lifetime: usize },

    #[error("window [{start}, {end}] extends beyond lifetime {lifetime}")]
    WindowOutOfRange { start: usize, end: usize, lifetime: usize },

    #[error("slot subset must be nonempty")]
    EmptySlotSet,

    #[error("coloring has shape {found_n}x{found_t}, graph needs {n}x{t}")]
    DimensionMismatch {
        n: usize,
        t: usize,
        found_n: usize,
        found_t: usize,
    },

    #[error("color {color} at slot {slot}, vertex {vertex} outside [1, {k}]")]
    ColorOutOfRange {
        slot: usize,
        vertex: usize,
        color: u32,
        k: u32,
    },

    #[error("{kind} budget of {limit} exceeded")]
    BudgetExceeded { kind: BudgetKind, limit: u64 },

    #[error("invalid formula: {0}")]
    InvalidFormula(String),

    #[error("assignment does not satisfy the formula: {0}")]
    Unsatisfied(String),

    #[error("too many variables: {found} (limit {limit})")]
    TooManyVariables { found: usize, limit: usize },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
