//! Polynomial kernel for Temporal Coloring (Δ = T): keep only the slots
//! matched by a maximum matching between edges and slots.

use std::collections::VecDeque;

use crate::graph::TemporalGraph;

/// Bipartite incidence graph: left vertices are edge indices, right
/// vertices are slots `1..=T`, `(e, t)` adjacent iff `t ∈ λ(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGraph {
    slots: usize,
    adj: Vec<Vec<usize>>,
}

impl IncidenceGraph {
    pub fn from_graph(g: &TemporalGraph) -> Self {
        IncidenceGraph {
            slots: g.lifetime(),
            adj: g.edges().iter().map(|e| e.labels.clone()).collect(),
        }
    }

    /// `adj[e]` lists the slots (1-based, ascending) adjacent to edge `e`.
    pub fn new(slots: usize, adj: Vec<Vec<usize>>) -> Self {
        IncidenceGraph { slots, adj }
    }

    pub fn left_len(&self) -> usize {
        self.adj.len()
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn neighbors(&self, e: usize) -> &[usize] {
        &self.adj[e]
    }

    pub fn is_adjacent(&self, e: usize, t: usize) -> bool {
        self.adj.get(e).is_some_and(|a| a.contains(&t))
    }
}

/// A set of `(edge index, slot)` pairs, sorted by edge index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Matched slots in ascending order.
    pub fn slots(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.pairs.iter().map(|&(_, t)| t).collect();
        s.sort_unstable();
        s
    }

    /// Every pair is an adjacency and no edge or slot repeats.
    pub fn is_valid_for(&self, b: &IncidenceGraph) -> bool {
        let mut left = vec![false; b.left_len()];
        let mut right = vec![false; b.slots() + 1];
        self.pairs.iter().all(|&(e, t)| {
            if e >= b.left_len() || t == 0 || t > b.slots() || !b.is_adjacent(e, t) {
                return false;
            }
            !std::mem::replace(&mut left[e], true) && !std::mem::replace(&mut right[t], true)
        })
    }
}

const FREE: usize = usize::MAX;

/// Maximum matching by Hopcroft–Karp. Left vertices are scanned in index
/// order and neighbors in ascending slot order, so the result is
/// reproducible.
pub fn max_matching(b: &IncidenceGraph) -> Matching {
    let nl = b.left_len();
    let mut match_l = vec![FREE; nl];
    let mut match_r = vec![FREE; b.slots() + 1];
    let mut dist = vec![0usize; nl];

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for e in 0..nl {
            if match_l[e] == FREE {
                dist[e] = 0;
                queue.push_back(e);
            } else {
                dist[e] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(e) = queue.pop_front() {
            for &t in b.neighbors(e) {
                let m = match_r[t];
                if m == FREE {
                    found = true;
                } else if dist[m] == usize::MAX {
                    dist[m] = dist[e] + 1;
                    queue.push_back(m);
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; nl];
        for e in 0..nl {
            if match_l[e] == FREE {
                augment(b, e, &mut match_l, &mut match_r, &mut dist, &mut next);
            }
        }
    }

    Matching {
        pairs: (0..nl)
            .filter(|&e| match_l[e] != FREE)
            .map(|e| (e, match_l[e]))
            .collect(),
    }
}

/// Layered DFS from `start`, iterative so long alternating paths cannot
/// overflow the stack.
fn augment(
    b: &IncidenceGraph,
    start: usize,
    match_l: &mut [usize],
    match_r: &mut [usize],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    let mut stack = vec![start];
    // Slot chosen at each stack level.
    let mut via: Vec<usize> = Vec::new();
    while let Some(&e) = stack.last() {
        let nbrs = b.neighbors(e);
        if next[e] == nbrs.len() {
            dist[e] = usize::MAX;
            stack.pop();
            via.pop();
            continue;
        }
        let t = nbrs[next[e]];
        next[e] += 1;
        let m = match_r[t];
        if m == FREE {
            via.push(t);
            for (&l, &r) in stack.iter().zip(&via) {
                match_l[l] = r;
                match_r[r] = l;
            }
            return true;
        }
        if dist[m] == dist[e] + 1 {
            via.push(t);
            stack.push(m);
        }
    }
    false
}

/// Whether an augmenting path exists for `m`; a matching is maximum iff
/// this returns false.
pub fn has_augmenting_path(b: &IncidenceGraph, m: &Matching) -> bool {
    let mut match_l = vec![FREE; b.left_len()];
    let mut match_r = vec![FREE; b.slots() + 1];
    for &(e, t) in &m.pairs {
        match_l[e] = t;
        match_r[t] = e;
    }
    let mut seen = vec![false; b.left_len()];
    let mut queue: VecDeque<usize> = (0..b.left_len()).filter(|&e| match_l[e] == FREE).collect();
    for &e in &queue {
        seen[e] = true;
    }
    while let Some(e) = queue.pop_front() {
        for &t in b.neighbors(e) {
            if match_l[e] == t {
                continue;
            }
            match match_r[t] {
                FREE => return true,
                m if !seen[m] => {
                    seen[m] = true;
                    queue.push_back(m);
                }
                _ => {}
            }
        }
    }
    false
}

/// Kernel output: the reduced graph and the kept original slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub graph: TemporalGraph,
    pub slots: Vec<usize>,
}

/// Restricts `g` to at most `m` slots preserving every Temporal Coloring
/// answer for `k >= 2`. Graphs with `T <= m` are returned unchanged.
pub fn kernelize(g: &TemporalGraph) -> Kernel {
    let m = g.edge_count();
    if g.lifetime() <= m {
        return Kernel {
            graph: g.clone(),
            slots: (1..=g.lifetime()).collect(),
        };
    }
    if m == 0 {
        // Nothing to color: the empty slot set leaves a lifetime-0 graph.
        return Kernel {
            graph: TemporalGraph::new(g.n(), 0, std::iter::empty()).expect("edgeless graph"),
            slots: Vec::new(),
        };
    }
    let b = IncidenceGraph::from_graph(g);
    let slots = max_matching(&b).slots();
    let graph = g.restrict(&slots).expect("matched slots are valid");
    Kernel { graph, slots }
}
