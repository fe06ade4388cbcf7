//! The worked examples, one test per operation.

use tgcolor::approx::{approx_coloring, approx_coloring_with, min_vertex_cover};
use tgcolor::graph::WindowRange;
use tgcolor::io::{parse_temporal_graph, serialize_temporal_graph};
use tgcolor::kernel::{has_augmenting_path, kernelize, max_matching, IncidenceGraph};
use tgcolor::oracles::{
    brute_force_decision, brute_force_minimize, chromatic_at_most, one_in_three_bruteforce,
    sat_bruteforce, temporal_coloring_dp, Budget,
};
use tgcolor::reducer::{
    max_nontrivial_per_window, reduce_snapshots, reduce_snapshots_report, solve_fpt, window_bound,
};
use tgcolor::reductions::{
    compose_and, from_1in3sat, from_4coloring, from_exact34sat_sw, from_exact34sat_tc,
    max_degree, max_snapshot_component, random_instance, witness_for_composition,
    witness_from_4coloring, witness_from_assignment, OneInThreeLayout, TemporalLayout,
};
use tgcolor::sat::{CnfFormula, TripleSystem};
use tgcolor::solver::{enumerate_window_colorings, minimize, solve_decision, SolverConfig};
use tgcolor::verifier::coloring_size;
use tgcolor::{is_proper, Error, Instance, TemporalColoring, TemporalGraph, Verdict, VertexPair, Violation};

fn graph(n: usize, lifetime: usize, edges: &[(usize, usize, &[usize])]) -> TemporalGraph {
    TemporalGraph::new(n, lifetime, edges.iter().map(|&(u, v, l)| (u, v, l.to_vec()))).unwrap()
}

fn triangle(slots: &[usize], lifetime: usize) -> TemporalGraph {
    graph(3, lifetime, &[(0, 1, slots), (0, 2, slots), (1, 2, slots)])
}

fn decide(g: &TemporalGraph, delta: usize, k: u32) -> bool {
    solve_decision(&Instance::new(g.clone(), delta, k).unwrap()).unwrap().is_yes()
}

fn proper(g: &TemporalGraph, delta: usize, col: &TemporalColoring) -> Verdict {
    is_proper(&Instance::new(g.clone(), delta, col.k()).unwrap(), col).unwrap()
}

// tg-core

#[test]
fn snapshot_edges_examples() {
    let g = graph(2, 1, &[(0, 1, &[1])]);
    assert_eq!(g.snapshot_edges(1).unwrap(), vec![(0, 1)]);

    let g = graph(3, 2, &[(0, 1, &[1]), (1, 2, &[2])]);
    assert_eq!(g.snapshot_edges(2).unwrap(), vec![(1, 2)]);

    let g = graph(3, 4, &[]);
    for t in 1..=4 {
        assert!(g.snapshot_edges(t).unwrap().is_empty());
        assert!(g.is_trivial(t));
    }
    assert!(matches!(g.snapshot_edges(5), Err(Error::SlotOutOfRange { .. })));
}

#[test]
fn window_edges_examples() {
    let g = graph(4, 3, &[(0, 1, &[1]), (2, 3, &[3])]);
    assert_eq!(g.window_edges(1, 2).unwrap(), vec![(0, 1)]);
    assert_eq!(g.window_edges(2, 2).unwrap(), vec![(2, 3)]);

    let g = graph(4, 2, &[(0, 1, &[1]), (2, 3, &[2])]);
    assert_eq!(g.window_edges(1, 2).unwrap(), vec![(0, 1), (2, 3)]);
    assert!(g.window_edges(2, 2).is_err());
}

#[test]
fn restrict_examples() {
    let g = graph(2, 5, &[(0, 1, &[1, 3, 5])]);
    let r = g.restrict(&[3, 5]).unwrap();
    assert_eq!(r.lifetime(), 2);
    assert_eq!(r.edges()[0].labels, vec![1, 2]);

    let g = graph(2, 2, &[(0, 1, &[2])]);
    assert_eq!(g.restrict(&[1]).unwrap().edge_count(), 0);

    let g = triangle(&[1, 3], 4);
    assert_eq!(g.restrict(&[1, 2, 3, 4]).unwrap(), g);
    assert!(matches!(g.restrict(&[]), Err(Error::EmptySlotSet)));
}

#[test]
fn lift_delta_examples() {
    let g = graph(2, 4, &[(0, 1, &[1, 2, 3, 4])]);
    let l = g.lift_delta(2).unwrap();
    assert_eq!(l.lifetime(), 6);
    assert_eq!(l.edges()[0].labels, vec![1, 2, 4, 5]);
    assert!(l.is_trivial(3) && l.is_trivial(6));

    let g = graph(2, 2, &[(0, 1, &[1, 2])]);
    let l = g.lift_delta(2).unwrap();
    assert_eq!(l.lifetime(), 3);
    assert!(l.is_trivial(3));

    let tri = triangle(&[1, 2], 2);
    let b = Budget::default();
    let before = brute_force_decision(&Instance::new(tri.clone(), 2, 2).unwrap(), &b).unwrap();
    let lifted = tri.lift_delta(2).unwrap();
    let after = brute_force_decision(&Instance::new(lifted, 3, 2).unwrap(), &b).unwrap();
    assert!(before.is_yes() && after.is_yes());
}

#[test]
fn tg_format_examples() {
    let text = "tg 1\n2 1\n0 1 1\n";
    let g = parse_temporal_graph(text).unwrap();
    assert_eq!((g.n(), g.lifetime(), g.edge_count()), (2, 1, 1));
    assert_eq!(serialize_temporal_graph(&g), text);

    match parse_temporal_graph("tg 1\n2 1\n0 1 1\n0 1 1\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected parse error, got {other:?}"),
    }
}

// verifier

#[test]
fn is_proper_examples() {
    let g = graph(2, 1, &[(0, 1, &[1])]);
    let ok = TemporalColoring::from_rows(2, &[vec![1, 2]]).unwrap();
    assert_eq!(proper(&g, 1, &ok), Verdict::Proper);
    let bad = TemporalColoring::from_rows(2, &[vec![1, 1]]).unwrap();
    assert_eq!(
        proper(&g, 1, &bad),
        Verdict::Violation(Violation { t: 1, u: 0, v: 1 })
    );

    let tri = triangle(&[1, 2], 2);
    let col = TemporalColoring::from_rows(2, &[vec![1, 1, 2], vec![1, 2, 2]]).unwrap();
    assert!(proper(&tri, 2, &col).is_proper());
}

#[test]
fn coloring_size_examples() {
    let c = TemporalColoring::uniform(3, 2, 3);
    assert_eq!(coloring_size(&c), 1);
    let c = TemporalColoring::from_rows(3, &[vec![1, 2], vec![2, 1]]).unwrap();
    assert_eq!(coloring_size(&c), 2);
    let c = TemporalColoring::from_rows(3, &[vec![1, 2], vec![3, 3]]).unwrap();
    assert_eq!(coloring_size(&c), 3);
}

// kernelizer

#[test]
fn max_matching_examples() {
    let one = IncidenceGraph::new(5, vec![vec![1, 2, 3, 4, 5]]);
    assert_eq!(max_matching(&one).len(), 1);

    let shared = IncidenceGraph::new(1, vec![vec![1], vec![1]]);
    assert_eq!(max_matching(&shared).len(), 1);

    let b = IncidenceGraph::new(2, vec![vec![1, 2], vec![2]]);
    let m = max_matching(&b);
    assert_eq!(m.len(), 2);
    assert!(m.is_valid_for(&b));
    assert!(!has_augmenting_path(&b, &m));
    assert_eq!(m.pairs, vec![(0, 1), (1, 2)]);
}

#[test]
fn kernelize_examples() {
    let g = graph(2, 5, &[(0, 1, &[1, 2, 3, 4, 5])]);
    let k = kernelize(&g);
    assert_eq!((k.graph.lifetime(), k.slots.len()), (1, 1));

    let tri = triangle(&[1], 1);
    let k = kernelize(&tri);
    assert_eq!(k.graph, tri);
    assert_eq!(k.slots, vec![1]);

    let g = graph(4, 3, &[(0, 1, &[1]), (2, 3, &[2])]);
    let k = kernelize(&g);
    assert_eq!(k.slots, vec![1, 2]);
    assert_eq!(k.graph.lifetime(), 2);
}

// window-solver

#[test]
fn enumerate_examples() {
    let cfg = SolverConfig::default();
    let empty = graph(1, 3, &[]);
    let r = WindowRange::new(1, 3, 3).unwrap();
    assert_eq!(enumerate_window_colorings(&empty, r, 2, 2, &cfg).unwrap().len(), 1);

    let edge = graph(2, 2, &[(0, 1, &[1, 2])]);
    let r = WindowRange::new(1, 2, 2).unwrap();
    assert_eq!(enumerate_window_colorings(&edge, r, 2, 2, &cfg).unwrap().len(), 12);

    let tri = triangle(&[1, 2], 2);
    assert!(enumerate_window_colorings(&tri, r, 2, 1, &cfg).unwrap().is_empty());
}

#[test]
fn solve_decision_examples() {
    let tri = triangle(&[1, 2], 2);
    let d = solve_decision(&Instance::new(tri.clone(), 2, 2).unwrap()).unwrap();
    assert!(proper(&tri, 2, d.witness().unwrap()).is_proper());

    let once = triangle(&[1], 1);
    assert!(!decide(&once, 1, 2));
    assert!(decide(&once, 1, 3));

    assert!(!decide(&tri, 1, 2));
}

#[test]
fn minimize_examples() {
    assert_eq!(minimize(&graph(3, 2, &[]), 1).unwrap().0, 1);
    let (k, w) = minimize(&triangle(&[1, 2], 2), 2).unwrap();
    assert_eq!(k, 2);
    assert!(proper(&triangle(&[1, 2], 2), 2, &w).is_proper());
    assert_eq!(minimize(&triangle(&[1], 1), 1).unwrap().0, 3);
}

// snapshot-reducer

fn single_edge(lifetime: usize) -> TemporalGraph {
    graph(2, lifetime, &[(0, 1, &(1..=lifetime).collect::<Vec<_>>())])
}

#[test]
fn reduce_snapshots_examples() {
    for delta in [1, 4, 8, 16] {
        let inst = Instance::new(single_edge(16), delta, 2).unwrap();
        let r = reduce_snapshots_report(&inst);
        if delta <= 8 {
            assert!(r.replaced.is_empty());
            assert_eq!(r.instance, inst);
        }
        assert!(max_nontrivial_per_window(&r.instance.graph, delta) as u128 <= window_bound(2));
    }

    let inst = Instance::new(single_edge(200), 200, 2).unwrap();
    let red = reduce_snapshots(&inst);
    assert!(max_nontrivial_per_window(&red.graph, 200) <= 16);
    assert!(solve_decision(&inst).unwrap().is_yes());
    assert!(solve_decision(&red).unwrap().is_yes());

    // Two distinct snapshots alternating, four copies each per window.
    let a: Vec<usize> = (1..=16).step_by(2).collect();
    let b: Vec<usize> = (2..=16).step_by(2).collect();
    let g = graph(3, 16, &[(0, 1, &a), (1, 2, &b)]);
    let inst = Instance::new(g, 16, 2).unwrap();
    assert_eq!(reduce_snapshots(&inst), inst);
}

#[test]
fn solve_fpt_examples() {
    let tri = Instance::new(triangle(&[1, 2], 2), 2, 2).unwrap();
    assert_eq!(solve_fpt(&tri).unwrap().is_yes(), solve_decision(&tri).unwrap().is_yes());

    let yes = Instance::new(single_edge(200), 200, 2).unwrap();
    let d = solve_fpt(&yes).unwrap();
    assert!(d.is_yes());
    assert!(is_proper(&yes, d.witness().unwrap()).unwrap().is_proper());

    let no = Instance::new(single_edge(200), 200, 1).unwrap();
    assert!(!solve_fpt(&no).unwrap().is_yes());
}

// vc-approx

#[test]
fn min_vertex_cover_examples() {
    assert_eq!(min_vertex_cover(3, &[(0, 1), (0, 2), (1, 2)]).0, vec![0, 1]);
    assert_eq!(min_vertex_cover(4, &[(0, 1), (0, 2), (0, 3)]).0, vec![0]);
    assert!(min_vertex_cover(4, &[]).is_empty());
}

#[test]
fn approx_examples() {
    let a = approx_coloring(&graph(3, 2, &[]), 1).unwrap();
    assert_eq!(a.k_out, 1);
    assert_eq!(a.coloring, TemporalColoring::uniform(3, 2, 1));

    let star = graph(4, 2, &[(0, 1, &[1, 2]), (0, 2, &[1, 2]), (0, 3, &[1, 2])]);
    let a = approx_coloring(&star, 2).unwrap();
    assert_eq!((a.cover.0.clone(), a.k_star, a.k_out), (vec![0], 1, 2));
    assert_eq!(brute_force_minimize(&star, 2, &Budget::default()).unwrap(), 2);
    assert!(proper(&star, 2, &a.coloring).is_proper());

    let tri = triangle(&[1, 2], 2);
    let a = approx_coloring_with(&tri, 2, &SolverConfig::default(), true).unwrap();
    assert_eq!((a.cover.len(), a.k_star, a.k_out), (2, 2, 3));
    assert_eq!(a.exact, Some(false));
    assert_eq!(brute_force_minimize(&tri, 2, &Budget::default()).unwrap(), 2);
}

// oracles

#[test]
fn brute_force_examples() {
    let b = Budget::default();
    let tri = triangle(&[1, 2], 2);
    let d = brute_force_decision(&Instance::new(tri.clone(), 2, 2).unwrap(), &b).unwrap();
    let first = TemporalColoring::from_rows(2, &[vec![1, 1, 2], vec![1, 2, 1]]).unwrap();
    assert_eq!(d.witness(), Some(&first));
    assert!(!brute_force_decision(&Instance::new(tri.clone(), 2, 1).unwrap(), &b)
        .unwrap()
        .is_yes());
    for (delta, k) in [(1, 1), (2, 1), (3, 2)] {
        let e = Instance::new(graph(3, 3, &[]), delta, k).unwrap();
        assert!(brute_force_decision(&e, &b).unwrap().is_yes());
    }

    assert_eq!(brute_force_minimize(&graph(2, 1, &[]), 1, &b).unwrap(), 1);
    assert_eq!(brute_force_minimize(&tri, 2, &b).unwrap(), 2);
    assert_eq!(brute_force_minimize(&triangle(&[1], 1), 1, &b).unwrap(), 3);
}

#[test]
fn temporal_coloring_dp_examples() {
    let b = Budget::default();
    let spread = graph(3, 3, &[(0, 1, &[1]), (0, 2, &[2]), (1, 2, &[3])]);
    assert!(temporal_coloring_dp(&spread, 2, &b).unwrap());
    assert!(!temporal_coloring_dp(&triangle(&[1], 1), 2, &b).unwrap());
    let p3 = graph(3, 1, &[(0, 1, &[1]), (1, 2, &[1])]);
    assert!(temporal_coloring_dp(&p3, 2, &b).unwrap());
}

#[test]
fn sat_bruteforce_examples() {
    let f = CnfFormula::new(
        3,
        vec![vec![1, 2, 3], vec![-1, 2, 3], vec![1, -2, -3], vec![-1, -2, -3]],
    )
    .unwrap();
    let a = sat_bruteforce(&f).unwrap().unwrap();
    assert!(f.is_satisfied_by(&a));
    assert!(f.is_satisfied_by(&[true, true, false]));

    let single = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
    assert!(sat_bruteforce(&single).unwrap().is_some());

    let contra = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
    assert!(sat_bruteforce(&contra).unwrap().is_none());
}

#[test]
fn one_in_three_examples() {
    let ts = TripleSystem::new(3, vec![[1, 2, 3]]).unwrap();
    let a = one_in_three_bruteforce(&ts).unwrap().unwrap();
    assert_eq!(a.iter().filter(|&&x| x).count(), 1);

    let ts = TripleSystem::new(5, vec![[1, 2, 3], [1, 2, 4], [3, 4, 5]]).unwrap();
    let a = one_in_three_bruteforce(&ts).unwrap().unwrap();
    assert!(ts.is_satisfied_by(&a));

    assert!(TripleSystem::new(2, vec![[1, 1, 2]]).is_err());
}

fn complete(n: usize) -> Vec<VertexPair> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn cycle(n: usize) -> Vec<VertexPair> {
    (0..n).map(|i| { let j = (i + 1) % n; (i.min(j), i.max(j)) }).collect()
}

#[test]
fn chromatic_examples() {
    let b = Budget::default();
    assert!(!chromatic_at_most(5, &complete(5), 4, &b).unwrap());
    assert!(chromatic_at_most(5, &cycle(5), 4, &b).unwrap());
    assert!(chromatic_at_most(4, &complete(4), 4, &b).unwrap());
}

// reductions

#[test]
fn from_4coloring_examples() {
    let b = Budget::default();
    let k5 = from_4coloring(5, &complete(5)).unwrap();
    assert_eq!(k5.graph.lifetime(), 2);
    assert!(!temporal_coloring_dp(&k5.graph, 2, &b).unwrap());

    let c5 = from_4coloring(5, &cycle(5)).unwrap();
    assert_eq!(c5.graph.lifetime(), 7);
    assert_eq!((c5.delta, c5.k), (7, 2));
    assert!(temporal_coloring_dp(&c5.graph, 2, &b).unwrap());
}

#[test]
fn witness_from_4coloring_examples() {
    let c5 = cycle(5);
    let inst = from_4coloring(5, &c5).unwrap();
    let w = witness_from_4coloring(5, &c5, &[1, 2, 1, 2, 3]).unwrap();
    assert!(is_proper(&inst, &w).unwrap().is_proper());

    let k2 = [(0, 1)];
    let inst = from_4coloring(2, &k2).unwrap();
    let w = witness_from_4coloring(2, &k2, &[1, 2]).unwrap();
    assert!(is_proper(&inst, &w).unwrap().is_proper());

    assert!(witness_from_4coloring(5, &c5, &[1, 1, 2, 3, 4]).is_err());
}

#[test]
fn from_exact34sat_tc_examples() {
    let f = CnfFormula::random_exact34(3, 7).unwrap();
    let inst = from_exact34sat_tc(&f).unwrap();
    assert_eq!((inst.graph.lifetime(), inst.graph.n()), (11, 35));
    let lay = TemporalLayout::of(&f);
    for x in 1..=3 {
        assert_eq!(inst.graph.snapshot_edges(lay.variable_slot(x)).unwrap().len(), 20);
    }
    for c in 1..=4 {
        let (a, b) = lay.clause_slots(c);
        assert!(inst.graph.snapshot_edges(a).unwrap().len() <= 13);
        assert!(inst.graph.snapshot_edges(b).unwrap().len() <= 13);
    }
}

fn satisfiable_formula(vars: usize, mut seed: u64) -> (CnfFormula, Vec<bool>) {
    loop {
        let f = CnfFormula::random_exact34(vars, seed).unwrap();
        if let Some(a) = sat_bruteforce(&f).unwrap() {
            return (f, a);
        }
        seed += 1;
    }
}

#[test]
fn from_exact34sat_sw_examples() {
    let f = CnfFormula::random_exact34(3, 1).unwrap();
    let inst = from_exact34sat_sw(&f).unwrap();
    assert_eq!((inst.graph.n(), inst.graph.lifetime()), (87, 3));
    assert_eq!((inst.delta, inst.k), (2, 2));
    assert!(max_degree(&inst.graph) <= 7);
    assert!(max_snapshot_component(&inst.graph) <= 25);
}

fn all_satisfying(f: &CnfFormula) -> Vec<Vec<bool>> {
    (0..1u32 << f.vars)
        .map(|bits| (0..f.vars).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|a| f.is_satisfied_by(a))
        .collect()
}

#[test]
fn witness_from_assignment_examples() {
    let (f, a) = satisfiable_formula(3, 0);
    let inst = from_exact34sat_sw(&f).unwrap();
    let w = witness_from_assignment(&f, &a).unwrap();
    assert!(is_proper(&inst, &w).unwrap().is_proper());

    let bad = all_satisfying(&f);
    let unsat = (0..1u32 << 3)
        .map(|bits| (0..3).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
        .find(|x| !bad.contains(x));
    if let Some(x) = unsat {
        assert!(witness_from_assignment(&f, &x).is_err());
    }

    let mut seed = 0;
    let sats = loop {
        let f = CnfFormula::random_exact34(3, seed).unwrap();
        let s = all_satisfying(&f);
        if s.len() >= 2 {
            break (f, s);
        }
        seed += 1;
    };
    let (f, s) = sats;
    let inst = from_exact34sat_sw(&f).unwrap();
    for a in &s[..2] {
        let w = witness_from_assignment(&f, a).unwrap();
        assert!(is_proper(&inst, &w).unwrap().is_proper());
    }
}

#[test]
fn compose_examples() {
    let (f, a) = satisfiable_formula(3, 3);
    let two = vec![f.clone(), f.clone()];
    let inst = compose_and(&two).unwrap();
    assert_eq!(inst.graph.lifetime(), 10);
    let w = witness_for_composition(&two, &[a.clone(), a]).unwrap();
    assert!(is_proper(&inst, &w).unwrap().is_proper());

    let one = compose_and(std::slice::from_ref(&f)).unwrap();
    assert_eq!(one.graph.lifetime(), 5);
    let base = from_exact34sat_sw(&f).unwrap().graph;
    for t in 1..=3 {
        assert_eq!(one.graph.snapshot_edges(t).unwrap(), base.snapshot_edges(t).unwrap());
    }
    for t in [4, 5] {
        assert_eq!(one.graph.snapshot_edges(t).unwrap(), base.snapshot_edges(1).unwrap());
    }

    let small = CnfFormula::random_exact34(3, 0).unwrap();
    let big = CnfFormula::random_exact34(6, 0).unwrap();
    assert!(compose_and(&[small, big]).is_err());
}

#[test]
fn from_1in3sat_examples() {
    let ts = TripleSystem::new(3, vec![[1, 2, 3]]).unwrap();
    let inst = from_1in3sat(&ts).unwrap();
    assert_eq!((inst.graph.lifetime(), inst.graph.n()), (4, 20));
    let lay = OneInThreeLayout::of(&ts);
    let cover = tgcolor::approx::VertexCover(lay.cover());
    assert_eq!(cover.len(), 17);
    assert!(cover.covers(&inst.graph.underlying_edges()));
    let u = |i| lay.u(i);
    for t in 1..=4 {
        let s = inst.graph.snapshot_edges(t).unwrap();
        let odd = matches!(OneInThreeLayout::slot_type(t), 1 | 3);
        for e in [(u(1), u(2)), (u(1), u(3)), (u(2), u(4))] {
            assert_eq!(s.contains(&e), odd);
        }
        assert_eq!(s.contains(&(u(3), u(4))), !odd);
    }
}

#[test]
fn random_instance_examples() {
    assert_eq!(random_instance(4, 3, 0.0, 1).edge_count(), 0);
    let full = random_instance(4, 3, 1.0, 1);
    assert_eq!(full.edge_count(), 6);
    assert!(full.edges().iter().all(|e| e.labels == vec![1, 2, 3]));
    assert_eq!(random_instance(5, 6, 0.4, 9), random_instance(5, 6, 0.4, 9));
}
