//! Command-line front end.
//!
//! Every command prints exactly one result line on stdout; diagnostics go
//! to stderr. Exit codes: 0 answer, 2 usage or parse error, 3 budget
//! exceeded, 4 I/O failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::approx::approx_coloring_with;
use crate::error::{Error, Result};
use crate::graph::{Instance, TemporalColoring, TemporalGraph};
use crate::io::{
    parse_coloring, parse_dimacs, parse_temporal_graph, parse_triples, serialize_coloring,
    serialize_dimacs, serialize_instance, serialize_temporal_graph, serialize_triples,
};
use crate::kernel::kernelize;
use crate::oracles::{brute_force_decision, brute_force_minimize, sat_bruteforce, Budget};
use crate::reducer::{max_nontrivial_per_window, reduce_snapshots, reduce_snapshots_report, solve_fpt_with, window_bound};
use crate::reductions;
use crate::sat::{CnfFormula, TripleSystem};
use crate::solver::{minimize_with, solve_decision_with, Decision, SolverConfig};
use crate::verifier::is_proper;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "tgcolor", version, about = "Sliding-window temporal graph coloring")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    /// Enumeration cap per window layer.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Cap on overlap states kept between layers.
    #[arg(long)]
    pub max_states: Option<u64>,
    #[arg(long)]
    pub threads: Option<usize>,
    /// Fix vertex 0 to color 1 in the first non-trivial slot.
    #[arg(long)]
    pub symmetry_breaking: bool,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        let d = SolverConfig::default();
        SolverConfig {
            max_enumeration: self.budget.unwrap_or(d.max_enumeration),
            max_states: self.max_states.unwrap_or(d.max_states),
            symmetry_breaking: self.symmetry_breaking,
            threads: self.threads,
            ..d
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a proper coloring with k colors exists.
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Apply the snapshot reduction first.
        #[arg(long)]
        fpt: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Smallest number of colors.
    Minimize {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check a coloring.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(short, long)]
        coloring: PathBuf,
    },
    /// Keep only matched slots (Δ = T).
    Kernelize {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Only used to warn about k = 1.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Replace over-represented snapshots by trivial ones.
    Reduce {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Vertex-cover approximation, at most one color above optimal.
    Approx {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Also decide whether the result is optimal.
        #[arg(long)]
        tighten: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Exhaustive reference deciders.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Instance and formula generators.
    Gen {
        #[command(subcommand)]
        command: GenCommand,
    },
    /// Timing tables (TSV) over fixed instance sets.
    Bench {
        #[arg(value_parser = ["solver-grid", "kernel", "reduce"])]
        suite: String,
        /// Print `-` instead of milliseconds.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Maximum enumerated colorings.
        #[arg(long, default_value_t = Budget::default().max_candidates)]
        budget: u64,
    },
    Minimize {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = Budget::default().max_candidates)]
        budget: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Each (pair, slot) active with probability p.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long = "lifetime", short = 't')]
        lifetime: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Static graph (a `.tg` with T = 1) to a Temporal 2-Coloring instance.
    #[command(name = "from-4col")]
    From4col {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Proper 4-coloring, one color per vertex, to build a witness.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        coloring: Option<Vec<u32>>,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Exact (3,4)-SAT to Temporal 2-Coloring.
    #[command(name = "from-e34sat-tc")]
    FromE34satTc {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact (3,4)-SAT to a T = 3 sliding 2-window instance.
    #[command(name = "from-e34sat-sw")]
    FromE34satSw {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write a coloring from the first satisfying assignment.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Monotone 1-in-3 SAT to a sliding 2-window instance.
    #[command(name = "from-1in3")]
    From1in3 {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// AND-composition of equally sized Exact (3,4)-SAT formulas.
    Compose {
        #[arg(short, long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Random Exact (3,4)-SAT formula in DIMACS form.
    E34sat {
        #[arg(long)]
        vars: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Advance the seed until the formula is satisfiable.
        #[arg(long)]
        satisfiable: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random triple system.
    #[command(name = "1in3")]
    OneInThree {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        triples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

fn read_graph(path: &Path) -> Result<TemporalGraph> {
    parse_temporal_graph(&read(path)?)
}

fn line(out: &mut dyn Write, text: std::fmt::Arguments) -> Result<()> {
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_witness(path: Option<&PathBuf>, col: Option<&TemporalColoring>) -> Result<()> {
    if let (Some(p), Some(c)) = (path, col) {
        write(p, &serialize_coloring(c))?;
    }
    Ok(())
}

/// Writes `text` to `path`, or to stdout when no path is given.
fn emit(output: Option<&PathBuf>, text: &str, summary: String, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(p) => {
            write(p, text)?;
            line(out, format_args!("{summary}"))
        }
        None => {
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn instance_summary(inst: &Instance) -> String {
    format!(
        "INSTANCE n={} T={} delta={} k={}",
        inst.graph.n(),
        inst.graph.lifetime(),
        inst.delta,
        inst.k
    )
}

fn verdict_word(d: &Decision) -> &'static str {
    if d.is_yes() {
        "YES"
    } else {
        "NO"
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Solve {
            input,
            delta,
            k,
            witness,
            fpt,
            solver,
        } => {
            let inst = Instance::new(read_graph(&input)?, delta, k)?;
            let cfg = solver.config();
            let d = if fpt {
                solve_fpt_with(&inst, &cfg)?
            } else {
                solve_decision_with(&inst, &cfg)?
            };
            write_witness(witness.as_ref(), d.witness())?;
            line(out, format_args!("{}", verdict_word(&d)))?;
        }
        Command::Minimize {
            input,
            delta,
            witness,
            solver,
        } => {
            let g = read_graph(&input)?;
            let (k, w) = minimize_with(&g, delta, &solver.config())?;
            write_witness(witness.as_ref(), Some(&w))?;
            line(out, format_args!("K* {k}"))?;
        }
        Command::Verify {
            input,
            delta,
            coloring,
        } => {
            let g = read_graph(&input)?;
            let col = parse_coloring(&read(&coloring)?)?;
            let inst = Instance::new(g, delta, col.k())?;
            line(out, format_args!("{}", is_proper(&inst, &col)?))?;
        }
        Command::Kernelize { input, output, k } => {
            let g = read_graph(&input)?;
            if k == Some(1) {
                writeln!(
                    err,
                    "warning: the kernel is only answer-preserving for k >= 2; with k = 1 the answer is {}",
                    if g.edge_count() == 0 { "YES" } else { "NO" }
                )?;
            }
            let kernel = kernelize(&g);
            write(&output, &serialize_temporal_graph(&kernel.graph))?;
            let slots: Vec<String> = kernel.slots.iter().map(ToString::to_string).collect();
            line(out, format_args!("S: {}", slots.join(" ")))?;
        }
        Command::Reduce {
            input,
            delta,
            output,
        } => {
            let inst = Instance::new(read_graph(&input)?, delta, 2)?;
            let r = reduce_snapshots_report(&inst);
            write(&output, &serialize_temporal_graph(&r.instance.graph))?;
            let mut slots: Vec<usize> = r.replaced.iter().map(|x| x.slot).collect();
            slots.sort_unstable();
            let slots: Vec<String> = slots.iter().map(ToString::to_string).collect();
            line(out, format_args!("REPLACED: {}", slots.join(" ")))?;
        }
        Command::Approx {
            input,
            delta,
            witness,
            tighten,
            solver,
        } => {
            let g = read_graph(&input)?;
            let a = approx_coloring_with(&g, delta, &solver.config(), tighten)?;
            writeln!(err, "cover size {}, k* {}", a.cover.len(), a.k_star)?;
            if let Some(exact) = a.exact {
                writeln!(err, "optimal: {}", if exact { "yes" } else { "no, k* colors suffice" })?;
            }
            write_witness(witness.as_ref(), Some(&a.coloring))?;
            line(out, format_args!("K_OUT {}", a.k_out))?;
        }
        Command::Oracle { command } => match command {
            OracleCommand::Solve {
                input,
                delta,
                k,
                witness,
                budget,
            } => {
                let inst = Instance::new(read_graph(&input)?, delta, k)?;
                let d = brute_force_decision(&inst, &Budget::candidates(budget))?;
                write_witness(witness.as_ref(), d.witness())?;
                line(out, format_args!("{}", verdict_word(&d)))?;
            }
            OracleCommand::Minimize {
                input,
                delta,
                budget,
            } => {
                let g = read_graph(&input)?;
                let k = brute_force_minimize(&g, delta, &Budget::candidates(budget))?;
                line(out, format_args!("K* {k}"))?;
            }
        },
        Command::Gen { command } => generate(command, out)?,
        Command::Bench {
            suite,
            no_timing,
            seed,
        } => return bench(&suite, no_timing, seed, out),
    }
    Ok(EXIT_OK)
}

fn generate(cmd: GenCommand, out: &mut dyn Write) -> Result<()> {
    match cmd {
        GenCommand::Random {
            n,
            lifetime,
            p,
            seed,
            output,
        } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidInstance(format!("p = {p} outside [0, 1]")));
            }
            let g = reductions::random_instance(n, lifetime, p, seed);
            let summary = format!("GRAPH n={} T={} m={}", g.n(), g.lifetime(), g.edge_count());
            emit(output.as_ref(), &serialize_temporal_graph(&g), summary, out)
        }
        GenCommand::From4col {
            input,
            output,
            coloring,
            witness,
        } => {
            let g = read_graph(&input)?;
            let edges = g.underlying_edges();
            let inst = reductions::from_4coloring(g.n(), &edges)?;
            if let Some(phi) = coloring {
                let w = reductions::witness_from_4coloring(g.n(), &edges, &phi)?;
                write_witness(witness.as_ref(), Some(&w))?;
            }
            emit(output.as_ref(), &serialize_instance(&inst), instance_summary(&inst), out)
        }
        GenCommand::FromE34satTc { input, output } => {
            let f = parse_dimacs(&read(&input)?)?;
            let inst = reductions::from_exact34sat_tc(&f)?;
            emit(output.as_ref(), &serialize_instance(&inst), instance_summary(&inst), out)
        }
        GenCommand::FromE34satSw {
            input,
            output,
            witness,
        } => {
            let f = parse_dimacs(&read(&input)?)?;
            let inst = reductions::from_exact34sat_sw(&f)?;
            if witness.is_some() {
                let a = sat_bruteforce(&f)?
                    .ok_or_else(|| Error::Unsatisfied("formula is unsatisfiable".into()))?;
                let w = reductions::witness_from_assignment(&f, &a)?;
                write_witness(witness.as_ref(), Some(&w))?;
            }
            emit(output.as_ref(), &serialize_instance(&inst), instance_summary(&inst), out)
        }
        GenCommand::From1in3 { input, output } => {
            let ts = parse_triples(&read(&input)?)?;
            let inst = reductions::from_1in3sat(&ts)?;
            emit(output.as_ref(), &serialize_instance(&inst), instance_summary(&inst), out)
        }
        GenCommand::Compose {
            input,
            output,
            witness,
        } => {
            let fs = input
                .iter()
                .map(|p| parse_dimacs(&read(p)?))
                .collect::<Result<Vec<CnfFormula>>>()?;
            let inst = reductions::compose_and(&fs)?;
            if witness.is_some() {
                let assignments = fs
                    .iter()
                    .enumerate()
                    .map(|(i, f)| {
                        sat_bruteforce(f)?.ok_or_else(|| {
                            Error::Unsatisfied(format!("formula {} is unsatisfiable", i + 1))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let w = reductions::witness_for_composition(&fs, &assignments)?;
                write_witness(witness.as_ref(), Some(&w))?;
            }
            emit(output.as_ref(), &serialize_instance(&inst), instance_summary(&inst), out)
        }
        GenCommand::E34sat {
            vars,
            seed,
            satisfiable,
            output,
        } => {
            let mut s = seed;
            let f = loop {
                let f = CnfFormula::random_exact34(vars, s)?;
                if !satisfiable || sat_bruteforce(&f)?.is_some() {
                    break f;
                }
                s += 1;
            };
            let summary = format!("CNF vars={} clauses={} seed={s}", f.vars, f.clause_count());
            emit(output.as_ref(), &serialize_dimacs(&f), summary, out)
        }
        GenCommand::OneInThree {
            vars,
            triples,
            seed,
            output,
        } => {
            let ts = TripleSystem::random(vars, triples, seed)?;
            let summary = format!("TRIPLES vars={} triples={}", ts.vars, ts.triples.len());
            emit(output.as_ref(), &serialize_triples(&ts), summary, out)
        }
    }
}

fn millis(start: Instant, no_timing: bool) -> String {
    if no_timing {
        "-".into()
    } else {
        start.elapsed().as_millis().to_string()
    }
}

/// Runs one bench suite. Cells that run out of budget are marked `BUDGET`
/// and the run continues; the exit code is then 3.
fn bench(suite: &str, no_timing: bool, seed: u64, out: &mut dyn Write) -> Result<i32> {
    let mut exhausted = false;
    match suite {
        "solver-grid" => {
            writeln!(out, "instance\tn\tT\tdelta\tk\tverdict\tmillis")?;
            for n in 1..=3 {
                for lifetime in 1..=4 {
                    for rep in 0..3u64 {
                        let s = seed.wrapping_add(100 * n as u64 + 10 * lifetime as u64 + rep);
                        let g = reductions::random_instance(n, lifetime, 0.5, s);
                        for delta in 1..=lifetime {
                            for k in 1..=3 {
                                let inst = Instance::new(g.clone(), delta, k)?;
                                let start = Instant::now();
                                let verdict = match solve_decision_with(&inst, &SolverConfig::default()) {
                                    Ok(d) => verdict_word(&d).to_string(),
                                    Err(e) if e.is_budget() => {
                                        exhausted = true;
                                        "BUDGET".into()
                                    }
                                    Err(e) => return Err(e),
                                };
                                writeln!(
                                    out,
                                    "grid-n{n}-T{lifetime}-r{rep}\t{n}\t{lifetime}\t{delta}\t{k}\t{verdict}\t{}",
                                    millis(start, no_timing)
                                )?;
                            }
                        }
                    }
                }
            }
        }
        "kernel" => {
            writeln!(out, "instance\tn\tT\tm\tT_kernel\tslots_le_m\tmillis")?;
            for i in 0..20u64 {
                let n = 2 + (i % 4) as usize;
                let lifetime = 4 + (i % 9) as usize;
                let p = if i % 2 == 0 { 0.2 } else { 0.5 };
                let g = reductions::random_instance(n, lifetime, p, seed.wrapping_add(i));
                let start = Instant::now();
                let kernel = kernelize(&g);
                let ok = kernel.slots.len() <= g.edge_count()
                    && kernel.graph.lifetime() <= g.lifetime().min(g.edge_count());
                writeln!(
                    out,
                    "kernel-{i}\t{n}\t{lifetime}\t{}\t{}\t{ok}\t{}",
                    g.edge_count(),
                    kernel.graph.lifetime(),
                    millis(start, no_timing)
                )?;
            }
        }
        "reduce" => {
            writeln!(out, "instance\tn\tT\tdelta\tmax_nontrivial\tbound\twithin_bound\tmillis")?;
            for (i, &(n, lifetime)) in [(2, 50), (2, 200), (3, 100), (3, 400)].iter().enumerate() {
                let g = TemporalGraph::new(n, lifetime, [(0, 1, (1..=lifetime).collect())])?;
                for delta in [lifetime / 4, lifetime] {
                    let inst = Instance::new(g.clone(), delta.max(1), 2)?;
                    let start = Instant::now();
                    let reduced = reduce_snapshots(&inst);
                    let count = max_nontrivial_per_window(&reduced.graph, inst.delta);
                    let bound = window_bound(n);
                    writeln!(
                        out,
                        "reduce-{i}\t{n}\t{lifetime}\t{}\t{count}\t{bound}\t{}\t{}",
                        inst.delta,
                        count as u128 <= bound,
                        millis(start, no_timing)
                    )?;
                }
            }
        }
        other => {
            return Err(Error::InvalidInstance(format!("unknown bench suite {other}")));
        }
    }
    Ok(if exhausted { EXIT_BUDGET } else { EXIT_OK })
}
