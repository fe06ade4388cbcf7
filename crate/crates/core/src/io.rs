//! Text formats: `.tg` temporal graphs, `.tc` colorings, DIMACS CNF and
//! triple-system files.
//!
//! `.tg`:
//! ```text
//! # comment
//! tg 1
//! <n> <T>
//! <u> <v> <t1> ... <tr>      one line per edge, u < v, labels increasing
//! ```
//! `.tc`:
//! ```text
//! tc 1
//! <n> <T> <k>
//! <c_1> ... <c_n>            T lines, line t is the coloring of slot t
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use log::warn;

use crate::error::{Error, Result};
use crate::graph::{Instance, TemporalColoring, TemporalGraph};
use crate::sat::{CnfFormula, TripleSystem};

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str, comment: char) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !l.starts_with(comment))
}

fn parse_nums(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("expected a non-negative integer, got {tok:?}")))
        })
        .collect()
}

pub fn parse_temporal_graph(text: &str) -> Result<TemporalGraph> {
    let mut lines = content_lines(text, '#');
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `tg 1` header"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["tg", "1"] {
        return Err(Error::parse(hl, format!("malformed header {header:?}, expected `tg 1`")));
    }
    let (sl, sizes) = lines
        .next()
        .ok_or_else(|| Error::parse(hl + 1, "missing `<n> <T>` line"))?;
    let dims = parse_nums(sl, sizes)?;
    let [n, lifetime] = dims[..] else {
        return Err(Error::parse(sl, "expected `<n> <T>`"));
    };

    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let nums = parse_nums(ln, line)?;
        if nums.len() < 2 {
            return Err(Error::parse(ln, "edge line needs `<u> <v> <labels...>`"));
        }
        let (u, v) = (nums[0], nums[1]);
        if u >= n || v >= n {
            return Err(Error::parse(ln, format!("vertex index out of range for n={n}")));
        }
        if u >= v {
            return Err(Error::parse(ln, format!("expected u < v, got {u} {v}")));
        }
        let labels = nums[2..].to_vec();
        if labels.is_empty() {
            return Err(Error::parse(ln, format!("edge {u} {v} has an empty label list")));
        }
        if let Some(&t) = labels.iter().find(|&&t| t == 0 || t > lifetime) {
            return Err(Error::parse(ln, format!("label {t} outside [1, {lifetime}]")));
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(ln, "labels must be strictly increasing"));
        }
        if !seen.insert((u, v)) {
            return Err(Error::parse(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v, labels));
    }
    let g = TemporalGraph::new(n, lifetime, edges)?;
    if !g.is_tight() {
        warn!(
            "declared lifetime {} exceeds the largest label {}",
            g.lifetime(),
            g.max_label()
        );
    }
    Ok(g)
}

/// Canonical text: edges by `(u, v)`, labels ascending.
pub fn serialize_temporal_graph(g: &TemporalGraph) -> String {
    let mut s = format!("tg 1\n{} {}\n", g.n(), g.lifetime());
    for e in g.edges() {
        write!(s, "{} {}", e.u, e.v).unwrap();
        for t in &e.labels {
            write!(s, " {t}").unwrap();
        }
        s.push('\n');
    }
    s
}

/// The graph preceded by `# delta` and `# k` comment lines.
pub fn serialize_instance(inst: &Instance) -> String {
    format!(
        "# delta {}\n# k {}\n{}",
        inst.delta,
        inst.k,
        serialize_temporal_graph(&inst.graph)
    )
}

/// Reads `# delta <D>` / `# k <K>` comments written by [`serialize_instance`].
pub fn instance_hints(text: &str) -> (Option<usize>, Option<u32>) {
    let mut delta = None;
    let mut k = None;
    for line in text.lines() {
        let mut it = line.trim().trim_start_matches('#').split_whitespace();
        if !line.trim_start().starts_with('#') {
            continue;
        }
        match (it.next(), it.next()) {
            (Some("delta"), Some(d)) => delta = d.parse().ok(),
            (Some("k"), Some(x)) => k = x.parse().ok(),
            _ => {}
        }
    }
    (delta, k)
}

pub fn parse_coloring(text: &str) -> Result<TemporalColoring> {
    let mut lines = content_lines(text, '#');
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `tc 1` header"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["tc", "1"] {
        return Err(Error::parse(hl, format!("malformed header {header:?}, expected `tc 1`")));
    }
    let (sl, sizes) = lines
        .next()
        .ok_or_else(|| Error::parse(hl + 1, "missing `<n> <T> <k>` line"))?;
    let dims = parse_nums(sl, sizes)?;
    let [n, lifetime, k] = dims[..] else {
        return Err(Error::parse(sl, "expected `<n> <T> <k>`"));
    };
    let k = u32::try_from(k).map_err(|_| Error::parse(sl, "k too large"))?;
    let mut colors = Vec::with_capacity(n * lifetime);
    let mut rows = 0;
    // With n = 0 the rows are empty lines, which content_lines skips.
    if n > 0 {
        for (ln, line) in lines {
            rows += 1;
            if rows > lifetime {
                return Err(Error::parse(ln, format!("more than T={lifetime} rows")));
            }
            let row = parse_nums(ln, line)?;
            if row.len() != n {
                return Err(Error::parse(ln, format!("expected {n} colors, got {}", row.len())));
            }
            for c in row {
                if c == 0 || c > k as usize {
                    return Err(Error::parse(ln, format!("color {c} outside [1, {k}]")));
                }
                colors.push(c as u32);
            }
        }
        if rows != lifetime {
            return Err(Error::parse(sl, format!("expected {lifetime} rows, got {rows}")));
        }
    }
    TemporalColoring::new(n, lifetime, k, colors)
}

pub fn serialize_coloring(col: &TemporalColoring) -> String {
    let mut s = format!("tc 1\n{} {} {}\n", col.n(), col.lifetime(), col.k());
    for row in col.rows() {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

/// DIMACS CNF: `c` comments, a `p cnf <vars> <clauses>` line, clauses as
/// literal lists terminated by `0` (possibly spanning lines).
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    let mut last_line = 0;
    for (ln, line) in content_lines(text, 'c') {
        last_line = ln;
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts[..] {
                ["p", "cnf", v, c] if header.is_none() => {
                    let v = v.parse().map_err(|_| Error::parse(ln, "bad variable count"))?;
                    let c = c.parse().map_err(|_| Error::parse(ln, "bad clause count"))?;
                    header = Some((v, c));
                }
                _ => return Err(Error::parse(ln, format!("malformed problem line {line:?}"))),
            }
            continue;
        }
        let (vars, _) = header.ok_or_else(|| Error::parse(ln, "clause before `p cnf` line"))?;
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::parse(ln, format!("bad literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > vars {
                return Err(Error::parse(ln, format!("literal {lit} exceeds {vars} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let (vars, count) = header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p cnf` line"))?;
    if !current.is_empty() {
        return Err(Error::parse(last_line, "last clause not terminated by 0"));
    }
    if clauses.len() != count {
        return Err(Error::parse(
            last_line.max(1),
            format!("header declares {count} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(vars, clauses)
}

pub fn serialize_dimacs(f: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", f.vars, f.clauses.len());
    for c in &f.clauses {
        for l in c {
            write!(s, "{l} ").unwrap();
        }
        s.push_str("0\n");
    }
    s
}

/// One triple of 1-based variable indices per line; `#` comments. An
/// optional `p triples <vars> <count>` line fixes the variable count,
/// otherwise it is the largest index seen.
pub fn parse_triples(text: &str) -> Result<TripleSystem> {
    let mut declared: Option<(usize, usize)> = None;
    let mut triples = Vec::new();
    for (ln, line) in content_lines(text, '#') {
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts[..] {
                ["p", "triples", v, c] => {
                    let v = v.parse().map_err(|_| Error::parse(ln, "bad variable count"))?;
                    let c = c.parse().map_err(|_| Error::parse(ln, "bad triple count"))?;
                    declared = Some((v, c));
                }
                _ => return Err(Error::parse(ln, format!("malformed problem line {line:?}"))),
            }
            continue;
        }
        let nums = parse_nums(ln, line)?;
        let [a, b, c] = nums[..] else {
            return Err(Error::parse(ln, "expected three variable indices"));
        };
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::parse(ln, "variables are 1-based"));
        }
        if a == b || a == c || b == c {
            return Err(Error::parse(ln, "triple repeats a variable"));
        }
        triples.push([a, b, c]);
    }
    let max = triples.iter().flatten().copied().max().unwrap_or(0);
    let vars = match declared {
        Some((v, c)) => {
            if c != triples.len() {
                return Err(Error::parse(1, format!("declared {c} triples, found {}", triples.len())));
            }
            v
        }
        None => max,
    };
    TripleSystem::new(vars, triples)
}

pub fn serialize_triples(ts: &TripleSystem) -> String {
    let mut s = format!("p triples {} {}\n", ts.vars, ts.triples.len());
    for [a, b, c] in &ts.triples {
        writeln!(s, "{a} {b} {c}").unwrap();
    }
    s
}
