//! Graph arguments: `g6:<string>`, a family spec such as `cocktail:6`, or a
//! path to a graph6 / edge-list file.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use symrep::{FamilySpec, Graph, Rational, VertexSet};

pub fn graph(arg: &str) -> Result<Graph> {
    if let Some(g6) = arg.strip_prefix("g6:") {
        return Graph::from_graph6(g6).with_context(|| format!("bad graph6 input {g6:?}"));
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {arg}"))?;
        return from_file_text(&text).with_context(|| format!("cannot parse {arg}"));
    }
    if arg.contains(':') {
        let spec: FamilySpec = arg.parse()?;
        return Ok(spec.generate()?);
    }
    bail!("unknown graph input {arg:?}: expected g6:<graph6>, a family spec like complete:5, or a file path")
}

/// A single whitespace-free line is read as graph6, anything else as an
/// edge list.
fn from_file_text(text: &str) -> Result<Graph> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if let [line] = lines.as_slice() {
        if !line.contains(char::is_whitespace) {
            return Ok(Graph::from_graph6(line)?);
        }
    }
    Ok(Graph::from_edge_list(text)?)
}

/// Comma-separated vertex ids; the empty string is the empty set.
pub fn vertex_set(arg: &str) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    for part in arg.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().map_err(|_| anyhow!("bad vertex id {part:?}"))?;
        if v >= symrep::MAX_VERTICES {
            bail!("vertex {v} out of range");
        }
        set.insert(v);
    }
    Ok(set)
}

/// `p/q` or an integer.
pub fn rational(arg: &str) -> Result<Rational> {
    arg.trim().parse().map_err(|_| anyhow!("bad rational {arg:?}, expected p/q or an integer"))
}

/// `a..b` (inclusive) or a single value.
pub fn range(arg: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| anyhow!("bad range {arg:?}"));
    match arg.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                bail!("empty range {arg:?}");
            }
            Ok(a..=b)
        }
        None => {
            let a = parse(arg)?;
            Ok(a..=a)
        }
    }
}
