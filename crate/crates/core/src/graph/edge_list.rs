//! Plain edge lists: one `u v` pair per line, 0-based, with an optional
//! leading `n <count>` line. Blank lines and `#` comments are ignored;
//! repeated edges collapse.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

pub(super) fn parse(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut seen_edge = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |reason: String| Error::EdgeList { line: line_no, reason };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if seen_edge || declared.is_some() {
                return Err(err("`n` line must come first".into()));
            }
            let [_, count] = fields[..] else {
                return Err(err("expected `n <count>`".into()));
            };
            let count = parse_id(count).map_err(err)?;
            if count > MAX_VERTICES {
                return Err(Error::TooManyVertices(count));
            }
            declared = Some(count);
            continue;
        }
        let [u, v] = fields[..] else {
            return Err(err(format!("expected two vertex ids, found `{line}`")));
        };
        let (u, v) = (parse_id(u).map_err(err)?, parse_id(v).map_err(err)?);
        if u == v {
            return Err(err(format!("loop at vertex {u}")));
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(err(format!("vertex {} exceeds declared order {n}", u.max(v))));
            }
        }
        seen_edge = true;
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Graph::from_edges(n, &edges)
}

fn parse_id(field: &str) -> std::result::Result<usize, String> {
    if field.starts_with('-') {
        return Err(format!("negative vertex id `{field}`"));
    }
    field
        .parse()
        .map_err(|_| format!("`{field}` is not a vertex id"))
}

pub(super) fn emit(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
