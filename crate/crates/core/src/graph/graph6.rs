//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte
//! (offset 63).

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub(super) fn emit(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub(super) fn parse(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &text.as_bytes()[start..];
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: start + offset,
        reason: reason.to_string(),
    };
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, "byte outside the printable range 63..=126"));
    }
    let (n, body_start) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated size header"));
        }
        if bytes[1] == 126 {
            return Err(Error::TooManyVertices(1 << 18));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 62 {
            return Err(err(0, "long size header used for a small order"));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < need {
        return Err(err(bytes.len(), "truncated adjacency data"));
    }
    if body.len() > need {
        return Err(err(body_start + need, "trailing data after adjacency bits"));
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (body[need - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(err(body_start + need - 1, "nonzero padding bits"));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
