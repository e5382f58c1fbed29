//! graph6 records: order byte `63 + n` (n ≤ 62), then the upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed big-endian into 6-bit groups,
//! each offset by 63.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_HEADER: &[u8] = b">>graph6<<";
pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Graph6 { offset: 0, message: format!("order {n} needs the long-form header") });
    }
    let total = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + total.div_ceil(6));
    out.push(63 + n as u8);
    let rows = g.rows();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for &row in &rows[..j] {
            acc = acc << 1 | (row >> j & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses one record. A leading `>>graph6<<` header and a trailing line
/// terminator are accepted; error offsets count from the start of `line`.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let mut base = 0;
    let mut body = line;
    if let Some(rest) = body.strip_prefix(GRAPH6_HEADER) {
        body = rest;
        base = GRAPH6_HEADER.len();
    }
    while let Some((&last, rest)) = body.split_last() {
        if last == b'\n' || last == b'\r' {
            body = rest;
        } else {
            break;
        }
    }
    let err = |offset: usize, message: String| Error::Graph6 { offset: base + offset, message };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte {b} outside 63..=126")));
        }
    }
    let Some((&first, payload)) = body.split_first() else {
        return Err(err(0, "empty record".into()));
    };
    let n = (first - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(err(0, "orders above 62 are not supported".into()));
    }
    if n == 0 {
        return Err(err(0, "graphs need at least one vertex".into()));
    }
    let total = n * (n - 1) / 2;
    let need = total.div_ceil(6);
    if payload.len() < need {
        return Err(err(
            1 + payload.len(),
            format!("truncated: {n} vertices need {need} payload bytes, got {}", payload.len()),
        ));
    }
    if payload.len() > need {
        return Err(err(1 + need, format!("{} trailing bytes after the adjacency payload", payload.len() - need)));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Reads one graph per non-empty line; errors carry 1-based line numbers.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.split(b'\n').enumerate() {
        let line = line?;
        if line.iter().all(u8::is_ascii_whitespace) {
            continue;
        }
        let g = parse_graph6(&line).map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })?;
        out.push(g);
    }
    Ok(out)
}

/// One record per line, LF-terminated.
pub fn write_graph6_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<String> {
    let mut s = String::new();
    for g in graphs {
        s.push_str(&write_graph6(g)?);
        s.push('\n');
    }
    Ok(s)
}
