//! graph6 encoding: size header, then the upper triangle column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const MAX_LONG: usize = 258_047;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(i, format!("byte {b} outside 63..=126")));
        }
    }
    let (n, header) = match bytes.first() {
        None => return Err(Error::parse(0, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(Error::parse(1, "8-byte size header is not supported"));
            }
            if bytes.len() < 4 {
                return Err(Error::parse(bytes.len(), "truncated long size header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n < 63 {
                return Err(Error::parse(1, format!("long header used for n={n} < 63")));
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < need {
        return Err(Error::parse(
            bytes.len(),
            format!("expected {need} data bytes for n={n}, found {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(Error::parse(header + need, "trailing bytes after adjacency data"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_LONG, "graph6 supports at most {MAX_LONG} vertices");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
