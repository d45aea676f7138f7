//! graph6: a size prefix, then the upper triangle of the adjacency matrix
//! in column order ((0,1), (0,2), (1,2), (0,3), ...) packed six bits per
//! byte, each byte offset by 63.

use crate::graph::Graph;

use super::ParseError;

const MAX_N: usize = (1 << 36) - 1;

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        assert!(n <= MAX_N, "graph6 cannot encode {n} vertices");
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |m: &str| ParseError::Graph6(m.to_string());
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(bad(&format!("byte {b} outside 63..=126")));
    }
    let digits = |from: usize, count: usize| -> Result<usize, ParseError> {
        let part = bytes.get(from..from + count).ok_or_else(|| bad("truncated size"))?;
        Ok(part.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        (digits(1, 3)?, 4)
    } else {
        (digits(2, 6)?, 8)
    };
    let body = &bytes[start..];
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(&format!("expected {} data bytes for n={n}, found {}", bits.div_ceil(6), body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).map_err(|e| bad(&e.to_string()))
}
