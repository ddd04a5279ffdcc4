//! graph6 text encoding.
//!
//! A size prefix (one byte `n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit groups) is followed by the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian six bits per byte, zero padded, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
/// Largest order expressible with the four-byte size prefix.
pub const MAX_ORDER: usize = 258_047;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 encoding supports n <= {MAX_ORDER}");
    let mut out = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {:#04x} at offset {pos} outside [63, 126]",
            bytes[pos]
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => {
            return Err(Error::Graph6(format!(
                "eight-byte size prefix not supported (n > {MAX_ORDER})"
            )))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size prefix".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
            if n <= MAX_SHORT {
                return Err(Error::Graph6(format!(
                    "non-canonical long size prefix for n = {n}"
                )));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - BIAS), rest),
    };
    if n == 0 {
        return Err(Error::Graph6("graph has no vertices".into()));
    }
    let bits = n * (n - 1) / 2;
    let groups = bits.div_ceil(6);
    if body.len() < groups {
        return Err(Error::Graph6(format!(
            "expected {groups} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    if body.len() > groups {
        return Err(Error::Graph6(format!(
            "trailing garbage: {} bytes after the adjacency data",
            body.len() - groups
        )));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let pad = groups * 6 - bits;
    if pad > 0 && (body[groups - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
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
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_k4() {
        // K3: bits 111 + 000 padding = 56; 56 + 63 = 'w'
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
        // K4: six bits set, 63 + 63 = '~'
        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn single_vertex_and_edge() {
        assert_eq!(to_graph6(&Graph::complete(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(from_graph6("A?").unwrap(), Graph::empty(2).unwrap());
    }

    #[test]
    fn petgraph_reference_string() {
        // edges a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn long_size_prefix() {
        let g = Graph::cycle(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("?").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("B\x7f").is_err());
        assert!(from_graph6("B ").is_err());
        assert!(from_graph6("Bx").is_err()); // padding bit set
        assert!(from_graph6("~~??????").is_err());
        assert!(from_graph6("~??B").is_err()); // long prefix for n = 3
        assert!(from_graph6("~?").is_err());
    }
}
