//! graph6 text format, bit-exact with the published specification.
//!
//! The upper triangle of the adjacency matrix is read column by column
//! (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, …), packed into 6-bit groups
//! padded with zeros, and each group is stored as one printable byte
//! with offset 63. The vertex count precedes the bits: one byte for
//! n <= 62, `~` plus three bytes for n <= 258047, `~~` plus six bytes
//! beyond that.

use super::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MalformedGraph6 {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0} outside the printable graph6 range 63..=126")]
    ByteOutOfRange(u8),
    #[error("truncated graph6 header")]
    TruncatedHeader,
    #[error("graph6 string for {n} vertices needs {expected} data bytes, got {got}")]
    WrongLength { n: usize, expected: usize, got: usize },
    #[error("nonzero padding bits in final data byte")]
    DirtyPadding,
    #[error("graph6 requires at least one vertex")]
    ZeroVertices,
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258047 {
        bytes.push(126);
        push_bignum(&mut bytes, n as u64, 3);
    } else {
        bytes.push(126);
        bytes.push(126);
        push_bignum(&mut bytes, n as u64, 6);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(bytes).unwrap()
}

fn push_bignum(bytes: &mut Vec<u8>, n: u64, groups: u32) {
    for i in (0..groups).rev() {
        bytes.push(63 + (n >> (6 * i) & 0x3f) as u8);
    }
}

pub fn graph6_decode(s: &str) -> Result<Graph, MalformedGraph6> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(MalformedGraph6::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(MalformedGraph6::ByteOutOfRange(b));
        }
    }
    let (n, data) = decode_header(bytes)?;
    if n == 0 {
        return Err(MalformedGraph6::ZeroVertices);
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(MalformedGraph6::WrongLength {
            n,
            expected,
            got: data.len(),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    // trailing pad bits must be zero for a canonical encoding
    while bit < expected * 6 {
        let byte = data[bit / 6] - 63;
        if byte >> (5 - bit % 6) & 1 == 1 {
            return Err(MalformedGraph6::DirtyPadding);
        }
        bit += 1;
    }
    Ok(g)
}

fn decode_header(bytes: &[u8]) -> Result<(usize, &[u8]), MalformedGraph6> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(MalformedGraph6::TruncatedHeader);
        }
        Ok((read_bignum(&bytes[2..8]), &bytes[8..]))
    } else {
        if bytes.len() < 4 {
            return Err(MalformedGraph6::TruncatedHeader);
        }
        Ok((read_bignum(&bytes[1..4]), &bytes[4..]))
    }
}

fn read_bignum(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(graph6_encode(&k4), "C~");
        assert_eq!(graph6_decode("C~").unwrap(), k4);
    }

    #[test]
    fn k2_is_a_underscore() {
        let k2 = Graph::from_edges(2, &[(0, 1)]);
        assert_eq!(graph6_encode(&k2), "A_");
        assert_eq!(graph6_decode("A_").unwrap(), k2);
    }

    #[test]
    fn c4_is_cl() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        // column-major upper triangle bits 1 01 101, grouped 101101 = 45
        assert_eq!(graph6_encode(&c4), "Cl");
        assert_eq!(graph6_decode("Cl").unwrap(), c4);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        assert_eq!(graph6_encode(&g), "@");
        assert_eq!(graph6_decode("@").unwrap(), g);
    }

    #[test]
    fn round_trip_large_header() {
        // path on 70 vertices exercises the multi-byte header
        let mut edges = Vec::new();
        for v in 0..69 {
            edges.push((v, v + 1));
        }
        let g = Graph::from_edges(70, &edges);
        let s = graph6_encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(graph6_decode(""), Err(MalformedGraph6::Empty));
        assert!(matches!(
            graph6_decode("C"),
            Err(MalformedGraph6::WrongLength { .. })
        ));
        assert!(matches!(
            graph6_decode("C~~"),
            Err(MalformedGraph6::WrongLength { .. })
        ));
        assert_eq!(
            graph6_decode("A*"),
            Err(MalformedGraph6::ByteOutOfRange(b'*'))
        );
        assert_eq!(graph6_decode("~A"), Err(MalformedGraph6::TruncatedHeader));
    }

    #[test]
    fn rejects_dirty_padding() {
        // K_2 is "A_" (bit 1 then five zero pads); "A~" sets pad bits
        assert_eq!(graph6_decode("A~"), Err(MalformedGraph6::DirtyPadding));
    }
}
