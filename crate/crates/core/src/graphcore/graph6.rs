//! graph6 encoding (McKay): a size header followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per byte with an
//! offset of 63.

use std::io::{self, Write};

use thiserror::Error;

use super::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";
const MAX_N: usize = (1 << 36) - 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed size header")]
    BadHeader,
    #[error("byte {byte:#04x} at position {pos} is outside the printable range 63..=126")]
    OutOfRange { pos: usize, byte: u8 },
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits in the last byte are not zero")]
    NonZeroPadding,
    #[error("graph with {0} vertices is too large to encode")]
    TooLarge(usize),
}

/// Parses one graph6 line. A leading `>>graph6<<` header and a trailing
/// newline are accepted; any other trailing byte is an error.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::OutOfRange { pos, byte });
        }
    }

    let (n, data) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: data.len(),
        });
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        let last = data[expected - 1] - OFFSET;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v).expect("each pair appears once");
            }
            k += 1;
        }
    }
    Ok(g)
}

// Sizes must use the shortest header form so that encoding is a bijection.
fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let six = |b: u8| (b - OFFSET) as usize;
    if bytes[0] != 126 {
        return Ok((six(bytes[0]), &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadHeader);
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
        if n <= 258_047 {
            return Err(Graph6Error::BadHeader);
        }
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::BadHeader);
    }
    let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
    if n <= 62 {
        return Err(Graph6Error::BadHeader);
    }
    Ok((n, &bytes[4..]))
}

/// Encodes a graph as a graph6 string without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    try_write_graph6(g).expect("graph too large for graph6")
}

pub fn try_write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + OFFSET));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + OFFSET));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Writes one graph6 line per graph.
pub fn write_graph6_lines<'a, W, I>(mut w: W, graphs: I) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        writeln!(w, "{}", write_graph6(g))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(write_graph6(&g), "Bw");
    }

    #[test]
    fn zero_and_one_vertex() {
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<Bw\n").unwrap();
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn known_encodings() {
        // Path 0-1-2-3 and the 5-cycle, checked against hand-packed bits.
        assert_eq!(write_graph6(&Graph::path(4)), "Ch");
        assert_eq!(write_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert_eq!(
            parse_graph6("Bw?"),
            Err(Graph6Error::WrongLength {
                expected: 1,
                found: 2
            })
        );
        assert!(matches!(
            parse_graph6("Bw "),
            Err(Graph6Error::OutOfRange { pos: 2, .. })
        ));
    }

    #[test]
    fn rejects_nonzero_padding() {
        // n = 3 has 3 data bits; 'x' = 63 + 57 sets a padding bit.
        assert_eq!(parse_graph6("Bx"), Err(Graph6Error::NonZeroPadding));
    }

    #[test]
    fn rejects_non_minimal_header() {
        assert_eq!(parse_graph6("~??B"), Err(Graph6Error::BadHeader));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::BadHeader));
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::cycle(70);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
