//! graph6: one ASCII line per graph. Byte 0 is n + 63 (n <= 62 only); the
//! upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... is packed big-endian into
//! 6-bit groups, zero-padded, each group offset by 63. Encoding is bit-exact
//! and decoding rejects anything out of shape, including nonzero padding.

use crate::error::Error;
use crate::graph::Graph;
use std::io::{BufRead, Write};

/// Largest vertex count expressible with the single-byte size header.
pub const MAX_G6_N: usize = 62;

const HEADER: &str = ">>graph6<<";

/// Encode a graph as a graph6 line (no trailing newline).
pub fn encode_g6(g: &Graph) -> Result<String, Error> {
    let n = g.n();
    if n > MAX_G6_N {
        return Err(Error::TooLarge {
            what: "encode_g6",
            max: MAX_G6_N,
            got: n,
        });
    }
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decode one graph6 line. A leading ">>graph6<<" header is accepted.
pub fn decode_g6(line: &str) -> Result<Graph, Error> {
    let s = line.strip_prefix(HEADER).unwrap_or(line);
    let b = s.as_bytes();
    if b.is_empty() {
        return Err(Error::Malformed("empty record".into()));
    }
    if let Some(&bad) = b.iter().find(|&&x| !(63..=126).contains(&x)) {
        return Err(Error::Malformed(format!("byte {} out of range 63..126", bad)));
    }
    let n = (b[0] - 63) as usize;
    if n > MAX_G6_N {
        return Err(Error::Malformed(
            "multi-byte size header (n > 62) not supported".into(),
        ));
    }
    let nbits = n.saturating_sub(1) * n / 2;
    let nbytes = (nbits + 5) / 6;
    if b.len() != 1 + nbytes {
        return Err(Error::Malformed(format!(
            "expected {} data bytes for n={}, got {}",
            nbytes,
            n,
            b.len() - 1
        )));
    }
    let bit = |k: usize| (b[1 + k / 6] - 63) >> (5 - k % 6) & 1;
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    for pad in nbits..nbytes * 6 {
        if bit(pad) != 0 {
            return Err(Error::Malformed("nonzero padding bits".into()));
        }
    }
    Graph::new(n, &edges)
}

/// Decode a stream of graph6 lines. Blank lines are skipped; errors carry the
/// 1-based line number.
pub fn read_g6<R: BufRead>(reader: R) -> Result<Vec<Graph>, Error> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.is_empty() {
            continue;
        }
        let g = decode_g6(line)
            .map_err(|e| Error::Malformed(format!("line {}: {}", i + 1, inner(e))))?;
        out.push(g);
    }
    Ok(out)
}

fn inner(e: Error) -> String {
    match e {
        Error::Malformed(m) => m,
        other => other.to_string(),
    }
}

/// Write graphs as LF-terminated graph6 lines.
pub fn write_g6<'a, W: Write, I: IntoIterator<Item = &'a Graph>>(
    mut w: W,
    graphs: I,
) -> Result<(), Error> {
    for g in graphs {
        writeln!(w, "{}", encode_g6(g)?)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete, path};

    #[test]
    fn k4_is_c_tilde() {
        assert_eq!(encode_g6(&complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(decode_g6("C~").unwrap(), complete(4).unwrap());
    }

    #[test]
    fn single_vertex_is_at_sign() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(encode_g6(&g).unwrap(), "@");
        assert_eq!(decode_g6("@").unwrap(), g);
    }

    #[test]
    fn p4_round_trip() {
        let g = path(4).unwrap();
        assert_eq!(decode_g6(&encode_g6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn header_accepted_never_emitted() {
        let g = complete(4).unwrap();
        assert_eq!(decode_g6(">>graph6<<C~").unwrap(), g);
        assert!(!encode_g6(&g).unwrap().starts_with(">>"));
    }

    #[test]
    fn malformed_records_rejected() {
        // byte out of range (0xc8 encodes as bytes above 126)
        assert!(matches!(decode_g6("C\u{c8}"), Err(Error::Malformed(_))));
        // wrong length
        assert!(matches!(decode_g6("C"), Err(Error::Malformed(_))));
        assert!(matches!(decode_g6("C~~"), Err(Error::Malformed(_))));
        // nonzero padding: n=2 uses 1 bit, 5 padding bits must be zero
        // 'A' + data byte with a stray low bit set
        let stray = String::from_utf8(vec![b'A', 63 + 0b000001]).unwrap();
        assert!(matches!(decode_g6(&stray), Err(Error::Malformed(_))));
        // multi-byte size marker
        assert!(matches!(decode_g6("~??"), Err(Error::Malformed(_))));
        // empty
        assert!(matches!(decode_g6(""), Err(Error::Malformed(_))));
    }

    #[test]
    fn encode_caps_at_62() {
        let g = Graph::new(63, &[]).unwrap();
        assert!(matches!(encode_g6(&g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn stream_reads_lines_and_reports_line_numbers() {
        let text = "C~\n\n@\n";
        let graphs = read_g6(text.as_bytes()).unwrap();
        assert_eq!(graphs.len(), 2);
        let bad = read_g6("C~\nC\n".as_bytes()).unwrap_err();
        match bad {
            Error::Malformed(msg) => assert!(msg.starts_with("line 2:"), "{msg}"),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
