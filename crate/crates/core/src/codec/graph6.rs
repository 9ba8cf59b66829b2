//! graph6: printable 6-bit packing of the upper adjacency triangle.
//!
//! Layout: a size field (`n + 63` for `n <= 62`, `~` plus three bytes up to
//! 258047, `~~` plus six bytes beyond), then the bits `x(i, j)` for
//! `0 <= i < j < n` in column-major order (`j` outer), grouped six at a time
//! into bytes offset by 63 and zero-padded on the right.

use crate::error::ParseError;
use crate::Graph;

pub const HEADER: &str = ">>graph6<<";
const MAX_N: u64 = 68_719_476_735;
/// Bodies beyond this many vertices are refused instead of allocated.
const MATERIALIZE_LIMIT: u64 = 1 << 16;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_size(n as u64, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | col.contains(i) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn encode_size(n: u64, out: &mut Vec<u8>) {
    assert!(n <= MAX_N, "graph6 cannot encode {n} vertices");
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and a trailing
/// newline (or CRLF) are accepted.
pub fn decode(line: &str) -> Result<Graph, ParseError> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::BadCharacter {
            byte: bytes[offset],
            offset,
        });
    }
    let (n, body) = decode_size(bytes)?;
    if n > MATERIALIZE_LIMIT {
        return Err(ParseError::TooLarge(n));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(ParseError::BadLength {
            expected,
            found: body.len(),
        });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(ParseError::NonZeroPadding);
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    Ok(Graph::from_edges(n, edges)?)
}

fn decode_size(bytes: &[u8]) -> Result<(u64, &[u8]), ParseError> {
    let field = |s: &[u8]| s.iter().fold(0u64, |acc, &b| (acc << 6) | (b - 63) as u64);
    match bytes {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(ParseError::BadSizePrefix);
            }
            let n = field(&rest[..6]);
            if n <= 258_047 {
                return Err(ParseError::BadSizePrefix);
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(ParseError::BadSizePrefix);
            }
            let n = field(&rest[..3]);
            if n <= 62 {
                return Err(ParseError::BadSizePrefix);
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as u64, rest)),
        [] => Err(ParseError::Empty),
    }
}
