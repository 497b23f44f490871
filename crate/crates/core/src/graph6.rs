//! Short-form graph6 (`n < 63`).
//!
//! Layout: one byte `n + 63`, then the upper triangle bits
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed big-endian six to a byte,
//! each byte offset by 63, last byte zero padded.

use thiserror::Error;

use crate::error::Result;
use crate::graph::Graph;

/// Largest order representable in the short form.
pub const MAX_SHORT_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 byte {byte:#04x} at offset {offset} is outside 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 long form (n >= 63) is not supported")]
    LongForm,
    #[error("graph of order {n} does not fit short-form graph6")]
    TooLarge { n: usize },
    #[error("graph6 body for n = {n} needs {expected} bytes, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_ORDER {
        return Err(Graph6Error::TooLarge { n }.into());
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte }.into());
        }
    }
    if head == 126 {
        return Err(Graph6Error::LongForm.into());
    }
    let n = (head - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: body.len(),
        }
        .into());
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.toggle(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding.into());
        }
    }
    Ok(g)
}

impl Graph {
    pub fn to_graph6(&self) -> Result<String> {
        encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        decode(text)
    }
}
