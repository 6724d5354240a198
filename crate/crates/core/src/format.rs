//! Text encodings: graph6 and a plain `n; u-v, u-v` edge list.
//!
//! graph6 stores the order in a header (`n + 63` for `n <= 62`, otherwise
//! `~` followed by three 6-bit groups) and the upper triangle of the
//! adjacency matrix column by column, `x(0,1) x(0,2) x(1,2) x(0,3) ..`,
//! packed six bits per byte with 63 added.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_ORDER};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + BIAS) as char);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            chunk = chunk << 1 | col.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + BIAS) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + BIAS) as char);
    }
    out
}

/// Parses one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored; anything else must be exact.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [b'~', b'~', ..] => {
            return Err(Error::Graph6(format!(
                "order above {MAX_ORDER} is not supported"
            )))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated order header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
            if n <= 62 {
                return Err(Error::Graph6(format!(
                    "order {n} must use the short header"
                )));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - BIAS) as usize, rest),
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} outside 1..={MAX_ORDER}")));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated body: expected {need} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "trailing data: expected {need} body bytes, found {}",
            body.len()
        )));
    }
    let bit = |idx: usize| (body[idx / 6] - BIAS) >> (5 - idx % 6) & 1 == 1;
    if (bits..need * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut builder = GraphBuilder::new(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                builder.add_edge(i, j)?;
            }
            idx += 1;
        }
    }
    Ok(builder.build())
}

/// `n; u-v, u-v, ...` with edges in [`Graph::edges`] order. An edgeless
/// graph is written as `n;`.
pub fn emit_edge_list(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    if edges.is_empty() {
        format!("{};", g.order())
    } else {
        format!("{}; {}", g.order(), edges.join(", "))
    }
}

/// Parses `n; u-v, u-v, ...`. Whitespace is free-form and a trailing comma
/// is tolerated.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let (head, tail) = text
        .split_once(';')
        .ok_or_else(|| Error::EdgeList("missing ';' after the order".into()))?;
    let n: usize = head
        .trim()
        .parse()
        .map_err(|_| Error::EdgeList(format!("bad order {:?}", head.trim())))?;
    let mut builder = GraphBuilder::new(n)?;
    for item in tail.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (u, v) = item
            .split_once('-')
            .ok_or_else(|| Error::EdgeList(format!("bad edge {item:?}")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::EdgeList(format!("bad vertex {:?} in {item:?}", s.trim())))
        };
        builder.add_edge(parse(u)?, parse(v)?)?;
    }
    Ok(builder.build())
}
