//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```
//!
//! Everything after a `#` is ignored, as are blank lines. Line numbers in
//! errors are 1-based physical lines.

use super::{Edge, Graph};
use crate::error::{Error, Result};

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("{what} {tok:?} is not a non-negative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut g = Graph::empty(n);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let (u, v) = parse_pair(line, text)?;
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("loop at vertex {u}"),
            });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("vertex index out of range 0..{n}"),
            });
        }
        if !g.add_edge(u, v) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {}", Edge::new(u, v)),
            });
        }
        if g.edge_count() > m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
    }
    if g.edge_count() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header declares {m} edges, found {}", g.edge_count()),
        });
    }
    Ok(g)
}

/// Header plus sorted edges, newline separated, no trailing newline.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}", g.n(), g.edge_count());
    for e in g.edges() {
        out.push('\n');
        out.push_str(&format!("{} {}", e.u(), e.v()));
    }
    out
}
