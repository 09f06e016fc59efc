//! Plain-text hypergraph files.
//!
//! ```text
//! # comment
//! hypergraph n=4 r=3
//! e 0 1 2
//! e 1 2 3
//! ```
//!
//! Oriented files use the header `oriented` and `o` lines whose vertex
//! order gives positions `0..r`. Writers emit edges in canonical order.

use std::fmt::Write as _;
use std::path::Path;

use super::{Hypergraph, Orientation};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Hypergraph(Hypergraph),
    Oriented(Orientation),
}

impl Document {
    pub fn hypergraph(&self) -> &Hypergraph {
        match self {
            Document::Hypergraph(h) => h,
            Document::Oriented(d) => d.base(),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line_no: usize, fields: &[&str]) -> Result<(bool, usize, usize)> {
    let oriented = match fields.first() {
        Some(&"hypergraph") => false,
        Some(&"oriented") => true,
        _ => return Err(parse_err(line_no, "expected `hypergraph` or `oriented` header")),
    };
    let (mut n, mut r) = (None, None);
    for f in &fields[1..] {
        let (key, value) = f
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, format!("malformed header field `{f}`")))?;
        let value: usize = value
            .parse()
            .map_err(|_| parse_err(line_no, format!("`{value}` is not a non-negative integer")))?;
        match key {
            "n" => n = Some(value),
            "r" => r = Some(value),
            _ => return Err(parse_err(line_no, format!("unknown header field `{key}`"))),
        }
    }
    match (n, r) {
        (Some(n), Some(r)) => Ok((oriented, n, r)),
        _ => Err(parse_err(line_no, "header needs both n= and r=")),
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let mut header = None;
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some((oriented, _, r)) = header else {
            header = Some(parse_header(line_no, &fields)?);
            continue;
        };
        let tag = if oriented { "o" } else { "e" };
        if fields[0] != tag {
            return Err(parse_err(line_no, format!("expected `{tag}` line")));
        }
        let verts = fields[1..]
            .iter()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("`{s}` is not a vertex")))
            })
            .collect::<Result<Vec<usize>>>()?;
        if verts.len() != r {
            return Err(parse_err(line_no, format!("edge has {} vertices, expected {r}", verts.len())));
        }
        tuples.push(verts);
    }
    let (oriented, n, r) = header.ok_or_else(|| parse_err(last_line.max(1), "missing header"))?;
    if oriented {
        Ok(Document::Oriented(Orientation::from_ordered_edges(&tuples, n, r)?))
    } else {
        Ok(Document::Hypergraph(Hypergraph::canonicalize(&tuples, n, r)?))
    }
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("hypergraph n={} r={}\n", h.n(), h.r());
    for e in h.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn write_orientation(d: &Orientation) -> String {
    let h = d.base();
    let mut out = format!("oriented n={} r={}\n", h.n(), h.r());
    for order in d.orders() {
        out.push('o');
        for v in order {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn read_file(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path)?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let doc = parse("# test\n\nhypergraph n=4 r=3\ne 2 1 0\n# mid\ne 1 2 3\n").unwrap();
        let h = doc.hypergraph();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(write_hypergraph(h), "hypergraph n=4 r=3\ne 0 1 2\ne 1 2 3\n");
    }

    #[test]
    fn oriented_roundtrip() {
        let text = "oriented n=3 r=2\no 2 0\no 0 1\no 1 2\n";
        let Document::Oriented(d) = parse(text).unwrap() else {
            panic!("expected orientation")
        };
        let written = write_orientation(&d);
        assert_eq!(written, "oriented n=3 r=2\no 0 1\no 2 0\no 1 2\n");
        assert_eq!(parse(&written).unwrap(), Document::Oriented(d));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse("graph n=3 r=2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("hypergraph n=3 r=2\ne 0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("hypergraph n=3 r=2\no 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("hypergraph n=3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("hypergraph n=3 r=2\ne 0 1\ne 1 0\n"),
            Err(Error::DuplicateEdge { .. })
        ));
    }
}
