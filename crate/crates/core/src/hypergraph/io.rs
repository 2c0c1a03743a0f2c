//! The `.hg` text format: a header line `k n m`, then one edge per line as
//! `k` space-separated 0-based vertex labels.

use super::UniformHypergraph;
use crate::error::{Error, Result};

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("`{tok}` is not a non-negative integer")))
        })
        .collect()
}

pub fn parse_hg(text: &str) -> Result<UniformHypergraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `k n m`"))?;
    let head = numbers(header, lineno)?;
    let [k, n, m] = head[..] else {
        return Err(Error::parse(lineno, "header must be `k n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines.by_ref() {
        if edges.len() == m {
            if line.trim().is_empty() {
                continue;
            }
            return Err(Error::parse(lineno, format!("more than {m} edge lines")));
        }
        let e = numbers(line, lineno)?;
        if e.len() != k {
            return Err(Error::parse(
                lineno,
                format!("expected {k} vertices, found {}", e.len()),
            ));
        }
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(Error::parse(lineno, format!("vertex {v} is not below n={n}")));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count() + 1,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    UniformHypergraph::new(k, n, edges)
}

/// Writes `h` with its edges in lexicographic order.
pub fn write_hg(h: &UniformHypergraph) -> String {
    let mut edges = h.edges().to_vec();
    edges.sort();
    let mut out = format!("{} {} {}\n", h.k(), h.n(), h.m());
    for e in edges {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_sorts_edges() {
        let h = parse_hg("3 5 2\n2 4 3\n0 1 2\n").unwrap();
        assert_eq!(write_hg(&h), "3 5 2\n0 1 2\n2 3 4\n");
        assert_eq!(parse_hg(&write_hg(&h)).unwrap().edges(), &[vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_hg("3 4 2\n0 1 2\n0 x 3\n").unwrap_err();
        assert_eq!(err, Error::parse(3, "`x` is not a non-negative integer"));
        assert!(matches!(parse_hg("3 4 2\n0 1 2\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_hg("3 4\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_hg("3 4 2\n0 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_hg("3 4 1\n0 1 9\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn invalid_structure_is_rejected() {
        assert!(matches!(parse_hg("3 4 1\n0 1 2\n"), Err(Error::Invalid(_))));
    }
}
