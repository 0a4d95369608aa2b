//! Plain-text formats.
//!
//! * Graph: header `n m`, then `m` lines `u v` with `0 <= u < v < n`, no duplicates.
//! * Matrix: header `m n`, then `m` lines of exactly `n` characters from `{0, 1}`.
//! * Bipartite graph: header `na nb m`, then `m` lines `a b` with `a < na`, `b < nb`.
//!
//! Blank lines are ignored. Writers list edges in lexicographic order, so
//! `parse(write(x)) == x` and `write(parse(s))` is canonical.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::counterexample::BipartiteGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::BinaryMatrix;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate(), last: 0 }
    }

    /// Next nonblank line with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            if !line.trim().is_empty() {
                return Some((i + 1, line.trim()));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let after = self.last;
        self.next().ok_or_else(|| Error::Parse {
            line: after + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    fn finish(&mut self) -> Result<()> {
        match self.next() {
            Some((line, _)) => Err(Error::Parse { line, message: "trailing content".into() }),
            None => Ok(()),
        }
    }
}

fn numbers<const N: usize>(line: usize, text: &str, what: &str) -> Result<[usize; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != N {
        return Err(Error::Parse {
            line,
            message: format!("expected {what} ({N} integers), found {} fields", parts.len()),
        });
    }
    let mut out = [0; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part.parse().map_err(|_| Error::Parse {
            line,
            message: format!("{part:?} is not a nonnegative integer"),
        })?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.expect("header \"n m\"")?;
    let [n, m] = numbers(line, header, "header \"n m\"")?;
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m.min(1 << 20));
    for _ in 0..m {
        let (line, text) = lines.expect("edge line \"u v\"")?;
        let [u, v] = numbers(line, text, "edge \"u v\"")?;
        let fail = |message: String| Err(Error::Parse { line, message });
        if u >= v {
            return fail(format!("edge ({u}, {v}) must satisfy u < v"));
        }
        if v >= n {
            return fail(format!("vertex {v} out of range for n = {n}"));
        }
        if !seen.insert((u, v)) {
            return fail(format!("duplicate edge ({u}, {v})"));
        }
        edges.push((u, v));
    }
    lines.finish()?;
    Graph::from_edges(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.expect("header \"m n\"")?;
    let [m, n] = numbers(line, header, "header \"m n\"")?;
    if n == 0 {
        // Rows of width zero are blank lines, which the reader skips.
        lines.finish()?;
        return Ok(BinaryMatrix::zeros(m, 0));
    }
    let mut rows = Vec::with_capacity(m.min(1 << 16));
    for i in 0..m {
        let (line, text) = lines.expect(&format!("row {i}"))?;
        if text.len() != n || !text.bytes().all(|c| c == b'0' || c == b'1') {
            return Err(Error::Parse {
                line,
                message: format!("row must be exactly {n} characters from {{0, 1}}"),
            });
        }
        rows.push(text);
    }
    lines.finish()?;
    if m == 0 {
        return Ok(BinaryMatrix::zeros(0, n));
    }
    BinaryMatrix::from_strs(&rows)
}

pub fn write_matrix(a: &BinaryMatrix) -> String {
    let mut out = format!("{} {}\n", a.m(), a.n());
    for row in a.to_strings() {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.expect("header \"na nb m\"")?;
    let [na, nb, m] = numbers(line, header, "header \"na nb m\"")?;
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m.min(1 << 20));
    for _ in 0..m {
        let (line, text) = lines.expect("edge line \"a b\"")?;
        let [a, b] = numbers(line, text, "edge \"a b\"")?;
        if a >= na || b >= nb {
            return Err(Error::Parse {
                line,
                message: format!("edge ({a}, {b}) out of range for {na} x {nb}"),
            });
        }
        if !seen.insert((a, b)) {
            return Err(Error::Parse { line, message: format!("duplicate edge ({a}, {b})") });
        }
        edges.push((a, b));
    }
    lines.finish()?;
    BipartiteGraph::from_edges(na, nb, &edges)
}

pub fn write_bipartite(g: &BipartiteGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {} {}\n", g.na(), g.nb(), edges.len());
    for (a, b) in edges {
        writeln!(out, "{a} {b}").expect("writing to a String");
    }
    out
}
