//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The header gives the order and the edge count; each edge is written once
//! as `u v` with `u < v`. Lines starting with `#` and blank lines are skipped.

use std::collections::HashSet;
use std::fmt::Write;

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::EdgeList {
        line,
        message: message.into(),
    })
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return fail(
            line,
            format!("expected two integers, found {:?}", text.trim()),
        );
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .or_else(|_| fail(line, format!("not a non-negative integer: {s:?}")))
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

impl Graph {
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let Some((header_line, header)) = lines.next() else {
            return fail(0, "missing header line \"n m\"");
        };
        let (n, m) = parse_pair(header_line, header)?;
        if n > MAX_ORDER {
            return fail(header_line, format!("order {n} exceeds {MAX_ORDER}"));
        }

        let mut seen = HashSet::with_capacity(m);
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            if edges.len() == m {
                return fail(line, format!("more than the declared {m} edges"));
            }
            let (u, v) = parse_pair(line, text)?;
            if u >= v {
                return fail(line, format!("edge {u} {v} must satisfy u < v"));
            }
            if v >= n {
                return fail(line, format!("vertex {v} out of range for order {n}"));
            }
            if !seen.insert((u, v)) {
                return fail(line, format!("duplicate edge {u} {v}"));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return fail(
                text.lines().count(),
                format!("declared {m} edges, found {}", edges.len()),
            );
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}
