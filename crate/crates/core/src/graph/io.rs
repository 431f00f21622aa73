//! Edge-list and coloring text formats.
//!
//! Graph: a header line `n m`, then `m` lines `u v` (0-indexed, `u < v`).
//! Coloring: one line `u v c` per edge, in the graph's edge order, `c >= 1`.
//! Lines are LF-terminated; blank lines are ignored on input.

use std::fmt::Write as _;

use super::{Color, EdgeColoring, Graph};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, fields)| !fields.is_empty())
}

fn number(line: usize, field: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found {field:?}")))
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header line"))?;
    if header.len() != 2 {
        return Err(Error::parse(hline, "header must be \"n m\""));
    }
    let n = number(hline, header[0])?;
    let m = number(hline, header[1])?;
    if n == 0 {
        return Err(Error::parse(hline, "graph needs at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = hline;
    for (line, fields) in lines {
        last_line = line;
        if fields.len() != 2 {
            return Err(Error::parse(line, "edge line must be \"u v\""));
        }
        let u = number(line, fields[0])?;
        let v = number(line, fields[1])?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
        }
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.n(), graph.m());
    for &(u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Reads a coloring of `graph`; the palette size is the largest color used.
pub fn read_coloring(text: &str, graph: &Graph) -> Result<EdgeColoring> {
    let mut colors: Vec<Color> = Vec::with_capacity(graph.m());
    let mut last_line = 0;
    for (line, fields) in content_lines(text) {
        last_line = line;
        if fields.len() != 3 {
            return Err(Error::parse(line, "coloring line must be \"u v c\""));
        }
        let u = number(line, fields[0])?;
        let v = number(line, fields[1])?;
        let c = number(line, fields[2])?;
        let id = colors.len();
        if id == graph.m() {
            return Err(Error::parse(line, "more colored edges than the graph has"));
        }
        let expected = graph.edge(id);
        if (u.min(v), u.max(v)) != expected {
            let msg = if u >= graph.n() || v >= graph.n() {
                format!("vertex out of range 0..{}", graph.n())
            } else {
                format!("expected edge {} {} at this position", expected.0, expected.1)
            };
            return Err(Error::parse(line, msg));
        }
        if c == 0 {
            return Err(Error::parse(line, "colors start at 1"));
        }
        colors.push(c);
    }
    if colors.len() != graph.m() {
        let (u, v) = graph.edge(colors.len());
        return Err(Error::parse(last_line.max(1), format!("edge {u} {v} is uncolored")));
    }
    EdgeColoring::from_colors(colors)
}

pub fn write_coloring(graph: &Graph, coloring: &EdgeColoring) -> String {
    let mut out = String::new();
    for (&(u, v), c) in graph.edges().iter().zip(coloring.colors()) {
        writeln!(out, "{u} {v} {c}").unwrap();
    }
    out
}
