//! Text formats.
//!
//! Graphs use a DIMACS-flavored edge list:
//!
//! ```text
//! c optional comment
//! p <n> <m>
//! e <u> <v>
//! ```
//!
//! with 0-based endpoints and exactly `m` edge lines. Colorings are written as
//! `s <k> <n>` followed by `k` lines `class <i>: <sorted vertex list>`.

use std::fmt::Write as _;

use crate::bitset::VertexSet;
use crate::coloring::{Route, TreeColoring};
use crate::graph::Graph;
use crate::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c') || l.starts_with("class"))
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut seen = 0usize;
    for (line, content) in content_lines(text) {
        let mut toks = content.split_whitespace();
        match toks.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens in header"));
                }
                if n == 0 {
                    return Err(Error::EmptyGraph);
                }
                graph = Some((Graph::empty(n), m));
            }
            Some("e") => {
                let (g, _) = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge before header"))?;
                let u = parse_num(toks.next(), line, "endpoint")?;
                let v = parse_num(toks.next(), line, "endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens in edge line"));
                }
                g.add_edge(u, v)
                    .map_err(|e| parse_err(line, e.to_string()))?;
                seen += 1;
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            None => unreachable!(),
        }
    }
    let (g, m) = graph.ok_or_else(|| parse_err(0, "missing header"))?;
    if seen != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

/// Canonical form: header with the distinct edge count, edges sorted.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn write_coloring(c: &TreeColoring) -> String {
    let mut out = format!("s {} {}\n", c.class_count(), c.n);
    for (i, class) in c.classes.iter().enumerate() {
        write!(out, "class {i}:").unwrap();
        for v in class.iter() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Reads a coloring document and binds it to `host`. Overlapping or missing
/// vertices are accepted here and left for the verifier to report.
pub fn read_coloring(text: &str, host: &Graph) -> Result<TreeColoring> {
    let mut header: Option<(usize, usize)> = None;
    let mut classes = Vec::new();
    for (line, content) in content_lines(text) {
        if let Some(rest) = content.strip_prefix("s ") {
            if header.is_some() {
                return Err(parse_err(line, "duplicate header"));
            }
            let mut toks = rest.split_whitespace();
            let k = parse_num(toks.next(), line, "class count")?;
            let n = parse_num(toks.next(), line, "vertex count")?;
            if toks.next().is_some() {
                return Err(parse_err(line, "trailing tokens in header"));
            }
            if n != host.n() {
                return Err(parse_err(
                    line,
                    format!("coloring is for {n} vertices, graph has {}", host.n()),
                ));
            }
            header = Some((k, n));
        } else if let Some(rest) = content.strip_prefix("class") {
            let (_, n) = header.ok_or_else(|| parse_err(line, "class before header"))?;
            let (idx, members) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(line, "missing `:` in class line"))?;
            let idx = parse_num(Some(idx.trim()), line, "class index")?;
            if idx != classes.len() {
                return Err(parse_err(
                    line,
                    format!("expected class {}, found {idx}", classes.len()),
                ));
            }
            let mut set = VertexSet::empty(n);
            for tok in members.split_whitespace() {
                let v = parse_num(Some(tok), line, "vertex")?;
                if v >= n {
                    return Err(parse_err(
                        line,
                        format!("vertex {v} out of range for n={n}"),
                    ));
                }
                set.insert(v);
            }
            classes.push(set);
        } else {
            return Err(parse_err(line, "expected `s` header or `class` line"));
        }
    }
    let (k, n) = header.ok_or_else(|| parse_err(0, "missing header"))?;
    if classes.len() != k {
        return Err(parse_err(
            0,
            format!("header declares {k} classes, found {}", classes.len()),
        ));
    }
    Ok(TreeColoring {
        host: host.id(),
        n,
        classes,
        route: Route::External,
    })
}
