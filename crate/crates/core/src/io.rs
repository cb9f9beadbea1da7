//! Text formats.
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>      (m lines, 1 <= u, v <= n)
//! h <a> <b>      (multicut instances only)
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::multicut::MulticutInstance;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(parse_err(
            line,
            format!("expected {N} numbers, found {}", fields.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line, format!("not a number: {f:?}")))?;
    }
    Ok(out)
}

struct Parsed {
    graph: Graph,
    pairs: Vec<(Vertex, Vertex)>,
}

fn parse(text: &str, allow_pairs: bool) -> Result<Parsed> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "second header line"));
                }
                let [n, m] = numbers::<2>(line, &fields[1..])?;
                header = Some((n, m, line));
            }
            "e" => {
                let (n, _, _) = header.ok_or_else(|| parse_err(line, "edge before header"))?;
                if !pairs.is_empty() {
                    return Err(parse_err(line, "edge after demand pairs"));
                }
                let [u, v] = numbers::<2>(line, &fields[1..])?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(
                        line,
                        format!("id out of range: ({u}, {v}) with n = {n}"),
                    ));
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                let e = (u.min(v), u.max(v));
                if !seen.insert(e) {
                    return Err(parse_err(
                        line,
                        format!("duplicate edge ({}, {})", e.0, e.1),
                    ));
                }
                edges.push(e);
            }
            "h" if allow_pairs => {
                let (n, _, _) = header.ok_or_else(|| parse_err(line, "pair before header"))?;
                let [a, b] = numbers::<2>(line, &fields[1..])?;
                if a == 0 || b == 0 || a > n || b > n {
                    return Err(parse_err(
                        line,
                        format!("id out of range: ({a}, {b}) with n = {n}"),
                    ));
                }
                pairs.push((a, b));
            }
            other => return Err(parse_err(line, format!("unknown line type {other:?}"))),
        }
    }

    let (n, m, header_line) =
        header.ok_or_else(|| parse_err(last_line.max(1), "missing header"))?;
    if edges.len() != m {
        return Err(parse_err(
            header_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Parsed {
        graph: Graph::from_edges(n, edges)?,
        pairs,
    })
}

pub fn parse_graph_file(text: &str) -> Result<Graph> {
    parse(text, false).map(|p| p.graph)
}

pub fn parse_multicut_file(text: &str) -> Result<MulticutInstance> {
    let parsed = parse(text, true)?;
    MulticutInstance::new(parsed.graph, parsed.pairs)
}

pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("p {} {}\n", graph.n(), graph.edge_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn write_multicut(inst: &MulticutInstance) -> String {
    let mut out = write_graph(inst.tree());
    for &(a, b) in inst.pairs() {
        let _ = writeln!(out, "h {a} {b}");
    }
    out
}
