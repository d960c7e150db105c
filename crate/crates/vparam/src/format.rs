//! Graph file formats.
//!
//! Edgelist: a header `p <n> <m>` followed by `m` lines `<u> <v>` with 0-based
//! ids. DIMACS: a header `p edge <n> <m>` followed by lines `e <u> <v>` with
//! 1-based ids. Both accept blank lines; edgelist comments start with `#`,
//! DIMACS comments with `c`. Duplicate edges collapse; self-loops are errors.

use std::fmt::Write as _;

use vparam_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Edgelist,
    Dimacs,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the whole input is at fault.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    let (comment, header_tag, edge_tag, base) = match format {
        GraphFormat::Edgelist => ("#", None, None, 0usize),
        GraphFormat::Dimacs => ("c", Some("edge"), Some("e"), 1usize),
    };
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = match format {
            GraphFormat::Edgelist => raw.split('#').next().unwrap_or(""),
            GraphFormat::Dimacs => raw,
        };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() || tokens[0] == comment {
            continue;
        }
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(err(line, "duplicate header"));
            }
            let rest = match header_tag {
                Some(tag) if tokens.get(1) == Some(&tag) => &tokens[2..],
                Some(_) => return Err(err(line, "expected header `p edge <n> <m>`")),
                None => &tokens[1..],
            };
            let [n, m] = rest else {
                return Err(err(line, "header needs a vertex count and an edge count"));
            };
            let n = n.parse().map_err(|_| err(line, format!("bad vertex count `{n}`")))?;
            let m = m.parse().map_err(|_| err(line, format!("bad edge count `{m}`")))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(err(line, "edge before header"));
        };
        let ends = match edge_tag {
            Some(tag) if tokens[0] == tag => &tokens[1..],
            Some(_) => return Err(err(line, format!("unknown line type `{}`", tokens[0]))),
            None => &tokens[..],
        };
        let [u, v] = ends else {
            return Err(err(line, "an edge needs exactly two endpoints"));
        };
        let parse_end = |s: &str| -> Result<usize, ParseError> {
            let id: usize = s.parse().map_err(|_| err(line, format!("bad vertex id `{s}`")))?;
            if id < base || id - base >= n {
                return Err(err(line, format!("vertex {id} out of range for n = {n}")));
            }
            Ok(id - base)
        };
        let (u, v) = (parse_end(u)?, parse_end(v)?);
        if u == v {
            return Err(err(line, format!("self-loop at vertex {}", u + base)));
        }
        edges.push((u, v));
    }
    let (n, _) = header.ok_or_else(|| err(0, "missing header"))?;
    Graph::new(n, edges).map_err(|e| err(0, e.to_string()))
}

/// Serializes `g`; parsing the result gives back `g`.
pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        let mark = if format == GraphFormat::Edgelist { "#" } else { "c" };
        let _ = writeln!(out, "{mark} {name}");
    }
    match format {
        GraphFormat::Edgelist => {
            let _ = writeln!(out, "p {} {}", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        GraphFormat::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
    }
    out
}
