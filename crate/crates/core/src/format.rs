//! Text formats for graphs: a plain edge list and graph6.
//!
//! Edge list: the first non-blank line holds the order `p`, every further
//! line one edge `u v` (0-based, whitespace separated). `#` starts a comment.
//!
//! graph6: the usual single-line encoding. The order is written as `N(n)`,
//! followed by the upper triangle of the adjacency matrix in column order
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte,
//! big-endian, each byte offset by 63.

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format {other:?}")),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Graph6 => to_graph6(g),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (_, header) = lines
        .next()
        .ok_or_else(|| GraphError::MalformedHeader("missing vertex count".into()))?;
    let order: usize = header
        .parse()
        .map_err(|_| GraphError::MalformedHeader(format!("expected vertex count, found {header:?}")))?;

    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let syntax = |message: String| GraphError::Syntax {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(syntax(format!("expected two vertex indices, found {line:?}")));
        };
        let u: usize = u.parse().map_err(|_| syntax(format!("bad vertex index {u:?}")))?;
        let v: usize = v.parse().map_err(|_| syntax(format!("bad vertex index {v:?}")))?;
        edges.push((u, v));
    }
    Graph::new(order, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(G6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;

    let (order, body) = match bytes {
        [] => return Err(GraphError::MalformedHeader("empty graph6 string".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(GraphError::MalformedHeader("truncated 8-byte order".into()));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::MalformedHeader("truncated 4-byte order".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
            (n, &rest[3..])
        }
        [b, rest @ ..] => (six(*b), rest),
    };

    let bits = order * order.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!(
            "order {order} needs {expected} data bytes, found {}",
            body.len()
        )));
    }

    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(GraphError::Graph6("nonzero padding bits".into()));
    }
    Graph::new(order, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }

    let adj = g.adjacency();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adj[i].binary_search(&j).is_ok());
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
