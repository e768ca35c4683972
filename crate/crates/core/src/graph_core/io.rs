//! Plain-text formats.
//!
//! Edge lists hold one edge per line as two 1-based decimal labels separated
//! by a single space, LF-terminated. Line order is the edge order. Lines
//! starting with `#` form a comment header; the directive `#n <N>` in that
//! header fixes the vertex count of a [`VertexGraph`], which otherwise is the
//! largest label. Label sequences hold one label per line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph_core::edgeseq::EdgeSeqGraph;
use crate::graph_core::labels::LabelSeq;
use crate::graph_core::vertex::VertexGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub n: Option<usize>,
    pub edges: Vec<(u32, u32)>,
}

pub fn seed_header(seed: u64) -> String {
    format!("# seed={seed}\n")
}

/// Reads the `# seed=` header line, if any.
pub fn read_seed(text: &str) -> Option<u64> {
    text.lines()
        .take_while(|l| l.starts_with('#'))
        .find_map(|l| l.strip_prefix("# seed=").and_then(|s| s.trim().parse().ok()))
}

fn parse_label(tok: &str, line: usize) -> Result<u32> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(line, format!("`{tok}` is not a decimal label")));
    }
    let v: u32 = tok.parse().map_err(|e| Error::parse(line, format!("`{tok}`: {e}")))?;
    if v == 0 {
        return Err(Error::parse(line, "labels are 1-based"));
    }
    Ok(v)
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, line) in text.split('\n').enumerate() {
        let lineno = i + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if !edges.is_empty() {
                return Err(Error::parse(lineno, "comment after the first edge"));
            }
            if let Some(count) = rest.strip_prefix("n ") {
                let v: usize = count
                    .parse()
                    .map_err(|e| Error::parse(lineno, format!("bad vertex count `{count}`: {e}")))?;
                n = Some(v);
            }
            continue;
        }
        let (a, b) = line
            .split_once(' ')
            .ok_or_else(|| Error::parse(lineno, "expected two labels separated by one space"))?;
        edges.push((parse_label(a, lineno)?, parse_label(b, lineno)?));
    }
    Ok(EdgeList { n, edges })
}

pub fn format_edge_list<I>(edges: I, n: Option<usize>) -> String
where
    I: IntoIterator<Item = (u32, u32)>,
{
    let mut out = String::new();
    if let Some(n) = n {
        let _ = writeln!(out, "#n {n}");
    }
    for (a, b) in edges {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub fn read_vertex_graph(text: &str) -> Result<VertexGraph> {
    let list = parse_edge_list(text)?;
    let max = list.edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0) as usize;
    let n = list.n.unwrap_or(max);
    if n < max {
        return Err(Error::parse(1, format!("#n {n} is smaller than the largest label {max}")));
    }
    VertexGraph::new(n, list.edges)
}

pub fn write_vertex_graph(g: &VertexGraph) -> String {
    format_edge_list(g.edges(), Some(g.n()))
}

pub fn read_edge_seq(text: &str) -> Result<EdgeSeqGraph> {
    EdgeSeqGraph::new(parse_edge_list(text)?.edges)
}

pub fn write_edge_seq(g: &EdgeSeqGraph) -> String {
    format_edge_list(g.edges().iter().copied(), None)
}

pub fn read_label_seq(text: &str) -> Result<LabelSeq> {
    let mut out = Vec::new();
    for (i, line) in text.split('\n').enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_label(line, i + 1)?);
    }
    LabelSeq::new(out)
}

pub fn write_label_seq(s: &LabelSeq) -> String {
    let mut out = String::with_capacity(4 * s.len());
    for x in s.entries() {
        let _ = writeln!(out, "{x}");
    }
    out
}
