//! A single sum type over every structure a sampler can emit, with the
//! relabelling action and restriction maps needed by the estimators.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph_core::io;
use crate::graph_core::{
    EdgeSeqGraph, KeyKind, LabelSeq, Mark, MarkedCompleteGraph, Partition, PatternKey, RootedGraph, VertexGraph,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sample {
    Vertex(VertexGraph),
    EdgeSeq(EdgeSeqGraph),
    Sequence(LabelSeq),
    Partition(Partition),
    Marked(MarkedCompleteGraph),
    Rooted(RootedGraph),
    Egos(Vec<RootedGraph>),
}

impl Sample {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Sample::Vertex(_) => "vertex graph",
            Sample::EdgeSeq(_) => "edge sequence",
            Sample::Sequence(_) => "label sequence",
            Sample::Partition(_) => "partition",
            Sample::Marked(_) => "marked complete graph",
            Sample::Rooted(_) => "rooted graph",
            Sample::Egos(_) => "ego list",
        }
    }

    pub fn key(&self) -> PatternKey {
        match self {
            Sample::Vertex(g) => g.key(),
            Sample::EdgeSeq(g) => g.key(),
            Sample::Sequence(s) => {
                let mut w = vec![s.len() as u32];
                w.extend_from_slice(s.entries());
                PatternKey::new(KeyKind::Sequence, w)
            }
            Sample::Partition(p) => {
                let mut w = vec![p.len() as u32];
                w.extend_from_slice(p.labels().entries());
                PatternKey::new(KeyKind::Partition, w)
            }
            Sample::Marked(m) => m.key(),
            Sample::Rooted(r) => r.key(),
            Sample::Egos(list) => {
                let mut w = vec![list.len() as u32];
                for r in list {
                    let k = r.key();
                    w.push(k.words().len() as u32);
                    w.extend_from_slice(k.words());
                }
                PatternKey::new(KeyKind::EgoList, w)
            }
        }
    }

    /// Size in the structure's own restriction world.
    pub fn size(&self) -> usize {
        match self {
            Sample::Vertex(g) => g.n(),
            Sample::EdgeSeq(g) => g.len(),
            Sample::Sequence(s) => s.len(),
            Sample::Partition(p) => p.len(),
            Sample::Marked(m) => m.k(),
            Sample::Rooted(r) => r.vertex_count(),
            Sample::Egos(l) => l.len(),
        }
    }

    /// The size-`idx.len()` restriction of `T_phi(self)` for any permutation
    /// `phi` sending position `t` to `idx[t]` (0-based).
    pub fn select(&self, idx: &[usize]) -> Result<Sample> {
        let size = self.size();
        if let Some(&bad) = idx.iter().find(|&&i| i >= size) {
            return Err(Error::range("position", bad, 0, size.saturating_sub(1)));
        }
        Ok(match self {
            Sample::Vertex(g) => {
                let chosen: Vec<u32> = idx.iter().map(|&i| i as u32 + 1).collect();
                Sample::Vertex(g.induced(&chosen))
            }
            Sample::EdgeSeq(g) => Sample::EdgeSeq(g.pick_relabeled(idx)),
            Sample::Sequence(s) => Sample::Sequence(s.pick(idx)),
            Sample::Partition(p) => Sample::Partition(Partition::of_sequence(&p.labels().pick(idx))),
            Sample::Marked(m) => Sample::Marked(m.pick(idx)),
            Sample::Rooted(_) | Sample::Egos(_) => {
                return Err(Error::contract(format!("no relabelling action on a {}", self.kind_name())))
            }
        })
    }

    /// `T_phi(self)` for a full permutation `phi` of the positions.
    pub fn permute(&self, phi: &[usize]) -> Result<Sample> {
        let size = self.size();
        let mut seen = vec![false; size];
        if phi.len() != size || !phi.iter().all(|&i| i < size && !std::mem::replace(&mut seen[i], true)) {
            return Err(Error::contract("not a permutation of the structure's positions"));
        }
        self.select(phi)
    }

    /// Restriction at depth `m`: first `m` vertices, edges, entries or egos;
    /// for a rooted graph the ball of radius `m` about the root.
    pub fn restrict(&self, m: usize) -> Result<Sample> {
        Ok(match self {
            Sample::Vertex(g) => Sample::Vertex(g.restrict(m)?),
            Sample::EdgeSeq(g) => Sample::EdgeSeq(g.restrict(m)?),
            Sample::Sequence(s) => Sample::Sequence(s.restrict(m)?),
            Sample::Partition(p) => Sample::Partition(p.restrict(m)?),
            Sample::Marked(g) => Sample::Marked(g.restrict(m)?),
            Sample::Rooted(r) => Sample::Rooted(r.restrict(m)),
            Sample::Egos(l) => {
                if m > l.len() {
                    return Err(Error::range("m", m, 0, l.len()));
                }
                Sample::Egos(l[..m].to_vec())
            }
        })
    }

    pub fn to_text(&self) -> String {
        match self {
            Sample::Vertex(g) => io::write_vertex_graph(g),
            Sample::EdgeSeq(g) => io::write_edge_seq(g),
            Sample::Sequence(s) => io::write_label_seq(s),
            Sample::Partition(p) => io::write_label_seq(p.labels()),
            Sample::Marked(m) => {
                let mut out = format!("#k {}\n", m.k());
                for i in 1..=m.k() {
                    for j in (i + 1)..=m.k() {
                        let _ = match m.mark(i, j) {
                            Mark::Length(d) => writeln!(out, "{i} {j} {d}"),
                            Mark::Unreachable => writeln!(out, "{i} {j} inf"),
                        };
                    }
                }
                out
            }
            Sample::Rooted(r) => rooted_text(r),
            Sample::Egos(list) => {
                let mut out = String::new();
                for (t, r) in list.iter().enumerate() {
                    let _ = writeln!(out, "#ego {}", t + 1);
                    out.push_str(&rooted_text(r));
                }
                out
            }
        }
    }
}

fn rooted_text(r: &RootedGraph) -> String {
    let mut out = format!("#root {}\n#vertices", r.root());
    for v in r.vertices() {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
    out.push_str(&io::format_edge_list(r.edges().iter().copied(), None));
    out
}

/// `2^-N` where `N <= max_depth` is the largest depth through which the
/// restrictions of `x` and `y` agree.
pub fn prefix_distance(x: &Sample, y: &Sample, max_depth: usize) -> Result<f64> {
    if std::mem::discriminant(x) != std::mem::discriminant(y) {
        return Err(Error::KindMismatch {
            expected: x.kind_name(),
            found: y.kind_name(),
        });
    }
    if !matches!(x, Sample::Rooted(_)) {
        let limit = x.size().min(y.size());
        if max_depth > limit {
            return Err(Error::range("max_depth", max_depth, 0, limit));
        }
    }
    let start = if matches!(x, Sample::Vertex(_)) { 1 } else { 0 };
    for depth in start..=max_depth {
        if x.restrict(depth)?.key() != y.restrict(depth)?.key() {
            return Ok(dyadic(depth.saturating_sub(1)));
        }
    }
    Ok(dyadic(max_depth))
}

fn dyadic(n: usize) -> f64 {
    0.5f64.powi(n as i32)
}
