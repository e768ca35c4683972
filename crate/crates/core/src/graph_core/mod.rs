//! Finite structures, restriction maps, relabelling maps and canonical keys.
//!
//! Vertex labels are 1-based everywhere.

mod edgeseq;
pub mod io;
mod key;
mod labels;
mod marked;
mod rooted;
mod vertex;

use std::collections::BTreeMap;

pub use edgeseq::{count_edge_patterns, relabel_rprime, EdgeSeqGraph};
pub use key::{KeyKind, PatternKey};
pub use labels::{is_ordered, relabel_r, LabelSeq, Partition};
pub use marked::{shortest_path_marks, Mark, MarkedCompleteGraph};
pub use rooted::{ball, RootedGraph};
pub use vertex::VertexGraph;

use crate::error::Result;

pub fn restrict_vertices(g: &VertexGraph, m: usize) -> Result<VertexGraph> {
    g.restrict(m)
}

pub fn restrict_edges(g: &EdgeSeqGraph, m: usize) -> Result<EdgeSeqGraph> {
    g.restrict(m)
}

pub fn degrees(g: &VertexGraph) -> Vec<usize> {
    g.degrees()
}

pub fn multiplicity_counts(g: &EdgeSeqGraph) -> BTreeMap<(u32, u32), usize> {
    g.multiplicity_counts()
}
