//! Fixed inputs with known limiting behaviour.

use crate::graph_core::{EdgeSeqGraph, LabelSeq, VertexGraph};

/// Hub 1 joined to leaves `2..=n`.
pub fn star_vertex(n: usize) -> VertexGraph {
    VertexGraph::new(n, (2..=n as u32).map(|v| (1, v))).expect("valid star")
}

/// `((1,2), (1,3), .., (1,n+1))`.
pub fn star_edgeseq(n: usize) -> EdgeSeqGraph {
    EdgeSeqGraph::new((2..=n as u32 + 1).map(|v| (1, v)).collect()).expect("valid star")
}

/// `((1,2), (3,4), ..)` with `n` edges.
pub fn matching_edgeseq(n: usize) -> EdgeSeqGraph {
    EdgeSeqGraph::new((0..n as u32).map(|i| (2 * i + 1, 2 * i + 2)).collect()).expect("valid matching")
}

/// Path `1-2` with two more leaves on vertex 2.
pub fn y4() -> VertexGraph {
    VertexGraph::new(4, [(1, 2), (2, 3), (2, 4)]).expect("valid graph")
}

/// `n` hub edges: odd positions repeat `(1,2)`, even positions are the
/// distinct edges `(1,3), (1,4), ..`.
pub fn half_multiplicity(n: usize) -> EdgeSeqGraph {
    let edges = (0..n as u32)
        .map(|i| if i % 2 == 0 { (1, 2) } else { (1, 3 + i / 2) })
        .collect();
    EdgeSeqGraph::new(edges).expect("valid multigraph")
}

/// `(1, 2, 1, 2, ..)` of length `n`.
pub fn alternating_seq(n: usize) -> LabelSeq {
    LabelSeq::new((0..n as u32).map(|i| i % 2 + 1).collect()).expect("positive labels")
}

/// `(1, 2, .., n)`.
pub fn all_singletons_seq(n: usize) -> LabelSeq {
    LabelSeq::new((1..=n as u32).collect()).expect("positive labels")
}

pub fn cycle(n: usize) -> VertexGraph {
    VertexGraph::new(n, (1..=n as u32).map(|i| (i, i % n as u32 + 1))).expect("cycle needs n >= 3")
}

pub fn complete(n: usize) -> VertexGraph {
    let n32 = n as u32;
    VertexGraph::new(n, (1..=n32).flat_map(|a| (a + 1..=n32).map(move |b| (a, b)))).expect("valid graph")
}
