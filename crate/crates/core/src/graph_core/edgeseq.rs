use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph_core::key::{KeyKind, PatternKey};
use crate::graph_core::labels::{is_ordered, relabel_slice};

/// Ordered sequence of edges over positive vertex labels. Repeated pairs
/// are multiedges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSeqGraph {
    edges: Vec<(u32, u32)>,
    canonical: bool,
}

impl EdgeSeqGraph {
    /// Pairs are stored with the smaller endpoint first.
    pub fn new(edges: Vec<(u32, u32)>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if a == 0 || b == 0 {
                return Err(Error::contract("vertex labels are positive"));
            }
            out.push((a.min(b), a.max(b)));
        }
        Ok(Self::from_sorted_pairs(out))
    }

    fn from_sorted_pairs(edges: Vec<(u32, u32)>) -> Self {
        let canonical = is_ordered(&flatten(&edges));
        Self { edges, canonical }
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether the flattened vertex sequence is labelled in order of appearance.
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// The first `m` edges.
    pub fn restrict(&self, m: usize) -> Result<Self> {
        if m > self.len() {
            return Err(Error::range("m", m, 0, self.len()));
        }
        Ok(Self::from_sorted_pairs(self.edges[..m].to_vec()))
    }

    /// `relabel_rprime` of the edges at the given positions, in that order.
    pub fn pick_relabeled(&self, idx: &[usize]) -> Self {
        let picked: Vec<_> = idx.iter().map(|&i| self.edges[i]).collect();
        relabel_pairs(&picked)
    }

    pub fn max_label(&self) -> u32 {
        self.edges.iter().map(|&(_, b)| b).max().unwrap_or(0)
    }

    pub fn multiplicity_counts(&self) -> BTreeMap<(u32, u32), usize> {
        let mut counts = BTreeMap::new();
        for &e in &self.edges {
            *counts.entry(e).or_insert(0) += 1;
        }
        counts
    }

    /// Degree with multiplicity: the number of endpoint slots held by each vertex.
    pub fn vertex_degrees(&self) -> BTreeMap<u32, usize> {
        let mut deg = BTreeMap::new();
        for &(a, b) in &self.edges {
            *deg.entry(a).or_insert(0) += 1;
            *deg.entry(b).or_insert(0) += 1;
        }
        deg
    }

    /// `[m, i1, j1, i2, j2, ...]`.
    pub fn key(&self) -> PatternKey {
        let mut words = Vec::with_capacity(1 + 2 * self.len());
        words.push(self.len() as u32);
        words.extend(flatten(&self.edges));
        PatternKey::new(KeyKind::EdgeSeq, words)
    }
}

fn flatten(edges: &[(u32, u32)]) -> Vec<u32> {
    edges.iter().flat_map(|&(a, b)| [a, b]).collect()
}

fn relabel_pairs(edges: &[(u32, u32)]) -> EdgeSeqGraph {
    let flat: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let r = relabel_slice(&flat);
    let out = r.chunks_exact(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
    EdgeSeqGraph {
        edges: out,
        canonical: true,
    }
}

/// Flatten, relabel by first appearance, regroup into pairs and put the
/// smaller label first. Pairs are read in the order given.
pub fn relabel_rprime(edges: &[(u32, u32)]) -> Result<EdgeSeqGraph> {
    if let Some(&(a, _)) = edges.iter().find(|&&(a, b)| a == b) {
        return Err(Error::SelfLoop(a));
    }
    Ok(relabel_pairs(edges))
}

/// Number of ordered selections of `|pattern|` distinct positions of `g`
/// whose relabelled subsequence equals `pattern`.
pub fn count_edge_patterns(g: &EdgeSeqGraph, pattern: &EdgeSeqGraph) -> Result<u64> {
    if !pattern.is_canonical() {
        return Err(Error::contract("pattern must be canonically labelled"));
    }
    if pattern.len() > g.len() {
        return Err(Error::range("pattern size", pattern.len(), 0, g.len()));
    }
    let mut search = PatternSearch {
        g: g.edges(),
        pattern: pattern.edges(),
        used: vec![false; g.len()],
        label: HashMap::new(),
        count: 0,
    };
    search.extend(0);
    Ok(search.count)
}

struct PatternSearch<'a> {
    g: &'a [(u32, u32)],
    pattern: &'a [(u32, u32)],
    used: Vec<bool>,
    label: HashMap<u32, u32>,
    count: u64,
}

impl PatternSearch<'_> {
    fn extend(&mut self, depth: usize) {
        if depth == self.pattern.len() {
            self.count += 1;
            return;
        }
        let target = self.pattern[depth];
        for p in 0..self.g.len() {
            if self.used[p] {
                continue;
            }
            let (u, v) = self.g[p];
            let mut fresh = Vec::with_capacity(2);
            let lu = self.assign(u, &mut fresh);
            let lv = self.assign(v, &mut fresh);
            if (lu.min(lv), lu.max(lv)) == target {
                self.used[p] = true;
                self.extend(depth + 1);
                self.used[p] = false;
            }
            for w in fresh {
                self.label.remove(&w);
            }
        }
    }

    fn assign(&mut self, w: u32, fresh: &mut Vec<u32>) -> u32 {
        if let Some(&l) = self.label.get(&w) {
            return l;
        }
        let l = self.label.len() as u32 + 1;
        self.label.insert(w, l);
        fresh.push(w);
        l
    }
}
