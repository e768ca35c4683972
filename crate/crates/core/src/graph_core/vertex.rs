use crate::error::{Error, Result};
use crate::graph_core::key::{KeyKind, PatternKey};

/// Finite simple undirected graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexGraph {
    // adj[v - 1] holds the sorted neighbours of v
    adj: Vec<Vec<u32>>,
}

impl VertexGraph {
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    /// Builds the graph from unordered pairs. Repeated pairs collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w == 0 || w as usize > n {
                    return Err(Error::range("edge endpoint", w as usize, 1, n));
                }
            }
            adj[u as usize - 1].push(v);
            adj[v as usize - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize - 1]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize - 1].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.adj[u as usize - 1].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let u = i as u32 + 1;
            list.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Induced subgraph on the first `m` vertices.
    pub fn restrict(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.n() {
            return Err(Error::range("m", m, 1, self.n()));
        }
        if m == self.n() {
            return Ok(self.clone());
        }
        let adj = self.adj[..m]
            .iter()
            .map(|list| list.iter().copied().take_while(|&v| v as usize <= m).collect())
            .collect();
        Ok(Self { adj })
    }

    /// Induced subgraph on `chosen` (1-based, distinct), vertex `chosen[i]`
    /// becoming vertex `i + 1`.
    pub fn induced(&self, chosen: &[u32]) -> Self {
        let k = chosen.len();
        let mut adj = vec![Vec::new(); k];
        for a in 0..k {
            for b in (a + 1)..k {
                if self.has_edge(chosen[a], chosen[b]) {
                    adj[a].push(b as u32 + 1);
                    adj[b].push(a as u32 + 1);
                }
            }
        }
        // pushes happen in increasing label order, so lists are already sorted
        Self { adj }
    }

    /// `[n, edge_count, u1, v1, u2, v2, ...]` over sorted edges.
    pub fn key(&self) -> PatternKey {
        let mut words = vec![self.n() as u32, self.edge_count() as u32];
        for (u, v) in self.edges() {
            words.push(u);
            words.push(v);
        }
        PatternKey::new(KeyKind::VertexGraph, words)
    }

    pub fn is_regular(&self) -> bool {
        self.adj.windows(2).all(|w| w[0].len() == w[1].len())
    }
}
