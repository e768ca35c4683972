//! Rooted graphs, balls around a vertex, and a canonical form up to
//! root-preserving isomorphism.
//!
//! Balls are tallied by isomorphism class, so their [`PatternKey`] is built
//! from a canonical relabelling: trees use the AHU encoding, other graphs an
//! individualisation-refinement search that keeps the lexicographically
//! smallest edge list. Twins (vertices with equal neighbourhoods apart from
//! each other) are swapped by an automorphism, so only one twin per cell is
//! ever individualised.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph_core::key::{KeyKind, PatternKey};
use crate::graph_core::vertex::VertexGraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedGraph {
    vertices: Vec<u32>,
    edges: Vec<(u32, u32)>,
    root: u32,
}

impl RootedGraph {
    pub fn new(vertices: Vec<u32>, edges: Vec<(u32, u32)>, root: u32) -> Result<Self> {
        let vset: BTreeSet<u32> = vertices.iter().copied().collect();
        if !vset.contains(&root) {
            return Err(Error::contract(format!("root {root} is not a vertex")));
        }
        let mut es = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !vset.contains(&a) || !vset.contains(&b) {
                return Err(Error::contract(format!("edge ({a},{b}) leaves the vertex set")));
            }
            es.insert((a.min(b), a.max(b)));
        }
        let g = Self {
            vertices: vset.into_iter().collect(),
            edges: es.into_iter().collect(),
            root,
        };
        let local = g.local();
        if local.distances().iter().any(Option::is_none) {
            return Err(Error::contract("rooted graph is not connected"));
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn local(&self) -> Local {
        let index: HashMap<u32, usize> = self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[index[&a]].push(index[&b]);
            adj[index[&b]].push(index[&a]);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Local {
            adj,
            root: index[&self.root],
        }
    }

    /// The ball of radius `r` about the root.
    pub fn restrict(&self, r: usize) -> Self {
        let local = self.local();
        let dist = local.distances();
        let keep: Vec<u32> = self
            .vertices
            .iter()
            .zip(&dist)
            .filter(|(_, d)| d.is_some_and(|d| d <= r))
            .map(|(&v, _)| v)
            .collect();
        let kept: BTreeSet<u32> = keep.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|(a, b)| kept.contains(a) && kept.contains(b))
            .collect();
        Self {
            vertices: keep,
            edges,
            root: self.root,
        }
    }

    /// Isomorphic copy on `1..=m` with root 1; equal for isomorphic inputs.
    pub fn canonical_form(&self) -> RootedGraph {
        let words = self.local().certificate();
        let m = words[0];
        let e = words[1] as usize;
        let edges = (0..e).map(|i| (words[2 + 2 * i], words[3 + 2 * i])).collect();
        RootedGraph {
            vertices: (1..=m).collect(),
            edges,
            root: 1,
        }
    }

    /// Key of the isomorphism class: `[m, e, edges...]` of the canonical form.
    pub fn key(&self) -> PatternKey {
        PatternKey::new(KeyKind::RootedBall, self.local().certificate())
    }

    pub fn is_isomorphic(&self, other: &RootedGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.key() == other.key()
    }
}

/// Induced subgraph on vertices within hop distance `r` of `center`.
pub fn ball(g: &VertexGraph, center: u32, r: usize) -> Result<RootedGraph> {
    if center == 0 || center as usize > g.n() {
        return Err(Error::range("center", center as usize, 1, g.n()));
    }
    let mut dist: HashMap<u32, usize> = HashMap::new();
    dist.insert(center, 0);
    let mut queue = VecDeque::from([center]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == r {
            continue;
        }
        for &w in g.neighbors(v) {
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(d + 1);
                queue.push_back(w);
            }
        }
    }
    let mut vertices: Vec<u32> = dist.keys().copied().collect();
    vertices.sort_unstable();
    let mut edges = Vec::new();
    for &v in &vertices {
        for &w in g.neighbors(v) {
            if w > v && dist.contains_key(&w) {
                edges.push((v, w));
            }
        }
    }
    Ok(RootedGraph {
        vertices,
        edges,
        root: center,
    })
}

struct Local {
    adj: Vec<Vec<usize>>,
    root: usize,
}

impl Local {
    fn distances(&self) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[self.root] = Some(0);
        let mut queue = VecDeque::from([self.root]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn certificate(&self) -> Vec<u32> {
        let m = self.adj.len();
        let labels = if self.edge_count() + 1 == m {
            self.tree_labels()
        } else {
            self.search_labels()
        };
        encode(&self.adj, &labels)
    }

    /// Preorder of the AHU-sorted tree.
    fn tree_labels(&self) -> Vec<usize> {
        let m = self.adj.len();
        let mut parent = vec![usize::MAX; m];
        let mut order = Vec::with_capacity(m);
        let mut stack = vec![self.root];
        parent[self.root] = self.root;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &self.adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &v in &order {
            if v != self.root {
                children[parent[v]].push(v);
            }
        }
        // bottom-up: canonical strings, children sorted by them
        let mut code: Vec<String> = vec![String::new(); m];
        for &v in order.iter().rev() {
            children[v].sort_by(|&a, &b| code[a].cmp(&code[b]));
            let mut s = String::from("(");
            for &c in &children[v] {
                s.push_str(&code[c]);
            }
            s.push(')');
            code[v] = s;
        }
        let mut labels = vec![0; m];
        let mut next = 0;
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            labels[v] = next;
            next += 1;
            for &c in children[v].iter().rev() {
                stack.push(c);
            }
        }
        labels
    }

    fn search_labels(&self) -> Vec<usize> {
        let m = self.adj.len();
        let rest: Vec<usize> = (0..m).filter(|&v| v != self.root).collect();
        let mut cells = vec![vec![self.root]];
        if !rest.is_empty() {
            cells.push(rest);
        }
        let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
        self.search(cells, &mut best);
        best.expect("search visits at least one leaf").1
    }

    fn search(&self, mut cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u32>, Vec<usize>)>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let mut labels = vec![0; self.adj.len()];
            for (i, c) in cells.iter().enumerate() {
                labels[c[0]] = i;
            }
            let cert = encode(&self.adj, &labels);
            if best.as_ref().is_none_or(|(b, _)| cert < *b) {
                *best = Some((cert, labels));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.search(next, best);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let nu = self.adj[u].iter().filter(|&&w| w != v);
        let nv = self.adj[v].iter().filter(|&&w| w != u);
        nu.eq(nv)
    }

    /// Split cells by the multiset of neighbour cell indices until stable.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let m = self.adj.len();
        let mut cell_of = vec![0usize; m];
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for c in cells.iter() {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut sigs: Vec<(Vec<usize>, usize)> = c
                    .iter()
                    .map(|&v| {
                        let mut s: Vec<usize> = self.adj[v].iter().map(|&w| cell_of[w]).collect();
                        s.sort_unstable();
                        (s, v)
                    })
                    .collect();
                sigs.sort();
                let mut group = vec![sigs[0].1];
                for w in sigs.windows(2) {
                    if w[0].0 == w[1].0 {
                        group.push(w[1].1);
                    } else {
                        next.push(std::mem::take(&mut group));
                        group.push(w[1].1);
                    }
                }
                next.push(group);
            }
            let done = next.len() == cells.len();
            *cells = next;
            if done {
                return;
            }
        }
    }
}

fn encode(adj: &[Vec<usize>], labels: &[usize]) -> Vec<u32> {
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (v, list) in adj.iter().enumerate() {
        for &w in list {
            let (a, b) = (labels[v] as u32 + 1, labels[w] as u32 + 1);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    let mut words = vec![adj.len() as u32, edges.len() as u32];
    for (a, b) in edges {
        words.push(a);
        words.push(b);
    }
    words
}
