use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph_core::key::{KeyKind, PatternKey};
use crate::graph_core::vertex::VertexGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Length(u32),
    Unreachable,
}

impl Mark {
    fn word(self) -> u32 {
        match self {
            Mark::Length(d) => d,
            Mark::Unreachable => 0,
        }
    }
}

/// Complete graph on `1..=k` with one mark per unordered pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedCompleteGraph {
    k: usize,
    // pairs in order (1,2), (1,3), .., (1,k), (2,3), ..
    marks: Vec<Mark>,
}

fn pair_index(k: usize, i: usize, j: usize) -> usize {
    // 0-based i < j
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

impl MarkedCompleteGraph {
    pub fn new(k: usize, marks: Vec<Mark>) -> Result<Self> {
        if marks.len() != k * k.saturating_sub(1) / 2 {
            return Err(Error::contract(format!("{} marks given for {k} vertices", marks.len())));
        }
        if marks.contains(&Mark::Length(0)) {
            return Err(Error::contract("path lengths between distinct vertices are at least 1"));
        }
        Ok(Self { k, marks })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Mark of the pair `{i, j}`, 1-based, `i != j`.
    pub fn mark(&self, i: usize, j: usize) -> Mark {
        let (a, b) = (i.min(j) - 1, i.max(j) - 1);
        self.marks[pair_index(self.k, a, b)]
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    /// Vertex `idx[t] + 1` becomes vertex `t + 1`.
    pub fn pick(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut marks = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for a in 0..k {
            for b in (a + 1)..k {
                marks.push(self.mark(idx[a] + 1, idx[b] + 1));
            }
        }
        Self { k, marks }
    }

    pub fn restrict(&self, m: usize) -> Result<Self> {
        if m > self.k {
            return Err(Error::range("m", m, 0, self.k));
        }
        Ok(self.pick(&(0..m).collect::<Vec<_>>()))
    }

    /// `[k, marks...]` with 0 standing for unreachable.
    pub fn key(&self) -> PatternKey {
        let mut words = vec![self.k as u32];
        words.extend(self.marks.iter().map(|m| m.word()));
        PatternKey::new(KeyKind::MarkedComplete, words)
    }
}

/// Hop distances in `g` between each pair of `chosen` vertices, which take
/// labels `1..=k` in the order given.
pub fn shortest_path_marks(g: &VertexGraph, chosen: &[u32]) -> Result<MarkedCompleteGraph> {
    let mut seen = HashSet::new();
    for &v in chosen {
        if v == 0 || v as usize > g.n() {
            return Err(Error::range("chosen vertex", v as usize, 1, g.n()));
        }
        if !seen.insert(v) {
            return Err(Error::contract(format!("vertex {v} chosen twice")));
        }
    }
    let k = chosen.len();
    let mut marks = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    let mut dist = vec![u32::MAX; g.n()];
    let mut queue = VecDeque::new();
    for a in 0..k {
        // BFS from chosen[a], stopping once every later target is reached
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        let src = chosen[a];
        dist[src as usize - 1] = 0;
        queue.clear();
        queue.push_back(src);
        let mut remaining: usize = chosen[a + 1..].len();
        let targets: HashSet<u32> = chosen[a + 1..].iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            if remaining == 0 {
                break;
            }
            let d = dist[v as usize - 1];
            for &w in g.neighbors(v) {
                if dist[w as usize - 1] == u32::MAX {
                    dist[w as usize - 1] = d + 1;
                    if targets.contains(&w) {
                        remaining -= 1;
                    }
                    queue.push_back(w);
                }
            }
        }
        for &b in &chosen[a + 1..] {
            let d = dist[b as usize - 1];
            marks.push(if d == u32::MAX { Mark::Unreachable } else { Mark::Length(d) });
        }
    }
    Ok(MarkedCompleteGraph { k, marks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> VertexGraph {
        VertexGraph::new(n as usize, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    #[test]
    fn cycle_distance() {
        let m = shortest_path_marks(&cycle(10), &[1, 6]).unwrap();
        assert_eq!(m.mark(1, 2), Mark::Length(5));
    }

    #[test]
    fn adjacent_and_isolated() {
        let g = VertexGraph::new(3, [(1, 2)]).unwrap();
        let m = shortest_path_marks(&g, &[2, 1, 3]).unwrap();
        assert_eq!(m.mark(1, 2), Mark::Length(1));
        assert_eq!(m.mark(1, 3), Mark::Unreachable);
        assert_eq!(m.mark(3, 2), Mark::Unreachable);
    }

    #[test]
    fn duplicates_rejected() {
        assert!(matches!(shortest_path_marks(&cycle(5), &[1, 1]), Err(Error::Contract(_))));
    }

    #[test]
    fn pick_reorders() {
        let m = shortest_path_marks(&cycle(10), &[1, 2, 4]).unwrap();
        let p = m.pick(&[2, 0]);
        assert_eq!(p.k(), 2);
        assert_eq!(p.mark(1, 2), Mark::Length(3));
        assert_eq!(m.restrict(2).unwrap().mark(1, 2), Mark::Length(1));
    }
}
