//! Exact output laws by enumeration, written independently of the sampler
//! code: selections, induced subgraphs, relabelling and balls are all
//! recomputed here from first principles.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_rational::Ratio;
use subsample::graph_core::{EdgeSeqGraph, LabelSeq, Mark, MarkedCompleteGraph, Partition, PatternKey, RootedGraph};
use subsample::{PatternTally, Sample, VertexGraph};

pub type Q = Ratio<i128>;
pub type Law = BTreeMap<PatternKey, Q>;

pub fn q(a: i128, b: i128) -> Q {
    Q::new(a, b)
}

pub fn to_f64(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Every injective `k`-tuple of `0..n`.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, k, &mut cur, &mut out);
    out
}

fn add(law: &mut Law, key: PatternKey, p: Q) {
    if p == q(0, 1) {
        return;
    }
    *law.entry(key).or_insert_with(|| q(0, 1)) += p;
}

fn uniform_law<F: Fn(&[usize]) -> PatternKey>(n: usize, k: usize, f: F) -> Law {
    let all = tuples(n, k);
    let p = q(1, all.len() as i128);
    let mut law = Law::new();
    for t in &all {
        add(&mut law, f(t), p);
    }
    law
}

fn adjacency(y: &VertexGraph, n: usize) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for (u, v) in y.edges() {
        let (u, v) = (u as usize - 1, v as usize - 1);
        if u < n && v < n {
            a[u][v] = true;
            a[v][u] = true;
        }
    }
    a
}

fn graph_on(adj: &[Vec<bool>], chosen: &[usize]) -> VertexGraph {
    let mut edges = Vec::new();
    for b in 0..chosen.len() {
        for a in 0..b {
            if adj[chosen[a]][chosen[b]] {
                edges.push((a as u32 + 1, b as u32 + 1));
            }
        }
    }
    VertexGraph::new(chosen.len(), edges).unwrap()
}

pub fn uniform_vertex(y: &VertexGraph, n: usize, k: usize) -> Law {
    let adj = adjacency(y, n);
    uniform_law(n, k, |t| graph_on(&adj, t).key())
}

pub fn sparsified(y: &VertexGraph, n: usize, k: usize, rho: Q) -> Law {
    let adj = adjacency(y, n);
    let all = tuples(n, k);
    let sel = q(1, all.len() as i128);
    let mut law = Law::new();
    for t in &all {
        let g = graph_on(&adj, t);
        let present: Vec<(u32, u32)> = g.edges().collect();
        for mask in 0u32..(1 << present.len()) {
            let mut p = sel;
            let mut kept = Vec::new();
            for (i, &e) in present.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    p *= rho;
                    kept.push(e);
                } else {
                    p *= q(1, 1) - rho;
                }
            }
            add(&mut law, VertexGraph::new(k, kept).unwrap().key(), p);
        }
    }
    law
}

pub fn p_sample(y: &VertexGraph, n: usize, p: Q) -> Law {
    let adj = adjacency(y, n);
    let mut law = Law::new();
    for mask in 0u32..(1 << n) {
        let kept: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let live: Vec<usize> = kept
            .iter()
            .copied()
            .filter(|&v| kept.iter().any(|&w| adj[v][w]))
            .collect();
        let mut w = q(1, 1);
        for v in 0..n {
            w *= if mask >> v & 1 == 1 { p } else { q(1, 1) - p };
        }
        add(&mut law, graph_on(&adj, &live).key(), w);
    }
    law
}

/// Successive draws proportional to degree in `y|_n` among the remaining
/// vertices, uniform when the remaining weight is zero.
pub fn degree_biased(y: &VertexGraph, n: usize, k: usize) -> Law {
    let adj = adjacency(y, n);
    let deg: Vec<i128> = (0..n).map(|v| adj[v].iter().filter(|&&b| b).count() as i128).collect();
    let mut law = Law::new();
    fn rec(adj: &[Vec<bool>], deg: &[i128], k: usize, cur: &mut Vec<usize>, p: Q, law: &mut Law) {
        if cur.len() == k {
            add(law, graph_on(adj, cur).key(), p);
            return;
        }
        let rest: Vec<usize> = (0..deg.len()).filter(|v| !cur.contains(v)).collect();
        let total: i128 = rest.iter().map(|&v| deg[v]).sum();
        for &v in &rest {
            let pv = if total == 0 { q(1, rest.len() as i128) } else { q(deg[v], total) };
            if pv == q(0, 1) {
                continue;
            }
            cur.push(v);
            rec(adj, deg, k, cur, p * pv, law);
            cur.pop();
        }
    }
    rec(&adj, &deg, k, &mut Vec::new(), q(1, 1), &mut law);
    law
}

fn distances(adj: &[Vec<bool>], s: usize) -> Vec<Option<u32>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for w in 0..adj.len() {
            if adj[v][w] && d[w].is_none() {
                d[w] = Some(d[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    d
}

pub fn shortest_path(y: &VertexGraph, n: usize, k: usize) -> Law {
    let adj = adjacency(y, n);
    uniform_law(n, k, |t| {
        let mut marks = Vec::new();
        for a in 0..t.len() {
            let d = distances(&adj, t[a]);
            for &b in &t[a + 1..] {
                marks.push(d[b].map_or(Mark::Unreachable, Mark::Length));
            }
        }
        MarkedCompleteGraph::new(t.len(), marks).unwrap().key()
    })
}

/// Labels in order of first appearance.
pub fn relabel(s: &[u32]) -> Vec<u32> {
    let mut seen: Vec<u32> = Vec::new();
    s.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(i) => i as u32 + 1,
            None => {
                seen.push(*x);
                seen.len() as u32
            }
        })
        .collect()
}

pub fn sequence(y: &LabelSeq, n: usize, k: usize) -> Law {
    uniform_law(n, k, |t| {
        Sample::Sequence(LabelSeq::new(t.iter().map(|&i| y.entries()[i]).collect()).unwrap()).key()
    })
}

pub fn partition(y: &Partition, n: usize, k: usize) -> Law {
    uniform_law(n, k, |t| {
        let picked: Vec<u32> = t.iter().map(|&i| y.labels().entries()[i]).collect();
        Sample::Partition(Partition::from_labels(relabel(&picked)).unwrap()).key()
    })
}

pub fn relabel_edges(edges: &[(u32, u32)]) -> EdgeSeqGraph {
    let flat: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let r = relabel(&flat);
    EdgeSeqGraph::new(r.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect()).unwrap()
}

pub fn edges(y: &EdgeSeqGraph, n: usize, k: usize) -> Law {
    uniform_law(n, k, |t| {
        let picked: Vec<(u32, u32)> = t.iter().map(|&i| y.edges()[i]).collect();
        relabel_edges(&picked).key()
    })
}

pub fn own_ball(adj: &[Vec<bool>], center: usize, r: u32) -> RootedGraph {
    let d = distances(adj, center);
    let keep: Vec<usize> = (0..adj.len()).filter(|&v| d[v].is_some_and(|x| x <= r)).collect();
    let set: BTreeSet<usize> = keep.iter().copied().collect();
    let mut e = Vec::new();
    for &a in &keep {
        for &b in &keep {
            if a < b && adj[a][b] && set.contains(&b) {
                e.push((a as u32 + 1, b as u32 + 1));
            }
        }
    }
    RootedGraph::new(keep.iter().map(|&v| v as u32 + 1).collect(), e, center as u32 + 1).unwrap()
}

pub fn ego(y: &VertexGraph, n: usize, k: usize) -> Law {
    let adj = adjacency(y, n);
    uniform_law(n, k, |t| Sample::Egos(t.iter().map(|&v| own_ball(&adj, v, 1)).collect()).key())
}

pub fn bs_root(y: &VertexGraph, n: usize, radius: usize) -> Law {
    let adj = adjacency(y, n);
    uniform_law(n, 1, |t| own_ball(&adj, t[0], radius as u32).key())
}

/// Ball law about a root drawn from `weights` and about one uniform
/// neighbour step from it.
pub fn involution_laws(weights: &[Q], y: &VertexGraph, n: usize, radius: usize) -> (Law, Law) {
    let adj = adjacency(y, n);
    let total: Q = weights.iter().copied().sum();
    let (mut at_root, mut stepped) = (Law::new(), Law::new());
    for v in 0..n {
        if weights[v] == q(0, 1) {
            continue;
        }
        let pv = weights[v] / total;
        add(&mut at_root, own_ball(&adj, v, radius as u32).key(), pv);
        let nb: Vec<usize> = (0..n).filter(|&w| adj[v][w]).collect();
        for &w in &nb {
            add(&mut stepped, own_ball(&adj, w, radius as u32).key(), pv / q(nb.len() as i128, 1));
        }
    }
    (at_root, stepped)
}

pub fn tv(a: &Law, b: &Law) -> Q {
    let keys: BTreeSet<&PatternKey> = a.keys().chain(b.keys()).collect();
    let zero = q(0, 1);
    let mut s = zero;
    for k in keys {
        let d = *a.get(k).unwrap_or(&zero) - *b.get(k).unwrap_or(&zero);
        s += if d < zero { -d } else { d };
    }
    s / q(2, 1)
}

pub fn total(law: &Law) -> Q {
    law.values().copied().sum()
}

/// Patterns whose empirical density sits more than `z` standard errors from
/// the exact law (standard error from the exact probability), including
/// observed patterns outside the support.
pub fn outliers(law: &Law, tally: &PatternTally, z: f64) -> Vec<String> {
    let reps = tally.total() as f64;
    let mut bad = Vec::new();
    for (key, &p) in law {
        let p = to_f64(p);
        let se = (p * (1.0 - p) / reps).sqrt();
        let got = tally.density(key);
        if (got - p).abs() > z * se + 1e-12 {
            bad.push(format!("{key}: exact {p} observed {got} (se {se})"));
        }
    }
    for (key, c) in tally.iter() {
        if !law.contains_key(key) {
            bad.push(format!("{key}: impossible pattern observed {c} times"));
        }
    }
    bad
}
