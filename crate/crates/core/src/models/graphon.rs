use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph_core::VertexGraph;
use crate::rng::RandomStream;
use crate::samplers::RhoSchedule;

const COIN_STREAM: u64 = 1;
const MAX_PATTERN: usize = 5;

/// Symmetric block-constant function on the unit square.
#[derive(Clone, Debug, PartialEq)]
pub struct StepGraphon {
    boundaries: Vec<f64>,
    values: Vec<Vec<f64>>,
}

impl StepGraphon {
    /// `boundaries` runs from 0 to 1 strictly increasing; `values` is a
    /// symmetric `B x B` matrix in [0, 1].
    pub fn new(boundaries: Vec<f64>, values: Vec<Vec<f64>>) -> Result<Self> {
        let b = values.len();
        if b == 0 {
            return Err(Error::contract("a step graphon needs at least one block"));
        }
        if boundaries.len() != b + 1 {
            return Err(Error::contract(format!("{} boundaries for {b} blocks", boundaries.len())));
        }
        if boundaries[0] != 0.0 || boundaries[b] != 1.0 || !boundaries.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::contract("boundaries must increase strictly from 0 to 1"));
        }
        for (i, row) in values.iter().enumerate() {
            if row.len() != b {
                return Err(Error::contract(format!("row {} has {} entries, expected {b}", i + 1, row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::contract(format!("value {v} at ({}, {}) is not in [0,1]", i + 1, j + 1)));
                }
                if v != values[j][i] {
                    return Err(Error::contract(format!("values are not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { boundaries, values })
    }

    pub fn constant(p: f64) -> Result<Self> {
        Self::new(vec![0.0, 1.0], vec![vec![p]])
    }

    /// Blocks of equal width.
    pub fn equal_blocks(values: Vec<Vec<f64>>) -> Result<Self> {
        let b = values.len();
        let boundaries = (0..=b).map(|i| i as f64 / b.max(1) as f64).collect();
        Self::new(boundaries, values)
    }

    pub fn blocks(&self) -> usize {
        self.values.len()
    }

    pub fn boundaries(&self) -> &[f64] {
        &self.boundaries
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    /// Width of block `a` (0-based).
    pub fn mass(&self, a: usize) -> f64 {
        self.boundaries[a + 1] - self.boundaries[a]
    }

    /// Block containing `u` in [0, 1).
    pub fn block_of(&self, u: f64) -> usize {
        let b = self.blocks();
        self.boundaries[1..b].partition_point(|&x| x <= u)
    }

    pub fn value(&self, u: f64, v: f64) -> f64 {
        self.values[self.block_of(u)][self.block_of(v)]
    }

    /// Line 1 `B`, line 2 the `B + 1` boundaries, then `B` rows of `B` values,
    /// whitespace separated.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| Error::parse(0, format!("missing {what}")))
        };
        let nums = |(i, l): (usize, &str)| -> Result<Vec<f64>> {
            l.split_whitespace()
                .map(|t| t.parse::<f64>().map_err(|e| Error::parse(i + 1, format!("`{t}`: {e}"))))
                .collect()
        };
        let (i, first) = next("block count")?;
        let b: usize = first
            .trim()
            .parse()
            .map_err(|e| Error::parse(i + 1, format!("block count `{first}`: {e}")))?;
        let boundaries = nums(next("boundaries")?)?;
        let mut values = Vec::with_capacity(b);
        for _ in 0..b {
            values.push(nums(next("value row")?)?);
        }
        if let Some((i, _)) = lines.next() {
            return Err(Error::parse(i + 1, "trailing data after the value matrix"));
        }
        Self::new(boundaries, values)
    }

    pub fn to_text(&self) -> String {
        let join = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = format!("{}\n{}\n", self.blocks(), join(&self.boundaries));
        for row in &self.values {
            let _ = writeln!(out, "{}", join(row));
        }
        out
    }
}

fn pair_index(a: usize, b: usize) -> u64 {
    // 0-based a < b
    (b * (b - 1) / 2 + a) as u64
}

fn draw_thinned(w: &StepGraphon, k: usize, scale: f64, rng: &mut RandomStream) -> VertexGraph {
    let marks: Vec<usize> = (0..k).map(|_| w.block_of(rng.uniform())).collect();
    let coins = rng.substream(COIN_STREAM);
    let mut edges = Vec::new();
    for b in 1..k {
        for a in 0..b {
            if coins.uniform_at(pair_index(a, b)) < scale * w.values[marks[a]][marks[b]] {
                edges.push((a as u32 + 1, b as u32 + 1));
            }
        }
    }
    VertexGraph::new(k, edges).expect("valid pairs")
}

/// `k` vertices with uniform marks `U_i`; `{i, j}` is an edge iff
/// `U_ij < w(U_i, U_j)`. Draws at different `k` from one stream are nested.
pub fn graphon_draw(w: &StepGraphon, k: usize, rng: &mut RandomStream) -> VertexGraph {
    draw_thinned(w, k, 1.0, rng)
}

/// As [`graphon_draw`] with threshold `rho(k) w(U_i, U_j)`.
pub fn sparsified_graphon_draw(w: &StepGraphon, rho: &RhoSchedule, k: usize, rng: &mut RandomStream) -> VertexGraph {
    draw_thinned(w, k, rho.value(k), rng)
}

/// Probability that `graphon_draw(w, j)` equals `pattern` as a labelled graph,
/// summed over the `B^j` block assignments.
pub fn graphon_pattern_density(w: &StepGraphon, pattern: &VertexGraph) -> Result<f64> {
    let j = pattern.n();
    if j > MAX_PATTERN {
        return Err(Error::Resource(format!(
            "exact pattern density is limited to {MAX_PATTERN} vertices, got {j}"
        )));
    }
    let b = w.blocks();
    let mut assign = vec![0usize; j];
    let mut total = 0.0;
    loop {
        let mut p: f64 = assign.iter().map(|&a| w.mass(a)).product();
        for y in 1..j {
            for x in 0..y {
                let v = w.values[assign[x]][assign[y]];
                p *= if pattern.has_edge(x as u32 + 1, y as u32 + 1) { v } else { 1.0 - v };
            }
        }
        total += p;
        // odometer over assignments
        let mut i = 0;
        loop {
            if i == j {
                return Ok(total);
            }
            assign[i] += 1;
            if assign[i] < b {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Degree-sorted block fit: vertices ordered by degree (descending, ties by
/// label) are split into `blocks` groups of near-equal size and each block
/// value is the observed edge density between (or within) groups.
pub fn fit_block_graphon(g: &VertexGraph, blocks: usize) -> Result<StepGraphon> {
    if blocks < 1 {
        return Err(Error::contract("at least one block is required"));
    }
    let n = g.n();
    if blocks > n {
        return Err(Error::range("blocks", blocks, 1, n));
    }
    let mut order: Vec<u32> = (1..=n as u32).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut group = vec![0usize; n + 1];
    let mut sizes = vec![0usize; blocks];
    let (base, extra) = (n / blocks, n % blocks);
    let mut pos = 0;
    for (a, size) in sizes.iter_mut().enumerate() {
        *size = base + usize::from(a < extra);
        for &v in &order[pos..pos + *size] {
            group[v as usize] = a;
        }
        pos += *size;
    }
    let mut count = vec![vec![0usize; blocks]; blocks];
    for (u, v) in g.edges() {
        let (a, b) = (group[u as usize], group[v as usize]);
        count[a][b] += 1;
        if a != b {
            count[b][a] += 1;
        }
    }
    let mut values = vec![vec![0.0; blocks]; blocks];
    for a in 0..blocks {
        for b in 0..blocks {
            let slots = if a == b {
                sizes[a] * sizes[a].saturating_sub(1) / 2
            } else {
                sizes[a] * sizes[b]
            };
            values[a][b] = if slots == 0 { 0.0 } else { count[a][b] as f64 / slots as f64 };
        }
    }
    StepGraphon::equal_blocks(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_block() -> StepGraphon {
        StepGraphon::equal_blocks(vec![vec![0.8, 0.1], vec![0.1, 0.6]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(StepGraphon::equal_blocks(vec![vec![0.2, 0.3], vec![0.1, 0.5]]).is_err());
        assert!(StepGraphon::constant(1.5).is_err());
        assert!(StepGraphon::new(vec![0.0, 0.7, 0.6, 1.0], vec![vec![0.0; 3]; 3]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let w = two_block();
        assert_eq!(StepGraphon::parse(&w.to_text()).unwrap(), w);
        assert!(StepGraphon::parse("2\n0 0.5 1\n0.8 0.1\n0.2 0.6\n").is_err());
    }

    #[test]
    fn block_lookup() {
        let w = StepGraphon::new(vec![0.0, 0.25, 1.0], vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(w.block_of(0.0), 0);
        assert_eq!(w.block_of(0.2499), 0);
        assert_eq!(w.block_of(0.25), 1);
        assert_eq!(w.block_of(0.9999), 1);
    }

    #[test]
    fn exact_densities() {
        let edge = VertexGraph::new(2, [(1, 2)]).unwrap();
        let tri = VertexGraph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        let c = StepGraphon::constant(0.3).unwrap();
        assert!((graphon_pattern_density(&c, &edge).unwrap() - 0.3).abs() < 1e-15);
        assert!((graphon_pattern_density(&c, &tri).unwrap() - 0.027).abs() < 1e-15);
        assert!((graphon_pattern_density(&two_block(), &edge).unwrap() - 0.4).abs() < 1e-15);
        assert!(matches!(graphon_pattern_density(&c, &VertexGraph::empty(6)), Err(Error::Resource(_))));
    }

    #[test]
    fn extreme_draws() {
        let mut rng = RandomStream::new(1, 0);
        assert_eq!(graphon_draw(&StepGraphon::constant(1.0).unwrap(), 6, &mut rng).edge_count(), 15);
        let rho = RhoSchedule::Constant(0.0);
        assert_eq!(sparsified_graphon_draw(&StepGraphon::constant(1.0).unwrap(), &rho, 6, &mut rng).edge_count(), 0);
    }

    #[test]
    fn draws_are_nested() {
        let w = two_block();
        for seed in 0..20 {
            let big = graphon_draw(&w, 9, &mut RandomStream::new(seed, 0));
            let small = graphon_draw(&w, 5, &mut RandomStream::new(seed, 0));
            assert_eq!(big.restrict(5).unwrap(), small);
        }
    }

    #[test]
    fn block_fit_extremes() {
        let k5 = VertexGraph::new(5, (1..=5u32).flat_map(|a| (a + 1..=5).map(move |b| (a, b)))).unwrap();
        let w = fit_block_graphon(&k5, 2).unwrap();
        assert!(w.values().iter().flatten().all(|&v| v == 1.0));
        let w = fit_block_graphon(&VertexGraph::empty(5), 3).unwrap();
        assert!(w.values().iter().flatten().all(|&v| v == 0.0));
        assert!(fit_block_graphon(&k5, 0).is_err());
        assert!(fit_block_graphon(&k5, 6).is_err());
    }
}
