use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph_core::{relabel_rprime, EdgeSeqGraph};

const TIE: f64 = 1e-12;

/// Target limiting relative multiplicities of finitely many pairs; the
/// residual mass goes to edges that never repeat.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicitySpec {
    targets: BTreeMap<(u32, u32), f64>,
}

impl MultiplicitySpec {
    pub fn new<I>(targets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((u32, u32), f64)>,
    {
        let mut map = BTreeMap::new();
        for ((i, j), m) in targets {
            if i == 0 || i >= j {
                return Err(Error::contract(format!("pair ({i},{j}) is not of the form 1 <= i < j")));
            }
            if !(m > 0.0) {
                return Err(Error::contract(format!("target for ({i},{j}) must be positive")));
            }
            if map.insert((i, j), m).is_some() {
                return Err(Error::contract(format!("pair ({i},{j}) listed twice")));
            }
        }
        let total: f64 = map.values().sum();
        if total > 1.0 + TIE {
            return Err(Error::contract(format!("targets sum to {total} > 1")));
        }
        Ok(Self { targets: map })
    }

    pub fn targets(&self) -> &BTreeMap<(u32, u32), f64> {
        &self.targets
    }

    pub fn residual(&self) -> f64 {
        (1.0 - self.targets.values().sum::<f64>()).max(0.0)
    }
}

/// Deterministic length-`n` edge sequence: at each position the pair (or the
/// residual) with the largest deficit `target * t - count` is emitted, ties
/// going to specified pairs in key order and then to the residual. Residual
/// slots are fresh edges on unused labels. The result is relabelled into
/// canonical form.
pub fn multigraph_from_multiplicities(spec: &MultiplicitySpec, n: usize) -> Result<EdgeSeqGraph> {
    if n == 0 {
        return Err(Error::range("n", 0, 1, usize::MAX));
    }
    let pairs: Vec<((u32, u32), f64)> = spec.targets.iter().map(|(&p, &m)| (p, m)).collect();
    let residual = spec.residual();
    let mut counts = vec![0usize; pairs.len()];
    let mut fresh_count = 0usize;
    let mut next_label = pairs.iter().map(|&((_, j), _)| j).max().unwrap_or(0) + 1;
    let mut out = Vec::with_capacity(n);
    for t in 1..=n {
        let mut best: Option<usize> = None;
        let mut best_deficit = f64::NEG_INFINITY;
        for (i, &(_, m)) in pairs.iter().enumerate() {
            let d = m * t as f64 - counts[i] as f64;
            if d > best_deficit + TIE {
                best = Some(i);
                best_deficit = d;
            }
        }
        let d_res = residual * t as f64 - fresh_count as f64;
        if residual > 0.0 && d_res > best_deficit + TIE {
            best = None;
        }
        match best {
            Some(i) => {
                counts[i] += 1;
                out.push(pairs[i].0);
            }
            None => {
                fresh_count += 1;
                out.push((next_label, next_label + 1));
                next_label += 2;
            }
        }
    }
    relabel_rprime(&out)
}
