use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::montecarlo;
use crate::rng::RandomStream;
use crate::samplers::{uniform_positions, SamplerSpec};
use crate::structure::Sample;

/// Largest `k` averaged over all of `Sym(k)`.
pub const EXACT_LIMIT: usize = 7;
pub const DEFAULT_PERMUTATIONS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AverageMode {
    /// Every permutation of `Sym(k)`.
    Exact,
    /// That many independent uniform permutations.
    MonteCarlo(usize),
}

impl AverageMode {
    /// Exact up to [`EXACT_LIMIT`], otherwise [`DEFAULT_PERMUTATIONS`] draws.
    pub fn auto(k: usize) -> Self {
        if k <= EXACT_LIMIT {
            AverageMode::Exact
        } else {
            AverageMode::MonteCarlo(DEFAULT_PERMUTATIONS)
        }
    }
}

/// Visits every injective `j`-tuple of `0..k`.
fn for_each_tuple(k: usize, j: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, j: usize, used: &mut [bool], cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == j {
            f(cur);
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, j, used, cur, f);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(k, j, &mut vec![false; k], &mut Vec::with_capacity(j), f);
}

/// Symmetrized empirical average `(1/|A|) sum_{phi in A} f(T_phi(x)|_j)`.
///
/// With [`AverageMode::Exact`], `A = Sym(k)`; each size-`j` restriction is
/// determined by `phi(1..j)`, so the average runs over injective `j`-tuples,
/// each standing for `(k - j)!` permutations. Terms are summed in sorted
/// order, which makes the result exactly invariant under relabelling `x`.
pub fn empirical_average<F>(x: &Sample, j: usize, f: F, mode: AverageMode, rng: &mut RandomStream) -> Result<f64>
where
    F: Fn(&Sample) -> f64,
{
    let k = x.size();
    if j > k {
        return Err(Error::range("j", j, 0, k));
    }
    match mode {
        AverageMode::Exact => {
            if k > EXACT_LIMIT {
                return Err(Error::Resource(format!(
                    "exact symmetrization is limited to k <= {EXACT_LIMIT}, got {k}"
                )));
            }
            let mut terms = Vec::new();
            let mut err = None;
            for_each_tuple(k, j, &mut |idx| match x.select(idx) {
                Ok(s) => terms.push(f(&s)),
                Err(e) => err = Some(e),
            });
            if let Some(e) = err {
                return Err(e);
            }
            terms.sort_by(f64::total_cmp);
            Ok(terms.iter().sum::<f64>() / terms.len() as f64)
        }
        AverageMode::MonteCarlo(m) => {
            if m == 0 {
                return Err(Error::contract("at least one permutation is required"));
            }
            let mut sum = 0.0;
            for _ in 0..m {
                sum += f(&x.select(&uniform_positions(k, j, rng))?);
            }
            Ok(sum / m as f64)
        }
    }
}

/// Replicate means of the symmetrized average at each sample size.
#[derive(Clone, Debug)]
pub struct LlnTrace {
    /// `(k, mean, stderr)` in schedule order.
    pub points: Vec<(usize, f64, f64)>,
    /// Least-squares slope of log replicate spread against log `k`; near
    /// `-1/2` when the estimator concentrates. `None` if a spread is zero or
    /// fewer than two points exist.
    pub slope: Option<f64>,
}

impl LlnTrace {
    /// CSV with header `k,estimate`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,estimate\n");
        for (k, e, _) in &self.points {
            let _ = writeln!(out, "{k},{e}");
        }
        out
    }

    pub fn last(&self) -> Option<f64> {
        self.points.last().map(|p| p.1)
    }
}

/// For each `k` in `ks`: draws `S_{n->k}(y)` `reps` times, applies
/// [`empirical_average`] with `f` on size-`j` restrictions (mode chosen by
/// [`AverageMode::auto`]) and averages over replicates.
#[allow(clippy::too_many_arguments)]
pub fn lln_trace<F>(
    spec: &SamplerSpec,
    y: &Sample,
    n: usize,
    j: usize,
    f: F,
    ks: &[usize],
    reps: usize,
    seed: u64,
) -> Result<LlnTrace>
where
    F: Fn(&Sample) -> f64 + Sync,
{
    if reps == 0 {
        return Err(Error::contract("reps must be positive"));
    }
    let prepared = spec.prepare(y, n)?;
    let mut points = Vec::with_capacity(ks.len());
    let mut spreads = Vec::with_capacity(ks.len());
    for &k in ks {
        let values = montecarlo::collect(seed, reps, |rng| {
            let x = prepared.draw(k, rng)?;
            let mut perms = rng.substream(k as u64);
            empirical_average(&x, j, &f, AverageMode::auto(x.size()), &mut perms)
        })?;
        let (mean, se) = montecarlo::mean_stderr(&values);
        spreads.push((k as f64, se * (reps as f64).sqrt()));
        points.push((k, mean, se));
    }
    Ok(LlnTrace {
        points,
        slope: log_slope(&spreads),
    })
}

fn log_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(x, y)| x <= 0.0 || !(y > 0.0)) {
        return None;
    }
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>() / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::LabelSeq;
    use crate::models::examples::complete;

    fn first_is(label: u32) -> impl Fn(&Sample) -> f64 {
        move |s| match s {
            Sample::Sequence(q) => f64::from(u8::from(q.entries()[0] == label)),
            _ => 0.0,
        }
    }

    #[test]
    fn exact_examples() {
        let mut rng = RandomStream::new(0, 0);
        let aba = Sample::Sequence(LabelSeq::new(vec![1, 2, 1]).unwrap());
        let v = empirical_average(&aba, 1, first_is(1), AverageMode::Exact, &mut rng).unwrap();
        assert_eq!(v, 2.0 / 3.0);
        let tri = Sample::Vertex(complete(3));
        let edge12 = |s: &Sample| match s {
            Sample::Vertex(g) => f64::from(u8::from(g.has_edge(1, 2))),
            _ => 0.0,
        };
        assert_eq!(empirical_average(&tri, 2, edge12, AverageMode::Exact, &mut rng).unwrap(), 1.0);
        let long = Sample::Sequence(LabelSeq::new(vec![1; 8]).unwrap());
        assert!(matches!(
            empirical_average(&long, 1, first_is(1), AverageMode::Exact, &mut rng),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn monte_carlo_close_to_frequency() {
        let mut rng = RandomStream::new(4, 0);
        let x = Sample::Sequence(LabelSeq::new((0..40).map(|i| 1 + u32::from(i % 4 == 0)).collect()).unwrap());
        let v = empirical_average(&x, 1, first_is(2), AverageMode::MonteCarlo(20_000), &mut rng).unwrap();
        assert!((v - 0.25).abs() < 0.02);
    }

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = [10.0, 100.0, 1000.0].iter().map(|&k: &f64| (k, k.powf(-0.5))).collect();
        assert!((log_slope(&pts).unwrap() + 0.5).abs() < 1e-12);
        assert_eq!(log_slope(&[(1.0, 0.0), (2.0, 1.0)]), None);
    }
}
