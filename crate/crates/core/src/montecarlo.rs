//! Replicate-parallel Monte Carlo driver.
//!
//! Replicate `r` draws from `RandomStream::new(seed, r)`. Results are merged
//! in replicate order or by exact integer addition, so every output is
//! independent of the number of worker threads.

use rayon::prelude::*;

use crate::error::Result;
use crate::estimators::PatternTally;
use crate::graph_core::PatternKey;
use crate::rng::RandomStream;

/// Tally of `f` over `reps` independent replicates.
pub fn tally<F>(seed: u64, reps: usize, f: F) -> Result<PatternTally>
where
    F: Fn(&mut RandomStream) -> Result<PatternKey> + Sync,
{
    (0..reps as u64)
        .into_par_iter()
        .try_fold(PatternTally::new, |mut t, r| {
            let mut rng = RandomStream::new(seed, r);
            t.record(f(&mut rng)?);
            Ok(t)
        })
        .try_reduce(PatternTally::new, |mut a, b| {
            a.merge(&b);
            Ok(a)
        })
}

/// Values of `f` over `reps` replicates, in replicate order.
pub fn collect<T, F>(seed: u64, reps: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut RandomStream) -> Result<T> + Sync,
{
    (0..reps as u64)
        .into_par_iter()
        .map(|r| f(&mut RandomStream::new(seed, r)))
        .collect()
}

/// Mean and standard error of a real-valued replicate statistic.
pub fn mean<F>(seed: u64, reps: usize, f: F) -> Result<(f64, f64)>
where
    F: Fn(&mut RandomStream) -> Result<f64> + Sync,
{
    let values = collect(seed, reps, f)?;
    Ok(mean_stderr(&values))
}

pub(crate) fn mean_stderr(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    if values.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let m = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (m, 0.0);
    }
    let var = values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (n - 1.0);
    (m, (var / n).sqrt())
}
