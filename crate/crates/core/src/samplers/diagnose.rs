use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::estimators::PatternTally;
use crate::montecarlo;
use crate::samplers::spec::SamplerSpec;
use crate::structure::Sample;

/// Consecutive total-variation distance below which the trace counts as
/// settled.
pub const DEFAULT_TOLERANCE: f64 = 0.02;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Stabilizing,
    NotStabilizing,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Stabilizing => "STABILIZING",
            Verdict::NotStabilizing => "NOT_STABILIZING",
        })
    }
}

/// Size-`k` output distributions along a schedule of input sizes.
#[derive(Clone, Debug)]
pub struct LimitDiagnosis {
    pub k: usize,
    pub schedule: Vec<usize>,
    pub tallies: Vec<PatternTally>,
    /// `tvs[i]` compares `schedule[i]` with `schedule[i + 1]`.
    pub tvs: Vec<f64>,
    pub tolerance: f64,
    pub verdict: Verdict,
}

impl LimitDiagnosis {
    /// CSV with header `n,pattern_key,count,density,stderr`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,pattern_key,count,density,stderr\n");
        for (n, t) in self.schedule.iter().zip(&self.tallies) {
            t.write_rows(&mut out, Some(&n.to_string()));
        }
        out
    }

    /// CSV with header `n_prev,n,tv`.
    pub fn tv_csv(&self) -> String {
        let mut out = String::from("n_prev,n,tv\n");
        for (i, tv) in self.tvs.iter().enumerate() {
            let _ = writeln!(out, "{},{},{tv}", self.schedule[i], self.schedule[i + 1]);
        }
        out
    }
}

/// Monte Carlo trace of `S_{n->k}(y)` for each `n` in `schedule`. The verdict
/// is STABILIZING when every consecutive distance after the first doubling
/// (the only one, for a two-point schedule) is below `tolerance`.
///
/// All schedule points share the replicate streams of `seed`.
pub fn diagnose_limit(
    spec: &SamplerSpec,
    y: &Sample,
    k: usize,
    schedule: &[usize],
    reps: usize,
    seed: u64,
    tolerance: f64,
) -> Result<LimitDiagnosis> {
    if schedule.len() < 2 {
        return Err(Error::contract("a schedule needs at least two input sizes"));
    }
    if !schedule.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::contract("schedule must be strictly increasing"));
    }
    let last = *schedule.last().unwrap();
    if last > y.size() {
        return Err(Error::range("schedule entry", last, 1, y.size()));
    }
    if reps == 0 {
        return Err(Error::contract("reps must be positive"));
    }
    let mut tallies = Vec::with_capacity(schedule.len());
    for &n in schedule {
        let prepared = spec.prepare(y, n)?;
        tallies.push(montecarlo::tally(seed, reps, |rng| Ok(prepared.draw(k, rng)?.key()))?);
    }
    let tvs: Vec<f64> = tallies.windows(2).map(|w| w[0].tv(&w[1])).collect();
    let judged = if tvs.len() > 1 { &tvs[1..] } else { &tvs[..] };
    let verdict = if judged.iter().all(|&tv| tv < tolerance) {
        Verdict::Stabilizing
    } else {
        Verdict::NotStabilizing
    };
    Ok(LimitDiagnosis {
        k,
        schedule: schedule.to_vec(),
        tallies,
        tvs,
        tolerance,
        verdict,
    })
}
