use crate::error::{Error, Result};
use crate::estimators::PatternTally;
use crate::montecarlo;
use crate::samplers::SamplerSpec;
use crate::structure::Sample;

/// Tally of `reps` independent draws of `S_{n->k}(y)`.
pub fn prefix_density_vector(
    spec: &SamplerSpec,
    y: &Sample,
    n: usize,
    k: usize,
    reps: usize,
    seed: u64,
) -> Result<PatternTally> {
    if reps == 0 {
        return Err(Error::contract("reps must be positive"));
    }
    let prepared = spec.prepare(y, n)?;
    montecarlo::tally(seed, reps, |rng| Ok(prepared.draw(k, rng)?.key()))
}

/// Fraction of draws of `S_{n->k}(y)` equal to `pattern`, where `k` is the
/// pattern's size, with standard error `sqrt(p (1 - p) / reps)`.
pub fn estimate_prefix_density(
    spec: &SamplerSpec,
    y: &Sample,
    n: usize,
    pattern: &Sample,
    reps: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    let key = pattern.key();
    if key.kind() != spec.algorithm().output_kind() {
        return Err(Error::contract(format!(
            "{} outputs cannot equal a {}",
            spec.algorithm(),
            pattern.kind_name()
        )));
    }
    let k = pattern.size();
    if spec.has_fixed_size() && k > n {
        return Err(Error::contract(format!("pattern size {k} exceeds input size {n}")));
    }
    let tally = prefix_density_vector(spec, y, n, k, reps, seed)?;
    let p = tally.density(&key);
    Ok((p, (p * (1.0 - p) / reps as f64).sqrt()))
}
