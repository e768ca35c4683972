use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::estimators::density::prefix_density_vector;
use crate::graph_core::LabelSeq;
use crate::samplers::{Algorithm, SamplerSpec};
use crate::structure::Sample;

/// Pair densities of size-2 subsequences against the product of their
/// one-point marginals.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub reps: usize,
    /// `t(a)` estimated from the first entry of each pair.
    pub singles: BTreeMap<u32, f64>,
    /// `(t(a,b), t(a) t(b), combined standard error)` for every pair of
    /// labels seen in the marginals.
    pub pairs: BTreeMap<(u32, u32), (f64, f64, f64)>,
}

impl Factorization {
    /// Largest `|t(a,b) - t(a) t(b)|`.
    pub fn max_gap(&self) -> f64 {
        self.pairs.values().map(|&(j, p, _)| (j - p).abs()).fold(0.0, f64::max)
    }
}

/// Tallies `reps` size-2 subsequences of `y|_n`; the marginal of a label is
/// the frequency of pairs starting with it.
pub fn sequence_factorization(y: &LabelSeq, n: usize, reps: usize, seed: u64) -> Result<Factorization> {
    let spec = SamplerSpec::plain(Algorithm::Sequence)?;
    let tally = prefix_density_vector(&spec, &Sample::Sequence(y.clone()), n, 2, reps, seed)?;
    let mut joint: BTreeMap<(u32, u32), f64> = BTreeMap::new();
    let mut singles: BTreeMap<u32, f64> = BTreeMap::new();
    for (key, _) in tally.iter() {
        let w = key.words();
        if w.len() != 3 {
            return Err(Error::contract("size-2 sequence keys carry three words"));
        }
        let p = tally.density(key);
        joint.insert((w[1], w[2]), p);
        *singles.entry(w[1]).or_insert(0.0) += p;
    }
    let r = reps as f64;
    let mut pairs = BTreeMap::new();
    for (&a, &pa) in &singles {
        for (&b, &pb) in &singles {
            let j = joint.get(&(a, b)).copied().unwrap_or(0.0);
            let prod = pa * pb;
            let se_j = (j * (1.0 - j) / r).sqrt();
            // delta method for the product of two marginals
            let se_p = ((pb * pb * pa * (1.0 - pa) + pa * pa * pb * (1.0 - pb)) / r).sqrt();
            pairs.insert((a, b), (j, prod, (se_j * se_j + se_p * se_p).sqrt()));
        }
    }
    Ok(Factorization { reps, singles, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::examples::alternating_seq;

    #[test]
    fn alternating_factorizes() {
        let f = sequence_factorization(&alternating_seq(1000), 1000, 20_000, 8).unwrap();
        assert_eq!(f.pairs.len(), 4);
        assert!(f.max_gap() < 0.02, "{}", f.max_gap());
    }
}
