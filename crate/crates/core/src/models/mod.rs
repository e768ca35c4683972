//! Generative models and fixed inputs with known behaviour.

pub mod examples;
mod graphon;
mod multiplicity;
mod paintbox;

use num_rational::Ratio;

pub use graphon::{fit_block_graphon, graphon_draw, graphon_pattern_density, sparsified_graphon_draw, StepGraphon};
pub use multiplicity::{multigraph_from_multiplicities, MultiplicitySpec};
pub use paintbox::{paintbox_draw, paintbox_sequence, Paintbox};

use crate::error::{Error, Result};

/// `1 / C(k, j)`: the chance that a size-`j` pattern seen once among `k`
/// vertices sits on one given `j`-set, under an exchangeable model.
pub fn misspec_table(k: u64, j: u64) -> Result<Ratio<u128>> {
    if j < 1 || j > k {
        return Err(Error::range("j", j as usize, 1, k as usize));
    }
    let j = j.min(k - j);
    let mut c: u128 = 1;
    for i in 0..j {
        // exact at every step: C(k, i+1) = C(k, i) (k - i) / (i + 1)
        c = c
            .checked_mul((k - i) as u128)
            .ok_or_else(|| Error::Resource(format!("C({k}, {j}) overflows 128 bits")))?
            / (i as u128 + 1);
    }
    Ok(Ratio::new(1, c))
}
