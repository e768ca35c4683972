//! Prefix-density estimation, symmetrized averages and limiting profiles.

mod average;
mod density;
mod factorization;
mod profiles;
mod tally;

pub use average::{empirical_average, lln_trace, AverageMode, LlnTrace, DEFAULT_PERMUTATIONS, EXACT_LIMIT};
pub use density::{estimate_prefix_density, prefix_density_vector};
pub use factorization::{sequence_factorization, Factorization};
pub use profiles::{
    degree_profile, endpoint_slot_stats, frequency_profile, is_star_forest, multiplicity_profile, DegreeProfile,
    FrequencyProfile, MultiplicityProfile, SlotStats, CAUCHY_TOLERANCE,
};
pub use tally::PatternTally;
