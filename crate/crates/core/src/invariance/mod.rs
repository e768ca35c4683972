//! Two-sample tests of exchangeability, idempotence, equivalence and
//! involution invariance on pattern tallies.

mod report;
mod checks;

pub use report::{tv_threshold, TestReport};
pub use checks::{
    test_equivalence, test_exchangeability, test_exchangeability_with, test_idempotence, test_involution_invariance,
};
