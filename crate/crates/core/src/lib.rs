//! Subsampling of graphs, sequences and partitions.
//!
//! A sampler maps a finite restriction `y|_n` of an input and a stream of
//! uniforms to a size-`k` output. The crate provides the samplers, generative
//! models used as ground truth, Monte Carlo estimators of output
//! distributions (prefix densities), and statistical tests of the invariance
//! properties those distributions should satisfy.

pub mod error;
pub mod estimators;
pub mod graph_core;
pub mod invariance;
pub mod models;
pub mod montecarlo;
pub mod rng;
pub mod samplers;
pub mod structure;

pub use error::{Error, Result};
pub use estimators::PatternTally;
pub use graph_core::{EdgeSeqGraph, LabelSeq, MarkedCompleteGraph, Partition, PatternKey, RootedGraph, VertexGraph};
pub use rng::RandomStream;
pub use samplers::{Algorithm, RhoSchedule, SamplerSpec};
pub use structure::Sample;
