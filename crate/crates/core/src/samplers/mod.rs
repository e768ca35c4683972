//! Subsampling algorithms `S_{n->k}` as deterministic functions of an input
//! restriction and a uniform stream.

mod algorithms;
mod diagnose;
mod spec;

pub use algorithms::{
    sample_bs, sample_degree_biased, sample_edges, sample_ego, sample_p, sample_partition, sample_run,
    sample_sequence, sample_shortest_path, sample_sparsified, sample_uniform_vertex, PreparedSampler, SampleRun,
};
pub(crate) use algorithms::uniform_positions;
pub use diagnose::{diagnose_limit, LimitDiagnosis, Verdict, DEFAULT_TOLERANCE};
pub use spec::{Algorithm, InputKind, RhoSchedule, SamplerSpec};
