//! The ten samplers.
//!
//! Every fixed-size sampler consumes exactly one sequential uniform per output
//! element, so the output at `k` is a function of `(y|_n, U_1..U_k)` and is the
//! restriction of the output at any larger `k` drawn from the same stream.
//! Edge coins of the sparsified sampler come from a substream indexed by the
//! output pair, and p-sampling reads one coin per input vertex at a fixed
//! counter.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph_core::{ball, shortest_path_marks, EdgeSeqGraph, LabelSeq, MarkedCompleteGraph, Partition};
use crate::graph_core::{RootedGraph, VertexGraph};
use crate::rng::RandomStream;
use crate::samplers::spec::{Algorithm, InputKind, RhoSchedule, SamplerSpec};
use crate::structure::Sample;

const COIN_STREAM: u64 = 1;

/// `k` distinct positions in `0..n`; the `t`-th is uniform over those not yet
/// taken (partial Fisher-Yates, one uniform per position).
pub(crate) fn uniform_positions(n: usize, k: usize, rng: &mut RandomStream) -> Vec<usize> {
    debug_assert!(k <= n);
    let mut out = Vec::with_capacity(k);
    if 4 * k >= n {
        let mut perm: Vec<usize> = (0..n).collect();
        for t in 0..k {
            let j = t + rng.index(n - t);
            perm.swap(t, j);
            out.push(perm[t]);
        }
    } else {
        let mut moved: HashMap<usize, usize> = HashMap::with_capacity(2 * k);
        for t in 0..k {
            let j = t + rng.index(n - t);
            let vj = moved.get(&j).copied().unwrap_or(j);
            let vt = moved.get(&t).copied().unwrap_or(t);
            moved.insert(j, vt);
            out.push(vj);
        }
    }
    out
}

/// `k` distinct positions drawn successively with probability proportional
/// to `weights` among those not yet taken; uniform among the remaining when
/// their total weight is zero. Candidates are scanned in index order.
pub(crate) fn weighted_positions(weights: &[u64], k: usize, rng: &mut RandomStream) -> Vec<usize> {
    let n = weights.len();
    debug_assert!(k <= n);
    let mut taken = vec![false; n];
    let mut total: u64 = weights.iter().sum();
    let mut out = Vec::with_capacity(k);
    for t in 0..k {
        let u = rng.uniform();
        let pick = if total == 0 {
            let r = ((u * (n - t) as f64) as usize).min(n - t - 1);
            (0..n).filter(|&v| !taken[v]).nth(r).unwrap()
        } else {
            let target = u * total as f64;
            let mut cum = 0u64;
            let mut last = None;
            let mut found = None;
            for v in 0..n {
                if taken[v] || weights[v] == 0 {
                    continue;
                }
                cum += weights[v];
                last = Some(v);
                if cum as f64 > target {
                    found = Some(v);
                    break;
                }
            }
            found.or(last).unwrap()
        };
        taken[pick] = true;
        total -= weights[pick];
        out.push(pick);
    }
    out
}

fn labels(pos: &[usize]) -> Vec<u32> {
    pos.iter().map(|&i| i as u32 + 1).collect()
}

/// Position of the pair `a < b` (1-based) in the colexicographic order of pairs.
fn pair_index(a: u32, b: u32) -> u64 {
    let (a, b) = (a as u64, b as u64);
    (b - 1) * (b - 2) / 2 + (a - 1)
}

fn check(size: usize, n: usize, k: Option<usize>) -> Result<()> {
    if size == 0 {
        return Err(Error::contract("empty input"));
    }
    if n == 0 || n > size {
        return Err(Error::range("n", n, 1, size));
    }
    if let Some(k) = k {
        if k > n {
            return Err(Error::range("k", k, 0, n));
        }
    }
    Ok(())
}

fn uniform_vertex(g: &VertexGraph, k: usize, rng: &mut RandomStream) -> VertexGraph {
    g.induced(&labels(&uniform_positions(g.n(), k, rng)))
}

fn sparsify(g: VertexGraph, rho: f64, rng: &RandomStream) -> VertexGraph {
    let coins = rng.substream(COIN_STREAM);
    let kept: Vec<(u32, u32)> = g.edges().filter(|&(a, b)| coins.uniform_at(pair_index(a, b)) < rho).collect();
    VertexGraph::new(g.n(), kept).expect("subset of a valid edge set")
}

fn p_sample(g: &VertexGraph, p: f64, rng: &RandomStream) -> VertexGraph {
    let kept: Vec<u32> = (1..=g.n() as u32).filter(|&v| rng.uniform_at(v as u64 - 1) < p).collect();
    let h = g.induced(&kept);
    let live: Vec<u32> = (1..=h.n() as u32).filter(|&v| h.degree(v) > 0).collect();
    h.induced(&live)
}

fn degree_biased(g: &VertexGraph, weights: &[u64], k: usize, rng: &mut RandomStream) -> VertexGraph {
    g.induced(&labels(&weighted_positions(weights, k, rng)))
}

fn degree_weights(g: &VertexGraph) -> Vec<u64> {
    g.degrees().into_iter().map(|d| d as u64).collect()
}

fn shortest_path(g: &VertexGraph, k: usize, rng: &mut RandomStream) -> MarkedCompleteGraph {
    shortest_path_marks(g, &labels(&uniform_positions(g.n(), k, rng))).expect("distinct in-range vertices")
}

fn sequence(s: &LabelSeq, k: usize, rng: &mut RandomStream) -> LabelSeq {
    s.pick(&uniform_positions(s.len(), k, rng))
}

fn partition(p: &Partition, k: usize, rng: &mut RandomStream) -> Partition {
    Partition::of_sequence(&sequence(p.labels(), k, rng))
}

fn edges(g: &EdgeSeqGraph, k: usize, rng: &mut RandomStream) -> EdgeSeqGraph {
    g.pick_relabeled(&uniform_positions(g.len(), k, rng))
}

fn ego(g: &VertexGraph, k: usize, rng: &mut RandomStream) -> Vec<RootedGraph> {
    labels(&uniform_positions(g.n(), k, rng))
        .into_iter()
        .map(|v| ball(g, v, 1).expect("in-range center"))
        .collect()
}

fn bs_root(g: &VertexGraph, radius: usize, rng: &mut RandomStream) -> RootedGraph {
    let root = rng.index(g.n()) as u32 + 1;
    ball(g, root, radius).expect("in-range center")
}

pub fn sample_uniform_vertex(y: &VertexGraph, n: usize, k: usize, rng: &mut RandomStream) -> Result<VertexGraph> {
    check(y.n(), n, Some(k))?;
    Ok(uniform_vertex(&y.restrict(n)?, k, rng))
}

pub fn sample_sparsified(
    y: &VertexGraph,
    n: usize,
    k: usize,
    rho: &RhoSchedule,
    rng: &mut RandomStream,
) -> Result<VertexGraph> {
    check(y.n(), n, Some(k))?;
    let g = uniform_vertex(&y.restrict(n)?, k, rng);
    Ok(sparsify(g, rho.value(k), rng))
}

pub fn sample_p(y: &VertexGraph, n: usize, p: f64, rng: &mut RandomStream) -> Result<VertexGraph> {
    check(y.n(), n, None)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::contract(format!("p = {p} is not in [0,1]")));
    }
    Ok(p_sample(&y.restrict(n)?, p, rng))
}

pub fn sample_degree_biased(y: &VertexGraph, n: usize, k: usize, rng: &mut RandomStream) -> Result<VertexGraph> {
    check(y.n(), n, Some(k))?;
    let g = y.restrict(n)?;
    Ok(degree_biased(&g, &degree_weights(&g), k, rng))
}

pub fn sample_shortest_path(
    y: &VertexGraph,
    n: usize,
    k: usize,
    rng: &mut RandomStream,
) -> Result<MarkedCompleteGraph> {
    check(y.n(), n, Some(k))?;
    Ok(shortest_path(&y.restrict(n)?, k, rng))
}

pub fn sample_sequence(y: &LabelSeq, n: usize, k: usize, rng: &mut RandomStream) -> Result<LabelSeq> {
    check(y.len(), n, Some(k))?;
    Ok(sequence(&y.restrict(n)?, k, rng))
}

pub fn sample_partition(pi: &Partition, n: usize, k: usize, rng: &mut RandomStream) -> Result<Partition> {
    check(pi.len(), n, Some(k))?;
    Ok(partition(&pi.restrict(n)?, k, rng))
}

pub fn sample_edges(y: &EdgeSeqGraph, n: usize, k: usize, rng: &mut RandomStream) -> Result<EdgeSeqGraph> {
    check(y.len(), n, Some(k))?;
    Ok(edges(&y.restrict(n)?, k, rng))
}

pub fn sample_ego(y: &VertexGraph, n: usize, k: usize, rng: &mut RandomStream) -> Result<Vec<RootedGraph>> {
    check(y.n(), n, Some(k))?;
    Ok(ego(&y.restrict(n)?, k, rng))
}

/// `k` is the ball radius.
pub fn sample_bs(y: &VertexGraph, n: usize, k: usize, rng: &mut RandomStream) -> Result<RootedGraph> {
    check(y.n(), n, Some(k))?;
    Ok(bs_root(&y.restrict(n)?, k, rng))
}

/// A sampler bound to the restriction `y|_n` of one input, with per-input
/// precomputation (degree weights) done once.
#[derive(Clone, Debug)]
pub struct PreparedSampler {
    spec: SamplerSpec,
    input: Sample,
    weights: Vec<u64>,
}

fn input_kind(y: &Sample) -> Option<InputKind> {
    match y {
        Sample::Vertex(_) => Some(InputKind::Vertex),
        Sample::EdgeSeq(_) => Some(InputKind::EdgeSeq),
        Sample::Sequence(_) => Some(InputKind::Sequence),
        Sample::Partition(_) => Some(InputKind::Partition),
        _ => None,
    }
}

fn kind_label(k: InputKind) -> &'static str {
    match k {
        InputKind::Vertex => "vertex graph",
        InputKind::EdgeSeq => "edge sequence",
        InputKind::Sequence => "label sequence",
        InputKind::Partition => "partition",
    }
}

impl SamplerSpec {
    /// Binds the sampler to `y|_n`.
    pub fn prepare(&self, y: &Sample, n: usize) -> Result<PreparedSampler> {
        let want = self.algorithm().input_kind();
        if input_kind(y) != Some(want) {
            return Err(Error::KindMismatch {
                expected: kind_label(want),
                found: y.kind_name(),
            });
        }
        check(y.size(), n, None)?;
        let input = y.restrict(n)?;
        let weights = match (&input, self.algorithm()) {
            (Sample::Vertex(g), Algorithm::DegreeBiased) => degree_weights(g),
            _ => Vec::new(),
        };
        Ok(PreparedSampler {
            spec: self.clone(),
            input,
            weights,
        })
    }

    /// One draw of `S_{n->k}(y)`. `k` is ignored by p-sampling.
    pub fn sample(&self, y: &Sample, n: usize, k: usize, rng: &mut RandomStream) -> Result<Sample> {
        self.prepare(y, n)?.draw(k, rng)
    }
}

impl PreparedSampler {
    pub fn spec(&self) -> &SamplerSpec {
        &self.spec
    }

    /// The bound restriction `y|_n`.
    pub fn input(&self) -> &Sample {
        &self.input
    }

    pub fn n(&self) -> usize {
        self.input.size()
    }

    pub fn draw(&self, k: usize, rng: &mut RandomStream) -> Result<Sample> {
        let algo = self.spec.algorithm();
        if algo != Algorithm::PSample && k > self.n() {
            return Err(Error::range("k", k, 0, self.n()));
        }
        Ok(match (&self.input, algo) {
            (Sample::Vertex(g), Algorithm::UniformVertex) => Sample::Vertex(uniform_vertex(g, k, rng)),
            (Sample::Vertex(g), Algorithm::Sparsified) => {
                let rho = self.spec.rho().expect("validated spec").value(k);
                Sample::Vertex(sparsify(uniform_vertex(g, k, rng), rho, rng))
            }
            (Sample::Vertex(g), Algorithm::PSample) => Sample::Vertex(p_sample(g, self.spec.p().expect("validated spec"), rng)),
            (Sample::Vertex(g), Algorithm::DegreeBiased) => Sample::Vertex(degree_biased(g, &self.weights, k, rng)),
            (Sample::Vertex(g), Algorithm::ShortestPath) => Sample::Marked(shortest_path(g, k, rng)),
            (Sample::Vertex(g), Algorithm::Ego) => Sample::Egos(ego(g, k, rng)),
            (Sample::Vertex(g), Algorithm::BsRoot) => Sample::Rooted(bs_root(g, k, rng)),
            (Sample::Sequence(s), Algorithm::Sequence) => Sample::Sequence(sequence(s, k, rng)),
            (Sample::Partition(p), Algorithm::Partition) => Sample::Partition(partition(p, k, rng)),
            (Sample::EdgeSeq(g), Algorithm::Edge) => Sample::EdgeSeq(edges(g, k, rng)),
            _ => unreachable!("input kind checked in prepare"),
        })
    }
}

/// Outputs of one stream at several sizes.
#[derive(Clone, Debug)]
pub struct SampleRun {
    pub spec: SamplerSpec,
    pub n: usize,
    pub seed: u64,
    pub stream_id: u64,
    /// Set for p-sampling: a single output of random size, `ks` ignored.
    pub size_random: bool,
    pub outputs: Vec<(usize, Sample)>,
}

impl SampleRun {
    /// Whether each output is the restriction of every later, larger one.
    pub fn is_nested(&self) -> bool {
        self.outputs.windows(2).all(|w| {
            let ((k, a), (_, b)) = (&w[0], &w[1]);
            b.restrict(*k).is_ok_and(|r| &r == a)
        })
    }
}

/// Draws `S_{n->k}(y)` for each `k` in increasing `ks` from the same stream.
pub fn sample_run(spec: &SamplerSpec, y: &Sample, n: usize, ks: &[usize], seed: u64, stream_id: u64) -> Result<SampleRun> {
    let prepared = spec.prepare(y, n)?;
    let size_random = !spec.has_fixed_size();
    let mut sorted = ks.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if size_random {
        sorted.truncate(1);
    }
    let outputs = sorted
        .into_iter()
        .map(|k| {
            let out = prepared.draw(k, &mut RandomStream::new(seed, stream_id))?;
            Ok((if size_random { out.size() } else { k }, out))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SampleRun {
        spec: spec.clone(),
        n,
        seed,
        stream_id,
        size_random,
        outputs,
    })
}
