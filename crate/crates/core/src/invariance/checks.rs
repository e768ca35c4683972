use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph_core::{ball, VertexGraph};
use crate::invariance::report::TestReport;
use crate::montecarlo;
use crate::rng::{derive_seed, RandomStream};
use crate::samplers::{uniform_positions, Algorithm, SamplerSpec};
use crate::structure::Sample;

fn random_permutation(k: usize, rng: &mut RandomStream) -> Vec<usize> {
    uniform_positions(k, k, rng)
}

/// Compares the law of `draw` with the law of `T_pi(draw)` for an
/// independent uniform permutation `pi` of the output positions.
pub fn test_exchangeability_with<F>(name: &str, draw: F, reps: usize, seed: u64) -> Result<TestReport>
where
    F: Fn(&mut RandomStream) -> Result<Sample> + Sync,
{
    if reps == 0 {
        return Err(Error::contract("reps must be positive"));
    }
    let plain = montecarlo::tally(derive_seed(seed, 1), reps, |rng| Ok(draw(rng)?.key()))?;
    let permuted = montecarlo::tally(derive_seed(seed, 2), reps, |rng| {
        let x = draw(rng)?;
        let pi = random_permutation(x.size(), &mut rng.substream(u64::MAX));
        Ok(x.permute(&pi)?.key())
    })?;
    Ok(TestReport::compare(name, ["sample", "permuted"], plain, permuted))
}

/// Exchangeability of `S_{n->k}(y)` under relabelling of its positions.
pub fn test_exchangeability(
    spec: &SamplerSpec,
    y: &Sample,
    n: usize,
    k: usize,
    reps: usize,
    seed: u64,
) -> Result<TestReport> {
    let prepared = spec.prepare(y, n)?;
    let mut r = test_exchangeability_with(&format!("exchangeability of {spec}"), |rng| prepared.draw(k, rng), reps, seed)?;
    r.notes.push(format!("n={n} k={k}"));
    Ok(r)
}

/// Compares `S_{m->k}(S_{n->m}(y))` with `S_{n->k}(y)`.
pub fn test_idempotence(
    spec: &SamplerSpec,
    y: &Sample,
    n: usize,
    m: usize,
    k: usize,
    reps: usize,
    seed: u64,
) -> Result<TestReport> {
    match spec.algorithm() {
        Algorithm::PSample | Algorithm::ShortestPath | Algorithm::Ego | Algorithm::BsRoot => {
            return Err(Error::contract(format!(
                "{} outputs cannot be fed back as inputs of size m",
                spec.algorithm()
            )))
        }
        _ => {}
    }
    if m == 0 || m > n {
        return Err(Error::range("m", m, 1, n));
    }
    if k > m {
        return Err(Error::range("k", k, 0, m));
    }
    if reps == 0 {
        return Err(Error::contract("reps must be positive"));
    }
    let outer = spec.prepare(y, n)?;
    let composed = montecarlo::tally(derive_seed(seed, 3), reps, |rng| {
        let mid = outer.draw(m, rng)?;
        Ok(spec.prepare(&mid, m)?.draw(k, rng)?.key())
    })?;
    let direct = montecarlo::tally(derive_seed(seed, 4), reps, |rng| Ok(outer.draw(k, rng)?.key()))?;
    let mut r = TestReport::compare(&format!("idempotence of {spec}"), ["composed", "direct"], composed, direct);
    r.notes.push(format!("n={n} m={m} k={k}"));
    Ok(r)
}

/// Compares the size-`k` output laws on `y` and `y2` for every
/// `k = 1..=k_max`. Passing means equivalent up to depth `k_max`; the report
/// carries the tallies and statistic of the depth with the largest ratio of
/// distance to threshold.
pub fn test_equivalence(
    spec: &SamplerSpec,
    y: &Sample,
    y2: &Sample,
    n: usize,
    k_max: usize,
    reps: usize,
    seed: u64,
) -> Result<TestReport> {
    if k_max == 0 {
        return Err(Error::contract("k_max must be positive"));
    }
    if reps == 0 {
        return Err(Error::contract("reps must be positive"));
    }
    let a = spec.prepare(y, n)?;
    let b = spec.prepare(y2, n)?;
    let mut worst: Option<(f64, TestReport)> = None;
    let mut notes = Vec::new();
    let mut pass = true;
    for k in 1..=k_max {
        let ta = montecarlo::tally(derive_seed(seed, 5 + 2 * k as u64), reps, |rng| Ok(a.draw(k, rng)?.key()))?;
        let tb = montecarlo::tally(derive_seed(seed, 6 + 2 * k as u64), reps, |rng| Ok(b.draw(k, rng)?.key()))?;
        let r = TestReport::compare(&format!("equivalence under {spec}"), ["first", "second"], ta, tb);
        notes.push(format!("k={k} tv={} threshold={}", r.statistic, r.threshold));
        pass &= r.pass;
        let ratio = r.statistic / r.threshold;
        if worst.as_ref().is_none_or(|(w, _)| ratio > *w) {
            worst = Some((ratio, r));
        }
    }
    let mut r = worst.unwrap().1;
    r.pass = pass;
    r.notes = notes;
    r.notes.push(format!(
        "{} up to depth k_max={k_max}",
        if pass { "equivalent" } else { "not equivalent" }
    ));
    Ok(r)
}

fn diameter(g: &VertexGraph) -> usize {
    let n = g.n();
    let mut best = 0;
    let mut dist = vec![usize::MAX; n + 1];
    let mut queue = VecDeque::new();
    for s in 1..=n as u32 {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s as usize] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize];
            best = best.max(d);
            for &w in g.neighbors(v) {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = d + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    best
}

/// Law of the radius-`radius` ball about a root drawn from `root_law`
/// against the law of the ball about one simple-random-walk step from it.
pub fn test_involution_invariance(
    root_law: &[f64],
    y: &VertexGraph,
    n: usize,
    radius: usize,
    reps: usize,
    seed: u64,
) -> Result<TestReport> {
    if radius < 1 {
        return Err(Error::range("radius", radius, 1, usize::MAX));
    }
    if reps == 0 {
        return Err(Error::contract("reps must be positive"));
    }
    let g = y.restrict(n)?;
    if root_law.len() != n {
        return Err(Error::contract(format!("root law has {} weights for {n} vertices", root_law.len())));
    }
    if root_law.iter().any(|&w| !(w >= 0.0) || !w.is_finite()) {
        return Err(Error::contract("root weights must be finite and non-negative"));
    }
    let total: f64 = root_law.iter().sum();
    if !(total > 0.0) {
        return Err(Error::contract("root law has no mass"));
    }
    if let Some(v) = (1..=n as u32).find(|&v| root_law[v as usize - 1] > 0.0 && g.degree(v) == 0) {
        return Err(Error::contract(format!("supported root {v} has no neighbours")));
    }
    let cum: Vec<f64> = root_law
        .iter()
        .scan(0.0, |s, &w| {
            *s += w;
            Some(*s)
        })
        .collect();
    let draw_root = |rng: &mut RandomStream| -> u32 {
        let target = rng.uniform() * total;
        let i = cum.partition_point(|&c| c <= target).min(n - 1);
        // skip zero-weight entries that share a cumulative value
        let i = (i..n).find(|&j| root_law[j] > 0.0).unwrap_or(i);
        i as u32 + 1
    };
    let rooted = montecarlo::tally(derive_seed(seed, 7), reps, |rng| Ok(ball(&g, draw_root(rng), radius)?.key()))?;
    let stepped = montecarlo::tally(derive_seed(seed, 8), reps, |rng| {
        let v = draw_root(rng);
        let nb = g.neighbors(v);
        let w = nb[rng.index(nb.len())];
        Ok(ball(&g, w, radius)?.key())
    })?;
    let mut r = TestReport::compare("involution invariance", ["root", "stepped"], rooted, stepped);
    let diam = diameter(&g);
    r.notes.push(format!("n={n} radius={radius} diameter={diam}"));
    if 2 * radius + 1 >= diam {
        r.notes.push(format!(
            "flag: 2*radius+1 = {} is not below the diameter {diam}; balls see the whole graph",
            2 * radius + 1
        ));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::examples::{complete, cycle, star_vertex, y4};

    #[test]
    fn symmetric_inputs_give_zero_distance() {
        let c = cycle(12);
        let r = test_involution_invariance(&[1.0; 12], &c, 12, 2, 2000, 1).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert!(r.pass);
        let k5 = complete(5);
        assert!(test_involution_invariance(&[1.0; 5], &k5, 5, 1, 2000, 1).unwrap().pass);
    }

    #[test]
    fn hub_root_fails() {
        let mut law = vec![0.0; 10];
        law[0] = 1.0;
        let r = test_involution_invariance(&law, &star_vertex(10), 10, 1, 1000, 2).unwrap();
        assert_eq!(r.statistic, 1.0);
        assert!(!r.pass);
        assert!(r.notes.iter().any(|n| n.starts_with("flag")));
    }

    #[test]
    fn isolated_supported_root_is_rejected() {
        let g = VertexGraph::new(3, [(1, 2)]).unwrap();
        assert!(matches!(test_involution_invariance(&[1.0; 3], &g, 3, 1, 10, 0), Err(Error::Contract(_))));
        assert!(test_involution_invariance(&[1.0, 1.0, 0.0], &g, 3, 1, 10, 0).is_ok());
    }

    #[test]
    fn first_vertices_without_shuffle_are_not_exchangeable() {
        let star = star_vertex(10);
        let r = test_exchangeability_with("first-k", |_| Ok(Sample::Vertex(star.restrict(3)?)), 5000, 3).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn idempotence_needs_feedable_outputs() {
        let spec = SamplerSpec::plain(Algorithm::BsRoot).unwrap();
        assert!(test_idempotence(&spec, &Sample::Vertex(y4()), 4, 3, 2, 10, 0).is_err());
        let spec = SamplerSpec::plain(Algorithm::UniformVertex).unwrap();
        assert!(test_idempotence(&spec, &Sample::Vertex(y4()), 4, 2, 3, 10, 0).is_err());
        let r = test_idempotence(&spec, &Sample::Vertex(y4()), 4, 3, 2, 20_000, 0).unwrap();
        assert!(r.pass, "{r}");
    }
}
