//! Relative degrees, multiplicities and label frequencies along a schedule
//! of restrictions.
//!
//! A share belongs to the non-vanishing part (`p̄`, `μ̄`, atom mass) at size
//! `n` when its count reaches `sqrt` of the number of slots: a share
//! converging to a positive limit eventually clears that bar while any share
//! of order `o(sqrt(slots))` eventually stays below it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph_core::{EdgeSeqGraph, LabelSeq};

/// Largest change of the last two aggregate estimates accepted as settled.
pub const CAUCHY_TOLERANCE: f64 = 0.02;

fn check_schedule(schedule: &[usize], size: usize) -> Result<()> {
    if schedule.is_empty() {
        return Err(Error::contract("empty schedule"));
    }
    if !schedule.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::contract("schedule must be strictly increasing"));
    }
    if schedule[0] == 0 {
        return Err(Error::range("schedule entry", 0, 1, size));
    }
    let last = *schedule.last().unwrap();
    if last > size {
        return Err(Error::range("schedule entry", last, 1, size));
    }
    Ok(())
}

fn cauchy(values: &[f64]) -> bool {
    match values {
        [.., a, b] => (a - b).abs() <= CAUCHY_TOLERANCE,
        _ => false,
    }
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// `deg(i, y|_n) / (2n)` per vertex at each schedule point.
#[derive(Clone, Debug)]
pub struct DegreeProfile {
    pub schedule: Vec<usize>,
    /// `(vertex, dbar)` in vertex order, one list per schedule point.
    pub dbar: Vec<Vec<(u32, f64)>>,
    /// Non-vanishing degree mass at each point.
    pub pbar: Vec<f64>,
    /// Relative degrees in decreasing order at each point.
    pub delta: Vec<Vec<f64>>,
    /// Whether the last two `pbar` values agree within [`CAUCHY_TOLERANCE`].
    pub settled: bool,
}

impl DegreeProfile {
    /// Estimate of `p̄`: the last schedule value.
    pub fn pbar_limit(&self) -> f64 {
        *self.pbar.last().unwrap()
    }

    /// CSV with header `n,vertex,dbar`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,vertex,dbar\n");
        for (n, row) in self.schedule.iter().zip(&self.dbar) {
            for (v, d) in row {
                let _ = writeln!(out, "{n},{v},{d}");
            }
        }
        out
    }
}

pub fn degree_profile(y: &EdgeSeqGraph, schedule: &[usize]) -> Result<DegreeProfile> {
    check_schedule(schedule, y.len())?;
    let mut deg: BTreeMap<u32, usize> = BTreeMap::new();
    let mut done = 0;
    let mut out = DegreeProfile {
        schedule: schedule.to_vec(),
        dbar: Vec::new(),
        pbar: Vec::new(),
        delta: Vec::new(),
        settled: false,
    };
    for &n in schedule {
        for &(a, b) in &y.edges()[done..n] {
            *deg.entry(a).or_insert(0) += 1;
            *deg.entry(b).or_insert(0) += 1;
        }
        done = n;
        let slots = 2 * n;
        debug_assert_eq!(deg.values().sum::<usize>(), slots);
        let bar = (slots as f64).sqrt();
        let row: Vec<(u32, f64)> = deg.iter().map(|(&v, &d)| (v, d as f64 / slots as f64)).collect();
        out.pbar.push(
            deg.values()
                .filter(|&&d| d as f64 >= bar)
                .map(|&d| d as f64 / slots as f64)
                .fold(0.0, |a, b| a + b),
        );
        out.delta.push(sorted_desc(row.iter().map(|p| p.1).collect()));
        out.dbar.push(row);
    }
    out.settled = cauchy(&out.pbar);
    Ok(out)
}

/// `count(i, j, y|_n) / n` per pair at each schedule point.
#[derive(Clone, Debug)]
pub struct MultiplicityProfile {
    pub schedule: Vec<usize>,
    /// `((i, j), mbar)` in pair order, one list per schedule point.
    pub mbar: Vec<Vec<((u32, u32), f64)>>,
    /// Non-vanishing multiplicity mass at each point.
    pub mubar: Vec<f64>,
    /// Relative multiplicities in decreasing order at each point.
    pub nu: Vec<Vec<f64>>,
    pub settled: bool,
}

impl MultiplicityProfile {
    pub fn mubar_limit(&self) -> f64 {
        *self.mubar.last().unwrap()
    }

    /// CSV with header `n,i,j,mbar`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,i,j,mbar\n");
        for (n, row) in self.schedule.iter().zip(&self.mbar) {
            for ((i, j), m) in row {
                let _ = writeln!(out, "{n},{i},{j},{m}");
            }
        }
        out
    }
}

pub fn multiplicity_profile(y: &EdgeSeqGraph, schedule: &[usize]) -> Result<MultiplicityProfile> {
    check_schedule(schedule, y.len())?;
    let mut count: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    let mut done = 0;
    let mut out = MultiplicityProfile {
        schedule: schedule.to_vec(),
        mbar: Vec::new(),
        mubar: Vec::new(),
        nu: Vec::new(),
        settled: false,
    };
    for &n in schedule {
        for &e in &y.edges()[done..n] {
            *count.entry(e).or_insert(0) += 1;
        }
        done = n;
        debug_assert_eq!(count.values().sum::<usize>(), n);
        let bar = (n as f64).sqrt();
        let row: Vec<((u32, u32), f64)> = count.iter().map(|(&e, &c)| (e, c as f64 / n as f64)).collect();
        out.mubar.push(
            count
                .values()
                .filter(|&&c| c as f64 >= bar)
                .map(|&c| c as f64 / n as f64)
                .fold(0.0, |a, b| a + b),
        );
        out.nu.push(sorted_desc(row.iter().map(|p| p.1).collect()));
        out.mbar.push(row);
    }
    out.settled = cauchy(&out.mubar);
    Ok(out)
}

/// Relative frequency of each label of a sequence at each schedule point.
#[derive(Clone, Debug)]
pub struct FrequencyProfile {
    pub schedule: Vec<usize>,
    pub freq: Vec<Vec<(u32, f64)>>,
    /// Non-vanishing (atom) mass at each point; one minus it estimates dust.
    pub atom_mass: Vec<f64>,
    pub settled: bool,
}

impl FrequencyProfile {
    pub fn atom_mass_limit(&self) -> f64 {
        *self.atom_mass.last().unwrap()
    }
}

pub fn frequency_profile(s: &LabelSeq, schedule: &[usize]) -> Result<FrequencyProfile> {
    check_schedule(schedule, s.len())?;
    let mut count: BTreeMap<u32, usize> = BTreeMap::new();
    let mut done = 0;
    let mut out = FrequencyProfile {
        schedule: schedule.to_vec(),
        freq: Vec::new(),
        atom_mass: Vec::new(),
        settled: false,
    };
    for &n in schedule {
        for &x in &s.entries()[done..n] {
            *count.entry(x).or_insert(0) += 1;
        }
        done = n;
        let bar = (n as f64).sqrt();
        out.freq.push(count.iter().map(|(&x, &c)| (x, c as f64 / n as f64)).collect());
        out.atom_mass.push(
            count
                .values()
                .filter(|&&c| c as f64 >= bar)
                .map(|&c| c as f64 / n as f64)
                .fold(0.0, |a, b| a + b),
        );
    }
    out.settled = cauchy(&out.atom_mass);
    Ok(out)
}

/// Endpoint-slot view of an edge sequence with `k` edges and `2k` slots.
#[derive(Clone, Debug, PartialEq)]
pub struct SlotStats {
    /// Fraction of slots on vertices that occupy exactly one slot.
    pub singleton_mass: f64,
    /// Slot fractions of vertices occupying two or more slots, decreasing.
    pub vertex_fractions: Vec<f64>,
}

pub fn endpoint_slot_stats(g: &EdgeSeqGraph) -> Result<SlotStats> {
    if g.is_empty() {
        return Err(Error::contract("endpoint statistics need at least one edge"));
    }
    let slots = 2.0 * g.len() as f64;
    let deg = g.vertex_degrees();
    let singles = deg.values().filter(|&&d| d == 1).count();
    Ok(SlotStats {
        singleton_mass: singles as f64 / slots,
        vertex_fractions: sorted_desc(deg.values().filter(|&&d| d > 1).map(|&d| d as f64 / slots).collect()),
    })
}

/// Whether every connected component is a star or an isolated edge, with no
/// repeated pair.
pub fn is_star_forest(g: &EdgeSeqGraph) -> bool {
    let distinct: BTreeSet<(u32, u32)> = g.edges().iter().copied().collect();
    if distinct.len() != g.len() {
        return false;
    }
    let deg = g.vertex_degrees();
    // every edge has a leaf endpoint iff each component is a star or an edge
    distinct.iter().all(|&(a, b)| deg[&a] == 1 || deg[&b] == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::examples::{half_multiplicity, matching_edgeseq, star_edgeseq};

    #[test]
    fn degree_profile_examples() {
        let p = degree_profile(&star_edgeseq(400), &[100, 200, 400]).unwrap();
        assert_eq!(p.dbar[2][0], (1, 0.5));
        assert_eq!(p.pbar, vec![0.5, 0.5, 0.5]);
        assert!(p.settled);
        let m = degree_profile(&matching_edgeseq(400), &[100, 400]).unwrap();
        assert_eq!(m.pbar_limit(), 0.0);
        let rep = EdgeSeqGraph::new(vec![(1, 2); 50]).unwrap();
        let r = degree_profile(&rep, &[10, 50]).unwrap();
        assert_eq!(r.pbar_limit(), 1.0);
        assert_eq!(r.delta[1], vec![0.5, 0.5]);
        assert!(degree_profile(&rep, &[10, 60]).is_err());
        assert!(p.to_csv().starts_with("n,vertex,dbar\n100,1,0.5\n"));
    }

    #[test]
    fn multiplicity_profile_examples() {
        let p = multiplicity_profile(&half_multiplicity(1000), &[100, 1000]).unwrap();
        assert_eq!(p.nu[1][0], 0.5);
        assert_eq!(p.mubar_limit(), 0.5);
        let s = multiplicity_profile(&star_edgeseq(1000), &[1000]).unwrap();
        assert_eq!(s.mubar_limit(), 0.0);
        assert!(p.to_csv().starts_with("n,i,j,mbar\n"));
    }

    #[test]
    fn slot_stats_and_forest() {
        let s = endpoint_slot_stats(&star_edgeseq(10)).unwrap();
        assert_eq!(s.singleton_mass, 0.5);
        assert_eq!(s.vertex_fractions, vec![0.5]);
        assert_eq!(endpoint_slot_stats(&matching_edgeseq(5)).unwrap().singleton_mass, 1.0);
        let rep = EdgeSeqGraph::new(vec![(1, 2); 3]).unwrap();
        assert_eq!(endpoint_slot_stats(&rep).unwrap().singleton_mass, 0.0);
        assert!(is_star_forest(&star_edgeseq(5)));
        assert!(is_star_forest(&EdgeSeqGraph::new(vec![(1, 2), (3, 4), (3, 5)]).unwrap()));
        assert!(!is_star_forest(&EdgeSeqGraph::new(vec![(1, 2), (2, 3), (3, 4)]).unwrap()));
        assert!(!is_star_forest(&EdgeSeqGraph::new(vec![(1, 2), (1, 3), (2, 3)]).unwrap()));
        assert!(!is_star_forest(&rep));
    }

    #[test]
    fn singletons_have_no_atoms() {
        let s = LabelSeq::new((1..=400).collect()).unwrap();
        assert_eq!(frequency_profile(&s, &[100, 400]).unwrap().atom_mass_limit(), 0.0);
    }
}
