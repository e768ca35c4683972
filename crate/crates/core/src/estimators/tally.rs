use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::graph_core::PatternKey;

/// Counts of canonical pattern keys over a number of replicates.
///
/// Merging is exact integer addition, so a tally built in parallel is
/// identical to one built sequentially.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PatternTally {
    counts: BTreeMap<PatternKey, u64>,
    total: u64,
}

impl PatternTally {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, key: PatternKey) {
        *self.counts.entry(key).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn merge(&mut self, other: &PatternTally) {
        for (k, &c) in &other.counts {
            *self.counts.entry(k.clone()).or_insert(0) += c;
        }
        self.total += other.total;
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of distinct patterns observed.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn count(&self, key: &PatternKey) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn density(&self, key: &PatternKey) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.count(key) as f64 / self.total as f64
    }

    /// Normal-approximation standard error; `3 / total` (rule of three) for
    /// an unobserved pattern.
    pub fn stderr(&self, key: &PatternKey) -> f64 {
        if self.total == 0 {
            return 1.0;
        }
        let c = self.count(key);
        if c == 0 {
            return 3.0 / self.total as f64;
        }
        let p = c as f64 / self.total as f64;
        (p * (1.0 - p) / self.total as f64).sqrt()
    }

    /// Observed patterns in key order with their counts.
    pub fn iter(&self) -> impl Iterator<Item = (&PatternKey, u64)> + '_ {
        self.counts.iter().map(|(k, &c)| (k, c))
    }

    /// The most frequent pattern, ties broken by key order.
    pub fn mode(&self) -> Option<(&PatternKey, u64)> {
        self.iter().fold(None, |best, (k, c)| match best {
            Some((_, bc)) if bc >= c => best,
            _ => Some((k, c)),
        })
    }

    /// Number of distinct patterns seen in either tally.
    pub fn union_len(&self, other: &PatternTally) -> usize {
        self.counts.len() + other.counts.keys().filter(|k| !self.counts.contains_key(*k)).count()
    }

    /// Total-variation distance between the two empirical distributions.
    pub fn tv(&self, other: &PatternTally) -> f64 {
        let mut sum = 0.0;
        for (k, _) in self.iter() {
            sum += (self.density(k) - other.density(k)).abs();
        }
        for (k, _) in other.iter() {
            if !self.counts.contains_key(k) {
                sum += other.density(k);
            }
        }
        sum / 2.0
    }

    /// CSV with header `pattern_key,count,density,stderr`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("pattern_key,count,density,stderr\n");
        self.write_rows(&mut out, None);
        out
    }

    pub(crate) fn write_rows(&self, out: &mut String, prefix: Option<&str>) {
        for (k, c) in self.iter() {
            if let Some(p) = prefix {
                out.push_str(p);
                out.push(',');
            }
            let _ = writeln!(out, "{k},{c},{},{}", self.density(k), self.stderr(k));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::KeyKind;

    fn key(w: u32) -> PatternKey {
        PatternKey::new(KeyKind::Sequence, vec![1, w])
    }

    #[test]
    fn merge_matches_sequential() {
        let mut a = PatternTally::new();
        let mut b = PatternTally::new();
        let mut all = PatternTally::new();
        for i in 0..10u32 {
            let t = if i % 3 == 0 { &mut a } else { &mut b };
            t.record(key(i % 4));
            all.record(key(i % 4));
        }
        a.merge(&b);
        assert_eq!(a, all);
        assert_eq!(a.total(), 10);
    }

    #[test]
    fn tv_and_stderr() {
        let mut a = PatternTally::new();
        let mut b = PatternTally::new();
        for _ in 0..3 {
            a.record(key(1));
        }
        a.record(key(2));
        b.record(key(2));
        b.record(key(3));
        assert!((a.tv(&b) - 0.75).abs() < 1e-15);
        assert_eq!(a.tv(&a), 0.0);
        assert_eq!(a.stderr(&key(9)), 0.75);
        assert_eq!(a.union_len(&b), 3);
        assert_eq!(a.mode().unwrap().0, &key(1));
    }

    #[test]
    fn csv_header() {
        let mut a = PatternTally::new();
        a.record(key(1));
        assert_eq!(a.to_csv(), "pattern_key,count,density,stderr\nsequence:1.1,1,1,0\n");
    }
}
