use std::collections::HashMap;

use crate::error::{Error, Result};

/// Finite sequence of positive labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelSeq {
    entries: Vec<u32>,
}

impl LabelSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&s| s == 0) {
            return Err(Error::contract(format!("label at position {} is 0; labels are positive", pos + 1)));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn restrict(&self, m: usize) -> Result<Self> {
        if m > self.len() {
            return Err(Error::range("m", m, 0, self.len()));
        }
        Ok(Self {
            entries: self.entries[..m].to_vec(),
        })
    }

    /// Subsequence at the given 0-based positions, in the given order.
    pub fn pick(&self, idx: &[usize]) -> Self {
        Self {
            entries: idx.iter().map(|&i| self.entries[i]).collect(),
        }
    }
}

/// Ordered partition of `{1..len}`, stored as its block-label sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: LabelSeq,
}

impl Partition {
    pub fn new(labels: LabelSeq) -> Result<Self> {
        if !is_ordered(labels.entries()) {
            return Err(Error::contract("block labels are not in order of first appearance"));
        }
        Ok(Self { labels })
    }

    pub fn from_labels(entries: Vec<u32>) -> Result<Self> {
        Self::new(LabelSeq::new(entries)?)
    }

    /// The ordered partition with the same equality pattern as `s`.
    pub fn of_sequence(s: &LabelSeq) -> Self {
        Self {
            labels: relabel_r(s),
        }
    }

    pub fn labels(&self) -> &LabelSeq {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.labels.entries().iter().copied().max().unwrap_or(0) as usize
    }

    pub fn restrict(&self, m: usize) -> Result<Self> {
        Ok(Self {
            labels: self.labels.restrict(m)?,
        })
    }
}

/// `s_m <= |{s_1..s_m}|` for every m.
pub fn is_ordered(s: &[u32]) -> bool {
    let mut seen = std::collections::HashSet::new();
    s.iter().all(|&x| {
        seen.insert(x);
        x as usize <= seen.len()
    })
}

/// Label each entry by the rank of its first appearance.
pub fn relabel_r(s: &LabelSeq) -> LabelSeq {
    LabelSeq {
        entries: relabel_slice(s.entries()),
    }
}

pub(crate) fn relabel_slice(s: &[u32]) -> Vec<u32> {
    let mut first: HashMap<u32, u32> = HashMap::with_capacity(s.len());
    s.iter()
        .map(|&x| {
            let next = first.len() as u32 + 1;
            *first.entry(x).or_insert(next)
        })
        .collect()
}
