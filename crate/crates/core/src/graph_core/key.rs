use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KeyKind {
    VertexGraph,
    EdgeSeq,
    Partition,
    Sequence,
    MarkedComplete,
    RootedBall,
    EgoList,
}

impl KeyKind {
    pub fn tag(self) -> &'static str {
        match self {
            KeyKind::VertexGraph => "vertex",
            KeyKind::EdgeSeq => "edgeseq",
            KeyKind::Partition => "partition",
            KeyKind::Sequence => "sequence",
            KeyKind::MarkedComplete => "marked",
            KeyKind::RootedBall => "rooted",
            KeyKind::EgoList => "egos",
        }
    }

    fn code(self) -> u8 {
        self as u8 + 1
    }

    fn from_tag(tag: &str) -> Option<Self> {
        use KeyKind::*;
        [VertexGraph, EdgeSeq, Partition, Sequence, MarkedComplete, RootedBall, EgoList]
            .into_iter()
            .find(|k| k.tag() == tag)
    }
}

/// Canonical, platform-independent encoding of a finite structure.
///
/// The body is a sequence of integer words whose layout is fixed per kind and
/// always begins with the lengths needed to parse the remainder, so equal keys
/// imply equal structures.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternKey {
    kind: KeyKind,
    words: Vec<u32>,
}

impl PatternKey {
    pub fn new(kind: KeyKind, words: Vec<u32>) -> Self {
        Self { kind, words }
    }

    pub fn kind(&self) -> KeyKind {
        self.kind
    }

    pub fn words(&self) -> &[u32] {
        &self.words
    }

    /// Kind byte, word count (u32 BE), then each word as u32 BE.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(5 + 4 * self.words.len());
        out.push(self.kind.code());
        out.extend_from_slice(&(self.words.len() as u32).to_be_bytes());
        for w in &self.words {
            out.extend_from_slice(&w.to_be_bytes());
        }
        out
    }
}

impl fmt::Display for PatternKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind.tag())?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, body) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(1, format!("pattern key `{s}` has no kind tag")))?;
        let kind = KeyKind::from_tag(tag).ok_or_else(|| Error::parse(1, format!("unknown pattern kind `{tag}`")))?;
        let words = if body.is_empty() {
            Vec::new()
        } else {
            body.split('.')
                .map(|w| w.parse::<u32>().map_err(|e| Error::parse(1, format!("bad word `{w}`: {e}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Self { kind, words })
    }
}
