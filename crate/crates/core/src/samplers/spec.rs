use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph_core::KeyKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    UniformVertex,
    Sparsified,
    PSample,
    DegreeBiased,
    ShortestPath,
    Sequence,
    Partition,
    Edge,
    Ego,
    BsRoot,
}

impl Algorithm {
    pub const ALL: [Algorithm; 10] = [
        Algorithm::UniformVertex,
        Algorithm::Sparsified,
        Algorithm::PSample,
        Algorithm::DegreeBiased,
        Algorithm::ShortestPath,
        Algorithm::Sequence,
        Algorithm::Partition,
        Algorithm::Edge,
        Algorithm::Ego,
        Algorithm::BsRoot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::UniformVertex => "uniform-vertex",
            Algorithm::Sparsified => "sparsified",
            Algorithm::PSample => "p-sample",
            Algorithm::DegreeBiased => "degree-biased",
            Algorithm::ShortestPath => "shortest-path",
            Algorithm::Sequence => "sequence",
            Algorithm::Partition => "partition",
            Algorithm::Edge => "edge",
            Algorithm::Ego => "ego",
            Algorithm::BsRoot => "bs-root",
        }
    }

    /// The numbered algorithm, 1 through 10.
    pub fn number(self) -> usize {
        Self::ALL.iter().position(|&a| a == self).unwrap() + 1
    }

    /// Kind of key carried by this algorithm's outputs.
    pub fn output_kind(self) -> KeyKind {
        match self {
            Algorithm::UniformVertex | Algorithm::Sparsified | Algorithm::PSample | Algorithm::DegreeBiased => {
                KeyKind::VertexGraph
            }
            Algorithm::ShortestPath => KeyKind::MarkedComplete,
            Algorithm::Sequence => KeyKind::Sequence,
            Algorithm::Partition => KeyKind::Partition,
            Algorithm::Edge => KeyKind::EdgeSeq,
            Algorithm::Ego => KeyKind::EgoList,
            Algorithm::BsRoot => KeyKind::RootedBall,
        }
    }

    pub fn input_kind(self) -> InputKind {
        match self {
            Algorithm::Sequence => InputKind::Sequence,
            Algorithm::Partition => InputKind::Partition,
            Algorithm::Edge => InputKind::EdgeSeq,
            _ => InputKind::Vertex,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    /// Accepts the name or the number `1..=10`.
    fn from_str(s: &str) -> Result<Self> {
        if let Ok(i) = s.parse::<usize>() {
            if (1..=10).contains(&i) {
                return Ok(Self::ALL[i - 1]);
            }
        }
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::contract(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Vertex,
    EdgeSeq,
    Sequence,
    Partition,
}

/// Edge-retention schedule `rho(k)`: non-increasing in `k`, values in [0, 1].
#[derive(Clone, Debug, PartialEq)]
pub enum RhoSchedule {
    Constant(f64),
    /// `min(1, scale / k)`
    Inverse { scale: f64 },
    /// `min(1, scale * k^-exponent)`
    Power { scale: f64, exponent: f64 },
    /// `values[k - 1]`, last value repeated beyond the table.
    Table(Vec<f64>),
}

impl RhoSchedule {
    pub fn value(&self, k: usize) -> f64 {
        let k = k.max(1) as f64;
        match self {
            RhoSchedule::Constant(c) => *c,
            RhoSchedule::Inverse { scale } => (scale / k).min(1.0),
            RhoSchedule::Power { scale, exponent } => (scale * k.powf(-exponent)).min(1.0),
            RhoSchedule::Table(v) => v[(k as usize - 1).min(v.len() - 1)],
        }
    }

    fn validate(&self) -> Result<()> {
        let unit = |x: f64| (0.0..=1.0).contains(&x);
        let ok = match self {
            RhoSchedule::Constant(c) => unit(*c),
            RhoSchedule::Inverse { scale } => *scale >= 0.0 && scale.is_finite(),
            RhoSchedule::Power { scale, exponent } => *scale >= 0.0 && scale.is_finite() && *exponent >= 0.0,
            RhoSchedule::Table(v) => !v.is_empty() && v.iter().all(|&x| unit(x)) && v.windows(2).all(|w| w[1] <= w[0]),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::contract(format!("rho schedule {self} is not a non-increasing map into [0,1]")))
        }
    }
}

impl fmt::Display for RhoSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RhoSchedule::Constant(c) => write!(f, "{c}"),
            RhoSchedule::Inverse { scale } => write!(f, "inv:{scale}"),
            RhoSchedule::Power { scale, exponent } => write!(f, "pow:{scale},{exponent}"),
            RhoSchedule::Table(v) => {
                f.write_str("table:")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for RhoSchedule {
    type Err = Error;

    /// `0.5`, `inv:2`, `pow:1,0.5` or `table:1,0.8,0.5`.
    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| Error::contract(format!("bad number `{t}` in rho schedule: {e}")))
        };
        let rho = if let Some(rest) = s.strip_prefix("inv:") {
            RhoSchedule::Inverse { scale: num(rest)? }
        } else if let Some(rest) = s.strip_prefix("pow:") {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| Error::contract("pow schedule needs `scale,exponent`"))?;
            RhoSchedule::Power {
                scale: num(a)?,
                exponent: num(b)?,
            }
        } else if let Some(rest) = s.strip_prefix("table:") {
            RhoSchedule::Table(rest.split(',').map(num).collect::<Result<_>>()?)
        } else {
            RhoSchedule::Constant(num(s)?)
        };
        rho.validate()?;
        Ok(rho)
    }
}

/// An algorithm together with the parameters it needs.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplerSpec {
    algorithm: Algorithm,
    rho: Option<RhoSchedule>,
    p: Option<f64>,
}

impl SamplerSpec {
    pub fn new(algorithm: Algorithm, rho: Option<RhoSchedule>, p: Option<f64>) -> Result<Self> {
        match (algorithm, &rho, p) {
            (Algorithm::Sparsified, None, _) => return Err(Error::contract("sparsified sampling needs a rho schedule")),
            (Algorithm::PSample, _, None) => return Err(Error::contract("p-sampling needs p")),
            _ => {}
        }
        if algorithm != Algorithm::Sparsified && rho.is_some() {
            return Err(Error::contract(format!("{algorithm} takes no rho schedule")));
        }
        if algorithm != Algorithm::PSample && p.is_some() {
            return Err(Error::contract(format!("{algorithm} takes no p")));
        }
        if let Some(r) = &rho {
            r.validate()?;
        }
        if let Some(p) = p {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::contract(format!("p = {p} is not in [0,1]")));
            }
        }
        Ok(Self { algorithm, rho, p })
    }

    /// Any algorithm without parameters.
    pub fn plain(algorithm: Algorithm) -> Result<Self> {
        Self::new(algorithm, None, None)
    }

    pub fn sparsified(rho: RhoSchedule) -> Result<Self> {
        Self::new(Algorithm::Sparsified, Some(rho), None)
    }

    pub fn p_sample(p: f64) -> Result<Self> {
        Self::new(Algorithm::PSample, None, Some(p))
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn rho(&self) -> Option<&RhoSchedule> {
        self.rho.as_ref()
    }

    pub fn p(&self) -> Option<f64> {
        self.p
    }

    /// False for p-sampling, whose output size is random.
    pub fn has_fixed_size(&self) -> bool {
        self.algorithm != Algorithm::PSample
    }
}

impl fmt::Display for SamplerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.algorithm)?;
        if let Some(r) = &self.rho {
            write!(f, "(rho={r})")?;
        }
        if let Some(p) = self.p {
            write!(f, "(p={p})")?;
        }
        Ok(())
    }
}
