use crate::error::{Error, Result};
use crate::graph_core::{LabelSeq, Partition};
use crate::rng::RandomStream;

const MASS_TOLERANCE: f64 = 1e-12;

/// Atom masses `p(1), p(2), ..` plus dust mass `p0`, summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct Paintbox {
    atoms: Vec<f64>,
    dust: f64,
}

impl Paintbox {
    pub fn new(atoms: Vec<f64>, dust: f64) -> Result<Self> {
        if atoms.iter().chain([&dust]).any(|&m| !(m >= 0.0)) {
            return Err(Error::contract("paintbox masses are non-negative"));
        }
        let total: f64 = atoms.iter().sum::<f64>() + dust;
        if (total - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::contract(format!("paintbox masses sum to {total}, not 1")));
        }
        Ok(Self { atoms, dust })
    }

    pub fn atoms(&self) -> &[f64] {
        &self.atoms
    }

    pub fn dust(&self) -> f64 {
        self.dust
    }

    /// Atom `m` (1-based) with probability `p(m)`, otherwise `None` for dust.
    fn block(&self, u: f64) -> Option<u32> {
        let mut cum = 0.0;
        for (m, &p) in self.atoms.iter().enumerate() {
            cum += p;
            if u < cum {
                return Some(m as u32 + 1);
            }
        }
        None
    }
}

/// `k` i.i.d. colours: atom `m` keeps label `m`, each dust draw gets a fresh
/// label above every atom. One uniform per entry, so draws are nested in `k`.
pub fn paintbox_sequence(pb: &Paintbox, k: usize, rng: &mut RandomStream) -> LabelSeq {
    let fresh = pb.atoms.len() as u32;
    let entries = (0..k as u32)
        .map(|i| pb.block(rng.uniform()).unwrap_or(fresh + 1 + i))
        .collect();
    LabelSeq::new(entries).expect("labels are positive")
}

/// Partition of `{1..k}` induced by [`paintbox_sequence`].
pub fn paintbox_draw(pb: &Paintbox, k: usize, rng: &mut RandomStream) -> Partition {
    Partition::of_sequence(&paintbox_sequence(pb, k, rng))
}
