//! Verification suites. Each suite returns its records in a fixed order;
//! suites may run concurrently and are merged in declaration order.

pub mod algebra;
pub mod decomposition;
pub mod geometry;
pub mod sequence;

use std::time::Instant;

use rayon::prelude::*;
use symspin_core::decomposition::{decompose_weight, weights_in_range, IsotypicDecomposition, Witness};
use symspin_core::operators::{Op, RicciLikeTensor};
use symspin_core::{Scalar, SpinorForm, SymplecticSpace};

use crate::config::{load_sigma, ConfigError, RunConfig, SigmaSource};
use crate::report::Record;
use crate::sampling::{self, rng_for};

/// Number of random `σ` drawn when the source is `random`.
pub const SIGMA_SAMPLES: usize = 5;

/// Builds the truncated decomposition, one weight per task.
pub fn build_decomposition(space: SymplecticSpace, cap: u32) -> symspin_core::Result<IsotypicDecomposition> {
    let parts = weights_in_range(space.l(), cap)
        .into_par_iter()
        .map(|w| decompose_weight(space, w, cap))
        .collect::<symspin_core::Result<Vec<_>>>()?;
    Ok(IsotypicDecomposition::from_parts(space, cap, parts))
}

pub struct Context {
    pub config: RunConfig,
    pub space: SymplecticSpace,
    pub decomposition: IsotypicDecomposition,
}

impl Context {
    pub fn new(config: &RunConfig) -> Result<Context, ContextError> {
        config.validate()?;
        let space = config.space();
        let decomposition = build_decomposition(space, config.max_deg)?;
        Ok(Context { config: config.clone(), space, decomposition })
    }

    pub fn band(&self) -> u32 {
        self.config.buffer
    }

    /// The `σ` samples for suites that take one, per the configured source.
    pub fn sigmas(&self, label: &str) -> Result<Vec<RicciLikeTensor>, ConfigError> {
        Ok(match &self.config.sigma {
            SigmaSource::Zero => vec![RicciLikeTensor::zero(self.space)],
            SigmaSource::File(p) => vec![load_sigma(p, self.space)?],
            SigmaSource::Random => {
                let mut rng = rng_for(self.config.seed, label);
                (0..SIGMA_SAMPLES).map(|_| sampling::sigma(&mut rng, self.space)).collect()
            }
        })
    }

    /// Every member of every guard-band block, over all form degrees, as
    /// unit vectors.
    pub fn band_basis(&self) -> Vec<SpinorForm> {
        let d = &self.decomposition;
        (0..=self.space.dim())
            .flat_map(|i| d.band_blocks(i, self.band()).flat_map(|b| b.members.iter().copied()).collect::<Vec<_>>())
            .map(|(f, m)| SpinorForm::basis(self.space.l(), f, m, Scalar::ONE))
            .collect()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ContextError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("decomposition failed: {0}")]
    Decomposition(#[from] symspin_core::Error),
}

/// Applies `p − q` to each input; returns the count checked and the first
/// nonzero difference.
pub fn compare(p: &Op, q: &Op, inputs: &[SpinorForm], what: &str) -> (usize, Option<Witness>) {
    let found = inputs.par_iter().position_first(|psi| p.apply(psi) != q.apply(psi));
    match found {
        None => (inputs.len(), None),
        Some(k) => {
            let psi = &inputs[k];
            let diff = p.apply(psi).sub(&q.apply(psi));
            let w = Witness { input: psi.clone(), output: diff, detail: format!("{what}: difference is nonzero") };
            (k + 1, Some(w))
        }
    }
}

/// Runs `f`, attaching its wall time to every record when requested.
pub fn timed(timings: bool, f: impl FnOnce() -> Vec<Record>) -> Vec<Record> {
    let start = Instant::now();
    let mut records = f();
    if timings {
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut records {
            r.wall_time_ms = Some(ms);
        }
    }
    records
}
