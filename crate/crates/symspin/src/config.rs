//! Run configuration and its validation.

use std::path::{Path, PathBuf};

use serde::Serialize;
use symspin_core::monomial::MAX_VARS;
use symspin_core::operators::RicciLikeTensor;
use symspin_core::symplectic::Tensor;
use symspin_core::{Scalar, SymplecticSpace};

/// Errors detected before any computation starts; these map to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("l must be at least 2 (got {0})")]
    RankTooSmall(usize),
    #[error("l = {l} exceeds the supported maximum {max}")]
    RankTooLarge { l: usize, max: usize },
    #[error("max degree N = {n} must be at least buffer + 4 = {need}")]
    DegreeTooSmall { n: u32, need: u32 },
    #[error("unknown suite {0:?}; expected one of {1}")]
    UnknownSuite(String, String),
    #[error("{path}: {msg}")]
    File { path: String, msg: String },
    #[error("invalid connection in {path}: {source}")]
    Connection { path: String, source: symspin_core::Error },
    #[error("{0}")]
    Invalid(String),
}

/// Where `σ` comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaSource {
    Zero,
    Random,
    File(PathBuf),
}

impl SigmaSource {
    pub fn parse(s: &str) -> SigmaSource {
        match s {
            "zero" => SigmaSource::Zero,
            "random" => SigmaSource::Random,
            path => SigmaSource::File(PathBuf::from(path)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub l: usize,
    /// Spinor degree cap `N`.
    pub max_deg: u32,
    /// Guard band `B`: checks use blocks of top degree at most `N − B`.
    pub buffer: u32,
    pub seed: u64,
    pub suite: String,
    pub sigma: SigmaSource,
    pub connection: Option<PathBuf>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            l: 2,
            max_deg: 10,
            buffer: 4,
            seed: 1,
            suite: "all".into(),
            sigma: SigmaSource::Random,
            connection: None,
            out: None,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.l < 2 {
            return Err(ConfigError::RankTooSmall(self.l));
        }
        if self.l > MAX_VARS / 2 {
            return Err(ConfigError::RankTooLarge { l: self.l, max: MAX_VARS / 2 });
        }
        if self.max_deg < self.buffer + 4 {
            return Err(ConfigError::DegreeTooSmall { n: self.max_deg, need: self.buffer + 4 });
        }
        Ok(())
    }

    pub fn space(&self) -> SymplecticSpace {
        SymplecticSpace::new(self.l).expect("validated rank")
    }

    /// `N − B`, the largest block top degree checked.
    pub fn band_limit(&self) -> u32 {
        self.max_deg - self.buffer
    }
}

fn read(path: &Path) -> Result<String, ConfigError> {
    std::fs::read_to_string(path).map_err(|e| ConfigError::File { path: path.display().to_string(), msg: e.to_string() })
}

fn parse_scalar(v: &serde_json::Value) -> Option<Scalar> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(Scalar::from_int),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Reads `{"sigma": [[...], ...]}` with integer or exact-string entries.
pub fn load_sigma(path: &Path, space: SymplecticSpace) -> Result<RicciLikeTensor, ConfigError> {
    let err = |msg: String| ConfigError::File { path: path.display().to_string(), msg };
    let v: serde_json::Value = serde_json::from_str(&read(path)?).map_err(|e| err(e.to_string()))?;
    let rows = v.get("sigma").and_then(|r| r.as_array()).ok_or_else(|| err("missing \"sigma\" matrix".into()))?;
    let n = space.dim();
    if rows.len() != n {
        return Err(err(format!("sigma must be {n}x{n}")));
    }
    let mut t = Tensor::zeros(n, 2);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == n).ok_or_else(|| err(format!("sigma must be {n}x{n}")))?;
        for (j, x) in row.iter().enumerate() {
            let s = parse_scalar(x).ok_or_else(|| err(format!("entry ({}, {}) is not an exact scalar", i + 1, j + 1)))?;
            t.set(&[i, j], s);
        }
    }
    RicciLikeTensor::new(space, t).map_err(|e| err(e.to_string()))
}

pub(crate) fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, ConfigError> {
    serde_json::from_str(&read(path)?).map_err(|e| ConfigError::File { path: path.display().to_string(), msg: e.to_string() })
}
