//! The connection file format:
//!
//! ```json
//! { "l": 2, "D": 1,
//!   "gamma": [ {"k": 1, "a": 1, "b": 2,
//!               "monomials": [ {"exps": [1, 0, 0, 0], "num": 1, "den": 1} ] } ] }
//! ```
//!
//! Indices are 1-based; an entry for `(k, a, b)` also defines `(k, b, a)`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use symspin_core::fedosov::{BasePoly, FedosovConnection};
use symspin_core::{Monomial, Scalar, SymplecticSpace};

use crate::config::{read_json, ConfigError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialEntry {
    pub exps: Vec<u32>,
    pub num: i64,
    #[serde(default = "one")]
    pub den: i64,
}

fn one() -> i64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaEntry {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub monomials: Vec<MonomialEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionFile {
    pub l: usize,
    #[serde(rename = "D")]
    pub degree: u32,
    pub gamma: Vec<GammaEntry>,
}

impl ConnectionFile {
    pub fn load(path: &Path) -> Result<ConnectionFile, ConfigError> {
        read_json(path)
    }

    pub fn to_connection(&self) -> Result<FedosovConnection, ConfigError> {
        let space = SymplecticSpace::new(self.l).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        let n = space.dim();
        let mut entries = Vec::new();
        for g in &self.gamma {
            for (name, v) in [("k", g.k), ("a", g.a), ("b", g.b)] {
                if v == 0 || v > n {
                    return Err(ConfigError::Invalid(format!("gamma index {name} = {v} outside 1..={n}")));
                }
            }
            let mut p = BasePoly::zero();
            for m in &g.monomials {
                if m.exps.len() != n {
                    return Err(ConfigError::Invalid(format!("monomial exponents must have length {n}")));
                }
                let deg: u32 = m.exps.iter().sum();
                if deg > self.degree {
                    return Err(ConfigError::Invalid(format!("monomial degree {deg} exceeds D = {}", self.degree)));
                }
                if m.den == 0 {
                    return Err(ConfigError::Invalid("zero denominator".into()));
                }
                p = p.add(&BasePoly::monomial(Monomial::from_exponents(&m.exps), Scalar::from_ratio(m.num, m.den)));
            }
            entries.push((g.k - 1, g.a - 1, g.b - 1, p));
        }
        FedosovConnection::from_entries(space, &entries)
            .map_err(|e| ConfigError::Connection { path: String::new(), source: e })
    }

    /// Lists `Γ^k_{ab}` with `a ≤ b`; rational coefficients only.
    pub fn from_connection(conn: &FedosovConnection) -> ConnectionFile {
        let n = conn.space().dim();
        let mut gamma = Vec::new();
        for k in 0..n {
            for a in 0..n {
                for b in a..n {
                    let p = conn.gamma(k, a, b);
                    if p.is_zero() {
                        continue;
                    }
                    let monomials = p
                        .terms()
                        .iter()
                        .map(|(m, c)| {
                            assert!(c.is_real(), "rational coefficients expected");
                            MonomialEntry {
                                exps: (0..n).map(|v| m.exp(v)).collect(),
                                num: i64::try_from(c.re.numer()).expect("fits i64"),
                                den: i64::try_from(c.re.denom()).expect("fits i64"),
                            }
                        })
                        .collect();
                    gamma.push(GammaEntry { k: k + 1, a: a + 1, b: b + 1, monomials });
                }
            }
        }
        ConnectionFile { l: conn.space().l(), degree: conn.degree().unwrap_or(0), gamma }
    }
}

/// Loads and validates a connection file; errors name the file.
pub fn load_connection(path: &Path) -> Result<FedosovConnection, ConfigError> {
    ConnectionFile::load(path)?.to_connection().map_err(|e| match e {
        ConfigError::Connection { source, .. } => ConfigError::Connection { path: path.display().to_string(), source },
        ConfigError::Invalid(msg) => ConfigError::File { path: path.display().to_string(), msg },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use symspin_core::fedosov::connection_curvature;

    fn shipped(text: &str) -> ConnectionFile {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn shipped_files_round_trip() {
        for (_, text) in crate::SHIPPED_CONNECTIONS {
            let file = shipped(text);
            let conn = file.to_connection().unwrap();
            assert_eq!(ConnectionFile::from_connection(&conn).gamma, file.gamma);
        }
    }

    #[test]
    fn shipped_degrees_and_curvature() {
        let degrees: Vec<_> = crate::SHIPPED_CONNECTIONS
            .iter()
            .map(|(_, t)| {
                let c = shipped(t).to_connection().unwrap();
                (c.degree(), connection_curvature(&c).is_zero())
            })
            .collect();
        assert_eq!(degrees, vec![(None, true), (Some(0), false), (Some(1), false)]);
    }

    #[test]
    fn rejects_bad_entries() {
        let bad_index = r#"{"l":2,"D":0,"gamma":[{"k":5,"a":1,"b":1,"monomials":[]}]}"#;
        let too_high = r#"{"l":2,"D":0,"gamma":[{"k":1,"a":1,"b":1,"monomials":[{"exps":[1,0,0,0],"num":1}]}]}"#;
        let zero_den = r#"{"l":2,"D":0,"gamma":[{"k":1,"a":1,"b":1,"monomials":[{"exps":[0,0,0,0],"num":1,"den":0}]}]}"#;
        for text in [bad_index, too_high, zero_den] {
            assert!(matches!(shipped(text).to_connection(), Err(ConfigError::Invalid(_))), "{text}");
        }
    }

    #[test]
    fn asymmetric_symbol_is_a_connection_error() {
        let text = include_str!("../data/broken.json");
        assert!(matches!(shipped(text).to_connection(), Err(ConfigError::Connection { .. })));
    }
}
