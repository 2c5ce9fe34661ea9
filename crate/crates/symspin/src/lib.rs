//! Verification suites, file formats and reports for the `symspin` tool.

pub mod config;
pub mod connection_file;
pub mod report;
pub mod sampling;
pub mod suites;

use serde_json::Value;
use symspin_core::fedosov::FedosovConnection;

use config::{ConfigError, RunConfig};
use connection_file::{load_connection, ConnectionFile};
use report::{Record, Report};
use suites::{Context, ContextError};

/// Suites accepted by `verify --suite`, in report order.
pub const VERIFY_SUITES: [&str; 5] = ["clifford", "squares", "super-commutators", "equivariance", "containment"];

/// Connections shipped with the tool for `l = 2`.
pub const SHIPPED_CONNECTIONS: [(&str, &str); 3] = [
    ("flat", include_str!("../data/flat.json")),
    ("constant-gamma", include_str!("../data/constant_gamma.json")),
    ("linear-gamma", include_str!("../data/linear_gamma.json")),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Decompose,
    Verify,
    Complex,
    Geometry,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Decompose => "decompose",
            Command::Verify => "verify",
            Command::Complex => "complex",
            Command::Geometry => "geometry",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Compute(symspin_core::Error),
}

impl RunError {
    /// Process exit code: 2 for configuration problems, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 2,
            RunError::Compute(_) => 1,
        }
    }
}

impl From<ContextError> for RunError {
    fn from(e: ContextError) -> Self {
        match e {
            ContextError::Config(c) => RunError::Config(c),
            ContextError::Decomposition(d) => RunError::Compute(d),
        }
    }
}

type Suite<'a> = Box<dyn Fn() -> Result<Vec<Record>, ConfigError> + Send + Sync + 'a>;

/// Runs the suites concurrently and concatenates their records in order.
fn run_suites(timings: bool, suites: Vec<Suite<'_>>) -> Result<Vec<Record>, ConfigError> {
    use rayon::prelude::*;
    let parts: Vec<Result<Vec<Record>, ConfigError>> = suites
        .par_iter()
        .map(|s| {
            let mut err = None;
            let recs = suites::timed(timings, || match s() {
                Ok(r) => r,
                Err(e) => {
                    err = Some(e);
                    Vec::new()
                }
            });
            match err {
                Some(e) => Err(e),
                None => Ok(recs),
            }
        })
        .collect();
    let mut records = Vec::new();
    for p in parts {
        records.extend(p?);
    }
    Ok(records)
}

fn selected_verify_suites(name: &str) -> Result<Vec<&'static str>, ConfigError> {
    if name == "all" {
        return Ok(VERIFY_SUITES.to_vec());
    }
    VERIFY_SUITES
        .iter()
        .find(|s| **s == name)
        .map(|s| vec![*s])
        .ok_or_else(|| ConfigError::UnknownSuite(name.into(), format!("all, {}", VERIFY_SUITES.join(", "))))
}

/// Loads the connections for `geometry`: the configured file, or the shipped
/// samples when none is given.
pub fn geometry_connections(config: &RunConfig) -> Result<Vec<(String, FedosovConnection)>, ConfigError> {
    if let Some(path) = &config.connection {
        let conn = load_connection(path)?;
        if conn.space().l() != config.l {
            return Err(ConfigError::Invalid(format!(
                "{}: connection has l = {} but the run uses l = {}",
                path.display(),
                conn.space().l(),
                config.l
            )));
        }
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "connection".into());
        return Ok(vec![(name, conn)]);
    }
    if config.l != 2 {
        return Err(ConfigError::Invalid("the shipped connections are for l = 2; pass --connection".into()));
    }
    SHIPPED_CONNECTIONS
        .iter()
        .map(|(name, text)| {
            let file: ConnectionFile = serde_json::from_str(text)
                .map_err(|e| ConfigError::File { path: (*name).into(), msg: e.to_string() })?;
            Ok(((*name).to_string(), file.to_connection()?))
        })
        .collect()
}

/// Runs one command end to end.
pub fn run(command: Command, config: &RunConfig) -> Result<Report, RunError> {
    config.validate()?;
    let verify = match command {
        Command::Verify => selected_verify_suites(&config.suite)?,
        _ => Vec::new(),
    };
    let connections = match command {
        Command::Geometry => geometry_connections(config)?,
        _ => Vec::new(),
    };
    let ctx = Context::new(config)?;
    let ctx = &ctx;
    let t = config.timings;
    let mut artifacts = Value::Null;
    let records = match command {
        Command::Decompose => {
            artifacts = suites::decomposition::artifacts(ctx);
            run_suites(
                t,
                vec![
                    Box::new(|| Ok(suites::decomposition::direct_sum(ctx))),
                    Box::new(|| Ok(suites::decomposition::injectivity(ctx))),
                    Box::new(|| Ok(suites::decomposition::triangle(ctx))),
                ],
            )?
        }
        Command::Verify => {
            let list: Vec<Suite<'_>> = verify
                .into_iter()
                .map(|name| -> Suite<'_> {
                    match name {
                        "clifford" => Box::new(|| Ok(suites::algebra::clifford(ctx))),
                        "squares" => Box::new(|| Ok(suites::algebra::squares(ctx))),
                        "super-commutators" => Box::new(|| suites::algebra::super_commutators(ctx)),
                        "equivariance" => Box::new(|| Ok(suites::algebra::equivariance(ctx))),
                        _ => Box::new(|| suites::algebra::containment(ctx)),
                    }
                })
                .collect();
            run_suites(t, list)?
        }
        Command::Complex => run_suites(
            t,
            vec![Box::new(|| suites::sequence::ricci_identity(ctx)), Box::new(|| suites::sequence::edges(ctx))],
        )?,
        Command::Geometry => {
            let list: Vec<Suite<'_>> = connections
                .iter()
                .map(|(name, conn)| -> Suite<'_> {
                    Box::new(move || Ok(suites::geometry::connection_suite(ctx, name, conn)))
                })
                .collect();
            run_suites(t, list)?
        }
    };
    Ok(Report::new(command.name(), config, records, artifacts))
}
