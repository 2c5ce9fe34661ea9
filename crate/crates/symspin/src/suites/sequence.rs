//! The curvature operator identity, the edges of the twistor sequences and
//! the middle-gap probe.

use rayon::prelude::*;
use serde_json::json;
use symspin_core::curvature::{
    curvature_operator, full_sum_ricci_operator, probe_middle_gap, ricci_operator_via_xy, verify_complex,
    CurvatureTensor,
};
use symspin_core::decomposition::{Status, Witness};
use symspin_core::operators::RicciLikeTensor;
use symspin_core::Scalar;

use super::{compare, Context};
use crate::config::ConfigError;
use crate::report::{form_json, Record};

fn identity_record(
    ctx: &Context,
    sigmas: &[RicciLikeTensor],
    name: &str,
    anchor: &str,
    build: impl Fn(&RicciLikeTensor) -> (symspin_core::operators::Op, symspin_core::operators::Op),
) -> Record {
    let basis = ctx.band_basis();
    let mut checked = 0;
    let mut witness: Option<Witness> = None;
    for s in sigmas {
        let (p, q) = build(s);
        let (c, w) = compare(&p, &q, &basis, name);
        checked += c;
        if w.is_some() {
            witness = w;
            break;
        }
    }
    let status = if witness.is_some() { Status::Fail } else { Status::Pass };
    Record::new(name, anchor, status, checked)
        .with_witness(witness.as_ref())
        .with_details(json!({ "sigma_samples": sigmas.len(), "band_basis": basis.len() }))
}

/// The `σ̃` contraction operator against its `X`, `Θ`, `Σ` expression, in the
/// stated form and with the sign of the `XΣ` term flipped; and the
/// ordered-pair curvature operator against half of the latter.
pub fn ricci_identity(ctx: &Context) -> Result<Vec<Record>, ConfigError> {
    let sigmas = ctx.sigmas("ricci-identity")?;
    Ok(vec![
        identity_record(
            ctx,
            &sigmas,
            "ricci-operator-identity",
            "(i/2) s~^ij_kl e^k ^ e^l ^ a (x) e_ij.s = (i/(l+1)) (i X^2 Theta - X Sigma)",
            |s| (full_sum_ricci_operator(s), ricci_operator_via_xy(s, -1)),
        ),
        identity_record(
            ctx,
            &sigmas,
            "ricci-operator-identity-plus-sign",
            "(i/2) s~^ij_kl e^k ^ e^l ^ a (x) e_ij.s = (i/(l+1)) (i X^2 Theta + X Sigma)",
            |s| (full_sum_ricci_operator(s), ricci_operator_via_xy(s, 1)),
        ),
        identity_record(
            ctx,
            &sigmas,
            "curvature-operator-ordered-pairs",
            "(i/2) sum_{k<l} s~^ij_kl e^k ^ e^l ^ a (x) e_ij.s = (i/(2(l+1))) (i X^2 Theta + X Sigma)",
            |s| {
                let half = ricci_operator_via_xy(s, 1).scaled(Scalar::from_ratio(1, 2));
                (curvature_operator(s, &CurvatureTensor::zero(s.space())), half)
            },
        ),
    ])
}

/// `p^{i+2,m_{i+2}} R ψ = 0` on `E^{i,m_i}` for every `i ≠ l − 1`, and the
/// probe at `i = l − 1`.
pub fn edges(ctx: &Context) -> Result<Vec<Record>, ConfigError> {
    let sigmas = ctx.sigmas("complex")?;
    let d = &ctx.decomposition;
    let l = ctx.space.l();
    let xi = d.xi();
    let per_sigma: Vec<_> = sigmas.par_iter().map(|s| verify_complex(d, s, ctx.band())).collect();
    let mut records = Vec::new();
    let indices: Vec<usize> = (0..=2 * l - 2).filter(|&i| i != l - 1).collect();
    for (k, &i) in indices.iter().enumerate() {
        let name = format!("sequence-edge-{i}");
        let anchor = format!("p^({},{}) R = 0 on E^({},{})", i + 2, xi.m(i + 2), i, xi.m(i));
        let mut checked = 0;
        let mut witness = None;
        let mut error = None;
        let mut all_vacuous = true;
        for r in &per_sigma {
            match r {
                Err(e) => {
                    error = Some(e.clone());
                    break;
                }
                Ok(reps) => {
                    let rep = &reps[k];
                    checked += rep.checked;
                    all_vacuous &= rep.status == Status::Vacuous;
                    if rep.status == Status::Fail {
                        witness = rep.witness.clone();
                        break;
                    }
                }
            }
        }
        if let Some(e) = error {
            records.push(Record::error(name, anchor, &e));
            continue;
        }
        let status = match (&witness, all_vacuous) {
            (Some(_), _) => Status::Fail,
            (None, true) => Status::Vacuous,
            _ => Status::Pass,
        };
        records.push(
            Record::new(name, anchor, status, checked)
                .with_witness(witness.as_ref())
                .with_details(json!({ "sigma_samples": sigmas.len() })),
        );
    }
    // the probe fails only if the computation errors
    let i = l - 1;
    let name = "middle-gap";
    let anchor = format!("p^({},{}) R on E^({},{}): no vanishing claimed", i + 2, xi.m(i + 2), i, xi.m(i));
    let mut checked = 0;
    let mut samples = Vec::new();
    let mut first_witness = None;
    for s in &sigmas {
        match probe_middle_gap(d, s, ctx.band()) {
            Err(e) => {
                records.push(Record::error(name, anchor, &e));
                return Ok(records);
            }
            Ok(r) => {
                checked += r.checked;
                let lower: Vec<Vec<String>> = (0..s.space().dim())
                    .map(|a| (0..s.space().dim()).map(|b| s.lower().get(&[a, b]).to_exact_string()).collect())
                    .collect();
                samples.push(json!({
                    "sigma": lower,
                    "outcome": if r.witness.is_some() { "nonzero" } else { "zero" },
                    "witness_output": r.witness.as_ref().map(|w| form_json(&w.output)),
                }));
                if first_witness.is_none() {
                    first_witness = r.witness;
                }
            }
        }
    }
    records.push(
        Record::new(name, anchor, Status::Finding, checked)
            .with_witness(first_witness.as_ref())
            .with_details(json!({ "samples": samples })),
    );
    Ok(records)
}
