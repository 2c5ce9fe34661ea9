//! Checks on polynomial connections: Ricci symmetry, the second spinor
//! derivative, the curvature bridge, derivative containment, the Dirac
//! operator and (for flat connections) twistor compositions.

use rand::Rng;
use serde_json::json;
use symspin_core::curvature::PairSum;
use symspin_core::decomposition::{Status, Witness};
use symspin_core::fedosov::{
    connection_curvature, curvature_from_split, dirac, dirac_via_twistor, exterior_spinor_derivative,
    forbidden_derivative_component, spinor_covariant_derivative, spinor_curvature, twistor_operator, FedosovConnection,
    FormField,
};
use symspin_core::{Scalar, SpinorForm};

use super::Context;
use crate::report::{form_json, Record};
use crate::sampling::{self, rng_for, SuiteRng};

/// Random spinor fields per connection for the second-derivative check.
pub const FIELD_SAMPLES: usize = 10;
/// Sample sections per `(i, j)` for the containment check.
pub const SECTION_SAMPLES: usize = 5;

fn field_witness(input: &FormField, output: &FormField, detail: &str) -> Witness {
    let first = |f: &FormField| f.terms().values().next().cloned().unwrap_or_else(|| SpinorForm::zero(f.l(), 0));
    Witness { input: first(input), output: first(output), detail: detail.into() }
}

fn fiber_json(f: &FormField) -> serde_json::Value {
    let l = f.l();
    f.terms()
        .iter()
        .map(|(m, fiber)| json!({ "base": (0..2 * l).map(|v| m.exp(v)).collect::<Vec<_>>(), "fiber": form_json(fiber) }))
        .collect()
}

fn sample_section(rng: &mut SuiteRng, l: usize, basis: &[SpinorForm]) -> FormField {
    let fiber = sampling::pick(rng, basis).clone();
    FormField::product(&sampling::base_poly(rng, l, 1), &fiber)
}

pub fn connection_suite(ctx: &Context, name: &str, conn: &FedosovConnection) -> Vec<Record> {
    let l = ctx.space.l();
    let d = &ctx.decomposition;
    let cap = ctx.config.band_limit();
    let mut rng = rng_for(ctx.config.seed, &format!("geometry/{name}"));
    let mut records = Vec::new();

    let curvature = connection_curvature(conn);
    let ricci = curvature.ricci();
    let symmetric = curvature.is_symmetric_in_first_pair() && ricci.is_ok();
    records.push(
        Record::new(
            format!("{name}/ricci-symmetric"),
            "sigma(X,Y) = Tr(V -> R(V,X)Y) is symmetric",
            if symmetric { Status::Pass } else { Status::Fail },
            curvature.terms().len(),
        )
        .with_details(json!({
            "curvature_is_zero": curvature.is_zero(),
            "ricci_is_zero": ricci.as_ref().map(|s| s.is_zero()).unwrap_or(false),
            "ricci_degree": ricci.as_ref().ok().and_then(|s| s.degree()),
            "connection_degree": conn.degree(),
        })),
    );

    // second spinor derivative against the ordered-pair curvature action
    let mut witness = None;
    let mut full_sum_is_twice = true;
    for _ in 0..FIELD_SAMPLES {
        let phi = sampling::form_field(&mut rng, l, 0, cap, 2);
        let nabla = spinor_covariant_derivative(conn, &phi).expect("0-form");
        let dd = exterior_spinor_derivative(conn, &nabla).expect("derivative");
        let rhs = spinor_curvature(conn, &phi);
        let full = curvature.act(&phi, PairSum::All, &Scalar::imag(1, 2));
        full_sum_is_twice &= full == dd.scale(&Scalar::from_int(2));
        if dd != rhs {
            witness = Some(field_witness(&phi, &dd.sub(&rhs), "second derivative differs from curvature action"));
            break;
        }
    }
    records.push(
        Record::new(
            format!("{name}/second-spinor-derivative"),
            "d(nabla^S phi) = (i/2) sum_{k<l} R^ij_kl e^k ^ e^l (x) e_ij.phi",
            if witness.is_some() { Status::Fail } else { Status::Pass },
            FIELD_SAMPLES,
        )
        .with_witness(witness.as_ref())
        .with_details(json!({ "all_pairs_sum_is_twice_the_derivative": full_sum_is_twice })),
    );

    // d∇d∇ against the operator rebuilt from (σ, W)
    let mut witness = None;
    let mut checked = 0;
    for r in 0..=2 * l - 2 {
        for _ in 0..2 {
            checked += 1;
            let psi = sampling::form_field(&mut rng, l, r, cap, 2);
            let dd = exterior_spinor_derivative(conn, &exterior_spinor_derivative(conn, &psi).expect("derivative"))
                .expect("derivative");
            match curvature_from_split(conn, &psi) {
                Err(e) => return { records.push(Record::error(format!("{name}/curvature-bridge"), "", &e)); records },
                Ok(rhs) if rhs != dd => {
                    witness = Some(field_witness(&psi, &dd.sub(&rhs), "d d psi differs from the split operator"));
                }
                Ok(_) => {}
            }
        }
    }
    records.push(
        Record::new(
            format!("{name}/curvature-bridge"),
            "d^S d^S psi = (i/2) sum_{k<l} (W + s~)^ij_kl e^k ^ e^l ^ psi (x) e_ij",
            if witness.is_some() { Status::Fail } else { Status::Pass },
            checked,
        )
        .with_witness(witness.as_ref()),
    );

    // derivative of E^{ij}-valued sections lies in slots j-1, j, j+1
    let mut witness = None;
    let mut checked = 0;
    let mut error = None;
    'outer: for (i, j) in d.xi().nodes().into_iter().filter(|(i, _)| *i < 2 * l) {
        let basis = d.component_basis(i, j, ctx.band());
        if basis.is_empty() {
            continue;
        }
        for _ in 0..SECTION_SAMPLES {
            let psi = sample_section(&mut rng, l, &basis);
            checked += 1;
            match forbidden_derivative_component(d, i, j, conn, &psi) {
                Err(e) => {
                    error = Some(e);
                    break 'outer;
                }
                Ok(Some(w)) => {
                    witness = Some(w);
                    break 'outer;
                }
                Ok(None) => {}
            }
        }
    }
    let cname = format!("{name}/derivative-containment");
    let canchor = "d^S maps sections of E^(i,j) into E^(i+1,j-1) + E^(i+1,j) + E^(i+1,j+1)";
    records.push(match error {
        Some(e) => Record::error(cname, canchor, &e),
        None => Record::new(cname, canchor, if witness.is_some() { Status::Fail } else { Status::Pass }, checked)
            .with_witness(witness.as_ref())
            .with_details(json!({ "samples_per_component": SECTION_SAMPLES })),
    });

    // Dirac operator
    let basis = d.component_basis(0, 0, ctx.band());
    let mut witness = None;
    let mut sample = serde_json::Value::Null;
    let mut error = None;
    for k in 0..SECTION_SAMPLES.min(basis.len()) {
        let phi = sample_section(&mut rng, l, &basis);
        let lhs = dirac(conn, &phi).expect("0-form");
        if k == 0 {
            sample = json!({ "input": fiber_json(&phi), "output": fiber_json(&lhs) });
        }
        match dirac_via_twistor(d, conn, &phi) {
            Err(e) => {
                error = Some(e);
                break;
            }
            Ok(rhs) if rhs != lhs => {
                witness = Some(field_witness(&phi, &lhs.sub(&rhs), "Y nabla^S differs from Y (nabla^S - T_0)"));
                break;
            }
            Ok(_) => {}
        }
    }
    let dname = format!("{name}/dirac");
    let danchor = "D = Y nabla^S equals Y (nabla^S - T_0)";
    records.push(match error {
        Some(e) => Record::error(dname, danchor, &e),
        None => Record::new(dname, danchor, if witness.is_some() { Status::Fail } else { Status::Pass }, SECTION_SAMPLES.min(basis.len()))
            .with_witness(witness.as_ref())
            .with_details(json!({ "sample": sample })),
    });

    if conn.is_flat_symbol() {
        records.push(flat_compositions(ctx, name, conn, &mut rng));
    }
    records
}

/// `T_{i+1}T_i = 0` for `i ≠ l − 1` and `T_{l+1}(T_l T_{l−1}) = 0`.
fn flat_compositions(ctx: &Context, name: &str, conn: &FedosovConnection, rng: &mut SuiteRng) -> Record {
    let d = &ctx.decomposition;
    let l = ctx.space.l();
    let xi = d.xi();
    let rname = format!("{name}/twistor-compositions");
    let anchor = "T_(i+1) T_i = 0 for i != l-1 and T_(l+1) T_l T_(l-1) = 0";
    let mut checked = 0;
    for i in 0..=2 * l - 2 {
        let basis = d.component_basis(i, xi.m(i), ctx.band());
        if basis.is_empty() {
            continue;
        }
        for _ in 0..SECTION_SAMPLES {
            let psi = FormField::product(&sampling::base_poly(rng, l, 2), &basis[rng.gen_range(0..basis.len())]);
            let run = || -> symspin_core::Result<FormField> {
                let t1 = twistor_operator(d, i, conn, &psi)?;
                let t2 = twistor_operator(d, i + 1, conn, &t1)?;
                if i == l - 1 {
                    twistor_operator(d, i + 2, conn, &t2)
                } else {
                    Ok(t2)
                }
            };
            checked += 1;
            match run() {
                Err(e) => return Record::error(rname, anchor, &e),
                Ok(out) if !out.is_zero() => {
                    let w = field_witness(&psi, &out, &format!("composition starting at degree {i} is nonzero"));
                    return Record::new(rname, anchor, Status::Fail, checked).with_witness(Some(&w));
                }
                Ok(_) => {}
            }
        }
    }
    Record::new(rname, anchor, Status::Pass, checked)
}
