//! Clifford relation, operator squares, super-commutator relations,
//! equivariance and containment.

use rand::Rng;
use rayon::prelude::*;
use serde_json::json;
use symspin_core::decomposition::{Status, Witness};
use symspin_core::operators::{x_squared_closed_form, y_squared_closed_form, ContractionOrder, Op, RicciLikeTensor};
use symspin_core::{FormIndex, Monomial, PolySpinor, Scalar, SpinorForm};

use super::{compare, Context};
use crate::config::ConfigError;
use crate::report::Record;
use crate::sampling::{self, rng_for};

/// Vectors per `σ` (or per algebra element) in the random checks.
pub const RANDOM_VECTORS: usize = 30;

fn status(w: &Option<Witness>, checked: usize) -> Status {
    match (w, checked) {
        (Some(_), _) => Status::Fail,
        (None, 0) => Status::Vacuous,
        (None, _) => Status::Pass,
    }
}

/// `v.w.s − w.v.s + i·ω(v, w)·s = 0` for all basis pairs and all monomials
/// of degree at most `N − 2`.
pub fn clifford(ctx: &Context) -> Vec<Record> {
    let l = ctx.space.l();
    let n = ctx.space.dim();
    let monos = Monomial::up_to_degree(l, ctx.config.max_deg - 2);
    let failures: Vec<(Monomial, usize, usize, PolySpinor)> = monos
        .par_iter()
        .filter_map(|m| {
            let s = PolySpinor::from_terms(l, m.degree(), [(*m, Scalar::ONE)]).expect("fits");
            for v in 0..n {
                for w in 0..n {
                    let vw = s.clifford_basis(w + 1).unwrap().clifford_basis(v + 1).unwrap();
                    let wv = s.clifford_basis(v + 1).unwrap().clifford_basis(w + 1).unwrap();
                    let om = Scalar::from_int(ctx.space.w(v, w));
                    let defect = vw.sub(&wv).add(&s.scale(&(&Scalar::I * &om)));
                    if !defect.is_zero() {
                        return Some((*m, v, w, defect));
                    }
                }
            }
            None
        })
        .collect();
    let checked = monos.len() * n * n;
    let witness = failures.first().map(|(m, v, w, defect)| Witness {
        input: SpinorForm::basis(l, FormIndex::EMPTY, *m, Scalar::ONE),
        output: SpinorForm::tensor(FormIndex::EMPTY, defect),
        detail: format!("defect for (e{}, e{})", v + 1, w + 1),
    });
    vec![Record::new("clifford-relation", "v.w.s - w.v.s = -i omega(v,w) s", status(&witness, checked), checked)
        .with_witness(witness.as_ref())
        .with_details(json!({ "max_degree": ctx.config.max_deg - 2, "pairs": n * n }))]
}

/// `X²` and `Y²` against their closed forms on every guard-band block.
pub fn squares(ctx: &Context) -> Vec<Record> {
    let basis = ctx.band_basis();
    let x = Op::x(ctx.space);
    let y = Op::y(ctx.space);
    let checks = [
        (
            "x-squared",
            "X^2(a(x)s) = -(i/2) omega_ij e^i ^ e^j ^ a (x) s",
            &x * &x,
            x_squared_closed_form(ctx.space),
        ),
        (
            "y-squared",
            "Y^2(a(x)s) = (i/2) omega^ij i_{e_i} i_{e_j} a (x) s",
            &y * &y,
            y_squared_closed_form(ctx.space, ContractionOrder::FirstIndexOutside),
        ),
        (
            "y-squared-inner-first",
            "Y^2(a(x)s) = (i/2) omega^ij i_{e_j} i_{e_i} a (x) s",
            &y * &y,
            y_squared_closed_form(ctx.space, ContractionOrder::SecondIndexOutside),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, anchor, lhs, rhs)| {
            let (checked, w) = compare(&lhs, &rhs, &basis, name);
            Record::new(name, anchor, status(&w, checked), checked)
                .with_witness(w.as_ref())
                .with_details(json!({ "band_basis": basis.len(), "band_limit": ctx.config.band_limit() }))
        })
        .collect()
}

struct Relation {
    name: &'static str,
    anchor: &'static str,
    op: fn(&RicciLikeTensor) -> Op,
}

fn relations() -> [Relation; 4] {
    [
        Relation {
            name: "sigma-x-anticommutator",
            anchor: "{Sigma, X} = 0",
            op: |s| Op::anticommutator(&Op::sigma(s), &Op::x(s.space())),
        },
        Relation {
            name: "sigma-y-y-squared",
            anchor: "[{Sigma, Y}, Y^2] = 0",
            op: |s| {
                let y = Op::y(s.space());
                Op::commutator(&Op::anticommutator(&Op::sigma(s), &y), &(&y * &y))
            },
        },
        Relation {
            name: "x-theta-commutator",
            anchor: "[X, Theta] = 2i Sigma",
            op: |s| &Op::commutator(&Op::x(s.space()), &Op::theta(s)) - &Op::sigma(s).scaled(Scalar::imag(2, 1)),
        },
        Relation {
            name: "theta-y-squared",
            anchor: "[Theta, Y^2] = 0",
            op: |s| {
                let y = Op::y(s.space());
                Op::commutator(&Op::theta(s), &(&y * &y))
            },
        },
    ]
}

fn random_band_vectors(ctx: &Context, rng: &mut crate::sampling::SuiteRng, count: usize) -> Vec<SpinorForm> {
    let top = ctx.space.dim();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count {
        attempts += 1;
        let i = rng.gen_range(0..=top);
        if let Some(v) = sampling::band_vector(rng, &ctx.decomposition, i, ctx.band()) {
            out.push(v);
        }
    }
    out
}

/// The four super-commutator relations on random guard-band vectors for
/// each `σ`, and on every guard-band basis vector at `l = 2`.
pub fn super_commutators(ctx: &Context) -> Result<Vec<Record>, ConfigError> {
    let sigmas = ctx.sigmas("super-commutators")?;
    let mut rng = rng_for(ctx.config.seed, "super-commutators/vectors");
    let vectors: Vec<Vec<SpinorForm>> = sigmas.iter().map(|_| random_band_vectors(ctx, &mut rng, RANDOM_VECTORS)).collect();
    let zero = Op::identity().scaled(Scalar::ZERO);
    let mut records = Vec::new();
    for rel in relations() {
        let mut checked = 0;
        let mut witness = None;
        for (s, vs) in sigmas.iter().zip(&vectors) {
            let (c, w) = compare(&(rel.op)(s), &zero, vs, rel.name);
            checked += c;
            if w.is_some() {
                witness = w;
                break;
            }
        }
        records.push(
            Record::new(rel.name, rel.anchor, status(&witness, checked), checked)
                .with_witness(witness.as_ref())
                .with_details(json!({ "sigma_samples": sigmas.len(), "vectors_per_sigma": RANDOM_VECTORS })),
        );
    }
    if ctx.space.l() == 2 {
        let basis = ctx.band_basis();
        for rel in relations() {
            let name = format!("{}-block-matrices", rel.name);
            let (checked, w) = compare(&(rel.op)(&sigmas[0]), &zero, &basis, &name);
            records.push(
                Record::new(name, rel.anchor, status(&w, checked), checked)
                    .with_witness(w.as_ref())
                    .with_details(json!({ "band_basis": basis.len() })),
            );
        }
    }
    Ok(records)
}

/// Algebra elements drawn for the equivariance checks.
pub const ALGEBRA_SAMPLES: usize = 10;

/// `[ρ′(A), X] = [ρ′(A), Y] = 0` and `[ρ′(A), Σ^σ] = Σ^{A·σ}`.
pub fn equivariance(ctx: &Context) -> Vec<Record> {
    let mut rng = rng_for(ctx.config.seed, "equivariance");
    let samples: Vec<_> = (0..ALGEBRA_SAMPLES)
        .map(|_| {
            let a = sampling::sp_element(&mut rng, ctx.space);
            let s = sampling::sigma(&mut rng, ctx.space);
            let vs = random_band_vectors(ctx, &mut rng, 2 * ctx.space.dim());
            (a, s, vs)
        })
        .collect();
    type Build = fn(&symspin_core::SpElement, &RicciLikeTensor) -> (Op, Op);
    let checks: [(&str, &str, Build); 3] = [
        ("rho-commutes-with-x", "[rho'(A), X] = 0", |a, _| {
            (Op::commutator(&Op::rho_prime(a), &Op::x(a.space())), Op::identity().scaled(Scalar::ZERO))
        }),
        ("rho-commutes-with-y", "[rho'(A), Y] = 0", |a, _| {
            (Op::commutator(&Op::rho_prime(a), &Op::y(a.space())), Op::identity().scaled(Scalar::ZERO))
        }),
        ("rho-moves-sigma", "[rho'(A), Sigma^s] = Sigma^{A.s}", |a, s| {
            (Op::commutator(&Op::rho_prime(a), &Op::sigma(s)), Op::sigma(&s.act(a)))
        }),
    ];
    checks
        .into_iter()
        .map(|(name, anchor, build)| {
            let mut checked = 0;
            let mut witness = None;
            for (a, s, vs) in &samples {
                let (p, q) = build(a, s);
                let (c, w) = compare(&p, &q, vs, name);
                checked += c;
                if w.is_some() {
                    witness = w;
                    break;
                }
            }
            Record::new(name, anchor, status(&witness, checked), checked)
                .with_witness(witness.as_ref())
                .with_details(json!({ "algebra_samples": ALGEBRA_SAMPLES }))
        })
        .collect()
}

/// Forbidden projections of `Σ^σ` and `Θ^σ` images vanish on every `E^{ij}`.
pub fn containment(ctx: &Context) -> Result<Vec<Record>, ConfigError> {
    let sigmas = ctx.sigmas("containment")?;
    let d = &ctx.decomposition;
    let nodes = d.xi().nodes();
    let records = nodes
        .par_iter()
        .map(|&(i, j)| {
            let name = format!("containment-{i}-{j}");
            let anchor = format!("Sigma E^({i},{j}) and Theta E^({i},{j}) lie in slots {}..={}", j.saturating_sub(1), j + 1);
            let mut checked = 0;
            let mut witness = None;
            let mut forbidden = (vec![], vec![]);
            for s in &sigmas {
                match d.verify_containment(i, j, s, ctx.band()) {
                    Err(e) => return Record::error(name, anchor, &e),
                    Ok(r) => {
                        checked += r.checked;
                        forbidden = (r.forbidden_sigma, r.forbidden_theta);
                        if r.status == Status::Fail {
                            witness = r.witness;
                            break;
                        }
                    }
                }
            }
            let st = if witness.is_some() {
                Status::Fail
            } else if forbidden.0.is_empty() && forbidden.1.is_empty() {
                Status::Vacuous
            } else {
                Status::Pass
            };
            Record::new(name, anchor, st, checked).with_witness(witness.as_ref()).with_details(json!({
                "forbidden_sigma_slots": forbidden.0,
                "forbidden_theta_slots": forbidden.1,
                "sigma_samples": sigmas.len(),
            }))
        })
        .collect();
    Ok(records)
}
