mod common;

use std::sync::OnceLock;

use common::{random_form, rng, small_int};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symspin_core::decomposition::IsotypicDecomposition;
use symspin_core::fedosov::{
    connection_curvature, curvature_from_split, dirac, dirac_via_twistor, exterior_spinor_derivative,
    forbidden_derivative_component, spinor_covariant_derivative, spinor_curvature, twistor_operator, BasePoly,
    FedosovConnection, FormField,
};
use symspin_core::operators::Op;
use symspin_core::{Error, FormIndex, Monomial, Scalar, SpinorForm, SymplecticSpace};

fn space() -> SymplecticSpace {
    SymplecticSpace::new(2).unwrap()
}

fn decomposition() -> &'static IsotypicDecomposition {
    static D: OnceLock<IsotypicDecomposition> = OnceLock::new();
    D.get_or_init(|| IsotypicDecomposition::build(space(), 10).unwrap())
}

fn poly(terms: &[(&[u32], i64)]) -> BasePoly {
    BasePoly::from_terms(terms.iter().map(|(e, c)| (Monomial::from_exponents(e), Scalar::from_int(*c))))
}

fn samples() -> Vec<(&'static str, FedosovConnection)> {
    let v = space();
    // cubic potential: constant symbols; quartic potential: linear symbols
    let cubic = poly(&[(&[3, 0, 0, 0], 1), (&[1, 1, 1, 0], 1), (&[0, 0, 1, 2], -1)]);
    let quartic = poly(&[(&[2, 1, 0, 1], 1), (&[0, 1, 3, 0], 1), (&[1, 0, 0, 2], 1)]);
    vec![
        ("flat", FedosovConnection::flat(v)),
        ("constant", FedosovConnection::from_potential(v, &cubic)),
        ("linear", FedosovConnection::from_potential(v, &quartic)),
    ]
}

fn random_poly(g: &mut ChaCha8Rng, deg: u32) -> BasePoly {
    let monos = Monomial::up_to_degree(4, deg);
    BasePoly::from_terms((0..3).map(|_| (monos[g.gen_range(0..monos.len())], Scalar::from_int(small_int(g)))))
}

fn random_field(g: &mut ChaCha8Rng, r: usize, cap: u32) -> FormField {
    let f = random_poly(g, 2);
    FormField::product(&f, &random_form(g, 2, r, cap, 3))
}

/// `(∇_k∇_l − ∇_l∇_k)e_j` on coordinate fields, lowered with `ω`.
fn curvature_oracle(conn: &FedosovConnection, i: usize, j: usize, k: usize, l: usize) -> BasePoly {
    let n = 4;
    let nabla = |a: usize, z: &[BasePoly]| -> Vec<BasePoly> {
        (0..n)
            .map(|m| {
                let mut p = z[m].derivative(a);
                for (b, zb) in z.iter().enumerate() {
                    p = p.add(&conn.gamma(m, a, b).mul(zb));
                }
                p
            })
            .collect()
    };
    let mut ej = vec![BasePoly::zero(); n];
    ej[j] = BasePoly::constant(Scalar::ONE);
    let kl = nabla(k, &nabla(l, &ej));
    let lk = nabla(l, &nabla(k, &ej));
    let mut out = BasePoly::zero();
    for m in 0..n {
        let w = space().w(m, i);
        if w != 0 {
            out = out.add(&kl[m].sub(&lk[m]).scale(&Scalar::from_int(w)));
        }
    }
    out
}

#[test]
fn curvature_matches_double_covariant_derivative() {
    for (name, conn) in samples() {
        let r = connection_curvature(&conn);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let from_field = BasePoly::from_terms(
                            r.terms().iter().map(|(m, t)| (*m, t.tensor().get(&[i, j, k, l]))),
                        );
                        assert_eq!(from_field, curvature_oracle(&conn, i, j, k, l), "{name} {i}{j}{k}{l}");
                    }
                }
            }
        }
        assert_eq!(name == "flat", r.is_zero());
    }
}

#[test]
fn ricci_trace_is_symmetric() {
    for (name, conn) in samples() {
        let r = connection_curvature(&conn);
        assert!(r.is_symmetric_in_first_pair(), "{name}");
        let sigma = r.ricci().unwrap();
        if name == "flat" {
            assert!(sigma.is_zero());
        }
    }
}

#[test]
fn weyl_split_reassembles_connection_curvature() {
    for (_, conn) in samples() {
        let r = connection_curvature(&conn);
        let sigma = r.ricci().unwrap();
        let weyl = r.weyl_split(&sigma);
        for (m, t) in r.terms() {
            let s = sigma.terms().get(m).unwrap();
            assert_eq!(&weyl.terms()[m].add(&symspin_core::curvature::extended_ricci(s)), t);
        }
    }
}

#[test]
fn second_spinor_derivative_is_the_curvature_action() {
    let mut g = rng(51);
    for (name, conn) in samples() {
        for _ in 0..10 {
            let phi = random_field(&mut g, 0, 4);
            let dd = exterior_spinor_derivative(&conn, &spinor_covariant_derivative(&conn, &phi).unwrap()).unwrap();
            assert_eq!(dd, spinor_curvature(&conn, &phi), "{name}");
            if name == "flat" {
                assert!(dd.is_zero());
            }
        }
    }
}

#[test]
fn squared_exterior_derivative_matches_fiberwise_operator() {
    let mut g = rng(52);
    for (name, conn) in samples() {
        for r in 0..=2 {
            let psi = random_field(&mut g, r, 4);
            let dd = exterior_spinor_derivative(&conn, &exterior_spinor_derivative(&conn, &psi).unwrap()).unwrap();
            assert_eq!(dd, curvature_from_split(&conn, &psi).unwrap(), "{name} r={r}");
        }
    }
}

#[test]
fn derivative_obeys_leibniz_over_functions() {
    let mut g = rng(53);
    let (_, conn) = samples().pop().unwrap();
    for _ in 0..5 {
        let f = random_poly(&mut g, 2);
        let phi = random_field(&mut g, 0, 3);
        let lhs = spinor_covariant_derivative(&conn, &phi.mul_poly(&f)).unwrap();
        let mut df_phi = FormField::zero(2);
        for a in 0..4 {
            df_phi = df_phi.add(&phi.mul_poly(&f.derivative(a)).wedge(a));
        }
        let rhs = df_phi.add(&spinor_covariant_derivative(&conn, &phi).unwrap().mul_poly(&f));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn flat_derivative_of_constant_and_linear_fields() {
    let v = space();
    let flat = FedosovConnection::flat(v);
    let s0 = SpinorForm::basis(2, FormIndex::EMPTY, Monomial::from_exponents(&[1, 2]), Scalar::I);
    assert!(spinor_covariant_derivative(&flat, &FormField::constant(&s0)).unwrap().is_zero());
    let y3 = BasePoly::monomial(Monomial::var(3), Scalar::ONE);
    let d = spinor_covariant_derivative(&flat, &FormField::product(&y3, &s0)).unwrap();
    assert_eq!(d, FormField::constant(&s0.wedge(3)));
    let one_form = FormField::constant(&s0.wedge(0));
    assert_eq!(spinor_covariant_derivative(&flat, &one_form).unwrap_err(), Error::FormDegree { expected: 0 });
}

#[test]
fn derivative_stays_within_neighbouring_components() {
    let mut g = rng(54);
    let d = decomposition();
    for (name, conn) in samples() {
        for (i, j) in d.xi().nodes().into_iter().filter(|(i, _)| *i < 4) {
            let basis = d.component_basis(i, j, 5);
            for _ in 0..5 {
                let fiber = basis[g.gen_range(0..basis.len())].clone();
                let psi = FormField::product(&random_poly(&mut g, 1), &fiber);
                let w = forbidden_derivative_component(d, i, j, &conn, &psi).unwrap();
                assert!(w.is_none(), "{name} ({i},{j}): {w:?}");
            }
        }
    }
}

#[test]
fn dirac_operator_sees_only_the_non_twistor_part() {
    let mut g = rng(55);
    let d = decomposition();
    for (name, conn) in samples() {
        for psi in d.component_basis(0, 0, 5).into_iter().take(6) {
            let phi = FormField::product(&random_poly(&mut g, 1), &psi);
            let lhs = dirac(&conn, &phi).unwrap();
            assert_eq!(lhs, dirac_via_twistor(d, &conn, &phi).unwrap(), "{name}");
            let expected = spinor_covariant_derivative(&conn, &phi).unwrap().apply(&Op::y(conn.space()));
            assert_eq!(lhs, expected);
        }
    }
}

#[test]
fn flat_twistor_compositions_vanish() {
    let mut g = rng(56);
    let d = decomposition();
    let flat = FedosovConnection::flat(space());
    let xi = d.xi();
    for i in 0..3 {
        for psi in d.component_basis(i, xi.m(i), 5).into_iter().take(5) {
            let field = FormField::product(&random_poly(&mut g, 2), &psi);
            let t1 = twistor_operator(d, i, &flat, &field).unwrap();
            let t2 = twistor_operator(d, i + 1, &flat, &t1).unwrap();
            if i == 1 {
                // T_{l+1}(T_l T_{l-1}) at l = 2
                assert!(twistor_operator(d, 3, &flat, &t2).unwrap().is_zero());
            } else {
                assert!(t2.is_zero(), "i={i}");
            }
        }
    }
}

#[test]
fn twistor_rejects_wrong_inputs() {
    let d = decomposition();
    let flat = FedosovConnection::flat(space());
    let y0 = SpinorForm::basis(2, FormIndex::EMPTY, Monomial::var(0), Scalar::ONE);
    let not_e11 = FormField::constant(&y0.wedge(0));
    assert!(matches!(twistor_operator(d, 1, &flat, &not_e11), Err(Error::NotInComponent { .. })));
    let high = SpinorForm::basis(2, FormIndex::EMPTY, Monomial::from_exponents(&[9, 0]), Scalar::ONE);
    let conn = samples().pop().unwrap().1;
    let err = twistor_operator(d, 0, &conn, &FormField::constant(&high)).unwrap_err();
    assert!(matches!(err, Error::GuardBand { cap: 10, .. }), "{err:?}");
}

#[test]
fn broken_symbol_names_the_offending_triple() {
    let v = space();
    let one = BasePoly::constant(Scalar::ONE);
    let err = FedosovConnection::from_entries(v, &[(0, 0, 0, one)]).unwrap_err();
    assert!(matches!(err, Error::ConnectionInvariant { .. }));
}
