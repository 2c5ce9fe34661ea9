mod common;

use common::{random_form, random_sigma, random_sp, rng};
use symspin_core::operators::Op;
use symspin_core::{Monomial, PolySpinor, Scalar, SymplecticSpace};

#[test]
fn rho_prime_commutes_with_x_and_y() {
    let mut g = rng(21);
    for (l, cap) in [(2usize, 6u32), (3, 4)] {
        let v = SymplecticSpace::new(l).unwrap();
        for _ in 0..10 {
            let rho = Op::rho_prime(&random_sp(&mut g, v));
            let cx = Op::commutator(&rho, &Op::x(v));
            let cy = Op::commutator(&rho, &Op::y(v));
            for r in 0..=2 * l {
                let psi = random_form(&mut g, l, r, cap, 5);
                assert!(cx.apply(&psi).is_zero(), "l={l} r={r}");
                assert!(cy.apply(&psi).is_zero(), "l={l} r={r}");
            }
        }
    }
}

#[test]
fn rho_prime_moves_sigma_by_the_tensor_action() {
    let mut g = rng(22);
    let v = SymplecticSpace::new(2).unwrap();
    for _ in 0..5 {
        let a = random_sp(&mut g, v);
        let s = random_sigma(&mut g, v);
        let lhs = Op::commutator(&Op::rho_prime(&a), &Op::sigma(&s));
        let rhs = Op::sigma(&s.act(&a));
        for r in 0..4 {
            let psi = random_form(&mut g, 2, r, 5, 5);
            assert_eq!(lhs.apply(&psi), rhs.apply(&psi));
        }
    }
}

#[test]
fn zero_algebra_element_acts_trivially() {
    let v = SymplecticSpace::new(2).unwrap();
    let psi = random_form(&mut rng(23), 2, 2, 4, 6);
    assert!(Op::rho_prime(&symspin_core::SpElement::zero(v)).apply(&psi).is_zero());
}

fn random_spinor(g: &mut rand_chacha::ChaCha8Rng, l: usize, cap: u32) -> PolySpinor {
    let monos = Monomial::up_to_degree(l, cap);
    let terms = (0..6).map(|_| {
        let m = monos[rand::Rng::gen_range(g, 0..monos.len())];
        (m, Scalar::gaussian(common::small_int(g), common::small_int(g)))
    });
    PolySpinor::from_terms(l, cap, terms).unwrap()
}

#[test]
fn meta_action_is_a_lie_homomorphism() {
    let mut g = rng(24);
    for l in [2usize, 3] {
        let v = SymplecticSpace::new(l).unwrap();
        for _ in 0..5 {
            let (a, b) = (random_sp(&mut g, v), random_sp(&mut g, v));
            let s = random_spinor(&mut g, l, 4);
            let ab = s.meta_action(&b).meta_action(&a);
            let ba = s.meta_action(&a).meta_action(&b);
            assert_eq!(ab.sub(&ba), s.meta_action(&a.bracket(&b)));
        }
    }
}

#[test]
fn meta_action_intertwines_clifford_multiplication() {
    let mut g = rng(25);
    for l in [2usize, 3] {
        let v = SymplecticSpace::new(l).unwrap();
        for _ in 0..5 {
            let a = random_sp(&mut g, v);
            let s = random_spinor(&mut g, l, 4);
            for k in 0..2 * l {
                let mut e = vec![Scalar::ZERO; 2 * l];
                e[k] = Scalar::ONE;
                let lhs = s.clifford_mul(&e).unwrap().meta_action(&a).sub(&s.meta_action(&a).clifford_mul(&e).unwrap());
                assert_eq!(lhs, s.clifford_mul(&a.apply(&e)).unwrap());
            }
        }
    }
}
