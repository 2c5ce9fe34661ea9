mod common;

use common::{agree_on_basis, random_form, random_sigma, rng};
use proptest::prelude::*;
use symspin_core::operators::{Op, RicciLikeTensor};
use symspin_core::symplectic::Tensor;
use symspin_core::{Scalar, SymplecticSpace};

struct Relations {
    sigma_x: Op,
    sigma_y_y2: Op,
    x_theta: Op,
    theta_y2: Op,
}

impl Relations {
    fn new(s: &RicciLikeTensor) -> Self {
        let v = s.space();
        let (x, y) = (Op::x(v), Op::y(v));
        let (sg, th) = (Op::sigma(s), Op::theta(s));
        let y2 = &y * &y;
        Relations {
            sigma_x: Op::anticommutator(&sg, &x),
            sigma_y_y2: Op::commutator(&Op::anticommutator(&sg, &y), &y2),
            x_theta: &Op::commutator(&x, &th) - &sg.scaled(Scalar::imag(2, 1)),
            theta_y2: Op::commutator(&th, &y2),
        }
    }

    fn all(&self) -> [&Op; 4] {
        [&self.sigma_x, &self.sigma_y_y2, &self.x_theta, &self.theta_y2]
    }
}

#[test]
fn relations_hold_on_random_forms() {
    let mut g = rng(7);
    for (l, cap) in [(2usize, 6u32), (3, 4)] {
        let v = SymplecticSpace::new(l).unwrap();
        for _ in 0..5 {
            let rel = Relations::new(&random_sigma(&mut g, v));
            for _ in 0..30 {
                let r = rand::Rng::gen_range(&mut g, 0..=2 * l);
                let psi = random_form(&mut g, l, r, cap, 4);
                for op in rel.all() {
                    assert!(op.apply(&psi).is_zero());
                }
            }
        }
    }
}

#[test]
fn relations_hold_on_every_basis_element() {
    let mut g = rng(8);
    let v = SymplecticSpace::new(2).unwrap();
    let rel = Relations::new(&random_sigma(&mut g, v));
    let zero = Op::identity().scaled(Scalar::ZERO);
    for r in 0..=4 {
        for op in rel.all() {
            assert!(agree_on_basis(op, &zero, 2, r, 5));
        }
    }
}

#[test]
fn zero_sigma_gives_zero_operators() {
    let v = SymplecticSpace::new(2).unwrap();
    let s = RicciLikeTensor::zero(v);
    let mut g = rng(9);
    let psi = random_form(&mut g, 2, 1, 4, 5);
    assert!(Op::sigma(&s).apply(&psi).is_zero());
    assert!(Op::theta(&s).apply(&psi).is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn sigma_and_theta_are_linear(a in prop::collection::vec(-3i64..=3, 10), b in prop::collection::vec(-3i64..=3, 10), seed in 0u64..1000) {
        let v = SymplecticSpace::new(2).unwrap();
        let sym = |c: &[i64]| {
            let mut t = Tensor::zeros(4, 2);
            let mut k = 0;
            for i in 0..4 {
                for j in i..4 {
                    t.set(&[i, j], Scalar::from_int(c[k]));
                    t.set(&[j, i], Scalar::from_int(c[k]));
                    k += 1;
                }
            }
            RicciLikeTensor::new(v, t).unwrap()
        };
        let (s1, s2) = (sym(&a), sym(&b));
        let sum = s1.add(&s2);
        let mut g = rng(seed);
        let psi = random_form(&mut g, 2, 2, 4, 4);
        prop_assert_eq!(Op::sigma(&sum).apply(&psi), Op::sigma(&s1).apply(&psi).add(&Op::sigma(&s2).apply(&psi)));
        prop_assert_eq!(Op::theta(&sum).apply(&psi), Op::theta(&s1).apply(&psi).add(&Op::theta(&s2).apply(&psi)));
    }
}
