mod common;

use proptest::prelude::*;
use symspin_core::spinor::clifford_on_monomial;
use symspin_core::{Monomial, PolySpinor, Scalar, SymplecticSpace};

fn clifford_defect(l: usize, v: usize, w: usize, m: Monomial) -> PolySpinor {
    let space = SymplecticSpace::new(l).unwrap();
    let s = PolySpinor::from_terms(l, m.degree(), [(m, Scalar::ONE)]).unwrap();
    let vw = s.clifford_basis(w + 1).unwrap().clifford_basis(v + 1).unwrap();
    let wv = s.clifford_basis(v + 1).unwrap().clifford_basis(w + 1).unwrap();
    let omega = Scalar::from_int(space.w(v, w));
    vw.sub(&wv).add(&s.scale(&(&Scalar::I * &omega)))
}

#[test]
fn clifford_relation_on_all_low_degree_monomials() {
    for (l, cap) in [(2usize, 8u32), (3, 6)] {
        for m in Monomial::up_to_degree(l, cap) {
            for v in 0..2 * l {
                for w in 0..2 * l {
                    assert!(clifford_defect(l, v, w, m).is_zero(), "l={l} v={v} w={w} {m:?}");
                }
            }
        }
    }
}

#[test]
fn multiplication_and_derivative_shift_degree() {
    let m = Monomial::from_exponents(&[2, 1]);
    let (c, up) = clifford_on_monomial(2, 0, m).unwrap();
    assert_eq!((c, up), (Scalar::I, Monomial::from_exponents(&[3, 1])));
    let (c, down) = clifford_on_monomial(2, 2, m).unwrap();
    assert_eq!((c, down), (Scalar::from_int(2), Monomial::from_exponents(&[1, 1])));
    assert!(clifford_on_monomial(2, 3, Monomial::var(0)).is_none());
}

proptest! {
    #[test]
    fn clifford_relation_on_random_spinors(
        coeffs in prop::collection::vec((-5i64..=5, -5i64..=5), 1..6),
        exps in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..6),
        v in 0usize..6,
        w in 0usize..6,
    ) {
        let l = 3;
        let space = SymplecticSpace::new(l).unwrap();
        let terms = coeffs.iter().zip(&exps).map(|((a, b), e)| (Monomial::from_exponents(e), Scalar::gaussian(*a, *b)));
        let s = PolySpinor::from_terms(l, 9, terms).unwrap();
        let vw = s.clifford_basis(w + 1).unwrap().clifford_basis(v + 1).unwrap();
        let wv = s.clifford_basis(v + 1).unwrap().clifford_basis(w + 1).unwrap();
        let omega = Scalar::from_int(space.w(v, w));
        prop_assert!(vw.sub(&wv).add(&s.scale(&(&Scalar::I * &omega))).is_zero());
    }
}
