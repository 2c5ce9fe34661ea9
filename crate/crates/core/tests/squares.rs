mod common;

use common::{agree_on_basis, random_form, rng};
use symspin_core::operators::{x_squared_closed_form, y_squared_closed_form, ContractionOrder, Op};
use symspin_core::{FormIndex, Monomial, Scalar, SpinorForm, SymplecticSpace};

#[test]
fn x_squared_matches_closed_form() {
    for (l, cap) in [(2usize, 7u32), (3, 4)] {
        let v = SymplecticSpace::new(l).unwrap();
        let x = Op::x(v);
        let x2 = &x * &x;
        for r in 0..=2 * l {
            assert!(agree_on_basis(&x2, &x_squared_closed_form(v), l, r, cap), "l={l} r={r}");
        }
    }
}

#[test]
fn y_squared_matches_closed_form_with_inner_first_contraction() {
    for (l, cap) in [(2usize, 7u32), (3, 4)] {
        let v = SymplecticSpace::new(l).unwrap();
        let y = Op::y(v);
        let y2 = &y * &y;
        let closed = y_squared_closed_form(v, ContractionOrder::SecondIndexOutside);
        for r in 0..=2 * l {
            assert!(agree_on_basis(&y2, &closed, l, r, cap), "l={l} r={r}");
        }
    }
}

/// With `ι_{e_{ij}} = ι_{e_i}ι_{e_j}` the closed form is `−Y²`.
#[test]
fn y_squared_opposite_contraction_order_flips_sign() {
    let v = SymplecticSpace::new(1).unwrap();
    let y = Op::y(v);
    let psi = SpinorForm::basis(1, FormIndex::from_slots(&[0, 1]).unwrap(), Monomial::var(0), Scalar::ONE);
    let actual = (&y * &y).apply(&psi);
    assert_eq!(actual, SpinorForm::basis(1, FormIndex::EMPTY, Monomial::var(0), Scalar::I));
    let literal = y_squared_closed_form(v, ContractionOrder::FirstIndexOutside).apply(&psi);
    assert_eq!(literal, actual.scale(&Scalar::from_int(-1)));

    let v = SymplecticSpace::new(2).unwrap();
    let mut g = rng(11);
    for _ in 0..10 {
        let psi = random_form(&mut g, 2, 3, 5, 6);
        let actual = (&Op::y(v) * &Op::y(v)).apply(&psi);
        let literal = y_squared_closed_form(v, ContractionOrder::FirstIndexOutside).apply(&psi);
        assert!(literal.add(&actual).is_zero());
    }
}
