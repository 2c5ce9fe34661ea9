#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symspin_core::forms::basis_elements;
use symspin_core::operators::{Op, RicciLikeTensor};
use symspin_core::symplectic::Tensor;
use symspin_core::{Scalar, SpElement, SpinorForm, SymplecticSpace};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-3..=3)
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Tensor {
    let mut t = Tensor::zeros(n, 2);
    for i in 0..n {
        for j in i..n {
            let v = Scalar::from_int(small_int(rng));
            t.set(&[i, j], v.clone());
            t.set(&[j, i], v);
        }
    }
    t
}

pub fn random_sigma(rng: &mut ChaCha8Rng, space: SymplecticSpace) -> RicciLikeTensor {
    RicciLikeTensor::new(space, random_symmetric(rng, space.dim())).unwrap()
}

pub fn random_sp(rng: &mut ChaCha8Rng, space: SymplecticSpace) -> SpElement {
    SpElement::from_symmetric(space, &random_symmetric(rng, space.dim())).unwrap()
}

/// A sparse random element of `Λ^r ⊗ S_{≤cap}` with Gaussian integer
/// coefficients.
pub fn random_form(rng: &mut ChaCha8Rng, l: usize, r: usize, cap: u32, terms: usize) -> SpinorForm {
    let basis = basis_elements(l, r, cap);
    let mut out = SpinorForm::zero(l, cap);
    for _ in 0..terms {
        let (f, m) = basis[rng.gen_range(0..basis.len())];
        let c = Scalar::gaussian(small_int(rng), small_int(rng));
        out.add_assign(&SpinorForm::basis(l, f, m, c));
    }
    out.with_cap(cap).unwrap()
}

/// Compares two operators on every basis element `ε^I⊗x^α` with
/// `|I| = r` and `|α| ≤ cap`.
pub fn agree_on_basis(p: &Op, q: &Op, l: usize, r: usize, cap: u32) -> bool {
    basis_elements(l, r, cap).into_iter().all(|(f, m)| {
        let psi = SpinorForm::basis(l, f, m, Scalar::ONE);
        p.apply(&psi) == q.apply(&psi)
    })
}
