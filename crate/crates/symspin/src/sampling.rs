//! Seeded sampling of `σ`, `𝔰𝔭` elements and guard-band vectors.
//!
//! Every suite draws from its own generator, derived from the run seed and
//! the suite label, so results do not depend on which suites run or in what
//! order.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symspin_core::decomposition::IsotypicDecomposition;
use symspin_core::fedosov::{BasePoly, FormField};
use symspin_core::operators::RicciLikeTensor;
use symspin_core::symplectic::Tensor;
use symspin_core::{Monomial, Scalar, SpElement, SpinorForm, SymplecticSpace};

pub type SuiteRng = ChaCha8Rng;

/// A generator for `label`, independent of every other label.
pub fn rng_for(seed: u64, label: &str) -> SuiteRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // FNV-1a of the label selects the stream
    let stream = label.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    rng.set_stream(stream);
    rng
}

fn small(rng: &mut SuiteRng) -> i64 {
    rng.gen_range(-3..=3)
}

/// A nonzero symmetric matrix with entries in `−3..=3`.
pub fn symmetric(rng: &mut SuiteRng, n: usize) -> Tensor {
    loop {
        let mut t = Tensor::zeros(n, 2);
        for i in 0..n {
            for j in i..n {
                let v = Scalar::from_int(small(rng));
                t.set(&[i, j], v.clone());
                t.set(&[j, i], v);
            }
        }
        if !t.is_zero() {
            return t;
        }
    }
}

pub fn sigma(rng: &mut SuiteRng, space: SymplecticSpace) -> RicciLikeTensor {
    RicciLikeTensor::new(space, symmetric(rng, space.dim())).expect("symmetric")
}

pub fn sp_element(rng: &mut SuiteRng, space: SymplecticSpace) -> SpElement {
    SpElement::from_symmetric(space, &symmetric(rng, space.dim())).expect("symmetric")
}

fn gaussian(rng: &mut SuiteRng) -> Scalar {
    loop {
        let c = Scalar::gaussian(small(rng), small(rng));
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random nonzero combination of members of one guard-band block of form
/// degree `i`; `None` if the band has no blocks in that degree.
pub fn band_vector(rng: &mut SuiteRng, d: &IsotypicDecomposition, i: usize, band: u32) -> Option<SpinorForm> {
    let blocks: Vec<_> = d.band_blocks(i, band).collect();
    if blocks.is_empty() {
        return None;
    }
    let b = blocks[rng.gen_range(0..blocks.len())];
    let mut out = SpinorForm::zero(d.l(), d.cap());
    for _ in 0..3 {
        let (f, m) = b.members[rng.gen_range(0..b.members.len())];
        out.add_assign(&SpinorForm::basis(d.l(), f, m, gaussian(rng)));
    }
    if out.is_zero() {
        let (f, m) = b.members[0];
        out = SpinorForm::basis(d.l(), f, m, Scalar::ONE);
    }
    Some(out.with_cap(d.cap()).expect("band members fit the cap"))
}

/// A random base polynomial of degree at most `deg` in `2l` variables.
pub fn base_poly(rng: &mut SuiteRng, l: usize, deg: u32) -> BasePoly {
    let monos = Monomial::up_to_degree(2 * l, deg);
    loop {
        let p = BasePoly::from_terms((0..3).map(|_| (monos[rng.gen_range(0..monos.len())], Scalar::from_int(small(rng)))));
        if !p.is_zero() {
            return p;
        }
    }
}

/// `f·ψ` with `f` a random base polynomial and `ψ` a random element of
/// `Λ^r⊗S_{≤cap}`.
pub fn form_field(rng: &mut SuiteRng, l: usize, r: usize, cap: u32, base_deg: u32) -> FormField {
    let basis = symspin_core::forms::basis_elements(l, r, cap);
    let mut fiber = SpinorForm::zero(l, cap);
    for _ in 0..3 {
        let (f, m) = basis[rng.gen_range(0..basis.len())];
        fiber.add_assign(&SpinorForm::basis(l, f, m, gaussian(rng)));
    }
    FormField::product(&base_poly(rng, l, base_deg), &fiber)
}

/// A uniformly chosen element of a slice.
pub fn pick<'a, T>(rng: &mut SuiteRng, items: &'a [T]) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_give_independent_reproducible_streams() {
        let a: Vec<u32> = (0..4).map(|_| rng_for(5, "x").gen()).collect();
        let b: Vec<u32> = (0..4).map(|_| rng_for(5, "x").gen()).collect();
        assert_eq!(a, b);
        let mut r1 = rng_for(5, "x");
        let mut r2 = rng_for(5, "y");
        assert_ne!(r1.gen::<u64>(), r2.gen::<u64>());
    }

    #[test]
    fn sampled_sigma_is_symmetric_and_nonzero() {
        let v = SymplecticSpace::new(2).unwrap();
        let s = sigma(&mut rng_for(1, "s"), v);
        assert!(!s.is_zero());
    }
}
