//! Spinor-valued exterior forms `Λ^•V* ⊗ S_{≤N}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{accumulate, SparseVector};
use crate::monomial::{FormIndex, Monomial};
use crate::scalar::Scalar;
use crate::spinor::{Parity, PolySpinor};

/// Sparse coefficients keyed by (exterior basis element, spinor monomial).
pub type FormTerms = BTreeMap<(FormIndex, Monomial), Scalar>;

/// An element of `Λ^•V* ⊗ S` whose spinor parts have total degree at most
/// `cap`. Elements may mix form degrees; [`SpinorForm::form_degree`] reports
/// the degree of homogeneous ones. Equality compares elements and ignores
/// the cap.
#[derive(Clone, Debug)]
pub struct SpinorForm {
    l: usize,
    cap: u32,
    terms: FormTerms,
}

impl PartialEq for SpinorForm {
    fn eq(&self, other: &Self) -> bool {
        self.l == other.l && self.terms == other.terms
    }
}

impl Eq for SpinorForm {}

impl SpinorForm {
    pub fn zero(l: usize, cap: u32) -> Self {
        SpinorForm { l, cap, terms: FormTerms::new() }
    }

    /// Builds from raw terms. Rejects monomials above the cap and form
    /// indices outside `0..2l`.
    pub fn from_terms(
        l: usize,
        cap: u32,
        terms: impl IntoIterator<Item = ((FormIndex, Monomial), Scalar)>,
    ) -> Result<Self> {
        let mut out = SpinorForm::zero(l, cap);
        for ((f, m), c) in terms {
            if m.degree() > cap {
                return Err(Error::Shape(alloc::format!("monomial {m:?} exceeds degree cap {cap}")));
            }
            if f.bits() >> (2 * l) != 0 {
                return Err(Error::Shape(alloc::format!("form index {f:?} outside 1..={}", 2 * l)));
            }
            accumulate(&mut out.terms, (f, m), c);
        }
        Ok(out)
    }

    /// `c · ε^I ⊗ x^α`, with the cap set to `|α|`.
    pub fn basis(l: usize, form: FormIndex, mono: Monomial, c: Scalar) -> Self {
        let mut out = SpinorForm::zero(l, mono.degree());
        accumulate(&mut out.terms, (form, mono), c);
        out
    }

    /// `ε^I ⊗ s`
    pub fn tensor(form: FormIndex, s: &PolySpinor) -> Self {
        let mut out = SpinorForm::zero(s.l(), s.cap());
        for (m, c) in s.terms() {
            accumulate(&mut out.terms, (form, *m), c.clone());
        }
        out
    }

    pub(crate) fn from_raw(l: usize, cap: u32, terms: FormTerms) -> Self {
        SpinorForm { l, cap, terms }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> &FormTerms {
        &self.terms
    }

    pub fn into_terms(self) -> FormTerms {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, form: FormIndex, mono: Monomial) -> Scalar {
        self.terms.get(&(form, mono)).cloned().unwrap_or(Scalar::ZERO)
    }

    /// The common form degree, `None` for zero or mixed elements.
    pub fn form_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|(f, _)| f.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Largest spinor degree present.
    pub fn poly_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(_, m)| m.degree()).max()
    }

    /// Common spinor parity, `None` for zero or mixed elements.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|(_, m)| Parity::of_degree(m.degree()));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn with_cap(mut self, cap: u32) -> Result<Self> {
        if self.poly_degree().is_some_and(|d| d > cap) {
            return Err(Error::Shape(alloc::format!("form does not fit degree cap {cap}")));
        }
        self.cap = cap;
        Ok(self)
    }

    /// The part of form degree `r`.
    pub fn degree_part(&self, r: usize) -> SpinorForm {
        let terms = self.terms.iter().filter(|((f, _), _)| f.degree() == r);
        SpinorForm { l: self.l, cap: self.cap, terms: terms.map(|(k, v)| (*k, v.clone())).collect() }
    }

    pub fn add(&self, other: &SpinorForm) -> SpinorForm {
        debug_assert_eq!(self.l, other.l);
        let mut out = SpinorForm { l: self.l, cap: self.cap.max(other.cap), terms: self.terms.clone() };
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, *k, c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &SpinorForm) {
        self.cap = self.cap.max(other.cap);
        for (k, c) in &other.terms {
            accumulate(&mut self.terms, *k, c.clone());
        }
    }

    pub fn sub(&self, other: &SpinorForm) -> SpinorForm {
        let mut out = SpinorForm { l: self.l, cap: self.cap.max(other.cap), terms: self.terms.clone() };
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, *k, -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SpinorForm {
        if c.is_zero() {
            return SpinorForm::zero(self.l, self.cap);
        }
        SpinorForm {
            l: self.l,
            cap: self.cap,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// `ε^{slot} ∧ ψ` (0-based slot).
    pub fn wedge(&self, slot: usize) -> SpinorForm {
        let mut out = SpinorForm::zero(self.l, self.cap);
        for ((f, m), c) in &self.terms {
            if let Some((s, g)) = f.wedge_left(slot) {
                accumulate(&mut out.terms, (g, *m), c.scale_int(s));
            }
        }
        out
    }

    /// `ι_{e_slot} ψ` (0-based slot).
    pub fn contract(&self, slot: usize) -> SpinorForm {
        let mut out = SpinorForm::zero(self.l, self.cap);
        for ((f, m), c) in &self.terms {
            if let Some((s, g)) = f.contract(slot) {
                accumulate(&mut out.terms, (g, *m), c.scale_int(s));
            }
        }
        out
    }

    /// Coordinates against an indexed basis; `None` if a term is missing
    /// from the index.
    pub fn to_vector(&self, index: &BTreeMap<(FormIndex, Monomial), usize>) -> Option<SparseVector> {
        let mut v = SparseVector::new();
        for (k, c) in &self.terms {
            v.insert(*index.get(k)?, c.clone());
        }
        Some(v)
    }

    pub fn from_vector(l: usize, cap: u32, basis: &[(FormIndex, Monomial)], v: &SparseVector) -> Self {
        let mut out = SpinorForm::zero(l, cap);
        for (&i, c) in v {
            accumulate(&mut out.terms, basis[i], c.clone());
        }
        out
    }
}

/// All basis elements `ε^I ⊗ x^α` with `|I| = r` and `|α| ≤ cap`, ordered
/// by form index then monomial.
pub fn basis_elements(l: usize, r: usize, cap: u32) -> Vec<(FormIndex, Monomial)> {
    let monos = Monomial::up_to_degree(l, cap);
    let mut out = Vec::new();
    for f in FormIndex::all_of_degree(2 * l, r) {
        for m in &monos {
            out.push((f, *m));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_and_contract() {
        let psi = SpinorForm::basis(2, FormIndex::from_slots(&[1]).unwrap(), Monomial::ONE, Scalar::ONE);
        let w = psi.wedge(0);
        assert_eq!(w.coeff(FormIndex::from_slots(&[0, 1]).unwrap(), Monomial::ONE), Scalar::ONE);
        let w = psi.wedge(2);
        assert_eq!(w.coeff(FormIndex::from_slots(&[1, 2]).unwrap(), Monomial::ONE), Scalar::from_int(-1));
        assert!(psi.wedge(1).is_zero());
        // ι_e ∘ ε∧ + ε∧ ∘ ι_e = id
        let lhs = psi.wedge(1).contract(1).add(&psi.contract(1).wedge(1));
        assert_eq!(lhs, psi);
    }

    #[test]
    fn degree_bookkeeping() {
        let f = FormIndex::from_slots(&[0, 3]).unwrap();
        let psi = SpinorForm::basis(2, f, Monomial::from_exponents(&[2, 1]), Scalar::I);
        assert_eq!(psi.form_degree(), Some(2));
        assert_eq!(psi.poly_degree(), Some(3));
        assert_eq!(psi.parity(), Some(Parity::Odd));
        assert!(psi.clone().with_cap(2).is_err());
        assert_eq!(basis_elements(2, 1, 2).len(), 4 * 6);
    }
}
