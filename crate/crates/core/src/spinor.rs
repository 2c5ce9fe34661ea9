//! Truncated polynomial spinors `S_{≤N} ⊂ ℂ[x¹,…,x^l]`, symplectic Clifford
//! multiplication, and the derived metaplectic action of `𝔰𝔭(2l, ℝ)`.
//!
//! Clifford multiplication by the basis vectors is
//! `e_i.f = i·x^i·f` for `i ≤ l` and `e_{i+l}.f = ∂f/∂x^i`, so that
//! `v.w.s − w.v.s = −i·ω(v, w)·s`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::accumulate;
use crate::monomial::Monomial;
use crate::scalar::Scalar;
use crate::symplectic::{SymplecticSpace, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(d: u32) -> Parity {
        if d.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// `e_k.x^α = c·x^β` for the 0-based basis index `k`, or `None` when the
/// result vanishes.
#[inline]
pub fn clifford_on_monomial(l: usize, k: usize, m: Monomial) -> Option<(Scalar, Monomial)> {
    if k < l {
        Some((Scalar::I, m.raise(k)))
    } else {
        let v = k - l;
        let e = m.exp(v);
        m.lower(v).map(|lowered| (Scalar::from_int(e as i64), lowered))
    }
}

/// A polynomial spinor with every monomial of total degree at most `cap`.
/// Equality ignores the cap.
#[derive(Clone, Debug)]
pub struct PolySpinor {
    l: usize,
    cap: u32,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for PolySpinor {
    fn eq(&self, other: &Self) -> bool {
        self.l == other.l && self.terms == other.terms
    }
}

impl Eq for PolySpinor {}

impl PolySpinor {
    pub fn zero(l: usize, cap: u32) -> Self {
        PolySpinor { l, cap, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        l: usize,
        cap: u32,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut s = PolySpinor::zero(l, cap);
        for (m, c) in terms {
            if m.degree() > cap {
                return Err(Error::Shape(alloc::format!(
                    "monomial {m:?} exceeds degree cap {cap}"
                )));
            }
            accumulate(&mut s.terms, m, c);
        }
        Ok(s)
    }

    /// `c·x^exps`, with the cap set to the monomial degree.
    pub fn monomial(l: usize, exps: &[u32], c: Scalar) -> Self {
        assert_eq!(exps.len(), l, "exponent vector length must equal l");
        let m = Monomial::from_exponents(exps);
        let mut s = PolySpinor::zero(l, m.degree());
        accumulate(&mut s.terms, m, c);
        s
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree present, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common parity of all monomials, `None` for zero or mixed spinors.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| Parity::of_degree(m.degree()));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn with_cap(mut self, cap: u32) -> Result<Self> {
        if self.degree().is_some_and(|d| d > cap) {
            return Err(Error::Shape(alloc::format!("spinor does not fit degree cap {cap}")));
        }
        self.cap = cap;
        Ok(self)
    }

    pub fn add(&self, other: &PolySpinor) -> PolySpinor {
        assert_eq!(self.l, other.l);
        let mut out = PolySpinor { l: self.l, cap: self.cap.max(other.cap), terms: self.terms.clone() };
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, *m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolySpinor) -> PolySpinor {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> PolySpinor {
        let mut out = PolySpinor::zero(self.l, self.cap);
        for (m, v) in &self.terms {
            accumulate(&mut out.terms, *m, v * c);
        }
        out
    }

    /// Splits into the parts supported on even and odd total degree.
    pub fn parity_split(&self) -> (PolySpinor, PolySpinor) {
        let (even, odd): (BTreeMap<_, _>, BTreeMap<_, _>) =
            self.terms.iter().map(|(m, c)| (*m, c.clone())).partition(|(m, _)| m.degree() % 2 == 0);
        (
            PolySpinor { l: self.l, cap: self.cap, terms: even },
            PolySpinor { l: self.l, cap: self.cap, terms: odd },
        )
    }

    /// `e_k.s` for the 1-based basis index `k`; the result has cap `N + 1`.
    pub fn clifford_basis(&self, k: usize) -> Result<PolySpinor> {
        if k == 0 || k > 2 * self.l {
            return Err(Error::IndexOutOfRange { index: k, dim: 2 * self.l });
        }
        Ok(self.clifford_basis0(k - 1))
    }

    fn clifford_basis0(&self, k: usize) -> PolySpinor {
        let mut out = PolySpinor::zero(self.l, self.cap + 1);
        for (m, c) in &self.terms {
            if let Some((f, m2)) = clifford_on_monomial(self.l, k, *m) {
                accumulate(&mut out.terms, m2, &f * c);
            }
        }
        out
    }

    /// `v.s` for `v = Σ v^k e_k` given by its `2l` coordinates.
    pub fn clifford_mul(&self, v: &[Scalar]) -> Result<PolySpinor> {
        if v.len() != 2 * self.l {
            return Err(Error::Shape(alloc::format!(
                "vector has {} coordinates, expected {}",
                v.len(),
                2 * self.l
            )));
        }
        let mut out = PolySpinor::zero(self.l, self.cap + 1);
        for (k, vk) in v.iter().enumerate() {
            if !vk.is_zero() {
                out = out.add(&self.clifford_basis0(k).scale(vk));
            }
        }
        Ok(out)
    }

    /// The derived metaplectic action `m(A)s`; the result has cap `N + 2`.
    pub fn meta_action(&self, a: &SpElement) -> PolySpinor {
        assert_eq!(a.l(), self.l);
        let mut out = PolySpinor::zero(self.l, self.cap + 2);
        for (i, j, c) in a.quadratic_form() {
            for (m, v) in &self.terms {
                let Some((f1, m1)) = clifford_on_monomial(self.l, j, *m) else { continue };
                let Some((f2, m2)) = clifford_on_monomial(self.l, i, m1) else { continue };
                accumulate(&mut out.terms, m2, &(&(&c * &f1) * &f2) * v);
            }
        }
        out
    }
}

/// An element `A` of `𝔰𝔭(V, ω)`, stored as the matrix `A^i_j`
/// (`(Av)^i = A^i_j v^j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpElement {
    space: SymplecticSpace,
    a: Tensor,
}

impl SpElement {
    /// Validates `ω(Av, w) + ω(v, Aw) = 0` on all basis pairs.
    pub fn new(space: SymplecticSpace, a: Tensor) -> Result<Self> {
        let n = space.dim();
        if a.dim() != n || a.rank() != 2 {
            return Err(Error::Shape(alloc::format!("expected a {n}x{n} matrix")));
        }
        for v in 0..n {
            for w in 0..n {
                // ω(A e_v, e_w) + ω(e_v, A e_w)
                let mut s = Scalar::ZERO;
                for i in 0..n {
                    let wi = space.w(i, w);
                    if wi != 0 {
                        s += &a.at(&[i, v]).scale_int(wi);
                    }
                    let vi = space.w(v, i);
                    if vi != 0 {
                        s += &a.at(&[i, w]).scale_int(vi);
                    }
                }
                if !s.is_zero() {
                    return Err(Error::NotSymplectic { v: v + 1, w: w + 1 });
                }
            }
        }
        Ok(SpElement { space, a })
    }

    /// `A = ω·S` for a symmetric `S`; every element of `𝔰𝔭` has this form.
    pub fn from_symmetric(space: SymplecticSpace, s: &Tensor) -> Result<Self> {
        let n = space.dim();
        for i in 0..n {
            for j in 0..n {
                if s.at(&[i, j]) != s.at(&[j, i]) {
                    return Err(Error::NotSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        let a = Tensor::from_fn(n, 2, |ix| {
            let (k, w) = space.partner(ix[0]);
            s.get(&[k, ix[1]]).scale_int(w)
        });
        SpElement::new(space, a)
    }

    pub fn zero(space: SymplecticSpace) -> Self {
        SpElement { space, a: Tensor::zeros(space.dim(), 2) }
    }

    pub fn l(&self) -> usize {
        self.space.l()
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn matrix(&self) -> &Tensor {
        &self.a
    }

    /// `A^i_j`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.a.at(&[i, j])
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let n = self.space.dim();
        (0..n)
            .map(|i| {
                let mut s = Scalar::ZERO;
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() {
                        s += &(self.a.at(&[i, j]) * vj);
                    }
                }
                s
            })
            .collect()
    }

    /// `[A, B] = AB − BA`
    pub fn bracket(&self, other: &SpElement) -> SpElement {
        let n = self.space.dim();
        let m = Tensor::from_fn(n, 2, |ix| {
            let mut s = Scalar::ZERO;
            for k in 0..n {
                s += &(self.a.at(&[ix[0], k]) * other.a.at(&[k, ix[1]]));
                s -= &(other.a.at(&[ix[0], k]) * self.a.at(&[k, ix[1]]));
            }
            s
        });
        SpElement { space: self.space, a: m }
    }

    pub fn add(&self, other: &SpElement) -> SpElement {
        SpElement { space: self.space, a: self.a.add(&other.a) }
    }

    pub fn scale(&self, c: &Scalar) -> Result<SpElement> {
        if !c.is_real() {
            return Err(Error::Shape("sp elements are real; complex scaling not allowed".into()));
        }
        Ok(SpElement { space: self.space, a: self.a.scale(c) })
    }

    /// Nonzero coefficients `(i, j, c)` (0-based) with
    /// `m(A) = Σ c·e_i e_j`, namely `c = (i/2)·a^{ij}`, `a^{ij} = Σ_b A^i_b ω^{jb}`.
    pub fn quadratic_form(&self) -> Vec<(usize, usize, Scalar)> {
        let n = self.space.dim();
        let half_i = Scalar::imag(1, 2);
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                // ω^{jb} is nonzero only for b = partner(j)
                let (b, _) = self.space.partner(j);
                let aij = self.a.at(&[i, b]).scale_int(self.space.w_inv(j, b));
                if !aij.is_zero() {
                    out.push((i, j, &half_i * &aij));
                }
            }
        }
        out
    }
}
