//! The operators `X`, `Y`, `Σ^σ`, `Θ^σ` and `ρ′(A)` on `Λ^•V*⊗S`, with an
//! algebra of compositions, sums and (anti)commutators, and assembly of
//! exact block matrices.
//!
//! ```text
//! X(α⊗s)   = Σ_i ε^i∧α ⊗ e_i.s
//! Y(α⊗s)   = Σ_{ij} ω^{ij} ι_{e_i}α ⊗ e_j.s
//! Σ^σ(α⊗s) = Σ_{ij} σ^i_j ε^j∧α ⊗ e_i.s
//! Θ^σ(α⊗s) = Σ_{ij} α ⊗ σ^{ij} e_i.e_j.s
//! ```
//!
//! Operators never truncate: one of Clifford order `c` maps spinor degree
//! `≤ N` to `≤ N + c`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::forms::{basis_elements, FormTerms, SpinorForm};
use crate::linalg::{accumulate, SparseMatrix};
use crate::monomial::{FormIndex, Monomial};
use crate::scalar::Scalar;
use crate::spinor::{clifford_on_monomial, Parity, SpElement};
use crate::symplectic::{SymplecticSpace, Tensor};

/// A linear operator on spinor-valued forms.
pub trait SpinorOperator: Send + Sync {
    /// Change of form degree, `None` if the operator mixes degrees.
    fn form_shift(&self) -> Option<i32>;
    /// Maximal increase of spinor polynomial degree.
    fn clifford_order(&self) -> u32;
    fn apply(&self, psi: &SpinorForm) -> SpinorForm;
}

/// A shareable operator handle supporting `*` (composition), `+`, `-`.
#[derive(Clone)]
pub struct Op(Arc<dyn SpinorOperator>);

impl fmt::Debug for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Op(shift {:?}, order {})", self.form_shift(), self.clifford_order())
    }
}

impl Op {
    pub fn new(op: impl SpinorOperator + 'static) -> Self {
        Op(Arc::new(op))
    }

    pub fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        self.0.apply(psi)
    }

    pub fn form_shift(&self) -> Option<i32> {
        self.0.form_shift()
    }

    pub fn clifford_order(&self) -> u32 {
        self.0.clifford_order()
    }

    pub fn x(space: SymplecticSpace) -> Op {
        Op::new(XOp { space })
    }

    pub fn y(space: SymplecticSpace) -> Op {
        Op::new(YOp { space })
    }

    pub fn sigma(sigma: &RicciLikeTensor) -> Op {
        Op::new(SigmaOp { sigma: sigma.clone() })
    }

    pub fn theta(sigma: &RicciLikeTensor) -> Op {
        Op::new(ThetaOp { sigma: sigma.clone() })
    }

    pub fn rho_prime(a: &SpElement) -> Op {
        Op::new(RhoPrime { a: a.clone() })
    }

    pub fn identity() -> Op {
        Op::new(Scaled { c: Scalar::ONE, inner: None })
    }

    /// `ψ ↦ Σ_{ij} b_{ij} ε^i∧ε^j∧ψ` for a 2-tensor `b` (0-based storage).
    pub fn wedge2(b: &Tensor) -> Op {
        Op::new(Wedge2 { b: b.clone() })
    }

    /// `ψ ↦ Σ_{ij} c^{ij} ι_{e_i} ι_{e_j} ψ`.
    pub fn contract2(c: &Tensor) -> Op {
        Op::new(Contract2 { c: c.clone() })
    }

    pub fn scaled(&self, c: Scalar) -> Op {
        Op::new(Scaled { c, inner: Some(self.clone()) })
    }

    pub fn pow(&self, k: u32) -> Op {
        let mut out = Op::identity();
        for _ in 0..k {
            out = self * &out;
        }
        out
    }

    /// `[P, Q] = PQ − QP`
    pub fn commutator(p: &Op, q: &Op) -> Op {
        &(p * q) - &(q * p)
    }

    /// `{P, Q} = PQ + QP`
    pub fn anticommutator(p: &Op, q: &Op) -> Op {
        &(p * q) + &(q * p)
    }
}

/// How `ι_{e_{ij}}` composes its two contractions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractionOrder {
    /// `ι_{e_{ij}} = ι_{e_i} ι_{e_j}`
    FirstIndexOutside,
    /// `ι_{e_{ij}} = ι_{e_j} ι_{e_i}`
    SecondIndexOutside,
}

/// `α⊗s ↦ −(i/2) ω_{ij} ε^i∧ε^j∧α⊗s`
pub fn x_squared_closed_form(space: SymplecticSpace) -> Op {
    let c = Scalar::imag(-1, 2);
    Op::wedge2(&space.omega_matrix().scale(&c))
}

/// `α⊗s ↦ (i/2) ω^{ij} ι_{e_{ij}}α⊗s` with the given reading of `ι_{e_{ij}}`.
pub fn y_squared_closed_form(space: SymplecticSpace, order: ContractionOrder) -> Op {
    let w = space.omega_inv_matrix();
    let c = match order {
        ContractionOrder::FirstIndexOutside => w,
        ContractionOrder::SecondIndexOutside => Tensor::from_fn(w.dim(), 2, |ix| w.get(&[ix[1], ix[0]])),
    };
    Op::contract2(&c.scale(&Scalar::imag(1, 2)))
}

impl SpinorOperator for Op {
    fn form_shift(&self) -> Option<i32> {
        self.0.form_shift()
    }
    fn clifford_order(&self) -> u32 {
        self.0.clifford_order()
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        self.0.apply(psi)
    }
}

struct Compose(Op, Op);

impl SpinorOperator for Compose {
    fn form_shift(&self) -> Option<i32> {
        Some(self.0.form_shift()? + self.1.form_shift()?)
    }
    fn clifford_order(&self) -> u32 {
        self.0.clifford_order() + self.1.clifford_order()
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        self.0.apply(&self.1.apply(psi))
    }
}

struct Sum(Vec<(Scalar, Op)>);

impl SpinorOperator for Sum {
    fn form_shift(&self) -> Option<i32> {
        let mut it = self.0.iter().map(|(_, o)| o.form_shift());
        let first = it.next()??;
        it.all(|s| s == Some(first)).then_some(first)
    }
    fn clifford_order(&self) -> u32 {
        self.0.iter().map(|(_, o)| o.clifford_order()).max().unwrap_or(0)
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        let mut out = SpinorForm::zero(psi.l(), psi.cap() + self.clifford_order());
        for (c, o) in &self.0 {
            out.add_assign(&o.apply(psi).scale(c));
        }
        out
    }
}

struct Scaled {
    c: Scalar,
    inner: Option<Op>,
}

impl SpinorOperator for Scaled {
    fn form_shift(&self) -> Option<i32> {
        self.inner.as_ref().map_or(Some(0), |o| o.form_shift())
    }
    fn clifford_order(&self) -> u32 {
        self.inner.as_ref().map_or(0, |o| o.clifford_order())
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        match &self.inner {
            None => psi.scale(&self.c),
            Some(o) => o.apply(psi).scale(&self.c),
        }
    }
}

impl Mul for &Op {
    type Output = Op;
    /// Composition: `(P * Q)ψ = P(Qψ)`.
    fn mul(self, rhs: &Op) -> Op {
        Op::new(Compose(self.clone(), rhs.clone()))
    }
}

impl Add for &Op {
    type Output = Op;
    fn add(self, rhs: &Op) -> Op {
        Op::new(Sum(alloc::vec![(Scalar::ONE, self.clone()), (Scalar::ONE, rhs.clone())]))
    }
}

impl Sub for &Op {
    type Output = Op;
    fn sub(self, rhs: &Op) -> Op {
        Op::new(Sum(alloc::vec![(Scalar::ONE, self.clone()), (Scalar::from_int(-1), rhs.clone())]))
    }
}

impl Neg for &Op {
    type Output = Op;
    fn neg(self) -> Op {
        self.scaled(Scalar::from_int(-1))
    }
}

/// Applies a term-local map `(I, α, c) ↦ contributions` to every term.
fn map_terms(
    psi: &SpinorForm,
    order: u32,
    mut f: impl FnMut(FormIndex, Monomial, &Scalar, &mut FormTerms),
) -> SpinorForm {
    let mut out = FormTerms::new();
    for ((form, mono), c) in psi.terms() {
        f(*form, *mono, c, &mut out);
    }
    SpinorForm::from_raw(psi.l(), psi.cap() + order, out)
}

struct XOp {
    space: SymplecticSpace,
}

impl SpinorOperator for XOp {
    fn form_shift(&self) -> Option<i32> {
        Some(1)
    }
    fn clifford_order(&self) -> u32 {
        1
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        let l = self.space.l();
        map_terms(psi, 1, |form, mono, c, out| {
            for k in 0..2 * l {
                let Some((s, g)) = form.wedge_left(k) else { continue };
                let Some((f, m)) = clifford_on_monomial(l, k, mono) else { continue };
                accumulate(out, (g, m), (&f * c).scale_int(s));
            }
        })
    }
}

struct YOp {
    space: SymplecticSpace,
}

impl SpinorOperator for YOp {
    fn form_shift(&self) -> Option<i32> {
        Some(-1)
    }
    fn clifford_order(&self) -> u32 {
        1
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        let l = self.space.l();
        map_terms(psi, 1, |form, mono, c, out| {
            for i in form.slots() {
                let (j, _) = self.space.partner(i);
                let w = self.space.w_inv(i, j);
                let Some((s, g)) = form.contract(i) else { continue };
                let Some((f, m)) = clifford_on_monomial(l, j, mono) else { continue };
                accumulate(out, (g, m), (&f * c).scale_int(s * w));
            }
        })
    }
}

/// A symmetric bilinear form `σ ∈ ⊙²V*` together with its raised versions
/// `σ^i_j = ω^{ia}σ_{aj}` and `σ^{ij} = ω^{ia}ω^{jb}σ_{ab}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciLikeTensor {
    space: SymplecticSpace,
    lower: Tensor,
    mixed: Tensor,
    upper: Tensor,
}

impl RicciLikeTensor {
    pub fn new(space: SymplecticSpace, sigma: Tensor) -> Result<Self> {
        let n = space.dim();
        if sigma.dim() != n || sigma.rank() != 2 {
            return Err(Error::Shape(alloc::format!("expected a {n}x{n} matrix")));
        }
        for i in 0..n {
            for j in i + 1..n {
                if sigma.at(&[i, j]) != sigma.at(&[j, i]) {
                    return Err(Error::NotSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        let mixed = space.raise_index(&sigma, 0)?;
        let upper = space.raise_index(&mixed, 1)?;
        Ok(RicciLikeTensor { space, lower: sigma, mixed, upper })
    }

    pub fn zero(space: SymplecticSpace) -> Self {
        RicciLikeTensor::new(space, Tensor::zeros(space.dim(), 2)).expect("zero is symmetric")
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    /// `σ_{ij}`
    pub fn lower(&self) -> &Tensor {
        &self.lower
    }

    /// `σ^i_j`
    pub fn mixed(&self) -> &Tensor {
        &self.mixed
    }

    /// `σ^{ij}`
    pub fn upper(&self) -> &Tensor {
        &self.upper
    }

    pub fn is_zero(&self) -> bool {
        self.lower.is_zero()
    }

    pub fn add(&self, other: &RicciLikeTensor) -> RicciLikeTensor {
        RicciLikeTensor::new(self.space, self.lower.add(&other.lower)).expect("sum of symmetric tensors")
    }

    pub fn scale(&self, c: &Scalar) -> RicciLikeTensor {
        RicciLikeTensor::new(self.space, self.lower.scale(c)).expect("multiple of a symmetric tensor")
    }

    /// Infinitesimal tensor action `(A·σ)_{ij} = −A^k_i σ_{kj} − A^k_j σ_{ik}`.
    pub fn act(&self, a: &SpElement) -> RicciLikeTensor {
        let n = self.space.dim();
        let t = Tensor::from_fn(n, 2, |ix| {
            let (i, j) = (ix[0], ix[1]);
            let mut s = Scalar::ZERO;
            for k in 0..n {
                s -= &(a.entry(k, i) * self.lower.at(&[k, j]));
                s -= &(a.entry(k, j) * self.lower.at(&[i, k]));
            }
            s
        });
        RicciLikeTensor::new(self.space, t).expect("action preserves symmetry")
    }
}

struct SigmaOp {
    sigma: RicciLikeTensor,
}

impl SpinorOperator for SigmaOp {
    fn form_shift(&self) -> Option<i32> {
        Some(1)
    }
    fn clifford_order(&self) -> u32 {
        1
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        let l = self.sigma.space.l();
        let n = 2 * l;
        let mut coeffs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = self.sigma.mixed.at(&[i, j]);
                if !c.is_zero() {
                    coeffs.push((i, j, c.clone()));
                }
            }
        }
        map_terms(psi, 1, |form, mono, c, out| {
            for (i, j, sij) in &coeffs {
                let Some((s, g)) = form.wedge_left(*j) else { continue };
                let Some((f, m)) = clifford_on_monomial(l, *i, mono) else { continue };
                accumulate(out, (g, m), (&(&f * sij) * c).scale_int(s));
            }
        })
    }
}

struct ThetaOp {
    sigma: RicciLikeTensor,
}

impl SpinorOperator for ThetaOp {
    fn form_shift(&self) -> Option<i32> {
        Some(0)
    }
    fn clifford_order(&self) -> u32 {
        2
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        let l = self.sigma.space.l();
        let n = 2 * l;
        let mut coeffs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = self.sigma.upper.at(&[i, j]);
                if !c.is_zero() {
                    coeffs.push((i, j, c.clone()));
                }
            }
        }
        map_terms(psi, 2, |form, mono, c, out| {
            for (i, j, sij) in &coeffs {
                let Some((f1, m1)) = clifford_on_monomial(l, *j, mono) else { continue };
                let Some((f2, m2)) = clifford_on_monomial(l, *i, m1) else { continue };
                accumulate(out, (form, m2), &(&(&f1 * &f2) * sij) * c);
            }
        })
    }
}

/// `ρ′(A)(α⊗s) = (A·α)⊗s + α⊗m(A)s`, where `A` acts on `V*` by
/// `ε^i ↦ −Σ_j A^i_j ε^j` extended as a derivation.
struct RhoPrime {
    a: SpElement,
}

impl SpinorOperator for RhoPrime {
    fn form_shift(&self) -> Option<i32> {
        Some(0)
    }
    fn clifford_order(&self) -> u32 {
        2
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        let l = self.a.l();
        let n = 2 * l;
        let quad = self.a.quadratic_form();
        map_terms(psi, 2, |form, mono, c, out| {
            // derivation on the form part: replacing ε^i by ε^j is ε^j ∧ ι_{e_i}
            for i in form.slots() {
                let (s1, g1) = form.contract(i).expect("slot present");
                for j in 0..n {
                    let aij = self.a.entry(i, j);
                    if aij.is_zero() {
                        continue;
                    }
                    let Some((s2, g2)) = g1.wedge_left(j) else { continue };
                    accumulate(out, (g2, mono), (aij * c).scale_int(-s1 * s2));
                }
            }
            for (i, j, q) in &quad {
                let Some((f1, m1)) = clifford_on_monomial(l, *j, mono) else { continue };
                let Some((f2, m2)) = clifford_on_monomial(l, *i, m1) else { continue };
                accumulate(out, (form, m2), &(&(q * &f1) * &f2) * c);
            }
        })
    }
}

struct Wedge2 {
    b: Tensor,
}

impl SpinorOperator for Wedge2 {
    fn form_shift(&self) -> Option<i32> {
        Some(2)
    }
    fn clifford_order(&self) -> u32 {
        0
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        let n = self.b.dim();
        map_terms(psi, 0, |form, mono, c, out| {
            for i in 0..n {
                for j in 0..n {
                    let bij = self.b.at(&[i, j]);
                    if bij.is_zero() {
                        continue;
                    }
                    let Some((s1, g1)) = form.wedge_left(j) else { continue };
                    let Some((s2, g2)) = g1.wedge_left(i) else { continue };
                    accumulate(out, (g2, mono), (bij * c).scale_int(s1 * s2));
                }
            }
        })
    }
}

struct Contract2 {
    c: Tensor,
}

impl SpinorOperator for Contract2 {
    fn form_shift(&self) -> Option<i32> {
        Some(-2)
    }
    fn clifford_order(&self) -> u32 {
        0
    }
    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        let n = self.c.dim();
        map_terms(psi, 0, |form, mono, c, out| {
            for i in 0..n {
                for j in 0..n {
                    let cij = self.c.at(&[i, j]);
                    if cij.is_zero() {
                        continue;
                    }
                    let Some((s1, g1)) = form.contract(j) else { continue };
                    let Some((s2, g2)) = g1.contract(i) else { continue };
                    accumulate(out, (g2, mono), (cij * c).scale_int(s1 * s2));
                }
            }
        })
    }
}

/// Exact matrix of an operator restricted to `Λ^r ⊗ S_{≤N}`, split into one
/// block per spinor parity of the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperator {
    pub form_degree: usize,
    pub form_shift: i32,
    pub clifford_order: u32,
    pub domain_cap: u32,
    pub codomain_cap: u32,
    pub blocks: BTreeMap<Parity, OperatorBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorBlock {
    pub domain: Vec<(FormIndex, Monomial)>,
    pub codomain: Vec<(FormIndex, Monomial)>,
    pub matrix: SparseMatrix,
}

impl GradedOperator {
    /// Assembles the matrix of `op` on `Λ^r ⊗ S_{≤domain_cap}` with values
    /// in `Λ^{r+shift} ⊗ S_{≤codomain_cap}`. The codomain cap defaults to
    /// `domain_cap + clifford_order`; any term landing outside it is an error.
    pub fn assemble(
        op: &Op,
        l: usize,
        r: usize,
        domain_cap: u32,
        codomain_cap: Option<u32>,
    ) -> Result<GradedOperator> {
        let shift = op
            .form_shift()
            .ok_or_else(|| Error::Shape("operator does not have a definite form-degree shift".into()))?;
        let target = r as i32 + shift;
        let order = op.clifford_order();
        let codomain_cap = codomain_cap.unwrap_or(domain_cap + order);
        let mut blocks = BTreeMap::new();
        for parity in [Parity::Even, Parity::Odd] {
            let domain: Vec<_> = basis_elements(l, r, domain_cap)
                .into_iter()
                .filter(|(_, m)| Parity::of_degree(m.degree()) == parity)
                .collect();
            let codomain: Vec<_> = if (0..=2 * l as i32).contains(&target) {
                basis_elements(l, target as usize, codomain_cap)
            } else {
                Vec::new()
            };
            let index: BTreeMap<_, _> = codomain.iter().enumerate().map(|(k, b)| (*b, k)).collect();
            let mut matrix = SparseMatrix::zeros(codomain.len(), domain.len());
            for (col, (f, m)) in domain.iter().enumerate() {
                let img = op.apply(&SpinorForm::basis(l, *f, *m, Scalar::ONE));
                for (key, c) in img.terms() {
                    let row = *index.get(key).ok_or_else(|| {
                        Error::Shape(alloc::format!("image term {key:?} leaves the codomain"))
                    })?;
                    matrix.set(row, col, c.clone());
                }
            }
            blocks.insert(parity, OperatorBlock { domain, codomain, matrix });
        }
        Ok(GradedOperator {
            form_degree: r,
            form_shift: shift,
            clifford_order: order,
            domain_cap,
            codomain_cap,
            blocks,
        })
    }

    /// Checks that every block respects the form shift and maps a parity
    /// block into a single parity.
    pub fn respects_grading(&self) -> bool {
        let target = self.form_degree as i32 + self.form_shift;
        self.blocks.iter().all(|(p, b)| {
            let want = if self.clifford_order % 2 == 1 { p.flip() } else { *p };
            b.matrix.entries().all(|(&(row, _), _)| {
                let (f, m) = b.codomain[row];
                f.degree() as i32 == target && Parity::of_degree(m.degree()) == want
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(l: usize) -> SymplecticSpace {
        SymplecticSpace::new(l).unwrap()
    }

    #[test]
    fn x_on_constant_spinor() {
        let v = space(2);
        let psi = SpinorForm::basis(2, FormIndex::EMPTY, Monomial::ONE, Scalar::ONE);
        let out = Op::x(v).apply(&psi);
        let e1 = FormIndex::from_slots(&[0]).unwrap();
        let e2 = FormIndex::from_slots(&[1]).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out.coeff(e1, Monomial::var(0)), Scalar::I);
        assert_eq!(out.coeff(e2, Monomial::var(1)), Scalar::I);
    }

    #[test]
    fn x_kills_top_degree() {
        let v = space(2);
        let top = FormIndex::from_slots(&[0, 1, 2, 3]).unwrap();
        let psi = SpinorForm::basis(2, top, Monomial::var(0), Scalar::ONE);
        assert!(Op::x(v).apply(&psi).is_zero());
    }

    #[test]
    fn y_hand_values() {
        let v = space(2);
        let e1 = FormIndex::from_slots(&[0]).unwrap();
        let y = Op::y(v);
        assert!(y.apply(&SpinorForm::basis(2, e1, Monomial::ONE, Scalar::ONE)).is_zero());
        // Y(ε¹⊗x¹) = ω^{13}·(1⊗e₃.x¹) = ω^{13}·(1⊗1)
        let out = y.apply(&SpinorForm::basis(2, e1, Monomial::var(0), Scalar::ONE));
        assert_eq!(out.len(), 1);
        assert_eq!(out.coeff(FormIndex::EMPTY, Monomial::ONE), v.omega_inv(1, 3).unwrap());
        assert_eq!(v.omega_inv(1, 3).unwrap(), Scalar::ONE);
        assert!(y.apply(&SpinorForm::basis(2, FormIndex::EMPTY, Monomial::var(0), Scalar::ONE)).is_zero());
    }

    #[test]
    fn zero_sigma_gives_zero_operators() {
        let v = space(2);
        let s = RicciLikeTensor::zero(v);
        let psi = SpinorForm::basis(2, FormIndex::from_slots(&[1]).unwrap(), Monomial::var(1), Scalar::ONE);
        assert!(Op::sigma(&s).apply(&psi).is_zero());
        assert!(Op::theta(&s).apply(&psi).is_zero());
        assert!(Op::rho_prime(&SpElement::zero(v)).apply(&psi).is_zero());
    }

    #[test]
    fn asymmetric_sigma_rejected() {
        let v = space(2);
        let mut t = Tensor::zeros(4, 2);
        t.set(&[0, 1], Scalar::ONE);
        assert_eq!(RicciLikeTensor::new(v, t), Err(Error::NotSymmetric { i: 1, j: 2 }));
    }

    #[test]
    fn assembled_x_respects_grading() {
        let v = space(2);
        let g = GradedOperator::assemble(&Op::x(v), 2, 1, 3, None).unwrap();
        assert!(g.respects_grading());
        assert_eq!(g.blocks[&Parity::Even].domain.len(), 4 * 4);
    }
}
