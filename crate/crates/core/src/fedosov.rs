//! Polynomial Fedosov geometry on `ℝ^{2l}` with the standard `ω`:
//! connections, their curvature and Ricci trace, the spinor derivative
//! `∇^S = ∂ + m(Γ)`, its exterior extension `d^{∇^S}`, and the twistor
//! operators `T_i = p^{i+1,m_{i+1}} d^{∇^S}`.
//!
//! Fields are stored as maps from base monomials `y^β` to fiber
//! coefficients, so every fiberwise operator is applied per base monomial.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::curvature::{curvature_operator, weyl_split, CurvatureOp, CurvatureTensor, PairSum};
use crate::decomposition::{IsotypicDecomposition, Witness};
use crate::error::{Error, Result};
use crate::forms::{FormTerms, SpinorForm};
use crate::linalg::accumulate;
use crate::monomial::Monomial;
use crate::operators::{Op, RicciLikeTensor, SpinorOperator};
use crate::scalar::Scalar;
use crate::spinor::{clifford_on_monomial, SpElement};
use crate::symplectic::{SymplecticSpace, Tensor};

/// A polynomial in the base coordinates `y^1, …, y^{2l}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasePoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl BasePoly {
    pub fn zero() -> Self {
        BasePoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        BasePoly::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut p = BasePoly::zero();
        accumulate(&mut p.terms, m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = BasePoly::zero();
        for (m, c) in terms {
            accumulate(&mut p.terms, m, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn add(&self, other: &BasePoly) -> BasePoly {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut p.terms, *m, c.clone());
        }
        p
    }

    pub fn sub(&self, other: &BasePoly) -> BasePoly {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut p.terms, *m, -c);
        }
        p
    }

    pub fn mul(&self, other: &BasePoly) -> BasePoly {
        let mut p = BasePoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&mut p.terms, m1.mul(*m2), c1 * c2);
            }
        }
        p
    }

    pub fn scale(&self, c: &Scalar) -> BasePoly {
        BasePoly::from_terms(self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    /// `∂/∂y^a` (0-based).
    pub fn derivative(&self, a: usize) -> BasePoly {
        BasePoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(a);
            m.lower(a).map(|lowered| (lowered, c.scale_int(e as i64)))
        }))
    }
}

/// A torsion-free symplectic connection `Γ^k_{ab}` with polynomial
/// coefficients, stored densely by `(k, a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FedosovConnection {
    space: SymplecticSpace,
    gamma: Vec<BasePoly>,
}

impl FedosovConnection {
    /// Validates `Γ^k_{ab} = Γ^k_{ba}` and total symmetry of the lowered
    /// symbol `Γ_{cab} = ω_{ck}Γ^k_{ab}`. The reported triple is 1-based.
    pub fn new(space: SymplecticSpace, gamma: impl Fn(usize, usize, usize) -> BasePoly) -> Result<Self> {
        let n = space.dim();
        let mut g = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    g.push(gamma(k, a, b));
                }
            }
        }
        let conn = FedosovConnection { space, gamma: g };
        conn.validate()?;
        Ok(conn)
    }

    /// Builds from listed entries, completing `Γ^k_{ba}` from `Γ^k_{ab}`.
    /// Conflicting entries for the same symmetric pair are rejected.
    pub fn from_entries(space: SymplecticSpace, entries: &[(usize, usize, usize, BasePoly)]) -> Result<Self> {
        let n = space.dim();
        let mut table: BTreeMap<(usize, usize, usize), BasePoly> = BTreeMap::new();
        for (k, a, b, p) in entries {
            if *k >= n || *a >= n || *b >= n {
                return Err(Error::IndexOutOfRange { index: (*k).max(*a).max(*b) + 1, dim: n });
            }
            let key = (*k, (*a).min(*b), (*a).max(*b));
            if let Some(prev) = table.get(&key) {
                if prev != p {
                    return Err(Error::ConnectionInvariant { k: k + 1, a: a + 1, b: b + 1 });
                }
            }
            table.insert(key, p.clone());
        }
        FedosovConnection::new(space, |k, a, b| table.get(&(k, a.min(b), a.max(b))).cloned().unwrap_or_default())
    }

    /// `Γ^k_{ab}` from a lowered symbol `Γ_{cab}`; total symmetry of the
    /// symbol is still validated.
    pub fn from_lowered(space: SymplecticSpace, lowered: impl Fn(usize, usize, usize) -> BasePoly) -> Result<Self> {
        // Γ_{cab} = ω_{ck}Γ^k_{ab} with c = partner(k) gives Γ^k_{ab} = Γ_{cab}/ω_{ck}
        FedosovConnection::new(space, |k, a, b| {
            let (c, _) = space.partner(k);
            lowered(c, a, b).scale(&Scalar::from_int(space.w(c, k)))
        })
    }

    /// The connection with lowered symbol `Γ_{cab} = ∂_c∂_a∂_b f`, which is
    /// totally symmetric for every polynomial `f`.
    pub fn from_potential(space: SymplecticSpace, f: &BasePoly) -> Self {
        FedosovConnection::from_lowered(space, |c, a, b| f.derivative(c).derivative(a).derivative(b))
            .expect("third derivatives are totally symmetric")
    }

    pub fn flat(space: SymplecticSpace) -> Self {
        let n = space.dim();
        FedosovConnection { space, gamma: alloc::vec![BasePoly::zero(); n * n * n] }
    }

    fn validate(&self) -> Result<()> {
        let n = self.space.dim();
        for k in 0..n {
            for a in 0..n {
                for b in a + 1..n {
                    if self.gamma(k, a, b) != self.gamma(k, b, a) {
                        return Err(Error::ConnectionInvariant { k: k + 1, a: a + 1, b: b + 1 });
                    }
                }
            }
        }
        for c in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if self.lowered(c, a, b) != self.lowered(a, c, b) {
                        return Err(Error::ConnectionInvariant { k: c + 1, a: a + 1, b: b + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    /// `Γ^k_{ab}`, 0-based.
    pub fn gamma(&self, k: usize, a: usize, b: usize) -> &BasePoly {
        let n = self.space.dim();
        &self.gamma[(k * n + a) * n + b]
    }

    /// `Γ_{cab} = ω_{ck}Γ^k_{ab}`.
    pub fn lowered(&self, c: usize, a: usize, b: usize) -> BasePoly {
        let (k, w) = self.space.partner(c);
        self.gamma(k, a, b).scale(&Scalar::from_int(w))
    }

    pub fn degree(&self) -> Option<u32> {
        self.gamma.iter().filter_map(BasePoly::degree).max()
    }

    pub fn is_flat_symbol(&self) -> bool {
        self.gamma.iter().all(BasePoly::is_zero)
    }

    /// `Γ_a = Σ_β y^β A_β` with `(Γ_a)^k_c = Γ^k_{ac}`; each `A_β ∈ 𝔰𝔭`.
    pub fn connection_matrix(&self, a: usize) -> BTreeMap<Monomial, SpElement> {
        let n = self.space.dim();
        let mut by_mono: BTreeMap<Monomial, Tensor> = BTreeMap::new();
        for k in 0..n {
            for c in 0..n {
                for (m, v) in self.gamma(k, a, c).terms() {
                    by_mono.entry(*m).or_insert_with(|| Tensor::zeros(n, 2)).set(&[k, c], v.clone());
                }
            }
        }
        by_mono
            .into_iter()
            .map(|(m, t)| (m, SpElement::new(self.space, t).expect("total symmetry puts Γ_a in sp")))
            .collect()
    }
}

/// A spinor-valued form with polynomial base coefficients:
/// `ψ = Σ_β y^β ψ_β` with `ψ_β ∈ Λ^•V*⊗S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormField {
    l: usize,
    terms: BTreeMap<Monomial, SpinorForm>,
}

/// A spinor field is a form field of form degree 0.
pub type SpinorField = FormField;

impl FormField {
    pub fn zero(l: usize) -> Self {
        FormField { l, terms: BTreeMap::new() }
    }

    /// `f·ψ` for a base polynomial `f` and a constant fiber value `ψ`.
    pub fn product(f: &BasePoly, psi: &SpinorForm) -> Self {
        let mut out = FormField::zero(psi.l());
        for (m, c) in f.terms() {
            out.add_at(*m, &psi.scale(c));
        }
        out
    }

    pub fn constant(psi: &SpinorForm) -> Self {
        FormField::product(&BasePoly::constant(Scalar::ONE), psi)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, SpinorForm> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_at(&mut self, m: Monomial, psi: &SpinorForm) {
        if psi.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(|| SpinorForm::zero(psi.l(), psi.cap()));
        slot.add_assign(psi);
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &FormField) -> FormField {
        let mut out = self.clone();
        for (m, psi) in &other.terms {
            out.add_at(*m, psi);
        }
        out
    }

    pub fn sub(&self, other: &FormField) -> FormField {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> FormField {
        let mut out = FormField::zero(self.l);
        for (m, psi) in &self.terms {
            out.add_at(*m, &psi.scale(c));
        }
        out
    }

    pub fn mul_poly(&self, f: &BasePoly) -> FormField {
        let mut out = FormField::zero(self.l);
        for (m1, c) in f.terms() {
            for (m2, psi) in &self.terms {
                out.add_at(m1.mul(*m2), &psi.scale(c));
            }
        }
        out
    }

    /// Common form degree, `None` for zero or mixed fields.
    pub fn form_degree(&self) -> Option<usize> {
        let mut it = self.terms.values().map(SpinorForm::form_degree);
        let first = it.next()??;
        it.all(|d| d == Some(first)).then_some(first)
    }

    /// `∂/∂y^a` applied to the base coefficients.
    pub fn derivative(&self, a: usize) -> FormField {
        let mut out = FormField::zero(self.l);
        for (m, psi) in &self.terms {
            if let Some(lowered) = m.lower(a) {
                out.add_at(lowered, &psi.scale(&Scalar::from_int(m.exp(a) as i64)));
            }
        }
        out
    }

    /// `ε^a ∧ ψ`
    pub fn wedge(&self, a: usize) -> FormField {
        let mut out = FormField::zero(self.l);
        for (m, psi) in &self.terms {
            out.add_at(*m, &psi.wedge(a));
        }
        out
    }

    /// Applies a fiberwise operator to every base coefficient.
    pub fn map_fiber(&self, mut f: impl FnMut(&SpinorForm) -> Result<SpinorForm>) -> Result<FormField> {
        let mut out = FormField::zero(self.l);
        for (m, psi) in &self.terms {
            out.add_at(*m, &f(psi)?);
        }
        Ok(out)
    }

    pub fn apply(&self, op: &Op) -> FormField {
        self.map_fiber(|psi| Ok(op.apply(psi))).expect("infallible")
    }
}

/// `m(A)` acting on the spinor factor only.
fn meta_on_form(a: &SpElement, psi: &SpinorForm) -> SpinorForm {
    let l = a.l();
    let mut out = FormTerms::new();
    let quad = a.quadratic_form();
    for ((form, mono), c) in psi.terms() {
        for (i, j, q) in &quad {
            let Some((f1, m1)) = clifford_on_monomial(l, *j, *mono) else { continue };
            let Some((f2, m2)) = clifford_on_monomial(l, *i, m1) else { continue };
            accumulate(&mut out, (*form, m2), &(&(q * &f1) * &f2) * c);
        }
    }
    SpinorForm::from_raw(l, psi.cap() + 2, out)
}

/// `∇^S_{e_a}ψ = ∂_aψ + m(Γ_a)ψ`, applied to the spinor factor of each
/// coefficient.
pub fn covariant_derivative_along(conn: &FedosovConnection, a: usize, psi: &FormField) -> Result<FormField> {
    let mut out = psi.derivative(a);
    for (beta, elt) in conn.connection_matrix(a) {
        let part = psi.map_fiber(|f| Ok(meta_on_form(&elt, f)))?;
        out = out.add(&part.mul_poly(&BasePoly::monomial(beta, Scalar::ONE)));
    }
    Ok(out)
}

/// `∇^Sφ = Σ_a ε^a ⊗ ∇^S_{e_a}φ` for a spinor field.
pub fn spinor_covariant_derivative(conn: &FedosovConnection, phi: &SpinorField) -> Result<FormField> {
    if !phi.is_zero() && phi.form_degree() != Some(0) {
        return Err(Error::FormDegree { expected: 0 });
    }
    exterior_spinor_derivative(conn, phi)
}

/// `d^{∇^S}ψ = Σ_a ε^a ∧ ∇^S_{e_a}ψ`.
pub fn exterior_spinor_derivative(conn: &FedosovConnection, psi: &FormField) -> Result<FormField> {
    let mut out = FormField::zero(psi.l());
    for a in 0..conn.space().dim() {
        out = out.add(&covariant_derivative_along(conn, a, psi)?.wedge(a));
    }
    Ok(out)
}

/// `R_{ijkl}(y)` expanded over base monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureField {
    space: SymplecticSpace,
    terms: BTreeMap<Monomial, CurvatureTensor>,
}

impl CurvatureField {
    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, CurvatureTensor> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(CurvatureTensor::is_zero)
    }

    /// `R_{ijkl} = R_{jikl}` for every coefficient.
    pub fn is_symmetric_in_first_pair(&self) -> bool {
        self.terms.values().all(CurvatureTensor::is_symmetric_in_first_pair)
    }

    /// The Ricci trace of every coefficient; errors if any is asymmetric.
    pub fn ricci(&self) -> Result<RicciField> {
        let terms = self.terms.iter().map(|(m, r)| Ok((*m, r.ricci()?))).collect::<Result<_>>()?;
        Ok(RicciField { space: self.space, terms })
    }

    /// `W = R − σ̃` coefficientwise.
    pub fn weyl_split(&self, sigma: &RicciField) -> CurvatureField {
        let terms = self
            .terms
            .iter()
            .map(|(m, r)| {
                let s = sigma.terms.get(m).cloned().unwrap_or_else(|| RicciLikeTensor::zero(self.space));
                (*m, weyl_split(r, &s))
            })
            .collect();
        CurvatureField { space: self.space, terms }
    }

    pub fn add(&self, other: &CurvatureField) -> CurvatureField {
        let mut terms = self.terms.clone();
        for (m, r) in &other.terms {
            let sum = match terms.get(m) {
                Some(prev) => prev.add(r),
                None => r.clone(),
            };
            terms.insert(*m, sum);
        }
        CurvatureField { space: self.space, terms }
    }

    /// `ψ ↦ c·Σ R^{ij}_{kl}(y) ε^k∧ε^l∧ψ ⊗ e_i e_j` over the chosen pairs.
    pub fn act(&self, psi: &FormField, pairs: PairSum, c: &Scalar) -> FormField {
        let mut out = FormField::zero(psi.l());
        for (beta, r) in &self.terms {
            let op = CurvatureOp::new(r, pairs, c);
            let part = psi.map_fiber(|f| Ok(op.apply(f))).expect("infallible");
            out = out.add(&part.mul_poly(&BasePoly::monomial(*beta, Scalar::ONE)));
        }
        out
    }
}

/// `σ_{ij}(y)` expanded over base monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciField {
    space: SymplecticSpace,
    terms: BTreeMap<Monomial, RicciLikeTensor>,
}

impl RicciField {
    pub fn terms(&self) -> &BTreeMap<Monomial, RicciLikeTensor> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(RicciLikeTensor::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().filter(|(_, s)| !s.is_zero()).map(|(m, _)| m.degree()).max()
    }
}

/// `R(e_k, e_l)e_j = (F_{kl})^m_j e_m` with
/// `F_{kl} = ∂_kΓ_l − ∂_lΓ_k + [Γ_k, Γ_l]`, lowered to
/// `R_{ijkl} = (F_{kl})^m_j ω_{mi}`.
pub fn connection_curvature(conn: &FedosovConnection) -> CurvatureField {
    let space = conn.space();
    let n = space.dim();
    let mut polys: BTreeMap<[usize; 4], BasePoly> = BTreeMap::new();
    for k in 0..n {
        for l in k + 1..n {
            for m in 0..n {
                for j in 0..n {
                    let mut f = conn.gamma(m, l, j).derivative(k).sub(&conn.gamma(m, k, j).derivative(l));
                    for p in 0..n {
                        f = f.add(&conn.gamma(m, k, p).mul(conn.gamma(p, l, j)));
                        f = f.sub(&conn.gamma(m, l, p).mul(conn.gamma(p, k, j)));
                    }
                    if f.is_zero() {
                        continue;
                    }
                    // ω_{mi} is nonzero only for i = partner(m)
                    let (i, w) = space.partner(m);
                    let f = f.scale(&Scalar::from_int(w));
                    polys.insert([i, j, l, k], f.scale(&Scalar::from_int(-1)));
                    polys.insert([i, j, k, l], f);
                }
            }
        }
    }
    let mut tensors: BTreeMap<Monomial, Tensor> = BTreeMap::new();
    for (ix, p) in polys {
        for (beta, c) in p.terms() {
            tensors.entry(*beta).or_insert_with(|| Tensor::zeros(n, 4)).set(&ix, c.clone());
        }
    }
    let terms = tensors
        .into_iter()
        .map(|(m, t)| (m, CurvatureTensor::new(space, t).expect("antisymmetric by construction")))
        .collect();
    CurvatureField { space, terms }
}

/// `(i/2) Σ_{k<l} R^{ij}_{kl} ε^k∧ε^l ⊗ e_i e_j φ`, the curvature of the
/// spinor derivative applied to a field.
pub fn spinor_curvature(conn: &FedosovConnection, psi: &FormField) -> FormField {
    connection_curvature(conn).act(psi, PairSum::Ordered, &Scalar::imag(1, 2))
}

/// The fiberwise curvature operator rebuilt from `(σ(y), W(y))`.
pub fn curvature_from_split(conn: &FedosovConnection, psi: &FormField) -> Result<FormField> {
    let r = connection_curvature(conn);
    let sigma = r.ricci()?;
    let weyl = r.weyl_split(&sigma);
    let space = conn.space();
    let monos: alloc::collections::BTreeSet<Monomial> =
        sigma.terms.keys().chain(weyl.terms.keys()).copied().collect();
    let mut out = FormField::zero(psi.l());
    for beta in monos {
        let s = sigma.terms.get(&beta).cloned().unwrap_or_else(|| RicciLikeTensor::zero(space));
        let w = weyl.terms.get(&beta).cloned().unwrap_or_else(|| CurvatureTensor::zero(space));
        let part = psi.apply(&curvature_operator(&s, &w));
        out = out.add(&part.mul_poly(&BasePoly::monomial(beta, Scalar::ONE)));
    }
    Ok(out)
}

fn guard_band(e: Error) -> Error {
    match e {
        Error::SpanningFailure { top_degree, cap, .. } => Error::GuardBand { required_cap: top_degree, cap },
        other => other,
    }
}

/// `p^{ij}` applied to each base coefficient.
pub fn project_field(d: &IsotypicDecomposition, j: usize, psi: &FormField) -> Result<FormField> {
    psi.map_fiber(|f| d.project(j, f)).map_err(guard_band)
}

/// `T_iψ = p^{i+1,m_{i+1}} d^{∇^S}ψ` for a field with values in `E^{i,m_i}`.
pub fn twistor_operator(d: &IsotypicDecomposition, i: usize, conn: &FedosovConnection, psi: &FormField) -> Result<FormField> {
    let xi = d.xi();
    if i >= 2 * d.l() {
        return Err(Error::FormDegree { expected: 2 * d.l() - 1 });
    }
    if !psi.is_zero() && psi.form_degree() != Some(i) {
        return Err(Error::FormDegree { expected: i });
    }
    if project_field(d, xi.m(i), psi)? != *psi {
        return Err(Error::NotInComponent { i, j: xi.m(i) });
    }
    project_field(d, xi.m(i + 1), &exterior_spinor_derivative(conn, psi)?)
}

/// For `ψ` with values in `E^{ij}`: the first component `p^{i+1,k}d^{∇^S}ψ`
/// with `k ∉ {j−1, j, j+1}` that is nonzero, if any.
pub fn forbidden_derivative_component(
    d: &IsotypicDecomposition,
    i: usize,
    j: usize,
    conn: &FedosovConnection,
    psi: &FormField,
) -> Result<Option<Witness>> {
    let dpsi = exterior_spinor_derivative(conn, psi)?;
    let forbidden: Vec<usize> = d.xi().slots(i + 1).filter(|&k| k + 1 < j || k > j + 1).collect();
    for (beta, fiber) in dpsi.terms() {
        let parts = d.project_all(fiber).map_err(guard_band)?;
        for k in &forbidden {
            if let Some(p) = parts.get(k).filter(|p| !p.is_zero()) {
                let input = psi.terms().get(beta).cloned().unwrap_or_else(|| SpinorForm::zero(d.l(), d.cap()));
                return Ok(Some(Witness {
                    input,
                    output: p.clone(),
                    detail: alloc::format!("p^({},{}) of the derivative is nonzero at base monomial {beta:?}", i + 1, k),
                }));
            }
        }
    }
    Ok(None)
}

/// The symplectic Dirac operator `D = Y∘∇^S` on spinor fields.
pub fn dirac(conn: &FedosovConnection, phi: &SpinorField) -> Result<FormField> {
    Ok(spinor_covariant_derivative(conn, phi)?.apply(&Op::y(conn.space())))
}

/// `Y(∇^S − T_0)φ`; agrees with [`dirac`] since `E^{1,1} = ker Y` on 1-forms.
pub fn dirac_via_twistor(d: &IsotypicDecomposition, conn: &FedosovConnection, phi: &SpinorField) -> Result<FormField> {
    let nabla = spinor_covariant_derivative(conn, phi)?;
    let t0 = twistor_operator(d, 0, conn, phi)?;
    Ok(nabla.sub(&t0).apply(&Op::y(conn.space())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::FormIndex;

    fn linear_connection(space: SymplecticSpace) -> FedosovConnection {
        // Γ_{cab} = y^1 for (c,a,b) a permutation of (1,1,2), zero elsewhere
        FedosovConnection::from_lowered(space, |c, a, b| {
            let mut s = [c, a, b];
            s.sort();
            if s == [0, 0, 1] {
                BasePoly::monomial(Monomial::var(0), Scalar::ONE)
            } else {
                BasePoly::zero()
            }
        })
        .unwrap()
    }

    #[test]
    fn base_poly_calculus() {
        let y1 = BasePoly::monomial(Monomial::var(0), Scalar::ONE);
        let sq = y1.mul(&y1);
        assert_eq!(sq.derivative(0), y1.scale(&Scalar::from_int(2)));
        assert!(sq.derivative(1).is_zero());
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn flat_connection_is_flat() {
        let v = SymplecticSpace::new(2).unwrap();
        assert!(connection_curvature(&FedosovConnection::flat(v)).is_zero());
    }

    #[test]
    fn non_symmetric_symbol_is_rejected() {
        let v = SymplecticSpace::new(2).unwrap();
        let r = FedosovConnection::new(v, |k, a, b| {
            if (k, a, b) == (0, 0, 0) {
                BasePoly::constant(Scalar::ONE)
            } else {
                BasePoly::zero()
            }
        });
        assert!(matches!(r, Err(Error::ConnectionInvariant { .. })));
    }

    #[test]
    fn flat_derivative_of_linear_field() {
        let v = SymplecticSpace::new(2).unwrap();
        let s0 = SpinorForm::basis(2, FormIndex::EMPTY, Monomial::var(1), Scalar::ONE);
        let phi = FormField::product(&BasePoly::monomial(Monomial::var(2), Scalar::ONE), &s0);
        let d = spinor_covariant_derivative(&FedosovConnection::flat(v), &phi).unwrap();
        assert_eq!(d, FormField::constant(&s0.wedge(2)));
    }

    #[test]
    fn second_derivative_is_curvature() {
        let v = SymplecticSpace::new(2).unwrap();
        let conn = linear_connection(v);
        assert!(!connection_curvature(&conn).is_zero());
        let s0 = SpinorForm::basis(2, FormIndex::EMPTY, Monomial::from_exponents(&[1, 1]), Scalar::ONE);
        let phi = FormField::product(&BasePoly::monomial(Monomial::var(1), Scalar::ONE), &s0);
        let dd = exterior_spinor_derivative(&conn, &spinor_covariant_derivative(&conn, &phi).unwrap()).unwrap();
        assert_eq!(dd, spinor_curvature(&conn, &phi));
        assert_eq!(dd, curvature_from_split(&conn, &phi).unwrap());
    }
}
