//! Symplectic curvature tensors, the extended Ricci tensor `σ̃`, the Weyl
//! split `W = R − σ̃`, the curvature operator on `Λ^•V*⊗S`, and the checks
//! that the twistor sequence closes.
//!
//! Conventions: `R_{ijkl} = ω(R(e_k, e_l)e_j, e_i)`, indices raised as
//! `R^{ij}_{kl} = ω^{ia}ω^{jb}R_{abkl}`, and
//!
//! ```text
//! 2(l+1)·σ̃_{ijkl} = ω_{il}σ_{jk} − ω_{ik}σ_{jl} + ω_{jl}σ_{ik} − ω_{jk}σ_{il} + 2σ_{ij}ω_{kl}.
//! ```

use alloc::vec::Vec;

use crate::decomposition::{IsotypicDecomposition, Status, Witness};
use crate::error::{Error, Result};
use crate::forms::SpinorForm;
use crate::linalg::accumulate;
use crate::operators::{Op, RicciLikeTensor, SpinorOperator};
use crate::scalar::Scalar;
use crate::spinor::clifford_on_monomial;
use crate::symplectic::{SymplecticSpace, Tensor};

/// A rank-4 tensor `R_{ijkl}` antisymmetric in its last two slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureTensor {
    space: SymplecticSpace,
    r: Tensor,
}

impl CurvatureTensor {
    pub fn new(space: SymplecticSpace, r: Tensor) -> Result<Self> {
        let n = space.dim();
        if r.dim() != n || r.rank() != 4 {
            return Err(Error::Shape(alloc::format!("expected a rank-4 tensor over dimension {n}")));
        }
        for ix in r.indices() {
            let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
            if k <= l && *r.at(&[i, j, k, l]) != -r.at(&[i, j, l, k]) {
                return Err(Error::NotAntisymmetric { i: i + 1, j: j + 1, k: k + 1, l: l + 1 });
            }
        }
        Ok(CurvatureTensor { space, r })
    }

    pub fn zero(space: SymplecticSpace) -> Self {
        CurvatureTensor { space, r: Tensor::zeros(space.dim(), 4) }
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn tensor(&self) -> &Tensor {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// Symmetry `R_{ijkl} = R_{jikl}`, which holds for curvature of
    /// connections preserving `ω`.
    pub fn is_symmetric_in_first_pair(&self) -> bool {
        self.r.indices().all(|ix| self.r.at(&ix) == self.r.at(&[ix[1], ix[0], ix[2], ix[3]]))
    }

    pub fn add(&self, other: &CurvatureTensor) -> CurvatureTensor {
        CurvatureTensor { space: self.space, r: self.r.add(&other.r) }
    }

    pub fn sub(&self, other: &CurvatureTensor) -> CurvatureTensor {
        CurvatureTensor { space: self.space, r: self.r.sub(&other.r) }
    }

    pub fn scale(&self, c: &Scalar) -> CurvatureTensor {
        CurvatureTensor { space: self.space, r: self.r.scale(c) }
    }

    /// `R^{ij}_{kl}` with both leading slots raised.
    pub fn raised(&self) -> Tensor {
        let t = self.space.raise_index(&self.r, 0).expect("rank 4");
        self.space.raise_index(&t, 1).expect("rank 4")
    }

    /// `σ(X, Y) = Tr(V ↦ R(V, X)Y)`, i.e. `σ_{bc} = Σ_{a,i} ω_{ai} R_{icab}`.
    /// Errors if the trace is not symmetric.
    pub fn ricci(&self) -> Result<RicciLikeTensor> {
        RicciLikeTensor::new(self.space, self.ricci_trace())
    }

    /// The raw trace, without the symmetry check.
    pub fn ricci_trace(&self) -> Tensor {
        let n = self.space.dim();
        Tensor::from_fn(n, 2, |ix| {
            let (b, c) = (ix[0], ix[1]);
            let mut s = Scalar::ZERO;
            for a in 0..n {
                let (i, w) = self.space.partner(a);
                s += &self.r.at(&[i, c, a, b]).scale_int(w);
            }
            s
        })
    }
}

/// `σ̃` computed from `σ`.
pub fn extended_ricci(sigma: &RicciLikeTensor) -> CurvatureTensor {
    let space = sigma.space();
    let n = space.dim();
    let s = sigma.lower();
    let w = |a: usize, b: usize| space.w(a, b);
    let denom = Scalar::from_ratio(1, 2 * (space.l() as i64 + 1));
    let t = Tensor::from_fn(n, 4, |ix| {
        let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
        let mut acc = Scalar::ZERO;
        acc += &s.at(&[j, k]).scale_int(w(i, l));
        acc -= &s.at(&[j, l]).scale_int(w(i, k));
        acc += &s.at(&[i, k]).scale_int(w(j, l));
        acc -= &s.at(&[i, l]).scale_int(w(j, k));
        acc += &s.at(&[i, j]).scale_int(2 * w(k, l));
        &acc * &denom
    });
    CurvatureTensor { space, r: t }
}

/// `W = R − σ̃`.
pub fn weyl_split(r: &CurvatureTensor, sigma: &RicciLikeTensor) -> CurvatureTensor {
    r.sub(&extended_ricci(sigma))
}

/// How the 2-form index pair of a curvature operator is summed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSum {
    /// `Σ_{k<l}`: the 2-form `Σ_{k<l} R_{kl} ε^k∧ε^l`.
    Ordered,
    /// `Σ_{k,l}`: every ordered pair, twice the ordered sum.
    All,
}

/// `ψ ↦ c · Σ R^{ij}_{kl} ε^k∧ε^l∧α ⊗ e_i.e_j.s` over the chosen pairs.
pub struct CurvatureOp {
    space: SymplecticSpace,
    terms: Vec<(usize, usize, usize, usize, Scalar)>,
}

impl CurvatureOp {
    pub fn new(r: &CurvatureTensor, pairs: PairSum, c: &Scalar) -> Self {
        let up = r.raised();
        let mut terms = Vec::new();
        for ix in up.indices() {
            let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
            if pairs == PairSum::Ordered && k >= l {
                continue;
            }
            let v = up.at(&ix);
            if !v.is_zero() {
                terms.push((i, j, k, l, v * c));
            }
        }
        CurvatureOp { space: r.space(), terms }
    }
}

impl SpinorOperator for CurvatureOp {
    fn form_shift(&self) -> Option<i32> {
        Some(2)
    }

    fn clifford_order(&self) -> u32 {
        2
    }

    fn apply(&self, psi: &SpinorForm) -> SpinorForm {
        let lr = self.space.l();
        let mut out = crate::forms::FormTerms::new();
        for ((form, mono), c) in psi.terms() {
            for (i, j, k, l, v) in &self.terms {
                let Some((s1, g1)) = form.wedge_left(*l) else { continue };
                let Some((s2, g2)) = g1.wedge_left(*k) else { continue };
                let Some((f1, m1)) = clifford_on_monomial(lr, *j, *mono) else { continue };
                let Some((f2, m2)) = clifford_on_monomial(lr, *i, m1) else { continue };
                accumulate(&mut out, (g2, m2), (&(&(&f1 * &f2) * v) * c).scale_int(s1 * s2));
            }
        }
        SpinorForm::from_raw(psi.l(), psi.cap() + 2, out)
    }
}

/// The curvature operator `(i/2) Σ_{k<l} (W + σ̃)^{ij}_{kl} ε^k∧ε^l∧(·)⊗e_i.e_j.(·)`.
///
/// With the spinor derivative `∂ + m(Γ)` this equals `d^∇ d^∇` on spinor
/// valued forms.
pub fn curvature_operator(sigma: &RicciLikeTensor, weyl: &CurvatureTensor) -> Op {
    let r = weyl.add(&extended_ricci(sigma));
    Op::new(CurvatureOp::new(&r, PairSum::Ordered, &Scalar::imag(1, 2)))
}

/// `(i/2) Σ_{k,l} σ̃^{ij}_{kl} ε^k∧ε^l∧(·)⊗e_i.e_j.(·)`, every index summed.
pub fn full_sum_ricci_operator(sigma: &RicciLikeTensor) -> Op {
    Op::new(CurvatureOp::new(&extended_ricci(sigma), PairSum::All, &Scalar::imag(1, 2)))
}

/// `(i/(l+1))·(i·X²Θ^σ + s·XΣ^σ)` with `s = ±1` selecting the sign of the
/// second term.
pub fn ricci_operator_via_xy(sigma: &RicciLikeTensor, sign: i64) -> Op {
    let space = sigma.space();
    let x = Op::x(space);
    let x2theta = &x.pow(2) * &Op::theta(sigma);
    let xsigma = &x * &Op::sigma(sigma);
    let inner = &x2theta.scaled(Scalar::I) + &xsigma.scaled(Scalar::from_int(sign));
    inner.scaled(Scalar::imag(1, space.l() as i64 + 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    /// Form degree of the domain `E^{i,m_i}`.
    pub i: usize,
    pub status: Status,
    pub checked: usize,
    pub witness: Option<Witness>,
}

fn edge_check(
    d: &IsotypicDecomposition,
    i: usize,
    op: &Op,
    band: u32,
    on_nonzero: Status,
) -> Result<ComplexReport> {
    let xi = d.xi();
    let target = xi.m(i + 2);
    let mut report = ComplexReport { i, status: Status::Pass, checked: 0, witness: None };
    for psi in d.component_basis(i, xi.m(i), band) {
        report.checked += 1;
        let img = d.project(target, &op.apply(&psi))?;
        if !img.is_zero() {
            report.status = on_nonzero;
            report.witness = Some(Witness {
                input: psi,
                output: img,
                detail: alloc::format!("p^({},{}) of the curvature image is nonzero", i + 2, target),
            });
            return Ok(report);
        }
    }
    if report.checked == 0 {
        report.status = Status::Vacuous;
    }
    Ok(report)
}

/// For `i ∈ {0,…,l−2} ∪ {l,…,2l−2}` and every guard-band basis vector
/// `ψ ∈ E^{i,m_i}`: `p^{i+2,m_{i+2}}(Rψ) = 0` with `R` the curvature
/// operator of `(σ, W = 0)`.
pub fn verify_complex(d: &IsotypicDecomposition, sigma: &RicciLikeTensor, band: u32) -> Result<Vec<ComplexReport>> {
    let l = d.l();
    let op = curvature_operator(sigma, &CurvatureTensor::zero(d.space()));
    (0..=2 * l - 2)
        .filter(|&i| i != l - 1)
        .map(|i| edge_check(d, i, &op, band, Status::Fail))
        .collect()
}

/// The same projection at the gap `i = l − 1`, where no vanishing is
/// claimed. A nonzero value is reported as a finding with its witness.
pub fn probe_middle_gap(d: &IsotypicDecomposition, sigma: &RicciLikeTensor, band: u32) -> Result<ComplexReport> {
    let op = curvature_operator(sigma, &CurvatureTensor::zero(d.space()));
    let mut r = edge_check(d, d.l() - 1, &op, band, Status::Finding)?;
    if r.status == Status::Pass {
        r.status = Status::Finding;
    }
    Ok(r)
}
