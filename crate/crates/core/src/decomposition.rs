//! Decomposition of `Λ^iV*⊗S` into the components `E^{ij}`, `(i, j) ∈ Ξ`.
//!
//! `X` and `Y` preserve the Cartan weight
//! `μ_k = α_k + [k+l ∈ I] − [k ∈ I]` of a basis element `ε^I⊗x^α`, and a
//! fixed weight at fixed form degree picks out a finite block `W_{i,μ}` of
//! dimension at most `C(2l, i)`. Every computation below happens inside such
//! a block and is therefore exact and independent of any degree cap:
//!
//! * `E^{jj}_μ = ker Y` on `W_{j,μ}` (for `j ≤ l`),
//! * `E^{ij}_μ = X^{i−j} E^{jj}_μ`,
//! * the projections `p^{ij}` come from inverting the matrix whose columns
//!   are the concatenated component bases of `W_{i,μ}`.
//!
//! The cap `N` decides which blocks are available: a block is in range when
//! its top polynomial degree is at most `N`, and lies in the guard band of
//! width `B` when that degree is at most `N − B`. Projecting anything with a
//! component in an unavailable block fails with [`Error::SpanningFailure`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::forms::{basis_elements, SpinorForm};
use crate::linalg::{rank, SparseMatrix, SparseVector};
use crate::monomial::{FormIndex, Monomial};
use crate::operators::{Op, RicciLikeTensor};
use crate::scalar::Scalar;
use crate::spinor::Parity;
use crate::symplectic::{SymplecticSpace, MAX_RANK};

/// The index set `Ξ` and its refinements for a fixed `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XiIndex {
    l: usize,
}

impl XiIndex {
    pub fn new(l: usize) -> Self {
        XiIndex { l }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `m_i = i` for `i ≤ l`, `2l − i` above.
    pub fn m(&self, i: usize) -> usize {
        if i <= self.l {
            i
        } else {
            2 * self.l - i
        }
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        let l = self.l as i64;
        if i < 0 || j < 0 || i > 2 * l {
            return false;
        }
        if i <= l {
            j <= i
        } else {
            j <= 2 * l - i
        }
    }

    /// `Ξ₊`: `Ξ` without the diagonal `(i, i)`, `i ≤ l`.
    pub fn in_plus(&self, i: usize, j: usize) -> bool {
        self.contains(i as i64, j as i64) && !(i <= self.l && i == j)
    }

    /// `Ξ₋`: `Ξ` without the antidiagonal `(i, 2l − i)`, `i ≥ l`.
    pub fn in_minus(&self, i: usize, j: usize) -> bool {
        self.contains(i as i64, j as i64) && !(i >= self.l && i + j == 2 * self.l)
    }

    /// The slots `j` with `(i, j) ∈ Ξ`.
    pub fn slots(&self, i: usize) -> Range<usize> {
        if i > 2 * self.l {
            0..0
        } else {
            0..self.m(i) + 1
        }
    }

    /// All nodes, column by column.
    pub fn nodes(&self) -> Vec<(usize, usize)> {
        (0..=2 * self.l).flat_map(|i| self.slots(i).map(move |j| (i, j))).collect()
    }

    pub fn column_sizes(&self) -> Vec<usize> {
        (0..=2 * self.l).map(|i| self.slots(i).len()).collect()
    }

    /// Arrows `(i, j) → (i+1, k)` with `k ∈ {j−1, j, j+1}` and target in `Ξ`.
    pub fn arrows(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for (i, j) in self.nodes() {
            for k in [j as i64 - 1, j as i64, j as i64 + 1] {
                if self.contains(i as i64 + 1, k) {
                    out.push(((i, j), (i + 1, k as usize)));
                }
            }
        }
        out
    }

    /// The neighbour slots `{j−1, j, j+1}` that exist at form degree `i`.
    pub fn allowed(&self, i: usize, j: usize) -> Vec<usize> {
        self.slots(i).filter(|&k| k + 1 >= j && k <= j + 1).collect()
    }

    /// Slots at form degree `i` outside `{j−1, j, j+1}`.
    pub fn forbidden(&self, i: usize, j: usize) -> Vec<usize> {
        self.slots(i).filter(|&k| !(k + 1 >= j && k <= j + 1)).collect()
    }
}

/// Cartan weight `μ ∈ ℤ^l` of a block.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    len: u8,
    w: [i16; MAX_RANK],
}

impl Weight {
    pub fn new(values: &[i64]) -> Self {
        assert!(values.len() <= MAX_RANK);
        let mut w = [0i16; MAX_RANK];
        for (k, v) in values.iter().enumerate() {
            w[k] = *v as i16;
        }
        Weight { len: values.len() as u8, w }
    }

    /// Weight of `ε^I ⊗ x^α`.
    pub fn of(l: usize, form: FormIndex, mono: Monomial) -> Self {
        let mut w = [0i16; MAX_RANK];
        for (k, wk) in w.iter_mut().enumerate().take(l) {
            *wk = mono.exp(k) as i16 + form.contains(k + l) as i16 - form.contains(k) as i16;
        }
        Weight { len: l as u8, w }
    }

    pub fn values(&self) -> Vec<i64> {
        self.w[..self.len as usize].iter().map(|&v| v as i64).collect()
    }

    pub fn total(&self) -> i64 {
        self.w[..self.len as usize].iter().map(|&v| v as i64).sum()
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.w[..self.len as usize])
    }
}

/// Basis elements of `W_{i,μ}` in canonical order.
pub fn block_members(l: usize, i: usize, weight: Weight) -> Vec<(FormIndex, Monomial)> {
    let mut out = Vec::new();
    'forms: for f in FormIndex::all_of_degree(2 * l, i) {
        let mut exps = [0u32; MAX_RANK];
        for k in 0..l {
            let a = weight.w[k] as i64 - f.contains(k + l) as i64 + f.contains(k) as i64;
            if a < 0 {
                continue 'forms;
            }
            exps[k] = a as u32;
        }
        out.push((f, Monomial::from_exponents(&exps[..l])));
    }
    out
}

/// Spinor parity shared by all of `W_{i,μ}`: that of `|μ| + i`.
pub fn block_parity(i: usize, weight: Weight) -> Parity {
    Parity::of_degree((weight.total() + i as i64).rem_euclid(2) as u32)
}

fn top_degree(members: &[(FormIndex, Monomial)]) -> u32 {
    members.iter().map(|(_, m)| m.degree()).max().unwrap_or(0)
}

fn index_of(members: &[(FormIndex, Monomial)]) -> BTreeMap<(FormIndex, Monomial), usize> {
    members.iter().enumerate().map(|(k, b)| (*b, k)).collect()
}

/// One block `W_{i,μ}` with its component bases and coordinate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub form_degree: usize,
    pub weight: Weight,
    pub parity: Parity,
    pub top_degree: u32,
    pub members: Vec<(FormIndex, Monomial)>,
    /// Basis of `E^{ij}_μ` in member coordinates, per slot `j`.
    pub components: BTreeMap<usize, Vec<SparseVector>>,
    /// Inverse of the concatenated component basis.
    coords: SparseMatrix,
    offsets: BTreeMap<usize, Range<usize>>,
}

impl BlockDecomposition {
    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn component_dim(&self, j: usize) -> usize {
        self.components.get(&j).map_or(0, Vec::len)
    }

    fn to_form(&self, l: usize, cap: u32, v: &SparseVector) -> SpinorForm {
        SpinorForm::from_vector(l, cap, &self.members, v)
    }

    /// Splits a vector of this block (member coordinates) into its
    /// components.
    pub fn split(&self, v: &SparseVector) -> BTreeMap<usize, SparseVector> {
        let c = self.coords.mul_vec(v);
        let mut out = BTreeMap::new();
        for (j, range) in &self.offsets {
            let basis = &self.components[j];
            let coeffs: Vec<Scalar> = range.clone().map(|k| c.get(&k).cloned().unwrap_or(Scalar::ZERO)).collect();
            out.insert(*j, crate::linalg::combine(basis, &coeffs));
        }
        out
    }
}

/// Per-block record of the rank checks made while building.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAccount {
    pub form_degree: usize,
    pub weight: Weight,
    pub parity: Parity,
    pub top_degree: u32,
    pub block_dim: usize,
    pub component_dims: BTreeMap<usize, usize>,
    /// Rank of the concatenated component bases.
    pub rank: usize,
}

/// Rank of `Y` on each `E^{ij}_μ` with `(i, j) ∈ Ξ₊`, and of each single `X`
/// step `E^{ij}_μ → E^{i+1,j}_μ` with `(i, j) ∈ Ξ₋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityRecord {
    pub operator: &'static str,
    pub i: usize,
    pub j: usize,
    pub weight: Weight,
    pub top_degree: u32,
    pub dim: usize,
    pub rank: usize,
}

struct WeightWork<'a> {
    space: SymplecticSpace,
    weight: Weight,
    x: &'a Op,
    y: &'a Op,
    members: BTreeMap<usize, Vec<(FormIndex, Monomial)>>,
    kernels: BTreeMap<usize, Vec<SparseVector>>,
}

impl WeightWork<'_> {
    fn members(&mut self, i: usize) -> &Vec<(FormIndex, Monomial)> {
        let (l, w) = (self.space.l(), self.weight);
        self.members.entry(i).or_insert_with(|| block_members(l, i, w))
    }

    /// Coordinates of the image of a block vector under `op`, in `W_{target,μ}`.
    fn image(&mut self, op: &Op, from: usize, target: usize, v: &SparseVector) -> SparseVector {
        let l = self.space.l();
        let src = self.members(from).clone();
        let psi = SpinorForm::from_vector(l, u32::MAX / 4, &src, v);
        let img = op.apply(&psi);
        let idx = index_of(self.members(target));
        img.to_vector(&idx).expect("weight-preserving operator left its block")
    }

    fn kernel(&mut self, j: usize) -> Vec<SparseVector> {
        if let Some(k) = self.kernels.get(&j) {
            return k.clone();
        }
        let dom = self.members(j).clone();
        let k = if j == 0 {
            (0..dom.len()).map(|c| [(c, Scalar::ONE)].into_iter().collect()).collect()
        } else {
            let rows = self.members(j - 1).len();
            let y = self.y.clone();
            let cols: Vec<SparseVector> = (0..dom.len())
                .map(|c| self.image(&y, j, j - 1, &[(c, Scalar::ONE)].into_iter().collect()))
                .collect();
            SparseMatrix::from_columns(rows, &cols).kernel_basis()
        };
        self.kernels.insert(j, k.clone());
        k
    }

    fn decompose(&mut self, i: usize, records: &mut Vec<InjectivityRecord>) -> Result<BlockDecomposition> {
        let xi = XiIndex::new(self.space.l());
        let members = self.members(i).clone();
        let dim = members.len();
        let top = top_degree(&members);
        let x = self.x.clone();
        let y = self.y.clone();
        let mut components = BTreeMap::new();
        for j in xi.slots(i) {
            let mut vecs = self.kernel(j);
            let want = vecs.len();
            for k in j..i {
                vecs = vecs.iter().map(|v| self.image(&x, k, k + 1, v)).collect();
                let r = rank(&SparseMatrix::from_columns(self.members(k + 1).len(), &vecs));
                if r < want {
                    return Err(Error::InjectivityFailure {
                        operator: "X",
                        i: k,
                        j,
                        weight: self.weight.values(),
                        rank: r,
                        dim: want,
                    });
                }
            }
            if i > j {
                records.push(InjectivityRecord {
                    operator: "X",
                    i: i - 1,
                    j,
                    weight: self.weight,
                    top_degree: top,
                    dim: want,
                    rank: want,
                });
            }
            if xi.in_plus(i, j) && !vecs.is_empty() {
                let imgs: Vec<_> = vecs.iter().map(|v| self.image(&y, i, i - 1, v)).collect();
                let r = rank(&SparseMatrix::from_columns(self.members(i - 1).len(), &imgs));
                records.push(InjectivityRecord {
                    operator: "Y",
                    i,
                    j,
                    weight: self.weight,
                    top_degree: top,
                    dim: vecs.len(),
                    rank: r,
                });
                if r < vecs.len() {
                    return Err(Error::InjectivityFailure {
                        operator: "Y",
                        i,
                        j,
                        weight: self.weight.values(),
                        rank: r,
                        dim: vecs.len(),
                    });
                }
            }
            components.insert(j, vecs);
        }
        let mut all = Vec::new();
        let mut offsets = BTreeMap::new();
        for (j, vecs) in &components {
            offsets.insert(*j, all.len()..all.len() + vecs.len());
            all.extend(vecs.iter().cloned());
        }
        let basis = SparseMatrix::from_columns(dim, &all);
        let coords = (all.len() == dim).then(|| basis.inverse()).flatten().ok_or_else(|| {
            Error::DirectSumFailure {
                form_degree: i,
                weight: self.weight.values(),
                rank: rank(&basis),
                dim,
            }
        })?;
        Ok(BlockDecomposition {
            form_degree: i,
            weight: self.weight,
            parity: block_parity(i, self.weight),
            top_degree: top,
            members,
            components,
            coords,
            offsets,
        })
    }
}

/// Everything computed for one weight: its in-range blocks and the
/// injectivity ranks observed on the way.
#[derive(Clone, Debug)]
pub struct WeightDecomposition {
    pub weight: Weight,
    pub blocks: Vec<BlockDecomposition>,
    pub injectivity: Vec<InjectivityRecord>,
}

/// Decomposes every block `W_{i,μ}` of the given weight whose top degree is
/// at most `cap`.
pub fn decompose_weight(space: SymplecticSpace, weight: Weight, cap: u32) -> Result<WeightDecomposition> {
    let x = Op::x(space);
    let y = Op::y(space);
    let mut work = WeightWork { space, weight, x: &x, y: &y, members: BTreeMap::new(), kernels: BTreeMap::new() };
    let mut blocks = Vec::new();
    let mut injectivity = Vec::new();
    for i in 0..=space.dim() {
        let members = work.members(i);
        if members.is_empty() || top_degree(members) > cap {
            continue;
        }
        blocks.push(work.decompose(i, &mut injectivity)?);
    }
    Ok(WeightDecomposition { weight, blocks, injectivity })
}

/// All weights having at least one block of top degree `≤ cap`.
pub fn weights_in_range(l: usize, cap: u32) -> Vec<Weight> {
    let mut set = BTreeSet::new();
    for i in 0..=2 * l {
        for (f, m) in basis_elements(l, i, cap) {
            let w = Weight::of(l, f, m);
            if top_degree(&block_members(l, i, w)) <= cap {
                set.insert(w);
            }
        }
    }
    set.into_iter().collect()
}

/// Dimension of a truncated component, by parity and block top degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DimensionRow {
    pub i: usize,
    pub j: usize,
    pub parity: Parity,
    pub top_degree: u32,
    pub dim: usize,
}

/// The truncated decomposition of `Λ^•V*⊗S_{≤N}`.
#[derive(Clone, Debug)]
pub struct IsotypicDecomposition {
    space: SymplecticSpace,
    cap: u32,
    blocks: BTreeMap<(usize, Weight), BlockDecomposition>,
    injectivity: Vec<InjectivityRecord>,
}

impl IsotypicDecomposition {
    /// Builds every in-range block, one weight after another.
    pub fn build(space: SymplecticSpace, cap: u32) -> Result<Self> {
        let parts = weights_in_range(space.l(), cap)
            .into_iter()
            .map(|w| decompose_weight(space, w, cap))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(space, cap, parts))
    }

    /// Assembles from per-weight results (which may have been computed in
    /// any order or in parallel).
    pub fn from_parts(space: SymplecticSpace, cap: u32, parts: Vec<WeightDecomposition>) -> Self {
        let mut blocks = BTreeMap::new();
        let mut injectivity = Vec::new();
        for p in parts {
            for b in p.blocks {
                blocks.insert((b.form_degree, b.weight), b);
            }
            injectivity.extend(p.injectivity);
        }
        injectivity.sort_by(|a, b| (a.operator, a.i, a.j, a.weight).cmp(&(b.operator, b.i, b.j, b.weight)));
        IsotypicDecomposition { space, cap, blocks, injectivity }
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn l(&self) -> usize {
        self.space.l()
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn xi(&self) -> XiIndex {
        XiIndex::new(self.l())
    }

    pub fn block(&self, i: usize, weight: Weight) -> Option<&BlockDecomposition> {
        self.blocks.get(&(i, weight))
    }

    /// In-range blocks of form degree `i`.
    pub fn blocks(&self, i: usize) -> impl Iterator<Item = &BlockDecomposition> {
        self.blocks.range((i, Weight::new(&[]))..).take_while(move |((d, _), _)| *d == i).map(|(_, b)| b)
    }

    /// Blocks of form degree `i` with top degree at most `cap − band`.
    pub fn band_blocks(&self, i: usize, band: u32) -> impl Iterator<Item = &BlockDecomposition> {
        let limit = self.cap.saturating_sub(band);
        let ok = self.cap >= band;
        self.blocks(i).filter(move |b| ok && b.top_degree <= limit)
    }

    pub fn injectivity_records(&self) -> &[InjectivityRecord] {
        &self.injectivity
    }

    /// Basis of the truncated `E^{ij}`, over the blocks with top degree at
    /// most `cap − band`, in block order.
    pub fn component_basis(&self, i: usize, j: usize, band: u32) -> Vec<SpinorForm> {
        let l = self.l();
        let mut out = Vec::new();
        for b in self.band_blocks(i, band) {
            if let Some(vs) = b.components.get(&j) {
                out.extend(vs.iter().map(|v| b.to_form(l, self.cap, v)));
            }
        }
        out
    }

    /// Truncated `E^{jj} = ker Y` on `Λ^j⊗S`, over all in-range blocks.
    pub fn lowest_component(&self, j: usize) -> Vec<SpinorForm> {
        self.component_basis(j, j, 0)
    }

    /// Truncated `E^{ij}` over all in-range blocks.
    pub fn build_component(&self, i: usize, j: usize) -> Result<Vec<SpinorForm>> {
        if !self.xi().contains(i as i64, j as i64) {
            return Err(Error::NotInTriangle { i, j });
        }
        Ok(self.component_basis(i, j, 0))
    }

    /// Rank accounting for the blocks of the guard band.
    pub fn accounting(&self, band: u32) -> Vec<BlockAccount> {
        let mut out = Vec::new();
        for i in 0..=self.space.dim() {
            for b in self.band_blocks(i, band) {
                let all: Vec<SparseVector> = b.components.values().flatten().cloned().collect();
                out.push(BlockAccount {
                    form_degree: i,
                    weight: b.weight,
                    parity: b.parity,
                    top_degree: b.top_degree,
                    block_dim: b.dim(),
                    component_dims: b.components.iter().map(|(j, v)| (*j, v.len())).collect(),
                    rank: rank(&SparseMatrix::from_columns(b.dim(), &all)),
                });
            }
        }
        out
    }

    /// Dimensions of the truncated components per (i, j, parity, top degree).
    pub fn dimension_table(&self) -> Vec<DimensionRow> {
        let mut acc: BTreeMap<(usize, usize, Parity, u32), usize> = BTreeMap::new();
        for b in self.blocks.values() {
            for (j, v) in &b.components {
                *acc.entry((b.form_degree, *j, b.parity, b.top_degree)).or_default() += v.len();
            }
        }
        acc.into_iter()
            .filter(|(_, d)| *d > 0)
            .map(|((i, j, parity, top_degree), dim)| DimensionRow { i, j, parity, top_degree, dim })
            .collect()
    }

    fn spanning_failure(&self, i: usize, w: Weight) -> Error {
        let members = block_members(self.l(), i, w);
        Error::SpanningFailure {
            form_degree: i,
            parity: block_parity(i, w).as_str(),
            weight: w.values(),
            top_degree: top_degree(&members),
            cap: self.cap,
        }
    }

    /// Splits a homogeneous form of degree `i` into all its components.
    pub fn project_all(&self, psi: &SpinorForm) -> Result<BTreeMap<usize, SpinorForm>> {
        let l = self.l();
        let Some(i) = psi.form_degree() else {
            if psi.is_zero() {
                return Ok(BTreeMap::new());
            }
            return Err(Error::Shape("projection needs a form of a single degree".into()));
        };
        let mut by_weight: BTreeMap<Weight, Vec<((FormIndex, Monomial), Scalar)>> = BTreeMap::new();
        for ((f, m), c) in psi.terms() {
            by_weight.entry(Weight::of(l, *f, *m)).or_default().push(((*f, *m), c.clone()));
        }
        let mut out: BTreeMap<usize, SpinorForm> =
            self.xi().slots(i).map(|j| (j, SpinorForm::zero(l, self.cap))).collect();
        for (w, terms) in by_weight {
            let b = self.block(i, w).ok_or_else(|| self.spanning_failure(i, w))?;
            let idx = index_of(&b.members);
            let v: SparseVector = terms.into_iter().map(|(k, c)| (idx[&k], c)).collect();
            for (j, part) in b.split(&v) {
                out.get_mut(&j).expect("slot exists").add_assign(&b.to_form(l, self.cap, &part));
            }
        }
        Ok(out)
    }

    /// `p^{ij}ψ`; zero for `(i, j) ∉ Ξ`.
    pub fn project(&self, j: usize, psi: &SpinorForm) -> Result<SpinorForm> {
        let mut parts = self.project_all(psi)?;
        Ok(parts.remove(&j).unwrap_or_else(|| SpinorForm::zero(self.l(), self.cap)))
    }

    /// Matrix of `p^{ij}` on the guard-band basis of `Λ^i` (members of the
    /// band blocks, in block order); domain and codomain share that basis.
    pub fn projection_matrix(&self, i: usize, j: usize, band: u32) -> (Vec<(FormIndex, Monomial)>, SparseMatrix) {
        let mut basis = Vec::new();
        let mut entries = Vec::new();
        for b in self.band_blocks(i, band) {
            let off = basis.len();
            basis.extend(b.members.iter().copied());
            for c in 0..b.dim() {
                let unit: SparseVector = [(c, Scalar::ONE)].into_iter().collect();
                if let Some(part) = b.split(&unit).remove(&j) {
                    for (r, v) in part {
                        entries.push((off + r, off + c, v));
                    }
                }
            }
        }
        let mut m = SparseMatrix::zeros(basis.len(), basis.len());
        for (r, c, v) in entries {
            m.set(r, c, v);
        }
        (basis, m)
    }
}

/// Outcome of a single verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    Finding,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
            Status::Finding => "FINDING",
        }
    }
}

/// A vector that violates (or, for findings, exhibits) a property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub input: SpinorForm,
    pub output: SpinorForm,
    pub detail: alloc::string::String,
}

/// Result of the containment check for `Σ^σ` and `Θ^σ` on one `E^{ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentReport {
    pub i: usize,
    pub j: usize,
    pub status: Status,
    pub checked: usize,
    pub forbidden_sigma: Vec<usize>,
    pub forbidden_theta: Vec<usize>,
    pub witness: Option<Witness>,
}

impl IsotypicDecomposition {
    /// For every guard-band basis vector `ψ` of `E^{ij}`, checks that
    /// `p^{i+1,k}(Σ^σψ)` and `p^{i,k}(Θ^σψ)` vanish for all `k` outside
    /// `{j−1, j, j+1}`.
    ///
    /// `Θ^σ` preserves the form degree, so its image is projected within
    /// `Λ^i`.
    pub fn verify_containment(
        &self,
        i: usize,
        j: usize,
        sigma: &RicciLikeTensor,
        band: u32,
    ) -> Result<ContainmentReport> {
        let xi = self.xi();
        if !xi.contains(i as i64, j as i64) {
            return Err(Error::NotInTriangle { i, j });
        }
        let forbidden_sigma = if i < self.space.dim() { xi.forbidden(i + 1, j) } else { Vec::new() };
        let forbidden_theta = xi.forbidden(i, j);
        let mut report = ContainmentReport {
            i,
            j,
            status: Status::Vacuous,
            checked: 0,
            forbidden_sigma: forbidden_sigma.clone(),
            forbidden_theta: forbidden_theta.clone(),
            witness: None,
        };
        if forbidden_sigma.is_empty() && forbidden_theta.is_empty() {
            return Ok(report);
        }
        let sig = Op::sigma(sigma);
        let theta = Op::theta(sigma);
        for psi in self.component_basis(i, j, band) {
            report.checked += 1;
            for (name, op, forbidden) in [("Sigma", &sig, &forbidden_sigma), ("Theta", &theta, &forbidden_theta)] {
                if forbidden.is_empty() {
                    continue;
                }
                let img = op.apply(&psi);
                let parts = self.project_all(&img)?;
                for k in forbidden {
                    if let Some(p) = parts.get(k).filter(|p| !p.is_zero()) {
                        report.status = Status::Fail;
                        report.witness = Some(Witness {
                            input: psi.clone(),
                            output: p.clone(),
                            detail: alloc::format!("{name} image has a component in slot {k}"),
                        });
                        return Ok(report);
                    }
                }
            }
        }
        report.status = Status::Pass;
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_shape() {
        let xi = XiIndex::new(3);
        assert_eq!(xi.nodes().len(), 16);
        assert_eq!(xi.column_sizes(), [1, 2, 3, 4, 3, 2, 1]);
        assert_eq!(XiIndex::new(2).column_sizes(), [1, 2, 3, 2, 1]);
        let from_33: Vec<_> = xi.arrows().into_iter().filter(|(a, _)| *a == (3, 3)).map(|(_, b)| b).collect();
        assert_eq!(from_33, [(4, 2)]);
        assert!(xi.in_minus(2, 2) && !xi.in_minus(3, 3) && !xi.in_minus(4, 2));
        assert!(!xi.in_plus(2, 2) && xi.in_plus(4, 2));
        assert_eq!(xi.m(5), 1);
        assert_eq!(xi.forbidden(3, 0), [2, 3]);
    }

    #[test]
    fn weight_is_preserved_by_members() {
        let w = Weight::new(&[1, 0]);
        for i in 0..=4 {
            for (f, m) in block_members(2, i, w) {
                assert_eq!(Weight::of(2, f, m), w);
                assert_eq!(Parity::of_degree(m.degree()), block_parity(i, w));
            }
        }
    }

    #[test]
    fn lowest_component_in_degree_zero_is_everything() {
        let v = SymplecticSpace::new(2).unwrap();
        let d = IsotypicDecomposition::build(v, 4).unwrap();
        assert_eq!(d.lowest_component(0).len(), Monomial::up_to_degree(2, 4).len());
    }
}
