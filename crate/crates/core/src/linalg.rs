//! Exact sparse linear algebra over [`Scalar`]: rank, kernels, spans, inverses.
//!
//! Elimination is dense Gauss-Jordan on the (small) blocks this crate works
//! with. Pivots are chosen column by column, taking the first row with a
//! nonzero entry, so every basis returned here is a deterministic function of
//! the input entries.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse column vector: index → nonzero entry.
pub type SparseVector = BTreeMap<usize, Scalar>;

/// Adds `coeff · value` into `map[key]`, dropping the entry if it cancels.
pub fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, value: Scalar) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.entries.insert((k, k), Scalar::ONE);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, v) in col {
                assert!(i < rows, "column entry out of range");
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entries.get(&(i, j)).cloned().unwrap_or(Scalar::ZERO)
    }

    /// Sets an entry; storing zero removes it.
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "entry out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn column(&self, j: usize) -> SparseVector {
        self.entries
            .iter()
            .filter(|((_, c), _)| *c == j)
            .map(|(&(i, _), v)| (i, v.clone()))
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![Scalar::ZERO; self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn mul_vec(&self, v: &SparseVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (&(i, j), a) in &self.entries {
            if let Some(x) = v.get(&j) {
                accumulate(&mut out, i, a * x);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for (&(i, j), v) in &rhs.entries {
            by_row.entry(i).or_default().push((j, v));
        }
        let mut out = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for (j, b) in row {
                    accumulate(&mut out, (i, *j), a * *b);
                }
            }
        }
        Ok(SparseMatrix { rows: self.rows, cols: rhs.cols, entries: out })
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(alloc::format!(
                "cannot subtract {}x{} from {}x{}",
                rhs.rows, rhs.cols, self.rows, self.cols
            )));
        }
        let mut out = self.entries.clone();
        for (k, v) in &rhs.entries {
            accumulate(&mut out, *k, -v);
        }
        Ok(SparseMatrix { rows: self.rows, cols: self.cols, entries: out })
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_basis(&self) -> Vec<SparseVector> {
        kernel_basis(self)
    }

    /// Self-check hook: row rank equals column rank.
    pub fn rank_is_consistent(&self) -> bool {
        rank(self) == rank(&self.transpose())
    }

    /// Exact inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<SparseMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Scalar>> = self.to_dense();
        for (i, row) in aug.iter_mut().enumerate() {
            row.extend((0..n).map(|j| if i == j { Scalar::ONE } else { Scalar::ZERO }));
        }
        let pivots = rref(&mut aug, n);
        if pivots.len() < n {
            return None;
        }
        let mut inv = SparseMatrix::zeros(n, n);
        for (i, row) in aug.iter().enumerate() {
            for j in 0..n {
                inv.set(i, j, row[n + j].clone());
            }
        }
        Some(inv)
    }
}

/// Reduces `m` in place to reduced row echelon form over its first
/// `pivot_cols` columns and returns the pivot columns in row order.
///
/// Pivot rule: scan columns left to right; in each, take the first remaining
/// row with a nonzero entry.
pub fn rref(m: &mut [Vec<Scalar>], pivot_cols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        if inv != Scalar::ONE {
            for v in m[r].iter_mut().skip(c) {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (k, pv) in pivot_row.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    row[k] -= &(&f * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &SparseMatrix) -> usize {
    if m.is_zero() {
        return 0;
    }
    let mut d = m.to_dense();
    rref(&mut d, m.cols).len()
}

/// A basis of `{v : M v = 0}`: one vector per non-pivot column `f`, with
/// `v_f = 1` and the remaining free coordinates zero.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVector> {
    let mut d = m.to_dense();
    let pivots = rref(&mut d, m.cols);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = SparseVector::new();
        v.insert(f, Scalar::ONE);
        for (r, &p) in pivots.iter().enumerate() {
            let x = &d[r][f];
            if !x.is_zero() {
                v.insert(p, -x);
            }
        }
        out.push(v);
    }
    out
}

/// Coefficients `c` with `Σ_k c_k basis[k] = target`, or [`Error::NotInSpan`].
///
/// The basis is expected to be independent; if it is not, free coefficients
/// are set to zero.
pub fn solve_in_span(basis: &[SparseVector], target: &SparseVector) -> Result<Vec<Scalar>> {
    let n = basis.len();
    let dim = basis
        .iter()
        .flat_map(|v| v.keys())
        .chain(target.keys())
        .max()
        .map_or(0, |&k| k + 1);
    let mut aug = vec![vec![Scalar::ZERO; n + 1]; dim];
    for (j, v) in basis.iter().enumerate() {
        for (&i, x) in v {
            aug[i][j] = x.clone();
        }
    }
    for (&i, x) in target {
        aug[i][n] = x.clone();
    }
    let pivots = rref(&mut aug, n + 1);
    if pivots.last() == Some(&n) {
        return Err(Error::NotInSpan);
    }
    let mut coeffs = vec![Scalar::ZERO; n];
    for (r, &p) in pivots.iter().enumerate() {
        coeffs[p] = aug[r][n].clone();
    }
    Ok(coeffs)
}

/// `Σ_k c_k v_k`
pub fn combine(vectors: &[SparseVector], coeffs: &[Scalar]) -> SparseVector {
    let mut out = SparseVector::new();
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (&i, x) in v {
            accumulate(&mut out, i, c * x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64) -> Scalar {
        Scalar::gaussian(a, b)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = SparseMatrix::identity(3);
        assert_eq!(rank(&m), 3);
        assert!(kernel_basis(&m).is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = SparseMatrix::zeros(2, 3);
        assert_eq!(rank(&m), 0);
        assert_eq!(kernel_basis(&m).len(), 3);
    }

    #[test]
    fn gaussian_kernel() {
        // second row is -i times the first
        let m = SparseMatrix::from_dense(&[vec![s(1, 0), s(0, 1)], vec![s(0, -1), s(1, 0)]]);
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).is_empty());
        // k = (-i, 1) = -i·(1, i)
        assert_eq!(k[0].get(&0), Some(&s(0, -1)));
        assert_eq!(k[0].get(&1), Some(&s(1, 0)));
    }

    #[test]
    fn outer_product_has_rank_one() {
        let u = [s(1, 2), s(0, 0), s(-3, 1)];
        let v = [s(2, 0), s(1, -1)];
        let rows: Vec<Vec<Scalar>> = u.iter().map(|a| v.iter().map(|b| a * b).collect()).collect();
        let m = SparseMatrix::from_dense(&rows);
        assert_eq!(rank(&m), 1);
        assert!(m.rank_is_consistent());
    }

    #[test]
    fn span_membership() {
        let e1: SparseVector = [(0, Scalar::ONE)].into_iter().collect();
        let e2: SparseVector = [(1, Scalar::ONE)].into_iter().collect();
        assert_eq!(solve_in_span(core::slice::from_ref(&e1), &e1).unwrap(), vec![Scalar::ONE]);
        assert_eq!(solve_in_span(&[e1], &e2), Err(Error::NotInSpan));
    }

    #[test]
    fn inverse_round_trip() {
        let m = SparseMatrix::from_dense(&[vec![s(1, 1), s(2, 0)], vec![s(0, 3), s(-1, 0)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), SparseMatrix::identity(2));
        let sing = SparseMatrix::from_dense(&[vec![s(1, 0), s(2, 0)], vec![s(2, 0), s(4, 0)]]);
        assert!(sing.inverse().is_none());
    }
}
