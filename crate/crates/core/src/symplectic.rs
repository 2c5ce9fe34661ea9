//! The model symplectic space `(ℝ^{2l}, ω)` in its standard symplectic basis,
//! and index raising/lowering on coordinate tensors.
//!
//! `ω_{ij} = 1` iff `i ≤ l, j = i + l`; `ω_{ij} = -1` iff `i > l, j = i - l`.
//! The dual matrix `ω^{ij}` is fixed by `Σ_k ω_{ik} ω^{jk} = δ_i^j`, which in
//! this basis makes it numerically equal to `ω_{ij}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::MAX_VARS;
use crate::scalar::Scalar;

/// Largest supported `l`; base polynomials on `ℝ^{2l}` need `2l` variables.
pub const MAX_RANK: usize = MAX_VARS / 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticSpace {
    l: usize,
}

impl SymplecticSpace {
    pub fn new(l: usize) -> Result<Self> {
        if l == 0 || l > MAX_RANK {
            return Err(Error::UnsupportedRank(l));
        }
        Ok(SymplecticSpace { l })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn dim(&self) -> usize {
        2 * self.l
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.dim() {
            Err(Error::IndexOutOfRange { index: i, dim: self.dim() })
        } else {
            Ok(())
        }
    }

    /// `ω_{ij}`, 1-based.
    pub fn omega(&self, i: usize, j: usize) -> Result<Scalar> {
        self.check(i)?;
        self.check(j)?;
        Ok(Scalar::from_int(self.w(i - 1, j - 1)))
    }

    /// `ω^{ij}`, 1-based.
    pub fn omega_inv(&self, i: usize, j: usize) -> Result<Scalar> {
        self.check(i)?;
        self.check(j)?;
        Ok(Scalar::from_int(self.w_inv(i - 1, j - 1)))
    }

    /// `ω_{ij}` on 0-based indices, as a small integer.
    #[inline]
    pub fn w(&self, i: usize, j: usize) -> i64 {
        let l = self.l;
        if i < l && j == i + l {
            1
        } else if i >= l && j + l == i {
            -1
        } else {
            0
        }
    }

    /// `ω^{ij}` on 0-based indices.
    #[inline]
    pub fn w_inv(&self, i: usize, j: usize) -> i64 {
        self.w(i, j)
    }

    /// The unique `j` with `ω_{ij} ≠ 0`, with that value (0-based).
    #[inline]
    pub fn partner(&self, i: usize) -> (usize, i64) {
        if i < self.l {
            (i + self.l, 1)
        } else {
            (i - self.l, -1)
        }
    }

    pub fn omega_matrix(&self) -> Tensor {
        Tensor::from_fn(self.dim(), 2, |ix| Scalar::from_int(self.w(ix[0], ix[1])))
    }

    pub fn omega_inv_matrix(&self) -> Tensor {
        Tensor::from_fn(self.dim(), 2, |ix| Scalar::from_int(self.w_inv(ix[0], ix[1])))
    }

    /// Raises `slot` (0-based): `T'_{…i…} = Σ_c ω^{ic} T_{…c…}`.
    pub fn raise_index(&self, t: &Tensor, slot: usize) -> Result<Tensor> {
        self.contract_slot(t, slot, |i, c| self.w_inv(i, c))
    }

    /// Lowers `slot` (0-based): `T'_{…i…} = Σ_t T_{…t…} ω_{ti}`.
    pub fn lower_index(&self, t: &Tensor, slot: usize) -> Result<Tensor> {
        self.contract_slot(t, slot, |i, c| self.w(c, i))
    }

    fn contract_slot(&self, t: &Tensor, slot: usize, f: impl Fn(usize, usize) -> i64) -> Result<Tensor> {
        if t.dim != self.dim() {
            return Err(Error::Shape(alloc::format!(
                "tensor over dimension {} used with dimension {}",
                t.dim,
                self.dim()
            )));
        }
        if slot >= t.rank {
            return Err(Error::SlotOutOfRange { slot, rank: t.rank });
        }
        Ok(Tensor::from_fn(t.dim, t.rank, |ix| {
            let mut src = ix.to_vec();
            let i = ix[slot];
            let mut acc = Scalar::ZERO;
            for c in 0..t.dim {
                let w = f(i, c);
                if w != 0 {
                    src[slot] = c;
                    acc += &t.get(&src).scale_int(w);
                }
            }
            acc
        }))
    }
}

/// Dense coordinate array of a rank-`r` tensor over a `dim`-dimensional
/// space, row-major in 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    rank: usize,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(dim: usize, rank: usize) -> Self {
        Tensor { dim, rank, data: vec![Scalar::ZERO; dim.pow(rank as u32)] }
    }

    pub fn from_fn(dim: usize, rank: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> Self {
        let mut t = Tensor::zeros(dim, rank);
        let mut ix = vec![0usize; rank];
        for k in 0..t.data.len() {
            let mut r = k;
            for s in (0..rank).rev() {
                ix[s] = r % dim;
                r /= dim;
            }
            t.data[k] = f(&ix);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, ix: &[usize]) -> usize {
        debug_assert_eq!(ix.len(), self.rank);
        ix.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, ix: &[usize]) -> Scalar {
        self.data[self.offset(ix)].clone()
    }

    pub fn at(&self, ix: &[usize]) -> &Scalar {
        &self.data[self.offset(ix)]
    }

    pub fn set(&mut self, ix: &[usize], v: Scalar) {
        let o = self.offset(ix);
        self.data[o] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        Tensor { dim: self.dim, rank: self.rank, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!((self.dim, self.rank), (other.dim, other.rank), "tensor shape mismatch");
        Tensor {
            dim: self.dim,
            rank: self.rank,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!((self.dim, self.rank), (other.dim, other.rank), "tensor shape mismatch");
        Tensor {
            dim: self.dim,
            rank: self.rank,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// All index tuples in row-major order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.data.len()).map(move |k| {
            let mut ix = vec![0; self.rank];
            let mut r = k;
            for s in (0..self.rank).rev() {
                ix[s] = r % self.dim;
                r /= self.dim;
            }
            ix
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_table() {
        let v = SymplecticSpace::new(2).unwrap();
        assert_eq!(v.omega(1, 3).unwrap(), Scalar::ONE);
        assert_eq!(v.omega(3, 1).unwrap(), Scalar::from_int(-1));
        assert_eq!(v.omega(1, 2).unwrap(), Scalar::ZERO);
        assert_eq!(v.omega(0, 1), Err(Error::IndexOutOfRange { index: 0, dim: 4 }));
        assert_eq!(v.omega(1, 5), Err(Error::IndexOutOfRange { index: 5, dim: 4 }));
    }

    #[test]
    fn dual_pairing_is_identity() {
        for l in 1..=MAX_RANK {
            let v = SymplecticSpace::new(l).unwrap();
            for i in 0..v.dim() {
                for j in 0..v.dim() {
                    let s: i64 = (0..v.dim()).map(|k| v.w(i, k) * v.w_inv(j, k)).sum();
                    assert_eq!(s, (i == j) as i64);
                    assert_eq!(v.w(i, j), -v.w(j, i));
                    assert_eq!(v.w_inv(i, j), -v.w_inv(j, i));
                }
            }
        }
    }

    #[test]
    fn raising_a_slot_of_omega() {
        let v = SymplecticSpace::new(2).unwrap();
        let w = v.omega_matrix();
        let delta = Tensor::from_fn(4, 2, |ix| Scalar::from_int((ix[0] == ix[1]) as i64));
        // raising the first slot of ω_{ij} gives -δ, the second gives +δ
        assert_eq!(v.raise_index(&w, 0).unwrap(), delta.scale(&Scalar::from_int(-1)));
        assert_eq!(v.raise_index(&w, 1).unwrap(), delta);
        assert_eq!(v.raise_index(&w, 2), Err(Error::SlotOutOfRange { slot: 2, rank: 2 }));
    }

    #[test]
    fn unsupported_rank() {
        assert_eq!(SymplecticSpace::new(0), Err(Error::UnsupportedRank(0)));
        assert_eq!(SymplecticSpace::new(MAX_RANK + 1), Err(Error::UnsupportedRank(MAX_RANK + 1)));
    }
}
