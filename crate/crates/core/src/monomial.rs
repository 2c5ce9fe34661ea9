//! Packed exponent multi-indices and exterior basis indices.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Maximum number of polynomial variables a [`Monomial`] can carry.
pub const MAX_VARS: usize = 8;

/// An exponent multi-index `α ∈ ℕ₀^n`, `n ≤ 8`, each exponent below 256.
///
/// Ordered graded-lexicographically: total degree first, then `x¹ > x² > …`
/// lexicographically on the exponents, so `1 < x² < x¹ < (x²)² < x¹x² < (x¹)²`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    packed: u64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { packed: 0 };

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (k, &e) in exps.iter().enumerate() {
            m = m.with(k, e);
        }
        m
    }

    /// The single variable `x^{var+1}` (0-based `var`).
    pub fn var(var: usize) -> Self {
        Monomial::ONE.with(var, 1)
    }

    #[inline]
    pub fn exp(&self, var: usize) -> u32 {
        ((self.packed >> (8 * (MAX_VARS - 1 - var))) & 0xff) as u32
    }

    #[inline]
    fn with(self, var: usize, e: u32) -> Self {
        assert!(e < 256, "exponent overflow");
        let shift = 8 * (MAX_VARS - 1 - var);
        let cleared = self.packed & !(0xffu64 << shift);
        Monomial { packed: cleared | ((e as u64) << shift) }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.packed.to_be_bytes().iter().map(|&b| b as u32).sum()
    }

    #[inline]
    pub fn raise(self, var: usize) -> Self {
        self.with(var, self.exp(var) + 1)
    }

    /// Lowers the exponent of `var` by one; `None` when it is already zero.
    #[inline]
    pub fn lower(self, var: usize) -> Option<Self> {
        let e = self.exp(var);
        if e == 0 {
            None
        } else {
            Some(self.with(var, e - 1))
        }
    }

    pub fn mul(self, other: Monomial) -> Self {
        let mut out = self;
        for k in 0..MAX_VARS {
            let e = other.exp(k);
            if e > 0 {
                out = out.with(k, out.exp(k) + e);
            }
        }
        out
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|k| self.exp(k)).collect()
    }

    /// All monomials in `nvars` variables of total degree exactly `deg`,
    /// in ascending order.
    pub fn of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, var: usize, left: u32, cur: Monomial, out: &mut Vec<Monomial>) {
            if var + 1 == nvars {
                out.push(cur.with(var, left));
                return;
            }
            for e in 0..=left {
                rec(nvars, var + 1, left - e, cur.with(var, e), out);
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if deg == 0 {
                out.push(Monomial::ONE);
            }
            return out;
        }
        rec(nvars, 0, deg, Monomial::ONE, &mut out);
        out.sort();
        out
    }

    /// All monomials of total degree `<= cap`, ascending.
    pub fn up_to_degree(nvars: usize, cap: u32) -> Vec<Monomial> {
        (0..=cap).flat_map(|d| Monomial::of_degree(nvars, d)).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.packed.cmp(&other.packed))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz: Vec<_> = (0..MAX_VARS).filter(|&k| self.exp(k) > 0).collect();
        if nz.is_empty() {
            return write!(f, "1");
        }
        for (n, k) in nz.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            match self.exp(*k) {
                1 => write!(f, "x{}", k + 1)?,
                e => write!(f, "x{}^{}", k + 1, e)?,
            }
        }
        Ok(())
    }
}

/// A strictly increasing multi-index `i₁ < … < i_r` naming the exterior
/// basis element `ε^{i₁}∧…∧ε^{i_r}`; bit `k` stands for `ε^{k+1}`.
///
/// Ordered by degree, then lexicographically on the sorted index lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FormIndex(u16);

impl FormIndex {
    pub const EMPTY: FormIndex = FormIndex(0);

    pub fn from_bits(bits: u16) -> Self {
        FormIndex(bits)
    }

    pub fn bits(&self) -> u16 {
        self.0
    }

    /// Builds the index from 0-based slots; `None` on a repeated slot.
    pub fn from_slots(slots: &[usize]) -> Option<Self> {
        let mut bits = 0u16;
        for &s in slots {
            if bits & (1 << s) != 0 {
                return None;
            }
            bits |= 1 << s;
        }
        Some(FormIndex(bits))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(&self, slot: usize) -> bool {
        self.0 & (1 << slot) != 0
    }

    /// 0-based slots in increasing order.
    pub fn slots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..16).filter(move |k| self.0 & (1 << k) != 0)
    }

    /// `ε^{slot} ∧ ε^I = sign · ε^J`, or `None` when `slot ∈ I`.
    #[inline]
    pub fn wedge_left(&self, slot: usize) -> Option<(i64, FormIndex)> {
        if self.contains(slot) {
            return None;
        }
        let below = (self.0 & ((1u16 << slot) - 1)).count_ones();
        let sign = if below.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, FormIndex(self.0 | (1 << slot))))
    }

    /// Contraction `ι_{e_slot} ε^I = sign · ε^J` (insertion into the first
    /// slot), or `None` when `slot ∉ I`.
    #[inline]
    pub fn contract(&self, slot: usize) -> Option<(i64, FormIndex)> {
        if !self.contains(slot) {
            return None;
        }
        let below = (self.0 & ((1u16 << slot) - 1)).count_ones();
        let sign = if below.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, FormIndex(self.0 & !(1 << slot))))
    }

    /// All `r`-element subsets of `0..n`, ascending.
    pub fn all_of_degree(n: usize, r: usize) -> Vec<FormIndex> {
        let mut out: Vec<FormIndex> = (0u32..(1u32 << n))
            .filter(|b| b.count_ones() as usize == r)
            .map(|b| FormIndex(b as u16))
            .collect();
        out.sort();
        out
    }
}

impl Ord for FormIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the lowest differing slot belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for FormIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FormIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<_> = self.slots().map(|k| k + 1).collect();
        write!(f, "e{:?}", parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let v = Monomial::up_to_degree(2, 2);
        let shown: Vec<_> = v.iter().map(|m| alloc::format!("{m:?}")).collect();
        assert_eq!(shown, ["1", "x2", "x1", "x2^2", "x1*x2", "x1^2"]);
    }

    #[test]
    fn counts() {
        assert_eq!(Monomial::of_degree(3, 4).len(), 15);
        assert_eq!(Monomial::up_to_degree(2, 10).len(), 66);
        assert_eq!(FormIndex::all_of_degree(6, 3).len(), 20);
    }

    #[test]
    fn wedge_signs() {
        let i = FormIndex::from_slots(&[0, 2]).unwrap();
        assert_eq!(i.wedge_left(1), Some((-1, FormIndex::from_slots(&[0, 1, 2]).unwrap())));
        assert_eq!(i.wedge_left(3), Some((1, FormIndex::from_slots(&[0, 2, 3]).unwrap())));
        assert_eq!(i.wedge_left(0), None);
        // contraction undoes the wedge with the same sign
        let (s, j) = i.wedge_left(1).unwrap();
        assert_eq!(j.contract(1), Some((s, i)));
    }

    #[test]
    fn form_order_is_lexicographic() {
        let all = FormIndex::all_of_degree(4, 2);
        let lists: Vec<Vec<usize>> = all.iter().map(|f| f.slots().collect()).collect();
        assert_eq!(lists, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    }
}
