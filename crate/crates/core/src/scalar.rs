//! Exact Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.
//!
//! Every operator entry in the crate lives here. Rationals keep an `i64`
//! fast path and promote to arbitrary precision on overflow, so the common
//! case (small integer coefficients, denominators that are powers of two)
//! never touches the allocator.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseScalarError;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    // den > 0, gcd(num, den) = 1, num != i64::MIN
    Small(i64, i64),
    // same invariants, and the value does not fit `Small`
    Big(BigInt, BigInt),
}

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn fits(v: i128) -> Option<i64> {
    if v > i64::MIN as i128 && v <= i64::MAX as i128 {
        Some(v as i64)
    } else {
        None
    }
}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small(0, 1));
    pub const ONE: Rational = Rational(Repr::Small(1, 1));

    pub fn from_int(n: i64) -> Self {
        if n == i64::MIN {
            Self::from_big(BigInt::from(n), BigInt::one())
        } else {
            Rational(Repr::Small(n, 1))
        }
    }

    /// `num / den`; panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::ZERO;
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (fits(n), fits(d)) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Self::from_big(BigInt::from(n), BigInt::from(d)),
        }
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::ZERO;
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / &g, den / g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        match (n.to_i64(), d.to_i64()) {
            (Some(a), Some(b)) if a != i64::MIN => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(n, d)),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(n, _) => n.clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(_, d) => d.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(_, d) => d.is_one(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(n, _) => {
                if n.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(n, d) => Self::from_big(d.clone(), n.clone()),
        })
    }

    fn big_parts(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(n, d) => (n.clone(), d.clone()),
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a + c, b)
                } else {
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => {
                let (a, b) = self.big_parts();
                let (c, d) = rhs.big_parts();
                Self::from_big(a * &d + c * &b, b * d)
            }
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => {
                let (a, b) = self.big_parts();
                let (c, d) = rhs.big_parts();
                Self::from_big(a * c, b * d)
            }
        }
    }

    fn neg_ref(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(n, d) => Self::from_big(-n, d.clone()),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.add_ref(&other.neg_ref());
        diff.signum().cmp(&0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(n, d) => write!(f, "{}/{}", n, d),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseScalarError;

    /// Accepts `n` or `n/d` with optional sign on `n`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseScalarError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(n, d))
    }
}

/// An exact Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { re: Rational::ZERO, im: Rational::ZERO };
    pub const ONE: Scalar = Scalar { re: Rational::ONE, im: Rational::ZERO };
    pub const I: Scalar = Scalar { re: Rational::ZERO, im: Rational::ONE };

    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: Rational::from_int(n), im: Rational::ZERO }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar { re: Rational::new(num, den), im: Rational::ZERO }
    }

    /// `a + b·i` with integer parts.
    pub fn gaussian(a: i64, b: i64) -> Self {
        Scalar { re: Rational::from_int(a), im: Rational::from_int(b) }
    }

    /// `(num/den)·i`
    pub fn imag(num: i64, den: i64) -> Self {
        Scalar { re: Rational::ZERO, im: Rational::new(num, den) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: self.im.neg_ref() }
    }

    /// `a² + b²`
    pub fn norm_sqr(&self) -> Rational {
        self.re.mul_ref(&self.re).add_ref(&self.im.mul_ref(&self.im))
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr().recip()?;
        Some(Scalar { re: self.re.mul_ref(&n), im: self.im.neg_ref().mul_ref(&n) })
    }

    /// Multiplication by `i`, without general arithmetic.
    pub fn mul_i(&self) -> Self {
        Scalar { re: self.im.neg_ref(), im: self.re.clone() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        if k == 1 {
            return self.clone();
        }
        let k = Rational::from_int(k);
        Scalar { re: self.re.mul_ref(&k), im: self.im.mul_ref(&k) }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Scalar { re: self.re.add_ref(&rhs.re), im: self.im.add_ref(&rhs.im) }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Scalar { re: self.re.add_ref(&rhs.re.neg_ref()), im: self.im.add_ref(&rhs.im.neg_ref()) }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar { re: self.re.mul_ref(&rhs.re), im: Rational::ZERO };
        }
        let re = self.re.mul_ref(&rhs.re).add_ref(&self.im.mul_ref(&rhs.im).neg_ref());
        let im = self.re.mul_ref(&rhs.im).add_ref(&self.im.mul_ref(&rhs.re));
        Scalar { re, im }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar { re: r, im: Rational::ZERO }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$inner(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$inner(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(&rhs.inv().expect("division by zero"))
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: self.re.neg_ref(), im: self.im.neg_ref() }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: self.re.neg_ref(), im: self.im.neg_ref() }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl fmt::Display for Scalar {
    /// Exact form `a/b+c/d*i` (the sign between the parts follows `c`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.signum() < 0 { '-' } else { '+' };
        let im_abs = if self.im.signum() < 0 { self.im.neg_ref() } else { self.im.clone() };
        write!(f, "{}{}{}*i", self.re, sign, im_abs)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Parses the `Display` form, and also bare rationals like `-3/4` or `5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let Some(body) = t.strip_suffix("*i") else {
            return Ok(Scalar::from(t.parse::<Rational>()?));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(k, _)| k)
            .last()
            .ok_or_else(|| ParseScalarError(s.to_string()))?;
        let re: Rational = body[..split].parse()?;
        let im: Rational = body[split..].trim_start_matches('+').parse()?;
        Ok(Scalar { re, im })
    }
}

impl Scalar {
    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        assert_eq!(&Scalar::I * &Scalar::I, Scalar::from_int(-1));
        assert_eq!(Scalar::ONE.mul_i(), Scalar::I);
    }

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(0, -7), Rational::ZERO);
    }

    #[test]
    fn promotes_to_bignum_and_back() {
        let big = Rational::from_int(i64::MAX);
        let sq = Scalar::from(big.clone()) * Scalar::from(big.clone());
        assert!(matches!(sq.re.0, Repr::Big(..)));
        let back = &sq / &Scalar::from(big.clone());
        assert_eq!(back, Scalar::from(big));
        assert!(matches!(back.re.0, Repr::Small(..)));
    }

    #[test]
    fn min_value_is_not_small() {
        let m = Rational::from_int(i64::MIN);
        assert!(matches!(m.0, Repr::Big(..)));
        assert_eq!(m.neg_ref().neg_ref(), m);
    }

    #[test]
    fn display_round_trip() {
        for s in [
            Scalar::gaussian(3, -2),
            Scalar::imag(1, 2),
            Scalar::from_ratio(-7, 3),
            Scalar::new(Rational::new(1, 3), Rational::new(-5, 9)),
        ] {
            let txt = s.to_string();
            assert_eq!(txt.parse::<Scalar>().unwrap(), s, "{txt}");
        }
        assert_eq!("1/2-3/4*i".parse::<Scalar>().unwrap().to_string(), "1/2-3/4*i");
        assert_eq!("-5".parse::<Scalar>().unwrap(), Scalar::from_int(-5));
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn inverse() {
        let z = Scalar::gaussian(3, 4);
        assert_eq!(&z * &z.inv().unwrap(), Scalar::ONE);
        assert!(Scalar::ZERO.inv().is_none());
    }
}
