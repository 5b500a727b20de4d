//! Integer rings for the line sweep: checked `i128` first, `BigInt` on overflow.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) trait Ring: Clone + Ord + Send + Sync + std::fmt::Debug {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn zero() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn sign(&self) -> i32;
    fn double(&self) -> Option<Self> {
        self.add(self)
    }
}

impl Ring for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn zero() -> Self {
        0
    }
    #[inline]
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    #[inline]
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    #[inline]
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    #[inline]
    fn sign(&self) -> i32 {
        self.signum() as i32
    }
}

impl Ring for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn sign(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// `a/b` vs `c/d` with positive denominators.
pub(crate) fn cmp_frac<R: Ring>(a: &R, b: &R, c: &R, d: &R) -> Option<Ordering> {
    Some(a.mul(d)?.cmp(&c.mul(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_overflow_reported() {
        assert_eq!(i128::MAX.add(&1), None);
        assert_eq!((1i128 << 100).mul(&(1i128 << 30)), None);
        let big = BigInt::from(1u8) << 200;
        assert!(<i128 as Ring>::from_big(&big).is_none());
        assert_eq!(Ring::mul(&big, &big), Some(BigInt::from(1u8) << 400));
    }

    #[test]
    fn frac_order() {
        assert_eq!(cmp_frac(&1i128, &3, &1, &2), Some(Ordering::Less));
        assert_eq!(cmp_frac(&2i128, &4, &1, &2), Some(Ordering::Equal));
    }
}
