//! Pluggable exact coefficient fields.
//!
//! The polynomial core is generic over a [`Field`]; the two instances are
//! the rationals ([`Rationals`]) and cyclotomic extensions
//! ([`crate::cyclotomic::Cyclotomic`]). A field value carries whatever
//! context its elements need, so every operation is a method on the field.

use std::fmt::Debug;

use num::{BigInt, BigRational, One, Zero};

pub trait Field: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` exactly on zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_rational(&self, v: &BigRational) -> Self::Elem;
    /// The element as a rational number, when it lies in the prime field.
    fn as_rational(&self, a: &Self::Elem) -> Option<BigRational>;
    fn elem_string(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// The field of arbitrary-precision rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(&self, v: &BigRational) -> BigRational {
        v.clone()
    }

    fn as_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }

    fn elem_string(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

pub fn rat_i64(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_ops() {
        let q = Rationals;
        let half = rat(1, 2);
        assert_eq!(q.add(&half, &half), q.one());
        assert_eq!(q.mul(&half, &q.from_i64(2)), q.one());
        assert_eq!(q.inv(&q.from_i64(3)).unwrap(), rat(1, 3));
        assert!(q.inv(&q.zero()).is_none());
        assert_eq!(q.elem_string(&rat(-3, 2)), "-3/2");
        assert_eq!(q.elem_string(&rat_i64(7)), "7");
    }
}
