use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rationals.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficient field operations used by the polynomial and Gröbner code.
///
/// Elements carry whatever context they need (a rational function knows its
/// ring), so constants are produced from an existing element.
pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_q_like(&self, c: &Q) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inverse(&self) -> Self;
    fn over(&self, o: &Self) -> Self {
        self.times(&o.inverse())
    }
    /// Rough size measure used for pivot selection.
    fn size_hint(&self) -> usize;
    /// Sign used when choosing a canonical scaling (`true` for negative).
    fn is_negative_hint(&self) -> bool;
    /// Whether the element is a rational constant (used by the printer).
    fn as_q(&self) -> Option<Q>;
}

impl Field for Q {
    #[inline]
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    #[inline]
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn from_q_like(&self, c: &Q) -> Self {
        c.clone()
    }
    #[inline]
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    #[inline]
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    #[inline]
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn over(&self, o: &Self) -> Self {
        assert!(!Zero::is_zero(o), "division by zero");
        self / o
    }
    fn size_hint(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
    fn is_negative_hint(&self) -> bool {
        self.is_negative()
    }
    fn as_q(&self) -> Option<Q> {
        Some(self.clone())
    }
}
