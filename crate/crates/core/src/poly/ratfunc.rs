//! Rational functions over the rationals in a fixed set of variables.

use std::fmt;

use super::field::{Field, Q};
use super::gcd::poly_gcd;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::RingRef;
use crate::error::{Error, Result};

/// Term count above which numerator and denominator are gcd-reduced.
pub const REDUCE_THRESHOLD: usize = 64;

/// `num / den` with `den` monic. Cheap cancellations (monomial factors,
/// constant denominators) are always applied; a full gcd only once the
/// representation grows past [`REDUCE_THRESHOLD`] terms.
#[derive(Clone)]
pub struct RatFunc {
    num: Polynomial,
    den: Polynomial,
}

impl RatFunc {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den, false))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let den = Polynomial::one_in(p.ring());
        RatFunc { num: p, den }
    }

    pub fn from_q(ring: &RingRef, c: Q) -> Self {
        Self::from_poly(Polynomial::constant(ring, c))
    }

    pub fn ring(&self) -> &RingRef {
        self.num.ring()
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Fully gcd-reduced form.
    pub fn reduced(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone(), true)
    }

    fn normalized(num: Polynomial, den: Polynomial, force: bool) -> Self {
        if num.is_zero() {
            let one = Polynomial::one_in(num.ring());
            return RatFunc { num, den: one };
        }
        let lc = den.lc().expect("nonzero denominator").clone();
        let (mut num, mut den) = if num_traits::One::is_one(&lc) {
            (num, den)
        } else {
            let inv = lc.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        if den.is_constant() {
            return RatFunc { num, den };
        }
        if num.is_monomial() || den.is_monomial() {
            let g = monomial_content(&num).gcd(&monomial_content(&den));
            if !g.is_one() {
                let one = Polynomial::monomial(num.ring(), g, Q::from_integer(1.into()));
                num = num.exact_div(&one).expect("monomial divides");
                den = den.exact_div(&one).expect("monomial divides");
            }
            if num.is_monomial() && den.is_monomial() || den.is_constant() {
                return finish(num, den);
            }
            if !force && num.len() + den.len() <= REDUCE_THRESHOLD {
                return finish(num, den);
            }
        } else if !force && num.len() + den.len() <= REDUCE_THRESHOLD {
            return RatFunc { num, den };
        }
        let g = poly_gcd(&num, &den);
        if !g.is_constant() {
            num = num.exact_div(&g).expect("gcd divides");
            den = den.exact_div(&g).expect("gcd divides");
        }
        finish(num, den)
    }
}

fn finish(num: Polynomial, den: Polynomial) -> RatFunc {
    let lc = den.lc().expect("nonzero").clone();
    if num_traits::One::is_one(&lc) {
        RatFunc { num, den }
    } else {
        let inv = lc.recip();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }
}

/// Largest monomial dividing every term.
fn monomial_content(p: &Polynomial) -> Monomial {
    let mut it = p.terms().iter();
    let first = it.next().expect("nonzero").0.clone();
    it.fold(first, |g, (m, _)| g.gcd(m))
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Field for RatFunc {
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn zero_like(&self) -> Self {
        Self::from_poly(Polynomial::zero(self.ring()))
    }

    fn one_like(&self) -> Self {
        Self::from_poly(Polynomial::one_in(self.ring()))
    }

    fn from_q_like(&self, c: &Q) -> Self {
        Self::from_q(self.ring(), c.clone())
    }

    fn plus(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return Self::normalized(self.num.add(&o.num), self.den.clone(), false);
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&o.den), false)
    }

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return self.zero_like();
        }
        if let Some(c) = o.num.constant_value().filter(|_| o.den.is_constant()) {
            return RatFunc { num: self.num.scale(&c), den: self.den.clone() };
        }
        if let Some(c) = self.num.constant_value().filter(|_| self.den.is_constant()) {
            return RatFunc { num: o.num.scale(&c), den: o.den.clone() };
        }
        Self::normalized(self.num.mul(&o.num), self.den.mul(&o.den), false)
    }

    fn negated(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::normalized(self.den.clone(), self.num.clone(), false)
    }

    fn size_hint(&self) -> usize {
        self.num.len() + self.den.len()
    }

    fn is_negative_hint(&self) -> bool {
        self.num.lc().is_some_and(num_traits::Signed::is_negative)
    }

    fn as_q(&self) -> Option<Q> {
        match (self.num.is_zero(), self.num.constant_value(), self.den.constant_value()) {
            (true, _, _) => Some(Q::from_integer(0.into())),
            (false, Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        let wrap = |p: &Polynomial| if p.len() > 1 { format!("({p})") } else { p.to_string() };
        if r.den.is_constant() {
            write!(f, "{}", r.num)
        } else {
            write!(f, "{}/{}", wrap(&r.num), wrap(&r.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
