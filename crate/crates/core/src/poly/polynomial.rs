use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::field::{q, Field, Q};
use super::monomial::Monomial;
use super::ring::{Ring, RingRef};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial; terms are kept strictly decreasing in the
/// ring's monomial order with no zero coefficients.
#[derive(Clone)]
pub struct Poly<C: Field> {
    ring: RingRef,
    terms: Vec<(Monomial, C)>,
}

/// Polynomial over the rationals.
pub type Polynomial = Poly<Q>;

#[inline]
pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<C: Field> Poly<C> {
    pub fn zero(ring: &RingRef) -> Self {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: C) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: C) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        if c.is_zero() {
            Self::zero(ring)
        } else {
            Poly { ring: ring.clone(), terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from terms in any order; equal monomials are merged.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<(Monomial, C)>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0 .0, &a.0 .0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.plus(&c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c))
                }
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { ring: ring.clone(), terms: out }
    }


    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&C> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => None,
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = None;
        self.terms.iter().all(|(m, _)| {
            let e = m.degree();
            *d.get_or_insert(e) == e
        })
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n).filter(|&i| self.terms.iter().any(|(m, _)| m.0[i] > 0)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(same_ring(&self.ring, &other.ring));
        Poly { ring: self.ring.clone(), terms: merge(&self.ring, &self.terms, &other.terms, false) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert!(same_ring(&self.ring, &other.ring));
        Poly { ring: self.ring.clone(), terms: merge(&self.ring, &self.terms, &other.terms, true) }
    }

    pub fn neg(&self) -> Self {
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a.times(c))).collect() }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        // multiplication by a monomial preserves the order
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.times(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(same_ring(&self.ring, &other.ring));
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(m, c);
        }
        let mut products = Vec::with_capacity(self.len() * other.len());
        for (m, a) in &small.terms {
            for (n, b) in &big.terms {
                products.push((m.mul(n), a.times(b)));
            }
        }
        Self::from_terms(&self.ring, products)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = self.one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `self - c * mono * g`, the elementary reduction step.
    pub fn sub_scaled(&self, mono: &Monomial, c: &C, g: &Self) -> Self {
        let shifted: Vec<(Monomial, C)> = g.terms.iter().map(|(m, a)| (m.mul(mono), a.times(c))).collect();
        Poly { ring: self.ring.clone(), terms: merge(&self.ring, &self.terms, &shifted, true) }
    }

    /// In-place `self - c * mono * g` restricted to the terms from `start` on;
    /// the caller guarantees every shifted term of `g` sorts below `start - 1`.
    pub(crate) fn sub_scaled_from(&mut self, start: usize, mono: &Monomial, c: &C, g: &Self) {
        let shifted: Vec<(Monomial, C)> = g.terms.iter().map(|(m, a)| (m.mul(mono), a.times(c))).collect();
        let tail = merge(&self.ring, &self.terms[start..], &shifted, true);
        self.terms.truncate(start);
        self.terms.extend(tail);
    }

    /// The constant polynomial 1 in the same ring. Requires a coefficient to
    /// copy context from when `C` needs one; falls back to `self`'s terms.
    pub fn one(&self) -> Self {
        match self.terms.first() {
            Some((_, c)) => Self::constant(&self.ring, c.one_like()),
            None => panic!("Poly::one called on a zero polynomial with contextual coefficients"),
        }
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inverse()),
        }
    }

    /// Same variables, re-sorted for another order.
    pub fn with_ring(&self, ring: &RingRef) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars());
        if Arc::ptr_eq(ring, &self.ring) {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0 .0, &a.0 .0));
        Poly { ring: ring.clone(), terms }
    }

    /// Moves the polynomial into `ring`, sending variable `i` to `map[i]`.
    pub fn remap(&self, ring: &RingRef, map: &[usize]) -> Self {
        let n = ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &x) in m.0.iter().enumerate() {
                    if x > 0 {
                        e[map[i]] += x;
                    }
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Self::from_terms(ring, terms)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] > 0)
            .map(|(m, c)| {
                let e = m.0[var];
                let mut m2 = m.clone();
                m2.0[var] -= 1;
                (m2, c.times(&c.from_q_like(&q(e as i64))))
            })
            .collect::<Vec<_>>();
        // differentiation can break the order, so re-sort
        Self::from_terms(&self.ring, terms)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.terms.first()?;
        let dinv = dc.inverse();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = m.div(dm)?;
            let qc = c.times(&dinv);
            rem = rem.sub_scaled(&qm, &qc, d);
            quot.push((qm, qc));
        }
        Some(Poly { ring: self.ring.clone(), terms: quot })
    }

    /// Coefficient-wise map into another field over the same ring.
    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (m.clone(), d))
            })
            .collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&C> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }
}

impl Polynomial {
    pub fn one_in(ring: &RingRef) -> Self {
        Self::constant(ring, Q::one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), Q::one())
    }

    pub fn from_i64(ring: &RingRef, c: i64) -> Self {
        Self::constant(ring, q(c))
    }

    /// Scales to integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = num_bigint::BigInt::one();
        let mut num = num_bigint::BigInt::zero();
        for (_, c) in &self.terms {
            den = num_integer::Integer::lcm(&den, c.denom());
            num = num_integer::Integer::gcd(&num, c.numer());
        }
        let mut s = Q::new(den, num);
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    pub fn eval_var(&self, var: usize, value: &Q) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m2 = m.clone();
                let e = m2.0[var];
                m2.0[var] = 0;
                (m2, c * num_traits::pow::Pow::pow(value, e))
            })
            .collect();
        Self::from_terms(&self.ring, terms)
    }
}

fn merge<C: Field>(ring: &Ring, a: &[(Monomial, C)], b: &[(Monomial, C)], negate_b: bool) -> Vec<(Monomial, C)> {
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0 .0, &b[j].0 .0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { b[j].1.negated() } else { b[j].1.clone() };
                out.push((b[j].0.clone(), c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { a[i].1.minus(&b[j].1) } else { a[i].1.plus(&b[j].1) };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { t.1.negated() } else { t.1.clone() };
        out.push((t.0.clone(), c));
    }
    out
}

impl<C: Field> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<C: Field + Eq> Eq for Poly<C> {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

/// Arithmetic requested by kind, with ring and exponent checks.
#[derive(Clone, Debug)]
pub enum Arith<'a> {
    Add(&'a Polynomial),
    Sub(&'a Polynomial),
    Mul(&'a Polynomial),
    ScalarMul(&'a Q),
    Power(i64),
}

pub fn poly_arith(a: &Polynomial, op: Arith<'_>) -> Result<Polynomial> {
    let check = |b: &Polynomial| {
        if same_ring(a.ring(), b.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    };
    Ok(match op {
        Arith::Add(b) => {
            check(b)?;
            a.add(b)
        }
        Arith::Sub(b) => {
            check(b)?;
            a.sub(b)
        }
        Arith::Mul(b) => {
            check(b)?;
            a.mul(b)
        }
        Arith::ScalarMul(c) => a.scale(c),
        Arith::Power(k) => {
            if k < 0 {
                return Err(Error::NegativePower);
            }
            if a.is_zero() {
                if k == 0 {
                    Polynomial::one_in(a.ring())
                } else {
                    a.clone()
                }
            } else {
                a.pow(k as u32)
            }
        }
    })
}

pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.var_name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Writes a rational-coefficient term; `first` controls the leading sign form.
pub(crate) fn fmt_q_term(
    f: &mut fmt::Formatter<'_>,
    c: &Q,
    first: bool,
    body: &mut dyn FnMut(&mut fmt::Formatter<'_>) -> fmt::Result,
    body_is_one: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if body_is_one {
        write!(f, "{a}")
    } else if One::is_one(&a) {
        body(f)
    } else {
        write!(f, "{a}*")?;
        body(f)
    }
}

impl<C: Field> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let ring = &self.ring;
            match c.as_q() {
                Some(cq) => {
                    fmt_q_term(f, &cq, k == 0, &mut |f| fmt_monomial(f, ring, m), m.is_one())?;
                }
                None => {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({c})")?;
                    if !m.is_one() {
                        write!(f, "*")?;
                        fmt_monomial(f, ring, m)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn ring() -> RingRef {
        Ring::grevlex(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        assert!(poly_arith(&x, Arith::Add(&x.neg())).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let a = parse_poly("y - x*z", &r).unwrap();
        let b = parse_poly("y + x*z", &r).unwrap();
        assert_eq!(a.mul(&b), parse_poly("y^2 - x^2*z^2", &r).unwrap());
    }

    #[test]
    fn binomial_square() {
        let r = ring();
        let a = parse_poly("y + z", &r).unwrap();
        assert_eq!(poly_arith(&a, Arith::Power(2)).unwrap(), parse_poly("y^2 + 2*y*z + z^2", &r).unwrap());
        assert_eq!(poly_arith(&a, Arith::Power(-1)).unwrap_err(), Error::NegativePower);
    }

    #[test]
    fn ring_mismatch_detected() {
        let r = ring();
        let s = Ring::grevlex(&["a"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let a = Polynomial::var(&s, 0);
        assert_eq!(poly_arith(&x, Arith::Mul(&a)).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let a = parse_poly("x^2*y - y*z^2", &r).unwrap();
        let d = parse_poly("x + z", &r).unwrap();
        assert_eq!(a.exact_div(&d).unwrap(), parse_poly("x*y - y*z", &r).unwrap());
        assert!(a.exact_div(&parse_poly("x + 1", &r).unwrap()).is_none());
    }

    #[test]
    fn primitive_part() {
        let r = ring();
        let a = parse_poly("-1/2*x + 3/4*y", &r).unwrap();
        assert_eq!(a.primitive(), parse_poly("2*x - 3*y", &r).unwrap());
    }
}
