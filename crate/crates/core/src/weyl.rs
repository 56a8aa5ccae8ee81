//! Differential operators with polynomial coefficients, differentiating only
//! in the variables outside a chosen basis set `S`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::field::Q;
use crate::poly::monomial::Monomial;
use crate::poly::order::MonomialOrder;
use crate::poly::parse::{eval, parse_expr, Algebra};
use crate::poly::polynomial::{same_ring, Polynomial};
use crate::poly::ring::RingRef;

/// `sum c_b * d^b`, coefficients on the left. Terms are kept merged and
/// sorted by decreasing `d`-monomial in grevlex.
#[derive(Clone, PartialEq)]
pub struct DiffOperator {
    ring: RingRef,
    basis_vars: Vec<usize>,
    terms: Vec<(Monomial, Polynomial)>,
}

pub type OperatorSet = Vec<DiffOperator>;

/// Which side a variable multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn dorder(n: usize) -> MonomialOrder {
    MonomialOrder::grevlex(n)
}

impl DiffOperator {
    /// Builds an operator from `(d-exponent, coefficient)` pairs.
    pub fn from_terms(ring: &RingRef, basis_vars: &[usize], terms: Vec<(Monomial, Polynomial)>) -> Result<Self> {
        let mut basis_vars = basis_vars.to_vec();
        basis_vars.sort();
        basis_vars.dedup();
        for (d, c) in &terms {
            if d.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch(d.nvars(), ring.nvars()));
            }
            if !same_ring(c.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if let Some(&v) = basis_vars.iter().find(|&&v| d.0[v] > 0) {
                return Err(Error::InvalidOperator(format!("derivative in basis variable {}", ring.var_name(v))));
            }
        }
        let ord = dorder(ring.nvars());
        let mut terms = terms;
        terms.sort_by(|a, b| ord.cmp(&b.0 .0, &a.0 .0));
        let mut merged: Vec<(Monomial, Polynomial)> = Vec::with_capacity(terms.len());
        for (d, c) in terms {
            match merged.last_mut() {
                Some((e, acc)) if *e == d => *acc = acc.add(&c),
                _ => merged.push((d, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Ok(DiffOperator { ring: ring.clone(), basis_vars, terms: merged })
    }

    pub fn zero(ring: &RingRef, basis_vars: &[usize]) -> Self {
        DiffOperator { ring: ring.clone(), basis_vars: basis_vars.to_vec(), terms: Vec::new() }
    }

    /// Multiplication by a polynomial.
    pub fn scalar(c: Polynomial, basis_vars: &[usize]) -> Self {
        let ring = c.ring().clone();
        let n = ring.nvars();
        Self::from_terms(&ring, basis_vars, vec![(Monomial::one(n), c)]).expect("no derivatives")
    }

    pub fn identity(ring: &RingRef, basis_vars: &[usize]) -> Self {
        Self::scalar(Polynomial::one_in(ring), basis_vars)
    }

    /// The partial derivative in `var`.
    pub fn partial(ring: &RingRef, basis_vars: &[usize], var: usize) -> Result<Self> {
        Self::from_terms(ring, basis_vars, vec![(Monomial::var(ring.nvars(), var), Polynomial::one_in(ring))])
    }

    /// Parses text such as `x*dy + dz`; `d<var>` denotes a partial derivative.
    /// Products are read in normal order: coefficients move left of the
    /// derivatives without commutator terms.
    pub fn parse(text: &str, ring: &RingRef, basis_vars: &[usize]) -> Result<Self> {
        let e = parse_expr(text)?;
        eval(&e, &Self::zero(ring, basis_vars))
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn basis_vars(&self) -> &[usize] {
        &self.basis_vars
    }

    pub fn terms(&self) -> &[(Monomial, Polynomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal total degree in the derivatives.
    pub fn order(&self) -> Result<u32> {
        self.terms.iter().map(|(d, _)| d.degree()).max().ok_or(Error::ZeroOperator)
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (d, c) in &self.terms {
            let mut g = f.clone();
            for (v, &k) in d.0.iter().enumerate() {
                for _ in 0..k {
                    g = g.derivative(v);
                }
            }
            if !g.is_zero() {
                acc = acc.add(&c.mul(&g));
            }
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let terms = self.terms.iter().chain(&other.terms).cloned().collect();
        Self::from_terms(&self.ring, &self.basis_vars, terms)
    }

    /// Left multiplication by a polynomial.
    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        let terms = self.terms.iter().map(|(d, c)| (d.clone(), p.mul(c))).collect();
        Self::from_terms(&self.ring, &self.basis_vars, terms).expect("same shape")
    }

    pub fn scale(&self, c: &Q) -> Self {
        let terms = self.terms.iter().map(|(d, p)| (d.clone(), p.scale(c))).collect();
        Self::from_terms(&self.ring, &self.basis_vars, terms).expect("same shape")
    }

    /// `v * delta` or `delta * v`, the latter rewritten with
    /// `d_v v = v d_v + 1`.
    pub fn multiply_by_variable(&self, v: usize, side: Side) -> Self {
        let x = Polynomial::var(&self.ring, v);
        match side {
            Side::Left => self.mul_poly(&x),
            Side::Right => {
                let mut terms = Vec::new();
                for (d, c) in &self.terms {
                    terms.push((d.clone(), c.mul(&x)));
                    let k = d.0[v];
                    if k > 0 {
                        let mut e = d.clone();
                        e.0[v] -= 1;
                        terms.push((e, c.scale(&Q::from_integer(BigInt::from(k)))));
                    }
                }
                Self::from_terms(&self.ring, &self.basis_vars, terms).expect("same shape")
            }
        }
    }

    /// Removes the rational content and makes the leading coefficient positive.
    pub fn normalized(&self) -> Self {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            for (_, a) in c.terms() {
                num = num_integer::Integer::gcd(&num, a.numer());
                den = num_integer::Integer::lcm(&den, a.denom());
            }
        }
        if num.is_zero() {
            return self.clone();
        }
        let mut s = Q::new(den, num);
        if self.terms[0].1.lc().is_some_and(|c| c.is_negative()) {
            s = -s;
        }
        self.scale(&s)
    }

    fn fmt_partials(&self, d: &Monomial) -> String {
        let mut parts = Vec::new();
        for (v, &k) in d.0.iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(format!("d{}", self.ring.var_name(v))),
                _ => parts.push(format!("d{}^{k}", self.ring.var_name(v))),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.terms {
            let partials = self.fmt_partials(d);
            for (m, a) in c.terms() {
                let mono = Polynomial::monomial(&self.ring, m.clone(), Q::one()).to_string();
                let mut factors = Vec::new();
                let abs = a.abs();
                if !abs.is_one() || (m.is_one() && partials.is_empty()) {
                    factors.push(abs.to_string());
                }
                if !m.is_one() {
                    factors.push(mono);
                }
                if !partials.is_empty() {
                    factors.push(partials.clone());
                }
                let body = factors.join("*");
                match (first, a.is_negative()) {
                    (true, true) => write!(f, "-{body}")?,
                    (true, false) => write!(f, "{body}")?,
                    (false, true) => write!(f, " - {body}")?,
                    (false, false) => write!(f, " + {body}")?,
                }
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOperator({self})")
    }
}

impl Algebra for DiffOperator {
    fn number(&self, n: &BigInt) -> Self {
        Self::scalar(Polynomial::constant(&self.ring, Q::from_integer(n.clone())), &self.basis_vars)
    }

    fn ident(&self, name: &str, _pos: usize) -> Result<Self> {
        if let Some(i) = self.ring.var_index(name) {
            return Ok(Self::scalar(Polynomial::var(&self.ring, i), &self.basis_vars));
        }
        let v = name
            .strip_prefix('d')
            .and_then(|rest| self.ring.var_index(rest))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Self::partial(&self.ring, &self.basis_vars, v)
    }

    fn add(&self, o: &Self) -> Self {
        DiffOperator::add(self, o).expect("same ring")
    }

    fn sub(&self, o: &Self) -> Self {
        DiffOperator::add(self, &o.scale(&-Q::one())).expect("same ring")
    }

    fn mul(&self, o: &Self) -> Self {
        let mut terms = Vec::new();
        for (d, c) in &self.terms {
            for (e, g) in &o.terms {
                terms.push((d.mul(e), c.mul(g)));
            }
        }
        Self::from_terms(&self.ring, &self.basis_vars, terms).expect("same shape")
    }

    fn div(&self, o: &Self, pos: usize) -> Result<Self> {
        match o.terms.as_slice() {
            [] => Err(Error::DivisionByZero),
            [(d, c)] if d.is_one() && c.is_constant() => Ok(self.scale(&c.constant_value().expect("constant").recip())),
            _ => Err(Error::Parse { pos, msg: "division by a non-constant".into() }),
        }
    }

    fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    fn one(&self) -> Self {
        Self::identity(&self.ring, &self.basis_vars)
    }
}

/// Compares `d`-monomials in the graded order used for printing and for the
/// columns of dual-space matrices.
pub fn cmp_partials(a: &Monomial, b: &Monomial) -> Ordering {
    dorder(a.nvars()).cmp(&a.0, &b.0)
}
