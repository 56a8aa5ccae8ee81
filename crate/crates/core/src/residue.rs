//! The residue field `k(p) = QQ(S)[deps]/p` of a prime, with elements stored
//! as coordinates on the standard monomials, and linear algebra over it.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{from_fraction_field, gb_over_fraction_field, to_fraction_field, FractionFieldBasis};
use crate::ideal::Ideal;
use crate::poly::field::{Field, Q};
use crate::poly::gcd::{content_in, poly_gcd};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::{Poly, Polynomial};
use crate::poly::ratfunc::RatFunc;
use crate::poly::ring::RingRef;

/// Residue field of a prime over a maximal independent set `S`.
#[derive(Clone, Debug)]
pub struct ResidueFieldContext {
    prime: Ideal,
    ff: FractionFieldBasis,
    std_monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

/// An element of the residue field: coordinates over `QQ(S)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueElement {
    coords: Vec<RatFunc>,
}

impl ResidueElement {
    pub fn coords(&self) -> &[RatFunc] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Field::is_zero)
    }

    fn size(&self) -> usize {
        self.coords.iter().map(Field::size_hint).sum()
    }
}

impl ResidueFieldContext {
    /// Builds the context; `s` must be a maximal independent set modulo `p`.
    pub fn new(prime: &Ideal, s: &[usize]) -> Result<Self> {
        let mut s = s.to_vec();
        s.sort();
        let ff = gb_over_fraction_field(prime.gens(), prime.ring(), &s)?;
        if ff.basis.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let lms: Vec<Monomial> = ff.basis.leading_monomials();
        let k = ff.dep_vars.len();
        for j in 0..k {
            if !lms.iter().any(|m| m.0[j] > 0 && m.0.iter().enumerate().all(|(i, &e)| i == j || e == 0)) {
                return Err(Error::NotIndependent("the prime is not zero-dimensional over the basis".into()));
            }
        }
        let mut std_monomials = Vec::new();
        let mut stack = vec![Monomial::one(k)];
        let mut seen = std::collections::HashSet::new();
        while let Some(a) = stack.pop() {
            if !seen.insert(a.clone()) || lms.iter().any(|m| m.divides(&a)) {
                continue;
            }
            for j in 0..k {
                let mut b = a.clone();
                b.0[j] += 1;
                stack.push(b);
            }
            std_monomials.push(a);
        }
        let order = ff.dep_ring.order().clone();
        std_monomials.sort_by(|a, b| order.cmp(&a.0, &b.0));
        let index = std_monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(ResidueFieldContext { prime: prime.clone(), ff, std_monomials, index })
    }

    /// Context over the lexicographically smallest maximal independent set.
    pub fn for_prime(prime: &Ideal) -> Result<Self> {
        let s = prime.independent_set()?;
        Self::new(prime, &s)
    }

    pub fn prime(&self) -> &Ideal {
        &self.prime
    }

    pub fn ring(&self) -> &RingRef {
        self.prime.ring()
    }

    pub fn basis_vars(&self) -> &[usize] {
        &self.ff.s_vars
    }

    pub fn dep_vars(&self) -> &[usize] {
        &self.ff.dep_vars
    }

    pub fn std_monomials(&self) -> &[Monomial] {
        &self.std_monomials
    }

    /// Degree `D` of the residue field over `QQ(S)`.
    pub fn degree(&self) -> usize {
        self.std_monomials.len()
    }

    pub fn s_ring(&self) -> &RingRef {
        &self.ff.s_ring
    }

    fn rf(&self, c: Q) -> RatFunc {
        RatFunc::from_q(&self.ff.s_ring, c)
    }

    pub fn zero(&self) -> ResidueElement {
        ResidueElement { coords: vec![self.rf(Q::zero()); self.degree()] }
    }

    pub fn one(&self) -> ResidueElement {
        self.constant(RatFunc::from_q(&self.ff.s_ring, Q::one()))
    }

    /// Embeds an element of `QQ(S)`.
    pub fn constant(&self, c: RatFunc) -> ResidueElement {
        let mut e = self.zero();
        e.coords[0] = c;
        e
    }

    pub fn from_q(&self, c: Q) -> ResidueElement {
        self.constant(self.rf(c))
    }

    fn to_ff(&self, f: &Polynomial) -> Poly<RatFunc> {
        to_fraction_field(f, &self.ff.dep_vars, &self.ff.s_vars, &self.ff.dep_ring, &self.ff.s_ring)
    }

    fn from_normal_form(&self, nf: &Poly<RatFunc>) -> ResidueElement {
        let mut e = self.zero();
        for (m, c) in nf.terms() {
            e.coords[self.index[m]] = c.clone();
        }
        e
    }

    /// Image of a polynomial of the ambient ring.
    pub fn reduce(&self, f: &Polynomial) -> ResidueElement {
        let nf = self.ff.basis.normal_form(&self.to_ff(f)).expect("same ring");
        self.from_normal_form(&nf)
    }

    /// Representative over `QQ(S)` in the dependent variables.
    pub fn lift(&self, a: &ResidueElement) -> Poly<RatFunc> {
        let terms = self
            .std_monomials
            .iter()
            .zip(&a.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Poly::from_terms(&self.ff.dep_ring, terms)
    }

    /// Representative `num / den` with `num` in the ambient ring and `den`
    /// in `K[S]` (also in the ambient ring).
    pub fn lift_polynomial(&self, a: &ResidueElement) -> (Polynomial, Polynomial) {
        from_fraction_field(&self.lift(a), self.ring(), &self.ff.dep_vars, &self.ff.s_vars)
    }

    pub fn add(&self, a: &ResidueElement, b: &ResidueElement) -> ResidueElement {
        ResidueElement { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x.plus(y)).collect() }
    }

    pub fn sub(&self, a: &ResidueElement, b: &ResidueElement) -> ResidueElement {
        ResidueElement { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x.minus(y)).collect() }
    }

    pub fn neg(&self, a: &ResidueElement) -> ResidueElement {
        ResidueElement { coords: a.coords.iter().map(Field::negated).collect() }
    }

    /// Multiplication by an element of `QQ(S)`.
    pub fn scale(&self, a: &ResidueElement, c: &RatFunc) -> ResidueElement {
        ResidueElement { coords: a.coords.iter().map(|x| if x.is_zero() { x.clone() } else { x.times(c) }).collect() }
    }

    pub fn mul(&self, a: &ResidueElement, b: &ResidueElement) -> ResidueElement {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        if self.degree() == 1 {
            return ResidueElement { coords: vec![a.coords[0].times(&b.coords[0])] };
        }
        if let Some(c) = self.as_constant(a) {
            return self.scale(b, &c);
        }
        if let Some(c) = self.as_constant(b) {
            return self.scale(a, &c);
        }
        let nf = self.ff.basis.normal_form(&self.lift(a).mul(&self.lift(b))).expect("same ring");
        self.from_normal_form(&nf)
    }

    fn as_constant(&self, a: &ResidueElement) -> Option<RatFunc> {
        a.coords[1..].iter().all(Field::is_zero).then(|| a.coords[0].clone())
    }

    /// Inverse, by solving the multiplication-by-`a` system over `QQ(S)`.
    pub fn invert(&self, a: &ResidueElement) -> Result<ResidueElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = self.as_constant(a) {
            return Ok(self.constant(c.inverse()));
        }
        let d = self.degree();
        // columns: a * m_j; solve sum x_j (a m_j) = 1
        let la = self.lift(a);
        let cols: Vec<ResidueElement> = self
            .std_monomials
            .iter()
            .map(|m| {
                let mj = Poly::monomial(&self.ff.dep_ring, m.clone(), self.rf(Q::one()));
                self.from_normal_form(&self.ff.basis.normal_form(&la.mul(&mj)).expect("same ring"))
            })
            .collect();
        // augmented rows: row i = (cols[0][i], ..., cols[d-1][i] | e_1[i])
        let mut rows: Vec<Vec<RatFunc>> = (0..d)
            .map(|i| {
                let mut r: Vec<RatFunc> = cols.iter().map(|c| c.coords[i].clone()).collect();
                r.push(self.rf(if i == 0 { Q::one() } else { Q::zero() }));
                r
            })
            .collect();
        for col in 0..d {
            let piv = (col..d)
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| rows[r][col].size_hint())
                .ok_or_else(|| Error::Integrity("residue ring has zero divisors; the ideal is not prime".into()))?;
            rows.swap(col, piv);
            let inv = rows[col][col].inverse();
            rows[col] = rows[col].iter().map(|x| x.times(&inv)).collect();
            for r in 0..d {
                if r != col && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    let pivot_row = rows[col].clone();
                    for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                        if !y.is_zero() {
                            *x = x.minus(&f.times(y));
                        }
                    }
                }
            }
        }
        Ok(ResidueElement { coords: rows.into_iter().map(|mut r| r.pop().expect("augmented").reduced()).collect() })
    }

    pub fn div(&self, a: &ResidueElement, b: &ResidueElement) -> Result<ResidueElement> {
        Ok(self.mul(a, &self.invert(b)?))
    }

    /// Reduced row echelon form: leftmost pivots, pivot rows chosen by
    /// smallest size, pivots normalized to one.
    pub fn row_reduce(&self, matrix: &[Vec<ResidueElement>], ncols: usize) -> Result<RowReduction> {
        let mut rows: Vec<Vec<ResidueElement>> =
            matrix.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::LengthMismatch(r.len(), ncols));
            }
        }
        let mut pivots = Vec::new();
        let mut done = 0;
        for col in 0..ncols {
            if done == rows.len() {
                break;
            }
            let Some(piv) = (done..rows.len()).filter(|&r| !rows[r][col].is_zero()).min_by_key(|&r| rows[r][col].size())
            else {
                continue;
            };
            rows.swap(done, piv);
            let inv = self.invert(&rows[done][col])?;
            rows[done] = rows[done].iter().map(|x| self.mul(x, &inv)).collect();
            let pivot_row = rows[done].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == done || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = self.sub(x, &self.mul(&f, y));
                    }
                }
            }
            pivots.push(col);
            done += 1;
        }
        rows.truncate(done);
        for row in &mut rows {
            for x in row.iter_mut() {
                x.coords = x.coords.iter().map(RatFunc::reduced).collect();
            }
        }
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        let kernel = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.zero(); ncols];
                v[f] = self.one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    v[p] = self.neg(&row[f]);
                }
                v
            })
            .collect();
        Ok(RowReduction { rank: pivots.len(), rows, pivots, kernel })
    }

    /// Clears denominators of a vector: returns polynomial representatives
    /// of `d * a_i` in the ambient ring and the multiplier `d` in `K[S]`,
    /// with the common `K[S]`-content and rational content removed.
    pub fn clear_denominators(&self, v: &[ResidueElement]) -> (Vec<Polynomial>, Polynomial) {
        let ring = self.ring();
        let lifted: Vec<(Polynomial, Polynomial)> = v.iter().map(|a| self.lift_polynomial(a)).collect();
        let mut den = Polynomial::one_in(ring);
        for (_, d) in &lifted {
            if !d.is_constant() {
                let g = poly_gcd(&den, d);
                den = den.mul(&d.exact_div(&g).expect("gcd divides"));
            }
        }
        let mut out: Vec<Polynomial> =
            lifted.iter().map(|(p, d)| p.mul(&den.exact_div(d).expect("common denominator"))).collect();
        let nonzero: Vec<&Polynomial> = out.iter().filter(|p| !p.is_zero()).collect();
        if let Some(g) = crate::poly::gcd::poly_gcd_all(nonzero.iter().copied()) {
            let mut c = g;
            for &v in self.dep_vars() {
                if c.is_constant() {
                    break;
                }
                c = content_in(&c, v);
            }
            if !c.is_constant() {
                out = out.iter().map(|p| p.exact_div(&c).expect("content divides")).collect();
                den = den.exact_div(&c).unwrap_or(den);
            }
        }
        // rational content
        let mut num_gcd = num_bigint::BigInt::zero();
        let mut den_lcm = num_bigint::BigInt::one();
        for p in &out {
            for (_, c) in p.terms() {
                num_gcd = num_integer::Integer::gcd(&num_gcd, c.numer());
                den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
            }
        }
        if !num_gcd.is_zero() {
            let s = Q::new(den_lcm, num_gcd);
            out = out.iter().map(|p| p.scale(&s)).collect();
            den = den.scale(&s);
        }
        (out, den)
    }
}

/// Reduced row echelon form over any field: rows and pivot columns.
pub fn field_rref<F: Field>(matrix: &[Vec<F>], ncols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut rows: Vec<Vec<F>> = matrix.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivots = Vec::new();
    let mut done = 0;
    for col in 0..ncols {
        if done == rows.len() {
            break;
        }
        let Some(piv) = (done..rows.len()).filter(|&r| !rows[r][col].is_zero()).min_by_key(|&r| rows[r][col].size_hint())
        else {
            continue;
        };
        rows.swap(done, piv);
        let inv = rows[done][col].inverse();
        rows[done] = rows[done].iter().map(|x| if x.is_zero() { x.clone() } else { x.times(&inv) }).collect();
        let pivot_row = rows[done].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == done || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        pivots.push(col);
        done += 1;
    }
    rows.truncate(done);
    (rows, pivots)
}

/// Kernel of a matrix over any field, one vector per free column.
pub fn field_kernel<F: Field>(matrix: &[Vec<F>], ncols: usize, one: &F) -> Vec<Vec<F>> {
    let (rows, pivots) = field_rref(matrix, ncols);
    let zero = one.zero_like();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![zero.clone(); ncols];
            v[f] = one.clone();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = row[f].negated();
            }
            v
        })
        .collect()
}

/// Output of [`ResidueFieldContext::row_reduce`].
#[derive(Clone, Debug)]
pub struct RowReduction {
    pub rank: usize,
    /// Nonzero rows of the reduced echelon form.
    pub rows: Vec<Vec<ResidueElement>>,
    pub pivots: Vec<usize>,
    /// One vector per free column, with a one in that column.
    pub kernel: Vec<Vec<ResidueElement>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::poly::ring::Ring;

    fn ctx(vars: &[&str], prime: &str, s: &[usize]) -> ResidueFieldContext {
        let r = Ring::grevlex(vars).unwrap();
        ResidueFieldContext::new(&Ideal::parse(prime, &r).unwrap(), s).unwrap()
    }

    fn el(c: &ResidueFieldContext, f: &str) -> ResidueElement {
        c.reduce(&parse_poly(f, c.ring()).unwrap())
    }

    #[test]
    fn degrees() {
        assert_eq!(ctx(&["x", "y", "z"], "y; z", &[0]).degree(), 1);
        assert_eq!(ctx(&["x", "y"], "y^2 - x", &[0]).degree(), 2);
        let c = ctx(&["x", "y", "z"], "x; y^2 - y*z + z^2", &[2]);
        assert_eq!(c.degree(), 2);
        assert_eq!(c.std_monomials().len(), 2);
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        assert!(ResidueFieldContext::new(&Ideal::parse("y^2 - x", &r).unwrap(), &[0, 1]).is_err());
    }

    #[test]
    fn reduction() {
        let c = ctx(&["x", "y", "z"], "y; z", &[0]);
        assert!(el(&c, "y - x*z").is_zero());
        let c = ctx(&["x", "y"], "y^2 - x", &[0]);
        let e = el(&c, "y^2");
        assert_eq!(e.coords()[0].to_string(), "x");
        assert!(e.coords()[1].is_zero());
        assert_eq!(el(&c, "1"), c.one());
    }

    #[test]
    fn inverses() {
        let c = ctx(&["x", "y"], "y^2 - x", &[0]);
        let y = el(&c, "y");
        let inv = c.invert(&y).unwrap();
        assert_eq!(inv, c.div(&el(&c, "y"), &el(&c, "x")).unwrap());
        assert_eq!(c.mul(&y, &inv), c.one());
        let c = ctx(&["x", "y", "z"], "x; y^2 - y*z + z^2", &[2]);
        let inv = c.invert(&el(&c, "y")).unwrap();
        let expect = c.div(&el(&c, "z - y"), &el(&c, "z^2")).unwrap();
        assert_eq!(inv, expect);
        assert!(c.invert(&c.zero()).is_err());
    }

    #[test]
    fn row_reduction_and_kernel() {
        let c = ctx(&["x", "y"], "y^2 - x", &[0]);
        let m = vec![vec![el(&c, "y"), el(&c, "x")]];
        let rr = c.row_reduce(&m, 2).unwrap();
        assert_eq!(rr.rank, 1);
        assert_eq!(rr.kernel.len(), 1);
        let k = &rr.kernel[0];
        let dot = c.add(&c.mul(&m[0][0], &k[0]), &c.mul(&m[0][1], &k[1]));
        assert!(dot.is_zero());
        let id = vec![vec![c.one(), c.zero()], vec![c.zero(), c.one()]];
        let rr = c.row_reduce(&id, 2).unwrap();
        assert_eq!((rr.rank, rr.kernel.len()), (2, 0));
        let rr = c.row_reduce(&[vec![c.zero(), c.zero()]], 2).unwrap();
        assert_eq!((rr.rank, rr.kernel.len()), (0, 2));
    }

    #[test]
    fn denominators_cleared() {
        let c = ctx(&["x", "y", "z"], "y; z", &[0]);
        let v = vec![c.div(&c.one(), &el(&c, "x")).unwrap(), el(&c, "2")];
        let (polys, den) = c.clear_denominators(&v);
        assert_eq!(polys[0].to_string(), "1");
        assert_eq!(polys[1].to_string(), "2*x");
        assert_eq!(den.to_string(), "x");
    }
}
