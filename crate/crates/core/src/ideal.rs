//! Ideals with cached Gröbner bases and the usual ideal-theoretic operations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_in, eliminate, GroebnerBasis};
use crate::poly::monomial::Monomial;
use crate::poly::order::{MonomialOrder, OrderKind};
use crate::poly::parse::parse_poly_list;
use crate::poly::polynomial::{same_ring, Polynomial};
use crate::poly::ring::{Ring, RingRef};

type Cache = Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>;

/// An ideal given by generators, with reduced bases cached per order.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    cache: Cache,
}

/// Result of a saturation: the ideal and the number of colon steps needed.
#[derive(Clone, Debug)]
pub struct SaturationResult {
    pub ideal: Ideal,
    pub exponent: usize,
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.with_ring(ring)).collect();
        Ideal { ring: ring.clone(), gens, cache: Arc::default() }
    }

    pub fn parse(text: &str, ring: &RingRef) -> Result<Self> {
        Ok(Self::new(ring, parse_poly_list(text, ring)?))
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::new(ring, vec![Polynomial::one_in(ring)])
    }

    /// Ideal generated by a subset of the variables.
    pub fn of_vars(ring: &RingRef, vars: &[usize]) -> Self {
        Self::new(ring, vars.iter().map(|&v| Polynomial::var(ring, v)).collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced basis in the ring's own order.
    pub fn gb(&self) -> Arc<GroebnerBasis> {
        self.gb_in(self.ring.order())
    }

    /// Reduced basis in another order; its polynomials live in a copy of the
    /// ring carrying that order.
    pub fn gb_in(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(order) {
            return gb.clone();
        }
        let target = if self.ring.order() == order { self.ring.clone() } else { self.ring.with_order(order.clone()) };
        let moved: Vec<Polynomial> = self.gens.iter().map(|g| g.with_ring(&target)).collect();
        let gb = Arc::new(buchberger_in(&target, &moved));
        self.cache.lock().expect("cache lock").entry(order.clone()).or_insert(gb).clone()
    }

    /// Generators of the reduced basis in the ring's order.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.gb().gens().to_vec()
    }

    /// The ideal re-generated by its reduced basis (shares nothing mutable).
    pub fn canonical(&self) -> Ideal {
        let gb = self.gb();
        let ideal = Ideal::new(&self.ring, gb.gens().to_vec());
        ideal.cache.lock().expect("cache lock").insert(self.ring.order().clone(), gb);
        ideal
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.gb().contains(&f.with_ring(&self.ring))
    }

    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.contains(f))
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.basis() == other.basis().iter().map(|g| g.with_ring(&self.ring)).collect::<Vec<_>>()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub fn add(&self, other: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn add_gens(&self, extra: &[Polynomial]) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn mul(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        Ideal::new(&self.ring, g)
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = Ideal::new(&self.ring, acc.mul(self).basis());
        }
        acc
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1−t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        // Comaximal ideals intersect in their product.
        if self.add(other).is_unit() {
            return Ok(self.mul(other));
        }
        let (ext, embed) = extended_ring(&self.ring);
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one_in(&ext).sub(&t);
        let mut gens: Vec<Polynomial> = self.basis().iter().map(|g| t.mul(&g.remap(&ext, &embed))).collect();
        gens.extend(other.basis().iter().map(|g| one_minus_t.mul(&g.remap(&ext, &embed))));
        Ok(Ideal::new(&self.ring, contract_extended(&ext, &gens, &self.ring)))
    }

    pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
        let mut it = ideals.iter();
        let first = it.next().ok_or_else(|| Error::InvalidDecomposition("empty intersection".into()))?;
        let mut acc = first.clone();
        for i in it {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// `(I : f)` as `(1/f)·(I ∩ ⟨f⟩)`.
    pub fn colon_poly(&self, f: &Polynomial) -> Ideal {
        if f.is_zero() {
            return Ideal::unit(&self.ring);
        }
        if f.is_constant() {
            return self.clone();
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()]);
        let inter = self.intersect(&principal).expect("same ring");
        let gens = inter.gens.iter().map(|g| g.exact_div(f).expect("f divides the intersection")).collect();
        Ideal::new(&self.ring, gens)
    }

    /// `(I : J) = ∩_f (I : f)` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let gens = other.basis();
        if gens.is_empty() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut acc: Option<Ideal> = None;
        for f in &gens {
            let c = self.colon_poly(f);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.expect("nonempty"))
    }

    /// `(I : J^∞)` by iterated colons, reporting the smallest `k` with
    /// `I : J^k = I : J^(k+1)`.
    pub fn saturate(&self, other: &Ideal) -> Result<SaturationResult> {
        self.check_ring(other)?;
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let next = cur.colon(other)?;
            if next.equals(&cur) {
                return Ok(SaturationResult { ideal: cur.canonical(), exponent: k });
            }
            cur = next;
            k += 1;
        }
    }

    /// `(I : f^∞)` through the Rabinowitsch trick.
    pub fn saturate_poly(&self, f: &Polynomial) -> Ideal {
        if f.is_constant() {
            return self.clone();
        }
        if f.is_zero() {
            return Ideal::unit(&self.ring);
        }
        let (ext, embed) = extended_ring(&self.ring);
        let t = Polynomial::var(&ext, 0);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.remap(&ext, &embed)).collect();
        gens.push(Polynomial::one_in(&ext).sub(&t.mul(&f.remap(&ext, &embed))));
        Ideal::new(&self.ring, contract_extended(&ext, &gens, &self.ring))
    }

    /// Smallest `k` with `(I : f^k) = (I : f^∞)`, along with the saturation.
    pub fn saturate_poly_exponent(&self, f: &Polynomial) -> (Ideal, usize) {
        let sat = self.saturate_poly(f);
        let mut k = 0;
        let mut power = Polynomial::one_in(&self.ring);
        let sat_gens = sat.basis();
        loop {
            if sat_gens.iter().all(|g| self.contains(&g.mul(&power))) {
                return (sat, k);
            }
            power = power.mul(f);
            k += 1;
        }
    }

    /// Krull dimension and all maximum-size independent variable sets of the
    /// leading-term ideal (grevlex), each sorted, the list in lex order.
    pub fn dimension(&self) -> Result<(usize, Vec<Vec<usize>>)> {
        let order = MonomialOrder::grevlex(self.ring.nvars());
        let gb = self.gb_in(&order);
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(independent_sets(&gb.leading_monomials(), self.ring.nvars()))
    }

    /// The lexicographically smallest maximal independent set.
    pub fn independent_set(&self) -> Result<Vec<usize>> {
        let (_, w) = self.dimension()?;
        Ok(w.into_iter().next().expect("at least one witness"))
    }

    /// Numerator of the Hilbert series of `R/I` (over `(1-t)^n`) and the degree.
    pub fn hilbert_degree(&self) -> Result<(Vec<BigInt>, BigInt)> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let num = self.hilbert_numerator();
        let deg = degree_from_numerator(&num);
        Ok((num, deg))
    }

    pub(crate) fn hilbert_numerator(&self) -> Vec<BigInt> {
        let order = MonomialOrder::grevlex(self.ring.nvars());
        let gb = self.gb_in(&order);
        hilbert_numerator(&gb.leading_monomials())
    }

    /// Degree of the graded module `Isup / Isub`.
    pub fn module_degree_quotient(isub: &Ideal, isup: &Ideal) -> Result<BigInt> {
        isub.check_ring(isup)?;
        if !isub.is_homogeneous() || !isup.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if !isub.is_subset_of(isup) {
            return Err(Error::NotContained("the first ideal is not contained in the second".into()));
        }
        let a = isub.hilbert_numerator();
        let b = isup.hilbert_numerator();
        let n = a.len().max(b.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
            .collect();
        Ok(degree_from_numerator(&diff))
    }
}

/// Ring with a fresh first variable `t` in its own leading block.
fn extended_ring(ring: &RingRef) -> (RingRef, Vec<usize>) {
    let n = ring.nvars();
    let mut vars = vec![ring.fresh_name("t")];
    vars.extend(ring.vars().iter().cloned());
    let order = MonomialOrder::elimination(OrderKind::GrevLex, n + 1, &[0]);
    let ext = Ring::new(&vars, order).expect("fresh variable");
    (ext, (1..=n).collect())
}

/// Eliminates the first variable of `ext` and maps back into `ring`.
fn contract_extended(ext: &RingRef, gens: &[Polynomial], ring: &RingRef) -> Vec<Polynomial> {
    eliminate(gens, ext, &[0])
        .iter()
        .map(|g| {
            let terms = g.terms().iter().map(|(m, c)| (Monomial(m.0[1..].to_vec()), c.clone())).collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect()
}

/// Dimension and all independent sets of maximum size for a monomial ideal.
pub fn independent_sets(lms: &[Monomial], n: usize) -> (usize, Vec<Vec<usize>>) {
    let supports: Vec<u64> =
        lms.iter().map(|m| m.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |a, (i, _)| a | 1 << i)).collect();
    let mut best = 0usize;
    let mut sets: Vec<u64> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if supports.iter().any(|&s| s & !mask == 0) {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size > best {
            best = size;
            sets.clear();
        }
        if size == best {
            sets.push(mask);
        }
    }
    let mut out: Vec<Vec<usize>> = sets.into_iter().map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect();
    out.sort();
    (best, out)
}

/// All independent sets that are maximal under inclusion.
pub fn maximal_independent_sets(lms: &[Monomial], n: usize) -> Vec<Vec<usize>> {
    let supports: Vec<u64> =
        lms.iter().map(|m| m.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |a, (i, _)| a | 1 << i)).collect();
    let indep = |mask: u64| !supports.iter().any(|&s| s & !mask == 0);
    let mut out: Vec<Vec<usize>> = (0u64..(1u64 << n))
        .filter(|&m| indep(m) && (0..n).all(|i| m >> i & 1 == 1 || !indep(m | 1 << i)))
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Hilbert series numerator of `K[x]/⟨lms⟩` by the colon recursion
/// `N(I + ⟨m⟩) = N(I) − t^deg(m) N(I : m)`.
pub fn hilbert_numerator(lms: &[Monomial]) -> Vec<BigInt> {
    let mut gens = minimalize(lms.to_vec());
    gens.sort_by_key(|m| std::cmp::Reverse(m.degree()));
    let mut num = hn_rec(&gens);
    while num.len() > 1 && num.last().is_some_and(Zero::is_zero) {
        num.pop();
    }
    num
}

fn minimalize(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by_key(Monomial::degree);
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn hn_rec(gens: &[Monomial]) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().all(|m| m.support().len() <= 1) {
        // product of (1 - t^d) over pure powers
        let mut acc = vec![BigInt::one()];
        for m in gens {
            acc = poly_mul(&acc, &one_minus_t_pow(m.degree() as usize));
        }
        return acc;
    }
    let last = gens.len() - 1;
    let m = &gens[last];
    let rest = &gens[..last];
    let a = hn_rec(rest);
    let quot: Vec<Monomial> = minimalize(
        rest.iter()
            .map(|g| {
                let l = g.lcm(m);
                l.div(m).expect("lcm divisible")
            })
            .collect(),
    );
    let b = hn_rec(&quot);
    let shift = m.degree() as usize;
    let n = a.len().max(b.len() + shift);
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = if i >= shift { b.get(i - shift).cloned().unwrap_or_default() } else { BigInt::zero() };
            x - y
        })
        .collect()
}

fn one_minus_t_pow(d: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d + 1];
    v[0] = BigInt::one();
    v[d] -= BigInt::one();
    v
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Removes all factors `(1 - t)` and evaluates the rest at `t = 1`.
pub fn degree_from_numerator(num: &[BigInt]) -> BigInt {
    let mut p: Vec<BigInt> = num.to_vec();
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.iter().all(Zero::is_zero) {
        return BigInt::zero();
    }
    loop {
        let at_one: BigInt = p.iter().sum();
        if !at_one.is_zero() {
            return at_one;
        }
        // synthetic division by (1 - t): p = (1 - t) q, q_i = sum_{j<=i} p_j
        let mut q = Vec::with_capacity(p.len() - 1);
        let mut acc = BigInt::zero();
        for c in &p[..p.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        p = q;
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "ideal({})", gens.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn r3() -> RingRef {
        Ring::grevlex(&["x", "y", "z"]).unwrap()
    }

    fn id(s: &str, r: &RingRef) -> Ideal {
        Ideal::parse(s, r).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let r = r3();
        assert!(id("x", &r).intersect(&id("y", &r)).unwrap().equals(&id("x*y", &r)));
        let i = id("x^2*y; y^2", &r);
        assert!(i.intersect(&Ideal::unit(&r)).unwrap().equals(&i));
    }

    #[test]
    fn colon_examples() {
        let r = r3();
        assert!(id("x*y", &r).colon(&id("x", &r)).unwrap().equals(&id("y", &r)));
        assert!(id("x^2", &r).colon(&id("x", &r)).unwrap().equals(&id("x", &r)));
        let i = id("x^2 + y; z^3", &r);
        assert!(i.colon(&Ideal::unit(&r)).unwrap().equals(&i));
    }

    #[test]
    fn saturation_examples() {
        let r = r3();
        let s = id("x^2", &r).saturate(&id("x", &r)).unwrap();
        assert!(s.ideal.is_unit());
        assert_eq!(s.exponent, 2);
        let s = id("x^2*y", &r).saturate(&id("x", &r)).unwrap();
        assert!(s.ideal.equals(&id("y", &r)));
        assert_eq!(s.exponent, 2);
        let (sat, k) = id("x^2*y", &r).saturate_poly_exponent(&parse_poly("x", &r).unwrap());
        assert!(sat.equals(&id("y", &r)));
        assert_eq!(k, 2);
    }

    #[test]
    fn membership_examples() {
        let r = r3();
        let i = id("x*y*z^2; x*y^2*z; x^2*y*z; y^2 - x*z", &r);
        assert!(i.member(&parse_poly("x*y*z^2", &r).unwrap()).unwrap());
        assert!(i.member(&Polynomial::zero(&r)).unwrap());
        assert!(!i.member(&parse_poly("x*z", &r).unwrap()).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let r = r3();
        assert_eq!(id("y; z", &r).dimension().unwrap(), (1, vec![vec![0]]));
        assert_eq!(id("x; y; z", &r).dimension().unwrap(), (0, vec![vec![]]));
        assert_eq!(Ideal::zero(&r).dimension().unwrap(), (3, vec![vec![0, 1, 2]]));
        assert_eq!(Ideal::unit(&r).dimension().unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn degree_examples() {
        let r = r3();
        assert_eq!(id("x; y", &r).hilbert_degree().unwrap().1, BigInt::from(1));
        assert_eq!(id("x; y^2 - y*z + z^2", &r).hilbert_degree().unwrap().1, BigInt::from(2));
        assert_eq!(id("x^2; x*y; y^2", &r).hilbert_degree().unwrap().1, BigInt::from(3));
        assert_eq!(id("x + 1", &r).hilbert_degree().unwrap_err(), Error::NotHomogeneous);
    }

    #[test]
    fn module_degree_examples() {
        let r = r3();
        let i = id("x^2*y; x^2*z; x*y^2; x*y*z^2", &r);
        let m = id("x; y; z", &r);
        let sat = i.saturate(&m).unwrap().ideal;
        assert_eq!(Ideal::module_degree_quotient(&i, &sat).unwrap(), BigInt::from(2));
        assert_eq!(Ideal::module_degree_quotient(&i, &i).unwrap(), BigInt::from(0));
        let r2 = Ring::grevlex(&["x", "y"]).unwrap();
        let p = id("x; y", &r2);
        assert_eq!(Ideal::module_degree_quotient(&p.power(2), &p).unwrap(), BigInt::from(2));
    }
}
