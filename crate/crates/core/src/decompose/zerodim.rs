//! Zero-dimensional decomposition over `QQ` or `QQ(U)` via a separating
//! linear form: the minimal polynomial of the form is factored and each
//! factor cuts out one primary component.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factor::{factor_over_fraction_field, squarefree_part};
use super::{DecomposeOptions, PrimaryComponent};
use crate::error::{Error, Result};
use crate::groebner::{gb_over_fraction_field, to_fraction_field, FractionFieldBasis, GroebnerBasis};
use crate::ideal::Ideal;
use crate::poly::field::{Field, Q};
use crate::poly::gcd::{coeffs_in, poly_gcd};
use crate::poly::monomial::Monomial;
use crate::poly::order::{MonomialOrder, OrderKind};
use crate::poly::polynomial::{Poly, Polynomial};
use crate::poly::ratfunc::RatFunc;
use crate::poly::ring::{Ring, RingRef};

fn deps_of(ring: &RingRef, params: &[usize]) -> Vec<usize> {
    (0..ring.nvars()).filter(|v| !params.contains(v)).collect()
}

/// Basis in the block order deps ≫ params (grevlex inside each block).
pub fn block_basis(ideal: &Ideal, params: &[usize]) -> Arc<GroebnerBasis> {
    let n = ideal.ring().nvars();
    let deps = deps_of(ideal.ring(), params);
    let order = if params.is_empty() || deps.is_empty() {
        MonomialOrder::grevlex(n)
    } else {
        MonomialOrder::blocks(OrderKind::GrevLex, vec![deps, params.to_vec()]).expect("partition")
    };
    ideal.gb_in(&order)
}

/// Coefficient in `K[params]` of the leading dependent monomial.
fn lead_coefficient(g: &Polynomial, deps: &[usize]) -> Polynomial {
    let lm = g.lm().expect("nonzero");
    let key: Vec<u32> = deps.iter().map(|&v| lm.0[v]).collect();
    let terms = g
        .terms()
        .iter()
        .filter(|(m, _)| deps.iter().map(|&v| m.0[v]).eq(key.iter().copied()))
        .map(|(m, c)| {
            let mut m = m.clone();
            for &v in deps {
                m.0[v] = 0;
            }
            (m, c.clone())
        })
        .collect();
    Polynomial::from_terms(g.ring(), terms)
}

/// Product `h` of the leading coefficients in `K[params]` of the block
/// basis; then `I·QQ(params)[deps] ∩ R = I : h^∞`.
pub fn contraction_multiplier(ideal: &Ideal, params: &[usize]) -> Polynomial {
    let ring = ideal.ring();
    let one = Polynomial::one_in(ring);
    if params.is_empty() {
        return one;
    }
    let deps = deps_of(ring, params);
    let gb = block_basis(ideal, params);
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut h = one;
    for g in gb.gens() {
        let lc = lead_coefficient(g, &deps).with_ring(ring).monic();
        if !lc.is_constant() && seen.insert(lc.to_string()) {
            h = h.mul(&lc);
        }
    }
    h
}

/// `I·QQ(params)[deps] ∩ R`.
pub fn contract(ideal: &Ideal, params: &[usize]) -> Ideal {
    let h = contraction_multiplier(ideal, params);
    if h.is_constant() {
        return ideal.clone();
    }
    ideal.saturate_poly(&h)
}

/// Standard monomials over `QQ(params)` in the dependent variables, or
/// `None` if the extension is not zero-dimensional.
pub fn standard_monomials_over(ideal: &Ideal, params: &[usize]) -> Option<Vec<Monomial>> {
    let deps = deps_of(ideal.ring(), params);
    let gb = block_basis(ideal, params);
    let lms: Vec<Vec<u32>> = gb.gens().iter().map(|g| deps.iter().map(|&v| g.lm().unwrap().0[v]).collect()).collect();
    Some(enumerate_standard(&lms, deps.len())?.into_iter().map(Monomial).collect())
}

/// The quotient `QQ(params)[deps] / I` with its monomial basis.
struct Quotient {
    ff: FractionFieldBasis,
    index: HashMap<Monomial, usize>,
}

impl Quotient {
    fn new(ideal: &Ideal, params: &[usize]) -> Result<Self> {
        let ff = gb_over_fraction_field(ideal.gens(), ideal.ring(), params)?;
        let lms: Vec<Vec<u32>> = ff.basis.gens().iter().map(|g| g.lm().unwrap().0.clone()).collect();
        let basis = enumerate_standard(&lms, ff.dep_vars.len())
            .ok_or_else(|| Error::NotIndependent("extension is not zero-dimensional".into()))?;
        let index = basis.into_iter().enumerate().map(|(i, m)| (Monomial(m), i)).collect();
        Ok(Quotient { ff, index })
    }

    fn dim(&self) -> usize {
        self.index.len()
    }

    fn lift(&self, f: &Polynomial) -> Poly<RatFunc> {
        to_fraction_field(f, &self.ff.dep_vars, &self.ff.s_vars, &self.ff.dep_ring, &self.ff.s_ring)
    }

    fn zero(&self) -> RatFunc {
        RatFunc::from_q(&self.ff.s_ring, Q::zero())
    }

    fn vector(&self, f: &Poly<RatFunc>) -> Vec<RatFunc> {
        let mut v = vec![self.zero(); self.dim()];
        for (m, c) in f.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Coefficients (constant term first, monic) of the minimal polynomial
    /// of `a` acting on the quotient.
    fn minimal_polynomial(&self, a: &Poly<RatFunc>) -> Vec<RatFunc> {
        let one = RatFunc::from_q(&self.ff.s_ring, Q::one());
        let mut rows: Vec<(Vec<RatFunc>, Vec<RatFunc>, usize)> = Vec::new();
        let mut power = self.ff.basis.normal_form(&Poly::constant(&self.ff.dep_ring, one.clone())).expect("same ring");
        for k in 0..=self.dim() {
            let mut v = self.vector(&power);
            let mut combo = vec![self.zero(); k + 1];
            combo[k] = one.clone();
            for (rv, rc, piv) in &rows {
                if v[*piv].is_zero() {
                    continue;
                }
                let f = v[*piv].over(&rv[*piv]);
                for (x, y) in v.iter_mut().zip(rv) {
                    if !y.is_zero() {
                        *x = x.minus(&f.times(y));
                    }
                }
                for (x, y) in combo.iter_mut().zip(rc) {
                    if !y.is_zero() {
                        *x = x.minus(&f.times(y));
                    }
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return combo.into_iter().map(|c| c.reduced()).collect(),
                Some(piv) => rows.push((v, combo, piv)),
            }
            power = self.ff.basis.normal_form(&power.mul(a)).expect("same ring");
        }
        unreachable!("minimal polynomial degree exceeds the dimension")
    }

    /// `sum c_k t^k` with denominators cleared, as a polynomial in `ext`
    /// (the parameters keep their indices, `t` is the last variable).
    fn to_ext(&self, coeffs: &[RatFunc], ext: &RingRef) -> Polynomial {
        let s_ring = &self.ff.s_ring;
        let mut den = Polynomial::one_in(s_ring);
        for c in coeffs {
            if !c.den().is_constant() {
                let g = poly_gcd(&den, c.den());
                den = den.mul(&c.den().exact_div(&g).expect("gcd divides"));
            }
        }
        let t = ext.nvars() - 1;
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c.num().mul(&den.exact_div(c.den()).expect("common denominator"));
            for (sm, a) in scaled.terms() {
                let mut e = vec![0u32; ext.nvars()];
                for (j, &v) in self.ff.s_vars.iter().enumerate() {
                    e[v] = sm.0[j];
                }
                e[t] = k as u32;
                terms.push((Monomial(e), a.clone()));
            }
        }
        Polynomial::from_terms(ext, terms).primitive()
    }
}

pub(crate) fn enumerate_standard(lms: &[Vec<u32>], k: usize) -> Option<Vec<Vec<u32>>> {
    if lms.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return Some(Vec::new());
    }
    for j in 0..k {
        if !lms.iter().any(|m| m[j] > 0 && m.iter().enumerate().all(|(i, &e)| i == j || e == 0)) {
            return None;
        }
    }
    let reducible = |a: &[u32]| lms.iter().any(|m| m.iter().zip(a).all(|(x, y)| x <= y));
    let mut out = Vec::new();
    let mut stack = vec![vec![0u32; k]];
    let mut seen = BTreeSet::new();
    while let Some(a) = stack.pop() {
        if !seen.insert(a.clone()) || reducible(&a) {
            continue;
        }
        for j in 0..k {
            let mut b = a.clone();
            b[j] += 1;
            stack.push(b);
        }
        out.push(a);
    }
    out.sort();
    Some(out)
}

fn ext_ring(ring: &RingRef) -> RingRef {
    let mut names: Vec<String> = ring.vars().to_vec();
    names.push(ring.fresh_name("t"));
    Ring::grevlex(&names).expect("fresh variable")
}

/// Radical of a zero-dimensional extension: add the squarefree parts of the
/// minimal polynomials of every dependent variable.
pub fn zero_dim_radical(ideal: &Ideal, params: &[usize]) -> Result<Ideal> {
    let quot = Quotient::new(ideal, params)?;
    radical_with(ideal, params, &quot)
}

fn radical_with(ideal: &Ideal, params: &[usize], quot: &Quotient) -> Result<Ideal> {
    let ring = ideal.ring();
    let ext = ext_ring(ring);
    let t = ring.nvars();
    let mut extra = Vec::new();
    for v in deps_of(ring, params) {
        let x = Polynomial::var(ring, v);
        let mp = quot.to_ext(&quot.minimal_polynomial(&quot.lift(&x)), &ext);
        let sq = squarefree_part(&mp, t);
        if sq.degree_in(t) < mp.degree_in(t) {
            extra.push(substitute_last(&sq, ring, &x));
        }
    }
    Ok(if extra.is_empty() { ideal.clone() } else { ideal.add_gens(&extra) })
}

/// Substitutes `ell` for the last variable of `f` (which lives in `ext`).
fn substitute_last(f: &Polynomial, ring: &RingRef, ell: &Polynomial) -> Polynomial {
    let n = ring.nvars();
    let drop = |p: &Polynomial| {
        let terms = p.terms().iter().map(|(m, c)| (Monomial(m.0[..n].to_vec()), c.clone())).collect();
        Polynomial::from_terms(ring, terms)
    };
    let coeffs = coeffs_in(f, n);
    let mut acc = Polynomial::zero(ring);
    for c in coeffs.iter().rev() {
        acc = acc.mul(ell).add(&drop(c));
    }
    acc
}

/// Primary decomposition of `I·QQ(params)[deps]`, contracted back to `R`.
/// The extension must be zero-dimensional; with `params` empty this is an
/// ordinary zero-dimensional decomposition over `QQ`.
pub fn zero_dim_decompose(ideal: &Ideal, params: &[usize], opts: &DecomposeOptions) -> Result<Vec<PrimaryComponent>> {
    let ring = ideal.ring().clone();
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let deps = deps_of(&ring, params);
    if deps.is_empty() {
        let zero = Ideal::zero(&ring);
        return Ok(vec![PrimaryComponent { primary: zero.clone(), prime: zero }]);
    }
    let quot = Quotient::new(ideal, params)?;
    let rad = radical_with(ideal, params, &quot)?;
    let npoints = Quotient::new(&rad, params)?.dim();
    let ext = ext_ring(&ring);
    let t = ring.nvars();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for attempt in 0..24i64 {
        let mut ell = Polynomial::var(&ring, deps[0]);
        let range = 3 + 4 * attempt;
        for &v in &deps[1..] {
            let c: i64 = rng.gen_range(-range..=range);
            ell = ell.add(&Polynomial::var(&ring, v).scale(&Q::from_integer(c.into())));
        }
        let mu = quot.to_ext(&quot.minimal_polynomial(&quot.lift(&ell)), &ext);
        if squarefree_part(&mu, t).degree_in(t) as usize != npoints {
            continue;
        }
        let factors = factor_over_fraction_field(&mu, t, opts.budget)?;
        let mut out = Vec::new();
        for (f, e) in factors {
            let g = substitute_last(&f, &ring, &ell);
            let q = contract(&ideal.add_gens(&[g.pow(e)]), params);
            let p = contract(&rad.add_gens(&[g]), params);
            out.push(PrimaryComponent { primary: q.canonical(), prime: p.canonical() });
        }
        return Ok(out);
    }
    Err(Error::NoSeparator(format!("no separating linear form found for {ideal}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> DecomposeOptions {
        DecomposeOptions::default()
    }

    #[test]
    fn univariate_split() {
        let r = Ring::grevlex(&["x"]).unwrap();
        let comps = zero_dim_decompose(&Ideal::parse("x^2 - 1", &r).unwrap(), &[], &opts()).unwrap();
        assert_eq!(comps.len(), 2);
        let mut primes: Vec<String> = comps.iter().map(|c| c.prime.basis()[0].to_string()).collect();
        primes.sort();
        assert_eq!(primes, vec!["x + 1", "x - 1"]);
    }

    #[test]
    fn fat_point() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let i = Ideal::parse("x^2; x*y; y^2", &r).unwrap();
        let comps = zero_dim_decompose(&i, &[], &opts()).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].prime.equals(&Ideal::parse("x; y", &r).unwrap()));
        assert!(comps[0].primary.equals(&i));
    }

    #[test]
    fn irreducible_over_rational_functions() {
        let r = Ring::grevlex(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse("y^2 - y*z + z^2; x", &r).unwrap();
        let comps = zero_dim_decompose(&i, &[2], &opts()).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].prime.equals(&i));
    }

    #[test]
    fn lengths_add_up() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let i = Ideal::parse("x^2 - y; y^3 - 2*y^2 + y", &r).unwrap();
        let total = standard_monomials_over(&i, &[]).unwrap().len();
        let comps = zero_dim_decompose(&i, &[], &opts()).unwrap();
        let parts: usize = comps.iter().map(|c| standard_monomials_over(&c.primary, &[]).unwrap().len()).sum();
        assert_eq!(total, parts);
        let inter = Ideal::intersect_all(&comps.iter().map(|c| c.primary.clone()).collect::<Vec<_>>()).unwrap();
        assert!(inter.equals(&i));
    }
}
