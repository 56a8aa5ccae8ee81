//! Multivariate gcd over the rationals by recursive primitive remainder
//! sequences: content in the remaining variables, then a univariate PRS in
//! the chief variable.

use super::field::Field;
use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// Coefficients of `p` as a polynomial in variable `v` (index = degree).
pub fn coeffs_in(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let deg = p.degree_in(v) as usize;
    let mut buckets: Vec<Vec<(Monomial, _)>> = vec![Vec::new(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.0[v] as usize;
        let mut m2 = m.clone();
        m2.0[v] = 0;
        buckets[e].push((m2, c.clone()));
    }
    buckets.into_iter().map(|t| Polynomial::from_terms(p.ring(), t)).collect()
}

pub fn from_coeffs_in(coeffs: &[Polynomial], v: usize, template: &Polynomial) -> Polynomial {
    let mut terms = Vec::new();
    for (e, c) in coeffs.iter().enumerate() {
        for (m, a) in c.terms() {
            let mut m2 = m.clone();
            m2.0[v] += e as u32;
            terms.push((m2, a.clone()));
        }
    }
    Polynomial::from_terms(template.ring(), terms)
}

fn lc_in(p: &Polynomial, v: usize) -> Polynomial {
    coeffs_in(p, v).pop().expect("nonzero polynomial")
}

/// Greatest common divisor, normalized to be monic (zero if both are zero).
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    gcd_rec(a, b).monic()
}

/// Gcd of a list of polynomials.
pub fn poly_gcd_all<'a>(ps: impl IntoIterator<Item = &'a Polynomial>) -> Option<Polynomial> {
    let mut acc: Option<Polynomial> = None;
    for p in ps {
        acc = Some(match acc {
            None => p.monic(),
            Some(g) if g.is_constant() && !g.is_zero() => return Some(g),
            Some(g) => poly_gcd(&g, p),
        });
    }
    acc
}

fn gcd_rec(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one_in(a.ring());
    }
    if a.is_monomial() || b.is_monomial() {
        return monomial_gcd(a, b);
    }
    let sa = a.support();
    let sb = b.support();
    let v = *sa.iter().chain(sb.iter()).min().expect("nonconstant");
    if !sa.contains(&v) {
        return gcd_rec(a, &content_in(b, v));
    }
    if !sb.contains(&v) {
        return gcd_rec(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd_rec(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let g = prs(pa, pb, v);
    c.mul(&g)
}

fn monomial_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut g: Option<Monomial> = None;
    for (m, _) in a.terms().iter().chain(b.terms()) {
        g = Some(match g {
            None => m.clone(),
            Some(g) => g.gcd(m),
        });
    }
    let one = a.lc().expect("nonzero").one_like();
    Polynomial::monomial(a.ring(), g.expect("nonzero"), one)
}

/// Content with respect to `v`: gcd of the coefficients in the other variables.
pub fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.ring());
    for c in coeffs_in(p, v).iter().filter(|c| !c.is_zero()) {
        g = gcd_rec(&g, c);
        if g.is_constant() {
            return Polynomial::one_in(p.ring());
        }
    }
    g.monic()
}

fn primitive_in(p: &Polynomial, v: usize) -> Polynomial {
    let c = content_in(p, v);
    p.exact_div(&c).expect("content divides").monic()
}

fn prem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    let lcb = lc_in(b, v);
    let mut r = a.clone();
    let mut e = a.degree_in(v) as i64 - db as i64 + 1;
    while !r.is_zero() && r.degree_in(v) >= db {
        let shift = r.degree_in(v) - db;
        let mut mono = Monomial::one(a.ring().nvars());
        mono.0[v] = shift;
        let lr = lc_in(&r, v);
        let one = r.lc().expect("nonzero").one_like();
        let s = lr.mul(&Polynomial::monomial(a.ring(), mono, one));
        r = lcb.mul(&r).sub(&s.mul(b));
        e -= 1;
    }
    if e > 0 {
        r = lcb.pow(e as u32).mul(&r);
    }
    r
}

fn prs(a: Polynomial, b: Polynomial, v: usize) -> Polynomial {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        let r = prem(&a, &b, v);
        if r.is_zero() {
            return primitive_in(&b, v);
        }
        if r.degree_in(v) == 0 {
            return Polynomial::one_in(a.ring());
        }
        a = b;
        b = primitive_in(&r, v);
    }
}
