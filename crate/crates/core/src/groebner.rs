//! Division, Buchberger's algorithm, reduced bases, elimination and bases
//! over a rational function field.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::field::Field;
use crate::poly::monomial::Monomial;
use crate::poly::order::{MonomialOrder, OrderKind};
use crate::poly::polynomial::{same_ring, Poly, Polynomial};
use crate::poly::ratfunc::RatFunc;
use crate::poly::ring::{CoefficientDomain, Ring, RingRef};

/// A Gröbner basis in the order of its ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<C: Field = crate::poly::Q> {
    ring: RingRef,
    gens: Vec<Poly<C>>,
    reduced: bool,
}

impl<C: Field> GroebnerBasis<C> {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn gens(&self) -> &[Poly<C>] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Poly<C>> {
        self.gens
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when the basis generates the whole ring.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| g.lm().expect("nonzero").clone()).collect()
    }

    pub fn normal_form(&self, f: &Poly<C>) -> Result<Poly<C>> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(reduce(f, &self.gens))
    }

    pub fn contains(&self, f: &Poly<C>) -> bool {
        reduce(f, &self.gens).is_zero()
    }

    /// Wraps generators already known to form a reduced basis.
    pub fn from_reduced(ring: &RingRef, gens: Vec<Poly<C>>) -> Self {
        GroebnerBasis { ring: ring.clone(), gens, reduced: true }
    }
}

/// Quotients and remainder of multivariate division.
#[derive(Clone, Debug)]
pub struct DivisionResult<C: Field = crate::poly::Q> {
    pub quotients: Vec<Poly<C>>,
    pub remainder: Poly<C>,
}

fn find_divisor<C: Field, P: std::borrow::Borrow<Poly<C>>>(m: &Monomial, divisors: &[P]) -> Option<usize> {
    let d = m.degree();
    divisors.iter().position(|g| {
        let lm = g.borrow().lm().expect("nonzero divisor");
        lm.degree() <= d && lm.divides(m)
    })
}

/// Full division of `f` by `divisors`, recording quotients.
pub fn divide<C: Field>(f: &Poly<C>, divisors: &[Poly<C>]) -> DivisionResult<C> {
    let divisors: Vec<&Poly<C>> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let owned: Vec<Poly<C>> = divisors.iter().map(|g| (*g).clone()).collect();
    let mut quot: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); owned.len()];
    let mut p = f.clone();
    let mut i = 0;
    while i < p.len() {
        let (m, c) = p.terms()[i].clone();
        match find_divisor(&m, &owned) {
            Some(k) => {
                let g = &owned[k];
                let qm = m.div(g.lm().expect("nonzero")).expect("divides");
                let qc = c.over(g.lc().expect("nonzero"));
                p.sub_scaled_from(i, &qm, &qc, g);
                quot[k].push((qm, qc));
            }
            None => i += 1,
        }
    }
    DivisionResult {
        quotients: quot.into_iter().map(|t| Poly::from_terms(f.ring(), t)).collect(),
        remainder: p,
    }
}

/// Remainder of `f` modulo `divisors` (fully reduced).
pub fn reduce<C: Field>(f: &Poly<C>, divisors: &[Poly<C>]) -> Poly<C> {
    reduce_by(f, divisors)
}

fn reduce_by<C: Field, P: std::borrow::Borrow<Poly<C>>>(f: &Poly<C>, divisors: &[P]) -> Poly<C> {
    let mut p = f.clone();
    let mut i = 0;
    while i < p.len() {
        let (m, c) = &p.terms()[i];
        match find_divisor(m, divisors) {
            Some(k) => {
                let g = divisors[k].borrow();
                let qm = m.div(g.lm().expect("nonzero")).expect("divides");
                let qc = c.over(g.lc().expect("nonzero"));
                p.sub_scaled_from(i, &qm, &qc, g);
            }
            None => i += 1,
        }
    }
    p
}

/// Spec-level entry point: remainder of `f` modulo a basis.
pub fn normal_form<C: Field>(f: &Poly<C>, g: &GroebnerBasis<C>) -> Result<Poly<C>> {
    g.normal_form(f)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
    serial: usize,
}

fn spoly<C: Field>(f: &Poly<C>, g: &Poly<C>, lcm: &Monomial) -> Poly<C> {
    let (fm, fc) = (f.lm().expect("nonzero"), f.lc().expect("nonzero"));
    let (gm, gc) = (g.lm().expect("nonzero"), g.lc().expect("nonzero"));
    let a = f.mul_term(&lcm.div(fm).expect("lcm"), &gc.clone());
    let b = g.mul_term(&lcm.div(gm).expect("lcm"), &fc.clone());
    a.sub(&b)
}

fn poly_sugar<C: Field>(p: &Poly<C>) -> u32 {
    p.total_degree().unwrap_or(0)
}

/// Buchberger's algorithm with Gebauer–Möller pair pruning and sugar
/// selection. Returns the reduced basis; zero generators are ignored.
pub fn buchberger<C: Field>(gens: &[Poly<C>]) -> GroebnerBasis<C> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => panic!("buchberger needs at least one generator to know the ring"),
    };
    buchberger_in(&ring, gens)
}

pub fn buchberger_in<C: Field>(ring: &RingRef, gens: &[Poly<C>]) -> GroebnerBasis<C> {
    let order = ring.order().clone();
    let mut polys: Vec<Poly<C>> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut serial = 0usize;

    let mut inputs: Vec<Poly<C>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    inputs.sort_by(|a, b| order.cmp(&a.lm().unwrap().0, &b.lm().unwrap().0));
    inputs.dedup();
    if let Some(u) = inputs.iter().find(|g| g.is_constant()) {
        return GroebnerBasis { ring: ring.clone(), gens: vec![u.monic()], reduced: true };
    }

    for h in inputs {
        let cur: Vec<&Poly<C>> = active.iter().map(|&k| &polys[k]).collect();
        let h = reduce_by(&h, &cur);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        let s = poly_sugar(&h);
        polys.push(h);
        sugar.push(s);
        update(&polys, &sugar, &mut active, &mut pairs, polys.len() - 1, &mut serial);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| order.cmp(&p.lcm.0, &q.lcm.0))
                    .then_with(|| p.serial.cmp(&q.serial))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let (f, g) = (&polys[pair.i], &polys[pair.j]);
        let s = spoly(f, g, &pair.lcm);
        let cur: Vec<&Poly<C>> = active.iter().map(|&k| &polys[k]).collect();
        let h = reduce_by(&s, &cur);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.is_constant() {
            return GroebnerBasis { ring: ring.clone(), gens: vec![h], reduced: true };
        }
        polys.push(h);
        sugar.push(pair.sugar);
        update(&polys, &sugar, &mut active, &mut pairs, polys.len() - 1, &mut serial);
    }

    let basis: Vec<Poly<C>> = active.iter().map(|&k| polys[k].clone()).collect();
    GroebnerBasis { ring: ring.clone(), gens: interreduce(basis, &order), reduced: true }
}

fn update<C: Field>(
    polys: &[Poly<C>],
    sugar: &[u32],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: usize,
    serial: &mut usize,
) {
    let hm = polys[h].lm().expect("nonzero").clone();
    let hs = sugar[h];
    let make = |g: usize| {
        let gm = polys[g].lm().expect("nonzero");
        let lcm = hm.lcm(gm);
        let sh = hs + lcm.degree() - hm.degree();
        let sg = sugar[g] + lcm.degree() - gm.degree();
        (g, lcm, sh.max(sg))
    };
    let mut cands: Vec<(usize, Monomial, u32)> = active.iter().map(|&g| make(g)).collect();

    // chain criterion among the new pairs
    let mut kept: Vec<(usize, Monomial, u32)> = Vec::new();
    while let Some((g, lcm, s)) = cands.pop() {
        let coprime = hm.is_coprime(polys[g].lm().expect("nonzero"));
        if coprime
            || (!cands.iter().any(|(_, l, _)| l.divides(&lcm)) && !kept.iter().any(|(_, l, _)| l.divides(&lcm)))
        {
            kept.push((g, lcm, s));
        }
    }
    // product criterion
    kept.retain(|(g, _, _)| !hm.is_coprime(polys[*g].lm().expect("nonzero")));

    // prune old pairs whose lcm is a proper multiple through h
    pairs.retain(|p| {
        if !hm.divides(&p.lcm) {
            return true;
        }
        let li = hm.lcm(polys[p.i].lm().expect("nonzero"));
        let lj = hm.lcm(polys[p.j].lm().expect("nonzero"));
        li == p.lcm || lj == p.lcm
    });

    kept.sort_by(|a, b| a.0.cmp(&b.0));
    for (g, lcm, s) in kept {
        pairs.push(Pair { i: g, j: h, lcm, sugar: s, serial: *serial });
        *serial += 1;
    }
    active.retain(|&g| !hm.divides(polys[g].lm().expect("nonzero")));
    active.push(h);
}

/// Minimal, monic, tail-reduced basis sorted by increasing leading term.
pub fn interreduce<C: Field>(mut basis: Vec<Poly<C>>, order: &MonomialOrder) -> Vec<Poly<C>> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| order.cmp(&a.lm().unwrap().0, &b.lm().unwrap().0));
    let mut minimal: Vec<Poly<C>> = Vec::new();
    for g in basis {
        let lm = g.lm().unwrap();
        if !minimal.iter().any(|h| h.lm().unwrap().divides(lm)) {
            minimal.push(g.monic());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Poly<C>> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g).collect();
        let g = &minimal[k];
        let head = Poly::from_terms(g.ring(), vec![g.terms()[0].clone()]);
        let tail = Poly::from_terms(g.ring(), g.terms()[1..].to_vec());
        out.push(head.add(&reduce_by(&tail, &others)).monic());
    }
    out.sort_by(|a, b| order.cmp(&a.lm().unwrap().0, &b.lm().unwrap().0));
    out
}

/// Reduced Gröbner basis of `gens` in the given order (the polynomials are
/// moved into a copy of their ring carrying that order).
pub fn groebner_in_order(gens: &[Polynomial], ring: &RingRef, order: &MonomialOrder) -> GroebnerBasis {
    let target = if ring.order() == order { ring.clone() } else { ring.with_order(order.clone()) };
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.with_ring(&target)).collect();
    buchberger_in(&target, &moved)
}

/// Block order with the `first` variables in the leading block, both blocks
/// ordered by `kind`.
pub fn block_order(kind: OrderKind, nvars: usize, first: &[usize]) -> MonomialOrder {
    MonomialOrder::elimination(kind, nvars, first)
}

/// Generators of `I ∩ K[remaining variables]`, returned in the input ring.
/// Inhomogeneous input is eliminated through its homogenization.
pub fn eliminate(gens: &[Polynomial], ring: &RingRef, drop: &[usize]) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = if gens.iter().all(Polynomial::is_homogeneous) {
        let order = block_order(OrderKind::GrevLex, ring.nvars(), drop);
        let gb = groebner_in_order(gens, ring, &order);
        gb.gens().iter().filter(|g| g.support().iter().all(|v| !drop.contains(v))).map(|g| g.with_ring(ring)).collect()
    } else {
        eliminate_homogenized(gens, ring, drop)
    };
    out.sort_by(|a, b| ring.order().cmp(&a.lm().unwrap().0, &b.lm().unwrap().0));
    out
}

/// Homogenizes a degree-compatible basis with a new smallest variable,
/// eliminates there and sets the new variable to one.
fn eliminate_homogenized(gens: &[Polynomial], ring: &RingRef, drop: &[usize]) -> Vec<Polynomial> {
    let n = ring.nvars();
    let graded = groebner_in_order(gens, ring, &MonomialOrder::grevlex(n));
    if graded.is_unit() {
        return vec![Polynomial::one_in(ring)];
    }
    let mut vars = ring.vars().to_vec();
    vars.push(ring.fresh_name("h"));
    let rest: Vec<usize> = (0..=n).filter(|v| !drop.contains(v)).collect();
    let order = MonomialOrder::blocks(OrderKind::GrevLex, vec![drop.to_vec(), rest]).expect("partition");
    let hring = Ring::new(&vars, order).expect("fresh variable");
    let homogenized: Vec<Polynomial> = graded
        .gens()
        .iter()
        .map(|g| {
            let d = g.total_degree().unwrap_or(0);
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.push(d - m.degree());
                    (Monomial(e), c.clone())
                })
                .collect();
            Polynomial::from_terms(&hring, terms)
        })
        .collect();
    let gb = buchberger_in(&hring, &homogenized);
    gb.gens()
        .iter()
        .filter(|g| g.support().iter().all(|v| !drop.contains(v)))
        .map(|g| Polynomial::from_terms(ring, g.terms().iter().map(|(m, c)| (Monomial(m.0[..n].to_vec()), c.clone())).collect()))
        .collect()
}

/// A basis over the fraction field `QQ(S)` in the dependent variables.
#[derive(Clone, Debug)]
pub struct FractionFieldBasis {
    /// Ring in the dependent variables with coefficients in `QQ(S)`.
    pub dep_ring: RingRef,
    /// Ring in the `S` variables (coefficients of the rational functions).
    pub s_ring: RingRef,
    pub dep_vars: Vec<usize>,
    pub s_vars: Vec<usize>,
    pub basis: GroebnerBasis<RatFunc>,
    /// Polynomials in `K[S]` that were inverted when normalizing.
    pub denominators: Vec<Polynomial>,
    /// The underlying rational basis in the block order (deps ≫ S).
    pub block_basis: GroebnerBasis,
}

/// Splits the terms of `f` by dependent monomial, with `K[S]` coefficients.
pub fn to_fraction_field(
    f: &Polynomial,
    dep_vars: &[usize],
    s_vars: &[usize],
    dep_ring: &RingRef,
    s_ring: &RingRef,
) -> Poly<RatFunc> {
    use std::collections::BTreeMap;
    let mut groups: BTreeMap<Vec<u32>, Vec<(Monomial, crate::poly::Q)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let dm: Vec<u32> = dep_vars.iter().map(|&v| m.0[v]).collect();
        let sm: Vec<u32> = s_vars.iter().map(|&v| m.0[v]).collect();
        groups.entry(dm).or_default().push((Monomial(sm), c.clone()));
    }
    let terms = groups
        .into_iter()
        .map(|(dm, ts)| (Monomial(dm), RatFunc::from_poly(Polynomial::from_terms(s_ring, ts))))
        .collect();
    Poly::from_terms(dep_ring, terms)
}

/// Clears the denominators of `f` over `QQ(S)`: returns a polynomial in the
/// full ring and the `K[S]` multiplier used.
pub fn from_fraction_field(
    f: &Poly<RatFunc>,
    ring: &RingRef,
    dep_vars: &[usize],
    s_vars: &[usize],
) -> (Polynomial, Polynomial) {
    let s_ring = f.lc().map(|c| c.ring().clone());
    let Some(s_ring) = s_ring else {
        return (Polynomial::zero(ring), Polynomial::one_in(ring));
    };
    let mut den = Polynomial::one_in(&s_ring);
    for (_, c) in f.terms() {
        let d = c.den();
        if !d.is_constant() {
            let g = crate::poly::gcd::poly_gcd(&den, d);
            den = den.mul(&d.exact_div(&g).expect("gcd divides"));
        }
    }
    let n = ring.nvars();
    let mut terms = Vec::new();
    for (dm, c) in f.terms() {
        let scaled = c.num().mul(&den.exact_div(c.den()).expect("common denominator"));
        for (sm, a) in scaled.terms() {
            let mut e = vec![0u32; n];
            for (k, &v) in dep_vars.iter().enumerate() {
                e[v] = dm.0[k];
            }
            for (k, &v) in s_vars.iter().enumerate() {
                e[v] = sm.0[k];
            }
            terms.push((Monomial(e), a.clone()));
        }
    }
    let mut den_full = Vec::new();
    for (sm, a) in den.terms() {
        let mut e = vec![0u32; n];
        for (k, &v) in s_vars.iter().enumerate() {
            e[v] = sm.0[k];
        }
        den_full.push((Monomial(e), a.clone()));
    }
    (Polynomial::from_terms(ring, terms), Polynomial::from_terms(ring, den_full))
}

/// Rings used for computations over `QQ(S)`: dependent variables with
/// rational-function coefficients, and the `S` polynomial ring.
pub fn fraction_field_rings(ring: &RingRef, s_vars: &[usize]) -> (Vec<usize>, RingRef, RingRef) {
    let dep_vars: Vec<usize> = (0..ring.nvars()).filter(|v| !s_vars.contains(v)).collect();
    let s_names: Vec<String> = s_vars.iter().map(|&v| ring.var_name(v).to_string()).collect();
    let dep_names: Vec<String> = dep_vars.iter().map(|&v| ring.var_name(v).to_string()).collect();
    let dep_ring = Ring::with_coefficients(
        &dep_names,
        MonomialOrder::grevlex(dep_names.len()),
        CoefficientDomain::FractionField(s_names.clone()),
    )
    .expect("valid names");
    let s_ring = Ring::grevlex(&s_names).expect("valid names");
    (dep_vars, dep_ring, s_ring)
}

/// Reduced Gröbner basis of `gens · QQ(S)[deps]` (grevlex on the dependent
/// variables), obtained from a rational basis in the block order deps ≫ S.
pub fn gb_over_fraction_field(gens: &[Polynomial], ring: &RingRef, s_vars: &[usize]) -> Result<FractionFieldBasis> {
    let (dep_vars, dep_ring, s_ring) = fraction_field_rings(ring, s_vars);
    let order = MonomialOrder::blocks(OrderKind::GrevLex, vec![dep_vars.clone(), s_vars.to_vec()])
        .unwrap_or_else(|_| MonomialOrder::grevlex(ring.nvars()));
    let order = if dep_vars.is_empty() || s_vars.is_empty() { MonomialOrder::grevlex(ring.nvars()) } else { order };
    let block = groebner_in_order(gens, ring, &order);
    if block.gens().iter().any(|g| g.support().iter().all(|v| s_vars.contains(v))) {
        let names: Vec<&str> = s_vars.iter().map(|&v| ring.var_name(v)).collect();
        return Err(Error::NotIndependent(format!("{{{}}}", names.join(","))));
    }
    let converted: Vec<Poly<RatFunc>> =
        block.gens().iter().map(|g| to_fraction_field(g, &dep_vars, s_vars, &dep_ring, &s_ring)).collect();
    let dorder = dep_ring.order().clone();
    let mut minimal: Vec<Poly<RatFunc>> = Vec::new();
    let mut sorted = converted;
    sorted.sort_by(|a, b| dorder.cmp(&a.lm().unwrap().0, &b.lm().unwrap().0));
    for g in sorted {
        if !minimal.iter().any(|h| h.lm().unwrap().divides(g.lm().unwrap())) {
            minimal.push(g);
        }
    }
    let mut denominators: Vec<Polynomial> = Vec::new();
    for g in &minimal {
        let lc = g.lc().unwrap();
        if !lc.num().is_constant() {
            let monic = lc.num().monic();
            if !denominators.contains(&monic) {
                denominators.push(monic);
            }
        }
    }
    if denominators.is_empty() {
        denominators.push(Polynomial::one_in(&s_ring));
    }
    let gens = interreduce(minimal, &dorder);
    Ok(FractionFieldBasis {
        basis: GroebnerBasis::from_reduced(&dep_ring, gens),
        dep_ring,
        s_ring,
        dep_vars,
        s_vars: s_vars.to_vec(),
        denominators,
        block_basis: block,
    })
}

/// Checks that every S-polynomial of the basis reduces to zero.
pub fn is_groebner<C: Field>(basis: &[Poly<C>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let lcm = basis[i].lm().unwrap().lcm(basis[j].lm().unwrap());
            if !reduce(&spoly(&basis[i], &basis[j], &lcm), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Compares leading monomials in the basis's order; used for sorting output.
pub fn cmp_lead<C: Field>(a: &Poly<C>, b: &Poly<C>) -> Ordering {
    a.ring().order().cmp(&a.lm().unwrap().0, &b.lm().unwrap().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::{parse_poly, parse_poly_list};

    fn ring(vars: &[&str]) -> RingRef {
        Ring::grevlex(vars).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y", "z"]);
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert!(reduce(&p("x^2"), &[p("x")]).is_zero());
        assert_eq!(reduce(&p("x + 1"), &[p("y")]), p("x + 1"));
        let lex = Ring::new(&["y", "z", "x"], MonomialOrder::lex(3)).unwrap();
        let q = |s: &str| parse_poly(s, &lex).unwrap();
        let gb = buchberger(&[q("y - x*z"), q("z^2")]);
        assert!(gb.contains(&q("y^2")));
    }

    #[test]
    fn principal_and_monomial_ideals() {
        let r = ring(&["x", "y", "z"]);
        let gens = parse_poly_list("x^2*y; x^2*z; x*y^2; x*y*z^2", &r).unwrap();
        let gb = buchberger(&gens);
        assert_eq!(gb.len(), 4);
        assert!(gb.gens().iter().all(|g| g.is_monomial()));
        let gb = buchberger(&[parse_poly("x", &r).unwrap()]);
        assert_eq!(gb.gens(), &[parse_poly("x", &r).unwrap()]);
    }

    #[test]
    fn lex_twisted_cubic() {
        let r = Ring::new(&["z", "y", "x"], MonomialOrder::lex(3)).unwrap();
        let gens = parse_poly_list("y - x^2; z - x^3", &r).unwrap();
        let gb = buchberger(&gens);
        let mut expect = gens.clone();
        expect.sort_by(cmp_lead);
        assert_eq!(gb.gens(), expect.as_slice());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["t", "x", "y"]);
        let gens = parse_poly_list("t*x; (1 - t)*y", &r).unwrap();
        assert_eq!(eliminate(&gens, &r, &[0]), vec![parse_poly("x*y", &r).unwrap()]);
        let gens = parse_poly_list("x - t; y - t^2", &r).unwrap();
        assert_eq!(eliminate(&gens, &r, &[0]), vec![parse_poly("x^2 - y", &r).unwrap()]);
        let r2 = ring(&["x", "y"]);
        assert!(eliminate(&[parse_poly("y - x^2", &r2).unwrap()], &r2, &[1]).is_empty());
    }

    #[test]
    fn fraction_field_examples() {
        let r = ring(&["x", "y", "z"]);
        let ff = gb_over_fraction_field(&parse_poly_list("y; z", &r).unwrap(), &r, &[0]).unwrap();
        assert_eq!(ff.basis.len(), 2);
        assert!(ff.denominators.iter().all(|d| d.is_constant()));

        let ff = gb_over_fraction_field(&parse_poly_list("y^2; z^2; y - x*z", &r).unwrap(), &r, &[0]).unwrap();
        let shown: Vec<String> = ff.basis.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown.len(), 2);
        assert!(ff.denominators.iter().all(|d| d.is_constant()));

        let r2 = ring(&["x", "y"]);
        let ff = gb_over_fraction_field(&[parse_poly("x*y - 1", &r2).unwrap()], &r2, &[0]).unwrap();
        assert_eq!(ff.basis.len(), 1);
        assert_eq!(ff.denominators, vec![parse_poly("x", &ff.s_ring).unwrap()]);
        let g = &ff.basis.gens()[0];
        assert_eq!(g.terms()[1].1.to_string(), "-1/x");

        assert!(matches!(
            gb_over_fraction_field(&[parse_poly("x", &r2).unwrap()], &r2, &[0]),
            Err(Error::NotIndependent(_))
        ));
    }

    #[test]
    fn division_identity() {
        let r = ring(&["x", "y"]);
        let f = parse_poly("x^2*y + x*y^2 + y^2", &r).unwrap();
        let g = parse_poly_list("x*y - 1; y^2 - 1", &r).unwrap();
        let d = divide(&f, &g);
        let mut back = d.remainder.clone();
        for (q, gi) in d.quotients.iter().zip(&g) {
            back = back.add(&q.mul(gi));
        }
        assert_eq!(back, f);
    }
}
