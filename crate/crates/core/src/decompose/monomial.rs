//! Monomial ideals: irreducible splitting, primary components, standard pairs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::Polynomial;
use crate::poly::ring::RingRef;

/// A standard pair `(x^a, P)`: `a` is zero on the free variables, `prime`
/// lists the variables generating the monomial prime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct StandardPair {
    pub monomial: Vec<u32>,
    pub prime: Vec<usize>,
}

impl StandardPair {
    /// Variables not in the prime.
    pub fn free_vars(&self) -> Vec<usize> {
        (0..self.monomial.len()).filter(|v| !self.prime.contains(v)).collect()
    }
}

/// Minimal monomial generators (exponent vectors) of a monomial ideal.
pub fn monomial_gens(ideal: &Ideal) -> Result<Vec<Monomial>> {
    if !ideal.is_monomial() {
        return Err(Error::NotMonomial);
    }
    Ok(minimal(ideal.gens().iter().map(|g| g.lm().expect("nonzero").clone()).collect()))
}

pub(crate) fn minimal(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

/// Irreducible components (ideals generated by pure powers), irredundant.
pub fn irreducible_components(gens: &[Monomial]) -> Vec<Vec<Monomial>> {
    let mut out: Vec<Vec<Monomial>> = Vec::new();
    split(minimal(gens.to_vec()), &mut out);
    let mut comps: Vec<Vec<Monomial>> = out.into_iter().map(minimal).collect();
    comps.sort();
    comps.dedup();
    // drop components containing another one
    let keep: Vec<bool> = (0..comps.len())
        .map(|i| !(0..comps.len()).any(|j| j != i && contains(&comps[i], &comps[j]) && (!contains(&comps[j], &comps[i]))))
        .collect();
    comps.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}

/// Whether the monomial ideal `a` contains `b`.
fn contains(a: &[Monomial], b: &[Monomial]) -> bool {
    b.iter().all(|m| a.iter().any(|g| g.divides(m)))
}

fn split(gens: Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
    let mixed = gens.iter().find(|m| m.support().len() > 1);
    match mixed {
        None => out.push(gens),
        Some(m) => {
            let v = m.support()[0];
            let mut pure = Monomial::one(m.nvars());
            pure.0[v] = m.0[v];
            let mut rest = m.clone();
            rest.0[v] = 0;
            let mut a: Vec<Monomial> = gens.iter().filter(|g| *g != m).cloned().collect();
            let mut b = a.clone();
            a.push(pure);
            b.push(rest);
            split(minimal(a), out);
            split(minimal(b), out);
        }
    }
}

/// Intersection of monomial ideals: pairwise lcms.
pub fn intersect_monomial(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.lcm(y));
        }
    }
    minimal(out)
}

/// Primes (as variable sets) and primary components of a monomial ideal.
pub fn monomial_decomposition(gens: &[Monomial]) -> Vec<(Vec<usize>, Vec<Monomial>)> {
    let mut by_radical: BTreeMap<Vec<usize>, Vec<Monomial>> = BTreeMap::new();
    for comp in irreducible_components(gens) {
        let rad: Vec<usize> = {
            let mut r: Vec<usize> = comp.iter().flat_map(|m| m.support()).collect();
            r.sort();
            r.dedup();
            r
        };
        let merged = match by_radical.remove(&rad) {
            None => comp,
            Some(prev) => intersect_monomial(&prev, &comp),
        };
        by_radical.insert(rad, merged);
    }
    by_radical.into_iter().collect()
}

/// Decomposes a monomial ideal: returns `(prime, primary)` ideal pairs.
pub fn monomial_ass_and_decompose(ideal: &Ideal) -> Result<Vec<(Ideal, Ideal)>> {
    let gens = monomial_gens(ideal)?;
    let ring = ideal.ring();
    if gens.iter().any(Monomial::is_one) {
        return Err(Error::UnitIdeal);
    }
    if gens.is_empty() {
        return Ok(vec![(Ideal::zero(ring), Ideal::zero(ring))]);
    }
    Ok(monomial_decomposition(&gens)
        .into_iter()
        .map(|(vars, prim)| (Ideal::of_vars(ring, &vars), monomial_ideal(ring, &prim)))
        .collect())
}

pub fn monomial_ideal(ring: &RingRef, ms: &[Monomial]) -> Ideal {
    let one = crate::poly::field::q(1);
    Ideal::new(ring, ms.iter().map(|m| Polynomial::monomial(ring, m.clone(), one.clone())).collect())
}

/// Standard pairs by exhaustive search over the exponent box.
pub fn standard_pairs(ideal: &Ideal) -> Result<Vec<StandardPair>> {
    let gens = monomial_gens(ideal)?;
    let n = ideal.ring().nvars();
    Ok(standard_pairs_of(&gens, n))
}

pub fn standard_pairs_of(gens: &[Monomial], n: usize) -> Vec<StandardPair> {
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let bound: Vec<u32> = (0..n).map(|i| gens.iter().map(|g| g.0[i]).max().unwrap_or(0)).collect();
    // admissible: x^a restricted to the non-free variables lies outside I|free=1
    let admissible = |a: &[u32], free: u64| {
        !gens.iter().any(|g| (0..n).all(|i| free >> i & 1 == 1 || g.0[i] <= a[i]))
    };
    let mut out = Vec::new();
    for free in 0u64..(1u64 << n) {
        let vars: Vec<usize> = (0..n).filter(|i| free >> i & 1 == 0).collect();
        let mut a = vec![0u32; n];
        loop {
            if admissible(&a, free)
                && vars.iter().all(|&i| {
                    let mut b = a.clone();
                    b[i] = 0;
                    !admissible(&b, free | 1 << i)
                })
            {
                out.push(StandardPair { monomial: a.clone(), prime: vars.clone() });
            }
            // next exponent vector in the box over `vars`
            let mut k = 0;
            loop {
                if k == vars.len() {
                    break;
                }
                let i = vars[k];
                if a[i] + 1 < bound[i].max(1) {
                    a[i] += 1;
                    break;
                }
                a[i] = 0;
                k += 1;
            }
            if k == vars.len() {
                break;
            }
        }
    }
    out.sort_by(|x, y| x.prime.cmp(&y.prime).then_with(|| x.monomial.cmp(&y.monomial)));
    out
}
