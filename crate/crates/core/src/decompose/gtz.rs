//! GTZ-style reduction of positive-dimensional ideals to the zero-dimensional
//! engine, minimalization, and the canonical ordering of primes.

use super::monomial::monomial_ass_and_decompose;
use super::zerodim::{contraction_multiplier, standard_monomials_over, zero_dim_decompose};
use super::{DecomposeOptions, DecompositionSource, PrimaryComponent};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

fn raw_components(ideal: &Ideal, opts: &DecomposeOptions) -> Result<(Vec<PrimaryComponent>, DecompositionSource)> {
    if ideal.is_monomial() {
        let comps = monomial_ass_and_decompose(ideal)?
            .into_iter()
            .map(|(prime, primary)| PrimaryComponent { primary, prime })
            .collect();
        return Ok((comps, DecompositionSource::Monomial));
    }
    let (dim, sets) = ideal.dimension()?;
    if dim == 0 {
        return Ok((zero_dim_decompose(ideal, &[], opts)?, DecompositionSource::ZeroDim));
    }
    let params = sets.into_iter().next().expect("independent set");
    let mut comps = zero_dim_decompose(ideal, &params, opts)?;
    let h = contraction_multiplier(ideal, &params);
    if !h.is_constant() {
        let (_, k) = ideal.saturate_poly_exponent(&h);
        let rest = ideal.add_gens(&[h.pow(k as u32)]);
        if !rest.is_unit() {
            comps.extend(raw_components(&rest, opts)?.0);
        }
    }
    Ok((comps, DecompositionSource::Gtz))
}

/// Merges components with equal primes, then drops redundant ones.
fn minimalize(comps: Vec<PrimaryComponent>) -> Result<Vec<PrimaryComponent>> {
    let mut merged: Vec<PrimaryComponent> = Vec::new();
    for c in comps {
        match merged.iter_mut().find(|m| m.prime.equals(&c.prime)) {
            Some(m) => m.primary = m.primary.intersect(&c.primary)?.canonical(),
            None => merged.push(c),
        }
    }
    let mut i = merged.len();
    while i > 0 {
        i -= 1;
        if merged.len() == 1 {
            break;
        }
        let others: Vec<Ideal> =
            merged.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, c)| c.primary.clone()).collect();
        if Ideal::intersect_all(&others)?.is_subset_of(&merged[i].primary) {
            merged.remove(i);
        }
    }
    Ok(merged)
}

/// Sort key: dimension (descending), the smallest maximal independent set,
/// the degree of the residue field over it, and the printed basis.
fn prime_key(p: &Ideal) -> Result<(std::cmp::Reverse<usize>, Vec<usize>, usize, String)> {
    let (dim, sets) = p.dimension()?;
    let s = sets.into_iter().next().unwrap_or_default();
    let d = standard_monomials_over(p, &s).map(|m| m.len()).unwrap_or(0);
    let printed: Vec<String> = p.basis().iter().map(|g| g.to_string()).collect();
    Ok((std::cmp::Reverse(dim), s, d, printed.join(";")))
}

/// Sorts primes so that strict containment implies an earlier index.
pub fn sort_primes(primes: Vec<Ideal>) -> Result<Vec<Ideal>> {
    let mut keyed = primes.into_iter().map(|p| Ok((prime_key(&p)?, p))).collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, p)| p.canonical()).collect())
}

/// A minimal primary decomposition, ordered by prime, and the engine used.
pub fn primary_decomposition_with(
    ideal: &Ideal,
    opts: &DecomposeOptions,
) -> Result<(Vec<PrimaryComponent>, DecompositionSource)> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        let z = Ideal::zero(ideal.ring());
        return Ok((vec![PrimaryComponent { primary: z.clone(), prime: z }], DecompositionSource::Monomial));
    }
    let (raw, source) = raw_components(ideal, opts)?;
    let comps = minimalize(raw)?;
    let mut keyed = comps.into_iter().map(|c| Ok((prime_key(&c.prime)?, c))).collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let out = keyed
        .into_iter()
        .map(|(_, c)| PrimaryComponent { primary: c.primary.canonical(), prime: c.prime.canonical() })
        .collect();
    Ok((out, source))
}

pub fn primary_decomposition(ideal: &Ideal) -> Result<Vec<PrimaryComponent>> {
    Ok(primary_decomposition_with(ideal, &DecomposeOptions::default())?.0)
}

pub fn associated_primes(ideal: &Ideal) -> Result<Vec<Ideal>> {
    Ok(primary_decomposition(ideal)?.into_iter().map(|c| c.prime).collect())
}

/// Accepts primes computed elsewhere after basic sanity checks: each must be
/// proper, contain `I`, and be distinct from the others.
pub fn load_external_decomposition(ideal: &Ideal, primes: Vec<Ideal>) -> Result<(Vec<Ideal>, DecompositionSource)> {
    let mut seen: Vec<Ideal> = Vec::new();
    for p in primes {
        if p.is_unit() {
            return Err(Error::InvalidDecomposition(format!("{p} is not a proper ideal")));
        }
        if !ideal.is_subset_of(&p) {
            return Err(Error::InvalidDecomposition(format!("{p} does not contain the ideal")));
        }
        if !seen.iter().any(|q| q.equals(&p)) {
            seen.push(p);
        }
    }
    if seen.is_empty() {
        return Err(Error::InvalidDecomposition("no primes supplied".into()));
    }
    Ok((sort_primes(seen)?, DecompositionSource::Supplied))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::{Ring, RingRef};

    fn ring() -> RingRef {
        Ring::grevlex(&["x", "y", "z"]).unwrap()
    }

    /// Isolated components are unique and compared exactly; an embedded
    /// component only has to have the expected radical.
    fn check(i: &Ideal, expected: &[&str]) {
        let comps = primary_decomposition(i).unwrap();
        assert_eq!(comps.len(), expected.len());
        for (c, e) in comps.iter().zip(expected) {
            let e = Ideal::parse(e, i.ring()).unwrap();
            let embedded = comps.iter().any(|d| !d.prime.equals(&c.prime) && d.prime.is_subset_of(&c.prime));
            if embedded {
                assert!(c.prime.equals(&zero_dim_radical_of(&e)), "{} vs {e}", c.prime);
            } else {
                assert!(c.primary.equals(&e), "{} vs {e}", c.primary);
            }
        }
        let inter = Ideal::intersect_all(&comps.iter().map(|c| c.primary.clone()).collect::<Vec<_>>()).unwrap();
        assert!(inter.equals(i));
    }

    fn zero_dim_radical_of(q: &Ideal) -> Ideal {
        crate::decompose::zerodim::zero_dim_radical(q, &[]).unwrap()
    }

    #[test]
    fn four_component_example() {
        let r = ring();
        let i = Ideal::parse(
            "x*y*z^2; x*y^2*z; x^2*y*z; y^2*z^2; 2*x*y*z - x*z^2 + y*z^3; 2*x*y*z - x^2*y + x^3*z; 2*x*y*z - y^2*z + x*y^3",
            &r,
        )
        .unwrap();
        // the printed second component with y^2*z is not primary; its
        // primary part is the one with z^2
        let printed = ["y^2; z^2; y - x*z", "x^2; y^2*z; z - x*y", "x^2; y^2; x - y*z"];
        let qs: Vec<Ideal> = printed.iter().map(|s| Ideal::parse(s, &r).unwrap()).collect();
        assert!(!qs[1].equals(&Ideal::parse("x^2; z^2; z - x*y", &r).unwrap()));
        let q4 = Ideal::parse("x^3; y^3; z^3; x*y^2; y*z^2; z*x^2; 2*x*y*z - x^2*y; 2*x*y*z - y^2*z; 2*x*y*z - z^2*x", &r);
        let mut all = qs.clone();
        all.push(q4.unwrap());
        assert!(!Ideal::intersect_all(&all).unwrap().equals(&i));
        check(
            &i,
            &[
                "y^2; z^2; y - x*z",
                "x^2; z^2; z - x*y",
                "x^2; y^2; x - y*z",
                "x^3; y^3; z^3; x*y^2; y*z^2; z*x^2; 2*x*y*z - x^2*y; 2*x*y*z - y^2*z; 2*x*y*z - z^2*x",
            ],
        );
    }

    #[test]
    fn cubic_cone() {
        let r = ring();
        let i = Ideal::parse("x^2*z; y^3 + z^3; x^2*y; x^3 + y^3 + z^3", &r).unwrap();
        let listed = ["y + z; x^2", "y^2 - y*z + z^2; x^2", "y + z; z^2; x^2*z; x^3"];
        check(&i, &listed);
        let qs: Vec<Ideal> = listed.iter().map(|s| Ideal::parse(s, &r).unwrap()).collect();
        assert!(Ideal::intersect_all(&qs).unwrap().equals(&i));
        let primes = associated_primes(&i).unwrap();
        assert!(primes[2].equals(&Ideal::parse("x; y; z", &r).unwrap()));
    }

    #[test]
    fn monomial_primes_in_order() {
        let r = ring();
        let i = Ideal::parse("x^2*y; x^2*z; x*y^2; x*y*z^2", &r).unwrap();
        let primes = associated_primes(&i).unwrap();
        let expect = ["x", "y; z", "x; y", "x; y; z"];
        for (p, e) in primes.iter().zip(expect) {
            assert!(p.equals(&Ideal::parse(e, &r).unwrap()));
        }
    }

    #[test]
    fn supplied_primes() {
        let r = ring();
        let i = Ideal::parse("x^2*y; x^2*z; x*y^2; x*y*z^2", &r).unwrap();
        let ps = ["x; y; z", "x", "x; y", "y; z"].map(|s| Ideal::parse(s, &r).unwrap()).to_vec();
        let (sorted, src) = load_external_decomposition(&i, ps).unwrap();
        assert_eq!(src, DecompositionSource::Supplied);
        let engine = associated_primes(&i).unwrap();
        assert!(sorted.iter().zip(&engine).all(|(a, b)| a.equals(b)));
        assert!(load_external_decomposition(&i, vec![Ideal::unit(&r)]).is_err());
        assert!(load_external_decomposition(&i, vec![Ideal::parse("y", &r).unwrap()]).is_err());
    }

    #[test]
    fn prime_is_its_own_decomposition() {
        let r = ring();
        let p = Ideal::parse("x - y^2; z", &r).unwrap();
        let primes = associated_primes(&p).unwrap();
        assert_eq!(primes.len(), 1);
        assert!(primes[0].equals(&p));
    }
}
