use noether::groebner::{buchberger, eliminate, reduce};
use noether::ideal::Ideal;
use noether::poly::{Field, Monomial, Polynomial, Ring, RingRef, Q};
use num_traits::One;
use proptest::prelude::*;

fn ring(n: usize) -> RingRef {
    let names: Vec<String> = (0..n).map(|i| ["x", "y", "z", "w"][i].to_string()).collect();
    Ring::grevlex(&names).unwrap()
}

fn build(ring: &RingRef, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(ring, terms.iter().map(|(e, c)| (Monomial(e.clone()), Q::from_integer((*c).into()))).collect())
}

fn arb_gens(n: usize, deg: u32, count: usize) -> impl Strategy<Value = Vec<Vec<(Vec<u32>, i64)>>> {
    prop::collection::vec(prop::collection::vec((prop::collection::vec(0..=deg, n), -3i64..=3), 1..=3), 1..=count)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, mg) = (f.lm().unwrap(), g.lm().unwrap());
    let l = mf.lcm(mg);
    let a = f.mul_term(&l.div(mf).unwrap(), &f.lc().unwrap().inverse());
    let b = g.mul_term(&l.div(mg).unwrap(), &g.lc().unwrap().inverse());
    a.sub(&b)
}

/// All monomials of degree exactly `d` in `n` variables.
fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|k| {
            monomials_of_degree(n - 1, d - k).into_iter().map(move |mut rest| {
                rest.insert(0, k);
                rest
            })
        })
        .collect()
}

/// Rank of rational row vectors by plain elimination.
fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let piv = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if !row[c].is_zero() {
                let k = row[c].clone() / piv[c].clone();
                for (x, y) in row.iter_mut().zip(&piv) {
                    *x = x.clone() - k.clone() * y.clone();
                }
            }
        }
        r += 1;
    }
    r
}

/// Membership of a homogeneous `f` of degree `d` in the ideal generated by
/// homogeneous `gens`: `f` must lie in the span of all `x^a * g` of degree `d`.
fn brute_force_member(f: &Polynomial, gens: &[Polynomial], n: usize, d: u32) -> bool {
    let cols = monomials_of_degree(n, d);
    let vec_of = |p: &Polynomial| -> Vec<Q> {
        cols.iter().map(|m| p.coefficient(&Monomial(m.clone())).cloned().unwrap_or_else(|| Q::from_integer(0.into()))).collect()
    };
    let mut rows = Vec::new();
    for g in gens {
        let dg = g.total_degree().unwrap();
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(n, d - dg) {
            rows.push(vec_of(&g.mul_term(&Monomial(m), &Q::one())));
        }
    }
    let base = rank(rows.clone());
    rows.push(vec_of(f));
    rank(rows) == base
}

fn homogenize(terms: &[(Vec<u32>, i64)], d: u32) -> Vec<(Vec<u32>, i64)> {
    terms
        .iter()
        .map(|(e, c)| {
            let mut e = e.clone();
            let deg: u32 = e.iter().sum();
            if deg < d {
                e[0] += d - deg;
            }
            (e, *c)
        })
        .filter(|(e, _)| e.iter().sum::<u32>() == d)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn s_pairs_reduce_to_zero(gens in arb_gens(3, 3, 4)) {
        let r = ring(3);
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = buchberger(&gens);
        let basis = gb.gens();
        prop_assume!(basis.len() <= 20);
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                prop_assert!(reduce(&s_polynomial(&basis[i], &basis[j]), basis).is_zero());
            }
        }
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
    }

    #[test]
    fn reduced_basis_is_unique(gens in arb_gens(3, 3, 4), perm in any::<u64>()) {
        let r = ring(3);
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let mut shuffled = gens.clone();
        let k = shuffled.len();
        for i in (1..k).rev() {
            shuffled.swap(i, (perm as usize >> (i % 32)) % (i + 1));
        }
        shuffled = shuffled.into_iter().map(|g| g.scale(&Q::new(2.into(), 3.into()))).collect();
        if k > 1 {
            let extra = shuffled[0].add(&shuffled[1]);
            shuffled.push(extra);
        }
        let (a, b) = (buchberger(&gens), buchberger(&shuffled));
        prop_assert_eq!(a.gens(), b.gens());
    }

    #[test]
    fn membership_matches_linear_algebra(gens in arb_gens(3, 3, 3), f in prop::collection::vec((prop::collection::vec(0u32..=3, 3), -3i64..=3), 1..=4), mix in prop::collection::vec(-2i64..=2, 3), d in 2u32..=4) {
        let r = ring(3);
        let gens: Vec<Polynomial> = gens.iter().map(|g| {
            let deg = g.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap().max(1);
            build(&r, &homogenize(g, deg))
        }).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let mut f = build(&r, &homogenize(&f, d));
        // Half the samples are pushed into the ideal.
        for (g, c) in gens.iter().zip(&mix) {
            let dg = g.total_degree().unwrap();
            if dg <= d && *c != 0 {
                let mut e = vec![0u32; 3];
                e[(*c as usize) % 3] = d - dg;
                f = f.add(&g.mul_term(&Monomial(e), &Q::from_integer((*c).into())));
            }
        }
        let ideal = Ideal::new(&r, gens.clone());
        prop_assert_eq!(ideal.contains(&f), brute_force_member(&f, &gens, 3, d));
    }

    #[test]
    fn elimination_stays_in_ideal(gens in arb_gens(3, 2, 3)) {
        let r = ring(3);
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(&r, gens.clone());
        for g in eliminate(&gens, &r, &[0]) {
            prop_assert!(ideal.contains(&g));
            prop_assert_eq!(g.degree_in(0), 0);
        }
    }
}

#[test]
fn elimination_of_twisted_cubic() {
    let r = Ring::grevlex(&["t", "x", "y", "z"]).unwrap();
    let gens = Ideal::parse("x - t; y - t^2; z - t^3", &r).unwrap();
    let elim = Ideal::new(&r, eliminate(gens.gens(), &r, &[0]));
    let expected = Ideal::parse("x*z - y^2; x*y - z; x^2 - y", &r).unwrap();
    assert!(elim.equals(&expected));
}
