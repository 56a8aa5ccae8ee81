use std::sync::OnceLock;

use noether::decompose::standard_pairs;
use noether::diffprim::{get_pde, solve_pde, DifferentialPrimaryDecomposition, OperatorOracle, SolveOptions};
use noether::ideal::Ideal;
use noether::poly::{Monomial, Polynomial, Ring, RingRef, Q};
use noether::residue::ResidueFieldContext;
use proptest::prelude::*;

const GOLDEN: &[&str] = &[
    "x^2*y; x^2*z; x*y^2; x*y*z^2",
    "x*y*z^2; x*y^2*z; x^2*y*z; y^2*z^2; 2*x*y*z - x*z^2 + y*z^3; 2*x*y*z - x^2*y + x^3*z; 2*x*y*z - y^2*z + x*y^3",
    "x^2*z; y^3 + z^3; x^2*y; x^3 + y^3 + z^3",
    "x^3; x*y; y^2*z^2",
    "x*z - y^2; x^3 - y*z",
    "x^2 - y*z; x*z^2",
];

fn ring() -> RingRef {
    Ring::grevlex(&["x", "y", "z"]).unwrap()
}

struct Golden {
    ideal: Ideal,
    solution: DifferentialPrimaryDecomposition,
    oracle: OperatorOracle,
}

fn golden() -> &'static [Golden] {
    static CELL: OnceLock<Vec<Golden>> = OnceLock::new();
    CELL.get_or_init(|| {
        let r = ring();
        GOLDEN
            .iter()
            .map(|g| {
                let ideal = Ideal::parse(g, &r).unwrap();
                let solution = solve_pde(&ideal, None, &SolveOptions::default()).unwrap();
                let oracle = OperatorOracle::new(&solution.components).unwrap();
                Golden { ideal, solution, oracle }
            })
            .collect()
    })
}

fn build(ring: &RingRef, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(ring, terms.iter().map(|(e, c)| (Monomial(e.clone()), Q::from_integer((*c).into()))).collect())
}

/// Terms of total degree at most `deg` in three variables.
fn arb_poly(deg: u32, terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0..=deg, 3).prop_filter("degree", move |e| e.iter().sum::<u32>() <= deg), -5i64..=5),
        0..=terms,
    )
}

#[test]
fn roundtrip_and_counts() {
    for g in golden() {
        let d = &g.solution;
        assert_eq!(d.verified, Some(true));
        assert!(get_pde(&d.components).unwrap().equals(&g.ideal), "{}", g.ideal);
        assert_eq!(d.amult, d.components.iter().map(|c| c.multiplicity).sum::<usize>());
        for c in &d.components {
            assert!(!c.operators.is_empty());
            assert_eq!(c.operators.len(), c.multiplicity);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn operators_decide_membership(
        tail in arb_poly(6, 4),
        mult in prop::collection::vec(arb_poly(3, 2), 7),
        inside in any::<bool>(),
    ) {
        let r = ring();
        for g in golden() {
            let mut f = if inside { Polynomial::zero(&r) } else { build(&r, &tail) };
            for (h, m) in g.ideal.gens().iter().zip(&mult) {
                let part = h.mul(&build(&r, m));
                if part.total_degree().is_some_and(|d| d <= 6) {
                    f = f.add(&part);
                }
            }
            if inside && f.is_zero() {
                f = build(&r, &tail);
            }
            prop_assert_eq!(g.oracle.contains(&f).unwrap(), g.ideal.contains(&f), "{} with f = {}", g.ideal, f);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn order_bound(factors in prop::collection::vec((prop::collection::vec(arb_poly(2, 2), 4), 0usize..4), 1..=6)) {
        let r = ring();
        for g in golden() {
            for c in &g.solution.components {
                let ctx = ResidueFieldContext::new(&c.prime, &c.basis_vars).unwrap();
                let pgens = c.prime.gens();
                for op in &c.operators {
                    let m = op.order().unwrap() as usize;
                    // A product of m + 1 random elements of the prime.
                    let mut f = Polynomial::one_in(&r);
                    for k in 0..=m {
                        let (coeffs, pick) = &factors[k % factors.len()];
                        let mut elem = Polynomial::zero(&r);
                        for (j, p) in pgens.iter().enumerate() {
                            let coef = build(&r, &coeffs[(j + k) % coeffs.len()]);
                            elem = elem.add(&p.mul(&coef));
                        }
                        if elem.is_zero() {
                            elem = pgens[pick % pgens.len()].clone();
                        }
                        f = f.mul(&elem);
                    }
                    prop_assert!(ctx.reduce(&op.apply(&f).unwrap()).is_zero(), "{} at {}", op, c.prime);
                }
            }
        }
    }
}

fn arb_monomial_ideal() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1usize..=4).prop_flat_map(|n| {
        let gen = prop::collection::vec(0u32..=4, n)
            .prop_filter("degree 1..=4", |e| (1..=4).contains(&e.iter().sum::<u32>()));
        (Just(n), prop::collection::vec(gen, 1..=4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn amult_counts_standard_pairs((n, gens) in arb_monomial_ideal()) {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let r = Ring::grevlex(&names).unwrap();
        let i = Ideal::new(&r, gens.iter().map(|g| Polynomial::monomial(&r, Monomial(g.clone()), Q::from_integer(1.into()))).collect());
        let d = solve_pde(&i, None, &SolveOptions::default()).unwrap();
        prop_assert_eq!(d.amult, standard_pairs(&i).unwrap().len(), "{}", i);
    }
}
