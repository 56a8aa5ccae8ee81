use noether::ideal::Ideal;
use noether::poly::{Monomial, Polynomial, Ring, RingRef, Q};
use noether::residue::{field_kernel, field_rref, ResidueElement, ResidueFieldContext};
use num_bigint::BigInt;
use proptest::prelude::*;

fn ring() -> RingRef {
    Ring::grevlex(&["x", "y", "s"]).unwrap()
}

/// `<x^d - 2*s - 2, y - r(x, s)>`: Eisenstein in `x` at 2, so prime of
/// residue degree `d` over `QQ(s)`, or over `QQ` after `s = 0`.
fn context(d: u32, r_terms: &[(u32, u32, i64)], with_s: bool) -> ResidueFieldContext {
    let r = ring();
    let x = Polynomial::var(&r, 0);
    let s = Polynomial::var(&r, 2);
    let mut first = x.pow(d).sub(&Polynomial::from_i64(&r, 2));
    if with_s {
        first = first.sub(&s.mul(&Polynomial::from_i64(&r, 2)));
    }
    let mut second = Polynomial::var(&r, 1);
    for &(ex, es, c) in r_terms {
        if ex < d && (with_s || es == 0) {
            second = second.sub(&Polynomial::monomial(&r, Monomial(vec![ex, 0, es]), Q::from_integer(c.into())));
        }
    }
    let mut gens = vec![first, second];
    if !with_s {
        gens.push(s);
    }
    let prime = Ideal::new(&r, gens);
    ResidueFieldContext::new(&prime, if with_s { &[2] } else { &[] }).unwrap()
}

fn element(ctx: &ResidueFieldContext, terms: &[(Vec<u32>, i64)]) -> ResidueElement {
    let r = ctx.ring().clone();
    let f = Polynomial::from_terms(&r, terms.iter().map(|(e, c)| (Monomial(e.clone()), Q::from_integer((*c).into()))).collect());
    ctx.reduce(&f)
}

fn arb_terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), -4i64..=4), 0..=4)
}

fn arb_context() -> impl Strategy<Value = (u32, Vec<(u32, u32, i64)>, bool)> {
    (1u32..=4, prop::collection::vec((0u32..4, 0u32..2, -2i64..=2), 0..=3), any::<bool>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn degree_matches_construction((d, rt, with_s) in arb_context()) {
        let ctx = context(d, &rt, with_s);
        prop_assert_eq!(ctx.degree(), d as usize);
        prop_assert_eq!(ctx.std_monomials().len(), d as usize);
    }

    #[test]
    fn lift_then_reduce((d, rt, with_s) in arb_context(), a in arb_terms()) {
        let ctx = context(d, &rt, with_s);
        let a = element(&ctx, &a);
        let (num, den) = ctx.lift_polynomial(&a);
        let back = ctx.div(&ctx.reduce(&num), &ctx.reduce(&den)).unwrap();
        prop_assert_eq!(&back, &a);
        let (num2, den2) = ctx.lift_polynomial(&back);
        prop_assert_eq!(ctx.div(&ctx.reduce(&num2), &ctx.reduce(&den2)).unwrap(), a);
    }

    #[test]
    fn inverse((d, rt, with_s) in arb_context(), a in arb_terms(), b in arb_terms()) {
        let ctx = context(d, &rt, with_s);
        let a = element(&ctx, &a);
        let b = element(&ctx, &b);
        prop_assume!(!a.is_zero());
        let inv = ctx.invert(&a).unwrap();
        prop_assert_eq!(ctx.mul(&a, &inv), ctx.one());
        prop_assert_eq!(ctx.mul(&ctx.div(&b, &a).unwrap(), &a), b);
    }

    #[test]
    fn rank_nullity((d, rt, with_s) in arb_context(), cells in prop::collection::vec(arb_terms(), 1..=12), ncols in 1usize..=4) {
        let ctx = context(d.min(3), &rt, with_s);
        let matrix: Vec<Vec<ResidueElement>> =
            cells.chunks(ncols).filter(|c| c.len() == ncols).map(|row| row.iter().map(|t| element(&ctx, t)).collect()).collect();
        prop_assume!(!matrix.is_empty());
        let red = ctx.row_reduce(&matrix, ncols).unwrap();
        prop_assert_eq!(red.rank + red.kernel.len(), ncols);
        for v in &red.kernel {
            for row in &matrix {
                let mut acc = ctx.zero();
                for (x, y) in row.iter().zip(v) {
                    acc = ctx.add(&acc, &ctx.mul(x, y));
                }
                prop_assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn rank_nullity_over_q(cells in prop::collection::vec(-3i64..=3, 1..=20), ncols in 1usize..=5) {
        let matrix: Vec<Vec<Q>> =
            cells.chunks(ncols).filter(|c| c.len() == ncols).map(|row| row.iter().map(|&c| Q::from_integer(c.into())).collect()).collect();
        prop_assume!(!matrix.is_empty());
        let (rows, pivots) = field_rref(&matrix, ncols);
        let kernel = field_kernel(&matrix, ncols, &Q::from_integer(1.into()));
        prop_assert_eq!(rows.len(), pivots.len());
        prop_assert_eq!(rows.len() + kernel.len(), ncols);
        for v in &kernel {
            for row in &matrix {
                let dot: Q = row.iter().zip(v).map(|(a, b)| a * b).sum();
                prop_assert_eq!(dot, Q::from_integer(BigInt::from(0)));
            }
        }
    }
}

#[test]
fn degree_of_homogeneous_primes() {
    let r = Ring::grevlex(&["x", "y", "z", "w"]).unwrap();
    for gens in ["x*z - y^2; x*w - y*z; y*w - z^2", "x^2 + y^2 - z^2; w", "x; y", "x^3 - y*z^2 + w^3; w - z"] {
        let p = Ideal::parse(gens, &r).unwrap();
        let s = p.independent_set().unwrap();
        let ctx = ResidueFieldContext::new(&p, &s).unwrap();
        let (_, deg) = p.hilbert_degree().unwrap();
        assert_eq!(BigInt::from(ctx.degree()), deg, "{gens}");
    }
}
