//! Polynomial factorization: univariate over the rationals (Zassenhaus:
//! factor modulo a small prime, Hensel lift, recombine) and in one chief
//! variable over a rational function field (Kronecker substitution).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::field::Q;
use crate::poly::gcd::{content_in, poly_gcd};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::Polynomial;
use crate::poly::ring::{Ring, RingRef};

/// Dense integer polynomial, index = degree.
type ZPoly = Vec<BigInt>;
/// Dense polynomial over a small prime field.
type FPoly = Vec<u64>;

fn z_trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_trim(out)
}

fn z_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn z_primitive(p: &[BigInt]) -> ZPoly {
    let c = z_content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().is_some_and(Signed::is_negative) { -BigInt::one() } else { BigInt::one() };
    p.iter().map(|x| x / &c * &sign).collect()
}

/// Exact quotient over the integers, if `b` divides `a`.
fn z_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut r: ZPoly = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() < b.len() {
        return if r.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db];
        if c.is_zero() {
            continue;
        }
        let (qc, rem) = c.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &qc * bj;
        }
        q[i] = qc;
    }
    if r.iter().all(Zero::is_zero) {
        Some(z_trim(q))
    } else {
        None
    }
}

fn modp(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("small residue")
}

fn f_trim(mut p: FPoly) -> FPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn f_inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn f_mul(a: &[u64], b: &[u64], p: u64) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    f_trim(out)
}

fn f_sub(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let n = a.len().max(b.len());
    f_trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn f_add(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let n = a.len().max(b.len());
    f_trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn f_divrem(a: &[u64], b: &[u64], p: u64) -> (FPoly, FPoly) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = f_inv(b[db], p);
    if r.len() < b.len() {
        return (Vec::new(), f_trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + p - c * bj % p) % p;
        }
        q[i] = c;
    }
    r.truncate(db);
    (f_trim(q), f_trim(r))
}

fn f_monic(a: &[u64], p: u64) -> FPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = f_inv(l, p);
            a.iter().map(|&x| x * inv % p).collect()
        }
    }
}

fn f_gcd(a: &[u64], b: &[u64], p: u64) -> FPoly {
    let (mut a, mut b) = (f_trim(a.to_vec()), f_trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = f_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    f_monic(&a, p)
}

/// Extended Euclid: `s·a + t·b = 1` for coprime `a`, `b`.
fn f_xgcd(a: &[u64], b: &[u64], p: u64) -> (FPoly, FPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (FPoly, FPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (FPoly, FPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = f_divrem(&r0, &r1, p);
        let s2 = f_sub(&s0, &f_mul(&q, &s1, p), p);
        let t2 = f_sub(&t0, &f_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let inv = f_inv(*r0.last().expect("coprime"), p);
    let scale = |v: &FPoly| f_trim(v.iter().map(|&x| x * inv % p).collect());
    (scale(&s0), scale(&t0))
}

fn f_powmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> FPoly {
    let mut result: FPoly = vec![1];
    let (_, mut b) = f_divrem(base, m, p);
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            result = f_divrem(&f_mul(&result, &b, p), m, p).1;
        }
        if i + 1 < bits {
            b = f_divrem(&f_mul(&b, &b, p), m, p).1;
        }
    }
    result
}

fn f_derivative(a: &[u64], p: u64) -> FPoly {
    f_trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn ddf(f: &[u64], p: u64) -> Vec<(FPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x: FPoly = vec![0, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            out.push((f.clone(), f.len() - 1));
            break;
        }
        h = f_powmod(&h, &pe, &f, p);
        let g = f_gcd(&f, &f_sub(&h, &x, p), p);
        if g.len() > 1 {
            f = f_divrem(&f, &g, p).0;
            h = f_divrem(&h, &f, p).1;
            out.push((g, d));
        }
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus) into monic degree-`d` factors.
fn edf(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<FPoly> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.to_vec()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: FPoly = f_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = f_sub(&f_powmod(&a, &e, f, p), &[1], p);
        let g = f_gcd(f, &b, p);
        if g.len() > 1 && g.len() < f.len() {
            let q = f_monic(&f_divrem(f, &g, p).0, p);
            let mut out = edf(&g, d, p, rng);
            out.extend(edf(&q, d, p, rng));
            return out;
        }
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Smallest prime `p >= 13` not dividing the leading coefficient and keeping
/// `f` squarefree modulo `p`.
fn choose_prime(f: &[BigInt]) -> u64 {
    let mut p = 13u64;
    loop {
        if is_prime(p) && modp(f.last().expect("nonzero"), p) != 0 {
            let fp = f_trim(f.iter().map(|c| modp(c, p)).collect());
            let g = f_gcd(&fp, &f_derivative(&fp, p), p);
            if g.len() == 1 {
                return p;
            }
        }
        p += 1;
    }
}

fn sym_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn z_mod(a: &[BigInt], m: &BigInt) -> ZPoly {
    z_trim(a.iter().map(|x| x.mod_floor(m)).collect())
}

fn to_z(a: &[u64]) -> ZPoly {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

/// Lifts `f ≡ u0·w0 (mod p)` (all monic) to `f ≡ u·w (mod m)`, `m = p^k`.
fn hensel_pair(f: &[BigInt], u0: &[u64], w0: &[u64], p: u64, m: &BigInt) -> (ZPoly, ZPoly) {
    let (s, t) = f_xgcd(u0, w0, p);
    let mut u = to_z(u0);
    let mut w = to_z(w0);
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    while &pk < m {
        let uw = z_mul(&u, &w);
        let n = f.len().max(uw.len());
        let e: ZPoly = (0..n)
            .map(|i| f.get(i).cloned().unwrap_or_default() - uw.get(i).cloned().unwrap_or_default())
            .collect();
        let c: FPoly = f_trim(e.iter().map(|x| modp(&(x / &pk), p)).collect());
        if !c.is_empty() {
            let (q, sigma) = f_divrem(&f_mul(&s, &c, p), w0, p);
            let tau = f_divrem(&f_add(&f_mul(&t, &c, p), &f_mul(&q, u0, p), p), u0, p).1;
            let add = |a: &ZPoly, d: &FPoly| -> ZPoly {
                let n = a.len().max(d.len());
                z_trim(
                    (0..n)
                        .map(|i| a.get(i).cloned().unwrap_or_default() + BigInt::from(d.get(i).copied().unwrap_or(0)) * &pk)
                        .collect(),
                )
            };
            u = add(&u, &tau);
            w = add(&w, &sigma);
        }
        pk *= &pb;
    }
    (z_mod(&u, m), z_mod(&w, m))
}

/// Factors a primitive squarefree integer polynomial into irreducibles.
fn factor_squarefree(f: &[BigInt], rng: &mut ChaCha8Rng) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let p = choose_prime(f);
    let lc = f.last().expect("nonzero").clone();
    let fp = f_trim(f.iter().map(|c| modp(c, p)).collect());
    let fp = f_monic(&fp, p);
    let mut modular: Vec<FPoly> = Vec::new();
    for (g, d) in ddf(&fp, p) {
        modular.extend(edf(&g, d, p, rng));
    }
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    modular.sort();

    // coefficient bound for factors, times the leading coefficient, doubled
    let norm: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = (BigInt::one() << n) * norm * lc.abs() * 2;
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
    }

    // lift every modular factor, peeling one at a time
    let lc_inv_m = mod_inverse(&lc, &m);
    let mut rest: ZPoly = z_mod(&f.iter().map(|c| c * &lc_inv_m).collect::<Vec<_>>(), &m);
    let mut lifted: Vec<ZPoly> = Vec::new();
    for i in 0..modular.len() - 1 {
        let u0 = &modular[i];
        let w0 = modular[i + 1..].iter().fold(vec![1u64], |acc, g| f_mul(&acc, g, p));
        let (u, w) = hensel_pair(&rest, u0, &w0, p, &m);
        lifted.push(u);
        rest = w;
    }
    lifted.push(rest);

    // recombination
    let mut target: ZPoly = f.to_vec();
    let mut remaining: Vec<ZPoly> = lifted;
    let mut found: Vec<ZPoly> = Vec::new();
    let mut k = 1;
    while 2 * k <= remaining.len() {
        let mut hit = None;
        for subset in combinations(remaining.len(), k) {
            let lct = target.last().expect("nonzero").clone();
            let mut g: ZPoly = vec![lct];
            for &i in &subset {
                g = z_mod(&z_mul(&g, &remaining[i]), &m);
            }
            let g: ZPoly = z_trim(g.iter().map(|c| sym_mod(c, &m)).collect());
            let h = z_primitive(&g);
            if let Some(q) = z_div_exact(&target, &h) {
                hit = Some((subset, h, q));
                break;
            }
        }
        match hit {
            Some((subset, h, q)) => {
                found.push(h);
                target = q;
                remaining = remaining.into_iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, g)| g).collect();
            }
            None => k += 1,
        }
    }
    if target.len() > 1 {
        found.push(z_primitive(&target));
    }
    found
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    e.x.mod_floor(m)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 && idx[0] == n - k {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Factorization of a univariate polynomial: the rational content and the
/// irreducible primitive factors (positive leading coefficient) with
/// multiplicities, sorted by degree then coefficients.
pub fn factor_univariate_rational(f: &Polynomial) -> Result<(Q, Vec<(Polynomial, u32)>)> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let support = f.support();
    if support.len() > 1 {
        return Err(Error::InvalidOperator("polynomial is not univariate".into()));
    }
    let ring = f.ring().clone();
    let v = support.first().copied().unwrap_or(0);
    let prim = f.primitive();
    let content = f.lc().expect("nonzero") / prim.lc().expect("nonzero");
    if support.is_empty() {
        return Ok((content, Vec::new()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition(&prim, v) {
        let z = to_dense(&g, v);
        for h in factor_squarefree(&z, &mut rng) {
            out.push((from_dense(&h, &ring, v), e));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree_in(v).cmp(&b.0.degree_in(v)).then_with(|| a.0.to_string().cmp(&b.0.to_string())).then(a.1.cmp(&b.1))
    });
    Ok((content, out))
}

fn to_dense(p: &Polynomial, v: usize) -> ZPoly {
    let p = p.primitive();
    let mut out = vec![BigInt::zero(); p.degree_in(v) as usize + 1];
    for (m, c) in p.terms() {
        out[m.0[v] as usize] = c.numer().clone();
    }
    out
}

fn from_dense(h: &[BigInt], ring: &RingRef, v: usize) -> Polynomial {
    let terms = h
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let mut m = Monomial::one(ring.nvars());
            m.0[v] = i as u32;
            (m, Q::from_integer(c.clone()))
        })
        .collect();
    Polynomial::from_terms(ring, terms).primitive()
}

/// Yun's squarefree decomposition in variable `v` (other variables are
/// coefficients); `f` must be primitive in `v`. Returns primitive parts.
pub fn squarefree_decomposition(f: &Polynomial, v: usize) -> Vec<(Polynomial, u32)> {
    let mut out = Vec::new();
    let fd = f.derivative(v);
    if fd.is_zero() {
        return out;
    }
    let a0 = poly_gcd(f, &fd);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = fd.exact_div(&a0).expect("gcd divides");
    let mut d = c.sub(&b.derivative(v));
    let mut i = 1u32;
    while b.degree_in(v) > 0 {
        let a = poly_gcd(&b, &d);
        if a.degree_in(v) > 0 {
            out.push((a.primitive(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = c.sub(&b.derivative(v));
        i += 1;
    }
    out
}

/// Squarefree part in variable `v` (up to a factor free of `v`).
pub fn squarefree_part(f: &Polynomial, v: usize) -> Polynomial {
    let fd = f.derivative(v);
    if fd.is_zero() {
        return f.primitive();
    }
    let g = poly_gcd(f, &fd);
    f.exact_div(&g).expect("gcd divides").primitive()
}

/// Limits for factoring over `QQ(U)`.
#[derive(Clone, Copy, Debug)]
pub struct FactorBudget {
    pub max_degree: u32,
    pub max_params: usize,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget { max_degree: 12, max_params: 2 }
    }
}

/// Irreducible factors over `QQ(U)[t]` of `f ∈ QQ[t, U]`, where `U` is the
/// set of all other variables occurring in `f`. Factors free of `t` are
/// dropped (they are units); the rest are primitive with multiplicities.
pub fn factor_over_fraction_field(f: &Polynomial, t: usize, budget: FactorBudget) -> Result<Vec<(Polynomial, u32)>> {
    let params: Vec<usize> = f.support().into_iter().filter(|&v| v != t).collect();
    if f.degree_in(t) == 0 {
        return Ok(Vec::new());
    }
    let cont = content_in(f, t);
    let prim = f.exact_div(&cont).expect("content divides").primitive();
    if params.is_empty() {
        return Ok(factor_univariate_rational(&prim)?.1);
    }
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition(&prim, t) {
        for h in factor_squarefree_multivariate(&g, t, &params, budget)? {
            out.push((h, e));
        }
    }
    out.sort_by(|a, b| a.0.degree_in(t).cmp(&b.0.degree_in(t)).then_with(|| a.0.to_string().cmp(&b.0.to_string())));
    Ok(out)
}

fn factor_squarefree_multivariate(
    g: &Polynomial,
    t: usize,
    params: &[usize],
    budget: FactorBudget,
) -> Result<Vec<Polynomial>> {
    if g.degree_in(t) <= 1 {
        return Ok(vec![g.primitive()]);
    }
    // an irreducible specialization certifies irreducibility
    if let Some(true) = specialization_irreducible(g, t, params) {
        return Ok(vec![g.primitive()]);
    }
    let deg = g.total_degree().unwrap_or(0);
    if deg > budget.max_degree || params.len() > budget.max_params {
        return Err(Error::BudgetExceeded(format!(
            "factoring a polynomial of total degree {deg} in {} parameters",
            params.len()
        )));
    }
    kronecker_factor(g, t, params)
}

fn specialization_irreducible(g: &Polynomial, t: usize, params: &[usize]) -> Option<bool> {
    let lc_t = crate::poly::gcd::coeffs_in(g, t).pop()?;
    let dt = g.degree_in(t);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..8 {
        let point: Vec<Q> = params.iter().map(|_| Q::from_integer(BigInt::from(rng.gen_range(-7i64..=7)))).collect();
        let mut lc_val = lc_t.clone();
        let mut img = g.clone();
        for (k, &v) in params.iter().enumerate() {
            lc_val = lc_val.eval_var(v, &point[k]);
            img = img.eval_var(v, &point[k]);
        }
        if lc_val.is_zero() || img.degree_in(t) != dt {
            continue;
        }
        let sq = squarefree_part(&img, t);
        if sq.degree_in(t) != dt {
            continue;
        }
        let (_, fs) = factor_univariate_rational(&img).ok()?;
        return Some(fs.len() == 1 && fs[0].1 == 1);
    }
    None
}

fn kronecker_factor(g: &Polynomial, t: usize, params: &[usize]) -> Result<Vec<Polynomial>> {
    let ring = g.ring().clone();
    let vars: Vec<usize> = std::iter::once(t).chain(params.iter().copied()).collect();
    let d = 1 + vars.iter().map(|&v| g.degree_in(v)).max().unwrap_or(0) as u64;
    let uni_ring = Ring::grevlex(&["t"]).expect("valid");
    let weight: Vec<u64> = (0..vars.len()).map(|k| d.pow(k as u32)).collect();
    let image = |p: &Polynomial| -> Polynomial {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let e: u64 = vars.iter().zip(&weight).map(|(&v, w)| m.0[v] as u64 * w).sum();
                (Monomial(vec![e as u32]), c.clone())
            })
            .collect();
        Polynomial::from_terms(&uni_ring, terms)
    };
    let preimage = |p: &Polynomial| -> Option<Polynomial> {
        let mut terms = Vec::new();
        for (m, c) in p.terms() {
            let mut e = m.0[0] as u64;
            let mut mono = Monomial::one(ring.nvars());
            for &v in &vars {
                mono.0[v] = (e % d) as u32;
                e /= d;
            }
            if e != 0 {
                return None;
            }
            terms.push((mono, c.clone()));
        }
        Some(Polynomial::from_terms(&ring, terms))
    };

    let (_, ufs) = factor_univariate_rational(&image(g))?;
    let mut pieces: Vec<Polynomial> = Vec::new();
    for (h, e) in ufs {
        for _ in 0..e {
            pieces.push(h.clone());
        }
    }
    if pieces.len() > 20 {
        return Err(Error::BudgetExceeded(format!("{} univariate images to recombine", pieces.len())));
    }
    let mut target = g.primitive();
    let mut found = Vec::new();
    let mut k = 1;
    while 2 * k <= pieces.len() {
        let mut hit = None;
        for subset in combinations(pieces.len(), k) {
            let prod = subset.iter().fold(Polynomial::one_in(&uni_ring), |acc, &i| acc.mul(&pieces[i]));
            let Some(cand) = preimage(&prod) else { continue };
            let cand = cand.primitive();
            if cand.degree_in(t) == 0 {
                continue;
            }
            if let Some(q) = target.exact_div(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                target = q;
                pieces = pieces.into_iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, p)| p).collect();
            }
            None => k += 1,
        }
    }
    if target.degree_in(t) > 0 {
        found.push(target.primitive());
    }
    Ok(found)
}
