//! Differential primary decomposition: Noetherian operators for every
//! associated prime, the arithmetic multiplicity, reconstruction of the ideal
//! from operators, and verification of the result.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::decompose::gtz::primary_decomposition_with;
use crate::decompose::zerodim::{contract, enumerate_standard};
use crate::decompose::{load_external_decomposition, DecomposeOptions, DecompositionSource};
use crate::error::{Error, Result};
use crate::groebner::{from_fraction_field, gb_over_fraction_field, FractionFieldBasis};
use crate::ideal::hilbert_numerator;
use crate::ideal::Ideal;
use crate::poly::field::{Field, Q};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::{same_ring, Poly, Polynomial};
use crate::poly::ratfunc::RatFunc;
use crate::residue::{field_kernel, ResidueElement, ResidueFieldContext};
use crate::weyl::{cmp_partials, DiffOperator, OperatorSet};

/// Operators of order below `m` (coefficients in the residue field) that
/// send the defining ideal into the prime, as a basis in reduced echelon form.
#[derive(Clone, Debug)]
pub struct DualSpace {
    pub m: usize,
    /// Derivative monomials indexing the columns, highest first.
    pub columns: Vec<Monomial>,
    pub rows: Vec<Vec<ResidueElement>>,
    pub pivots: Vec<usize>,
}

impl DualSpace {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// One triple of the decomposition, with its multiplicity.
#[derive(Clone, Debug)]
pub struct DifferentialComponent {
    pub prime: Ideal,
    pub basis_vars: Vec<usize>,
    pub operators: OperatorSet,
    pub multiplicity: usize,
    pub stabilization_order: usize,
}

impl DifferentialComponent {
    /// A component read from outside; the multiplicity is the operator count.
    pub fn supplied(prime: Ideal, basis_vars: Vec<usize>, operators: OperatorSet) -> Self {
        let multiplicity = operators.len();
        DifferentialComponent { prime, basis_vars, operators, multiplicity, stabilization_order: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct DifferentialPrimaryDecomposition {
    pub ideal: Ideal,
    pub components: Vec<DifferentialComponent>,
    pub source: DecompositionSource,
    pub amult: usize,
    /// `Some(true)` once the result passed verification.
    pub verified: Option<bool>,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub decompose: DecomposeOptions,
    /// Largest truncation order tried before giving up.
    pub max_order: usize,
    /// Number of consecutive equal dimensions needed to accept.
    pub window: usize,
    pub verify: bool,
    /// Use the degree-by-degree shortcut where it applies.
    pub graded: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { decompose: DecomposeOptions::default(), max_order: 50, window: 2, verify: true, graded: true }
    }
}

/// Result of [`find_stabilization`].
#[derive(Clone, Debug)]
pub struct Stabilization {
    pub m: usize,
    pub e: DualSpace,
    pub h: Option<DualSpace>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub roundtrip_equal: bool,
    /// Per component, whether its operators send the ideal into the prime.
    pub membership: Vec<bool>,
    /// Per component, the operator count and the recomputed multiplicity.
    pub multiplicities: Vec<Option<(usize, usize)>>,
    pub counterexample: Option<Polynomial>,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Monomials in `deps` of degree below `m`, highest first in grevlex.
pub fn partial_columns(nvars: usize, deps: &[usize], m: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut layer = vec![Monomial::one(nvars)];
    for _ in 0..m {
        out.extend(layer.iter().cloned());
        let next: BTreeSet<Monomial> = layer
            .iter()
            .flat_map(|a| {
                deps.iter().map(move |&v| {
                    let mut b = a.clone();
                    b.0[v] += 1;
                    b
                })
            })
            .collect();
        layer = next.into_iter().collect();
    }
    out.sort_by(|a, b| cmp_partials(b, a));
    out
}

/// `beta! / gamma!` for `gamma <= beta`.
fn factorial_ratio(beta: &Monomial, gamma: &Monomial) -> BigInt {
    let mut acc = BigInt::one();
    for (&b, &g) in beta.0.iter().zip(&gamma.0) {
        for k in g + 1..=b {
            acc *= k;
        }
    }
    acc
}

/// Images in the residue field of all derivatives `d^gamma g` with `gamma`
/// among the columns; zero images are left out.
fn reduced_derivatives(
    g: &Polynomial,
    columns: &[Monomial],
    ctx: &ResidueFieldContext,
) -> HashMap<Monomial, ResidueElement> {
    let mut by_degree: Vec<&Monomial> = columns.iter().collect();
    by_degree.sort_by_key(|c| c.degree());
    let mut derivs: HashMap<Monomial, Polynomial> = HashMap::new();
    let mut out = HashMap::new();
    for gamma in by_degree {
        let d = match gamma.0.iter().position(|&e| e > 0) {
            None => g.clone(),
            Some(v) => {
                let mut parent = gamma.clone();
                parent.0[v] -= 1;
                derivs[&parent].derivative(v)
            }
        };
        if !d.is_zero() {
            let e = ctx.reduce(&d);
            if !e.is_zero() {
                out.insert(gamma.clone(), e);
            }
        }
        derivs.insert(gamma.clone(), d);
    }
    out
}

/// The space of operators `sum c_b d^b` with `|b| < m` and `c_b` in the
/// residue field that kill `x^a g` modulo the prime for all generators `g`
/// and all dependent monomials with `|a| < m`.
///
/// Conditions are imposed on `(x - x0)^a g`, with `x0` the generic point,
/// which spans the same conditions and only involves the Taylor
/// coefficients of `g` at `x0`.
pub fn dual_space(gens: &[Polynomial], ctx: &ResidueFieldContext, m: usize) -> Result<DualSpace> {
    let n = ctx.ring().nvars();
    let columns = partial_columns(n, ctx.dep_vars(), m);
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let red = reduced_derivatives(g, &columns, ctx);
        if red.is_empty() {
            continue;
        }
        for alpha in &columns {
            let mut row = vec![ctx.zero(); columns.len()];
            let mut any = false;
            for (j, beta) in columns.iter().enumerate() {
                let Some(gamma) = beta.div(alpha) else { continue };
                if let Some(e) = red.get(&gamma) {
                    let f = RatFunc::from_q(ctx.s_ring(), Q::from_integer(factorial_ratio(beta, &gamma)));
                    row[j] = ctx.scale(e, &f);
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    let conditions = ctx.row_reduce(&rows, columns.len())?;
    let basis = ctx.row_reduce(&conditions.kernel, columns.len())?;
    Ok(DualSpace { m, columns, rows: basis.rows, pivots: basis.pivots })
}

/// `I_p ∩ R`: saturates by a product of one element from each associated
/// prime not contained in `p`.
pub fn local_component(ideal: &Ideal, prime: &Ideal, all_primes: &[Ideal]) -> Result<Ideal> {
    let mut s = Polynomial::one_in(ideal.ring());
    for q in all_primes {
        if q.is_subset_of(prime) {
            continue;
        }
        let g = q
            .basis()
            .into_iter()
            .find(|g| !prime.contains(g))
            .ok_or_else(|| Error::NoSeparator(format!("{q} against {prime}")))?;
        s = s.mul(&g);
    }
    Ok(if s.is_constant() { ideal.clone() } else { ideal.saturate_poly(&s).canonical() })
}

/// `J = I : p^∞` together with the saturation exponent.
pub fn strict_component(local: &Ideal, prime: &Ideal) -> Result<(Ideal, usize)> {
    let sat = local.saturate(prime)?;
    Ok((sat.ideal, sat.exponent))
}

/// Increases the truncation order from `max(1, hint)` until
/// `dim E_m - dim H_m` is positive and repeats `window` more times.
pub fn find_stabilization(
    local: &Ideal,
    strict: Option<&Ideal>,
    ctx: &ResidueFieldContext,
    hint: usize,
    cap: usize,
    window: usize,
) -> Result<Stabilization> {
    let local_gens = local.basis();
    let strict_gens = strict.map(Ideal::basis);
    let mut recent: Vec<Stabilization> = Vec::new();
    for m in hint.max(1)..=cap {
        let e = dual_space(&local_gens, ctx, m)?;
        let h = strict_gens.as_ref().map(|g| dual_space(g, ctx, m)).transpose()?;
        let hd = h.as_ref().map_or(0, DualSpace::dim);
        if hd > e.dim() {
            return Err(Error::Integrity(format!("dual of the strict component is larger at order {m}")));
        }
        let d = e.dim() - hd;
        if recent.last().is_some_and(|s| d < s.multiplicity) {
            return Err(Error::Integrity(format!("dual dimensions decreased at order {m}")));
        }
        recent.push(Stabilization { m, e, h, multiplicity: d });
        if recent.len() > window + 1 {
            recent.remove(0);
        }
        if d > 0 && recent.len() == window + 1 && recent.iter().all(|s| s.multiplicity == d) {
            return Ok(recent.swap_remove(0));
        }
    }
    Err(Error::NoStabilization(cap))
}

fn reduce_against(
    ctx: &ResidueFieldContext,
    v: &[ResidueElement],
    rows: &[Vec<ResidueElement>],
    pivots: &[usize],
) -> Vec<ResidueElement> {
    let mut v = v.to_vec();
    for (row, &p) in rows.iter().zip(pivots) {
        if v[p].is_zero() {
            continue;
        }
        let f = v[p].clone();
        for (x, y) in v.iter_mut().zip(row) {
            if !y.is_zero() {
                *x = ctx.sub(x, &ctx.mul(&f, y));
            }
        }
    }
    v
}

/// Rows completing a basis of `H` to one of `E`: the rows of `E` reduced
/// modulo `H`, in reduced echelon form.
pub fn noetherian_complement(
    ctx: &ResidueFieldContext,
    e: &DualSpace,
    h: Option<&DualSpace>,
) -> Result<Vec<Vec<ResidueElement>>> {
    let Some(h) = h else {
        return Ok(e.rows.clone());
    };
    for r in &h.rows {
        if reduce_against(ctx, r, &e.rows, &e.pivots).iter().any(|x| !x.is_zero()) {
            return Err(Error::Integrity("the strict dual is not contained in the local dual".into()));
        }
    }
    let reduced: Vec<Vec<ResidueElement>> =
        e.rows.iter().map(|r| reduce_against(ctx, r, &h.rows, &h.pivots)).collect();
    let rr = ctx.row_reduce(&reduced, e.columns.len())?;
    if rr.rank != e.dim() - h.dim() {
        return Err(Error::Integrity("complement has the wrong size".into()));
    }
    Ok(rr.rows)
}

/// Turns residue-field rows into operators with polynomial coefficients.
pub fn lift_operators(
    rows: &[Vec<ResidueElement>],
    columns: &[Monomial],
    ctx: &ResidueFieldContext,
) -> Result<OperatorSet> {
    let mut ops = rows
        .iter()
        .map(|row| {
            let (polys, _) = ctx.clear_denominators(row);
            let terms = columns.iter().cloned().zip(polys).filter(|(_, p)| !p.is_zero()).collect();
            Ok(DiffOperator::from_terms(ctx.ring(), ctx.basis_vars(), terms)?.normalized())
        })
        .collect::<Result<Vec<_>>>()?;
    ops.sort_by(|a, b| cmp_partials(&a.terms()[0].0, &b.terms()[0].0));
    Ok(ops)
}

fn dep_homogeneous(f: &Polynomial, deps: &[usize]) -> bool {
    let deg = |m: &Monomial| deps.iter().map(|&v| m.0[v]).sum::<u32>();
    f.terms().windows(2).all(|w| deg(&w[0].0) == deg(&w[1].0))
}

/// Hilbert function of `J/I` over `QQ(S)` in the grading by the dependent
/// variables, from the difference of Hilbert series numerators. `None` if
/// the quotient is not of finite length.
fn graded_length_profile(lms_i: &[Monomial], lms_j: Option<&[Monomial]>, k: usize) -> Option<Vec<usize>> {
    let ni = hilbert_numerator(lms_i);
    let nj = lms_j.map(hilbert_numerator).unwrap_or_default();
    let len = ni.len().max(nj.len());
    let mut diff: Vec<BigInt> =
        (0..len).map(|i| ni.get(i).cloned().unwrap_or_default() - nj.get(i).cloned().unwrap_or_default()).collect();
    for _ in 0..k {
        // divide by (1 - t)
        let mut q = Vec::with_capacity(diff.len());
        let mut acc = BigInt::zero();
        for c in &diff {
            acc += c;
            q.push(acc.clone());
        }
        if !acc.is_zero() {
            return None;
        }
        q.pop();
        diff = q;
    }
    while diff.last().is_some_and(Zero::is_zero) {
        diff.pop();
    }
    diff.iter().map(|c| usize::try_from(c).ok()).collect()
}

/// Dual space in one degree: the functionals "coefficient of `x^s` in the
/// normal form" for the standard monomials `s` of that degree.
fn graded_piece(ff: &FractionFieldBasis, columns: &[Monomial], ctx: &ResidueFieldContext) -> Result<DualSpace> {
    let one = RatFunc::from_q(&ff.s_ring, Q::one());
    let project = |m: &Monomial| Monomial(ff.dep_vars.iter().map(|&v| m.0[v]).collect());
    let mut coeffs: HashMap<Monomial, Vec<ResidueElement>> = HashMap::new();
    for (j, beta) in columns.iter().enumerate() {
        let mono = Poly::monomial(&ff.dep_ring, project(beta), one.clone());
        let nf = ff.basis.normal_form(&mono)?;
        let fact = Q::from_integer(factorial_ratio(beta, &Monomial::one(beta.nvars())));
        for (s, c) in nf.terms() {
            let row = coeffs.entry(s.clone()).or_insert_with(|| vec![ctx.zero(); columns.len()]);
            row[j] = ctx.constant(c.times(&RatFunc::from_q(&ff.s_ring, fact.recip())));
        }
    }
    let rows: Vec<Vec<ResidueElement>> = coeffs.into_values().collect();
    let rr = ctx.row_reduce(&rows, columns.len())?;
    let m = columns.first().map_or(0, |c| c.degree() as usize) + 1;
    Ok(DualSpace { m, columns: columns.to_vec(), rows: rr.rows, pivots: rr.pivots })
}

/// Shortcut when the prime is generated by the dependent variables and both
/// ideals are homogeneous in them: every dual space splits by degree, so the
/// complement is computed one degree at a time and the stabilization order
/// is read off the Hilbert series. Returns the order, the multiplicity and
/// the operators.
pub fn graded_component(
    local: &Ideal,
    strict: Option<&Ideal>,
    ctx: &ResidueFieldContext,
) -> Result<Option<(usize, usize, OperatorSet)>> {
    let ring = ctx.ring();
    let deps = ctx.dep_vars();
    if !ctx.prime().equals(&Ideal::of_vars(ring, deps)) {
        return Ok(None);
    }
    let gi = local.basis();
    let gj = strict.map(Ideal::basis);
    if !gi.iter().chain(gj.iter().flatten()).all(|g| dep_homogeneous(g, deps)) {
        return Ok(None);
    }
    let ffi = gb_over_fraction_field(&gi, ring, ctx.basis_vars())?;
    let ffj = gj.as_ref().map(|g| gb_over_fraction_field(g, ring, ctx.basis_vars())).transpose()?;
    let lms_j = ffj.as_ref().map(|f| f.basis.leading_monomials());
    let Some(profile) = graded_length_profile(&ffi.basis.leading_monomials(), lms_j.as_deref(), deps.len()) else {
        return Ok(None);
    };
    let mut ops = Vec::new();
    let all = partial_columns(ring.nvars(), deps, profile.len());
    for (d, &count) in profile.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let columns: Vec<Monomial> = all.iter().filter(|c| c.degree() as usize == d).cloned().collect();
        let e = graded_piece(&ffi, &columns, ctx)?;
        let h = ffj.as_ref().map(|f| graded_piece(f, &columns, ctx)).transpose()?;
        let rows = noetherian_complement(ctx, &e, h.as_ref())?;
        if rows.len() != count {
            return Err(Error::Integrity(format!("degree {d} complement has {} rows, expected {count}", rows.len())));
        }
        ops.extend(lift_operators(&rows, &columns, ctx)?);
    }
    ops.sort_by(|a, b| cmp_partials(&a.terms()[0].0, &b.terms()[0].0));
    Ok(Some((profile.len(), profile.iter().sum(), ops)))
}

/// Noetherian operators of `ideal` at one associated prime.
pub fn differential_component(
    ideal: &Ideal,
    prime: &Ideal,
    all_primes: &[Ideal],
    opts: &SolveOptions,
) -> Result<DifferentialComponent> {
    let ctx = ResidueFieldContext::for_prime(prime)?;
    let local = local_component(ideal, prime, all_primes)?;
    let (strict, hint) = strict_component(&local, prime)?;
    let strict = (!strict.is_unit()).then_some(strict);
    if opts.graded {
        if let Some((m, multiplicity, operators)) = graded_component(&local, strict.as_ref(), &ctx)? {
            return Ok(DifferentialComponent {
                prime: prime.canonical(),
                basis_vars: ctx.basis_vars().to_vec(),
                operators,
                multiplicity,
                stabilization_order: m,
            });
        }
    }
    let st = find_stabilization(&local, strict.as_ref(), &ctx, hint, opts.max_order, opts.window)?;
    let rows = noetherian_complement(&ctx, &st.e, st.h.as_ref())?;
    let operators = lift_operators(&rows, &st.e.columns, &ctx)?;
    Ok(DifferentialComponent {
        prime: prime.canonical(),
        basis_vars: ctx.basis_vars().to_vec(),
        operators,
        multiplicity: st.multiplicity,
        stabilization_order: st.m,
    })
}

fn zero_ideal_decomposition(ideal: &Ideal) -> DifferentialPrimaryDecomposition {
    let ring = ideal.ring();
    let all: Vec<usize> = (0..ring.nvars()).collect();
    let component = DifferentialComponent {
        prime: Ideal::zero(ring),
        basis_vars: all.clone(),
        operators: vec![DiffOperator::identity(ring, &all)],
        multiplicity: 1,
        stabilization_order: 1,
    };
    DifferentialPrimaryDecomposition {
        ideal: ideal.clone(),
        components: vec![component],
        source: DecompositionSource::Monomial,
        amult: 1,
        verified: Some(true),
    }
}

/// Associated primes with their Noetherian operators. Primes may be
/// supplied; otherwise they are computed. Unless disabled, the result is
/// verified, and on failure recomputed with a longer confirmation window.
pub fn solve_pde(
    ideal: &Ideal,
    primes: Option<Vec<Ideal>>,
    opts: &SolveOptions,
) -> Result<DifferentialPrimaryDecomposition> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(zero_ideal_decomposition(ideal));
    }
    let (primes, source) = match primes {
        Some(ps) => load_external_decomposition(ideal, ps)?,
        None => {
            let (comps, src) = primary_decomposition_with(ideal, &opts.decompose)?;
            (comps.into_iter().map(|c| c.prime).collect(), src)
        }
    };
    let mut attempt = *opts;
    let mut last = String::new();
    for _ in 0..3 {
        let components = std::thread::scope(|scope| {
            let handles: Vec<_> = primes
                .iter()
                .map(|p| {
                    let primes = &primes;
                    let attempt = &attempt;
                    scope.spawn(move || differential_component(ideal, p, primes, attempt))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("component worker panicked")).collect::<Result<Vec<_>>>()
        })?;
        let amult = components.iter().map(|c| c.multiplicity).sum();
        let mut out =
            DifferentialPrimaryDecomposition { ideal: ideal.clone(), components, source, amult, verified: None };
        if !opts.verify {
            return Ok(out);
        }
        let report = verify_decomposition(ideal, &out.components, None)?;
        if report.passed() {
            out.verified = Some(true);
            return Ok(out);
        }
        last = report.failures.join("; ");
        attempt.window *= 2;
        attempt.max_order *= 2;
    }
    Err(Error::VerificationFailed(last))
}

/// Arithmetic multiplicity and the multiplicity at each associated prime.
pub fn amult(ideal: &Ideal, primes: Option<Vec<Ideal>>, opts: &SolveOptions) -> Result<(usize, Vec<(Ideal, usize)>)> {
    let d = solve_pde(ideal, primes, opts)?;
    Ok((d.amult, d.components.into_iter().map(|c| (c.prime, c.multiplicity)).collect()))
}

fn embed_dep_monomial(e: &[u32], deps: &[usize], nvars: usize) -> Monomial {
    let mut full = vec![0u32; nvars];
    for (k, &v) in deps.iter().enumerate() {
        full[v] = e[k];
    }
    Monomial(full)
}

fn check_component_shape(c: &DifferentialComponent) -> Result<u32> {
    if c.operators.is_empty() {
        return Err(Error::InvalidDecomposition(format!("no operators for {}", c.prime)));
    }
    let mut m = 0;
    for op in &c.operators {
        if !same_ring(op.ring(), c.prime.ring()) {
            return Err(Error::RingMismatch);
        }
        if op.terms().iter().any(|(d, _)| c.basis_vars.iter().any(|&v| d.0[v] > 0)) {
            return Err(Error::InvalidOperator(format!("{op} differentiates a basis variable")));
        }
        m = m.max(op.order()?);
    }
    Ok(m)
}

/// Span over the residue field of the operators and their iterated
/// commutators `[delta, x_v]` with the dependent variables, as rows indexed
/// by `columns`.
pub fn closed_span(
    ops: &[DiffOperator],
    columns: &[Monomial],
    ctx: &ResidueFieldContext,
) -> Result<Vec<Vec<ResidueElement>>> {
    let index: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut rows = Vec::new();
    for op in ops {
        let mut row = vec![ctx.zero(); columns.len()];
        for (d, c) in op.terms() {
            let j = *index.get(d).ok_or_else(|| Error::Integrity(format!("{op} exceeds the truncation")))?;
            row[j] = ctx.reduce(c);
        }
        rows.push(row);
    }
    let mut current = ctx.row_reduce(&rows, columns.len())?;
    loop {
        let mut next = current.rows.clone();
        for row in &current.rows {
            for &v in ctx.dep_vars() {
                let mut br = vec![ctx.zero(); columns.len()];
                let mut any = false;
                for (j, beta) in columns.iter().enumerate() {
                    if beta.0[v] == 0 || row[j].is_zero() {
                        continue;
                    }
                    let mut lower = beta.clone();
                    lower.0[v] -= 1;
                    let k = RatFunc::from_q(ctx.s_ring(), Q::from_integer(BigInt::from(beta.0[v])));
                    br[index[&lower]] = ctx.add(&br[index[&lower]], &ctx.scale(&row[j], &k));
                    any = true;
                }
                if any {
                    next.push(br);
                }
            }
        }
        let grown = ctx.row_reduce(&next, columns.len())?;
        if grown.rank == current.rank {
            return Ok(current.rows);
        }
        current = grown;
    }
}

/// The largest ideal on which the operators vanish modulo `p`, i.e.
/// `{f : delta(g f) in p for all g and all operators}`. Computed modulo
/// `p^(m+1)` over `QQ(S)` and contracted back to the polynomial ring.
pub fn component_ideal(c: &DifferentialComponent) -> Result<Ideal> {
    let m = check_component_shape(c)?;
    let ring = c.prime.ring();
    let ctx = ResidueFieldContext::new(&c.prime, &c.basis_vars)?;
    let columns = partial_columns(ring.nvars(), ctx.dep_vars(), m as usize + 1);
    let span = closed_span(&c.operators, &columns, &ctx)?;
    let power = c.prime.power(m + 1);
    let ff = gb_over_fraction_field(&power.basis(), ring, ctx.basis_vars())?;
    let lms: Vec<Vec<u32>> = ff.basis.gens().iter().map(|g| g.lm().expect("nonzero").0.clone()).collect();
    let std = enumerate_standard(&lms, ff.dep_vars.len())
        .ok_or_else(|| Error::Integrity("power of the prime is not zero-dimensional over the basis".into()))?;
    let monos: Vec<Monomial> = std.iter().map(|e| embed_dep_monomial(e, &ff.dep_vars, ring.nvars())).collect();
    // d^beta b for each column and standard monomial, reduced
    let table: Vec<Vec<Option<ResidueElement>>> = columns
        .iter()
        .map(|beta| {
            monos
                .iter()
                .map(|b| {
                    let rest = b.div(beta)?;
                    let coeff = Q::from_integer(factorial_ratio(b, &rest));
                    let e = ctx.reduce(&Polynomial::monomial(ring, rest, coeff));
                    (!e.is_zero()).then_some(e)
                })
                .collect()
        })
        .collect();
    let mut matrix: Vec<Vec<RatFunc>> = Vec::new();
    for row in &span {
        let evals: Vec<ResidueElement> = (0..monos.len())
            .map(|i| {
                let mut acc = ctx.zero();
                for (j, c) in row.iter().enumerate() {
                    if let (false, Some(e)) = (c.is_zero(), &table[j][i]) {
                        acc = ctx.add(&acc, &ctx.mul(c, e));
                    }
                }
                acc
            })
            .collect();
        for j in 0..ctx.degree() {
            matrix.push(evals.iter().map(|e| e.coords()[j].clone()).collect());
        }
    }
    let one = RatFunc::from_q(ctx.s_ring(), Q::one());
    let mut gens = power.basis();
    for v in field_kernel(&matrix, monos.len(), &one) {
        let terms = std.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(e, c)| (Monomial(e.clone()), c)).collect();
        let f = Poly::from_terms(&ff.dep_ring, terms);
        gens.push(from_fraction_field(&f, ring, &ff.dep_vars, &ff.s_vars).0);
    }
    Ok(contract(&Ideal::new(ring, gens), ctx.basis_vars()).canonical())
}

/// Reconstructs an ideal from its differential primary decomposition.
pub fn get_pde(components: &[DifferentialComponent]) -> Result<Ideal> {
    if components.is_empty() {
        return Err(Error::InvalidDecomposition("no components".into()));
    }
    let qs = components.iter().map(component_ideal).collect::<Result<Vec<_>>>()?;
    Ok(Ideal::intersect_all(&qs)?.canonical())
}

/// Tests membership through the operators: `f` lies in the ideal iff every
/// operator sends it into its prime.
pub struct OperatorOracle {
    parts: Vec<(ResidueFieldContext, OperatorSet)>,
}

impl OperatorOracle {
    pub fn new(components: &[DifferentialComponent]) -> Result<Self> {
        let parts = components
            .iter()
            .map(|c| Ok((ResidueFieldContext::new(&c.prime, &c.basis_vars)?, c.operators.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(OperatorOracle { parts })
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        for (ctx, ops) in &self.parts {
            for op in ops {
                if !ctx.reduce(&op.apply(f)?).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Checks that the operators vanish on the ideal modulo each prime, that
/// reconstruction returns the ideal, and, when options are given, that each
/// operator count equals the recomputed multiplicity.
pub fn verify_decomposition(
    ideal: &Ideal,
    components: &[DifferentialComponent],
    recompute: Option<&SolveOptions>,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let ring = ideal.ring();
    for (i, c) in components.iter().enumerate() {
        let mut ok = true;
        let ctx = ResidueFieldContext::new(&c.prime, &c.basis_vars)?;
        'ops: for op in &c.operators {
            let k = op.order()? as usize;
            for alpha in partial_columns(ring.nvars(), ctx.dep_vars(), k + 1) {
                let xa = Polynomial::monomial(ring, alpha, Q::one());
                for g in ideal.gens() {
                    let f = xa.mul(g);
                    if !ctx.reduce(&op.apply(&f)?).is_zero() {
                        report.failures.push(format!("component {}: {op} does not send {f} into the prime", i + 1));
                        report.counterexample.get_or_insert(f);
                        ok = false;
                        break 'ops;
                    }
                }
            }
        }
        report.membership.push(ok);
    }
    match get_pde(components) {
        Ok(rec) => {
            report.roundtrip_equal = rec.equals(ideal);
            if !report.roundtrip_equal {
                let witness = rec
                    .basis()
                    .into_iter()
                    .find(|g| !ideal.contains(g))
                    .or_else(|| ideal.basis().into_iter().find(|g| !rec.contains(g)));
                report.failures.push(match &witness {
                    Some(w) => format!("reconstruction differs from the ideal, witness {w}"),
                    None => "reconstruction differs from the ideal".into(),
                });
                if let Some(w) = witness {
                    report.counterexample = Some(w);
                }
            }
        }
        Err(e) => report.failures.push(format!("reconstruction failed: {e}")),
    }
    let primes: Vec<Ideal> = components.iter().map(|c| c.prime.clone()).collect();
    for c in components {
        let Some(opts) = recompute else {
            report.multiplicities.push(None);
            continue;
        };
        let (multiplicity, problem) = span_check(ideal, c, &primes, opts)?;
        if multiplicity != c.operators.len() {
            report.failures.push(format!(
                "{} operators at {} but the multiplicity is {multiplicity}",
                c.operators.len(),
                c.prime
            ));
        }
        if let Some(problem) = problem {
            report.failures.push(format!("at {}: {problem}", c.prime));
        }
        report.multiplicities.push(Some((c.operators.len(), multiplicity)));
    }
    Ok(report)
}

/// Checks that the operators of `c`, together with the dual of the strict
/// component, span the dual of the local component at a stable order.
/// Returns the multiplicity and a description of the first defect.
fn span_check(
    ideal: &Ideal,
    c: &DifferentialComponent,
    primes: &[Ideal],
    opts: &SolveOptions,
) -> Result<(usize, Option<String>)> {
    let ctx = ResidueFieldContext::new(&c.prime, &c.basis_vars)?;
    let local = local_component(ideal, &c.prime, primes)?;
    let (strict, hint) = strict_component(&local, &c.prime)?;
    let strict = (!strict.is_unit()).then_some(strict);
    let mut top = 0;
    for op in &c.operators {
        top = top.max(op.order()? as usize + 1);
    }
    let st = find_stabilization(&local, strict.as_ref(), &ctx, hint.max(top), opts.max_order.max(top), opts.window)?;
    let columns = &st.e.columns;
    let mut rows = Vec::new();
    for op in &c.operators {
        let mut row = vec![ctx.zero(); columns.len()];
        for (d, coef) in op.terms() {
            let Some(j) = columns.iter().position(|x| x == d) else {
                return Ok((st.multiplicity, Some(format!("{op} differentiates outside the dependent variables"))));
            };
            row[j] = ctx.reduce(coef);
        }
        if reduce_against(&ctx, &row, &st.e.rows, &st.e.pivots).iter().any(|x| !x.is_zero()) {
            return Ok((st.multiplicity, Some(format!("{op} does not annihilate the local component"))));
        }
        rows.push(row);
    }
    let mut stacked = st.h.as_ref().map_or_else(Vec::new, |h| h.rows.clone());
    stacked.extend(rows);
    let rank = if stacked.is_empty() { 0 } else { ctx.row_reduce(&stacked, columns.len())?.rank };
    if rank < st.e.dim() {
        return Ok((
            st.multiplicity,
            Some(format!("operators miss {} dimensions of the local dual at order {}", st.e.dim() - rank, st.m)),
        ));
    }
    Ok((st.multiplicity, None))
}

/// Whether two operator sets span the same space over the residue field.
pub fn same_operator_span(a: &[DiffOperator], b: &[DiffOperator], ctx: &ResidueFieldContext) -> Result<bool> {
    let mut cols: Vec<Monomial> =
        a.iter().chain(b).flat_map(|op| op.terms().iter().map(|(d, _)| d.clone())).collect::<BTreeSet<_>>().into_iter().collect();
    cols.sort_by(|x, y| cmp_partials(y, x));
    let rows_of = |ops: &[DiffOperator]| -> Vec<Vec<ResidueElement>> {
        ops.iter()
            .map(|op| {
                let mut row = vec![ctx.zero(); cols.len()];
                for (d, c) in op.terms() {
                    let j = cols.iter().position(|x| x == d).expect("column");
                    row[j] = ctx.reduce(c);
                }
                row
            })
            .collect()
    };
    let ra = ctx.row_reduce(&rows_of(a), cols.len())?;
    let rb = ctx.row_reduce(&rows_of(b), cols.len())?;
    Ok(ra.pivots == rb.pivots && ra.rows == rb.rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::{Ring, RingRef};

    fn ring() -> RingRef {
        Ring::grevlex(&["x", "y", "z"]).unwrap()
    }

    fn ideal(s: &str) -> Ideal {
        Ideal::parse(s, &ring()).unwrap()
    }

    fn op(s: &str, basis: &[usize]) -> DiffOperator {
        DiffOperator::parse(s, &ring(), basis).unwrap()
    }

    #[test]
    fn columns_are_graded() {
        let cols = partial_columns(3, &[1, 2], 3);
        let shown: Vec<String> = cols.iter().map(|c| format!("{:?}", c.0)).collect();
        assert_eq!(shown, ["[0, 2, 0]", "[0, 1, 1]", "[0, 0, 2]", "[0, 1, 0]", "[0, 0, 1]", "[0, 0, 0]"]);
    }

    #[test]
    fn dual_of_prime_contains_identity() {
        let p = ideal("y; z");
        let ctx = ResidueFieldContext::new(&p, &[0]).unwrap();
        for m in 1..4 {
            let d = dual_space(&p.basis(), &ctx, m).unwrap();
            assert_eq!(d.dim(), 1);
            let ops = lift_operators(&d.rows, &d.columns, &ctx).unwrap();
            assert_eq!(ops[0], op("1", &[0]));
        }
    }

    #[test]
    fn palamodov_dual() {
        let q1 = ideal("y^2; z^2; y - x*z");
        let p = ideal("y; z");
        let ctx = ResidueFieldContext::new(&p, &[0]).unwrap();
        let d = dual_space(&q1.basis(), &ctx, 2).unwrap();
        let ops = lift_operators(&d.rows, &d.columns, &ctx).unwrap();
        assert!(same_operator_span(&ops, &[op("1", &[0]), op("x*dy + dz", &[0])], &ctx).unwrap());
        let st = find_stabilization(&q1, None, &ctx, 1, 50, 2).unwrap();
        assert_eq!(st.multiplicity, 2);
    }

    #[test]
    fn prime_stabilizes_at_once() {
        let p = ideal("x - y^2; z");
        let ctx = ResidueFieldContext::for_prime(&p).unwrap();
        let st = find_stabilization(&p, None, &ctx, 1, 50, 2).unwrap();
        assert_eq!((st.m, st.multiplicity), (1, 1));
    }

    #[test]
    fn local_and_strict_components() {
        let i = ideal("x^2*y; x^2*z; x*y^2; x*y*z^2");
        let primes = crate::decompose::associated_primes(&i).unwrap();
        let local = local_component(&i, &primes[0], &primes).unwrap();
        assert!(local.equals(&ideal("x")));
        let top = local_component(&i, &primes[3], &primes).unwrap();
        assert!(top.equals(&i));
        let (j, _) = strict_component(&local, &primes[0]).unwrap();
        assert!(j.is_unit());
    }

    #[test]
    fn vogel() {
        let i = ideal("x^2*y; x^2*z; x*y^2; x*y*z^2");
        let d = solve_pde(&i, None, &SolveOptions::default()).unwrap();
        assert_eq!(d.amult, 5);
        let got: Vec<Vec<String>> =
            d.components.iter().map(|c| c.operators.iter().map(|o| o.to_string()).collect()).collect();
        assert_eq!(got, [vec!["1"], vec!["1"], vec!["dx"], vec!["dx*dy", "dx*dy*dz"]]);
        assert_eq!(d.verified, Some(true));
    }

    fn op_strings(d: &DifferentialPrimaryDecomposition) -> Vec<Vec<String>> {
        d.components.iter().map(|c| c.operators.iter().map(|o| o.to_string()).collect()).collect()
    }

    #[test]
    fn graded_shortcut_agrees() {
        for gens in ["x^2*y; x^2*z; x*y^2; x*y*z^2", "x^2*z; y^3 + z^3; x^2*y; x^3 + y^3 + z^3", "x^3; x*y; y^2*z^2"] {
            let i = ideal(gens);
            let fast = solve_pde(&i, None, &SolveOptions::default()).unwrap();
            let slow = solve_pde(&i, None, &SolveOptions { graded: false, ..Default::default() }).unwrap();
            assert_eq!(op_strings(&fast), op_strings(&slow), "{gens}");
        }
    }

    #[test]
    fn palamodov() {
        let i = ideal(
            "x*y*z^2; x*y^2*z; x^2*y*z; y^2*z^2; 2*x*y*z - x*z^2 + y*z^3; 2*x*y*z - x^2*y + x^3*z; 2*x*y*z - y^2*z + x*y^3",
        );
        let d = solve_pde(&i, None, &SolveOptions::default()).unwrap();
        assert_eq!(d.components.iter().map(|c| c.multiplicity).collect::<Vec<_>>(), [2, 2, 2, 1]);
        assert_eq!(op_strings(&d)[0], ["1", "x*dy + dz"]);
        assert_eq!(op_strings(&d)[3], ["dx^2*dy + dx*dy*dz + dy^2*dz + dx*dz^2"]);
        let mut fewer = d.components.clone();
        fewer.pop();
        let report = verify_decomposition(&i, &fewer, None).unwrap();
        assert!(!report.roundtrip_equal);
        let w = report.counterexample.unwrap();
        assert!(!i.contains(&w));
        assert!(get_pde(&fewer).unwrap().contains(&w));
    }

    #[test]
    fn cubic_cone() {
        let i = ideal("x^2*z; y^3 + z^3; x^2*y; x^3 + y^3 + z^3");
        let d = solve_pde(&i, None, &SolveOptions::default()).unwrap();
        assert_eq!(op_strings(&d), [vec!["1", "dx"], vec!["1", "dx"], vec!["dx^2"]]);
        let report = verify_decomposition(&i, &d.components, Some(&SolveOptions::default())).unwrap();
        assert!(report.passed());
        assert_eq!(report.multiplicities, [Some((2, 2)), Some((2, 2)), Some((1, 1))]);
    }

    #[test]
    fn single_prime_roundtrip() {
        let p = ideal("x");
        let c = DifferentialComponent::supplied(p.clone(), vec![1, 2], vec![op("1", &[1, 2])]);
        assert!(get_pde(&[c]).unwrap().equals(&p));
        let bad = DifferentialComponent::supplied(p, vec![1, 2], vec![op("dy", &[])]);
        assert!(matches!(get_pde(&[bad]), Err(Error::InvalidOperator(_))));
        assert!(get_pde(&[]).is_err());
    }

    #[test]
    fn zero_ideal() {
        let z = Ideal::zero(&ring());
        let d = solve_pde(&z, None, &SolveOptions::default()).unwrap();
        assert_eq!(d.amult, 1);
        assert_eq!(d.components[0].basis_vars, vec![0, 1, 2]);
        assert!(get_pde(&d.components).unwrap().is_zero());
        assert!(solve_pde(&Ideal::unit(&ring()), None, &SolveOptions::default()).is_err());
    }
}
