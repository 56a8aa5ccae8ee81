//! Text and JSON documents read and written by the command-line tool.
//!
//! An ideal document looks like
//!
//! ```text
//! ring x,y,z over QQ
//! order grevlex
//! ideal: x^2*y; x^2*z; x*y^2; x*y*z^2
//! ```
//!
//! and a decomposition document like
//!
//! ```text
//! ring x,y,z over QQ
//! component: prime = x; y | basis = z | ops = dx
//! ```
//!
//! Both have a JSON form with the same fields. Blank lines and lines
//! starting with `#` are ignored.

use noether::decompose::DecompositionSource;
use noether::diffprim::{DifferentialComponent, DifferentialPrimaryDecomposition};
use noether::ideal::Ideal;
use noether::poly::ring::parse_order_for;
use noether::poly::{CoefficientDomain, MonomialOrder, OrderKind, Ring, RingRef};
use noether::weyl::DiffOperator;
use noether::{Error, Result};
use serde::{Deserialize, Serialize};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse { pos: 0, msg: msg.into() }
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn order_name(ring: &Ring) -> &'static str {
    match ring.order().kind() {
        OrderKind::Lex => "lex",
        OrderKind::GrevLex => "grevlex",
    }
}

/// Builds a ring over QQ; `order` defaults to grevlex.
pub fn make_ring(vars: &[String], order: Option<&str>) -> Result<RingRef> {
    let order = match order {
        Some(o) => parse_order_for(o, vars)?,
        None => MonomialOrder::grevlex(vars.len()),
    };
    Ring::new(vars, order)
}

/// Parses the `ring` and `order` header lines. `order_override` wins over
/// the document's own order line.
fn parse_header<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = &'a str>>,
    order_override: Option<&str>,
) -> Result<Option<RingRef>> {
    let Some(first) = lines.peek().copied() else { return Ok(None) };
    if !first.starts_with("ring") {
        return Ok(None);
    }
    lines.next();
    let declared: Ring = first.parse()?;
    if *declared.coefficients() != CoefficientDomain::Rationals {
        return Err(parse_err("only QQ coefficients are supported"));
    }
    let mut order = first.find(" order ").map(|p| first[p + 7..].trim().to_string());
    if let Some(line) = lines.peek().copied() {
        if let Some(rest) = line.strip_prefix("order") {
            order = Some(rest.trim().to_string());
            lines.next();
        }
    }
    let order = order_override.map(str::to_string).or(order);
    make_ring(declared.vars(), order.as_deref()).map(Some)
}

/// Generators as `;`-separated text with integer coefficients, `0` for the
/// zero ideal.
pub fn gens_text(ideal: &Ideal) -> String {
    if ideal.gens().is_empty() {
        return "0".into();
    }
    ideal.gens().iter().map(|g| g.primitive().to_string()).collect::<Vec<_>>().join("; ")
}

fn gens_list(ideal: &Ideal) -> Vec<String> {
    ideal.gens().iter().map(|g| g.primitive().to_string()).collect()
}

fn ring_line(ring: &Ring) -> String {
    format!("ring {} over QQ\norder {}\n", ring.vars().join(","), order_name(ring))
}

/// A ring with a list of generators.
#[derive(Clone, Debug)]
pub struct IdealDocument {
    pub ring: RingRef,
    pub ideal: Ideal,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    ring: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<String>,
    ideal: Vec<String>,
}

impl IdealDocument {
    pub fn new(ideal: Ideal) -> Self {
        IdealDocument { ring: ideal.ring().clone(), ideal }
    }

    pub fn parse(text: &str, order_override: Option<&str>) -> Result<Self> {
        if is_json(text) {
            let doc: IdealJson = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
            let ring = make_ring(&doc.ring, order_override.or(doc.order.as_deref()))?;
            let ideal = Ideal::parse(&doc.ideal.join(";"), &ring)?;
            return Ok(IdealDocument { ring, ideal });
        }
        let mut lines = content_lines(text).peekable();
        let ring = parse_header(&mut lines, order_override)?.ok_or_else(|| parse_err("expected a `ring` line"))?;
        let first = lines.next().ok_or_else(|| parse_err("expected an `ideal:` line"))?;
        let rest = first.strip_prefix("ideal:").ok_or_else(|| parse_err(format!("expected `ideal:`, got `{first}`")))?;
        let body: Vec<&str> = std::iter::once(rest).chain(lines).collect();
        let ideal = Ideal::parse(&body.join(" "), &ring)?;
        Ok(IdealDocument { ring, ideal })
    }

    pub fn to_text(&self) -> String {
        let gens = if self.ideal.gens().is_empty() { String::new() } else { gens_text(&self.ideal) };
        format!("{}ideal: {gens}\n", ring_line(&self.ring)).replace("ideal: \n", "ideal:\n")
    }

    pub fn to_json(&self) -> String {
        let doc = IdealJson {
            ring: self.ring.vars().to_vec(),
            order: Some(order_name(&self.ring).into()),
            ideal: gens_list(&self.ideal),
        };
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }
}

/// One `component:` entry before it is checked against the ring.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct RawComponent {
    pub prime: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primary: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    ring: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<String>,
    components: Vec<RawComponent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    amult: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<String>,
    #[serde(default)]
    verified: Option<bool>,
}

#[derive(Serialize)]
struct ListingJson {
    ring: Vec<String>,
    order: String,
    components: Vec<RawComponent>,
    #[serde(skip_serializing_if = "Option::is_none")]
    amult: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    source: Option<String>,
}

fn split_list(text: &str, sep: char) -> Vec<String> {
    text.split(sep).map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect()
}

fn parse_component_line(body: &str) -> Result<RawComponent> {
    let mut c = RawComponent::default();
    let mut has_prime = false;
    for field in body.split('|') {
        let (key, value) =
            field.split_once('=').ok_or_else(|| parse_err(format!("expected `key = value` in `{}`", field.trim())))?;
        match key.trim() {
            "prime" => {
                c.prime = split_list(value, ';');
                has_prime = true;
            }
            "primary" => c.primary = Some(split_list(value, ';')),
            "basis" => c.basis = Some(split_list(value, ',')),
            "ops" | "operators" => c.operators = Some(split_list(value, ';')),
            "multiplicity" => {
                c.multiplicity =
                    Some(value.trim().parse().map_err(|_| parse_err(format!("bad multiplicity `{}`", value.trim())))?)
            }
            other => return Err(parse_err(format!("unknown component field `{other}`"))),
        }
    }
    if !has_prime {
        return Err(parse_err("component without `prime`"));
    }
    Ok(c)
}

/// A decomposition document in its unchecked form: ring, raw components and
/// the optional summary lines.
#[derive(Clone, Debug)]
pub struct RawDecomposition {
    pub ring: Option<RingRef>,
    pub components: Vec<RawComponent>,
    pub amult: Option<usize>,
    pub source: Option<String>,
    pub verified: Option<bool>,
}

impl RawDecomposition {
    pub fn parse(text: &str, order_override: Option<&str>) -> Result<Self> {
        if is_json(text) {
            let doc: DecompositionJson = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
            let ring = make_ring(&doc.ring, order_override.or(doc.order.as_deref()))?;
            return Ok(RawDecomposition {
                ring: Some(ring),
                components: doc.components,
                amult: doc.amult,
                source: doc.source,
                verified: doc.verified,
            });
        }
        let mut lines = content_lines(text).peekable();
        let ring = parse_header(&mut lines, order_override)?;
        let mut out = RawDecomposition { ring, components: Vec::new(), amult: None, source: None, verified: None };
        for line in lines {
            let (key, value) = line.split_once(':').ok_or_else(|| parse_err(format!("unexpected line `{line}`")))?;
            let value = value.trim();
            match key.trim() {
                "component" => out.components.push(parse_component_line(value)?),
                "prime" => out.components.push(RawComponent { prime: split_list(value, ';'), ..Default::default() }),
                "amult" => out.amult = Some(value.parse().map_err(|_| parse_err(format!("bad amult `{value}`")))?),
                "source" => out.source = Some(value.to_string()),
                "verified" => {
                    out.verified = match value {
                        "true" => Some(true),
                        "false" => Some(false),
                        "skipped" => None,
                        _ => return Err(parse_err(format!("bad verified flag `{value}`"))),
                    }
                }
                other => return Err(parse_err(format!("unknown line `{other}:`"))),
            }
        }
        Ok(out)
    }

    /// The ring of the document, or `fallback` when it declares none. A
    /// declared ring must have the same variables as the fallback.
    pub fn ring_or(&self, fallback: Option<&RingRef>) -> Result<RingRef> {
        match (&self.ring, fallback) {
            (Some(r), Some(f)) if r.vars() != f.vars() => Err(Error::RingMismatch),
            (_, Some(f)) => Ok(f.clone()),
            (Some(r), None) => Ok(r.clone()),
            (None, None) => Err(parse_err("expected a `ring` line")),
        }
    }

    /// The primes listed, in the given ring.
    pub fn primes(&self, ring: &RingRef) -> Result<Vec<Ideal>> {
        self.components.iter().map(|c| Ideal::parse(&c.prime.join(";"), ring)).collect()
    }

    /// Checks every component and builds the operator data.
    pub fn components(&self, ring: &RingRef) -> Result<Vec<DifferentialComponent>> {
        let mut out = Vec::new();
        for raw in &self.components {
            let prime = Ideal::parse(&raw.prime.join(";"), ring)?;
            let basis = match &raw.basis {
                Some(names) => names
                    .iter()
                    .map(|n| ring.var_index(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
                    .collect::<Result<Vec<_>>>()?,
                None => prime.independent_set()?,
            };
            let texts = raw
                .operators
                .as_ref()
                .ok_or_else(|| parse_err(format!("component at {} has no operators", prime)))?;
            let ops = texts.iter().map(|t| DiffOperator::parse(t, ring, &basis)).collect::<Result<Vec<_>>>()?;
            if let Some(m) = raw.multiplicity {
                if m != ops.len() {
                    return Err(Error::InvalidDecomposition(format!(
                        "multiplicity {m} but {} operators at {prime}",
                        ops.len()
                    )));
                }
            }
            out.push(DifferentialComponent::supplied(prime, basis, ops));
        }
        Ok(out)
    }
}

/// Decomposition data ready for printing.
#[derive(Clone, Debug)]
pub struct DecompositionDocument {
    pub ring: RingRef,
    pub components: Vec<DifferentialComponent>,
    pub amult: Option<usize>,
    pub source: Option<DecompositionSource>,
    pub verified: Option<bool>,
}

impl DecompositionDocument {
    pub fn from_solution(d: &DifferentialPrimaryDecomposition) -> Self {
        DecompositionDocument {
            ring: d.ideal.ring().clone(),
            components: d.components.clone(),
            amult: Some(d.amult),
            source: Some(d.source),
            verified: d.verified,
        }
    }

    pub fn parse(text: &str, order_override: Option<&str>) -> Result<Self> {
        let raw = RawDecomposition::parse(text, order_override)?;
        let ring = raw.ring_or(None)?;
        let components = raw.components(&ring)?;
        Ok(DecompositionDocument { ring, components, amult: raw.amult, source: None, verified: raw.verified })
    }

    fn raw_components(&self) -> Vec<RawComponent> {
        self.components
            .iter()
            .map(|c| RawComponent {
                prime: gens_list(&c.prime),
                primary: None,
                basis: Some(c.basis_vars.iter().map(|&v| self.ring.var_name(v).to_string()).collect()),
                operators: Some(c.operators.iter().map(|op| op.to_string()).collect()),
                multiplicity: Some(c.operators.len()),
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = ring_line(&self.ring);
        for c in self.raw_components() {
            let fields = [
                format!("prime = {}", if c.prime.is_empty() { "0".to_string() } else { c.prime.join("; ") }),
                format!("basis = {}", c.basis.unwrap_or_default().join(",")),
                format!("ops = {}", c.operators.unwrap_or_default().join("; ")),
                format!("multiplicity = {}", c.multiplicity.unwrap_or_default()),
            ];
            let fields: Vec<&str> = fields.iter().map(|f| f.trim_end()).collect();
            out.push_str(&format!("component: {}\n", fields.join(" | ")));
        }
        if let Some(a) = self.amult {
            out.push_str(&format!("amult: {a}\n"));
        }
        if let Some(s) = self.source {
            out.push_str(&format!("source: {s}\n"));
        }
        out.push_str(match self.verified {
            Some(true) => "verified: true\n",
            Some(false) => "verified: false\n",
            None => "verified: skipped\n",
        });
        out
    }

    pub fn to_json(&self) -> String {
        let doc = DecompositionJson {
            ring: self.ring.vars().to_vec(),
            order: Some(order_name(&self.ring).into()),
            components: self.raw_components(),
            amult: self.amult,
            source: self.source.map(|s| s.to_string()),
            verified: self.verified,
        };
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }
}

/// Prime-only (or prime and primary) listings used by `ass`, `primdec` and
/// `amult`; the text form is itself a valid `--primes` file.
pub struct PrimeListing {
    pub ring: RingRef,
    pub components: Vec<RawComponent>,
    pub amult: Option<usize>,
    pub source: Option<DecompositionSource>,
}

impl PrimeListing {
    pub fn entry(prime: &Ideal) -> RawComponent {
        RawComponent { prime: gens_list(prime), ..Default::default() }
    }

    pub fn to_text(&self) -> String {
        let mut out = ring_line(&self.ring);
        for c in &self.components {
            let mut line =
                format!("component: prime = {}", if c.prime.is_empty() { "0".into() } else { c.prime.join("; ") });
            if let Some(q) = &c.primary {
                line.push_str(&format!(" | primary = {}", if q.is_empty() { "0".into() } else { q.join("; ") }));
            }
            if let Some(m) = c.multiplicity {
                line.push_str(&format!(" | multiplicity = {m}"));
            }
            out.push_str(&line);
            out.push('\n');
        }
        if let Some(a) = self.amult {
            out.push_str(&format!("amult: {a}\n"));
        }
        if let Some(s) = self.source {
            out.push_str(&format!("source: {s}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = ListingJson {
            ring: self.ring.vars().to_vec(),
            order: order_name(&self.ring).into(),
            components: self.components.clone(),
            amult: self.amult,
            source: self.source.map(|s| s.to_string()),
        };
        let mut v = serde_json::to_string_pretty(&doc).expect("serializable");
        v.push('\n');
        v
    }
}

/// Collects identifiers in order of first appearance.
fn identifiers(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut in_number = false;
    for ch in text.chars().chain(std::iter::once(' ')) {
        if ch.is_ascii_alphanumeric() || ch == '_' {
            if cur.is_empty() && ch.is_ascii_digit() {
                in_number = true;
            }
            if !in_number {
                cur.push(ch);
            }
        } else {
            if !cur.is_empty() && !out.contains(&cur) {
                out.push(std::mem::take(&mut cur));
            }
            cur.clear();
            in_number = false;
        }
    }
    out
}

/// The variables of an `apply` call: the identifiers of the polynomial,
/// plus those of the operator with a leading `d` removed from partials.
/// Sorted by name.
pub fn infer_variables(op: &str, poly: &str) -> Vec<String> {
    let mut vars = identifiers(poly);
    let op_ids = identifiers(op);
    for id in &op_ids {
        if let Some(v) = id.strip_prefix('d') {
            if !v.is_empty() && !vars.iter().any(|x| x == v) {
                vars.push(v.to_string());
            }
        }
    }
    for id in &op_ids {
        let covered = vars.iter().any(|x| x == id) || id.strip_prefix('d').is_some_and(|v| vars.iter().any(|x| x == v));
        if !covered {
            vars.push(id.clone());
        }
    }
    vars.sort();
    vars
}
