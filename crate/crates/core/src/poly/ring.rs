use std::fmt;
use std::sync::Arc;

use super::order::{MonomialOrder, OrderKind};
use crate::error::{Error, Result};

/// Coefficient domain of a ring: the rationals, or the rational function
/// field in the named variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientDomain {
    Rationals,
    FractionField(Vec<String>),
}

/// Variable names, a monomial order and the coefficient domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    order: MonomialOrder,
    coefficients: CoefficientDomain,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Result<RingRef> {
        Self::with_coefficients(vars, order, CoefficientDomain::Rationals)
    }

    /// Ring over QQ with the default grevlex order.
    pub fn grevlex<S: AsRef<str>>(vars: &[S]) -> Result<RingRef> {
        Self::new(vars, MonomialOrder::grevlex(vars.len()))
    }

    pub fn with_coefficients<S: AsRef<str>>(
        vars: &[S],
        order: MonomialOrder,
        coefficients: CoefficientDomain,
    ) -> Result<RingRef> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Parse { pos: 0, msg: format!("invalid variable name `{v}`") });
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if let CoefficientDomain::FractionField(s) = &coefficients {
            for v in s {
                if vars.contains(v) {
                    return Err(Error::DuplicateVariable(v.clone()));
                }
            }
        }
        if order.nvars() != vars.len() {
            return Err(Error::LengthMismatch(order.nvars(), vars.len()));
        }
        Ok(Arc::new(Ring { vars, order, coefficients }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn coefficients(&self) -> &CoefficientDomain {
        &self.coefficients
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        assert_eq!(order.nvars(), self.nvars());
        Arc::new(Ring { vars: self.vars.clone(), order, coefficients: self.coefficients.clone() })
    }

    /// Sub-ring on the given variable indices (kept in ring order), grevlex.
    pub fn subring(&self, idx: &[usize]) -> RingRef {
        let vars: Vec<String> = idx.iter().map(|&i| self.vars[i].clone()).collect();
        Arc::new(Ring {
            order: MonomialOrder::grevlex(vars.len()),
            vars,
            coefficients: self.coefficients.clone(),
        })
    }

    /// A fresh variable name not clashing with existing ones.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.vars.contains(&name) {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn order_text(ring: &Ring) -> String {
    let kind = match ring.order.kind() {
        OrderKind::Lex => "lex",
        OrderKind::GrevLex => "grevlex",
    };
    if ring.order.is_plain() {
        kind.to_string()
    } else {
        let blocks: Vec<String> = ring
            .order
            .block_list()
            .iter()
            .map(|b| b.iter().map(|&i| ring.vars[i].as_str()).collect::<Vec<_>>().join(","))
            .collect();
        format!("{kind}({})", blocks.join(";"))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {} over ", self.vars.join(","))?;
        match &self.coefficients {
            CoefficientDomain::Rationals => write!(f, "QQ")?,
            CoefficientDomain::FractionField(s) => write!(f, "QQ({})", s.join(","))?,
        }
        write!(f, " order {}", order_text(self))
    }
}

fn parse_order(text: &str, vars: &[String]) -> Result<MonomialOrder> {
    let text = text.trim();
    let (kind_text, blocks_text) = match text.find('(') {
        Some(p) => {
            let inner = text[p + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse { pos: p, msg: "unterminated order blocks".into() })?;
            (&text[..p], Some(inner))
        }
        None => (text, None),
    };
    let kind = match kind_text.trim() {
        "lex" => OrderKind::Lex,
        "grevlex" => OrderKind::GrevLex,
        other => return Err(Error::Parse { pos: 0, msg: format!("unknown order `{other}`") }),
    };
    match blocks_text {
        None => Ok(match kind {
            OrderKind::Lex => MonomialOrder::lex(vars.len()),
            OrderKind::GrevLex => MonomialOrder::grevlex(vars.len()),
        }),
        Some(b) => {
            let mut blocks = Vec::new();
            for block in b.split(';') {
                let mut idx = Vec::new();
                for name in block.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    idx.push(
                        vars.iter()
                            .position(|v| v == name)
                            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?,
                    );
                }
                blocks.push(idx);
            }
            let o = MonomialOrder::blocks(kind, blocks)?;
            if o.nvars() != vars.len() {
                return Err(Error::Parse { pos: 0, msg: "order blocks do not cover all variables".into() });
            }
            Ok(o)
        }
    }
}

/// Parses `ring x,y,z over QQ [order grevlex]`, the inverse of `Display`.
impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        let s = s.trim();
        let rest = s
            .strip_prefix("ring")
            .ok_or_else(|| Error::Parse { pos: 0, msg: "expected `ring`".into() })?;
        let over = rest
            .find(" over ")
            .ok_or_else(|| Error::Parse { pos: 0, msg: "expected `over`".into() })?;
        let vars: Vec<String> = rest[..over]
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        let tail = rest[over + 6..].trim();
        let (coef_text, order_text) = match tail.find(" order ") {
            Some(p) => (tail[..p].trim(), Some(tail[p + 7..].trim())),
            None => (tail, None),
        };
        let coefficients = if coef_text == "QQ" {
            CoefficientDomain::Rationals
        } else if let Some(inner) = coef_text.strip_prefix("QQ(").and_then(|t| t.strip_suffix(')')) {
            CoefficientDomain::FractionField(inner.split(',').map(|v| v.trim().to_string()).collect())
        } else {
            return Err(Error::Parse { pos: 0, msg: format!("unknown coefficient domain `{coef_text}`") });
        };
        let order = match order_text {
            Some(t) => parse_order(t, &vars)?,
            None => MonomialOrder::grevlex(vars.len()),
        };
        let r = Ring::with_coefficients(&vars, order, coefficients)?;
        Ok(Arc::try_unwrap(r).unwrap_or_else(|a| (*a).clone()))
    }
}

/// Parses a bare order name (`grevlex`, `lex`, or a block form) against variables.
pub fn parse_order_for(text: &str, vars: &[String]) -> Result<MonomialOrder> {
    parse_order(text, vars)
}
