//! Tokenizer and expression parser shared by the polynomial and operator
//! grammars: integers, `/`, identifiers, `*`, `+`, `-`, `^`, parentheses.

use num_bigint::BigInt;

use super::field::Q;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::RingRef;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(text[start..i].parse().expect("digits")), start));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Parse { pos: start, msg: format!("unexpected character `{other}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

/// Parsed expression tree, evaluated against a concrete algebra afterwards.
#[derive(Clone, Debug)]
pub(crate) enum Expr {
    Num(BigInt),
    Ident(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    let at = self.offset();
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            if self.peek() == Some(&Tok::Minus) {
                return Err(Error::NegativePower);
            }
            match self.peek() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse { pos: self.offset(), msg: "exponent too large".into() })?;
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => self.err("expected integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s, at))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(crate) fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks: &toks, pos: 0, end: text.len() };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Target algebra for expression evaluation.
pub(crate) trait Algebra: Sized + Clone {
    fn number(&self, n: &BigInt) -> Self;
    fn ident(&self, name: &str, pos: usize) -> Result<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self, pos: usize) -> Result<Self>;
    fn neg(&self) -> Self;
    fn one(&self) -> Self;
}

pub(crate) fn eval<A: Algebra>(e: &Expr, ctx: &A) -> Result<A> {
    Ok(match e {
        Expr::Num(n) => ctx.number(n),
        Expr::Ident(s, pos) => ctx.ident(s, *pos)?,
        Expr::Add(a, b) => eval(a, ctx)?.add(&eval(b, ctx)?),
        Expr::Sub(a, b) => eval(a, ctx)?.sub(&eval(b, ctx)?),
        Expr::Mul(a, b) => eval(a, ctx)?.mul(&eval(b, ctx)?),
        Expr::Div(a, b, pos) => eval(a, ctx)?.div(&eval(b, ctx)?, *pos)?,
        Expr::Neg(a) => eval(a, ctx)?.neg(),
        Expr::Pow(a, k) => {
            let base = eval(a, ctx)?;
            let mut acc = ctx.one();
            for _ in 0..*k {
                acc = acc.mul(&base);
            }
            acc
        }
    })
}

impl Algebra for Polynomial {
    fn number(&self, n: &BigInt) -> Self {
        Polynomial::constant(self.ring(), Q::from_integer(n.clone()))
    }
    fn ident(&self, name: &str, _pos: usize) -> Result<Self> {
        let i = self.ring().var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(self.ring(), i))
    }
    fn add(&self, o: &Self) -> Self {
        Polynomial::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Polynomial::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Polynomial::mul(self, o)
    }
    fn div(&self, o: &Self, pos: usize) -> Result<Self> {
        match o.constant_value() {
            Some(c) => Ok(self.scale(&c.recip())),
            None if o.is_zero() => Err(Error::DivisionByZero),
            None => Err(Error::Parse { pos, msg: "division by a non-constant polynomial".into() }),
        }
    }
    fn neg(&self) -> Self {
        Polynomial::neg(self)
    }
    fn one(&self) -> Self {
        Polynomial::one_in(self.ring())
    }
}

/// Parses a polynomial in the given ring.
pub fn parse_poly(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let e = parse_expr(text)?;
    eval(&e, &Polynomial::zero(ring))
}

/// Parses a `;`-separated generator list; blank entries are skipped.
pub fn parse_poly_list(text: &str, ring: &RingRef) -> Result<Vec<Polynomial>> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty()).map(|s| parse_poly(s, ring)).collect()
}

/// Helper used in tests and documents: a monomial from exponent literals.
pub fn monomial_poly(ring: &RingRef, exps: &[u32]) -> Polynomial {
    Polynomial::monomial(ring, Monomial(exps.to_vec()), Q::from_integer(BigInt::from(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::q;
    use crate::poly::ring::Ring;

    #[test]
    fn reads_terms() {
        let r = Ring::grevlex(&["x", "y", "z"]).unwrap();
        let p = parse_poly("x^2*y - 3*z", &r).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.terms()[0].1, q(1));
        assert_eq!(p.terms()[1].1, q(-3));
        assert!(parse_poly("0", &r).unwrap().is_zero());
    }

    #[test]
    fn palamodov_generator() {
        let r = Ring::grevlex(&["x", "y", "z"]).unwrap();
        let p = parse_poly("2*x*y*z^2 - x*z^2 + y*z^3 + 2*x*y*z", &r).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.to_string(), "2*x*y*z^2 + y*z^3 + 2*x*y*z - x*z^2");
    }

    #[test]
    fn errors_have_positions() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        assert_eq!(parse_poly("x + w", &r).unwrap_err(), Error::UnknownVariable("w".into()));
        match parse_poly("x + * y", &r).unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 4),
            e => panic!("{e:?}"),
        }
        assert_eq!(parse_poly("x^-2", &r).unwrap_err(), Error::NegativePower);
    }

    #[test]
    fn rationals_and_parentheses() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let p = parse_poly("(x + 1/2)^2 - x*(x+1)", &r).unwrap();
        assert_eq!(p.to_string(), "1/4");
    }
}
