//! Scalars, monomials, orders, polynomials and their text form.

pub mod field;
pub mod gcd;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod ratfunc;
pub mod ring;

pub use field::{q, q_frac, Field, Q};
pub use monomial::Monomial;
pub use order::{cmp_monomials, MonomialOrder, OrderKind};
pub use parse::{parse_poly, parse_poly_list};
pub use polynomial::{poly_arith, Arith, Poly, Polynomial};
pub use ratfunc::RatFunc;
pub use ring::{CoefficientDomain, Ring, RingRef};
