//! Associated primes and primary decomposition.
//!
//! Monomial ideals are split combinatorially, zero-dimensional ideals (over
//! `QQ` or a rational function field) are decomposed through a separating
//! linear form, and everything else goes through a GTZ-style reduction to the
//! zero-dimensional case. Primes can also be supplied from outside.

pub mod factor;
pub mod gtz;
pub mod monomial;
pub mod zerodim;

use std::fmt;

use crate::ideal::Ideal;

pub use factor::{factor_over_fraction_field, factor_univariate_rational, FactorBudget};
pub use gtz::{associated_primes, load_external_decomposition, primary_decomposition, sort_primes};
pub use monomial::{monomial_ass_and_decompose, standard_pairs, StandardPair};
pub use zerodim::zero_dim_decompose;

/// Which engine produced a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionSource {
    Monomial,
    ZeroDim,
    Gtz,
    Supplied,
}

impl fmt::Display for DecompositionSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionSource::Monomial => "monomial-engine",
            DecompositionSource::ZeroDim => "zerodim-engine",
            DecompositionSource::Gtz => "gtz-engine",
            DecompositionSource::Supplied => "supplied",
        })
    }
}

/// A primary ideal together with its radical.
#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    pub primary: Ideal,
    pub prime: Ideal,
}

/// Knobs for the decomposition engines.
#[derive(Clone, Copy, Debug, Default)]
pub struct DecomposeOptions {
    /// Seed for the random linear forms.
    pub seed: u64,
    pub budget: FactorBudget,
}
