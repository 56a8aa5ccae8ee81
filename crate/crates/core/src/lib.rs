//! Exact differential primary decomposition of ideals in QQ[x1..xn].

pub mod decompose;
pub mod diffprim;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod poly;
pub mod residue;
pub mod weyl;

pub use error::{Error, Result};
