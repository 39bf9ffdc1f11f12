//! Exact computation of the L∞ algebras governing deformations of algebra
//! morphisms and isomorphisms, given as colored operads with a differential.

pub mod classical;
pub mod engine;
pub mod error;
pub mod io;
pub mod linear;
pub mod oracles;
pub mod prop;
pub mod random;
pub mod samples;
pub mod suites;

pub use error::{Error, Result};
pub use linear::{Color, MultiMap, Permutation, Rational, Spaces};
