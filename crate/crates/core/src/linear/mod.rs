//! Exact linear algebra over the rationals: scalars, permutations with
//! Koszul signs, and dense multilinear maps.

mod multimap;
mod perm;
mod rational;

pub use multimap::{Color, ColorSpace, MultiMap, Spaces};
pub use perm::{
    binomial, enumerate_block_unshuffles, enumerate_block_unshuffles_unordered, enumerate_unshuffles,
    koszul_chi, koszul_epsilon, Permutation, SignedPermutation,
};
pub use rational::Rational;
