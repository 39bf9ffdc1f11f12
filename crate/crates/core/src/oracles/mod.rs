//! Closed-form brackets for the three morphism models, written directly in
//! terms of multilinear maps. Nothing here touches graph terms, so agreement
//! with the engine is a check between two independent implementations.

mod assoc;
mod iso;
mod lie;
mod tuples;

pub use assoc::{as_l2_formula, as_lk_formula};
pub use iso::{iso_ops_formula, IsoCochain};
pub use lie::{lie_l2_formula, lie_lk_formula};
pub use tuples::AdmissibleTuple;

use crate::linear::{koszul_epsilon, Color, MultiMap, Permutation, Rational, Spaces};

/// Which sign convention the formulas follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// The signs exactly as the closed formulas state them. They agree with
    /// the engine's [`SignRule::Printed`](crate::engine::SignRule).
    Printed,
    /// Each term multiplied by `(-1)^{k-1} ε`, where `ε` is the Koszul sign of
    /// bringing the inputs into the order in which they occur in the term.
    /// This agrees with [`l_k`](crate::engine::l_k).
    Graded,
}

impl Convention {
    /// The factor for a term in which input `order[p]` occupies the `p`-th
    /// decorated vertex, for inputs of the given cochain degrees.
    pub fn factor(self, degrees: &[i64], order: &[usize]) -> Rational {
        match self {
            Convention::Printed => Rational::one(),
            Convention::Graded => {
                let shifted: Vec<i64> = degrees.iter().map(|d| d - 1).collect();
                let sigma = Permutation::new(order.to_vec()).expect("order is a permutation");
                Rational::sign(degrees.len() as i64 - 1).signed(i64::from(koszul_epsilon(&sigma, &shifted) < 0))
            }
        }
    }
}

/// `ν(θ_1,…,θ_k) = Σ (k-i)|θ_i|`.
pub(crate) fn nu(degrees: &[i64]) -> i64 {
    let k = degrees.len() as i64;
    degrees.iter().enumerate().map(|(i, d)| (k - 1 - i as i64) * d).sum()
}

fn spaces_of(u: &MultiMap, v: &MultiMap) -> Spaces {
    Spaces::new(u.out_dim(), v.out_dim()).expect("dimensions of existing maps")
}

/// Running sum of maps sharing one signature.
struct Sum(MultiMap);

impl Sum {
    fn new(spaces: &Spaces, out: Color, input: Color, arity: usize) -> Self {
        Sum(spaces.zero_map(out, &vec![input; arity]))
    }

    fn add(&mut self, term: &MultiMap, coeff: &Rational) -> crate::Result<()> {
        self.0.add_scaled(term, coeff)
    }
}
