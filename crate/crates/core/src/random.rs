use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linear::{Color, MultiMap, Permutation, Rational};

/// Seeded source of small rationals and random maps. The same seed always
/// produces the same sequence.
pub struct RandomSource {
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Numerator in `[-3, 3]`, denominator in `{1, 2, 3}`.
    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(-3..=3);
        let q = self.rng.gen_range(1..=3);
        Rational::new(p, q).expect("nonzero denominator")
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    pub fn multimap(&mut self, out: Color, out_dim: usize, inputs: &[Color], in_dims: &[usize]) -> MultiMap {
        MultiMap::from_fn(out, out_dim, inputs.to_vec(), in_dims.to_vec(), |_, _| self.rational())
    }

    /// A random map alternating in its (uniform) inputs.
    pub fn alternating(&mut self, out: Color, out_dim: usize, input: Color, in_dim: usize, n: usize) -> MultiMap {
        let m = self.multimap(out, out_dim, &vec![input; n], &vec![in_dim; n]);
        let scale = Rational::from_integer((1..=n as i64).product());
        m.antisymmetrize().expect("uniform inputs").scale(&scale)
    }

    /// A random invertible `n×n` matrix as a unary map, built as a product
    /// of a unit lower and a unit upper triangular matrix times a permutation.
    pub fn invertible(&mut self, color: Color, n: usize) -> MultiMap {
        let lower = MultiMap::from_fn(color, n, vec![color], vec![n], |o, i| {
            if o == i[0] {
                Rational::one()
            } else if o > i[0] {
                self.rational()
            } else {
                Rational::zero()
            }
        });
        let upper = MultiMap::from_fn(color, n, vec![color], vec![n], |o, i| {
            if o == i[0] {
                Rational::one()
            } else if o < i[0] {
                self.rational()
            } else {
                Rational::zero()
            }
        });
        let perms = Permutation::all(n);
        let p = &perms[self.below(perms.len())];
        let pm = MultiMap::from_fn(color, n, vec![color], vec![n], |o, i| {
            if p.image(o) == i[0] {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        lower.after(&upper).and_then(|m| m.after(&pm)).expect("square matrices")
    }
}
