//! Fixtures shared by the benchmarks.

use lidef::engine::{AlgebraInstance, Cochain};
use lidef::prop::Model;
use lidef::random::RandomSource;
use lidef::samples::{random_algebra, random_cochain};

pub struct Fixture {
    pub algebra: AlgebraInstance,
    pub cochains: Vec<Cochain>,
}

/// A random algebra of the model with `count` cochains of the given degree.
pub fn fixture(model: Model, seed: u64, degree: i64, count: usize) -> Fixture {
    let mut rng = RandomSource::new(seed);
    let algebra = random_algebra(model, &mut rng, 2).expect("random algebra");
    let cochains = (0..count)
        .map(|_| random_cochain(model, degree, algebra.spaces(), &mut rng).expect("random cochain"))
        .collect();
    Fixture { algebra, cochains }
}
