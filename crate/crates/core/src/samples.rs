//! Concrete algebras and seeded random cochains used by the verification
//! suites, the command line and the tests.

use crate::engine::{AlgebraInstance, Cochain};
use crate::error::Result;
use crate::linear::{Color, MultiMap, Rational, Spaces};
use crate::prop::Model;
use crate::random::RandomSource;

/// The bilinear map with `e_i e_j = Σ c e_k` for each `(i, j, k, c)`.
pub fn bilinear(color: Color, dim: usize, constants: &[(usize, usize, usize, i64)]) -> MultiMap {
    let mut m = MultiMap::zero(color, dim, vec![color; 2], vec![dim; 2]);
    for &(i, j, k, c) in constants {
        let old = m.get(k, &[i, j]).clone();
        m.set(k, &[i, j], old + Rational::from_integer(c));
    }
    m
}

/// The linear map `T_from → T_to` with matrix `rows` (one row per output).
pub fn matrix(from: Color, to: Color, rows: &[Vec<Rational>]) -> MultiMap {
    let out_dim = rows.len();
    let in_dim = rows.first().map_or(0, Vec::len);
    MultiMap::from_fn(to, out_dim, vec![from], vec![in_dim], |o, i| rows[o][i[0]].clone())
}

fn int_matrix(from: Color, to: Color, rows: &[&[i64]]) -> MultiMap {
    let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect();
    matrix(from, to, &rows)
}

/// A small algebra given by structure constants on a fixed basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    /// `k` with `e·e = e`
    Field,
    /// zero product in the given dimension
    Zero(usize),
    /// `k[x]/x²` on the basis `1, x`
    Dual,
    /// `k × k` on idempotents
    Product,
    /// `e_1 e_1 = e_2`, all other products zero
    Nilpotent,
    /// `[e_1, e_2] = e_1`
    Affine,
    /// `sl_2` on `h, e, f`
    Sl2,
    /// `[x, y] = z`
    Heisenberg,
}

impl Kind {
    fn dim(self) -> usize {
        match self {
            Kind::Field => 1,
            Kind::Zero(n) => n,
            Kind::Dual | Kind::Product | Kind::Nilpotent | Kind::Affine => 2,
            Kind::Sl2 | Kind::Heisenberg => 3,
        }
    }

    fn product(self, color: Color) -> MultiMap {
        let d = self.dim();
        match self {
            Kind::Field => bilinear(color, 1, &[(0, 0, 0, 1)]),
            Kind::Zero(_) => bilinear(color, d, &[]),
            Kind::Dual => bilinear(color, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            Kind::Product => bilinear(color, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]),
            Kind::Nilpotent => bilinear(color, 2, &[(0, 0, 1, 1)]),
            Kind::Affine => bilinear(color, 2, &[(0, 1, 0, 1), (1, 0, 0, -1)]),
            Kind::Sl2 => bilinear(
                color,
                3,
                &[(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)],
            ),
            Kind::Heisenberg => bilinear(color, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
        }
    }
}

/// A morphism `U → V` between two catalogue algebras, possibly with random
/// parameters.
enum Hom {
    Zero,
    Fixed(&'static [&'static [i64]]),
    Random,
    /// `1 ↦ 1`, `x ↦ c x` on `k[x]/x²`
    DualScale,
    /// `e_1 ↦ a e_1 + b e_2`, `e_2 ↦ a² e_2`
    NilpotentAuto,
    /// `e_1 ↦ a e_1`, `e_2 ↦ e_2 + b e_1`
    AffineAuto,
    /// random on the first two basis vectors, zero on the third
    KillThird,
    /// random on the first basis vector, zero on the second
    KillSecond,
    /// `e_1 ↦ 0`, `e_2 ↦ c`
    AffineToLine,
}

fn build_hom(h: &Hom, u: usize, v: usize, rng: &mut RandomSource) -> MultiMap {
    let r = |rng: &mut RandomSource| rng.rational();
    let rows: Vec<Vec<Rational>> = match h {
        Hom::Zero => vec![vec![Rational::zero(); u]; v],
        Hom::Fixed(rows) => rows.iter().map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect()).collect(),
        Hom::Random => (0..v).map(|_| (0..u).map(|_| r(rng)).collect()).collect(),
        Hom::DualScale => vec![vec![Rational::one(), Rational::zero()], vec![Rational::zero(), r(rng)]],
        Hom::NilpotentAuto => {
            let (a, b) = (r(rng), r(rng));
            vec![vec![a.clone(), Rational::zero()], vec![b, &a * &a]]
        }
        Hom::AffineAuto => {
            let (a, b) = (r(rng), r(rng));
            vec![vec![a, b], vec![Rational::zero(), Rational::one()]]
        }
        Hom::KillThird => (0..v).map(|_| vec![r(rng), r(rng), Rational::zero()]).collect(),
        Hom::KillSecond => (0..v).map(|_| vec![r(rng), Rational::zero()]).collect(),
        Hom::AffineToLine => vec![vec![Rational::zero(), r(rng)]],
    };
    matrix(Color::B, Color::W, &rows)
}

fn assoc_catalogue() -> Vec<(Kind, Kind, Hom)> {
    use Kind::*;
    vec![
        (Field, Field, Hom::Fixed(&[&[1]])),
        (Dual, Dual, Hom::DualScale),
        (Product, Product, Hom::Fixed(&[&[0, 1], &[1, 0]])),
        (Product, Field, Hom::Fixed(&[&[1, 0]])),
        (Product, Dual, Hom::Fixed(&[&[1, 0], &[0, 0]])),
        (Field, Product, Hom::Fixed(&[&[1], &[0]])),
        (Field, Dual, Hom::Fixed(&[&[1], &[0]])),
        (Dual, Field, Hom::Fixed(&[&[1, 0]])),
        (Nilpotent, Nilpotent, Hom::NilpotentAuto),
        (Nilpotent, Zero(2), Hom::KillSecond),
        (Zero(2), Zero(2), Hom::Random),
        (Zero(1), Zero(2), Hom::Random),
        (Dual, Product, Hom::Zero),
        (Product, Nilpotent, Hom::Zero),
    ]
}

fn lie_catalogue(max_dim: usize) -> Vec<(Kind, Kind, Hom)> {
    use Kind::*;
    let mut out = vec![
        (Affine, Affine, Hom::AffineAuto),
        (Affine, Zero(1), Hom::AffineToLine),
        (Affine, Zero(2), Hom::Zero),
        (Zero(2), Zero(2), Hom::Random),
        (Zero(1), Affine, Hom::Random),
        (Zero(2), Zero(1), Hom::Random),
    ];
    if max_dim >= 3 {
        out.extend([
            (Sl2, Sl2, Hom::Fixed(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
            (Heisenberg, Zero(2), Hom::KillThird),
            (Heisenberg, Heisenberg, Hom::Fixed(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
            (Zero(1), Sl2, Hom::Random),
            (Zero(3), Zero(2), Hom::Random),
            (Sl2, Zero(2), Hom::Zero),
        ]);
    }
    out
}

/// `P μ (P⁻¹ ⊗ P⁻¹)`.
fn transport(mu: &MultiMap, p: &MultiMap, p_inv: &MultiMap) -> Result<MultiMap> {
    p.after(&mu.substitute(&[Some(p_inv), Some(p_inv)])?)
}

fn conjugated(model: Model, u: Kind, v: Kind, g: MultiMap, rng: &mut RandomSource) -> Result<AlgebraInstance> {
    let spaces = Spaces::new(u.dim(), v.dim())?;
    let (p, q) = (rng.invertible(Color::B, u.dim()), rng.invertible(Color::W, v.dim()));
    let (p_inv, q_inv) = (p.inverse()?, q.inverse()?);
    let mu = transport(&u.product(Color::B), &p, &p_inv)?;
    let nu = transport(&v.product(Color::W), &q, &q_inv)?;
    let g = q.after(&g.after(&p_inv)?)?;
    AlgebraInstance::new(model, spaces, vec![mu, nu, g], true)
}

/// A random associative algebra morphism with `dim U, dim V ≤ 2`, in a
/// randomly chosen basis.
pub fn random_assoc(rng: &mut RandomSource) -> Result<AlgebraInstance> {
    let cat = assoc_catalogue();
    let (u, v, h) = &cat[rng.below(cat.len())];
    let g = build_hom(h, u.dim(), v.dim(), rng);
    conjugated(Model::AssocMorphism, *u, *v, g, rng)
}

/// A random Lie algebra morphism with dimensions at most `max_dim` (2 or 3).
pub fn random_lie(rng: &mut RandomSource, max_dim: usize) -> Result<AlgebraInstance> {
    let cat = lie_catalogue(max_dim);
    let (u, v, h) = &cat[rng.below(cat.len())];
    let g = build_hom(h, u.dim(), v.dim(), rng);
    conjugated(Model::LieMorphism, *u, *v, g, rng)
}

/// A random pair of mutually inverse isomorphisms of dimension `dim`.
pub fn random_iso(rng: &mut RandomSource, dim: usize) -> Result<AlgebraInstance> {
    let f = rng.invertible(Color::B, dim);
    let f = MultiMap::from_coeffs(Color::W, dim, vec![Color::B], vec![dim], f.coeffs().to_vec())?;
    let g = MultiMap::from_coeffs(Color::B, dim, vec![Color::W], vec![dim], f_inverse(&f)?)?;
    AlgebraInstance::new(Model::Iso, Spaces::new(dim, dim)?, vec![f, g], true)
}

fn f_inverse(f: &MultiMap) -> Result<Vec<Rational>> {
    let n = f.out_dim();
    let square = MultiMap::from_coeffs(Color::B, n, vec![Color::B], vec![n], f.coeffs().to_vec())?;
    Ok(square.inverse()?.coeffs().to_vec())
}

/// A random valid algebra of the model with dimensions at most `max_dim`.
pub fn random_algebra(model: Model, rng: &mut RandomSource, max_dim: usize) -> Result<AlgebraInstance> {
    match model {
        Model::AssocMorphism => random_assoc(rng),
        Model::LieMorphism => random_lie(rng, max_dim),
        Model::Iso => {
            let dim = 1 + rng.below(max_dim.min(2));
            random_iso(rng, dim)
        }
    }
}

/// A random homogeneous cochain; each component is zero with probability
/// 1/4 and otherwise a random (alternating, for Lie) map.
pub fn random_cochain(model: Model, degree: i64, spaces: &Spaces, rng: &mut RandomSource) -> Result<Cochain> {
    let mut c = Cochain::zero(model, degree);
    for g in model.cochain_support(degree) {
        if rng.below(4) == 0 {
            continue;
        }
        let info = model.info(g)?;
        let dims: Vec<usize> = info.inputs.iter().map(|&col| spaces.dim(col)).collect();
        let m = if model.is_skew() {
            rng.alternating(info.output, spaces.dim(info.output), info.inputs[0], dims[0], info.arity())
        } else {
            rng.multimap(info.output, spaces.dim(info.output), &info.inputs, &dims)
        };
        c.set(g, m)?;
    }
    Ok(c)
}

/// The one-dimensional algebra `e·e = e` with `g = Id` (As or Lie uses the
/// zero bracket instead).
pub fn unit_algebra(model: Model) -> Result<AlgebraInstance> {
    let spaces = Spaces::new(1, 1)?;
    match model {
        Model::AssocMorphism => AlgebraInstance::new(
            model,
            spaces,
            vec![Kind::Field.product(Color::B), Kind::Field.product(Color::W), int_matrix(Color::B, Color::W, &[&[1]])],
            true,
        ),
        Model::LieMorphism => AlgebraInstance::new(
            model,
            spaces,
            vec![Kind::Zero(1).product(Color::B), Kind::Zero(1).product(Color::W), int_matrix(Color::B, Color::W, &[&[1]])],
            true,
        ),
        Model::Iso => AlgebraInstance::new(
            model,
            spaces,
            vec![int_matrix(Color::B, Color::W, &[&[1]]), int_matrix(Color::W, Color::B, &[&[1]])],
            true,
        ),
    }
}
