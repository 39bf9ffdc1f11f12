use crate::classical::{chevalley_eilenberg_b, hochschild_b, Bimodule, LieModule};
use crate::engine::{AlgebraInstance, Cochain};
use crate::error::{Error, Result};
use crate::linear::{Color, MultiMap, Rational, Spaces};
use crate::prop::{GeneratorId, Model};

/// An element of `Hom(U^{⊗n},U) ⊕ Hom(V^{⊗n},V) ⊕ Hom(U^{⊗n-1},V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSCochain {
    n: usize,
    pub x_u: MultiMap,
    pub x_v: MultiMap,
    pub x_g: MultiMap,
}

fn check_slot(m: &MultiMap, out: Color, input: Color, arity: usize, spaces: &Spaces, name: &str) -> Result<()> {
    let ok = m.out_color() == out
        && m.arity() == arity
        && m.in_colors().iter().all(|&c| c == input)
        && m.out_dim() == spaces.dim(out)
        && m.in_dims().iter().all(|&d| d == spaces.dim(input));
    if ok {
        Ok(())
    } else {
        Err(Error::Signature(format!("{name} has shape {}, expected arity {arity}", m.signature())))
    }
}

impl GSCochain {
    pub fn new(n: usize, x_u: MultiMap, x_v: MultiMap, x_g: MultiMap, spaces: &Spaces) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("complex degrees start at 1".into()));
        }
        check_slot(&x_u, Color::B, Color::B, n, spaces, "x_U")?;
        check_slot(&x_v, Color::W, Color::W, n, spaces, "x_V")?;
        check_slot(&x_g, Color::W, Color::B, n - 1, spaces, "x_g")?;
        Ok(GSCochain { n, x_u, x_v, x_g })
    }

    pub fn zero(n: usize, spaces: &Spaces) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("complex degrees start at 1".into()));
        }
        Ok(GSCochain {
            n,
            x_u: spaces.zero_map(Color::B, &vec![Color::B; n]),
            x_v: spaces.zero_map(Color::W, &vec![Color::W; n]),
            x_g: spaces.zero_map(Color::W, &vec![Color::B; n - 1]),
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.x_u.is_zero() && self.x_v.is_zero() && self.x_g.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GSCochain { n: self.n, x_u: self.x_u.scale(c), x_v: self.x_v.scale(c), x_g: self.x_g.scale(c) }
    }
}

/// The S-complex analogue: all three components alternating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCochain(GSCochain);

impl SCochain {
    pub fn new(n: usize, x_u: MultiMap, x_v: MultiMap, x_g: MultiMap, spaces: &Spaces) -> Result<Self> {
        let inner = GSCochain::new(n, x_u, x_v, x_g, spaces)?;
        for (name, m) in [("x_U", &inner.x_u), ("x_V", &inner.x_v), ("x_g", &inner.x_g)] {
            if !m.is_alternating() {
                return Err(Error::Invariant(format!("{name} is not alternating")));
            }
        }
        Ok(SCochain(inner))
    }

    pub fn zero(n: usize, spaces: &Spaces) -> Result<Self> {
        GSCochain::zero(n, spaces).map(SCochain)
    }

    pub fn degree(&self) -> usize {
        self.0.n
    }

    pub fn x_u(&self) -> &MultiMap {
        &self.0.x_u
    }

    pub fn x_v(&self) -> &MultiMap {
        &self.0.x_v
    }

    pub fn x_g(&self) -> &MultiMap {
        &self.0.x_g
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn components(&self) -> &GSCochain {
        &self.0
    }
}

fn morphism_data(a: &AlgebraInstance, model: Model) -> Result<(&MultiMap, &MultiMap, &MultiMap)> {
    if a.model() != model {
        return Err(Error::Model(format!("expected a {model} algebra, got {}", a.model())));
    }
    Ok((a.structure_map(0), a.structure_map(1), a.structure_map(2)))
}

/// `(g x_U, x_V g^{⊗n})` for the mixed component.
fn mixed_terms(x_u: &MultiMap, x_v: &MultiMap, g: &MultiMap) -> Result<(MultiMap, MultiMap)> {
    let gs = vec![Some(g); x_v.arity()];
    Ok((g.after(x_u)?, x_v.substitute(&gs)?))
}

/// `d_GS(x_U, x_V, x_g) = (b x_U, b x_V, g x_U - x_V g^{⊗n} - b x_g)`.
pub fn gs_d(x: &GSCochain, a: &AlgebraInstance) -> Result<GSCochain> {
    let (mu, nu, g) = morphism_data(a, Model::AssocMorphism)?;
    let (gx, xg) = mixed_terms(&x.x_u, &x.x_v, g)?;
    let mut third = &gx - &xg;
    third.add_scaled(&hochschild_b(&x.x_g, &Bimodule::pulled_back(mu, nu, g)?)?, &-Rational::one())?;
    GSCochain::new(
        x.n + 1,
        hochschild_b(&x.x_u, &Bimodule::regular(mu))?,
        hochschild_b(&x.x_v, &Bimodule::regular(nu))?,
        third,
        a.spaces(),
    )
}

/// `Δ(x_U, x_V, x_g) = (b x_U, b x_V, (-1)^{n-1} g x_U - (-1)^{n-1} x_V g^{⊗n} + b x_g)`
/// with Chevalley-Eilenberg coboundaries.
pub fn s_delta(x: &SCochain, a: &AlgebraInstance) -> Result<SCochain> {
    let (mu, nu, g) = morphism_data(a, Model::LieMorphism)?;
    let x = &x.0;
    let (gx, xg) = mixed_terms(&x.x_u, &x.x_v, g)?;
    let mut third = (&gx - &xg).scale(&Rational::sign(x.n as i64 - 1));
    third += &chevalley_eilenberg_b(&x.x_g, &LieModule::pulled_back(mu, nu, g)?)?;
    SCochain::new(
        x.n + 1,
        chevalley_eilenberg_b(&x.x_u, &LieModule::adjoint(mu))?,
        chevalley_eilenberg_b(&x.x_v, &LieModule::adjoint(nu))?,
        third,
        a.spaces(),
    )
}

/// Signs `((-1)^{n(n+1)/2}, (-1)^{n(n+1)/2}, (-1)^{(n-1)n/2})` applied to the
/// three slots when passing to the Gerstenhaber-Schack complex in degree `n`.
pub fn gs_transport_signs(n: usize) -> (Rational, Rational, Rational) {
    let a = Rational::sign((n * (n + 1) / 2) as i64);
    (a.clone(), a, Rational::sign((n * (n.saturating_sub(1)) / 2) as i64))
}

/// Sign `(-1)^{n-1}` applied to the mixed slot when passing to the S-complex.
pub fn s_transport_sign(n: usize) -> Rational {
    Rational::sign(n as i64 - 1)
}

fn components(theta: &Cochain, model: Model, spaces: &Spaces) -> Result<(usize, MultiMap, MultiMap, MultiMap)> {
    if theta.model() != model {
        return Err(Error::Model(format!("expected a {model} cochain, got {}", theta.model())));
    }
    if theta.degree() < 1 {
        return Err(Error::Argument("cochains start in degree 1".into()));
    }
    let n = theta.degree() as usize + 1;
    Ok((
        n,
        theta.value_or_zero(GeneratorId::mu(n), spaces)?,
        theta.value_or_zero(GeneratorId::nu(n), spaces)?,
        theta.value_or_zero(GeneratorId::f(n - 1), spaces)?,
    ))
}

fn assemble(model: Model, n: usize, x_u: MultiMap, x_v: MultiMap, x_g: MultiMap) -> Result<Cochain> {
    if n < 2 {
        return Err(Error::Argument(format!("degree {n} has no counterpart in the deformation complex")));
    }
    Cochain::from_values(
        model,
        n as i64 - 1,
        [(GeneratorId::mu(n), x_u), (GeneratorId::nu(n), x_v), (GeneratorId::f(n - 1), x_g)],
    )
}

/// The raw values `(θ(μ_n), θ(ν_n), θ(f_{n-1}))` of `θ ∈ C^{n-1}`, without
/// transport signs.
pub fn gs_components(theta: &Cochain, spaces: &Spaces) -> Result<GSCochain> {
    let (n, u, v, g) = components(theta, Model::AssocMorphism, spaces)?;
    GSCochain::new(n, u, v, g, spaces)
}

/// Inverse of [`gs_components`].
pub fn gs_from_components(x: &GSCochain) -> Result<Cochain> {
    assemble(Model::AssocMorphism, x.n, x.x_u.clone(), x.x_v.clone(), x.x_g.clone())
}

/// The raw values `(θ(μ_n), θ(ν_n), θ(f_{n-1}))` of a Lie-morphism cochain
/// `θ ∈ C^{n-1}`.
pub fn s_components(theta: &Cochain, spaces: &Spaces) -> Result<SCochain> {
    let (n, u, v, g) = components(theta, Model::LieMorphism, spaces)?;
    SCochain::new(n, u, v, g, spaces)
}

/// Inverse of [`s_components`].
pub fn s_from_components(x: &SCochain) -> Result<Cochain> {
    let x = &x.0;
    assemble(Model::LieMorphism, x.n, x.x_u.clone(), x.x_v.clone(), x.x_g.clone())
}

/// `θ ∈ C^{n-1}` of the associative-morphism model to the sign-twisted
/// triple in `C^n_GS`.
pub fn prop_to_gs(theta: &Cochain, spaces: &Spaces) -> Result<GSCochain> {
    let x = gs_components(theta, spaces)?;
    let (su, sv, sg) = gs_transport_signs(x.n);
    GSCochain::new(x.n, x.x_u.scale(&su), x.x_v.scale(&sv), x.x_g.scale(&sg), spaces)
}

pub fn gs_to_prop(x: &GSCochain) -> Result<Cochain> {
    let (su, sv, sg) = gs_transport_signs(x.n);
    assemble(Model::AssocMorphism, x.n, x.x_u.scale(&su), x.x_v.scale(&sv), x.x_g.scale(&sg))
}

/// `θ ∈ C^{n-1}` of the Lie-morphism model to `Λ^n(U,V)`, twisting the mixed
/// slot by `(-1)^{n-1}`.
pub fn prop_to_s(theta: &Cochain, spaces: &Spaces) -> Result<SCochain> {
    let x = s_components(theta, spaces)?;
    let n = x.degree();
    SCochain::new(n, x.0.x_u, x.0.x_v, x.0.x_g.scale(&s_transport_sign(n)), spaces)
}

pub fn s_to_prop(x: &SCochain) -> Result<Cochain> {
    let x = &x.0;
    assemble(Model::LieMorphism, x.n, x.x_u.clone(), x.x_v.clone(), x.x_g.scale(&s_transport_sign(x.n)))
}
