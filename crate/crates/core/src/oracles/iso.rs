use crate::engine::Cochain;
use crate::error::{Error, Result};
use crate::linear::{Color, MultiMap, Spaces};
use crate::prop::{GeneratorId, Model};

/// A cochain of the isomorphism model as a pair of linear maps: `α ⊕ β` with
/// `α: U → V`, `β: V → U` in odd degree, `γ ⊕ δ` with `γ: U → U`,
/// `δ: V → V` in even degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCochain {
    pub degree: i64,
    pub first: MultiMap,
    pub second: MultiMap,
}

fn colors(degree: i64) -> [(Color, Color); 2] {
    if degree.rem_euclid(2) == 1 {
        [(Color::B, Color::W), (Color::W, Color::B)]
    } else {
        [(Color::B, Color::B), (Color::W, Color::W)]
    }
}

impl IsoCochain {
    pub fn new(degree: i64, first: MultiMap, second: MultiMap) -> Result<Self> {
        let [(a, b), (c, d)] = colors(degree);
        let fits = |m: &MultiMap, from: Color, to: Color| m.arity() == 1 && m.in_colors()[0] == from && m.out_color() == to;
        if !fits(&first, a, b) || !fits(&second, c, d) {
            return Err(Error::Signature(format!(
                "degree {degree} needs maps {a}→{b} and {c}→{d}, got {} and {}",
                first.signature(),
                second.signature()
            )));
        }
        Ok(IsoCochain { degree, first, second })
    }

    pub fn zero(degree: i64, spaces: &Spaces) -> Self {
        let [(a, b), (c, d)] = colors(degree);
        IsoCochain { degree, first: spaces.zero_map(b, &[a]), second: spaces.zero_map(d, &[c]) }
    }

    /// Reads `θ(f_{n-1}) ⊕ θ(g_{n-1})` off a cochain of degree `n ≥ 1`.
    pub fn from_cochain(theta: &Cochain, spaces: &Spaces) -> Result<Self> {
        if theta.model() != Model::Iso || theta.degree() < 1 {
            return Err(Error::Model(format!("not an isomorphism cochain of positive degree: {}", theta.model())));
        }
        let i = theta.degree() as usize - 1;
        Ok(IsoCochain {
            degree: theta.degree(),
            first: theta.value_or_zero(GeneratorId::f(i), spaces)?,
            second: theta.value_or_zero(GeneratorId::g(i), spaces)?,
        })
    }

    pub fn to_cochain(&self) -> Result<Cochain> {
        if self.degree < 1 {
            return Ok(Cochain::zero(Model::Iso, self.degree));
        }
        let i = self.degree as usize - 1;
        Cochain::from_values(
            Model::Iso,
            self.degree,
            [(GeneratorId::f(i), self.first.clone()), (GeneratorId::g(i), self.second.clone())],
        )
    }

    fn is_odd(&self) -> bool {
        self.degree.rem_euclid(2) == 1
    }
}

fn compose(a: &MultiMap, b: &MultiMap) -> Result<MultiMap> {
    a.after(b)
}

fn diff(a: &MultiMap, b: &MultiMap, c: &MultiMap, d: &MultiMap) -> Result<MultiMap> {
    Ok(&compose(a, b)? - &compose(c, d)?)
}

fn total(a: &MultiMap, b: &MultiMap, c: &MultiMap, d: &MultiMap) -> Result<MultiMap> {
    Ok(&compose(a, b)? + &compose(c, d)?)
}

/// The operations `l_0`, `l_1`, `l_2` of the isomorphism model for the
/// diagram `F: U → V`, `G: V → U`:
///
/// ```text
/// l_0 = Id_U ⊕ Id_V
/// l_1(α ⊕ β) = (Gα + βF) ⊕ (αG + Fβ)                  odd
/// l_1(γ ⊕ δ) = (Fγ - δF) ⊕ (Gδ - γG)                  even
/// l_2(α'⊕β', α''⊕β'') = (β'α'' + β''α') ⊕ (α'β'' + α''β')   odd, odd
/// l_2(α⊕β, γ⊕δ) = -l_2(γ⊕δ, α⊕β) = (αγ - δα) ⊕ (βδ - γβ)    odd, even
/// l_2(γ'⊕δ', γ''⊕δ'') = (γ'γ'' - γ''γ') ⊕ (δ'δ'' - δ''δ')    even, even
/// ```
///
/// and `l_k = 0` for `k ≥ 3`. The curvature is the value at `F = G = 0`;
/// over a general diagram it is `(Id - GF) ⊕ (Id - FG)`, which vanishes on
/// isomorphisms.
pub fn iso_ops_formula(inputs: &[&IsoCochain], f: &MultiMap, g: &MultiMap) -> Result<IsoCochain> {
    let spaces = Spaces::new(f.in_dims()[0], f.out_dim())?;
    match inputs {
        [] => IsoCochain::new(2, spaces.identity(Color::B), spaces.identity(Color::W)),
        [x] => {
            let (a, b) = (&x.first, &x.second);
            if x.is_odd() {
                IsoCochain::new(x.degree + 1, total(g, a, b, f)?, total(a, g, f, b)?)
            } else {
                // γ = a, δ = b
                IsoCochain::new(x.degree + 1, diff(f, a, b, f)?, diff(g, b, a, g)?)
            }
        }
        [x, y] => {
            let degree = x.degree + y.degree;
            match (x.is_odd(), y.is_odd()) {
                (true, true) => IsoCochain::new(
                    degree,
                    total(&x.second, &y.first, &y.second, &x.first)?,
                    total(&x.first, &y.second, &y.first, &x.second)?,
                ),
                (true, false) => IsoCochain::new(
                    degree,
                    diff(&x.first, &y.first, &y.second, &x.first)?,
                    diff(&x.second, &y.second, &y.first, &x.second)?,
                ),
                (false, true) => {
                    let z = iso_ops_formula(&[y, x], f, g)?;
                    IsoCochain::new(degree, -&z.first, -&z.second)
                }
                (false, false) => IsoCochain::new(
                    degree,
                    diff(&x.first, &y.first, &y.first, &x.first)?,
                    diff(&x.second, &y.second, &y.second, &x.second)?,
                ),
            }
        }
        _ => {
            let degree = 2 - inputs.len() as i64 + inputs.iter().map(|x| x.degree).sum::<i64>();
            Ok(IsoCochain::zero(degree, &spaces))
        }
    }
}
