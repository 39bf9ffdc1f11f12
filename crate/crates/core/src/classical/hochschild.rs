use crate::error::{Error, Result};
use crate::linear::{Color, MultiMap, Permutation, Rational};

/// An algebra `A` (product or bracket on the color `algebra`) acting on a
/// module `M` on the left and on the right.
#[derive(Clone, Debug)]
pub struct Bimodule {
    /// `A ⊗ A → A`
    pub product: MultiMap,
    /// `A ⊗ M → M`
    pub left: MultiMap,
    /// `M ⊗ A → M`
    pub right: MultiMap,
}

impl Bimodule {
    /// `A` acting on itself by multiplication.
    pub fn regular(product: &MultiMap) -> Self {
        Bimodule { product: product.clone(), left: product.clone(), right: product.clone() }
    }

    /// `M = V` seen as a `U`-bimodule through `g`: `a·m = g(a)m`, `m·a = m g(a)`.
    pub fn pulled_back(mu_u: &MultiMap, mu_v: &MultiMap, g: &MultiMap) -> Result<Self> {
        Ok(Bimodule { product: mu_u.clone(), left: mu_v.compose_at(1, g)?, right: mu_v.compose_at(2, g)? })
    }

    fn algebra_color(&self) -> Color {
        self.product.out_color()
    }

    fn module_color(&self) -> Color {
        self.left.out_color()
    }

    fn check_cochain(&self, d: &MultiMap) -> Result<()> {
        if d.out_color() != self.module_color() || d.in_colors().iter().any(|&c| c != self.algebra_color()) {
            return Err(Error::Signature(format!(
                "cochain {} does not take {} values on {} inputs",
                d.signature(),
                self.module_color(),
                self.algebra_color()
            )));
        }
        Ok(())
    }
}

/// The Hochschild coboundary
/// `(bd)(a_1,…,a_{n+1}) = a_1 d(a_2,…) + Σ_i (-1)^i d(…, a_i a_{i+1}, …) + (-1)^{n+1} d(a_1,…,a_n) a_{n+1}`.
pub fn hochschild_b(d: &MultiMap, m: &Bimodule) -> Result<MultiMap> {
    m.check_cochain(d)?;
    let n = d.arity();
    let mut out = m.left.compose_at(2, d)?;
    for i in 1..=n {
        out.add_scaled(&d.compose_at(i, &m.product)?, &Rational::sign(i as i64))?;
    }
    out.add_scaled(&m.right.compose_at(1, d)?, &Rational::sign(n as i64 + 1))?;
    Ok(out)
}

/// A Lie algebra on one color with a representation on another (or the same).
#[derive(Clone, Debug)]
pub struct LieModule {
    /// `L ⊗ L → L`
    pub bracket: MultiMap,
    /// `L ⊗ M → M`, `(x, m) ↦ x·m`
    pub action: MultiMap,
}

impl LieModule {
    pub fn adjoint(bracket: &MultiMap) -> Self {
        LieModule { bracket: bracket.clone(), action: bracket.clone() }
    }

    /// `V` as a `U`-module through `g`: `x·m = [g(x), m]`.
    pub fn pulled_back(bracket_u: &MultiMap, bracket_v: &MultiMap, g: &MultiMap) -> Result<Self> {
        Ok(LieModule { bracket: bracket_u.clone(), action: bracket_v.compose_at(1, g)? })
    }
}

/// The Chevalley-Eilenberg coboundary, normalized as
/// `(bd)(x_1,…,x_{n+1}) = Σ_s (-1)^s x_s·d(…x̂_s…) + Σ_{s<t} (-1)^{s+t+1} d([x_s,x_t], …x̂_s…x̂_t…)`,
/// the negative of the textbook convention.
pub fn chevalley_eilenberg_b(d: &MultiMap, m: &LieModule) -> Result<MultiMap> {
    let lie = m.bracket.out_color();
    if d.out_color() != m.action.out_color() || d.in_colors().iter().any(|&c| c != lie) {
        return Err(Error::Signature(format!("cochain {} does not fit the module", d.signature())));
    }
    if !d.is_alternating() {
        return Err(Error::Invariant("Chevalley-Eilenberg cochains must be alternating".into()));
    }
    let n = d.arity();
    let acted = m.action.compose_at(2, d)?;
    let mut out: Option<MultiMap> = None;
    let mut add = |term: MultiMap, sign: i64| -> Result<()> {
        match out.as_mut() {
            None => out = Some(term.scale(&Rational::sign(sign))),
            Some(o) => o.add_scaled(&term, &Rational::sign(sign))?,
        }
        Ok(())
    };
    // one-based s, t; front(s, t) lists the moved letters first
    let front = |moved: &[usize]| {
        let mut images: Vec<usize> = moved.iter().map(|&i| i - 1).collect();
        images.extend((0..=n).filter(|i| !moved.contains(&(i + 1))));
        Permutation::new(images).expect("a permutation")
    };
    for s in 1..=n + 1 {
        add(acted.permute(&front(&[s]))?, s as i64)?;
    }
    if n >= 1 {
        let bracketed = d.compose_at(1, &m.bracket)?;
        for s in 1..=n + 1 {
            for t in s + 1..=n + 1 {
                add(bracketed.permute(&front(&[s, t]))?, (s + t + 1) as i64)?;
            }
        }
    }
    Ok(out.expect("at least one term"))
}
