use super::{nu, spaces_of, AdmissibleTuple, Convention, Sum};
use crate::classical::GSCochain;
use crate::error::{Error, Result};
use crate::linear::{Color, MultiMap, Rational};

/// `l_2(θ, ω)` for the associative-morphism model, on the raw components
/// `(θ(μ_n), θ(ν_n), θ(f_{n-1}))` and `(ω(μ_m), ω(ν_m), ω(f_{m-1}))`:
///
/// ```text
/// μ: -Σ_s (-1)^{(s+1)(m+1)} θ_U ∘_s ω_U - (-1)^{n+m} Σ_s (-1)^{(s+1)(n+1)} ω_U ∘_s θ_U
/// ν: the same with V
/// f: -Σ_s (-1)^{(s+1)(m+1)} θ_g ∘_s ω_U - (-1)^{n+m} Σ_s (-1)^{(s+1)(n+1)} ω_g ∘_s θ_U
///    + (-1)^n Σ_i (-1)^{(i-1)m} θ_V ∘_i ω_g + Σ_j (-1)^{jn} ω_V ∘_j θ_g
///    + (-1)^{nm+n+m} μ_V(θ_g ⊗ ω_g) + (-1)^{nm} μ_V(ω_g ⊗ θ_g)
/// ```
///
/// where `θ_V ∘_i ω_g` plugs `ω_g` into input `i` and `g` into the others.
pub fn as_l2_formula(
    theta: &GSCochain,
    omega: &GSCochain,
    mu_v: &MultiMap,
    g: &MultiMap,
    convention: Convention,
) -> Result<GSCochain> {
    let (n, m) = (theta.degree(), omega.degree());
    if n < 2 || m < 2 {
        return Err(Error::Argument("complex degrees below 2 carry no cochain".into()));
    }
    let (ni, mi) = (n as i64, m as i64);
    let degrees = [ni - 1, mi - 1];
    let first = convention.factor(&degrees, &[0, 1]);
    let second = convention.factor(&degrees, &[1, 0]);
    let spaces = spaces_of(&theta.x_u, &theta.x_v);
    let arity = n + m - 1;

    let hochschild = |x: &MultiMap, y: &MultiMap, slots: usize, other: i64, acc: &mut Sum, c: &Rational| {
        for s in 1..=slots {
            let sign = Rational::sign((s as i64 + 1) * (other + 1));
            acc.add(&x.compose_at(s, y)?, &(c * &sign))?;
        }
        Ok::<(), Error>(())
    };
    let swap = -Rational::sign(ni + mi);

    let mut u = Sum::new(&spaces, Color::B, Color::B, arity);
    hochschild(&theta.x_u, &omega.x_u, n, mi, &mut u, &-&first)?;
    hochschild(&omega.x_u, &theta.x_u, m, ni, &mut u, &(&swap * &second))?;

    let mut v = Sum::new(&spaces, Color::W, Color::W, arity);
    hochschild(&theta.x_v, &omega.x_v, n, mi, &mut v, &-&first)?;
    hochschild(&omega.x_v, &theta.x_v, m, ni, &mut v, &(&swap * &second))?;

    let mut f = Sum::new(&spaces, Color::W, Color::B, arity - 1);
    hochschild(&theta.x_g, &omega.x_u, n - 1, mi, &mut f, &-&first)?;
    hochschild(&omega.x_g, &theta.x_u, m - 1, ni, &mut f, &(&swap * &second))?;
    for i in 1..=n {
        let c = Rational::sign(ni + (i as i64 - 1) * mi);
        f.add(&plug(&theta.x_v, &[(i, &omega.x_g)], g)?, &(&c * &first))?;
    }
    for j in 1..=m {
        let c = Rational::sign(j as i64 * ni);
        f.add(&plug(&omega.x_v, &[(j, &theta.x_g)], g)?, &(&c * &second))?;
    }
    let cup = |x: &MultiMap, y: &MultiMap| mu_v.substitute(&[Some(x), Some(y)]);
    f.add(&cup(&theta.x_g, &omega.x_g)?, &(Rational::sign(ni * mi + ni + mi) * &first))?;
    f.add(&cup(&omega.x_g, &theta.x_g)?, &(Rational::sign(ni * mi) * &second))?;

    GSCochain::new(arity, u.0, v.0, f.0, &spaces)
}

/// `x(g ⊗ ⋯ ⊗ y_1 ⊗ ⋯ ⊗ g)` with `y` placed at the given one-based slots.
pub(super) fn plug(x: &MultiMap, placed: &[(usize, &MultiMap)], g: &MultiMap) -> Result<MultiMap> {
    let args: Vec<Option<&MultiMap>> = (1..=x.arity())
        .map(|p| Some(placed.iter().find(|(q, _)| *q == p).map_or(g, |(_, y)| *y)))
        .collect();
    x.substitute(&args)
}

/// `l_k(θ_1,…,θ_k)` for `k ≥ 3` on raw components. The `μ`- and
/// `ν`-components vanish and
///
/// ```text
/// f: -(-1)^{ν(θ_1,…,θ_k)} Σ_s Σ_a (-1)^a θ_{s,V} ∘_a (θ_{1,g},…,θ̂_{s,g},…,θ_{k,g})
/// ```
///
/// over all placements `a` of the other arguments into distinct inputs of
/// `θ_{s,V}`, with `(-1)^a = (-1)^{Σ_{i<j} r_i(r_j+1)}`.
pub fn as_lk_formula(thetas: &[&GSCochain], g: &MultiMap, convention: Convention) -> Result<GSCochain> {
    let k = thetas.len();
    if k < 3 {
        return Err(Error::Argument(format!("the closed formula covers k ≥ 3, got k = {k}")));
    }
    if thetas.iter().any(|x| x.degree() < 2) {
        return Err(Error::Argument("complex degrees below 2 carry no cochain".into()));
    }
    let degrees: Vec<i64> = thetas.iter().map(|x| x.degree() as i64 - 1).collect();
    let t = (3 + degrees.iter().sum::<i64>() + k as i64 - 2 * k as i64) as usize;
    let spaces = spaces_of(&thetas[0].x_u, &thetas[0].x_v);
    let blocks: Vec<usize> = degrees.iter().map(|&d| d as usize).collect();
    let global = -Rational::sign(nu(&degrees));

    let mut f = Sum::new(&spaces, Color::W, Color::B, t - 1);
    for s in 0..k {
        for tuple in AdmissibleTuple::enumerate(s, &blocks, thetas[s].degree(), false) {
            let placed: Vec<(usize, &MultiMap)> =
                tuple.a.iter().enumerate().filter_map(|(j, p)| p.map(|p| (p, &thetas[j].x_g))).collect();
            let term = plug(&thetas[s].x_v, &placed, g)?;
            let c = (&global * &convention.factor(&degrees, &tuple.order())).signed(tuple.assoc_exponent());
            f.add(&term, &c)?;
        }
    }
    GSCochain::new(
        t,
        spaces.zero_map(Color::B, &vec![Color::B; t]),
        spaces.zero_map(Color::W, &vec![Color::W; t]),
        f.0,
        &spaces,
    )
}
