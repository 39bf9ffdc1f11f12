use super::assoc::plug;
use super::{nu, spaces_of, AdmissibleTuple, Convention, Sum};
use crate::classical::SCochain;
use crate::error::{Error, Result};
use crate::linear::{enumerate_block_unshuffles, enumerate_unshuffles, Color, MultiMap, Rational};

/// `Σ_{σ∈S^<_{blocks}} sgn(σ) x∘σ`.
fn unshuffled(x: &MultiMap, blocks: &[usize], acc: &mut Sum, c: &Rational) -> Result<()> {
    for sp in enumerate_block_unshuffles(blocks)? {
        acc.add(&x.permute(&sp.permutation)?, &c.clone().signed(i64::from(sp.permutation.sign() < 0)))?;
    }
    Ok(())
}

/// `Σ_{σ∈S_{p,q}} sgn(σ) x∘σ`, plain unshuffles.
fn unshuffled_pair(x: &MultiMap, p: usize, q: usize, acc: &mut Sum, c: &Rational) -> Result<()> {
    for sp in enumerate_unshuffles(p, q) {
        acc.add(&x.permute(&sp.permutation)?, &c.clone().signed(i64::from(sp.permutation.sign() < 0)))?;
    }
    Ok(())
}

/// `l_2(θ, ω)` for the Lie-morphism model with `θ ∈ C^n`, `ω ∈ C^m`, on raw
/// components `(θ(μ_{n+1}), θ(ν_{n+1}), θ(f_n))`:
///
/// ```text
/// μ: (-1)^{mn} (Σ_{S_{m+1,n}} sgn θ_U∘_1ω_U∘σ + (-1)^{m+n} Σ_{S_{n+1,m}} sgn ω_U∘_1θ_U∘σ)
/// ν: the same with V
/// f: (-1)^{m(n-1)} (Σ_{S_{m+1,n-1}} sgn θ_g∘_1ω_U∘σ + Σ_{S_{n+1,m-1}} sgn ω_g∘_1θ_U∘σ)
///    + (-1)^n (Σ_{S^<_{1,…,1,m}} sgn θ_V(g^{⊗n} ⊗ ω_g)∘σ + Σ_{S^<_{1,…,1,n}} sgn ω_V(g^{⊗m} ⊗ θ_g)∘σ)
///      (for a unary ω_g, summed over every slot of θ_V)
///    - (Σ_{S^<_{n,m}} sgn μ_V(θ_g ⊗ ω_g)∘σ + (-1)^{n+m} Σ_{S^<_{m,n}} sgn μ_V(ω_g ⊗ θ_g)∘σ)
/// ```
///
/// Of the last two sums only those with nondecreasing blocks exist; the other
/// one is skipped.
pub fn lie_l2_formula(
    theta: &SCochain,
    omega: &SCochain,
    mu_v: &MultiMap,
    g: &MultiMap,
    convention: Convention,
) -> Result<SCochain> {
    if theta.degree() < 2 || omega.degree() < 2 {
        return Err(Error::Argument("complex degrees below 2 carry no cochain".into()));
    }
    let (n, m) = (theta.degree() - 1, omega.degree() - 1);
    let (ni, mi) = (n as i64, m as i64);
    let degrees = [ni, mi];
    let first = convention.factor(&degrees, &[0, 1]);
    let second = convention.factor(&degrees, &[1, 0]);
    let (t, w) = (theta.components(), omega.components());
    let spaces = spaces_of(&t.x_u, &t.x_v);
    let arity = n + m + 1;

    let outer = Rational::sign(mi * ni);
    let swap = Rational::sign(mi + ni);
    let mut u = Sum::new(&spaces, Color::B, Color::B, arity);
    unshuffled_pair(&t.x_u.compose_at(1, &w.x_u)?, m + 1, n, &mut u, &(&outer * &first))?;
    unshuffled_pair(&w.x_u.compose_at(1, &t.x_u)?, n + 1, m, &mut u, &(&(&outer * &swap) * &second))?;
    let mut v = Sum::new(&spaces, Color::W, Color::W, arity);
    unshuffled_pair(&t.x_v.compose_at(1, &w.x_v)?, m + 1, n, &mut v, &(&outer * &first))?;
    unshuffled_pair(&w.x_v.compose_at(1, &t.x_v)?, n + 1, m, &mut v, &(&(&outer * &swap) * &second))?;

    let mut f = Sum::new(&spaces, Color::W, Color::B, arity - 1);
    let c = Rational::sign(mi * (ni - 1));
    unshuffled_pair(&t.x_g.compose_at(1, &w.x_u)?, m + 1, n - 1, &mut f, &(&c * &first))?;
    unshuffled_pair(&w.x_g.compose_at(1, &t.x_u)?, n + 1, m - 1, &mut f, &(&c * &second))?;

    // ω_g goes into every slot of θ_V that keeps the blocks nondecreasing:
    // the last one, or any slot when ω_g is unary.
    let c = Rational::sign(ni);
    for (x, y, xc, arity, factor) in [(t, w, n, m, &first), (w, t, m, n, &second)] {
        for tuple in AdmissibleTuple::enumerate(0, &[xc, arity], xc + 1, true) {
            let slot = tuple.a[1].expect("placed");
            let term = plug(&x.x_v, &[(slot, &y.x_g)], g)?;
            unshuffled(&term, &tuple.r, &mut f, &(&c * factor))?;
        }
    }

    if n <= m {
        let cup = mu_v.substitute(&[Some(&t.x_g), Some(&w.x_g)])?;
        unshuffled(&cup, &[n, m], &mut f, &-&first)?;
    }
    if m <= n {
        let cup = mu_v.substitute(&[Some(&w.x_g), Some(&t.x_g)])?;
        unshuffled(&cup, &[m, n], &mut f, &-(&swap * &second))?;
    }
    SCochain::new(arity, u.0, v.0, f.0, &spaces)
}

/// `l_k(θ_1,…,θ_k)` for `k ≥ 3`, `θ_s ∈ C^{n_s}`, on raw components. The
/// `μ`- and `ν`-components vanish and
///
/// ```text
/// f: (-1)^{ν} Σ_s Σ_{a'∈A} Σ_{σ∈S^<_{r_1,…,r_{n_s+1}}} sgn(σ) (-1)^{a'} θ_{s,V} ∘_{a'} (θ_{1,g},…,θ̂_{s,g},…,θ_{k,g}) ∘ σ
/// ```
///
/// with `A` the admissible placements and
/// `(-1)^{a'} = (-1)^{(n_s+1)n_s/2 + Σ_i r_i(n_s+1-i)}`.
pub fn lie_lk_formula(thetas: &[&SCochain], g: &MultiMap, convention: Convention) -> Result<SCochain> {
    let k = thetas.len();
    if k < 3 {
        return Err(Error::Argument(format!("the closed formula covers k ≥ 3, got k = {k}")));
    }
    if thetas.iter().any(|x| x.degree() < 2) {
        return Err(Error::Argument("complex degrees below 2 carry no cochain".into()));
    }
    let degrees: Vec<i64> = thetas.iter().map(|x| x.degree() as i64 - 1).collect();
    let t = (2 - k as i64 + degrees.iter().sum::<i64>()) as usize;
    let spaces = spaces_of(thetas[0].x_u(), thetas[0].x_v());
    let blocks: Vec<usize> = degrees.iter().map(|&d| d as usize).collect();
    let global = Rational::sign(nu(&degrees));

    let mut f = Sum::new(&spaces, Color::W, Color::B, t);
    for s in 0..k {
        for tuple in AdmissibleTuple::enumerate(s, &blocks, thetas[s].degree(), true) {
            let placed: Vec<(usize, &MultiMap)> =
                tuple.a.iter().enumerate().filter_map(|(j, p)| p.map(|p| (p, thetas[j].x_g()))).collect();
            let term = plug(thetas[s].x_v(), &placed, g)?;
            let c = (&global * &convention.factor(&degrees, &tuple.order())).signed(tuple.lie_exponent());
            unshuffled(&term, &tuple.r, &mut f, &c)?;
        }
    }
    SCochain::new(
        t + 1,
        spaces.zero_map(Color::B, &vec![Color::B; t + 1]),
        spaces.zero_map(Color::W, &vec![Color::W; t + 1]),
        f.0,
        &spaces,
    )
}
