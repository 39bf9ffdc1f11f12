use crate::engine::{AlgebraInstance, Cochain, InhomogeneousCochain};
use crate::error::{Error, Result};
use crate::linear::{enumerate_unshuffles, koszul_chi, koszul_epsilon, MultiMap, Permutation, Rational};
use crate::prop::{evaluate_with, GeneratorId, GraphTerm};

/// Evaluates `t` with the vertex at preorder position `chosen[i]` decorated by
/// `cochains[i]` and every other vertex by the structure map `β`. Vertices
/// whose decoration is zero make the result zero.
pub fn substitute_and_evaluate(
    t: &GraphTerm,
    chosen: &[usize],
    cochains: &[&Cochain],
    a: &AlgebraInstance,
) -> Result<MultiMap> {
    if chosen.len() != cochains.len() {
        return Err(Error::Argument(format!("{} vertices chosen for {} cochains", chosen.len(), cochains.len())));
    }
    let count = t.vertices().len();
    for (i, &v) in chosen.iter().enumerate() {
        if v >= count || chosen[..i].contains(&v) {
            return Err(Error::Argument(format!("invalid vertex choice {chosen:?} for a term with {count} vertices")));
        }
    }
    evaluate_with(a.model(), t, a.spaces(), |idx, gen| {
        Ok(match chosen.iter().position(|&v| v == idx) {
            Some(i) => cochains[i].get(gen),
            None => a.beta(gen),
        })
    })
}

fn check_inputs(inputs: &[&Cochain], a: &AlgebraInstance) -> Result<()> {
    for c in inputs {
        if c.model() != a.model() {
            return Err(Error::Model(format!("{} cochain used with a {} algebra", c.model(), a.model())));
        }
        c.check_spaces(a.spaces())?;
    }
    Ok(())
}

/// Degree of `l_k(f_1,…,f_k)`: `2 - k + Σ|f_i|`.
pub fn output_degree(inputs: &[&Cochain]) -> i64 {
    2 - inputs.len() as i64 + inputs.iter().map(|c| c.degree()).sum::<i64>()
}

/// The bracket `l_k(f_1,…,f_k)` obtained by graph substitution: on a
/// generator `ξ`, sum over the terms of `∂ξ` and over ordered `k`-tuples of
/// distinct vertices, decorating the `i`-th chosen vertex by `f_i` and the
/// others by `β`.
///
/// Each decorated term is weighted by `(-1)^{k-1} (-1)^{ν}`, with
/// `ν = Σ (k-i)|f_i|`, times the Koszul sign of moving `f_1,…,f_k` (of
/// internal degrees `|f_i| - 1`) into the preorder of their vertices. With
/// this weight every `l_k` is graded antisymmetric and the `l_k` satisfy the
/// L∞ relations; `l_1` is `θ ↦ θ∂`.
///
/// `targets` restricts the output to some generators of the output degree.
pub fn l_k(inputs: &[&Cochain], a: &AlgebraInstance, targets: Option<&[GeneratorId]>) -> Result<Cochain> {
    l_k_with(inputs, a, targets, SignRule::Graded)
}

/// Weighting of a decorated term in `l_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignRule {
    /// `(-1)^{k-1} (-1)^{ν} ε`, the rule used by [`l_k`].
    Graded,
    /// `(-1)^{ν}` alone. This reproduces the closed formulas for the
    /// associative and Lie morphism brackets term by term, but the resulting
    /// operations are not graded antisymmetric in general, so no alternation
    /// check is made on Lie outputs.
    Printed,
}

pub fn l_k_with(
    inputs: &[&Cochain],
    a: &AlgebraInstance,
    targets: Option<&[GeneratorId]>,
    rule: SignRule,
) -> Result<Cochain> {
    let model = a.model();
    check_inputs(inputs, a)?;
    let k = inputs.len();
    if k == 0 && !model.is_curved() {
        return Err(Error::Model(format!("{model} has no curvature term l_0")));
    }
    let degree = output_degree(inputs);
    let support = model.cochain_support(degree);
    let targets: Vec<GeneratorId> = match targets {
        None => support.clone(),
        Some(ts) => {
            if let Some(bad) = ts.iter().find(|g| !support.contains(g)) {
                return Err(Error::Argument(format!("{bad} is not in the support of degree {degree}")));
            }
            ts.to_vec()
        }
    };
    let degrees: Vec<i64> = inputs.iter().map(|c| c.degree() - 1).collect();
    let nu: i64 = inputs.iter().enumerate().map(|(i, c)| (k - 1 - i) as i64 * c.degree()).sum();
    let global = match rule {
        SignRule::Graded => Rational::sign(k as i64 - 1 + nu),
        SignRule::Printed => Rational::sign(nu),
    };

    let mut out = Cochain::zero(model, degree);
    for xi in targets {
        let info = model.info(xi)?;
        let mut acc = a.spaces().zero_map(info.output, &info.inputs);
        for (t, c) in model.differential(xi)?.iter() {
            let gens = t.vertices();
            if gens.len() < k {
                continue;
            }
            let with_beta: Vec<bool> = gens.iter().map(|&g| a.beta(g).is_some()).collect();
            for chosen in vertex_tuples(&gens, inputs, &with_beta) {
                let mut order: Vec<usize> = (0..k).collect();
                order.sort_by_key(|&i| chosen[i]);
                let eps = match rule {
                    SignRule::Graded => koszul_epsilon(&Permutation::new(order).expect("sorted indices"), &degrees),
                    SignRule::Printed => 1,
                };
                let value = substitute_and_evaluate(t, &chosen, inputs, a)?;
                let weight = (c * &global).signed(i64::from(eps < 0));
                acc.add_scaled(&value, &weight)?;
            }
        }
        if rule == SignRule::Graded && model.is_skew() && !acc.is_alternating() {
            return Err(Error::Invariant(format!("l_{k} produced a non-alternating value on {xi}")));
        }
        out.set(xi, acc)?;
    }
    Ok(out)
}

/// `l_k` extended multilinearly to sums of homogeneous cochains.
pub fn l_k_sum(inputs: &[&InhomogeneousCochain], a: &AlgebraInstance) -> Result<InhomogeneousCochain> {
    let mut out = InhomogeneousCochain::new();
    if inputs.is_empty() {
        out.add(&l_0(a)?)?;
        return Ok(out);
    }
    let parts: Vec<Vec<&Cochain>> = inputs.iter().map(|x| x.parts().collect()).collect();
    let mut index = vec![0; inputs.len()];
    if parts.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        let args: Vec<&Cochain> = index.iter().zip(&parts).map(|(&i, p)| p[i]).collect();
        out.add(&l_k(&args, a, None)?)?;
        // odometer over the choice of one part per slot
        let mut slot = 0;
        loop {
            if slot == index.len() {
                return Ok(out);
            }
            index[slot] += 1;
            if index[slot] < parts[slot].len() {
                break;
            }
            index[slot] = 0;
            slot += 1;
        }
    }
}

/// Ordered tuples of distinct vertices such that vertex `chosen[i]` carries a
/// generator on which `inputs[i]` is nonzero and every other vertex carries a
/// structure generator.
fn vertex_tuples(gens: &[GeneratorId], inputs: &[&Cochain], with_beta: &[bool]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(inputs.len());
    fn rec(
        gens: &[GeneratorId],
        inputs: &[&Cochain],
        with_beta: &[bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = current.len();
        if i == inputs.len() {
            let rest_ok = (0..gens.len()).all(|v| current.contains(&v) || with_beta[v]);
            if rest_ok {
                out.push(current.clone());
            }
            return;
        }
        for v in 0..gens.len() {
            if !current.contains(&v) && inputs[i].get(gens[v]).is_some() {
                current.push(v);
                rec(gens, inputs, with_beta, current, out);
                current.pop();
            }
        }
    }
    rec(gens, inputs, with_beta, &mut current, &mut out);
    out
}

/// The differential `δ = l_1`.
pub fn delta(theta: &Cochain, a: &AlgebraInstance) -> Result<Cochain> {
    l_k(&[theta], a, None)
}

/// The curvature `l_0`, a degree-2 cochain. Only curved models have one.
pub fn l_0(a: &AlgebraInstance) -> Result<Cochain> {
    l_k(&[], a, None)
}

/// Residual of the `n`-th L∞ relation
/// `Σ_{i+j=n+1} Σ_σ χ(σ)(-1)^{i(j-1)} l_j(l_i(x_σ(1),…,x_σ(i)), x_σ(i+1),…,x_σ(n))`,
/// where `σ` runs over `(i, n-i)`-unshuffles. For curved models the sum also
/// includes `i = 0`, the term `l_{n+1}(l_0, x_1,…,x_n)`.
pub fn verify_ln_relation(xs: &[&Cochain], a: &AlgebraInstance) -> Result<Cochain> {
    let n = xs.len();
    if n == 0 {
        return Err(Error::Argument("the L∞ relations start at n = 1".into()));
    }
    check_inputs(xs, a)?;
    let degrees: Vec<i64> = xs.iter().map(|c| c.degree()).collect();
    let out_degree = 3 - n as i64 + degrees.iter().sum::<i64>();
    let mut residual = Cochain::zero(a.model(), out_degree);
    let first = if a.model().is_curved() { 0 } else { 1 };
    for i in first..=n {
        let j = n + 1 - i;
        for sp in enumerate_unshuffles(i, n - i) {
            let p = sp.permutation.images();
            let chi = koszul_chi(&sp.permutation, &degrees);
            let inner_args: Vec<&Cochain> = p[..i].iter().map(|&q| xs[q]).collect();
            let inner = l_k(&inner_args, a, None)?;
            let mut outer_args = vec![&inner];
            outer_args.extend(p[i..].iter().map(|&q| xs[q]));
            let term = l_k(&outer_args, a, None)?;
            residual.add_scaled(&term, &chi.signed((i * (j - 1)) as i64))?;
        }
    }
    Ok(residual)
}

/// Sign of `l_k` in the Quantum Master Equation: `+, +, -, -, +, +, …`.
pub fn qme_sign(k: usize) -> Rational {
    Rational::sign(((k as i64) - 1).div_euclid(2))
}

/// `-l_0 + Σ_{k=1}^{k_max} (±1/k!) l_k(κ,…,κ)`, the `-l_0` only for curved
/// models. It vanishes exactly when `β + κ` is again an algebra over the
/// model. `k_max` must reach the last possibly nonzero bracket.
pub fn qme_residual(kappa: &Cochain, a: &AlgebraInstance, k_max: usize) -> Result<Cochain> {
    if kappa.degree() != 1 {
        return Err(Error::Argument(format!("κ must have degree 1, not {}", kappa.degree())));
    }
    let bound = a.model().qme_bound();
    if k_max < bound {
        return Err(Error::Argument(format!(
            "k_max = {k_max} is below {bound}, the last bracket that can be nonzero for {}",
            a.model()
        )));
    }
    let mut residual = Cochain::zero(a.model(), 2);
    if a.model().is_curved() {
        residual.add_scaled(&l_0(a)?, &-Rational::one())?;
    }
    let mut factorial = Rational::one();
    for k in 1..=k_max {
        factorial = factorial * Rational::from_integer(k as i64);
        let args = vec![kappa; k];
        let term = l_k(&args, a, None)?;
        residual.add_scaled(&term, &(qme_sign(k) * factorial.recip()?))?;
    }
    Ok(residual)
}
