//! Seeded verification suites shared by the command line and the acceptance
//! tests. Each suite runs a list of checks; a check passes when every trial
//! has an exactly zero residual (or an exact equality holds).

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::classical::{
    chevalley_eilenberg_b, gs_components, gs_d, hochschild_b, prop_to_gs, prop_to_s, s_components, s_delta, Bimodule,
    GSCochain, LieModule, SCochain,
};
use crate::engine::{delta, l_0, l_k, qme_residual, validate_algebra, verify_ln_relation, AlgebraInstance, Cochain};
use crate::error::{Error, Result};
use crate::linear::{Color, MultiMap, Rational};
use crate::oracles::{as_l2_formula, as_lk_formula, iso_ops_formula, lie_l2_formula, lie_lk_formula, Convention, IsoCochain};
use crate::prop::{differential_squared, GeneratorId, Model};
use crate::random::RandomSource;
use crate::samples::{random_algebra, random_cochain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    /// symbolic `∂² = 0` on generators
    Differential,
    /// `δ² = 0` on random cochains
    Delta2,
    /// the L∞ relations for `n = 1, 2, 3`
    Linfty,
    /// engine brackets against the closed formulas
    Oracle,
    /// `l_k = 0` when every argument has low degree, or `k ≥ 3` over Iso
    Vanishing,
    /// the maps to the Gerstenhaber-Schack and S-complexes are chain maps
    Transport,
    /// the QME holds exactly for algebras
    Qme,
    /// `l_2(l_0, w) = 0` and `l_1(w) = l_2(χ, w)` over Iso
    Curvature,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Differential,
        Suite::Delta2,
        Suite::Linfty,
        Suite::Oracle,
        Suite::Vanishing,
        Suite::Transport,
        Suite::Qme,
        Suite::Curvature,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Differential => "differential",
            Suite::Delta2 => "delta2",
            Suite::Linfty => "linfty",
            Suite::Oracle => "oracle",
            Suite::Vanishing => "vanishing",
            Suite::Transport => "transport",
            Suite::Qme => "qme",
            Suite::Curvature => "curvature",
        }
    }

    /// Whether the suite has anything to check for the model.
    pub fn applies_to(self, model: Model) -> bool {
        match self {
            Suite::Transport => model != Model::Iso,
            Suite::Curvature => model == Model::Iso,
            _ => true,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub model: Model,
    pub seed: u64,
    pub trials: usize,
    /// Largest cochain degree drawn (or generator degree for `differential`).
    pub max_degree: i64,
}

impl SuiteConfig {
    pub fn new(model: Model, seed: u64, trials: usize, max_degree: i64) -> Self {
        SuiteConfig { model, seed, trials, max_degree }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    /// Generators whose values were compared.
    pub generators: Vec<GeneratorId>,
    pub trials: usize,
    /// Descriptions of failed trials (at most a few are kept).
    pub failures: Vec<String>,
    pub failed: usize,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl Check {
    fn new(id: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            generators: Vec::new(),
            trials: 0,
            failures: Vec::new(),
            failed: 0,
            note: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 3 {
                self.failures.push(describe());
            }
        }
    }

    fn cover(&mut self, c: &Cochain) {
        for g in c.support() {
            if !self.generators.contains(&g) {
                self.generators.push(g);
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub config: SuiteConfig,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn elapsed(&self) -> Duration {
        self.checks.iter().map(|c| c.elapsed).sum()
    }

    /// Per-check wall time, kept apart from the deterministic report.
    pub fn timings(&self) -> String {
        self.checks.iter().map(|c| format!("{} {:.3}s\n", c.id, c.elapsed.as_secs_f64())).collect()
    }
}

impl fmt::Display for SuiteReport {
    /// One line per check, sorted by id; contains no timing so equal
    /// configurations print identical reports.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} model {} seed {} trials {} max-degree {}",
            self.suite, self.config.model, self.config.seed, self.config.trials, self.config.max_degree
        )?;
        for c in &self.checks {
            let gens: Vec<String> = c.generators.iter().map(|g| g.to_string()).collect();
            write!(
                f,
                "{} {} trials={} failed={} generators=[{}]",
                if c.passed() { "PASS" } else { "FAIL" },
                c.id,
                c.trials,
                c.failed,
                gens.join(",")
            )?;
            if let Some(note) = &c.note {
                write!(f, " ({note})")?;
            }
            writeln!(f)?;
            for msg in &c.failures {
                writeln!(f, "  {msg}")?;
            }
        }
        write!(f, "{}", if self.passed() { "ok" } else { "FAILED" })
    }
}

/// Runs one suite. Errors are input problems; mathematical failures are
/// reported in the checks.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    if !suite.applies_to(config.model) {
        return Err(Error::Model(format!("suite {suite} does not apply to {}", config.model)));
    }
    if config.max_degree < 1 {
        return Err(Error::Argument("max degree must be at least 1".into()));
    }
    let mut rng = RandomSource::new(config.seed);
    let mut checks = match suite {
        Suite::Differential => differential_suite(config)?,
        Suite::Delta2 => delta2_suite(config, &mut rng)?,
        Suite::Linfty => linfty_suite(config, &mut rng)?,
        Suite::Oracle => oracle_suite(config, &mut rng)?,
        Suite::Vanishing => vanishing_suite(config, &mut rng)?,
        Suite::Transport => transport_suite(config, &mut rng)?,
        Suite::Qme => qme_suite(config, &mut rng)?,
        Suite::Curvature => curvature_suite(config, &mut rng)?,
    };
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    for c in &mut checks {
        c.generators.sort_by_key(|g| (g.index, g.family));
    }
    Ok(SuiteReport { suite, config: config.clone(), checks })
}

fn timed(mut check: Check, body: impl FnOnce(&mut Check) -> Result<()>) -> Result<Check> {
    let start = Instant::now();
    body(&mut check)?;
    check.elapsed = start.elapsed();
    Ok(check)
}

/// Largest dimension used for random algebras: Lie brackets get a third
/// dimension so that alternating maps of arity three do not all vanish.
fn max_dim(model: Model) -> usize {
    if model == Model::LieMorphism {
        3
    } else {
        2
    }
}

fn algebra(model: Model, rng: &mut RandomSource) -> Result<AlgebraInstance> {
    random_algebra(model, rng, max_dim(model))
}

fn degree(rng: &mut RandomSource, max: i64) -> i64 {
    1 + rng.below(max as usize) as i64
}

fn differential_suite(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for d in 0..=config.max_degree {
        let gens = config.model.generators_of_degree(d);
        checks.push(timed(Check::new(format!("d2/internal-degree-{d}")), |c| {
            for g in gens {
                let sq = differential_squared(config.model, g)?;
                c.generators.push(g);
                c.record(sq.is_empty(), || format!("∂²{g} has {} terms", sq.len()));
            }
            Ok(())
        })?);
    }
    Ok(checks)
}

fn delta2_suite(config: &SuiteConfig, rng: &mut RandomSource) -> Result<Vec<Check>> {
    let model = config.model;
    let check = timed(Check::new("delta2"), |c| {
        for t in 0..config.trials {
            let a = algebra(model, rng)?;
            let d = degree(rng, config.max_degree);
            let theta = random_cochain(model, d, a.spaces(), rng)?;
            let dd = delta(&delta(&theta, &a)?, &a)?;
            c.cover(&dd);
            c.record(dd.is_zero(), || format!("trial {t}: δ² ≠ 0 in degree {d}"));
        }
        Ok(())
    })?;
    Ok(vec![check])
}

fn linfty_suite(config: &SuiteConfig, rng: &mut RandomSource) -> Result<Vec<Check>> {
    let model = config.model;
    let mut checks = Vec::new();
    for n in 1..=3usize {
        checks.push(timed(Check::new(format!("linfty/n={n}")), |c| {
            for t in 0..config.trials {
                let a = algebra(model, rng)?;
                let max = if n == 3 { config.max_degree.min(2) } else { config.max_degree };
                let degrees: Vec<i64> = (0..n).map(|_| degree(rng, max)).collect();
                let xs: Vec<Cochain> =
                    degrees.iter().map(|&d| random_cochain(model, d, a.spaces(), rng)).collect::<Result<_>>()?;
                let refs: Vec<&Cochain> = xs.iter().collect();
                let residual = verify_ln_relation(&refs, &a)?;
                c.cover(&residual);
                c.record(residual.is_zero(), || format!("trial {t}: relation fails for degrees {degrees:?}"));
            }
            Ok(())
        })?);
    }
    Ok(checks)
}

/// Degrees for `k` bracket arguments: small, with one argument raised so
/// that the closed formulas have terms.
fn bracket_degrees(model: Model, k: usize, rng: &mut RandomSource, max: i64) -> Vec<i64> {
    let mut degrees: Vec<i64> = (0..k).map(|_| degree(rng, max.min(2))).collect();
    if k >= 3 && model != Model::Iso && rng.coin() {
        // one argument with n_s = k - 1
        let lift = match model {
            Model::AssocMorphism => k as i64 - 2,
            _ => k as i64 - 1,
        };
        let i = rng.below(k);
        degrees[i] = degrees[i].max(lift);
    }
    degrees
}

fn random_inputs(model: Model, degrees: &[i64], a: &AlgebraInstance, rng: &mut RandomSource) -> Result<Vec<Cochain>> {
    degrees.iter().map(|&d| random_cochain(model, d, a.spaces(), rng)).collect()
}

fn oracle_suite(config: &SuiteConfig, rng: &mut RandomSource) -> Result<Vec<Check>> {
    let model = config.model;
    let ks: &[usize] = if model == Model::Iso { &[0, 1, 2, 3] } else { &[1, 2, 3, 4] };
    let mut checks = Vec::new();
    for &k in ks {
        checks.push(timed(Check::new(format!("oracle/l_{k}")), |c| {
            if model == Model::Iso && k == 0 {
                c.note = Some("over F = G = 0".into());
            }
            for t in 0..config.trials {
                let mut a = algebra(model, rng)?;
                if model == Model::Iso && k == 0 {
                    a = AlgebraInstance::trivial(model, a.spaces().clone());
                }
                let degrees = bracket_degrees(model, k, rng, config.max_degree);
                let xs = random_inputs(model, &degrees, &a, rng)?;
                let refs: Vec<&Cochain> = xs.iter().collect();
                let engine = l_k(&refs, &a, None)?;
                let oracle = oracle_bracket(&refs, &a)?;
                c.cover(&engine);
                c.record(engine == oracle, || format!("trial {t}: engine and formula differ for degrees {degrees:?}"));
            }
            Ok(())
        })?);
    }
    Ok(checks)
}

/// The closed-form bracket of the inputs, as a cochain: the classical
/// coboundaries for `k = 1` over As and Lie, the graded closed formulas
/// otherwise.
pub fn oracle_bracket(xs: &[&Cochain], a: &AlgebraInstance) -> Result<Cochain> {
    let sp = a.spaces();
    match a.model() {
        Model::AssocMorphism => {
            let comps: Vec<GSCochain> = xs.iter().map(|x| gs_components(x, sp)).collect::<Result<_>>()?;
            let (mu, nu, g) = (a.structure_map(0), a.structure_map(1), a.structure_map(2));
            let out = match comps.as_slice() {
                [x] => assoc_l1(x, mu, nu, g)?,
                [x, y] => as_l2_formula(x, y, nu, g, Convention::Graded)?,
                _ => as_lk_formula(&comps.iter().collect::<Vec<_>>(), g, Convention::Graded)?,
            };
            crate::classical::gs_from_components(&out)
        }
        Model::LieMorphism => {
            let comps: Vec<SCochain> = xs.iter().map(|x| s_components(x, sp)).collect::<Result<_>>()?;
            let (mu, nu, g) = (a.structure_map(0), a.structure_map(1), a.structure_map(2));
            let out = match comps.as_slice() {
                [x] => lie_l1(x, mu, nu, g)?,
                [x, y] => lie_l2_formula(x, y, nu, g, Convention::Graded)?,
                _ => lie_lk_formula(&comps.iter().collect::<Vec<_>>(), g, Convention::Graded)?,
            };
            crate::classical::s_from_components(&out)
        }
        Model::Iso => {
            let comps: Vec<IsoCochain> = xs.iter().map(|x| IsoCochain::from_cochain(x, sp)).collect::<Result<_>>()?;
            let refs: Vec<&IsoCochain> = comps.iter().collect();
            iso_ops_formula(&refs, a.structure_map(0), a.structure_map(1))?.to_cochain()
        }
    }
}

/// `((-1)^{n+1} bθ_U, (-1)^{n+1} bθ_V, gθ_U - θ_V g^{⊗n} - (-1)^n bθ_g)`.
fn assoc_l1(x: &GSCochain, mu: &MultiMap, nu: &MultiMap, g: &MultiMap) -> Result<GSCochain> {
    let n = x.degree();
    let s = Rational::sign(n as i64 + 1);
    let mut third = &g.after(&x.x_u)? - &x.x_v.substitute(&vec![Some(g); n])?;
    third.add_scaled(&hochschild_b(&x.x_g, &Bimodule::pulled_back(mu, nu, g)?)?, &-Rational::sign(n as i64))?;
    GSCochain::new(
        n + 1,
        hochschild_b(&x.x_u, &Bimodule::regular(mu))?.scale(&s),
        hochschild_b(&x.x_v, &Bimodule::regular(nu))?.scale(&s),
        third,
        &crate::linear::Spaces::new(mu.out_dim(), nu.out_dim())?,
    )
}

/// `(bθ_U, bθ_V, -bθ_g + θ_V g^{⊗n} - gθ_U)`.
fn lie_l1(x: &SCochain, mu: &MultiMap, nu: &MultiMap, g: &MultiMap) -> Result<SCochain> {
    let n = x.degree();
    let b = chevalley_eilenberg_b(x.x_g(), &LieModule::pulled_back(mu, nu, g)?)?;
    let third = &(&x.x_v().substitute(&vec![Some(g); n])? - &g.after(x.x_u())?) - &b;
    SCochain::new(
        n + 1,
        chevalley_eilenberg_b(x.x_u(), &LieModule::adjoint(mu))?,
        chevalley_eilenberg_b(x.x_v(), &LieModule::adjoint(nu))?,
        third,
        &crate::linear::Spaces::new(mu.out_dim(), nu.out_dim())?,
    )
}

fn vanishing_suite(config: &SuiteConfig, rng: &mut RandomSource) -> Result<Vec<Check>> {
    let model = config.model;
    let mut checks = Vec::new();
    for k in 3..=5usize {
        checks.push(timed(Check::new(format!("vanishing/l_{k}")), |c| {
            // largest cochain degree whose θ_V has fewer than k - 1 inputs
            let top = match model {
                Model::AssocMorphism | Model::LieMorphism => k as i64 - 3,
                Model::Iso => config.max_degree.min(2),
            };
            if top < 1 {
                c.note = Some("vacuous: no cochain has fewer than k - 1 inputs on θ_V".into());
                return Ok(());
            }
            for t in 0..config.trials {
                let a = algebra(model, rng)?;
                // one argument up to the bound, the rest of degree one
                let mut degrees = vec![1; k];
                degrees[rng.below(k)] = degree(rng, top.min(config.max_degree));
                let xs = random_inputs(model, &degrees, &a, rng)?;
                let refs: Vec<&Cochain> = xs.iter().collect();
                let out = l_k(&refs, &a, None)?;
                c.cover(&out);
                c.record(out.is_zero(), || format!("trial {t}: l_{k} ≠ 0 for degrees {degrees:?}"));
            }
            Ok(())
        })?);
    }
    Ok(checks)
}

fn transport_suite(config: &SuiteConfig, rng: &mut RandomSource) -> Result<Vec<Check>> {
    let model = config.model;
    let id = if model == Model::AssocMorphism { "transport/gerstenhaber-schack" } else { "transport/s-complex" };
    let check = timed(Check::new(id), |c| {
        for t in 0..config.trials {
            let a = algebra(model, rng)?;
            let d = degree(rng, config.max_degree);
            let theta = random_cochain(model, d, a.spaces(), rng)?;
            let dt = delta(&theta, &a)?;
            c.cover(&dt);
            let ok = if model == Model::AssocMorphism {
                prop_to_gs(&dt, a.spaces())? == gs_d(&prop_to_gs(&theta, a.spaces())?, &a)?
            } else {
                prop_to_s(&dt, a.spaces())? == s_delta(&prop_to_s(&theta, a.spaces())?, &a)?
            };
            c.record(ok, || format!("trial {t}: transport does not commute with δ in degree {d}"));
        }
        Ok(())
    })?;
    Ok(vec![check])
}

/// A degree-1 cochain with the given structure maps as values.
pub fn structure_cochain(model: Model, maps: &[MultiMap]) -> Result<Cochain> {
    Cochain::from_values(model, 1, model.structure_generators().into_iter().zip(maps.iter().cloned()))
}

fn structure_maps(a: &AlgebraInstance) -> Vec<MultiMap> {
    (0..a.model().structure_generators().len()).map(|i| a.structure_map(i).clone()).collect()
}

/// Changes one entry of one structure map (keeping brackets alternating).
fn perturb(model: Model, maps: &mut [MultiMap], rng: &mut RandomSource) {
    let i = rng.below(maps.len());
    let m = &mut maps[i];
    let out = rng.below(m.out_dim());
    let inputs: Vec<usize> = m.in_dims().iter().map(|&d| rng.below(d)).collect();
    let bump = Rational::from_integer(1 + rng.below(2) as i64);
    let old = m.get(out, &inputs).clone();
    m.set(out, &inputs, old + bump.clone());
    if model.is_skew() && m.arity() == 2 {
        let swapped = [inputs[1], inputs[0]];
        let old = m.get(out, &swapped).clone();
        m.set(out, &swapped, old - bump);
    }
}

fn qme_suite(config: &SuiteConfig, rng: &mut RandomSource) -> Result<Vec<Check>> {
    let model = config.model;
    let mut checks = Vec::new();
    let mut valid = Check::new("qme/algebras");
    let mut invalid = Check::new("qme/non-algebras");
    let start = Instant::now();
    let mut trial = 0;
    while valid.trials < config.trials || invalid.trials < config.trials {
        trial += 1;
        if trial > 20 * config.trials + 100 {
            return Err(Error::Invariant("could not sample enough algebras and non-algebras".into()));
        }
        let target = qme_target(model, rng)?;
        // deform from the zero structure (always for Iso, where this is the
        // Maurer-Cartan setting), otherwise from another algebra on the same
        // spaces
        let base = if model == Model::Iso || rng.coin() {
            AlgebraInstance::trivial(model, target.spaces().clone())
        } else {
            match same_spaces(&target, rng)? {
                Some(b) => b,
                None => AlgebraInstance::trivial(model, target.spaces().clone()),
            }
        };
        let mut maps = structure_maps(&target);
        let want_valid = valid.trials < config.trials && (invalid.trials >= config.trials || rng.coin());
        if !want_valid {
            perturb(model, &mut maps, rng);
        }
        let shifted: Vec<MultiMap> =
            maps.iter().zip(structure_maps(&base)).map(|(m, b)| m - &b).collect();
        let kappa = structure_cochain(model, &shifted)?;
        let residual = qme_residual(&kappa, &base, model.qme_bound())?;
        let encoded = AlgebraInstance::new(model, target.spaces().clone(), maps, false)?;
        let holds = validate_algebra(&encoded)?.holds();
        let check = if holds { &mut valid } else { &mut invalid };
        if check.trials >= config.trials {
            continue;
        }
        check.cover(&residual);
        check.record(residual.is_zero() == holds, || {
            format!("trial {trial}: residual zero = {}, axioms hold = {holds}", residual.is_zero())
        });
    }
    let elapsed = start.elapsed();
    valid.elapsed = elapsed / 2;
    invalid.elapsed = elapsed / 2;
    checks.push(valid);
    checks.push(invalid);
    Ok(checks)
}

/// A QME target on two-dimensional spaces (Lie algebras may be larger):
/// `Φ ⊕ Φ^{-1}` for Iso, a random algebra otherwise.
fn qme_target(model: Model, rng: &mut RandomSource) -> Result<AlgebraInstance> {
    if model == Model::Iso {
        return crate::samples::random_iso(rng, 2);
    }
    loop {
        let a = algebra(model, rng)?;
        if model == Model::LieMorphism || a.spaces() == &crate::linear::Spaces::new(2, 2)? {
            return Ok(a);
        }
    }
}

fn same_spaces(target: &AlgebraInstance, rng: &mut RandomSource) -> Result<Option<AlgebraInstance>> {
    for _ in 0..50 {
        let b = algebra(target.model(), rng)?;
        if b.spaces() == target.spaces() {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

fn curvature_suite(config: &SuiteConfig, rng: &mut RandomSource) -> Result<Vec<Check>> {
    let model = config.model;
    let mut annihilates = Check::new("curvature/l_2(l_0,w)=0");
    annihilates.note = Some("over isomorphisms and F = G = 0".into());
    let mut inner = Check::new("curvature/l_1(w)=l_2(chi,w)");
    let start = Instant::now();
    for t in 0..config.trials {
        // an isomorphism, the zero diagram, or arbitrary F and G
        let kind = t % 3;
        let a = match kind {
            0 => algebra(model, rng)?,
            1 => AlgebraInstance::trivial(model, algebra(model, rng)?.spaces().clone()),
            _ => {
                let dim = 1 + rng.below(2);
                let sp = crate::linear::Spaces::new(dim, dim)?;
                let f = rng.multimap(Color::W, dim, &[Color::B], &[dim]);
                let g = rng.multimap(Color::B, dim, &[Color::W], &[dim]);
                AlgebraInstance::iso(sp, f, g)?
            }
        };
        let d = degree(rng, config.max_degree);
        let w = random_cochain(model, d, a.spaces(), rng)?;
        if kind < 2 {
            let l0 = l_0(&a)?;
            let z = l_k(&[&l0, &w], &a, None)?;
            annihilates.cover(&z);
            annihilates.record(z.is_zero(), || format!("trial {t}: l_2(l_0, w) ≠ 0 in degree {d}"));
        }
        let chi = structure_cochain(model, &structure_maps(&a))?;
        let lhs = delta(&w, &a)?;
        let rhs = l_k(&[&chi, &w], &a, None)?;
        inner.cover(&lhs);
        inner.record(lhs == rhs, || format!("trial {t}: l_1(w) ≠ l_2(χ, w) in degree {d}"));
    }
    let elapsed = start.elapsed();
    annihilates.elapsed = elapsed / 2;
    inner.elapsed = elapsed / 2;
    Ok(vec![annihilates, inner])
}
