use lidef::classical::{gs_components, gs_from_components, s_components, GSCochain, SCochain};
use lidef::engine::{l_k, l_k_with, AlgebraInstance, Cochain, SignRule};
use lidef::linear::{koszul_chi, Color, MultiMap, Permutation, Rational, Spaces};
use lidef::oracles::{
    as_l2_formula, as_lk_formula, iso_ops_formula, lie_l2_formula, lie_lk_formula, Convention, IsoCochain,
};
use lidef::prop::{GeneratorId, Model};
use lidef::random::RandomSource;
use lidef::samples::{random_algebra, random_cochain};
use lidef::suites::oracle_bracket;

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn scalar(out: Color, inputs: &[Color], c: i64) -> MultiMap {
    MultiMap::from_fn(out, 1, inputs.to_vec(), vec![1; inputs.len()], |_, _| q(c))
}

fn nonzero(c: &Cochain) -> Vec<GeneratorId> {
    c.values().iter().filter(|(_, m)| !m.is_zero()).map(|(g, _)| *g).collect()
}

fn inputs(model: Model, degrees: &[i64], a: &AlgebraInstance, rng: &mut RandomSource) -> Vec<Cochain> {
    degrees.iter().map(|&d| random_cochain(model, d, a.spaces(), rng).unwrap()).collect()
}

#[test]
fn printed_assoc_formulas_match_the_printed_rule() {
    let mut rng = RandomSource::new(31);
    for _ in 0..30 {
        let a = random_algebra(Model::AssocMorphism, &mut rng, 2).unwrap();
        let (nu, g) = (a.structure_map(1), a.structure_map(2));
        let k = 2 + rng.below(3);
        let degrees: Vec<i64> = (0..k).map(|_| 1 + rng.below(2) as i64).collect();
        let xs = inputs(Model::AssocMorphism, &degrees, &a, &mut rng);
        let refs: Vec<&Cochain> = xs.iter().collect();
        let engine = gs_components(&l_k_with(&refs, &a, None, SignRule::Printed).unwrap(), a.spaces()).unwrap();
        let comps: Vec<GSCochain> = xs.iter().map(|x| gs_components(x, a.spaces()).unwrap()).collect();
        let oracle = if k == 2 {
            as_l2_formula(&comps[0], &comps[1], nu, g, Convention::Printed).unwrap()
        } else {
            as_lk_formula(&comps.iter().collect::<Vec<_>>(), g, Convention::Printed).unwrap()
        };
        assert_eq!(engine, oracle, "degrees {degrees:?}");
    }
}

#[test]
fn printed_lie_formulas_match_where_alternating() {
    let mut rng = RandomSource::new(32);
    let mut compared = 0;
    for _ in 0..40 {
        let a = random_algebra(Model::LieMorphism, &mut rng, 3).unwrap();
        let (nu, g) = (a.structure_map(1), a.structure_map(2));
        let k = 2 + rng.below(2);
        let degrees: Vec<i64> = (0..k).map(|_| 1 + rng.below(2) as i64).collect();
        let xs = inputs(Model::LieMorphism, &degrees, &a, &mut rng);
        let refs: Vec<&Cochain> = xs.iter().collect();
        let comps: Vec<SCochain> = xs.iter().map(|x| s_components(x, a.spaces()).unwrap()).collect();
        let oracle = if k == 2 {
            lie_l2_formula(&comps[0], &comps[1], nu, g, Convention::Printed)
        } else {
            lie_lk_formula(&comps.iter().collect::<Vec<_>>(), g, Convention::Printed)
        };
        // the printed weight can leave the alternating maps
        let (Ok(engine), Ok(oracle)) = (l_k_with(&refs, &a, None, SignRule::Printed), oracle) else {
            continue;
        };
        assert_eq!(s_components(&engine, a.spaces()).unwrap(), oracle, "degrees {degrees:?}");
        compared += 1;
    }
    assert!(compared >= 20, "only {compared} comparisons");
}

#[test]
fn graded_formulas_match_the_engine() {
    let mut rng = RandomSource::new(33);
    for model in Model::ALL {
        for _ in 0..15 {
            let a = random_algebra(model, &mut rng, if model == Model::LieMorphism { 3 } else { 2 }).unwrap();
            let k = 1 + rng.below(3);
            let degrees: Vec<i64> = (0..k).map(|_| 1 + rng.below(2) as i64).collect();
            let xs = inputs(model, &degrees, &a, &mut rng);
            let refs: Vec<&Cochain> = xs.iter().collect();
            assert_eq!(l_k(&refs, &a, None).unwrap(), oracle_bracket(&refs, &a).unwrap(), "{model} {degrees:?}");
        }
    }
}

#[test]
fn graded_and_printed_differ_by_the_koszul_factor_on_degree_one() {
    let mut rng = RandomSource::new(34);
    for _ in 0..10 {
        let a = random_algebra(Model::AssocMorphism, &mut rng, 2).unwrap();
        let g = a.structure_map(2);
        let xs = inputs(Model::AssocMorphism, &[1, 1, 1, 1], &a, &mut rng);
        let comps: Vec<GSCochain> = xs.iter().map(|x| gs_components(x, a.spaces()).unwrap()).collect();
        let refs: Vec<&GSCochain> = comps.iter().collect();
        let printed = as_lk_formula(&refs, g, Convention::Printed).unwrap();
        let graded = as_lk_formula(&refs, g, Convention::Graded).unwrap();
        assert_eq!(graded, printed.scale(&q(-1)));
    }
}

#[test]
fn graded_assoc_l2_is_antisymmetric() {
    let mut rng = RandomSource::new(35);
    for _ in 0..20 {
        let a = random_algebra(Model::AssocMorphism, &mut rng, 2).unwrap();
        let (nu, g) = (a.structure_map(1), a.structure_map(2));
        let (n, m) = (2 + rng.below(2), 2 + rng.below(2));
        let x = gs_components(&random_cochain(Model::AssocMorphism, n as i64 - 1, a.spaces(), &mut rng).unwrap(), a.spaces()).unwrap();
        let y = gs_components(&random_cochain(Model::AssocMorphism, m as i64 - 1, a.spaces(), &mut rng).unwrap(), a.spaces()).unwrap();
        let xy = as_l2_formula(&x, &y, nu, g, Convention::Graded).unwrap();
        let yx = as_l2_formula(&y, &x, nu, g, Convention::Graded).unwrap();
        let chi = koszul_chi(&Permutation::new(vec![1, 0]).unwrap(), &[n as i64 - 1, m as i64 - 1]);
        assert_eq!(yx, xy.scale(&chi));
    }
}

#[test]
fn graded_lie_l3_is_antisymmetric() {
    let mut rng = RandomSource::new(36);
    for _ in 0..10 {
        let a = random_algebra(Model::LieMorphism, &mut rng, 3).unwrap();
        let g = a.structure_map(2);
        let degrees = [1 + rng.below(2) as i64, 1 + rng.below(2) as i64, 1];
        let xs: Vec<SCochain> = inputs(Model::LieMorphism, &degrees, &a, &mut rng)
            .iter()
            .map(|x| s_components(x, a.spaces()).unwrap())
            .collect();
        let forward = lie_lk_formula(&[&xs[0], &xs[1], &xs[2]], g, Convention::Graded).unwrap();
        let swapped = lie_lk_formula(&[&xs[1], &xs[0], &xs[2]], g, Convention::Graded).unwrap();
        let chi = koszul_chi(&Permutation::new(vec![1, 0, 2]).unwrap(), &degrees);
        assert_eq!(s_components(&lidef::classical::s_from_components(&swapped).unwrap(), a.spaces()).unwrap(), {
            let c = lidef::classical::s_from_components(&forward).unwrap().scale(&chi);
            s_components(&c, a.spaces()).unwrap()
        });
    }
}

#[test]
fn assoc_lk_is_multilinear() {
    let mut rng = RandomSource::new(37);
    for _ in 0..10 {
        let a = random_algebra(Model::AssocMorphism, &mut rng, 2).unwrap();
        let g = a.structure_map(2);
        let xs = inputs(Model::AssocMorphism, &[1, 2, 1], &a, &mut rng);
        let extra = random_cochain(Model::AssocMorphism, 2, a.spaces(), &mut rng).unwrap();
        let c = rng.rational();
        let mut combo = xs[1].clone();
        combo.add_scaled(&extra, &c).unwrap();
        let lk = |mid: &Cochain| {
            let comps: Vec<GSCochain> =
                [&xs[0], mid, &xs[2]].iter().map(|x| gs_components(x, a.spaces()).unwrap()).collect();
            gs_from_components(&as_lk_formula(&comps.iter().collect::<Vec<_>>(), g, Convention::Graded).unwrap())
                .unwrap()
        };
        let mut expected = lk(&xs[1]);
        expected.add_scaled(&lk(&extra), &c).unwrap();
        assert_eq!(lk(&combo), expected);
    }
}

#[test]
fn higher_brackets_vanish_on_the_source_and_target_products() {
    let mut rng = RandomSource::new(38);
    for model in [Model::AssocMorphism, Model::LieMorphism] {
        let a = random_algebra(model, &mut rng, 3).unwrap();
        let xs = inputs(model, &[2, 1, 2], &a, &mut rng);
        let refs: Vec<&Cochain> = xs.iter().collect();
        let out = l_k(&refs, &a, None).unwrap();
        for g in nonzero(&out) {
            assert_eq!(g.family, GeneratorId::f(0).family, "{model}: l_3 nonzero on {g}");
        }
    }
}

#[test]
fn assoc_l3_of_degree_one_scalars() {
    // dims 1: θ_s has θ_V = w_s on ν_2 and θ_g = v_s on f_1; l_3 lands on
    // f_2 as 2 Σ_s w_s Π_{j≠s} v_j
    let sp = Spaces::new(1, 1).unwrap();
    let a = AlgebraInstance::assoc(
        sp.clone(),
        scalar(Color::B, &[Color::B, Color::B], 1),
        scalar(Color::W, &[Color::W, Color::W], 1),
        scalar(Color::W, &[Color::B], 1),
    )
    .unwrap();
    let (w, v) = ([2, 3, 5], [7, 11, 13]);
    let xs: Vec<Cochain> = (0..3)
        .map(|s| {
            Cochain::from_values(
                Model::AssocMorphism,
                1,
                [
                    (GeneratorId::nu(2), scalar(Color::W, &[Color::W, Color::W], w[s])),
                    (GeneratorId::f(1), scalar(Color::W, &[Color::B], v[s])),
                ],
            )
            .unwrap()
        })
        .collect();
    let out = l_k(&[&xs[0], &xs[1], &xs[2]], &a, None).unwrap();
    let expected: i64 = 2 * (w[0] * v[1] * v[2] + w[1] * v[0] * v[2] + w[2] * v[0] * v[1]);
    assert_eq!(nonzero(&out), [GeneratorId::f(2)]);
    assert_eq!(out.get(GeneratorId::f(2)).unwrap(), &scalar(Color::W, &[Color::B, Color::B], expected));
}

#[test]
fn lie_l3_on_degree_one_cochains_need_not_vanish() {
    // three degree-1 cochains have n_s = 1 < k - 1 = 2, yet θ_V has two
    // inputs to receive the other two θ_g
    let mut rng = RandomSource::new(39);
    let mut nonzero = 0;
    for _ in 0..10 {
        let a = random_algebra(Model::LieMorphism, &mut rng, 3).unwrap();
        let xs = inputs(Model::LieMorphism, &[1, 1, 1], &a, &mut rng);
        let refs: Vec<&Cochain> = xs.iter().collect();
        let out = l_k(&refs, &a, None).unwrap();
        assert_eq!(out, oracle_bracket(&refs, &a).unwrap());
        nonzero += usize::from(!out.is_zero());
    }
    assert!(nonzero > 0);
}

#[test]
fn oracles_are_zero_on_zero_inputs() {
    let mut rng = RandomSource::new(40);
    let a = random_algebra(Model::AssocMorphism, &mut rng, 2).unwrap();
    let sp = a.spaces().clone();
    let (nu, g) = (a.structure_map(1), a.structure_map(2));
    let z = GSCochain::zero(3, &sp).unwrap();
    let x = gs_components(&random_cochain(Model::AssocMorphism, 1, &sp, &mut rng).unwrap(), &sp).unwrap();
    assert!(as_l2_formula(&z, &x, nu, g, Convention::Graded).unwrap().is_zero());
    assert!(as_lk_formula(&[&x, &z, &x], g, Convention::Graded).unwrap().is_zero());
}

#[test]
fn oracles_reject_degree_one_complex_cochains() {
    let sp = Spaces::new(1, 1).unwrap();
    let mut rng = RandomSource::new(41);
    let a = random_algebra(Model::AssocMorphism, &mut rng, 2).unwrap();
    let one = GSCochain::zero(1, &sp).unwrap();
    let two = GSCochain::zero(2, &sp).unwrap();
    assert!(as_l2_formula(&one, &two, a.structure_map(1), a.structure_map(2), Convention::Graded).is_err());
    assert!(as_lk_formula(&[&two, &two], a.structure_map(2), Convention::Graded).is_err());
}

#[test]
fn iso_parity_cases_by_hand() {
    let (f, g) = (scalar(Color::W, &[Color::B], 2), scalar(Color::B, &[Color::W], 3));
    let odd = IsoCochain::new(1, scalar(Color::W, &[Color::B], 5), scalar(Color::B, &[Color::W], 7)).unwrap();
    let even = IsoCochain::new(2, scalar(Color::B, &[Color::B], 11), scalar(Color::W, &[Color::W], 13)).unwrap();
    // l_1 odd: (Gα + βF) ⊕ (αG + Fβ)
    let l1 = iso_ops_formula(&[&odd], &f, &g).unwrap();
    assert_eq!((l1.first, l1.second), (scalar(Color::B, &[Color::B], 3 * 5 + 7 * 2), scalar(Color::W, &[Color::W], 5 * 3 + 2 * 7)));
    // l_1 even on scalars: Fγ - δF and Gδ - γG
    let l1 = iso_ops_formula(&[&even], &f, &g).unwrap();
    assert_eq!((l1.first, l1.second), (scalar(Color::W, &[Color::B], 2 * 11 - 13 * 2), scalar(Color::B, &[Color::W], 3 * 13 - 11 * 3)));
    // l_2 odd, odd: (β'α'' + β''α') ⊕ (α'β'' + α''β')
    let l2 = iso_ops_formula(&[&odd, &odd], &f, &g).unwrap();
    assert_eq!((l2.first, l2.second), (scalar(Color::B, &[Color::B], 70), scalar(Color::W, &[Color::W], 70)));
    // l_2 odd, even: (αγ - δα) ⊕ (βδ - γβ)
    let l2 = iso_ops_formula(&[&odd, &even], &f, &g).unwrap();
    assert_eq!((l2.first, l2.second), (scalar(Color::W, &[Color::B], 5 * 11 - 13 * 5), scalar(Color::B, &[Color::W], 7 * 13 - 11 * 7)));
    let l2 = iso_ops_formula(&[&even, &odd], &f, &g).unwrap();
    assert_eq!((l2.first, l2.second), (scalar(Color::W, &[Color::B], 10), scalar(Color::B, &[Color::W], -14)));
    // even brackets of scalars commute
    assert!(iso_ops_formula(&[&even, &even], &f, &g).unwrap().first.is_zero());
    let l3 = iso_ops_formula(&[&odd, &odd, &even], &f, &g).unwrap();
    assert_eq!(l3.degree, 3);
    assert!(l3.first.is_zero() && l3.second.is_zero());
}

#[test]
fn iso_curvature_over_a_general_diagram() {
    let mut rng = RandomSource::new(42);
    for _ in 0..10 {
        let sp = Spaces::new(2, 2).unwrap();
        let f = rng.multimap(Color::W, 2, &[Color::B], &[2]);
        let g = rng.multimap(Color::B, 2, &[Color::W], &[2]);
        let a = AlgebraInstance::iso(sp.clone(), f.clone(), g.clone()).unwrap();
        let l0 = IsoCochain::from_cochain(&lidef::engine::l_0(&a).unwrap(), &sp).unwrap();
        assert_eq!(l0.first, &sp.identity(Color::B) - &g.after(&f).unwrap());
        assert_eq!(l0.second, &sp.identity(Color::W) - &f.after(&g).unwrap());
        let at_zero = lidef::engine::l_0(&AlgebraInstance::trivial(Model::Iso, sp.clone())).unwrap();
        let printed = iso_ops_formula(&[], &f, &g).unwrap();
        assert_eq!(IsoCochain::from_cochain(&at_zero, &sp).unwrap(), printed);
    }
}
