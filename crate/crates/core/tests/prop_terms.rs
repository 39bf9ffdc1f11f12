use std::collections::BTreeMap;

use lidef::linear::{Color, MultiMap, Rational, Spaces};
use lidef::prop::{
    canonicalize, differential_squared, evaluate_sum, graph_evaluate, parse_sum, parse_term, sum_to_sexpr,
    term_to_sexpr, FormalSum, GeneratorId, GraphTerm, Model, Node,
};
use lidef::random::RandomSource;
use lidef::Error;

fn gen(s: &str) -> GeneratorId {
    s.parse().unwrap()
}

fn lines(model: Model, g: &str) -> Vec<String> {
    sum_to_sexpr(&model.differential(gen(g)).unwrap()).lines().map(String::from).collect()
}

#[test]
fn differential_squares_to_zero_up_to_degree_six() {
    for model in Model::ALL {
        for g in model.generators_up_to(6) {
            let d2 = differential_squared(model, g).unwrap();
            assert!(d2.is_empty(), "{model} {g}: ∂² =\n{}", sum_to_sexpr(&d2));
        }
    }
}

#[test]
fn assoc_low_degree_differentials() {
    assert!(Model::AssocMorphism.differential(gen("mu_2")).unwrap().is_empty());
    assert!(Model::AssocMorphism.differential(gen("f_1")).unwrap().is_empty());
    assert_eq!(
        lines(Model::AssocMorphism, "mu_3"),
        ["1 (compose (mu 2) (mu 2) _)", "-1 (compose (mu 2) _ (mu 2))"]
    );
    assert_eq!(
        lines(Model::AssocMorphism, "f_2"),
        ["-1 (compose (nu 2) (f 1) (f 1))", "1 (compose (f 1) (mu 2))"]
    );
}

#[test]
fn iso_low_degree_differentials() {
    assert!(Model::Iso.differential(gen("f_0")).unwrap().is_empty());
    assert_eq!(lines(Model::Iso, "f_1"), ["1 (compose (g 0) (f 0))", "-1 (unit B)"]);
    assert_eq!(lines(Model::Iso, "g_1"), ["1 (compose (f 0) (g 0))", "-1 (unit W)"]);
    let mut f2: Vec<String> = lines(Model::Iso, "f_2");
    f2.sort();
    assert_eq!(f2, ["-1 (compose (g 1) (f 0))", "1 (compose (f 0) (f 1))"]);
}

#[test]
fn lie_mu3_is_the_jacobiator() {
    assert_eq!(
        lines(Model::LieMorphism, "mu_3"),
        [
            "1 (compose (mu 2) (mu 2) _)",
            "-1 (compose (mu 2) (mu 2) _ (perm 1 3 2))",
            "-1 (compose (mu 2) _ (mu 2))",
        ]
    );
}

#[test]
fn invalid_generator_is_a_model_error() {
    assert!(matches!(Model::Iso.differential(gen("mu_2")), Err(Error::Model(_))));
}

#[test]
fn ill_colored_terms_are_rejected() {
    // f_1 outputs W but mu_2 reads B
    let root = Node::Vertex {
        gen: gen("mu_2"),
        children: vec![Node::Vertex { gen: gen("f_1"), children: vec![Node::Leaf(0)] }, Node::Leaf(1)],
    };
    assert!(matches!(GraphTerm::new(Model::AssocMorphism, root), Err(Error::Signature(_))));
    let repeated = Node::Vertex { gen: gen("mu_2"), children: vec![Node::Leaf(0), Node::Leaf(0)] };
    assert!(GraphTerm::new(Model::AssocMorphism, repeated).is_err());
}

fn all_terms(model: Model, max_degree: i64) -> Vec<GraphTerm> {
    let mut out = Vec::new();
    for g in model.generators_up_to(max_degree) {
        out.push(GraphTerm::corolla(model, g).unwrap());
        for (t, _) in model.differential(g).unwrap().iter() {
            out.push(t.clone());
        }
        for (t, _) in differential_squared_terms(model, g).iter() {
            out.push(t.clone());
        }
    }
    out
}

/// Three-level terms: the terms of `∂` applied once more, before cancellation.
fn differential_squared_terms(model: Model, g: GeneratorId) -> FormalSum {
    let mut out = FormalSum::new();
    for (t, _) in model.differential(g).unwrap().iter() {
        for (u, c) in lidef::prop::differentiate(model, t).unwrap().iter() {
            out.add_canonical(model, c.abs(), u.clone()).unwrap();
        }
    }
    out
}

#[test]
fn canonicalize_is_idempotent() {
    for model in Model::ALL {
        for t in all_terms(model, 4) {
            let (s1, c1) = canonicalize(model, &t).unwrap();
            let (s2, c2) = canonicalize(model, &c1).unwrap();
            assert_eq!(c1, c2);
            assert!(s2.is_one());
            assert!(s1.is_one() || s1 == -Rational::one());
        }
    }
}

#[test]
fn identity_ordered_terms_are_already_canonical() {
    let t = parse_term(Model::LieMorphism, "(compose (nu 2) (f 1) (f 2))").unwrap();
    let (s, c) = canonicalize(Model::LieMorphism, &t).unwrap();
    assert!(s.is_one());
    assert_eq!(c, t);
}

#[test]
fn different_child_orders_canonicalize_identically() {
    let m = Model::LieMorphism;
    let a = parse_term(m, "(compose (nu 2) (f 1) (f 2) (perm 2 1 3))").unwrap();
    let b = parse_term(m, "(compose (nu 2) (f 2) (f 1) (perm 1 3 2))").unwrap();
    let (sa, ca) = canonicalize(m, &a).unwrap();
    let (sb, cb) = canonicalize(m, &b).unwrap();
    assert_eq!(ca, cb);
    // swapping the two children of a skew vertex costs a sign
    assert_eq!(sa, -sb);

    // the same comparison through evaluation on random alternating decorations
    let mut rng = RandomSource::new(17);
    let spaces = Spaces::new(2, 2).unwrap();
    let mut dec = BTreeMap::new();
    dec.insert(gen("nu_2"), rng.alternating(Color::W, 2, Color::W, 2, 2));
    dec.insert(gen("f_1"), rng.multimap(Color::W, 2, &[Color::B], &[2]));
    dec.insert(gen("f_2"), rng.alternating(Color::W, 2, Color::B, 2, 2));
    let ea = graph_evaluate(m, &a, &dec, &spaces).unwrap();
    let eb = graph_evaluate(m, &b, &dec, &spaces).unwrap();
    assert_eq!(ea, -eb);
    assert_eq!(ea.scale(&sa), graph_evaluate(m, &ca, &dec, &spaces).unwrap());
}

/// Random alternating (Lie) or arbitrary decorations for every generator up to
/// `max_degree`.
fn random_decorations(
    model: Model,
    spaces: &Spaces,
    max_degree: i64,
    rng: &mut RandomSource,
) -> BTreeMap<GeneratorId, MultiMap> {
    let mut dec = BTreeMap::new();
    for g in model.generators_up_to(max_degree) {
        let info = model.info(g).unwrap();
        let dims: Vec<usize> = info.inputs.iter().map(|&c| spaces.dim(c)).collect();
        let m = if model.is_skew() {
            rng.alternating(info.output, spaces.dim(info.output), info.inputs[0], dims[0], info.arity())
        } else {
            rng.multimap(info.output, spaces.dim(info.output), &info.inputs, &dims)
        };
        dec.insert(g, m);
    }
    dec
}

#[test]
fn evaluation_commutes_with_canonicalize() {
    let mut rng = RandomSource::new(5);
    for model in Model::ALL {
        let spaces = Spaces::new(3, 2).unwrap();
        for trial in 0..3 {
            let dec = random_decorations(model, &spaces, 3, &mut rng);
            for t in all_terms(model, 3) {
                if t.is_unit() || t.vertices().iter().any(|&g| model.degree(g).unwrap() % 2 != 0) {
                    continue;
                }
                if t.arity() > 4 && trial > 0 {
                    continue;
                }
                let (s, c) = canonicalize(model, &t).unwrap();
                assert_eq!(
                    graph_evaluate(model, &t, &dec, &spaces).unwrap(),
                    graph_evaluate(model, &c, &dec, &spaces).unwrap().scale(&s),
                    "{model} {}",
                    term_to_sexpr(&t)
                );
            }
        }
    }
}

#[test]
fn single_vertex_evaluates_to_its_decoration() {
    let mut rng = RandomSource::new(1);
    let spaces = Spaces::new(2, 2).unwrap();
    let f = rng.multimap(Color::W, 2, &[Color::B, Color::B], &[2, 2]);
    let dec = BTreeMap::from([(gen("f_2"), f.clone())]);
    let t = GraphTerm::corolla(Model::AssocMorphism, gen("f_2")).unwrap();
    assert_eq!(graph_evaluate(Model::AssocMorphism, &t, &dec, &spaces).unwrap(), f);
}

#[test]
fn triple_product_in_one_dimensional_algebra() {
    let spaces = Spaces::new(1, 1).unwrap();
    let e = MultiMap::from_coeffs(Color::B, 1, vec![Color::B; 2], vec![1, 1], vec![Rational::one()]).unwrap();
    let dec = BTreeMap::from([(gen("mu_2"), e)]);
    let t = parse_term(Model::AssocMorphism, "(compose (mu 2) (mu 2) _)").unwrap();
    let v = graph_evaluate(Model::AssocMorphism, &t, &dec, &spaces).unwrap();
    assert_eq!(v.arity(), 3);
    assert_eq!(v.coeffs(), &[Rational::one()]);
}

#[test]
fn missing_and_mismatched_decorations() {
    let spaces = Spaces::new(2, 2).unwrap();
    let t = parse_term(Model::AssocMorphism, "(compose (mu 2) (mu 2) _)").unwrap();
    let empty = BTreeMap::new();
    assert!(matches!(
        graph_evaluate(Model::AssocMorphism, &t, &empty, &spaces),
        Err(Error::MissingDecoration(_))
    ));
    let wrong = BTreeMap::from([(gen("mu_2"), MultiMap::identity(Color::B, 2))]);
    assert!(matches!(graph_evaluate(Model::AssocMorphism, &t, &wrong, &spaces), Err(Error::Signature(_))));
}

#[test]
fn unit_evaluates_to_identity() {
    let spaces = Spaces::new(2, 3).unwrap();
    let sum = Model::Iso.differential(gen("g_1")).unwrap();
    let dec = BTreeMap::from([
        (gen("f_0"), MultiMap::zero(Color::W, 3, vec![Color::B], vec![2])),
        (gen("g_0"), MultiMap::zero(Color::B, 2, vec![Color::W], vec![3])),
    ]);
    let v = evaluate_sum(Model::Iso, &sum, Color::W, &[Color::W], &spaces, &dec).unwrap();
    assert_eq!(v, -MultiMap::identity(Color::W, 3));
}

/// Plain evaluation is a map of graded operads only when generators of odd
/// internal degree go to zero (the target spaces sit in degree 0), so those
/// are decorated by zero here.
#[test]
fn lie_differentials_evaluate_to_alternating_maps() {
    let model = Model::LieMorphism;
    let mut rng = RandomSource::new(23);
    for (spaces, max) in [(Spaces::new(3, 3).unwrap(), 2), (Spaces::new(2, 2).unwrap(), 4)] {
        let mut dec = random_decorations(model, &spaces, max, &mut rng);
        for (g, m) in dec.iter_mut() {
            if model.degree(*g).unwrap() % 2 != 0 {
                *m = m.scale(&Rational::zero());
            }
        }
        for g in model.generators_up_to(max + 1) {
            if model.degree(g).unwrap() > 4 {
                continue;
            }
            let info = model.info(g).unwrap();
            let sum = model.differential(g).unwrap();
            let v = evaluate_sum(model, &sum, info.output, &info.inputs, &spaces, &dec).unwrap();
            assert!(v.is_alternating(), "{g}");
        }
    }
}

#[test]
fn sexpr_round_trip() {
    for model in Model::ALL {
        for g in model.generators_up_to(5) {
            let sum = model.differential(g).unwrap();
            let text = sum_to_sexpr(&sum);
            assert_eq!(parse_sum(model, &text).unwrap(), sum, "{model} {g}");
            assert_eq!(sum_to_sexpr(&parse_sum(model, &text).unwrap()), text);
        }
        for t in all_terms(model, 3) {
            let (_, c) = canonicalize(model, &t).unwrap();
            assert_eq!(parse_term(model, &term_to_sexpr(&c)).unwrap(), c);
        }
    }
}

#[test]
fn sexpr_rejects_malformed_input() {
    let m = Model::AssocMorphism;
    for bad in [
        "(mu 3",
        "(compose (mu 2) _)",
        "(compose (mu 2) _ _ (perm 1 1))",
        "(compose (mu 2) _ _ (perm 0 1))",
        "(unit Q)",
        "(h 2)",
        "(mu 2) extra",
        "(compose (mu 2) (compose (mu 2) _ _ (perm 2 1)) _)",
    ] {
        assert!(parse_term(m, bad).is_err(), "{bad}");
    }
    assert!(parse_sum(m, "1/0 (mu 2)").is_err());
    assert!(parse_sum(m, "1").is_err());
}
