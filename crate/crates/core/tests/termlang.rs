use cycad::collection::Collection;
use cycad::element::Tuple;
use cycad::fixtures;
use cycad::functors::RightAdjoint;
use cycad::operad::EndFn;
use cycad::profile::{Color, Permutation, Profile};
use cycad::termlang::{
    axiom_instances, eval_term, infer_profile, normalize_powers, parse_term, print_term, Axiom, PermExpr, Term,
    Valuation,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_perm() -> impl Strategy<Value = PermExpr> {
    prop_oneof![
        (-6i64..7).prop_map(PermExpr::Tau),
        (1usize..5)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| PermExpr::Literal(Permutation::new(v).unwrap())),
    ]
}

fn arb_color() -> impl Strategy<Value = Color> {
    prop_oneof![
        "[a-z][a-z0-9]{0,2}".prop_map(|s| Color::named(&s)),
        ("[a-z]", 0u8..2).prop_map(|(c, a)| Color::polar(Color::named(&c), a)),
        ("[a-z]", "[a-z]").prop_map(|(a, b)| Color::pair(Color::named(&a), Color::named(&b))),
    ]
}

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        "[a-z][a-z0-9]{0,3}".prop_map(|s| Term::var(&s)),
        arb_color().prop_map(Term::Id),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), 0usize..6, 0usize..6, inner.clone()).prop_map(|(l, i, j, r)| Term::compose(l, i, j, r)),
            (arb_perm(), inner).prop_map(|(perm, t)| Term::Act { perm, term: Box::new(t) }),
        ]
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_the_identity(t in arb_term()) {
        let text = print_term(&t);
        prop_assert_eq!(parse_term(&text).unwrap(), t.clone());
        let spaced = text.replace(" o[", "\n o[ ").replace(" * ", "  *\t");
        prop_assert_eq!(parse_term(&spaced).unwrap(), t);
    }
}

#[test]
fn worked_parses() {
    let t = parse_term("(x o[1,3] y)").unwrap();
    assert_eq!(t, Term::compose(Term::var("x"), 1, 3, Term::var("y")));
    let t = parse_term("(tau^2 * (x o[1,3] y))").unwrap();
    assert_eq!(t, Term::tau(2, Term::compose(Term::var("x"), 1, 3, Term::var("y"))));
    let t = parse_term("([2 0 1] * x)").unwrap();
    assert_eq!(t, Term::act(Permutation::new(vec![2, 0, 1]).unwrap(), Term::var("x")));
    for text in ["(x o[1,3] y)", "(tau^2 * (x o[1,3] y))", "([2 0 1] * x)"] {
        assert_eq!(print_term(&parse_term(text).unwrap()), text);
    }
    assert_eq!(print_term(&parse_term("  ( tau *x )").unwrap()), "(tau * x)");
    assert!(parse_term("(x o[1 3] y)").is_err());
}

fn b() -> Color {
    Color::pair(fixtures::bool_color(), fixtures::bool_color())
}

fn prof(norm: usize) -> Profile {
    Profile(vec![b(); norm + 1])
}

fn sample(r: &RightAdjoint<cycad::operad::EndOperad>, norm: usize, rng: &mut ChaCha8Rng) -> Tuple<EndFn> {
    r.sample(&prof(norm), rng).unwrap()
}

#[test]
fn powers_normalize_against_known_arities() {
    let r = RightAdjoint::new(fixtures::end_operad());
    let env = Valuation::<Tuple<EndFn>>::new().with("x", prof(3), sample(&r, 3, &mut ChaCha8Rng::seed_from_u64(1)));
    let t = parse_term("(tau^-3 * x)").unwrap();
    let n = normalize_powers(r.colors(), &env.profiles(), &t).unwrap();
    assert_eq!(print_term(&n), "(tau * x)");
    assert_eq!(eval_term(&r, &env, &t).unwrap(), eval_term(&r, &env, &n).unwrap());
}

#[test]
fn swapping_the_factors() {
    let r = RightAdjoint::new(fixtures::end_operad());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let lhs = parse_term("(tau^2 * (x o[1,3] y))").unwrap();
    let rhs = parse_term("(y o[3,1] x)").unwrap();
    for _ in 0..100 {
        let env = Valuation::new()
            .with("x", prof(3), sample(&r, 3, &mut rng))
            .with("y", prof(4), sample(&r, 4, &mut rng));
        assert_eq!(eval_term(&r, &env, &lhs).unwrap(), eval_term(&r, &env, &rhs).unwrap());
    }
}

#[test]
fn grafting_in_two_steps() {
    let r = RightAdjoint::new(fixtures::end_operad());
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let lhs = parse_term("((x o[1,3] y) o[2,0] z)").unwrap();
    let rhs = parse_term("(x o[1,3] (y o[5,0] z))").unwrap();
    for _ in 0..100 {
        let env = Valuation::new()
            .with("x", prof(2), sample(&r, 2, &mut rng))
            .with("y", prof(5), sample(&r, 5, &mut rng))
            .with("z", prof(2), sample(&r, 2, &mut rng));
        assert_eq!(eval_term(&r, &env, &lhs).unwrap(), eval_term(&r, &env, &rhs).unwrap());
    }
}

#[test]
fn identities_on_either_side() {
    let r = RightAdjoint::new(fixtures::end_operad());
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let right_unit = parse_term(&format!("(x o[1,0] id_{})", b())).unwrap();
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let env = Valuation::new().with("x", prof(n), sample(&r, n, &mut rng));
        assert_eq!(eval_term(&r, &env, &right_unit).unwrap(), eval_term(&r, &env, &Term::var("x")).unwrap());
        for i in 0..=n {
            let lhs = parse_term(&format!("(id_{} o[1,{i}] x)", b())).unwrap();
            let rhs = parse_term(&format!("(tau^{i} * x)")).unwrap();
            assert_eq!(eval_term(&r, &env, &lhs).unwrap(), eval_term(&r, &env, &rhs).unwrap());
        }
    }
}

#[test]
fn fixture_term() {
    let (t, env) = fixtures::term().unwrap();
    let p = fixtures::r_end().unwrap();
    let (q, z) = eval_term(&p, &env, &t).unwrap();
    assert_eq!(q, prof(1));
    assert_eq!(z.to_string(), "<f10,f10>");
}

/// A random well-colored term over the single color of `R(End)`, with
/// every intermediate norm at most `max`.
fn random_term(rng: &mut ChaCha8Rng, depth: usize, max: usize, env: &mut Vec<(String, usize)>) -> (Term, usize) {
    if depth == 0 || rng.gen_bool(0.3) {
        if rng.gen_bool(0.2) {
            return (Term::Id(b()), 1);
        }
        let n = rng.gen_range(0..=max.min(3));
        let name = format!("v{}", env.len());
        env.push((name.clone(), n));
        return (Term::var(&name), n);
    }
    let (l, n) = random_term(rng, depth - 1, max, env);
    if rng.gen_bool(0.4) {
        let k = rng.gen_range(-4..5);
        return (Term::tau(k, l), n);
    }
    let (r, m) = random_term(rng, depth - 1, max, env);
    if n + m == 0 || n + m - 1 > max {
        return (l, n);
    }
    let (i, j) = (rng.gen_range(0..=n), rng.gen_range(0..=m));
    (Term::compose(l, i, j, r), n + m - 1)
}

#[test]
fn evaluation_is_profile_sound() {
    let r = RightAdjoint::new(fixtures::end_operad());
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..60 {
        let mut vars = Vec::new();
        let (t, norm) = random_term(&mut rng, 4, 4, &mut vars);
        let mut env = Valuation::new();
        for (name, n) in vars {
            env.insert(&name, prof(n), sample(&r, n, &mut rng));
        }
        let (q, _) = eval_term(&r, &env, &t).unwrap();
        assert_eq!(q, infer_profile(r.colors(), &env.profiles(), &t).unwrap());
        assert_eq!(q, prof(norm));
    }
}

#[test]
fn axiom_instances_hold_on_fixtures() {
    let fixtures = [
        ("pairing", fixtures::pairing().unwrap()),
        ("anti-involutive", fixtures::anti_involutive().unwrap()),
        ("l-end", fixtures::l_end().unwrap()),
        ("r-end", fixtures::r_end().unwrap()),
    ];
    for (name, p) in &fixtures {
        for axiom in [Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4, Axiom::NS3] {
            let instances = axiom_instances(p, axiom, 4).unwrap();
            assert!(!instances.is_empty(), "{name} {axiom:?}");
            for inst in &instances {
                assert!(inst.holds(p).unwrap(), "{name} {axiom:?}: {} = {}", inst.lhs, inst.rhs);
            }
        }
    }
}

#[test]
fn pairing_swaps_are_the_zero_zero_pairs() {
    let p = fixtures::pairing().unwrap();
    let c1 = axiom_instances(&p, Axiom::C1, 4).unwrap();
    // Every pair of legs that can be grafted, weighted by the elements on
    // either side.
    let colors = p.colors();
    let entries = p.collection().entries();
    let mut expected = 0;
    for (cp, xs) in entries {
        for (dp, ys) in entries {
            for ci in cp.colors() {
                for dj in dp.colors() {
                    if *ci == colors.dagger(dj).unwrap() {
                        expected += xs.len() * ys.len();
                    }
                }
            }
        }
    }
    assert_eq!(c1.len(), expected);
    let plain: Vec<_> = c1
        .iter()
        .filter(|inst| ["x", "y"].iter().all(|v| inst.env.get(v).unwrap().1.to_string() != "id"))
        .collect();
    assert_eq!(plain.len(), 2 * 2 * 3);
    for inst in plain {
        assert_eq!(print_term(&inst.rhs), "(y o[0,0] x)");
    }
}

#[test]
fn unit_instances_cover_both_shapes() {
    let p = fixtures::pairing().unwrap();
    let c4 = axiom_instances(&p, Axiom::C4, 4).unwrap();
    let printed: Vec<String> = c4.iter().map(|i| i.lhs.to_string()).collect();
    assert!(printed.iter().any(|s| s.starts_with("(tau * id_")));
    assert!(printed.iter().any(|s| s.starts_with("(x o[")));
}

#[test]
fn associativity_instances_avoid_the_grafted_leg() {
    let p = fixtures::l_end().unwrap();
    for inst in axiom_instances(&p, Axiom::C2, 4).unwrap() {
        let Term::Compose { right, .. } = &inst.rhs else { panic!() };
        let Term::Compose { i: k, .. } = right.as_ref() else { panic!() };
        let Term::Compose { left, .. } = &inst.lhs else { panic!() };
        let Term::Compose { j, .. } = left.as_ref() else { panic!() };
        assert_ne!(k, j);
    }
}
