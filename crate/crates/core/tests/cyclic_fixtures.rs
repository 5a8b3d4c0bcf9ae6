use cycad::collection::Collection;
use cycad::constructions::{anti_involutive_to_cyclic, FinAntiInvolutiveCategory};
use cycad::cyclic::{
    CyclicOperad,
    is_positive, positivize, validate_cyclic, validate_markl, validate_nonsigma, Rotations, TableCyclicOperad,
};
use cycad::element::Label;
use cycad::fixtures;
use cycad::functors::{LeftAdjoint, RightAdjoint};
use cycad::profile::{Color, Permutation, Profile};
use cycad::report::{CheckConfig, Law, Report};

fn cfg() -> CheckConfig {
    CheckConfig::with_bound(4)
}

fn assert_clean(what: &str, r: &Report) {
    assert!(r.is_clean(), "{what}:\n{r}");
}

#[test]
fn pairings_up_to_size_three() {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                if c == 0 && a > 0 && b > 0 {
                    assert!(fixtures::pairing_sized(a, b, c).is_err());
                    continue;
                }
                let p = fixtures::pairing_sized(a, b, c).unwrap();
                assert_clean(&format!("pairing {a}×{b}→{c}"), &validate_cyclic(&p, &cfg()));
            }
        }
    }
}

#[test]
fn small_groups() {
    let groups = FinAntiInvolutiveCategory::small_groups(Color::named("g")).unwrap();
    assert_eq!(groups.len(), 8);
    for (name, g) in groups {
        assert_clean(&name, &g.validate());
        let p = anti_involutive_to_cyclic(&g).unwrap();
        let r = validate_cyclic(&p, &cfg());
        assert_clean(&name, &r);
        assert!(r.checked_for(Law::Associativity) > 0);
    }
}

#[test]
fn free_and_cofree_on_end() {
    assert_clean("L(End)", &validate_cyclic(&fixtures::l_end().unwrap(), &cfg()));
    assert_clean("R(End) table", &validate_cyclic(&fixtures::r_end().unwrap(), &cfg()));
    let r = RightAdjoint::new(fixtures::end_operad());
    let report = validate_cyclic(&r, &CheckConfig { samples: 1, ..cfg() });
    assert_clean("R(End) sampled", &report);
    assert!(report.checked_for(Law::Equivariance) > 0);
}

#[test]
fn composition_routes_agree_and_tables_rederive() {
    for (name, p) in [
        ("pairing", fixtures::pairing().unwrap()),
        ("anti-involutive", fixtures::anti_involutive().unwrap()),
        ("l-end", fixtures::l_end().unwrap()),
        ("r-end", fixtures::r_end().unwrap()),
    ] {
        let r = validate_cyclic(&p, &cfg());
        assert_clean(name, &r);
        assert!(r.checked_for(Law::Reduction) > 0, "{name}");
        assert!(r.checked_for(Law::Rederivation) > 0, "{name}");
    }
}

/// Ten single-cell edits of the `Σ₃` table, each of which must be caught.
fn mutations() -> Vec<(&'static str, TableCyclicOperad)> {
    let base = fixtures::anti_involutive().unwrap();
    let c = Color::named("c");
    let p = Profile(vec![c.clone(), c.clone()]);
    let other = |x: &Label| -> Label {
        let elems = base.collection().entry(&p);
        let k = elems.iter().position(|e| e == x).unwrap();
        elems[(k + 1) % elems.len()].clone()
    };
    let l = |s: &str| Label::from(s);
    let mut out = Vec::new();
    for (name, x, i, y) in [
        ("∘₁⁰ id id", "012", 1, "012"),
        ("∘₁⁰ 120 201", "120", 1, "201"),
        ("∘₀⁰ 102 012", "102", 0, "012"),
        ("∘₀⁰ 021 021", "021", 0, "021"),
        ("∘₁⁰ 210 021", "210", 1, "021"),
        ("∘₀⁰ 201 120", "201", 0, "120"),
    ] {
        let mut t = base.clone();
        let z = base.compose_i0(&p, &l(x), i, &p, &l(y)).unwrap();
        t.set_composition(&p, &l(x), i, &p, &l(y), &other(&z)).unwrap();
        out.push((name, t));
    }
    let tau = Permutation::tau(2).unwrap();
    for (name, sigma, x) in [
        ("τ* 120", tau.clone(), "120"),
        ("τ* 012", tau, "012"),
        ("id* 021", Permutation::identity(2), "021"),
    ] {
        let mut t = base.clone();
        let y = base.act(&p, &sigma, &l(x)).unwrap();
        t.collection_mut().set_action(&p, sigma, &l(x), &other(&y)).unwrap();
        out.push((name, t));
    }
    let mut t = base.clone();
    t.set_identity(&c, l("102")).unwrap();
    out.push(("identity", t));
    out
}

#[test]
fn every_mutation_is_reported() {
    let ms = mutations();
    assert_eq!(ms.len(), 10);
    for (name, t) in ms {
        let r = validate_cyclic(&t, &cfg());
        assert!(!r.is_clean(), "mutation {name} went unnoticed");
    }
}

#[test]
fn markl_variant_ignores_identities() {
    let p = fixtures::pairing().unwrap();
    assert_clean("markl", &validate_markl(&p, &cfg()));
    let r = validate_markl(&p, &cfg());
    assert_eq!(r.checked_for(Law::Unit), 0);
}

#[test]
fn rotations_only() {
    for (name, p) in [("pairing", fixtures::pairing().unwrap()), ("Σ₃", fixtures::anti_involutive().unwrap())] {
        let r = validate_nonsigma(&Rotations::new(&p), &cfg());
        assert_clean(name, &r);
        assert!(r.checked_for(Law::CyclicEquivariance) > 0);
    }
}

#[test]
fn positivity() {
    let r = RightAdjoint::new(fixtures::end_operad());
    assert!(is_positive(&r));
    assert!(is_positive(&fixtures::r_end().unwrap()));
    let l = LeftAdjoint::new(fixtures::end_operad());
    assert_eq!(l.entry_size(&Profile::empty()), 0);
    assert!(!is_positive(&l));
    let g = positivize(fixtures::pairing().unwrap());
    assert!(is_positive(&g));
    assert_clean("G(pairing)", &validate_cyclic(&g, &cfg()));
}
