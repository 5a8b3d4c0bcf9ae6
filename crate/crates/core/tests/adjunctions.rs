use cycad::cyclic::{positivize, TableCyclicOperad};
use cycad::fixtures;
use cycad::functors::{
    forget_positive, triangle_forget_fr, triangle_forget_lf, triangle_left, triangle_right, validate_units_fr, validate_units_lf, Forget,
    RightAdjoint,
};
use cycad::operad::{FinOperad, Operad};
use cycad::report::{CheckConfig, Law, Report};

fn cfg() -> CheckConfig {
    CheckConfig::with_bound(4)
}

fn assert_clean(what: &str, r: &Report) {
    assert!(r.is_clean(), "{what}:\n{r}");
    assert!(r.checked > 0, "{what}: nothing checked");
}

fn cyclic_fixtures() -> Vec<(&'static str, TableCyclicOperad)> {
    vec![
        ("pairing", fixtures::pairing().unwrap()),
        ("anti-involutive", fixtures::anti_involutive().unwrap()),
        ("l-end", fixtures::l_end().unwrap()),
        ("r-end", fixtures::r_end().unwrap()),
    ]
}

fn operad_fixtures() -> Vec<(&'static str, FinOperad)> {
    let pairing = fixtures::pairing().unwrap();
    vec![
        ("end", fixtures::end_table().unwrap()),
        ("F(pairing)", FinOperad::materialize(&Forget::new(&pairing), 4, u128::MAX).unwrap()),
    ]
}

#[test]
fn triangles_for_l_and_f() {
    for (name, o) in operad_fixtures() {
        assert_clean(name, &triangle_left(&o, 0, &cfg()));
    }
    for (name, p) in cyclic_fixtures() {
        assert_clean(name, &triangle_forget_lf(&p, 0, &cfg()));
    }
}

#[test]
fn triangles_for_f_and_r() {
    for (name, o) in operad_fixtures() {
        assert_clean(name, &triangle_right(&o, &cfg()));
    }
    for (name, p) in cyclic_fixtures() {
        assert_clean(name, &triangle_forget_fr(&p, &cfg()));
    }
}

#[test]
fn a_rotated_counit_breaks_the_triangles() {
    // Rotations act trivially on a free cyclic operad, so only a target
    // with a nontrivial action can tell the counits apart.
    assert!(triangle_left(&fixtures::end_table().unwrap(), 1, &cfg()).is_clean());
    for p in [fixtures::r_end().unwrap(), fixtures::anti_involutive().unwrap()] {
        assert!(triangle_forget_lf(&p, 1, &cfg()).count(Law::Triangle) > 0);
    }
}

#[test]
fn units_and_counits_are_morphisms() {
    let o = fixtures::end_table().unwrap();
    for (name, p) in cyclic_fixtures() {
        assert_clean(name, &validate_units_lf(&o, &p, &cfg()));
        assert_clean(name, &validate_units_fr(&o, &p, &cfg()));
    }
}

#[test]
fn positivizing_the_cofree_operad_changes_nothing_underneath() {
    for (name, o) in operad_fixtures() {
        let bound = o.max_arity().unwrap();
        let r = RightAdjoint::new(&o);
        let plain = FinOperad::materialize(&Forget::new(&r), bound, u128::MAX).unwrap();
        let pos = FinOperad::materialize(&Forget::new(positivize(&r)), bound, u128::MAX).unwrap();
        assert!(plain == pos, "{name}");
        assert!(!plain.entries().is_empty());
        assert_clean(name, &forget_positive(&o, &CheckConfig::with_bound(bound)));
    }
}
