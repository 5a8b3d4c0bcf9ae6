//! The acceptance criteria, one line each. Runs without the libtest harness
//! so the lines are printed whether or not anything fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use cycad::collection::Collection;
use cycad::constructions::{
    anti_involutive_to_cyclic, cyclic_to_dioperad, cyclic_to_hry, dioperad_to_cyclic, hry_to_cyclic,
    FinAntiInvolutiveCategory, Polarization,
};
use cycad::cyclic::{is_positive, validate_cyclic, validate_nonsigma, CyclicOperad, Rotations, TableCyclicOperad};
use cycad::element::{Label, Tuple};
use cycad::fixtures;
use cycad::functors::{
    forget_positive, triangle_forget_fr, triangle_forget_lf, triangle_left, triangle_right, validate_units_fr,
    validate_units_lf, Forget, LeftAdjoint, RightAdjoint,
};
use cycad::operad::{EndFn, EndOperad, FinOperad, Operad};
use cycad::profile::{
    alpha, beta, equivariance_sigma, source_by_rotation, source_by_window, Color, Permutation, Profile, Source,
};
use cycad::report::{CheckConfig, Law, Report};
use cycad::termlang::{eval_term, parse_term, print_term, PermExpr, Term, Valuation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn clean(what: &str, r: &Report) -> Outcome {
    ensure(r.is_clean() && r.checked > 0, || format!("{what}:\n{r}"))
}

fn cfg() -> CheckConfig {
    CheckConfig::with_bound(4)
}

// 1 ------------------------------------------------------------------------

fn placement(n: usize, m: usize, i: usize, j: usize) -> Vec<Source> {
    let mut out: Vec<Source> = (0..i).map(Source::Left).collect();
    out.extend((j + 1..=m).map(Source::Right));
    out.extend((0..j).map(Source::Right));
    out.extend((i + 1..=n).map(Source::Left));
    out
}

fn index_identities() -> Outcome {
    const MAX: usize = 6;
    for n in 0..=MAX {
        for m in 0..=MAX {
            let big = |k: i64| Permutation::tau_power(n + m, k);
            let small = Permutation::tau_power(n + 1, 1);
            for i in 0..=n {
                let a = alpha(i, m, n).map_err(|e| e.to_string())?;
                for j in 0..=m {
                    let b = beta(j, i, m, n).map_err(|e| e.to_string())?;
                    let place = placement(n, m, i, j);
                    for (pos, src) in place.iter().enumerate() {
                        let hit = match *src {
                            Source::Left(x) => a.get(x),
                            Source::Right(y) => b.get(y),
                        };
                        ensure(hit == Some(pos), || format!("placement n={n} m={m} i={i} j={j} pos={pos}"))?;
                        ensure(source_by_window(n, m, i, j, pos).ok() == Some(*src), || {
                            format!("window form n={n} m={m} i={i} j={j} pos={pos}")
                        })?;
                        ensure(source_by_rotation(n, m, i, j, pos).ok() == Some(*src), || {
                            format!("rotation form n={n} m={m} i={i} j={j} pos={pos}")
                        })?;
                    }
                    ensure(n + m == 0 || a.union_is_bijection_onto(&b, n + m), || {
                        format!("α ⨿ β n={n} m={m} i={i} j={j}")
                    })?;
                    let rotated = beta(0, i, m, n)
                        .unwrap()
                        .precompose(&Permutation::tau_power(m + 1, -(j as i64)));
                    ensure(b == rotated, || format!("β_j,i = β_0,i τ^-j n={n} m={m} i={i} j={j}"))?;
                }
            }
            if n + m == 0 {
                continue;
            }
            if m > 0 {
                ensure(
                    alpha(0, m, n).unwrap().precompose(&small) == alpha(n, m, n).unwrap().postcompose(&big(m as i64)),
                    || format!("α₀τ = τ^m αₙ n={n} m={m}"),
                )?;
            }
            for j in 0..=m {
                ensure(
                    beta(j, 0, m, n).unwrap() == beta(j, n, m, n).unwrap().postcompose(&big(m as i64)),
                    || format!("β_j,0 = τ^m β_j,n n={n} m={m} j={j}"),
                )?;
            }
            for i in 1..=n {
                ensure(
                    alpha(i, m, n).unwrap().precompose(&small) == alpha(i - 1, m, n).unwrap().postcompose(&big(1)),
                    || format!("αᵢτ = τ αᵢ₋₁ n={n} m={m} i={i}"),
                )?;
                for j in 0..=m {
                    ensure(
                        beta(j, i, m, n).unwrap() == beta(j, i - 1, m, n).unwrap().postcompose(&big(1)),
                        || format!("β_j,i = τ β_j,i-1 n={n} m={m} i={i} j={j}"),
                    )?;
                }
            }
        }
    }
    for len in 1..=MAX + 1 {
        for sigma in Permutation::all(len) {
            for k in 0..len {
                let sk = sigma.conjugate_sigma_k(k);
                ensure(sk.apply(0) == 0, || format!("σₖ(0) for {sigma:?} k={k}"))?;
                for r in 0..len {
                    ensure(sk.apply(r) == (sigma.apply((k + r) % len) + len - sigma.apply(k)) % len, || {
                        format!("σₖ({r}) for {sigma:?} k={k}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

// 2 ------------------------------------------------------------------------

/// Ten single-cell edits of the `Σ₃` table.
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
        ("∘₁⁰ 012 012", "012", 1, "012"),
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
        ("τ·120", tau.clone(), "120"),
        ("τ·012", tau, "012"),
        ("id·021", Permutation::identity(2), "021"),
    ] {
        let mut t = base.clone();
        let y = base.act(&p, &sigma, &l(x)).unwrap();
        t.collection_mut().set_action(&p, sigma, &l(x), &other(&y)).unwrap();
        out.push((name, t));
    }
    let mut t = base;
    t.set_identity(&c, l("102")).unwrap();
    out.push(("identity", t));
    out
}

fn axiom_suite() -> Outcome {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                if c == 0 && a > 0 && b > 0 {
                    continue;
                }
                let p = fixtures::pairing_sized(a, b, c).map_err(|e| e.to_string())?;
                let r = validate_cyclic(&p, &cfg());
                ensure(r.is_clean(), || format!("pairing {a},{b},{c}:\n{r}"))?;
            }
        }
    }
    let groups = FinAntiInvolutiveCategory::small_groups(Color::named("g")).map_err(|e| e.to_string())?;
    ensure(groups.len() == 8, || format!("{} groups of order ≤ 6", groups.len()))?;
    for (name, g) in groups {
        clean(&name, &validate_cyclic(&anti_involutive_to_cyclic(&g).map_err(|e| e.to_string())?, &cfg()))?;
    }
    clean("L(End)", &validate_cyclic(&fixtures::l_end().unwrap(), &cfg()))?;
    clean("R(End) table", &validate_cyclic(&fixtures::r_end().unwrap(), &cfg()))?;
    let r = RightAdjoint::new(fixtures::end_operad());
    clean("R(End) sampled", &validate_cyclic(&r, &CheckConfig { samples: 1, ..cfg() }))?;
    let ms = mutations();
    ensure(ms.len() == 10, || format!("{} mutations", ms.len()))?;
    for (name, t) in ms {
        ensure(!validate_cyclic(&t, &cfg()).is_clean(), || format!("mutation {name} went unnoticed"))?;
    }
    Ok(())
}

// 3 ------------------------------------------------------------------------

fn composition_routes() -> Outcome {
    for (name, p) in [
        ("pairing", fixtures::pairing().unwrap()),
        ("anti-involutive", fixtures::anti_involutive().unwrap()),
        ("l-end", fixtures::l_end().unwrap()),
        ("r-end", fixtures::r_end().unwrap()),
    ] {
        let r = validate_cyclic(&p, &cfg());
        clean(name, &r)?;
        for law in [Law::Reduction, Law::Rederivation] {
            ensure(r.checked_for(law) > 0, || format!("{name}: no {law:?} checks"))?;
        }
    }
    Ok(())
}

// 4 ------------------------------------------------------------------------

fn b() -> Color {
    Color::pair(fixtures::bool_color(), fixtures::bool_color())
}

fn prof(norm: usize) -> Profile {
    Profile(vec![b(); norm + 1])
}

fn sample(r: &RightAdjoint<EndOperad>, norm: usize, rng: &mut ChaCha8Rng) -> Tuple<EndFn> {
    r.sample(&prof(norm), rng).unwrap()
}

fn agree(r: &RightAdjoint<EndOperad>, env: &Valuation<Tuple<EndFn>>, lhs: &str, rhs: &str) -> Outcome {
    let (l, r2) = (parse_term(lhs).unwrap(), parse_term(rhs).unwrap());
    let (x, y) = (eval_term(r, env, &l), eval_term(r, env, &r2));
    ensure(x.is_ok() && x.as_ref().ok() == y.as_ref().ok(), || {
        format!("{lhs} = {rhs}: {x:?} vs {y:?}")
    })
}

fn sampled_identities() -> Outcome {
    const SAMPLES: usize = 100;
    let r = RightAdjoint::new(fixtures::end_operad());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..SAMPLES {
        let env = Valuation::new()
            .with("x", prof(3), sample(&r, 3, &mut rng))
            .with("y", prof(4), sample(&r, 4, &mut rng));
        agree(&r, &env, "(tau^2 * (x o[1,3] y))", "(y o[3,1] x)")?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..SAMPLES {
        let env = Valuation::new()
            .with("x", prof(2), sample(&r, 2, &mut rng))
            .with("y", prof(5), sample(&r, 5, &mut rng))
            .with("z", prof(2), sample(&r, 2, &mut rng));
        agree(&r, &env, "((x o[1,3] y) o[2,0] z)", "(x o[1,3] (y o[5,0] z))")?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..SAMPLES {
        let n = rng.gen_range(1..=4);
        let env = Valuation::new().with("x", prof(n), sample(&r, n, &mut rng));
        agree(&r, &env, &format!("(x o[1,0] id_{})", b()), "x")?;
        for i in 0..=n {
            agree(&r, &env, &format!("(id_{} o[1,{i}] x)", b()), &format!("(tau^{i} * x)"))?;
        }
    }
    Ok(())
}

// 5 ------------------------------------------------------------------------

fn adjunction_suite() -> Outcome {
    let pairing = fixtures::pairing().unwrap();
    let operads = [
        ("End", fixtures::end_table().unwrap()),
        ("F(pairing)", FinOperad::materialize(&Forget::new(&pairing), 4, u128::MAX).map_err(|e| e.to_string())?),
    ];
    let cyclics = [
        ("pairing", pairing.clone()),
        ("l-end", fixtures::l_end().unwrap()),
        ("r-end", fixtures::r_end().unwrap()),
    ];
    for (name, o) in &operads {
        clean(&format!("LF triangle on {name}"), &triangle_left(o, 0, &cfg()))?;
        clean(&format!("FR triangle on {name}"), &triangle_right(o, &cfg()))?;
        let bound = o.max_arity().unwrap();
        let r = RightAdjoint::new(o);
        let plain = FinOperad::materialize(&Forget::new(&r), bound, u128::MAX).map_err(|e| e.to_string())?;
        let pos = FinOperad::materialize(&Forget::new(cycad::cyclic::positivize(&r)), bound, u128::MAX)
            .map_err(|e| e.to_string())?;
        ensure(plain == pos, || format!("FIGR ≠ FR on {name}"))?;
        clean(&format!("FIGR on {name}"), &forget_positive(o, &CheckConfig::with_bound(bound)))?;
    }
    for (name, p) in &cyclics {
        clean(&format!("LF triangle on {name}"), &triangle_forget_lf(p, 0, &cfg()))?;
        clean(&format!("FR triangle on {name}"), &triangle_forget_fr(p, &cfg()))?;
    }
    let end = fixtures::end_table().unwrap();
    for (name, p) in &cyclics {
        clean(&format!("LF (co)units at {name}"), &validate_units_lf(&end, p, &cfg()))?;
        clean(&format!("FR (co)units at {name}"), &validate_units_fr(&end, p, &cfg()))?;
    }
    Ok(())
}

// 6 ------------------------------------------------------------------------

fn translation_suite() -> Outcome {
    let err = |e: cycad::Error| e.to_string();
    let d = fixtures::dioperad().map_err(err)?;
    let c = dioperad_to_cyclic(&d).map_err(err)?;
    let back = cyclic_to_dioperad(&c, &Polarization::of(c.colors()).map_err(err)?, 1).map_err(err)?;
    ensure(back == d, || "dioperad → cyclic → dioperad".into())?;
    ensure(dioperad_to_cyclic(&back).map_err(err)? == c, || "cyclic → dioperad → cyclic".into())?;

    let o = fixtures::hry().map_err(err)?;
    let p = hry_to_cyclic(&o).map_err(err)?;
    ensure(cyclic_to_hry(&p, 1).map_err(err)? == o, || "HRY → cyclic → HRY".into())?;
    let r = fixtures::r_end().map_err(err)?;
    ensure(hry_to_cyclic(&cyclic_to_hry(&r, 1).map_err(err)?).map_err(err)? == r, || {
        "cyclic → HRY → cyclic".into()
    })?;

    let end = fixtures::end_table().map_err(err)?;
    let fp = FinOperad::materialize(&Forget::new(fixtures::pairing().map_err(err)?), 4, u128::MAX).map_err(err)?;
    ensure(is_positive(&RightAdjoint::new(&end)), || "R(End) is not positive".into())?;
    ensure(is_positive(&RightAdjoint::new(&fp)), || "RF(pairing) is not positive".into())?;
    ensure(is_positive(&r), || "the R(End) table is not positive".into())?;
    ensure(LeftAdjoint::new(&end).entry_size(&Profile::empty()) == 0, || "L(End)() is inhabited".into())?;
    ensure(LeftAdjoint::new(&fp).entry_size(&Profile::empty()) == 0, || "LF(pairing)() is inhabited".into())?;
    let l = fixtures::l_end().map_err(err)?;
    ensure(l.entry_size(&Profile::empty()) == 0, || "the L(End) table has ()".into())
}

// 7 ------------------------------------------------------------------------

fn nonsigma_suite() -> Outcome {
    for (name, p) in [
        ("pairing", fixtures::pairing().unwrap()),
        ("anti-involutive", fixtures::anti_involutive().unwrap()),
    ] {
        let r = validate_nonsigma(&Rotations::new(&p), &cfg());
        clean(name, &r)?;
        ensure(r.checked_for(Law::CyclicEquivariance) > 0, || format!("{name}: no rotation checks"))?;
    }
    // The i = n branch rotates by τ^m; that is exactly what the index maps
    // need to carry α₀, β_{j,0} to αₙ, β_{j,n}.
    for n in 0..=5 {
        for m in 0..=5 {
            if n + m == 0 {
                continue;
            }
            let tau = Permutation::tau_power(n + 1, 1);
            let id = Permutation::identity(m + 1);
            for j in 0..=m {
                let s = equivariance_sigma(&tau, &id, n, j).map_err(|e| e.to_string())?;
                ensure(s == Permutation::tau_power(n + m, m as i64), || format!("i=n branch n={n} m={m} j={j}"))?;
                ensure(beta(j, 0, m, n).unwrap() == beta(j, n, m, n).unwrap().postcompose(&s), || {
                    format!("β against the i=n branch n={n} m={m} j={j}")
                })?;
                if m > 0 {
                    ensure(
                        alpha(0, m, n).unwrap().precompose(&tau) == alpha(n, m, n).unwrap().postcompose(&s),
                        || format!("α against the i=n branch n={n} m={m}"),
                    )?;
                }
            }
        }
    }
    Ok(())
}

// 8 ------------------------------------------------------------------------

fn random_term(rng: &mut ChaCha8Rng, depth: usize) -> Term {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.2) {
            Term::Id(Color::polar(Color::named("c"), rng.gen_range(0..2)))
        } else {
            Term::var(&format!("x{}", rng.gen_range(0..10)))
        };
    }
    match rng.gen_range(0..3) {
        0 => Term::Act {
            perm: PermExpr::Tau(rng.gen_range(-5..6)),
            term: Box::new(random_term(rng, depth - 1)),
        },
        1 => {
            let mut v: Vec<usize> = (0..rng.gen_range(1..6)).collect();
            for k in (1..v.len()).rev() {
                v.swap(k, rng.gen_range(0..=k));
            }
            Term::act(Permutation::new(v).unwrap(), random_term(rng, depth - 1))
        }
        _ => Term::compose(
            random_term(rng, depth - 1),
            rng.gen_range(0..6),
            rng.gen_range(0..6),
            random_term(rng, depth - 1),
        ),
    }
}

fn cycad(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cycad"))
        .args(args)
        .env_remove("CYCAD_BOUND")
        .output()
        .expect("the binary runs")
}

fn exit(args: &[&str]) -> Option<i32> {
    cycad(args).status.code()
}

fn write_fixture(dir: &Path, name: &str) -> Result<PathBuf, String> {
    let out = cycad(&["fixtures", name]);
    ensure(out.status.success(), || format!("fixtures {name} failed"))?;
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
    Ok(path)
}

fn tooling_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let t = random_term(&mut rng, 4);
        let text = print_term(&t);
        ensure(parse_term(&text).as_ref() == Ok(&t), || format!("round trip of {text}"))?;
    }

    let dir = std::env::temp_dir().join(format!("cycad-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let s = |p: &PathBuf| p.to_str().unwrap().to_string();
    let pairing = s(&write_fixture(&dir, "pairing")?);
    let end = s(&write_fixture(&dir, "end-operad")?);
    let anti = s(&write_fixture(&dir, "anti-involutive")?);
    let term = s(&write_fixture(&dir, "term")?);

    let mut mutated: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&anti).unwrap()).map_err(|e| e.to_string())?;
    let elems: Vec<String> = serde_json::from_value(mutated["entries"][0]["elements"].clone()).unwrap();
    let out = mutated["compositions"][0]["output"].as_str().unwrap().to_string();
    let k = elems.iter().position(|e| *e == out).unwrap();
    mutated["compositions"][0]["output"] = elems[(k + 1) % elems.len()].clone().into();
    let mutated_path = s(&dir.join("mutated.json"));
    std::fs::write(&mutated_path, mutated.to_string()).unwrap();
    let garbage = s(&dir.join("garbage.json"));
    std::fs::write(&garbage, "{\"kind\": \"cyclic-operad\", \"colors\": 3}").unwrap();
    let missing = s(&dir.join("missing.json"));

    let expectations: Vec<(Vec<&str>, i32)> = vec![
        (vec!["check", &pairing], 0),
        (vec!["check", "--variant", "markl", &pairing], 0),
        (vec!["check", "--nonsigma", &anti], 0),
        (vec!["check", &end], 0),
        (vec!["check", &mutated_path], 1),
        (vec!["check", &garbage], 2),
        (vec!["check", &missing], 2),
        (vec!["functor", "F", &pairing], 0),
        (vec!["functor", "G", &pairing], 0),
        (vec!["functor", "L", &end], 0),
        (vec!["functor", "R", &end, "--bound", "2"], 0),
        (vec!["functor", "L", &pairing], 2),
        (vec!["functor", "F", &garbage], 2),
        (vec!["adjoint-check", "LF", &end], 0),
        (vec!["adjoint-check", "FR", &pairing], 0),
        (vec!["adjoint-check", "LF", &mutated_path], 1),
        (vec!["adjoint-check", "FR", &mutated_path], 1),
        (vec!["adjoint-check", "LF", &term], 2),
    ];
    for (args, code) in expectations {
        let got = exit(&args);
        ensure(got == Some(code), || format!("cycad {} exited {got:?}, not {code}", args.join(" ")))?;
    }
    let check = cycad(&["check", &mutated_path]);
    let report: serde_json::Value = serde_json::from_slice(&check.stdout).map_err(|e| format!("report: {e}"))?;
    ensure(report["violations"].as_array().is_some_and(|v| !v.is_empty()), || "empty report".into())?;

    let first = cycad(&["export-dot", &term]);
    let second = cycad(&["export-dot", &term]);
    ensure(first.status.success() && !first.stdout.is_empty(), || "export-dot failed".into())?;
    ensure(first.stdout == second.stdout, || "export-dot is not deterministic".into())?;
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("index identities", index_identities),
        ("cyclic axioms", axiom_suite),
        ("composition routes", composition_routes),
        ("swap, associativity and unit identities", sampled_identities),
        ("adjunctions", adjunction_suite),
        ("translations", translation_suite),
        ("rotations only", nonsigma_suite),
        ("tooling", tooling_suite),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {} ({name}): pass [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s]\n  {}", k + 1, why.replace('\n', "\n  "));
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
