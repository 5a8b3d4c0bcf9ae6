use super::{compose, graft, identity, CyclicOperad};
use crate::collection::{effective_bound, validate_collection_morphism, Collection, Morphism, Witnesses};
use crate::error::Result;
use crate::profile::Profile;
use crate::report::{CheckConfig, Law, Report};

/// Checks that `f` is a morphism of cyclic operads: a morphism of
/// collections that preserves identities and every composition `∘ᵢʲ`.
pub fn validate_cyclic_morphism<S, T, F>(f: &F, s: &S, t: &T, cfg: &CheckConfig) -> Report
where
    S: CyclicOperad + ?Sized,
    T: CyclicOperad + ?Sized,
    F: Morphism<S, T> + ?Sized,
{
    let mut report = validate_collection_morphism(f, s, t, cfg);
    if s.has_identities() {
        for c in s.colors().colors() {
            let result = (|| -> Result<bool> {
                let (ip, id) = identity(s, c)?;
                let image = f.map_element(&ip, &id)?;
                let (_, target) = identity(t, &f.map_color(c)?)?;
                Ok(image == target)
            })();
            match result {
                Ok(holds) => report.check(Law::MorphismUnit, holds, || format!("f(id_{c}) ≠ id_f({c})")),
                Err(e) => report.fail(Law::MorphismUnit, format!("identity of {c}: {e}")),
            }
        }
    }
    let bound = effective_bound(s, cfg.bound);
    let support: Vec<Profile> = s.support(bound).into_iter().filter(|p| !p.is_empty()).collect();
    let mut w = Witnesses::new(s, cfg);
    for cp in &support {
        for dp in &support {
            for i in 0..cp.len() {
                for j in 0..dp.len() {
                    if !graft(s, cp, i, dp, j).is_ok_and(|q| q.norm() <= bound as isize) {
                        continue;
                    }
                    let xs = w.get(cp).map(<[_]>::to_vec).unwrap_or_default();
                    let ys = w.get(dp).map(<[_]>::to_vec).unwrap_or_default();
                    for x in &xs {
                        for y in &ys {
                            let result = (|| -> Result<(T::Elem, T::Elem)> {
                                let (q, xy) = compose(s, cp, x, i, j, dp, y)?;
                                let lhs = f.map_element(&q, &xy)?;
                                let (_, rhs) = compose(
                                    t,
                                    &f.map_profile(cp)?,
                                    &f.map_element(cp, x)?,
                                    i,
                                    j,
                                    &f.map_profile(dp)?,
                                    &f.map_element(dp, y)?,
                                )?;
                                Ok((lhs, rhs))
                            })();
                            match result {
                                Ok((a, b)) => report.check(Law::MorphismComposition, a == b, || {
                                    format!("f({x} ∘{i}^{j} {y}) = {a} but f({x}) ∘{i}^{j} f({y}) = {b}")
                                }),
                                Err(e) => report.fail(
                                    Law::MorphismComposition,
                                    format!("{x} ∘{i}^{j} {y} in {cp}, {dp}: {e}"),
                                ),
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Checks that two morphisms with the same source agree on colors and on
/// every witness element, recording disagreements under `law`.
pub fn compare_morphisms<S, T, F, G>(f: &F, g: &G, s: &S, law: Law, cfg: &CheckConfig) -> Report
where
    S: Collection + ?Sized,
    T: Collection + ?Sized,
    F: Morphism<S, T> + ?Sized,
    G: Morphism<S, T> + ?Sized,
{
    let mut report = Report::new();
    for c in s.colors().colors() {
        match (f.map_color(c), g.map_color(c)) {
            (Ok(a), Ok(b)) => report.check(law, a == b, || format!("color {c} ↦ {a} vs {b}")),
            (Err(e), _) | (_, Err(e)) => report.fail(law, format!("color {c}: {e}")),
        }
    }
    let bound = effective_bound(s, cfg.bound);
    let mut w = Witnesses::new(s, cfg);
    for p in s.support(bound) {
        let xs = match w.get(&p) {
            Ok(xs) => xs.to_vec(),
            Err(e) => {
                report.fail(Law::Closure, format!("elements of {p}: {e}"));
                continue;
            }
        };
        for x in &xs {
            match (f.map_element(&p, x), g.map_element(&p, x)) {
                (Ok(a), Ok(b)) => report.check(law, a == b, || format!("{x} ∈ P{p} ↦ {a} vs {b}")),
                (Err(e), _) | (_, Err(e)) => report.fail(law, format!("{x} ∈ P{p}: {e}")),
            }
        }
    }
    report
}
