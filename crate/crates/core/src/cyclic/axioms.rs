use std::fmt;

use super::{compose, graft, identity, rotate, CyclicOperad};
use crate::collection::{effective_bound, Symmetry, Witnesses};
use crate::error::Result;
use crate::profile::{alpha, beta, equivariance_sigma, Color, Permutation, Profile};
use crate::report::{CheckConfig, Law, Report};

/// An element together with the profile of its entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arg<E> {
    pub profile: Profile,
    pub elem: E,
}

impl<E> Arg<E> {
    pub fn new(profile: Profile, elem: E) -> Self {
        Arg { profile, elem }
    }

    /// `‖c̲‖` as an unsigned count of legs minus one; entries holding
    /// arguments of compositions are never empty profiles.
    fn n(&self) -> usize {
        self.profile.len() - 1
    }
}

impl<E: fmt::Display> fmt::Display for Arg<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ∈ P{}", self.elem, self.profile)
    }
}

/// One instance of an axiom. [`Instance::sides`] evaluates every side of
/// the equation; the instance holds when they all agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance<E> {
    /// `(τ^{m−j+i})* (x ∘ᵢʲ y) = y ∘ⱼⁱ x`.
    Swap { x: Arg<E>, i: usize, y: Arg<E>, j: usize },
    /// `(x ∘ᵢʲ y) ∘_{β_{j,i}(k)}ˡ z = x ∘ᵢ^{α_{k,p}(j)} (y ∘ₖˡ z)` for `k ≠ j`.
    Associativity { x: Arg<E>, i: usize, y: Arg<E>, j: usize, k: usize, z: Arg<E>, l: usize },
    /// `(σ₁* x) ∘ᵢʲ (σ₂* y) = σ* (x ∘_{σ₁(i)}^{σ₂(j)} y)`.
    Equivariance { x: Arg<E>, sigma1: Permutation, i: usize, y: Arg<E>, sigma2: Permutation, j: usize },
    /// `(τ* x) ∘ᵢʲ y = τ* (x ∘_{i+1}ʲ y)` for `i < n`, and
    /// `(τ* x) ∘ₙʲ y = (τ^m)* (x ∘₀ʲ y)`.
    CyclicEquivariance { x: Arg<E>, i: usize, y: Arg<E>, j: usize },
    /// `x ∘ᵢ¹ id_{cᵢ†} = x`.
    UnitRight { x: Arg<E>, i: usize },
    /// `τ* id_c = id_{c†}`.
    UnitDagger { c: Color },
    /// `id_{cᵢ†} ∘₁ⁱ x = (τⁱ)* x`.
    DerivedUnit { x: Arg<E>, i: usize },
    /// `x ∘ᵢ⁰ id_{cᵢ} = x`.
    RightUnit { x: Arg<E>, i: usize },
    /// `x ∘ᵢʲ y = (τ^{−i})*[(τⁱ)* x ∘₀ʲ y] = (τ^{−i})*[(τⁱ)* x ∘₀⁰ (τʲ)* y]`,
    /// the middle one computed through the swap law.
    Reduction { x: Arg<E>, i: usize, y: Arg<E>, j: usize },
    /// `x ∘ᵢ⁰ y = (τ^{−i})*[(τⁱ)* x ∘₀⁰ y]`.
    Rederivation { x: Arg<E>, i: usize, y: Arg<E> },
}

impl<E: Clone + PartialEq + fmt::Display> Instance<E> {
    pub fn law(&self) -> Law {
        match self {
            Instance::Swap { .. } => Law::Swap,
            Instance::Associativity { .. } => Law::Associativity,
            Instance::Equivariance { .. } => Law::Equivariance,
            Instance::CyclicEquivariance { .. } => Law::CyclicEquivariance,
            Instance::UnitRight { .. } | Instance::UnitDagger { .. } => Law::Unit,
            Instance::DerivedUnit { .. } => Law::DerivedUnit,
            Instance::RightUnit { .. } => Law::RightUnit,
            Instance::Reduction { .. } => Law::Reduction,
            Instance::Rederivation { .. } => Law::Rederivation,
        }
    }

    /// Evaluates every side of the equation.
    pub fn sides<P>(&self, p: &P) -> Result<Vec<(Profile, E)>>
    where
        P: CyclicOperad<Elem = E> + ?Sized,
    {
        Ok(match self {
            Instance::Swap { x, i, y, j } => {
                let (q, xy) = compose(p, &x.profile, &x.elem, *i, *j, &y.profile, &y.elem)?;
                let shift = (y.n() - j + i) as i64;
                vec![rotate(p, &q, shift, &xy)?, compose(p, &y.profile, &y.elem, *j, *i, &x.profile, &x.elem)?]
            }
            Instance::Associativity { x, i, y, j, k, z, l } => {
                let (n, m, pz) = (x.n(), y.n(), z.n());
                let (q, xy) = compose(p, &x.profile, &x.elem, *i, *j, &y.profile, &y.elem)?;
                let k2 = beta(*j, *i, m, n)?.get(*k).expect("k ≠ j");
                let lhs = compose(p, &q, &xy, k2, *l, &z.profile, &z.elem)?;
                let (r, yz) = compose(p, &y.profile, &y.elem, *k, *l, &z.profile, &z.elem)?;
                let j2 = alpha(*k, pz, m)?.get(*j).expect("j ≠ k");
                let rhs = compose(p, &x.profile, &x.elem, *i, j2, &r, &yz)?;
                vec![lhs, rhs]
            }
            Instance::Equivariance { x, sigma1, i, y, sigma2, j } => {
                let (xp, sx) = super::act(p, &x.profile, sigma1, &x.elem)?;
                let (yp, sy) = super::act(p, &y.profile, sigma2, &y.elem)?;
                let lhs = compose(p, &xp, &sx, *i, *j, &yp, &sy)?;
                let (q, xy) = compose(
                    p,
                    &x.profile,
                    &x.elem,
                    sigma1.apply(*i),
                    sigma2.apply(*j),
                    &y.profile,
                    &y.elem,
                )?;
                let sigma = equivariance_sigma(sigma1, sigma2, *i, *j)?;
                vec![lhs, super::act(p, &q, &sigma, &xy)?]
            }
            Instance::CyclicEquivariance { x, i, y, j } => {
                let (n, m) = (x.n(), y.n());
                let (xp, tx) = rotate(p, &x.profile, 1, &x.elem)?;
                let lhs = compose(p, &xp, &tx, *i, *j, &y.profile, &y.elem)?;
                let rhs = if *i < n {
                    let (q, xy) = compose(p, &x.profile, &x.elem, i + 1, *j, &y.profile, &y.elem)?;
                    rotate(p, &q, 1, &xy)?
                } else {
                    let (q, xy) = compose(p, &x.profile, &x.elem, 0, *j, &y.profile, &y.elem)?;
                    rotate(p, &q, m as i64, &xy)?
                };
                vec![lhs, rhs]
            }
            Instance::UnitRight { x, i } => {
                let c = p.colors().dagger(x.profile.get(*i)?)?;
                let (ip, id) = identity(p, &c)?;
                vec![compose(p, &x.profile, &x.elem, *i, 1, &ip, &id)?, (x.profile.clone(), x.elem.clone())]
            }
            Instance::UnitDagger { c } => {
                let (ip, id) = identity(p, c)?;
                vec![rotate(p, &ip, 1, &id)?, identity(p, &p.colors().dagger(c)?)?]
            }
            Instance::DerivedUnit { x, i } => {
                let c = p.colors().dagger(x.profile.get(*i)?)?;
                let (ip, id) = identity(p, &c)?;
                vec![
                    compose(p, &ip, &id, 1, *i, &x.profile, &x.elem)?,
                    rotate(p, &x.profile, *i as i64, &x.elem)?,
                ]
            }
            Instance::RightUnit { x, i } => {
                let (ip, id) = identity(p, x.profile.get(*i)?)?;
                vec![compose(p, &x.profile, &x.elem, *i, 0, &ip, &id)?, (x.profile.clone(), x.elem.clone())]
            }
            Instance::Reduction { x, i, y, j } => {
                let m = y.n();
                let direct = compose(p, &x.profile, &x.elem, *i, *j, &y.profile, &y.elem)?;
                let (xp, rx) = rotate(p, &x.profile, *i as i64, &x.elem)?;
                // Through the swap law: x′ ∘₀ʲ y = (τ^{−(m−j)})* (y ∘ⱼ⁰ x′).
                let (q, yx) = compose(p, &y.profile, &y.elem, *j, 0, &xp, &rx)?;
                let (q, w) = rotate(p, &q, -((m - j) as i64), &yx)?;
                let swapped = rotate(p, &q, -(*i as i64), &w)?;
                // Through ∘₀⁰ only.
                let (yp, ry) = rotate(p, &y.profile, *j as i64, &y.elem)?;
                let (q, v) = compose(p, &xp, &rx, 0, 0, &yp, &ry)?;
                let zero = rotate(p, &q, -(*i as i64), &v)?;
                vec![direct, swapped, zero]
            }
            Instance::Rederivation { x, i, y } => {
                let stored = compose(p, &x.profile, &x.elem, *i, 0, &y.profile, &y.elem)?;
                let (xp, rx) = rotate(p, &x.profile, *i as i64, &x.elem)?;
                let (q, v) = compose(p, &xp, &rx, 0, 0, &y.profile, &y.elem)?;
                vec![stored, rotate(p, &q, -(*i as i64), &v)?]
            }
        })
    }

    /// Checks the instance, recording the outcome under its law.
    pub fn check<P>(&self, p: &P, report: &mut Report)
    where
        P: CyclicOperad<Elem = E> + ?Sized,
    {
        match self.sides(p) {
            Ok(sides) => {
                let holds = sides.windows(2).all(|w| w[0] == w[1]);
                report.check(self.law(), holds, || {
                    let values: Vec<String> = sides.iter().map(|(_, e)| e.to_string()).collect();
                    format!("{self}: sides {}", values.join(" / "))
                });
            }
            Err(e) => report.fail(Law::Closure, format!("{self}: {e}")),
        }
    }
}

impl<E: fmt::Display> fmt::Display for Instance<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Swap { x, i, y, j } => write!(f, "swap x={x} i={i} y={y} j={j}"),
            Instance::Associativity { x, i, y, j, k, z, l } => {
                write!(f, "associativity x={x} i={i} y={y} j={j} k={k} z={z} l={l}")
            }
            Instance::Equivariance { x, sigma1, i, y, sigma2, j } => {
                write!(f, "equivariance x={x} σ₁={sigma1} i={i} y={y} σ₂={sigma2} j={j}")
            }
            Instance::CyclicEquivariance { x, i, y, j } => write!(f, "rotation x={x} i={i} y={y} j={j}"),
            Instance::UnitRight { x, i } => write!(f, "unit x={x} i={i}"),
            Instance::UnitDagger { c } => write!(f, "unit rotation c={c}"),
            Instance::DerivedUnit { x, i } => write!(f, "derived unit x={x} i={i}"),
            Instance::RightUnit { x, i } => write!(f, "right unit x={x} i={i}"),
            Instance::Reduction { x, i, y, j } => write!(f, "reduction x={x} i={i} y={y} j={j}"),
            Instance::Rederivation { x, i, y } => write!(f, "rederivation x={x} i={i} y={y}"),
        }
    }
}

type Graft = (Profile, usize, Profile, usize);

fn graft_pairs<P: CyclicOperad + ?Sized>(p: &P, support: &[Profile], bound: usize) -> Vec<Graft> {
    let mut out = Vec::new();
    for cp in support {
        for i in 0..cp.len() {
            for dp in support {
                for j in 0..dp.len() {
                    if graft(p, cp, i, dp, j).is_ok_and(|q| q.norm() <= bound as isize) {
                        out.push((cp.clone(), i, dp.clone(), j));
                    }
                }
            }
        }
    }
    out
}

fn symmetric_pairs(sym: Symmetry, n: usize, m: usize, cfg: &CheckConfig) -> Vec<(Permutation, Permutation)> {
    let (a, b) = (n + 1, m + 1);
    if n.max(m) <= cfg.full_symmetry_arity {
        let ps = sym.permutations(a);
        let qs = sym.permutations(b);
        return ps.iter().flat_map(|s| qs.iter().map(move |t| (s.clone(), t.clone()))).collect();
    }
    let mut out = vec![(Permutation::identity(a), Permutation::identity(b))];
    out.extend(sym.generators(a).into_iter().map(|s| (s, Permutation::identity(b))));
    out.extend(sym.generators(b).into_iter().map(|t| (Permutation::identity(a), t)));
    out
}

/// Calls `f` on every instance of `law` whose profiles have norm at most
/// the bound, over witness elements of each entry (all of them when small,
/// a seeded sample otherwise). Entries that cannot be listed are recorded
/// in `report`.
pub fn for_each_instance<P, F>(p: &P, law: Law, sym: Symmetry, cfg: &CheckConfig, report: &mut Report, mut f: F)
where
    P: CyclicOperad + ?Sized,
    F: FnMut(Instance<P::Elem>),
{
    let bound = effective_bound(p, cfg.bound);
    let support = p.support(bound);
    let mut w = Witnesses::new(p, cfg);
    let mut get = |q: &Profile, report: &mut Report| -> Vec<Arg<P::Elem>> {
        match w.get(q) {
            Ok(xs) => xs.iter().map(|x| Arg::new(q.clone(), x.clone())).collect(),
            Err(e) => {
                report.fail(Law::Closure, format!("elements of {q}: {e}"));
                Vec::new()
            }
        }
    };
    let nonempty: Vec<Profile> = support.iter().filter(|q| !q.is_empty()).cloned().collect();
    match law {
        Law::Swap | Law::Reduction | Law::Rederivation | Law::Associativity => {
            for (cp, i, dp, j) in graft_pairs(p, &nonempty, bound) {
                if law == Law::Rederivation && (j != 0 || i == 0) {
                    continue;
                }
                let xs = get(&cp, report);
                let ys = get(&dp, report);
                if law == Law::Associativity {
                    let (n, m) = (cp.len() - 1, dp.len() - 1);
                    for k in (0..=m).filter(|&k| k != j) {
                        for ep in &nonempty {
                            let pz = ep.len() - 1;
                            if (m + pz) as isize - 1 > bound as isize || n + m + pz > bound + 2 {
                                continue;
                            }
                            for l in 0..ep.len() {
                                if graft(p, &dp, k, ep, l).is_err() {
                                    continue;
                                }
                                let zs = get(ep, report);
                                for x in &xs {
                                    for y in &ys {
                                        for z in &zs {
                                            f(Instance::Associativity {
                                                x: x.clone(),
                                                i,
                                                y: y.clone(),
                                                j,
                                                k,
                                                z: z.clone(),
                                                l,
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                    continue;
                }
                for x in &xs {
                    for y in &ys {
                        let (x, y) = (x.clone(), y.clone());
                        f(match law {
                            Law::Swap => Instance::Swap { x, i, y, j },
                            Law::Reduction => Instance::Reduction { x, i, y, j },
                            _ => Instance::Rederivation { x, i, y },
                        });
                    }
                }
            }
        }
        Law::Equivariance | Law::CyclicEquivariance => {
            for cp in &nonempty {
                for dp in &nonempty {
                    let (n, m) = (cp.len() - 1, dp.len() - 1);
                    if n + m > bound + 1 {
                        continue;
                    }
                    let xs = get(cp, report);
                    let ys = get(dp, report);
                    let pairs = if law == Law::Equivariance {
                        symmetric_pairs(sym, n, m, cfg)
                    } else {
                        vec![(Permutation::tau_power(n + 1, 1), Permutation::identity(m + 1))]
                    };
                    for (s1, s2) in pairs {
                        let (Ok(cq), Ok(dq)) = (cp.act(&s1), dp.act(&s2)) else { continue };
                        for i in 0..=n {
                            for j in 0..=m {
                                if graft(p, &cq, i, &dq, j).is_err() {
                                    continue;
                                }
                                for x in &xs {
                                    for y in &ys {
                                        let (x, y) = (x.clone(), y.clone());
                                        f(if law == Law::Equivariance {
                                            Instance::Equivariance {
                                                x,
                                                sigma1: s1.clone(),
                                                i,
                                                y,
                                                sigma2: s2.clone(),
                                                j,
                                            }
                                        } else {
                                            Instance::CyclicEquivariance { x, i, y, j }
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Law::Unit | Law::DerivedUnit | Law::RightUnit => {
            if law == Law::Unit {
                for c in p.colors().colors() {
                    f(Instance::UnitDagger { c: c.clone() });
                }
            }
            if bound < 1 {
                return;
            }
            for cp in &nonempty {
                for x in get(cp, report) {
                    for i in 0..cp.len() {
                        let x = x.clone();
                        f(match law {
                            Law::Unit => Instance::UnitRight { x, i },
                            Law::DerivedUnit => Instance::DerivedUnit { x, i },
                            _ => Instance::RightUnit { x, i },
                        });
                    }
                }
            }
        }
        _ => {}
    }
}
