use std::collections::BTreeMap;

use super::{PermExpr, Term};
use crate::collection::Symmetry;
use crate::cyclic::{self, for_each_instance, Arg, CyclicOperad, Instance};
use crate::error::{Error, Result};
use crate::profile::{alpha, beta, equivariance_sigma, InvolutiveSet, Permutation, Profile};
use crate::report::{CheckConfig, Law, Report};

/// Values of the variables of a term: each an element with its profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation<E> {
    vars: BTreeMap<String, (Profile, E)>,
}

impl<E> Default for Valuation<E> {
    fn default() -> Self {
        Valuation { vars: BTreeMap::new() }
    }
}

impl<E: Clone> Valuation<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: &str, profile: Profile, elem: E) {
        self.vars.insert(name.to_string(), (profile, elem));
    }

    pub fn with(mut self, name: &str, profile: Profile, elem: E) -> Self {
        self.insert(name, profile, elem);
        self
    }

    pub fn get(&self, name: &str) -> Option<&(Profile, E)> {
        self.vars.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &(Profile, E))> {
        self.vars.iter()
    }

    /// Just the profiles, for [`infer_profile`].
    pub fn profiles(&self) -> BTreeMap<String, Profile> {
        self.vars.iter().map(|(k, (p, _))| (k.clone(), p.clone())).collect()
    }
}

fn perm_for(perm: &PermExpr, len: usize) -> Result<Permutation> {
    match perm {
        PermExpr::Tau(k) => Ok(Permutation::tau_power(len, *k)),
        PermExpr::Literal(sigma) if sigma.len() == len => Ok(sigma.clone()),
        PermExpr::Literal(sigma) => Err(Error::ArityMismatch {
            expected: len,
            found: sigma.len(),
        }),
    }
}

/// Evaluates `t` in `p`, returning the element and its profile.
pub fn eval_term<P: CyclicOperad + ?Sized>(p: &P, env: &Valuation<P::Elem>, t: &Term) -> Result<(Profile, P::Elem)> {
    match t {
        Term::Var(name) => env.get(name).cloned().ok_or_else(|| Error::UnboundVariable(name.clone())),
        Term::Id(c) => cyclic::identity(p, c),
        Term::Compose { left, i, j, right } => {
            let (lp, x) = eval_term(p, env, left)?;
            let (rp, y) = eval_term(p, env, right)?;
            cyclic::compose(p, &lp, &x, *i, *j, &rp, &y)
        }
        Term::Act { perm, term } => {
            let (q, x) = eval_term(p, env, term)?;
            let sigma = perm_for(perm, q.len())?;
            cyclic::act(p, &q, &sigma, &x)
        }
    }
}

/// The profile of `t` from the shape of the term alone.
pub fn infer_profile(colors: &InvolutiveSet, profiles: &BTreeMap<String, Profile>, t: &Term) -> Result<Profile> {
    match t {
        Term::Var(name) => profiles.get(name).cloned().ok_or_else(|| Error::UnboundVariable(name.clone())),
        Term::Id(c) => Ok(Profile(vec![colors.dagger(c)?, c.clone()])),
        Term::Compose { left, i, j, right } => {
            let lp = infer_profile(colors, profiles, left)?;
            let rp = infer_profile(colors, profiles, right)?;
            let (ci, dj) = (lp.get(*i)?, rp.get(*j)?);
            if *ci != colors.dagger(dj)? {
                return Err(Error::ColorMismatch {
                    left: ci.clone(),
                    right: dj.clone(),
                });
            }
            lp.compose(*i, *j, &rp)
        }
        Term::Act { perm, term } => {
            let q = infer_profile(colors, profiles, term)?;
            q.act(&perm_for(perm, q.len())?)
        }
    }
}

/// Reduces every power of `τ` modulo the arity of its argument.
pub fn normalize_powers(colors: &InvolutiveSet, profiles: &BTreeMap<String, Profile>, t: &Term) -> Result<Term> {
    Ok(match t {
        Term::Var(_) | Term::Id(_) => t.clone(),
        Term::Compose { left, i, j, right } => Term::compose(
            normalize_powers(colors, profiles, left)?,
            *i,
            *j,
            normalize_powers(colors, profiles, right)?,
        ),
        Term::Act { perm, term } => {
            let inner = normalize_powers(colors, profiles, term)?;
            let perm = match perm {
                PermExpr::Tau(k) => {
                    let len = infer_profile(colors, profiles, term)?.len().max(1) as i64;
                    PermExpr::Tau(k.rem_euclid(len))
                }
                literal => literal.clone(),
            };
            Term::Act {
                perm,
                term: Box::new(inner),
            }
        }
    })
}

/// The defining axioms, as named for [`axiom_instances`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    C1,
    C2,
    C3,
    C4,
    /// The rotation-only form of C3.
    NS3,
}

impl Axiom {
    pub fn law(self) -> Law {
        match self {
            Axiom::C1 => Law::Swap,
            Axiom::C2 => Law::Associativity,
            Axiom::C3 => Law::Equivariance,
            Axiom::C4 => Law::Unit,
            Axiom::NS3 => Law::CyclicEquivariance,
        }
    }
}

/// An equation between two terms under a valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermInstance<E> {
    pub lhs: Term,
    pub rhs: Term,
    pub env: Valuation<E>,
}

impl<E: Clone + PartialEq> TermInstance<E> {
    /// Whether both sides evaluate to the same element of the same entry.
    pub fn holds<P: CyclicOperad<Elem = E> + ?Sized>(&self, p: &P) -> Result<bool> {
        Ok(eval_term(p, &self.env, &self.lhs)? == eval_term(p, &self.env, &self.rhs)?)
    }
}

fn bind<E: Clone>(env: &mut Valuation<E>, name: &str, a: &Arg<E>) -> Term {
    env.insert(name, a.profile.clone(), a.elem.clone());
    Term::var(name)
}

fn norm(a: &Arg<impl Sized>) -> usize {
    a.profile.len() - 1
}

/// The terms of an axiom instance, or `None` for the derived laws.
pub fn instance_terms<E: Clone>(inst: &Instance<E>, colors: &InvolutiveSet) -> Result<Option<TermInstance<E>>> {
    let mut env = Valuation::new();
    let (lhs, rhs) = match inst {
        Instance::Swap { x, i, y, j } => {
            let (tx, ty) = (bind(&mut env, "x", x), bind(&mut env, "y", y));
            let shift = (norm(y) - j + i) as i64;
            (Term::tau(shift, Term::compose(tx.clone(), *i, *j, ty.clone())), Term::compose(ty, *j, *i, tx))
        }
        Instance::Associativity { x, i, y, j, k, z, l } => {
            let (tx, ty, tz) = (bind(&mut env, "x", x), bind(&mut env, "y", y), bind(&mut env, "z", z));
            let (n, m, pz) = (norm(x), norm(y), norm(z));
            let k2 = beta(*j, *i, m, n)?.get(*k).ok_or(Error::IndexOutOfRange {
                index: *k as i64,
                max: m as i64,
            })?;
            let j2 = alpha(*k, pz, m)?.get(*j).ok_or(Error::IndexOutOfRange {
                index: *j as i64,
                max: m as i64,
            })?;
            (
                Term::compose(Term::compose(tx.clone(), *i, *j, ty.clone()), k2, *l, tz.clone()),
                Term::compose(tx, *i, j2, Term::compose(ty, *k, *l, tz)),
            )
        }
        Instance::Equivariance { x, sigma1, i, y, sigma2, j } => {
            let (tx, ty) = (bind(&mut env, "x", x), bind(&mut env, "y", y));
            let sigma = equivariance_sigma(sigma1, sigma2, *i, *j)?;
            (
                Term::compose(Term::act(sigma1.clone(), tx.clone()), *i, *j, Term::act(sigma2.clone(), ty.clone())),
                Term::act(sigma, Term::compose(tx, sigma1.apply(*i), sigma2.apply(*j), ty)),
            )
        }
        Instance::CyclicEquivariance { x, i, y, j } => {
            let (tx, ty) = (bind(&mut env, "x", x), bind(&mut env, "y", y));
            let rhs = if *i < norm(x) {
                Term::tau(1, Term::compose(tx.clone(), i + 1, *j, ty.clone()))
            } else {
                Term::tau(norm(y) as i64, Term::compose(tx.clone(), 0, *j, ty.clone()))
            };
            (Term::compose(Term::tau(1, tx), *i, *j, ty), rhs)
        }
        Instance::UnitRight { x, i } => {
            let tx = bind(&mut env, "x", x);
            let c = colors.dagger(x.profile.get(*i)?)?;
            (Term::compose(tx.clone(), *i, 1, Term::Id(c)), tx)
        }
        Instance::UnitDagger { c } => (Term::tau(1, Term::Id(c.clone())), Term::Id(colors.dagger(c)?)),
        _ => return Ok(None),
    };
    Ok(Some(TermInstance { lhs, rhs, env }))
}

/// Every instance of `axiom` within `bound`, as pairs of terms whose
/// evaluations must agree. Witness elements are chosen as in the validators.
pub fn axiom_instances<P: CyclicOperad + ?Sized>(p: &P, axiom: Axiom, bound: usize) -> Result<Vec<TermInstance<P::Elem>>> {
    let sym = match axiom {
        Axiom::NS3 => Symmetry::Cyclic,
        _ => p.symmetry(),
    };
    let cfg = CheckConfig::with_bound(bound);
    let mut listing = Report::new();
    let mut out = Vec::new();
    let mut failure = None;
    for_each_instance(p, axiom.law(), sym, &cfg, &mut listing, |inst| {
        match instance_terms(&inst, p.colors()) {
            Ok(Some(t)) => out.push(t),
            Ok(None) => {}
            Err(e) => failure = failure.take().or(Some(e)),
        }
    });
    if let Some(v) = listing.violations.first() {
        return Err(Error::Closure(v.to_string()));
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}
