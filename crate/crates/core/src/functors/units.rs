use std::collections::HashMap;
use std::marker::PhantomData;

use super::forget::cyclic_profile;
use super::left::raised;
use super::right::component_profile;
use crate::collection::{Collection, Morphism};
use crate::cyclic::CyclicOperad;
use crate::element::Tuple;
use crate::error::{Error, Result};
use crate::operad::{operad_bound, operad_witnesses, Operad, OperadMorphism};
use crate::profile::{BiProfile, Color, InvolutiveSet, Permutation, Profile};
use crate::report::{CheckConfig, Law, Report};

/// `η : O → FLO`, on colors `c ↦ c⁰`; `FLO(c⁰₁, …; c⁰) = O(c₁, …; c)`
/// so every component is the identity.
#[derive(Clone, Copy, Debug, Default)]
pub struct UnitLF;

impl<S: Operad + ?Sized, T: Operad<Elem = S::Elem> + ?Sized> OperadMorphism<S, T> for UnitLF {
    fn map_color(&self, c: &Color) -> Result<Color> {
        Ok(Color::polar(c.clone(), 0))
    }

    fn map_element(&self, _bp: &BiProfile, x: &S::Elem) -> Result<S::Elem> {
        Ok(x.clone())
    }
}

/// `ε : LFP → P`, on colors `c⁰ ↦ c`, `c¹ ↦ c†`. On the entry with leg `k`
/// raised it is `(τ^{−k})*`, which carries `P(cₖ†, c_{k+1}, …, c_{k−1})`
/// back to the original leg order.
///
/// `shift` adds a further rotation; anything but `0` gives a map that is
/// not the counit, which tests use to make sure the checks notice.
pub struct CounitLF<'a, P: ?Sized> {
    target: &'a P,
    shift: i64,
}

impl<'a, P: CyclicOperad + ?Sized> CounitLF<'a, P> {
    pub fn new(target: &'a P) -> Self {
        CounitLF { target, shift: 0 }
    }

    pub fn perturbed(target: &'a P, shift: i64) -> Self {
        CounitLF { target, shift }
    }
}

impl<'a, S, P> Morphism<S, P> for CounitLF<'a, P>
where
    S: Collection<Elem = P::Elem> + ?Sized,
    P: CyclicOperad + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        match c.as_polar() {
            Some((base, 0)) => Ok(base.clone()),
            Some((base, _)) => self.target.colors().dagger(base),
            None => Err(Error::UnknownColor(c.clone())),
        }
    }

    fn map_element(&self, p: &Profile, x: &P::Elem) -> Result<P::Elem> {
        let (k, bp) = raised(p).ok_or_else(|| Error::EmptyEntry(p.clone()))?;
        let q = cyclic_profile(self.target.colors(), &bp)?;
        let sigma = Permutation::tau_power(q.len(), self.shift - k as i64);
        self.target.act(&q, &sigma, x)
    }
}

/// `η : P → RFP`, on colors `c ↦ (c, c†)`; the `k`-th component of the
/// image of `x` is `(τ^k)* x`.
pub struct UnitFR<'a, P: ?Sized> {
    source: &'a P,
}

impl<'a, P: CyclicOperad + ?Sized> UnitFR<'a, P> {
    pub fn new(source: &'a P) -> Self {
        UnitFR { source }
    }
}

impl<'a, P, T> Morphism<P, T> for UnitFR<'a, P>
where
    P: CyclicOperad + ?Sized,
    T: Collection<Elem = Tuple<P::Elem>> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        Ok(Color::pair(c.clone(), self.source.colors().dagger(c)?))
    }

    fn map_element(&self, p: &Profile, x: &P::Elem) -> Result<Tuple<P::Elem>> {
        (0..p.len())
            .map(|k| self.source.act(p, &Permutation::tau_power(p.len(), k as i64), x))
            .collect::<Result<_>>()
            .map(Tuple)
    }
}

/// `ε : FRO → O`, on colors `(c, c′) ↦ c`; the projection to the
/// component whose output is leg `0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CounitFR;

impl<E, S, T> OperadMorphism<S, T> for CounitFR
where
    E: crate::element::Element,
    S: Operad<Elem = Tuple<E>> + ?Sized,
    T: Operad<Elem = E> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        c.as_pair().map(|(a, _)| a.clone()).ok_or_else(|| Error::UnknownColor(c.clone()))
    }

    fn map_element(&self, _bp: &BiProfile, x: &Tuple<E>) -> Result<E> {
        x.0.first().cloned().ok_or_else(|| Error::Invalid("empty tuple".into()))
    }
}

/// `L f : LO → LO′` for an operad morphism `f`.
pub struct LMap<F, S: ?Sized, T: ?Sized> {
    pub f: F,
    _types: PhantomData<(fn(&S), fn(&T))>,
}

impl<F, S: ?Sized, T: ?Sized> LMap<F, S, T> {
    pub fn new(f: F) -> Self {
        LMap { f, _types: PhantomData }
    }
}

impl<F, S, T, A, B> Morphism<A, B> for LMap<F, S, T>
where
    S: Operad + ?Sized,
    T: Operad + ?Sized,
    F: OperadMorphism<S, T>,
    A: Collection<Elem = S::Elem> + ?Sized,
    B: Collection<Elem = T::Elem> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        let (base, a) = c.as_polar().ok_or_else(|| Error::UnknownColor(c.clone()))?;
        Ok(Color::polar(self.f.map_color(base)?, a))
    }

    fn map_element(&self, p: &Profile, x: &S::Elem) -> Result<T::Elem> {
        let (_, bp) = raised(p).ok_or_else(|| Error::EmptyEntry(p.clone()))?;
        self.f.map_element(&bp, x)
    }
}

/// `R f : RO → RO′` for an operad morphism `f`, componentwise.
pub struct RMap<F, S: ?Sized, T: ?Sized> {
    pub f: F,
    _types: PhantomData<(fn(&S), fn(&T))>,
}

impl<F, S: ?Sized, T: ?Sized> RMap<F, S, T> {
    pub fn new(f: F) -> Self {
        RMap { f, _types: PhantomData }
    }
}

impl<F, S, T, A, B> Morphism<A, B> for RMap<F, S, T>
where
    S: Operad + ?Sized,
    T: Operad + ?Sized,
    F: OperadMorphism<S, T>,
    A: Collection<Elem = Tuple<S::Elem>> + ?Sized,
    B: Collection<Elem = Tuple<T::Elem>> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        let (a, b) = c.as_pair().ok_or_else(|| Error::UnknownColor(c.clone()))?;
        Ok(Color::pair(self.f.map_color(a)?, self.f.map_color(b)?))
    }

    fn map_element(&self, p: &Profile, x: &Tuple<S::Elem>) -> Result<Tuple<T::Elem>> {
        (0..p.len())
            .map(|k| self.f.map_element(&component_profile(p, k)?, &x.0[k]))
            .collect::<Result<_>>()
            .map(Tuple)
    }
}

/// `F g : FP → FQ` for a cyclic morphism `g`; needs the involution of `P`
/// to recover cyclic profiles.
pub struct FMap<'a, G, P: ?Sized, Q: ?Sized> {
    pub g: G,
    source: &'a InvolutiveSet,
    _types: PhantomData<(fn(&P), fn(&Q))>,
}

impl<'a, G, P: Collection + ?Sized, Q: ?Sized> FMap<'a, G, P, Q> {
    pub fn new(g: G, source: &'a P) -> Self {
        FMap {
            g,
            source: source.colors(),
            _types: PhantomData,
        }
    }
}

impl<'a, G, P, Q, A, B> OperadMorphism<A, B> for FMap<'a, G, P, Q>
where
    P: Collection + ?Sized,
    Q: Collection + ?Sized,
    G: Morphism<P, Q>,
    A: Operad<Elem = P::Elem> + ?Sized,
    B: Operad<Elem = Q::Elem> + ?Sized,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        self.g.map_color(c)
    }

    fn map_element(&self, bp: &BiProfile, x: &P::Elem) -> Result<Q::Elem> {
        self.g.map_element(&cyclic_profile(self.source, bp)?, x)
    }
}

/// `second ∘ first` for operad morphisms.
pub struct OperadThen<F, G, M: ?Sized> {
    pub first: F,
    pub second: G,
    _mid: PhantomData<fn(&M)>,
}

impl<F, G, M: ?Sized> OperadThen<F, G, M> {
    pub fn new(first: F, second: G) -> Self {
        OperadThen {
            first,
            second,
            _mid: PhantomData,
        }
    }
}

impl<S, M, T, F, G> OperadMorphism<S, T> for OperadThen<F, G, M>
where
    S: Operad + ?Sized,
    M: Operad + ?Sized,
    T: Operad + ?Sized,
    F: OperadMorphism<S, M>,
    G: OperadMorphism<M, T>,
{
    fn map_color(&self, c: &Color) -> Result<Color> {
        self.second.map_color(&self.first.map_color(c)?)
    }

    fn map_element(&self, bp: &BiProfile, x: &S::Elem) -> Result<T::Elem> {
        let mid = self.first.map_element(bp, x)?;
        self.second.map_element(&self.first.map_biprofile(bp)?, &mid)
    }
}

/// The identity operad morphism.
#[derive(Clone, Copy, Debug, Default)]
pub struct OperadIdentity;

impl<S: Operad + ?Sized> OperadMorphism<S, S> for OperadIdentity {
    fn map_color(&self, c: &Color) -> Result<Color> {
        Ok(c.clone())
    }

    fn map_element(&self, _bp: &BiProfile, x: &S::Elem) -> Result<S::Elem> {
        Ok(x.clone())
    }
}

/// Operad counterpart of [`crate::cyclic::compare_morphisms`].
pub fn compare_operad_morphisms<S, T, F, G>(f: &F, g: &G, s: &S, law: Law, cfg: &CheckConfig) -> Report
where
    S: Operad + ?Sized,
    T: Operad + ?Sized,
    F: OperadMorphism<S, T> + ?Sized,
    G: OperadMorphism<S, T> + ?Sized,
{
    let mut report = Report::new();
    for c in s.colors() {
        match (f.map_color(c), g.map_color(c)) {
            (Ok(a), Ok(b)) => report.check(law, a == b, || format!("color {c} ↦ {a} vs {b}")),
            (Err(e), _) | (_, Err(e)) => report.fail(law, format!("color {c}: {e}")),
        }
    }
    let mut cache = HashMap::new();
    for bp in s.support(operad_bound(s, cfg.bound)) {
        let xs = match cache.entry(bp.clone()).or_insert_with(|| operad_witnesses(s, &bp, cfg)) {
            Ok(xs) => xs.clone(),
            Err(e) => {
                report.fail(Law::Closure, format!("elements of {bp}: {e}"));
                continue;
            }
        };
        for x in &xs {
            match (f.map_element(&bp, x), g.map_element(&bp, x)) {
                (Ok(a), Ok(b)) => report.check(law, a == b, || format!("{x} ∈ O{bp} ↦ {a} vs {b}")),
                (Err(e), _) | (_, Err(e)) => report.fail(law, format!("{x} ∈ O{bp}: {e}")),
            }
        }
    }
    report
}
