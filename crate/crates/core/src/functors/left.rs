use rand::RngCore;

use crate::collection::Collection;
use crate::cyclic::CyclicOperad;
use crate::error::{Error, Result};
use crate::operad::Operad;
use crate::profile::{iota_lower, BiProfile, Color, InvolutiveSet, Permutation, Profile};

/// The free cyclic operad on an operad, over the polarized colors
/// `Σ₂ × C`.
///
/// `LO(c̲ᵃ)` is empty unless exactly one leg `k` is raised (`aₖ = 1`), and
/// then it is `O(c_{k+1}, …, cₙ, c₀, …, c_{k−1}; cₖ)`: the raised leg is the
/// output and the inputs are read around the cycle. Rotations act
/// trivially.
#[derive(Clone, Debug)]
pub struct LeftAdjoint<O> {
    pub inner: O,
    colors: InvolutiveSet,
}

impl<O: Operad> LeftAdjoint<O> {
    pub fn new(inner: O) -> Self {
        let colors = iota_lower(inner.colors());
        LeftAdjoint { inner, colors }
    }
}

/// The raised leg of a polarized profile and the operadic profile it
/// determines, or `None` when the entry is empty.
pub fn raised(p: &Profile) -> Option<(usize, BiProfile)> {
    let mut k = None;
    let mut bases = Vec::with_capacity(p.len());
    for (t, c) in p.colors().iter().enumerate() {
        let (base, a) = c.as_polar()?;
        if a == 1 {
            if k.is_some() {
                return None;
            }
            k = Some(t);
        }
        bases.push(base.clone());
    }
    let k = k?;
    let len = bases.len();
    let inputs = (1..len).map(|r| bases[(k + r) % len].clone()).collect();
    Some((k, BiProfile::new(inputs, bases[k].clone())))
}

/// The polarized profile with leg `k` raised whose inputs, read around the
/// cycle from `k`, are those of `bp`.
pub fn raised_profile(bp: &BiProfile, k: usize) -> Profile {
    let len = bp.arity() + 1;
    let mut out = vec![Color::polar(bp.output.clone(), 1); len];
    for r in 1..len {
        out[(k + r) % len] = Color::polar(bp.inputs[r - 1].clone(), 0);
    }
    Profile(out)
}

fn entry(p: &Profile) -> Result<(usize, BiProfile)> {
    raised(p).ok_or_else(|| Error::EmptyEntry(p.clone()))
}

impl<O: Operad> LeftAdjoint<O> {
    fn compose00(&self, cp: &Profile, x: &O::Elem, dp: &Profile, y: &O::Elem) -> Result<O::Elem> {
        let (k1, bx) = entry(cp)?;
        let (k2, by) = entry(dp)?;
        let (n, m) = (cp.len() - 1, dp.len() - 1);
        match (k1, k2) {
            (k1, 0) if k1 != 0 => self.inner.compose(&bx, x, n + 1 - k1, &by, y),
            (0, k2) if k2 != 0 => self.inner.compose(&by, y, m + 1 - k2, &bx, x),
            _ => Err(Error::ColorMismatch {
                left: cp.colors()[0].clone(),
                right: dp.colors()[0].clone(),
            }),
        }
    }
}

impl<O: Operad> Collection for LeftAdjoint<O> {
    type Elem = O::Elem;

    fn colors(&self) -> &InvolutiveSet {
        &self.colors
    }

    fn max_norm(&self) -> Option<usize> {
        self.inner.max_arity()
    }

    fn entry_size(&self, p: &Profile) -> u128 {
        raised(p).map_or(0, |(_, bp)| self.inner.entry_size(&bp))
    }

    fn elements(&self, p: &Profile) -> Result<Vec<O::Elem>> {
        match raised(p) {
            Some((_, bp)) => self.inner.elements(&bp),
            None => Ok(Vec::new()),
        }
    }

    fn sample(&self, p: &Profile, rng: &mut dyn RngCore) -> Option<O::Elem> {
        self.inner.sample(&raised(p)?.1, rng)
    }

    fn contains(&self, p: &Profile, x: &O::Elem) -> bool {
        raised(p).is_some_and(|(_, bp)| self.inner.contains(&bp, x))
    }

    fn parse_element(&self, p: &Profile, text: &str) -> Result<O::Elem> {
        self.inner.parse_element(&entry(p)?.1, text)
    }

    /// `σ*` acts by `σ_{k′}` with `k′ = σ⁻¹(k)`, a permutation fixing `0`.
    fn act(&self, p: &Profile, sigma: &Permutation, x: &O::Elem) -> Result<O::Elem> {
        let (k, bp) = entry(p)?;
        if sigma.len() != p.len() {
            return Err(Error::ArityMismatch {
                expected: p.len(),
                found: sigma.len(),
            });
        }
        let k2 = sigma.inverse().apply(k);
        let inner = sigma
            .conjugate_sigma_k(k2)
            .drop_fixed_zero()
            .expect("σₖ fixes 0");
        self.inner.act(&bp, &inner, x)
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        let mut out: Vec<Profile> = self
            .inner
            .support(bound)
            .iter()
            .flat_map(|bp| (0..=bp.arity()).map(move |k| raised_profile(bp, k)))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl<O: Operad> CyclicOperad for LeftAdjoint<O> {
    fn identity(&self, c: &Color) -> Result<O::Elem> {
        let (base, _) = c
            .as_polar()
            .ok_or_else(|| Error::UnknownColor(c.clone()))?;
        self.inner.identity(base)
    }

    /// `x ∘ᵢ⁰ y` is `(τⁱ)* x ∘₀⁰ y` as elements, since rotations act
    /// trivially; `∘₀⁰` grafts whichever factor has its raised leg at `0`
    /// into the input of the other at that leg.
    fn compose_i0(&self, cp: &Profile, x: &O::Elem, i: usize, dp: &Profile, y: &O::Elem) -> Result<O::Elem> {
        let cq = cp.act(&Permutation::tau_power(cp.len(), i as i64))?;
        self.compose00(&cq, x, dp, y)
    }
}
