use std::collections::BTreeSet;

use rand::RngCore;

use crate::cyclic::{self, CyclicOperad};
use crate::error::{Error, Result};
use crate::operad::{check_graft, Operad};
use crate::profile::{BiProfile, Color, InvolutiveSet, Permutation, Profile};

/// The underlying operad of a cyclic operad:
/// `FP(c₁, …, cₙ; c₀) = P(c₀†, c₁, …, cₙ)` with `∘ᵢ = ∘ᵢ⁰` and `Σₙ` acting
/// through the permutations of `[0, n]` that fix `0`.
#[derive(Clone, Debug)]
pub struct Forget<P> {
    pub inner: P,
    colors: BTreeSet<Color>,
}

impl<P: CyclicOperad> Forget<P> {
    pub fn new(inner: P) -> Self {
        let colors = inner.colors().underlying();
        Forget { inner, colors }
    }
}

/// `(c₀†, c₁, …, cₙ)` for `(c₁, …, cₙ; c₀)`.
pub fn cyclic_profile(colors: &InvolutiveSet, bp: &BiProfile) -> Result<Profile> {
    let mut out = Vec::with_capacity(bp.arity() + 1);
    out.push(colors.dagger(&bp.output)?);
    out.extend(bp.inputs.iter().cloned());
    Ok(Profile(out))
}

/// Inverse of [`cyclic_profile`]; `None` for the empty profile.
pub fn operadic_profile(colors: &InvolutiveSet, p: &Profile) -> Result<Option<BiProfile>> {
    let Some((first, rest)) = p.colors().split_first() else {
        return Ok(None);
    };
    Ok(Some(BiProfile::new(rest.to_vec(), colors.dagger(first)?)))
}

impl<P: CyclicOperad> Forget<P> {
    fn profile(&self, bp: &BiProfile) -> Result<Profile> {
        cyclic_profile(self.inner.colors(), bp)
    }
}

impl<P: CyclicOperad> Operad for Forget<P> {
    type Elem = P::Elem;

    fn colors(&self) -> &BTreeSet<Color> {
        &self.colors
    }

    fn max_arity(&self) -> Option<usize> {
        self.inner.max_norm()
    }

    fn entry_size(&self, bp: &BiProfile) -> u128 {
        self.profile(bp).map_or(0, |p| self.inner.entry_size(&p))
    }

    fn elements(&self, bp: &BiProfile) -> Result<Vec<P::Elem>> {
        self.inner.elements(&self.profile(bp)?)
    }

    fn sample(&self, bp: &BiProfile, rng: &mut dyn RngCore) -> Option<P::Elem> {
        self.inner.sample(&self.profile(bp).ok()?, rng)
    }

    fn contains(&self, bp: &BiProfile, x: &P::Elem) -> bool {
        self.profile(bp).is_ok_and(|p| self.inner.contains(&p, x))
    }

    fn parse_element(&self, bp: &BiProfile, text: &str) -> Result<P::Elem> {
        self.inner.parse_element(&self.profile(bp)?, text)
    }

    fn act(&self, bp: &BiProfile, sigma: &Permutation, x: &P::Elem) -> Result<P::Elem> {
        if sigma.len() != bp.arity() {
            return Err(Error::ArityMismatch {
                expected: bp.arity(),
                found: sigma.len(),
            });
        }
        self.inner.act(&self.profile(bp)?, &sigma.extend_fixing_zero(), x)
    }

    fn identity(&self, c: &Color) -> Result<P::Elem> {
        cyclic::identity(&self.inner, c).map(|(_, x)| x)
    }

    fn compose(&self, bx: &BiProfile, x: &P::Elem, i: usize, by: &BiProfile, y: &P::Elem) -> Result<P::Elem> {
        check_graft(bx, i, by)?;
        let (_, z) = cyclic::compose(&self.inner, &self.profile(bx)?, x, i, 0, &self.profile(by)?, y)?;
        Ok(z)
    }

    fn support(&self, bound: usize) -> Vec<BiProfile> {
        let mut out: Vec<BiProfile> = self
            .inner
            .support(bound)
            .iter()
            .filter_map(|p| operadic_profile(self.inner.colors(), p).ok().flatten())
            .collect();
        out.sort();
        out
    }
}
