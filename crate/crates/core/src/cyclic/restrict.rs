use rand::RngCore;

use super::CyclicOperad;
use crate::collection::{Collection, Symmetry};
use crate::error::{Error, Result};
use crate::profile::{Color, InvolutiveSet, Permutation, Profile};

/// The non-symmetric cyclic operad underlying `P`: the same entries and
/// compositions, with only the rotations acting.
#[derive(Clone, Debug)]
pub struct Rotations<P> {
    pub inner: P,
}

impl<P: CyclicOperad> Rotations<P> {
    pub fn new(inner: P) -> Self {
        Rotations { inner }
    }
}

impl<P: CyclicOperad> Collection for Rotations<P> {
    type Elem = P::Elem;

    fn colors(&self) -> &InvolutiveSet {
        self.inner.colors()
    }

    fn symmetry(&self) -> Symmetry {
        Symmetry::Cyclic
    }

    fn max_norm(&self) -> Option<usize> {
        self.inner.max_norm()
    }

    fn entry_size(&self, p: &Profile) -> u128 {
        self.inner.entry_size(p)
    }

    fn elements(&self, p: &Profile) -> Result<Vec<P::Elem>> {
        self.inner.elements(p)
    }

    fn sample(&self, p: &Profile, rng: &mut dyn RngCore) -> Option<P::Elem> {
        self.inner.sample(p, rng)
    }

    fn contains(&self, p: &Profile, x: &P::Elem) -> bool {
        self.inner.contains(p, x)
    }

    fn parse_element(&self, p: &Profile, text: &str) -> Result<P::Elem> {
        self.inner.parse_element(p, text)
    }

    fn act(&self, p: &Profile, sigma: &Permutation, x: &P::Elem) -> Result<P::Elem> {
        if sigma.tau_exponent().is_none() {
            return Err(Error::Invalid(format!("{sigma} is not a rotation")));
        }
        self.inner.act(p, sigma, x)
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        self.inner.support(bound)
    }
}

impl<P: CyclicOperad> CyclicOperad for Rotations<P> {
    fn has_identities(&self) -> bool {
        self.inner.has_identities()
    }

    fn identity(&self, c: &Color) -> Result<P::Elem> {
        self.inner.identity(c)
    }

    fn compose_i0(&self, cp: &Profile, x: &P::Elem, i: usize, dp: &Profile, y: &P::Elem) -> Result<P::Elem> {
        self.inner.compose_i0(cp, x, i, dp, y)
    }
}
