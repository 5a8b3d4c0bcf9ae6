use std::fmt;

use rand::RngCore;

use super::CyclicOperad;
use crate::collection::{Collection, Symmetry};
use crate::error::{Error, Result};
use crate::profile::{Color, InvolutiveSet, Permutation, Profile};

/// Whether the entry at the empty profile is nonempty.
pub fn is_positive<P: CyclicOperad + ?Sized>(p: &P) -> bool {
    p.entry_size(&Profile::empty()) > 0
}

/// Element of a positivized operad: an old element, or the single new
/// element of the empty profile.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Pos<E> {
    Elem(E),
    Star,
}

impl<E: fmt::Display> fmt::Display for Pos<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pos::Elem(x) => x.fmt(f),
            Pos::Star => f.write_str("*"),
        }
    }
}

/// `P` with its empty-profile entry replaced by a point; compositions that
/// land there give that point.
#[derive(Clone, Debug)]
pub struct Positivized<P> {
    pub inner: P,
}

pub fn positivize<P: CyclicOperad>(p: P) -> Positivized<P> {
    Positivized { inner: p }
}

fn inner<E: Clone>(x: &Pos<E>) -> Result<E> {
    match x {
        Pos::Elem(e) => Ok(e.clone()),
        Pos::Star => Err(Error::Invalid("`*` only lives in the empty profile".into())),
    }
}

impl<P: CyclicOperad> Collection for Positivized<P> {
    type Elem = Pos<P::Elem>;

    fn colors(&self) -> &InvolutiveSet {
        self.inner.colors()
    }

    fn symmetry(&self) -> Symmetry {
        self.inner.symmetry()
    }

    fn max_norm(&self) -> Option<usize> {
        self.inner.max_norm()
    }

    fn entry_size(&self, p: &Profile) -> u128 {
        if p.is_empty() {
            1
        } else {
            self.inner.entry_size(p)
        }
    }

    fn elements(&self, p: &Profile) -> Result<Vec<Self::Elem>> {
        if p.is_empty() {
            return Ok(vec![Pos::Star]);
        }
        Ok(self.inner.elements(p)?.into_iter().map(Pos::Elem).collect())
    }

    fn sample(&self, p: &Profile, rng: &mut dyn RngCore) -> Option<Self::Elem> {
        if p.is_empty() {
            return Some(Pos::Star);
        }
        self.inner.sample(p, rng).map(Pos::Elem)
    }

    fn contains(&self, p: &Profile, x: &Self::Elem) -> bool {
        match x {
            Pos::Star => p.is_empty(),
            Pos::Elem(e) => !p.is_empty() && self.inner.contains(p, e),
        }
    }

    fn parse_element(&self, p: &Profile, text: &str) -> Result<Self::Elem> {
        if p.is_empty() && text == "*" {
            return Ok(Pos::Star);
        }
        self.inner.parse_element(p, text).map(Pos::Elem)
    }

    fn act(&self, p: &Profile, sigma: &Permutation, x: &Self::Elem) -> Result<Self::Elem> {
        if p.is_empty() {
            return Ok(Pos::Star);
        }
        self.inner.act(p, sigma, &inner(x)?).map(Pos::Elem)
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        let mut out = self.inner.support(bound);
        if !out.first().is_some_and(Profile::is_empty) {
            out.insert(0, Profile::empty());
        }
        out
    }
}

impl<P: CyclicOperad> CyclicOperad for Positivized<P> {
    fn has_identities(&self) -> bool {
        self.inner.has_identities()
    }

    fn identity(&self, c: &Color) -> Result<Self::Elem> {
        self.inner.identity(c).map(Pos::Elem)
    }

    fn compose_i0(&self, cp: &Profile, x: &Self::Elem, i: usize, dp: &Profile, y: &Self::Elem) -> Result<Self::Elem> {
        if cp.len() + dp.len() == 2 {
            return Ok(Pos::Star);
        }
        self.inner.compose_i0(cp, &inner(x)?, i, dp, &inner(y)?).map(Pos::Elem)
    }
}
