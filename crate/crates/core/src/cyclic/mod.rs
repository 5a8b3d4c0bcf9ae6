//! Colored cyclic operads: entries `P(c₀, …, cₙ)` with every leg on an equal
//! footing, compositions `∘ᵢʲ` along a leg of each factor, and identities
//! `id_c ∈ P(c†, c)`.

mod axioms;
mod morphism;
mod positive;
mod restrict;
mod table;
mod validate;

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::profile::{Color, Permutation, Profile};

pub use axioms::{for_each_instance, Arg, Instance};
pub use morphism::{compare_morphisms, validate_cyclic_morphism};
pub use positive::{is_positive, positivize, Pos, Positivized};
pub use restrict::Rotations;
pub use table::TableCyclicOperad;
pub use validate::{validate, validate_cyclic, validate_markl, validate_nonsigma, Variant};

/// A colored cyclic operad.
///
/// Implementations provide the one-sided compositions `∘ᵢ⁰`; every `∘ᵢʲ`
/// is then `x ∘ᵢ⁰ (τʲ)* y`, see [`compose`].
pub trait CyclicOperad: Collection {
    /// Whether identities exist (`false` for the non-unital variant).
    fn has_identities(&self) -> bool {
        true
    }

    /// `id_c ∈ P(c†, c)`.
    fn identity(&self, c: &Color) -> Result<Self::Elem>;

    /// `x ∘ᵢ⁰ y` for `x ∈ P(c̲)`, `y ∈ P(d̲)` with `cᵢ = d₀†`. Callers go
    /// through [`compose`], which checks indices, colors and bounds first.
    fn compose_i0(
        &self,
        cp: &Profile,
        x: &Self::Elem,
        i: usize,
        dp: &Profile,
        y: &Self::Elem,
    ) -> Result<Self::Elem>;
}

impl<P: CyclicOperad + ?Sized> CyclicOperad for &P {
    fn has_identities(&self) -> bool {
        (**self).has_identities()
    }

    fn identity(&self, c: &Color) -> Result<Self::Elem> {
        (**self).identity(c)
    }

    fn compose_i0(&self, cp: &Profile, x: &Self::Elem, i: usize, dp: &Profile, y: &Self::Elem) -> Result<Self::Elem> {
        (**self).compose_i0(cp, x, i, dp, y)
    }
}

/// `(c†, c)`, the profile of `id_c`.
pub fn identity_profile<P: CyclicOperad + ?Sized>(p: &P, c: &Color) -> Result<Profile> {
    Ok(Profile(vec![p.colors().dagger(c)?, c.clone()]))
}

/// Checks that leg `i` of `cp` can be grafted to leg `j` of `dp` and returns
/// the composite profile `c̲ ∘ᵢʲ d̲`.
pub fn graft<P: CyclicOperad + ?Sized>(p: &P, cp: &Profile, i: usize, dp: &Profile, j: usize) -> Result<Profile> {
    let ci = cp.get(i)?;
    let dj = dp.get(j)?;
    if *ci != p.colors().dagger(dj)? {
        return Err(Error::ColorMismatch {
            left: ci.clone(),
            right: dj.clone(),
        });
    }
    let out = cp.compose(i, j, dp)?;
    if let Some(max) = p.max_norm() {
        if out.norm() > max as isize {
            return Err(Error::BeyondBound { profile: out, bound: max });
        }
    }
    Ok(out)
}

/// `σ* x`, returned with its profile `c̲σ`.
pub fn act<P: CyclicOperad + ?Sized>(p: &P, cp: &Profile, sigma: &Permutation, x: &P::Elem) -> Result<(Profile, P::Elem)> {
    if !p.symmetry().admits(sigma) {
        return Err(Error::Invalid(format!("{sigma} does not act: only rotations do")));
    }
    let q = cp.act(sigma)?;
    Ok((q, p.act(cp, sigma, x)?))
}

/// `(τ^k)* x` for any integer `k`.
pub fn rotate<P: CyclicOperad + ?Sized>(p: &P, cp: &Profile, k: i64, x: &P::Elem) -> Result<(Profile, P::Elem)> {
    act(p, cp, &Permutation::tau_power(cp.len(), k), x)
}

/// `x ∘ᵢʲ y = x ∘ᵢ⁰ (τʲ)* y`, returned with its profile.
pub fn compose<P: CyclicOperad + ?Sized>(
    p: &P,
    cp: &Profile,
    x: &P::Elem,
    i: usize,
    j: usize,
    dp: &Profile,
    y: &P::Elem,
) -> Result<(Profile, P::Elem)> {
    let out = graft(p, cp, i, dp, j)?;
    let (dq, y) = rotate(p, dp, j as i64, y)?;
    let z = p.compose_i0(cp, x, i, &dq, &y)?;
    Ok((out, z))
}

/// `id_c`, returned with its profile.
pub fn identity<P: CyclicOperad + ?Sized>(p: &P, c: &Color) -> Result<(Profile, P::Elem)> {
    if !p.has_identities() {
        return Err(Error::MissingIdentity(c.clone()));
    }
    Ok((identity_profile(p, c)?, p.identity(c)?))
}
