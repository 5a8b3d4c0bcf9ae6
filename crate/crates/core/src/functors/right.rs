use rand::RngCore;

use crate::collection::Collection;
use crate::cyclic::CyclicOperad;
use crate::element::{split_tuple, Tuple};
use crate::error::{Error, Result};
use crate::operad::Operad;
use crate::profile::{iota_upper, BiProfile, Color, InvolutiveSet, Permutation, Profile};

/// The cofree cyclic operad on an operad, over the paired colors `C^{Σ₂}`
/// with `(c, c′)† = (c′, c)`.
///
/// Writing `c = (c⁰, c¹)`, an element of `RO(c₀, …, cₙ)` is a tuple whose
/// `k`-th component lies in `O(c⁰_{k+1}, …, c⁰ₙ, c⁰₀, …, c⁰_{k−1}; c¹ₖ)`:
/// one operation for each choice of output leg.
#[derive(Clone, Debug)]
pub struct RightAdjoint<O> {
    pub inner: O,
    colors: InvolutiveSet,
}

impl<O: Operad> RightAdjoint<O> {
    pub fn new(inner: O) -> Self {
        let colors = iota_upper(inner.colors());
        RightAdjoint { inner, colors }
    }

    fn components(&self, p: &Profile) -> Result<Vec<BiProfile>> {
        (0..p.len()).map(|k| component_profile(p, k)).collect()
    }

    fn compose00(&self, cp: &Profile, x: &Tuple<O::Elem>, dp: &Profile, y: &Tuple<O::Elem>) -> Result<Tuple<O::Elem>> {
        let (n, m) = (cp.len() - 1, dp.len() - 1);
        let (x0, y0) = (component_profile(cp, 0)?, component_profile(dp, 0)?);
        let mut out = Vec::with_capacity(n + m);
        for k in 0..n + m {
            let z = if k < m {
                self.inner
                    .compose(&component_profile(dp, k + 1)?, &y.0[k + 1], m - k, &x0, &x.0[0])?
            } else {
                let kk = k - m + 1;
                self.inner
                    .compose(&component_profile(cp, kk)?, &x.0[kk], n + m - k, &y0, &y.0[0])?
            };
            out.push(z);
        }
        Ok(Tuple(out))
    }
}

fn pair(c: &Color) -> Result<(&Color, &Color)> {
    c.as_pair().ok_or_else(|| Error::UnknownColor(c.clone()))
}

/// The operadic profile of the `k`-th component of `RO(p)`.
pub fn component_profile(p: &Profile, k: usize) -> Result<BiProfile> {
    let len = p.len();
    let output = pair(p.get(k)?)?.1.clone();
    let inputs = (1..len)
        .map(|r| pair(&p.colors()[(k + r) % len]).map(|(a, _)| a.clone()))
        .collect::<Result<_>>()?;
    Ok(BiProfile::new(inputs, output))
}

impl<O: Operad> Collection for RightAdjoint<O> {
    type Elem = Tuple<O::Elem>;

    fn colors(&self) -> &InvolutiveSet {
        &self.colors
    }

    fn max_norm(&self) -> Option<usize> {
        self.inner.max_arity()
    }

    fn entry_size(&self, p: &Profile) -> u128 {
        match self.components(p) {
            Ok(bps) => bps
                .iter()
                .map(|bp| self.inner.entry_size(bp))
                .fold(1u128, |acc, s| acc.saturating_mul(s)),
            Err(_) => 0,
        }
    }

    fn elements(&self, p: &Profile) -> Result<Vec<Self::Elem>> {
        let mut out = vec![Vec::new()];
        for bp in self.components(p)? {
            let elems = self.inner.elements(&bp)?;
            let mut next = Vec::with_capacity(out.len() * elems.len());
            for prefix in &out {
                for e in &elems {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    next.push(v);
                }
            }
            out = next;
        }
        Ok(out.into_iter().map(Tuple).collect())
    }

    fn sample(&self, p: &Profile, rng: &mut dyn RngCore) -> Option<Self::Elem> {
        let bps = self.components(p).ok()?;
        bps.iter()
            .map(|bp| self.inner.sample(bp, rng))
            .collect::<Option<Vec<_>>>()
            .map(Tuple)
    }

    fn contains(&self, p: &Profile, x: &Self::Elem) -> bool {
        match self.components(p) {
            Ok(bps) => bps.len() == x.0.len() && bps.iter().zip(&x.0).all(|(bp, e)| self.inner.contains(bp, e)),
            Err(_) => false,
        }
    }

    fn parse_element(&self, p: &Profile, text: &str) -> Result<Self::Elem> {
        let parts = split_tuple(text).ok_or_else(|| Error::Invalid(format!("malformed tuple `{text}`")))?;
        let bps = self.components(p)?;
        if parts.len() != bps.len() {
            return Err(Error::ArityMismatch {
                expected: bps.len(),
                found: parts.len(),
            });
        }
        bps.iter()
            .zip(parts)
            .map(|(bp, part)| self.inner.parse_element(bp, part))
            .collect::<Result<_>>()
            .map(Tuple)
    }

    /// `π_k(σ* x) = σₖ* π_{σ(k)}(x)` with `σₖ = τ^{−σ(k)} σ τ^k`.
    fn act(&self, p: &Profile, sigma: &Permutation, x: &Self::Elem) -> Result<Self::Elem> {
        if sigma.len() != p.len() || x.0.len() != p.len() {
            return Err(Error::ArityMismatch {
                expected: p.len(),
                found: sigma.len(),
            });
        }
        let bps = self.components(p)?;
        (0..p.len())
            .map(|k| {
                let s = sigma.apply(k);
                let inner = sigma.conjugate_sigma_k(k).drop_fixed_zero().expect("σₖ fixes 0");
                self.inner.act(&bps[s], &inner, &x.0[s])
            })
            .collect::<Result<_>>()
            .map(Tuple)
    }

    fn support(&self, bound: usize) -> Vec<Profile> {
        let colors: Vec<Color> = self.colors.colors().cloned().collect();
        let mut out = Vec::new();
        for len in 0..=bound + 1 {
            for p in Profile::all_of_length(&colors, len) {
                if self.entry_size(&p) > 0 {
                    out.push(p);
                }
            }
        }
        out
    }
}

impl<O: Operad> CyclicOperad for RightAdjoint<O> {
    fn identity(&self, c: &Color) -> Result<Self::Elem> {
        let (a, b) = pair(c)?;
        Ok(Tuple(vec![self.inner.identity(a)?, self.inner.identity(b)?]))
    }

    fn compose_i0(&self, cp: &Profile, x: &Self::Elem, i: usize, dp: &Profile, y: &Self::Elem) -> Result<Self::Elem> {
        let tau = Permutation::tau_power(cp.len(), i as i64);
        let cq = cp.act(&tau)?;
        let xr = self.act(cp, &tau, x)?;
        let z = self.compose00(&cq, &xr, dp, y)?;
        let q = cq.compose(0, 0, dp)?;
        self.act(&q, &Permutation::tau_power(q.len(), -(i as i64)), &z)
    }
}
