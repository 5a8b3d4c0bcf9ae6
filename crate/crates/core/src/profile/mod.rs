//! Colors, profiles, permutations of `[0,n]`, and the index bookkeeping of
//! grafting.

mod color;
mod index;
mod perm;

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

pub use color::{iota_lower, iota_upper, Color, InvolutiveSet};
#[allow(unused_imports)]
pub(crate) use color::{is_name_char, parse_color_prefix};
pub use index::{
    alpha, beta, equivariance_sigma, source_by_rotation, source_by_window, IndexMap, Source,
};
pub use perm::Permutation;

use crate::error::{Error, Result};

/// An ordered list of colors `c₀, …, cₙ`, possibly empty.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Profile(pub Vec<Color>);

impl Profile {
    pub fn new(colors: Vec<Color>) -> Self {
        Profile(colors)
    }

    pub fn empty() -> Self {
        Profile(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `‖c̲‖ = len − 1`; the empty profile has norm `−1`.
    pub fn norm(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Result<&Color> {
        self.0.get(i).ok_or(Error::IndexOutOfRange {
            index: i as i64,
            max: self.norm() as i64,
        })
    }

    /// `c̲σ = c_{σ(0)}, c_{σ(1)}, …`
    pub fn act(&self, sigma: &Permutation) -> Result<Profile> {
        sigma.act(&self.0).map(Profile)
    }

    /// `c̲ ∘ᵢʲ d̲ = c₀…c_{i−1}, d_{j+1}…d_m, d₀…d_{j−1}, c_{i+1}…cₙ`.
    ///
    /// Only the indices are checked; color compatibility is the caller's
    /// business.
    pub fn compose(&self, i: usize, j: usize, other: &Profile) -> Result<Profile> {
        self.get(i)?;
        other.get(j)?;
        let c = &self.0;
        let d = &other.0;
        let mut out = Vec::with_capacity(c.len() + d.len() - 2);
        out.extend_from_slice(&c[..i]);
        out.extend_from_slice(&d[j + 1..]);
        out.extend_from_slice(&d[..j]);
        out.extend_from_slice(&c[i + 1..]);
        Ok(Profile(out))
    }

    /// Profiles of length `len` over the given colors, in order.
    pub fn all_of_length(colors: &[Color], len: usize) -> Vec<Profile> {
        if len == 0 {
            return vec![Profile::empty()];
        }
        (0..len)
            .map(|_| colors.iter().cloned())
            .multi_cartesian_product()
            .map(Profile)
            .collect()
    }
}

impl Ord for Profile {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Profile {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Vec<Color>> for Profile {
    fn from(colors: Vec<Color>) -> Self {
        Profile(colors)
    }
}

/// An operadic biprofile `(c₁, …, cₙ; c)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiProfile {
    pub inputs: Vec<Color>,
    pub output: Color,
}

impl BiProfile {
    pub fn new(inputs: Vec<Color>, output: Color) -> Self {
        BiProfile { inputs, output }
    }

    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    /// Input `i`, counted from 1.
    pub fn input(&self, i: usize) -> Result<&Color> {
        if i == 0 || i > self.inputs.len() {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                max: self.inputs.len() as i64,
            });
        }
        Ok(&self.inputs[i - 1])
    }

    /// `(c̲ ∘ᵢ d̲; c)`: replaces input `i` (from 1) by the inputs of `other`.
    pub fn splice(&self, i: usize, other: &BiProfile) -> Result<BiProfile> {
        self.input(i)?;
        let mut inputs = Vec::with_capacity(self.arity() + other.arity() - 1);
        inputs.extend_from_slice(&self.inputs[..i - 1]);
        inputs.extend_from_slice(&other.inputs);
        inputs.extend_from_slice(&self.inputs[i..]);
        Ok(BiProfile::new(inputs, self.output.clone()))
    }

    /// Acts by a permutation of the inputs (zero-based).
    pub fn act(&self, sigma: &Permutation) -> Result<BiProfile> {
        Ok(BiProfile::new(sigma.act(&self.inputs)?, self.output.clone()))
    }
}

impl Ord for BiProfile {
    fn cmp(&self, other: &Self) -> Ordering {
        self.inputs
            .len()
            .cmp(&other.inputs.len())
            .then_with(|| self.output.cmp(&other.output))
            .then_with(|| self.inputs.cmp(&other.inputs))
    }
}

impl PartialOrd for BiProfile {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.inputs.iter().join(", "), self.output)
    }
}

impl fmt::Debug for BiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(names: &[&str]) -> Profile {
        Profile(names.iter().map(|n| Color::named(n)).collect())
    }

    #[test]
    fn norms() {
        assert_eq!(Profile::empty().norm(), -1);
        assert_eq!(p(&["a"]).norm(), 0);
    }

    #[test]
    fn tau_action_rotates() {
        let tau = Permutation::tau(3).unwrap();
        assert_eq!(p(&["a", "b", "c"]).act(&tau).unwrap(), p(&["b", "c", "a"]));
        assert!(p(&["a"]).act(&tau).is_err());
    }

    #[test]
    fn surgery_examples() {
        // c̲ ∘ᵢ¹ (cᵢ, d) = c̲
        let c = p(&["a", "b", "c"]);
        assert_eq!(c.compose(2, 1, &p(&["c", "d"])).unwrap(), c);
        // (d_j, c) ∘₁ʲ d̲ = d̲ τʲ
        let d = p(&["d0", "d1", "d2"]);
        let lhs = p(&["d2", "e"]).compose(1, 2, &d).unwrap();
        assert_eq!(lhs, p(&["d2", "d0", "d1"]));
        assert_eq!(lhs, d.act(&Permutation::tau_power(3, 2)).unwrap());
        // n = m = 0
        assert_eq!(
            p(&["c"]).compose(0, 0, &p(&["c†"])).unwrap(),
            Profile::empty()
        );
        assert!(p(&["c"]).compose(1, 0, &p(&["c"])).is_err());
    }

    #[test]
    fn surgery_matches_splice() {
        let c = p(&["r", "a", "b", "c"]);
        let d = p(&["b", "x", "y"]);
        let cyc = c.compose(2, 0, &d).unwrap();
        let bi = BiProfile::new(c.0[1..].to_vec(), c.0[0].clone())
            .splice(2, &BiProfile::new(d.0[1..].to_vec(), d.0[0].clone()))
            .unwrap();
        assert_eq!(cyc.0[1..], bi.inputs[..]);
        assert_eq!(cyc.0[0], bi.output);
    }
}
