use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation in one-line notation: `images[t]` is the image of `t`.
///
/// Cyclic operads use permutations of `[0,n]` (the group `Σₙ⁺`); operads use
/// permutations of their inputs, stored zero-based. Products follow function
/// composition, `(σσ′)(t) = σ(σ′(t))`, so that acting on the right,
/// `(c̲σ)σ′ = c̲(σσ′)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(images));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (0..len).collect(),
        }
    }

    /// The `j`-cycle `τⱼ(t) = t + 1 mod j` on `[0, j-1]`.
    pub fn tau(j: usize) -> Result<Self> {
        if j < 1 {
            return Err(Error::IndexOutOfRange { index: 0, max: -1 });
        }
        Ok(Self::tau_power(j, 1))
    }

    /// `τ_len^k` for any integer `k`, reduced modulo `len`.
    pub fn tau_power(len: usize, k: i64) -> Self {
        if len == 0 {
            return Permutation { images: Vec::new() };
        }
        let shift = k.rem_euclid(len as i64) as usize;
        Permutation {
            images: (0..len).map(|t| (t + shift) % len).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, t: usize) -> usize {
        self.images[t]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(t, &x)| t == x)
    }

    /// The product `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&t| self.images[t]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (t, &x) in self.images.iter().enumerate() {
            images[x] = t;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.len());
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// If this permutation is a power of the long cycle, its exponent in
    /// `[0, len)`.
    pub fn tau_exponent(&self) -> Option<usize> {
        if self.is_empty() {
            return Some(0);
        }
        let k = self.images[0];
        (*self == Self::tau_power(self.len(), k as i64)).then_some(k)
    }

    /// Right action on a list: entry `t` of the result is `list[σ(t)]`.
    pub fn act<T: Clone>(&self, list: &[T]) -> Result<Vec<T>> {
        if list.len() != self.len() {
            return Err(Error::ArityMismatch {
                expected: self.len(),
                found: list.len(),
            });
        }
        Ok(self.images.iter().map(|&t| list[t].clone()).collect())
    }

    /// `σₖ = τ^{-σ(k)} σ τ^k`, that is `σₖ(r) ≡ σ(k+r) − σ(k) mod n+1`.
    /// It fixes `0`.
    pub fn conjugate_sigma_k(&self, k: usize) -> Permutation {
        let len = self.len();
        let base = self.images[k];
        Permutation {
            images: (0..len)
                .map(|r| (self.images[(k + r) % len] + len - base) % len)
                .collect(),
        }
    }

    /// Extends a permutation of `[0, n-1]`, read as a permutation of `[1, n]`,
    /// to `[0, n]` fixing `0`.
    pub fn extend_fixing_zero(&self) -> Permutation {
        Permutation {
            images: std::iter::once(0)
                .chain(self.images.iter().map(|&x| x + 1))
                .collect(),
        }
    }

    /// Inverse of [`Self::extend_fixing_zero`].
    pub fn drop_fixed_zero(&self) -> Option<Permutation> {
        if self.images.first() != Some(&0) {
            return None;
        }
        Some(Permutation {
            images: self.images[1..].iter().map(|&x| x - 1).collect(),
        })
    }

    /// All permutations of the given length, in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = Permutation> {
        (0..len)
            .permutations(len)
            .map(|images| Permutation { images })
    }

    /// Adjacent transpositions and the long cycle: a generating set.
    pub fn generators(len: usize) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = (0..len.saturating_sub(1))
            .map(|t| {
                let mut images: Vec<usize> = (0..len).collect();
                images.swap(t, t + 1);
                Permutation { images }
            })
            .collect();
        if len > 0 {
            out.push(Self::tau_power(len, 1));
        }
        out.sort();
        out.dedup();
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tau_three() {
        assert_eq!(Permutation::tau(3).unwrap().images(), &[1, 2, 0]);
        assert!(Permutation::tau(1).unwrap().is_identity());
        assert!(Permutation::tau(0).is_err());
        assert!(Permutation::tau(4).unwrap().pow(4).is_identity());
    }

    #[test]
    fn act_by_tau() {
        let tau = Permutation::tau(3).unwrap();
        assert_eq!(tau.act(&['a', 'b', 'c']).unwrap(), vec!['b', 'c', 'a']);
        assert!(tau.act(&['a']).is_err());
    }

    #[test]
    fn sigma_k_examples() {
        let tau = Permutation::tau(3).unwrap();
        assert!(tau.conjugate_sigma_k(1).is_identity());
        for sigma in Permutation::all(4) {
            for k in 0..4 {
                assert_eq!(sigma.conjugate_sigma_k(k).apply(0), 0);
            }
        }
        assert!(Permutation::identity(4).conjugate_sigma_k(2).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
    }

    #[test]
    fn tau_exponents() {
        assert_eq!(Permutation::tau_power(5, -2).tau_exponent(), Some(3));
        assert_eq!(Permutation::new(vec![1, 0, 2]).unwrap().tau_exponent(), None);
    }

    fn perm(len: usize) -> impl Strategy<Value = Permutation> {
        Just((0..len).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::new(images).unwrap())
    }

    proptest! {
        #[test]
        fn right_action_law(len in 1usize..=5, seed in any::<u64>()) {
            let all: Vec<_> = Permutation::all(len).collect();
            let s = &all[(seed as usize) % all.len()];
            let t = &all[(seed as usize / 7) % all.len()];
            let list: Vec<usize> = (0..len).map(|x| x * 10).collect();
            let lhs = t.act(&s.act(&list).unwrap()).unwrap();
            let rhs = s.compose(t).act(&list).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(Permutation::identity(len).act(&list).unwrap(), list);
        }

        #[test]
        fn inverse_cancels(p in (1usize..7).prop_flat_map(perm)) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn sigma_k_formula(p in (1usize..7).prop_flat_map(perm), k in 0usize..7) {
            let len = p.len();
            let k = k % len;
            // τ^{-σ(k)} σ τ^k
            let conj = Permutation::tau_power(len, -(p.apply(k) as i64))
                .compose(&p)
                .compose(&Permutation::tau_power(len, k as i64));
            prop_assert_eq!(p.conjugate_sigma_k(k), conj);
        }
    }
}
