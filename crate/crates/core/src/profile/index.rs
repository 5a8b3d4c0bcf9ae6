//! Punctured-interval index maps used to place the legs of two grafted
//! profiles, and the permutation they induce on a composite.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::profile::Permutation;

/// An injective map defined on an explicit finite domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMap {
    map: BTreeMap<usize, usize>,
}

impl IndexMap {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        IndexMap {
            map: pairs.into_iter().collect(),
        }
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        self.map.get(&x).copied()
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.map.keys().copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().map(|(&x, &y)| (x, y))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut images: Vec<_> = self.map.values().collect();
        images.sort();
        images.windows(2).all(|w| w[0] != w[1])
    }

    pub fn preimage(&self, y: usize) -> Option<usize> {
        self.map.iter().find(|(_, &v)| v == y).map(|(&k, _)| k)
    }

    /// `self ∘ σ`, defined where `σ(x)` lies in the domain of `self`.
    pub fn precompose(&self, sigma: &Permutation) -> IndexMap {
        IndexMap {
            map: (0..sigma.len())
                .filter_map(|x| self.get(sigma.apply(x)).map(|y| (x, y)))
                .collect(),
        }
    }

    /// `σ ∘ self`.
    pub fn postcompose(&self, sigma: &Permutation) -> IndexMap {
        IndexMap {
            map: self.pairs().map(|(x, y)| (x, sigma.apply(y))).collect(),
        }
    }

    /// Whether `self ⨿ other` is a bijection onto `[0, size)`.
    pub fn union_is_bijection_onto(&self, other: &IndexMap, size: usize) -> bool {
        let mut hit = vec![false; size];
        for (_, y) in self.pairs().chain(other.pairs()) {
            if y >= size || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        hit.into_iter().all(|h| h)
    }
}

fn check(index: usize, max: usize) -> Result<()> {
    if index > max {
        return Err(Error::IndexOutOfRange {
            index: index as i64,
            max: max as i64,
        });
    }
    Ok(())
}

/// `α_{i,m}ⁿ : [0,n]∖{i} → [0,n+m−1]`, placing the surviving legs of the
/// left factor.
pub fn alpha(i: usize, m: usize, n: usize) -> Result<IndexMap> {
    check(i, n)?;
    Ok(IndexMap::from_pairs((0..=n).filter(|&x| x != i).map(|x| {
        if x < i {
            (x, x)
        } else {
            (x, x + m - 1)
        }
    })))
}

/// `β_{j,i}^{m,n} : [0,m]∖{j} → [0,n+m−1]`, placing the surviving legs of
/// the right factor.
pub fn beta(j: usize, i: usize, m: usize, n: usize) -> Result<IndexMap> {
    check(j, m)?;
    check(i, n)?;
    Ok(IndexMap::from_pairs((0..=m).filter(|&y| y != j).map(|y| {
        if y < j {
            (y, y + m - j + i)
        } else {
            (y, y + i - j - 1)
        }
    })))
}

/// Which leg of which factor a position of a composite profile comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Left(usize),
    Right(usize),
}

/// Source of position `p` in `c̲ ∘ᵢʲ d̲`, read off the window `[i, m+i−1]`
/// occupied by the right factor.
pub fn source_by_window(n: usize, m: usize, i: usize, j: usize, p: usize) -> Result<Source> {
    let a = alpha(i, m, n)?;
    let b = beta(j, i, m, n)?;
    let inside = p >= i && p < m + i;
    let found = if inside {
        b.preimage(p).map(Source::Right)
    } else {
        a.preimage(p).map(Source::Left)
    };
    found.ok_or(Error::IndexOutOfRange {
        index: p as i64,
        max: (n + m) as i64 - 1,
    })
}

/// Source of position `p` in `c̲ ∘ᵢʲ d̲`, read off the rotated blocks
/// `τ^{m+i}[0,n−1]` and `τ^i[0,m−1]` of `[0, n+m−1]`.
pub fn source_by_rotation(n: usize, m: usize, i: usize, j: usize, p: usize) -> Result<Source> {
    let size = n + m;
    let a = alpha(i, m, n)?;
    let b = beta(j, i, m, n)?;
    let left_block = Permutation::tau_power(size, (m + i) as i64);
    let right_block = Permutation::tau_power(size, i as i64);
    let found = if (0..n).any(|t| left_block.apply(t) == p) {
        a.preimage(p).map(Source::Left)
    } else if (0..m).any(|t| right_block.apply(t) == p) {
        b.preimage(p).map(Source::Right)
    } else {
        None
    };
    found.ok_or(Error::IndexOutOfRange {
        index: p as i64,
        max: size as i64 - 1,
    })
}

/// The permutation `σ` of `[0, n+m−1]` making the equivariance square
/// commute: `σ = (α_{σ₁(i),m} ⨿ β_{σ₂(j),σ₁(i)}) (σ₁ ⨿ σ₂) (α_{i,m} ⨿ β_{j,i})⁻¹`.
pub fn equivariance_sigma(
    sigma1: &Permutation,
    sigma2: &Permutation,
    i: usize,
    j: usize,
) -> Result<Permutation> {
    let n = sigma1.len().checked_sub(1).ok_or(Error::ArityMismatch { expected: 1, found: 0 })?;
    let m = sigma2.len().checked_sub(1).ok_or(Error::ArityMismatch { expected: 1, found: 0 })?;
    let a = alpha(i, m, n)?;
    let b = beta(j, i, m, n)?;
    let i2 = sigma1.apply(i);
    let j2 = sigma2.apply(j);
    let a2 = alpha(i2, m, n)?;
    let b2 = beta(j2, i2, m, n)?;
    let mut images = vec![usize::MAX; n + m];
    for (x, p) in a.pairs() {
        images[p] = a2.get(sigma1.apply(x)).expect("σ₁ avoids σ₁(i) off i");
    }
    for (y, p) in b.pairs() {
        images[p] = b2.get(sigma2.apply(y)).expect("σ₂ avoids σ₂(j) off j");
    }
    Permutation::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_zero_is_a_shift() {
        for m in 1..5 {
            for n in 0..5 {
                for i in 0..=n {
                    let b = beta(0, i, m, n).unwrap();
                    for x in 1..=m {
                        assert_eq!(b.get(x), Some(x + i - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn worked_alpha_beta() {
        let b = beta(3, 1, 4, 3).unwrap();
        assert_eq!(
            b.pairs().collect::<Vec<_>>(),
            vec![(0, 2), (1, 3), (2, 4), (4, 1)]
        );
        let a = alpha(1, 4, 3).unwrap();
        assert_eq!(a.pairs().collect::<Vec<_>>(), vec![(0, 0), (2, 5), (3, 6)]);
        assert!(a.union_is_bijection_onto(&b, 7));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(alpha(4, 1, 3).is_err());
        assert!(beta(2, 0, 1, 3).is_err());
    }

    #[test]
    fn identity_sigma_for_identity_inputs() {
        for n in 1..4 {
            for m in 1..4 {
                let s = equivariance_sigma(
                    &Permutation::identity(n + 1),
                    &Permutation::identity(m + 1),
                    0,
                    1,
                )
                .unwrap();
                assert!(s.is_identity());
            }
        }
    }
}
