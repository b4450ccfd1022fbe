//! Degeneracy operators in Eilenberg-Zilber normal form.

use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// Largest simplicial dimension the bitset encoding can address.
pub const MAX_DIM: usize = 63;

/// A composite `s_{i_1} ... s_{i_r}` with `i_1 > ... > i_r`.
///
/// Bit `j` is set exactly when `s_j` occurs. Seen as a monotone surjection
/// `[n] -> [n - r]`, the set bits are the positions `j` sent to the same
/// vertex as `j + 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegOp(u64);

impl DegOp {
    pub const IDENTITY: DegOp = DegOp(0);

    /// Builds the operator from a strictly decreasing index list.
    pub fn from_indices(indices: &[usize]) -> Result<Self, Error> {
        let mut bits = 0u64;
        for w in indices.windows(2) {
            if w[0] <= w[1] {
                return Err(Error::NotNormalForm);
            }
        }
        for &i in indices {
            if i >= MAX_DIM {
                return Err(Error::DimensionTooLarge(i));
            }
            bits |= 1 << i;
        }
        Ok(DegOp(bits))
    }

    /// Renormalises an arbitrary composite `s_{j_1} ... s_{j_r}` (applied
    /// right to left) using `s_i s_j = s_{j+1} s_i` for `i <= j`.
    pub fn from_word(word: &[usize]) -> Result<Self, Error> {
        let mut op = DegOp::IDENTITY;
        for &j in word.iter().rev() {
            if j >= MAX_DIM {
                return Err(Error::DimensionTooLarge(j));
            }
            op = op.then(DegOp(1 << j));
        }
        Ok(op)
    }

    pub const fn from_bits(bits: u64) -> Self {
        DegOp(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, j: usize) -> bool {
        j < 64 && self.0 & (1 << j) != 0
    }

    /// Indices in decreasing order, matching the written normal form.
    pub fn indices(self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..64).filter(|&j| self.contains(j)).collect();
        v.reverse();
        v
    }

    pub const fn intersect(self, other: DegOp) -> DegOp {
        DegOp(self.0 & other.0)
    }

    pub const fn is_disjoint(self, other: DegOp) -> bool {
        self.0 & other.0 == 0
    }

    /// The surjection `[n] -> [n - len]` as a vertex table, `n` the source
    /// dimension.
    pub fn surjection(self, n: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(n + 1);
        let mut v = 0;
        for k in 0..=n {
            out.push(v);
            if k < n && !self.contains(k) {
                v += 1;
            }
        }
        out
    }

    /// Inverse of [`DegOp::surjection`]; `map` must be monotone and hit every
    /// value from 0 to its maximum.
    pub fn from_surjection(map: &[usize]) -> Self {
        let mut bits = 0u64;
        for j in 0..map.len().saturating_sub(1) {
            if map[j] == map[j + 1] {
                bits |= 1 << j;
            }
        }
        DegOp(bits)
    }

    /// The normal form of `outer ∘ self`: first `self`, then `outer`, i.e.
    /// `s_outer s_self x`. The surjection of the result is
    /// `eta_self ∘ eta_outer`.
    pub fn then(self, outer: DegOp) -> DegOp {
        // j is a repeat of the composite iff j is a repeat of eta_outer, or
        // eta_outer(j) (which then equals j - rank) is a repeat of eta_self.
        let mut bits = outer.0;
        let mut rank = 0;
        let top = 64 - outer.0.leading_zeros() as usize;
        let reach = top.max(64 - self.0.leading_zeros() as usize + outer.len());
        for j in 0..reach.min(MAX_DIM) {
            if outer.contains(j) {
                rank += 1;
            } else if self.contains(j - rank) {
                bits |= 1 << j;
            }
        }
        DegOp(bits)
    }

    /// For `common ⊆ self`, the operator `t` with `s_self = s_common s_t`,
    /// i.e. `self == t.then(common)`.
    pub fn factor_out(self, common: DegOp) -> DegOp {
        debug_assert_eq!(self.0 & common.0, common.0);
        let mut bits = 0u64;
        let mut rank = 0;
        for j in 0..64 {
            if common.contains(j) {
                rank += 1;
            } else if self.contains(j) {
                bits |= 1 << (j - rank);
            }
        }
        DegOp(bits)
    }
}

impl fmt::Debug for DegOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{:?}", self.indices())
    }
}

/// Monotone maps `[k] -> [n]` given as vertex tables.
pub(crate) fn is_monotone(map: &[usize]) -> bool {
    map.windows(2).all(|w| w[0] <= w[1])
}

/// Iterates the subsets of `0..n` of size `r` as bitmasks, in increasing
/// numeric order.
pub(crate) fn subsets(n: usize, r: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cur = if r == 0 {
        Some(0u64)
    } else if r > n {
        None
    } else {
        Some((1u64 << r) - 1)
    };
    core::iter::from_fn(move || {
        let v = cur?;
        cur = if v == 0 {
            None
        } else {
            // Gosper's hack
            let c = v & v.wrapping_neg();
            let r2 = v + c;
            let next = (((r2 ^ v) >> 2) / c) | r2;
            if next > limit || next < v {
                None
            } else {
                Some(next)
            }
        };
        Some(v)
    })
}
