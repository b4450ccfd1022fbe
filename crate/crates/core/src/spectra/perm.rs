//! Permutations of `{0, .., n-1}`, cosets of the standard subgroups and
//! shuffles.
//!
//! A permutation `g` acts on tuples by moving the entry in position `i` to
//! position `g(i)`, so `(g·x)_{g(i)} = x_i` and `(gh)·x = g·(h·x)`. The
//! subgroup `Σ_p × Σ_q ⊂ Σ_{p+q}` permutes the first `p` letters and the
//! last `q` letters separately.

use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || core::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        Ok(Perm(images))
    }

    /// The adjacent transposition of `i` and `i + 1` in `Σ_n`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, i + 1);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = alloc::vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    /// `self × other` in `Σ_{p+q}`.
    pub fn block_sum(&self, other: &Perm) -> Perm {
        let p = self.len();
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&i| i + p)).collect())
    }

    /// The block permutation moving the first `p` letters past the next `q`.
    pub fn block_swap(p: usize, q: usize) -> Perm {
        Perm((0..p).map(|i| i + q).chain(0..q).collect())
    }

    /// Restriction to letters `start..start + len`, which must be preserved
    /// as a block.
    pub fn restrict(&self, start: usize, len: usize) -> Perm {
        Perm(self.0[start..start + len].iter().map(|&i| i - start).collect())
    }

    pub fn act<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        let mut out = xs.to_vec();
        for (i, x) in xs.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }

    /// Indices `i_1, .., i_r` with `self = τ_{i_1} ∘ .. ∘ τ_{i_r}`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // bubble sort self^{-1}: each swap is a right multiplication
        let mut cur = self.0.clone();
        let mut word = Vec::new();
        let n = cur.len();
        for end in (1..n).rev() {
            for i in 0..end {
                if cur[i] > cur[i + 1] {
                    cur.swap(i, i + 1);
                    word.push(i);
                }
            }
        }
        word.reverse();
        word
    }

    /// All of `Σ_n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut v: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(v.clone()));
            let Some(i) = (1..n).rev().find(|&i| v[i - 1] < v[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
            v.swap(i - 1, j);
            v[i..].reverse();
        }
    }
}

/// Representatives of `Σ_n / Σ_{n-k}` (the subgroup on the first `n - k`
/// letters): the permutations increasing on those letters, ordered by the
/// images of the last `k`.
pub fn coset_reps(n: usize, k: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut tail = Vec::with_capacity(k);
    let mut used = alloc::vec![false; n];
    fn go(n: usize, k: usize, tail: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        if tail.len() == k {
            let head = (0..n).filter(|&i| !used[i]);
            out.push(Perm(head.chain(tail.iter().copied()).collect()));
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                tail.push(i);
                go(n, k, tail, used, out);
                tail.pop();
                used[i] = false;
            }
        }
    }
    go(n, k, &mut tail, &mut used, &mut out);
    out
}

/// `g = rep ∘ h` with `rep` a coset representative and `h ∈ Σ_{n-k}`.
pub fn coset_decompose(g: &Perm, k: usize) -> (Perm, Perm) {
    let n = g.len();
    let mut head: Vec<usize> = g.0[..n - k].to_vec();
    head.sort_unstable();
    let rep = Perm(head.iter().copied().chain(g.0[n - k..].iter().copied()).collect());
    let h = rep.inverse().compose(g);
    (rep, h.restrict(0, n - k))
}

/// The shuffles for the blocks `sizes`: permutations increasing on each
/// block, in lexicographic order of images.
pub fn block_shuffles(sizes: &[usize]) -> Vec<Perm> {
    let n: usize = sizes.iter().sum();
    Perm::all(n)
        .into_iter()
        .filter(|g| {
            let mut start = 0;
            sizes.iter().all(|&s| {
                let ok = g.0[start..start + s].windows(2).all(|w| w[0] < w[1]);
                start += s;
                ok
            })
        })
        .collect()
}

/// `g = χ ∘ (h_1 × .. × h_r)` with `χ` a shuffle for the blocks.
pub fn block_decompose(g: &Perm, sizes: &[usize]) -> (Perm, Vec<Perm>) {
    let mut chi = Vec::with_capacity(g.len());
    let mut start = 0;
    for &s in sizes {
        let mut block = g.0[start..start + s].to_vec();
        block.sort_unstable();
        chi.extend(block);
        start += s;
    }
    let chi = Perm(chi);
    let h = chi.inverse().compose(g);
    let mut parts = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &s in sizes {
        parts.push(h.restrict(start, s));
        start += s;
    }
    (chi, parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_multiply_back() {
        for g in Perm::all(4) {
            let mut acc = Perm::identity(4);
            for &i in &g.adjacent_word() {
                acc = acc.compose(&Perm::transposition(4, i));
            }
            assert_eq!(acc, g);
        }
    }

    #[test]
    fn action_composes() {
        let xs = ['a', 'b', 'c', 'd'];
        let all = Perm::all(4);
        for g in all.iter().step_by(5) {
            for h in all.iter().step_by(7) {
                assert_eq!(g.compose(h).act(&xs), g.act(&h.act(&xs)));
            }
        }
    }

    #[test]
    fn coset_counts() {
        assert_eq!(coset_reps(4, 2).len(), 12);
        assert_eq!(coset_reps(3, 0).len(), 1);
        for g in Perm::all(4) {
            let (rep, h) = coset_decompose(&g, 1);
            assert!(coset_reps(4, 1).contains(&rep));
            assert_eq!(rep.compose(&h.block_sum(&Perm::identity(1))), g);
        }
    }

    #[test]
    fn shuffles_decompose() {
        assert_eq!(block_shuffles(&[2, 2]).len(), 6);
        assert_eq!(block_shuffles(&[1, 1, 1]).len(), 6);
        for g in Perm::all(5) {
            let (chi, parts) = block_decompose(&g, &[2, 1, 2]);
            let h = parts[0].block_sum(&parts[1]).block_sum(&parts[2]);
            assert_eq!(chi.compose(&h), g);
        }
    }

    #[test]
    fn block_swap_conjugates() {
        let a = Perm::transposition(2, 0);
        let b = Perm::identity(3);
        let chi = Perm::block_swap(3, 2);
        assert_eq!(chi.compose(&b.block_sum(&a)), a.block_sum(&b).compose(&chi));
    }
}
