//! Kan's loop group `𝔾X`, the bar constructions `W̄G` and `WG`, and the
//! path fibration `ℙX -> X`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand_core::RngCore;

use super::lazy::{pick, LazySSet, SimplicialGroup};
use super::word::FreeWord;
use crate::sset::{FinSSet, Simplex};
use crate::{Error, Result};

/// `s` lies in the image of `s_j`.
pub(crate) fn in_image_of(s: Simplex, j: usize) -> bool {
    let n = s.dim();
    if j >= n {
        return false;
    }
    let eta = s.deg().surjection(n);
    eta[j] == eta[j + 1]
}

/// An element of `𝔾X_n`: a word in the `(n+1)`-simplices of `X` that are
/// not `s_0`-degenerate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LoopWord {
    pub dim: usize,
    pub word: FreeWord<Simplex>,
}

/// `𝔾X` for a reduced `X`.
#[derive(Clone, Debug)]
pub struct LoopGroup {
    x: Arc<FinSSet>,
    max_len: usize,
}

impl LoopGroup {
    pub fn base(&self) -> &Arc<FinSSet> {
        &self.x
    }

    /// `ȳ`: the generator for an `(n+1)`-simplex `y`, or the unit when `y`
    /// is `s_0`-degenerate.
    pub fn bar(&self, y: Simplex) -> LoopWord {
        let dim = y.dim() - 1;
        let word = if in_image_of(y, 0) { FreeWord::unit() } else { FreeWord::generator(y) };
        LoopWord { dim, word }
    }

    /// The generators of `𝔾X_n`.
    pub fn generators(&self, n: usize) -> Vec<Simplex> {
        self.x.simplices(n + 1).into_iter().filter(|&y| !in_image_of(y, 0)).collect()
    }

    fn extend(&self, w: &LoopWord, dim: usize, f: impl Fn(Simplex) -> FreeWord<Simplex>) -> LoopWord {
        LoopWord {
            dim,
            word: w.word.substitute(|&y| f(y)),
        }
    }

    /// Bound on the length of sampled words.
    pub fn with_sample_length(mut self, max_len: usize) -> Self {
        self.max_len = max_len;
        self
    }
}

pub fn loop_group(x: &Arc<FinSSet>) -> Result<LoopGroup> {
    if !x.is_reduced() {
        return Err(Error::NotReduced);
    }
    Ok(LoopGroup { x: x.clone(), max_len: 4 })
}

impl LazySSet for LoopGroup {
    type Simplex = LoopWord;

    fn dim(&self, s: &LoopWord) -> usize {
        s.dim
    }

    fn face(&self, s: &LoopWord, i: usize) -> LoopWord {
        let x = &self.x;
        self.extend(s, s.dim - 1, |y| {
            if i == 0 {
                self.bar(x.face(y, 1)).word.mul(&self.bar(x.face(y, 0)).word.inverse())
            } else {
                self.bar(x.face(y, i + 1)).word
            }
        })
    }

    fn degeneracy(&self, s: &LoopWord, j: usize) -> LoopWord {
        self.extend(s, s.dim + 1, |y| self.bar(y.degeneracy(j + 1)).word)
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> LoopWord {
        let gens = self.generators(n);
        let mut word = FreeWord::unit();
        if !gens.is_empty() {
            for _ in 0..pick(rng, self.max_len + 1) {
                let g = gens[pick(rng, gens.len())];
                let l = FreeWord::generator(g);
                word = word.mul(&if pick(rng, 2) == 0 { l } else { l.inverse() });
            }
        }
        LoopWord { dim: n, word }
    }
}

impl SimplicialGroup for LoopGroup {
    fn unit(&self, n: usize) -> LoopWord {
        LoopWord {
            dim: n,
            word: FreeWord::unit(),
        }
    }

    fn mul(&self, a: &LoopWord, b: &LoopWord) -> LoopWord {
        debug_assert_eq!(a.dim, b.dim);
        LoopWord {
            dim: a.dim,
            word: a.word.mul(&b.word),
        }
    }

    fn inv(&self, a: &LoopWord) -> LoopWord {
        LoopWord {
            dim: a.dim,
            word: a.word.inverse(),
        }
    }
}

/// `W̄G`: an `n`-simplex is `[g_{n-1}, ..., g_0]` with `g_k ∈ G_k`.
#[derive(Clone, Debug)]
pub struct Wbar<G>(pub G);

/// `WG`: an `n`-simplex is `[g_n, ..., g_0]` with `g_k ∈ G_k`.
#[derive(Clone, Debug)]
pub struct WTotal<G>(pub G);

pub fn wbar<G: SimplicialGroup + Clone>(g: &G) -> Wbar<G> {
    Wbar(g.clone())
}

pub fn w_total<G: SimplicialGroup + Clone>(g: &G) -> WTotal<G> {
    WTotal(g.clone())
}

/// Faces of the tuples shared by `W̄G` and `WG`: `b[k]` has dimension
/// `top - k`, and `d_i` for `i <= top` applies `d_{i-k}` before position `i`,
/// multiplies `d_0 b[i]` into `b[i+1]`, and shifts the rest.
fn bar_face<G: SimplicialGroup>(g: &G, b: &[G::Simplex], i: usize) -> Vec<G::Simplex> {
    let len = b.len();
    let mut out = Vec::with_capacity(len.saturating_sub(1));
    for (k, gk) in b.iter().enumerate().take(i.min(len)) {
        out.push(g.face(gk, i - k));
    }
    if i + 1 < len {
        out.push(g.mul(&g.face(&b[i], 0), &b[i + 1]));
        out.extend(b[i + 2..].iter().cloned());
    }
    out
}

impl<G: SimplicialGroup> LazySSet for Wbar<G> {
    type Simplex = Vec<G::Simplex>;

    fn dim(&self, s: &Self::Simplex) -> usize {
        s.len()
    }

    fn face(&self, s: &Self::Simplex, i: usize) -> Self::Simplex {
        // positions are those of the total space with its first entry dropped
        if i == 0 {
            return s[1..].to_vec();
        }
        bar_face(&self.0, s, i - 1)
    }

    fn degeneracy(&self, s: &Self::Simplex, j: usize) -> Self::Simplex {
        if j == 0 {
            let mut out = alloc::vec![self.0.unit(s.len())];
            out.extend(s.iter().cloned());
            return out;
        }
        let n = s.len();
        let mut out = Vec::with_capacity(n + 1);
        for (k, gk) in s.iter().enumerate().take(j) {
            out.push(self.0.degeneracy(gk, j - 1 - k));
        }
        out.push(self.0.unit(n - j));
        out.extend(s[j..].iter().cloned());
        out
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Self::Simplex {
        (0..n).map(|k| self.0.sample(n - 1 - k, rng)).collect()
    }
}

impl<G: SimplicialGroup> LazySSet for WTotal<G> {
    type Simplex = Vec<G::Simplex>;

    fn dim(&self, s: &Self::Simplex) -> usize {
        s.len() - 1
    }

    fn face(&self, s: &Self::Simplex, i: usize) -> Self::Simplex {
        bar_face(&self.0, s, i)
    }

    fn degeneracy(&self, s: &Self::Simplex, j: usize) -> Self::Simplex {
        let n = s.len() - 1;
        let mut out = Vec::with_capacity(n + 2);
        for (k, gk) in s.iter().enumerate().take(j + 1) {
            out.push(self.0.degeneracy(gk, j - k));
        }
        out.push(self.0.unit(n - j));
        out.extend(s[j + 1..].iter().cloned());
        out
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Self::Simplex {
        (0..=n).map(|k| self.0.sample(n - k, rng)).collect()
    }
}

impl<G: SimplicialGroup> WTotal<G> {
    /// `h · [g_n, ..., g_0] = [h g_n, g_{n-1}, ..., g_0]`.
    pub fn act(&self, h: &G::Simplex, s: &[G::Simplex]) -> Vec<G::Simplex> {
        let mut out = s.to_vec();
        out[0] = self.0.mul(h, &s[0]);
        out
    }

    /// The bundle map `WG -> W̄G`.
    pub fn project(&self, s: &[G::Simplex]) -> Vec<G::Simplex> {
        s[1..].to_vec()
    }
}

/// The twisting function `τ(x) = x̄` and the unit `X -> W̄𝔾X`,
/// `x ↦ [τx, τd_0x, ..., τd_0^{n-1}x]`.
pub fn unit_map(g: &LoopGroup, x: Simplex) -> Vec<LoopWord> {
    let mut out = Vec::with_capacity(x.dim());
    let mut cur = x;
    while cur.dim() > 0 {
        out.push(g.bar(cur));
        cur = g.x.face(cur, 0);
    }
    out
}

/// A simplex of `ℙX`: a simplex `x` of `X` and the first coordinate `g` of
/// its lift to `W𝔾X`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PathSimplex {
    pub x: Simplex,
    pub g: LoopWord,
}

/// The principal `𝔾X`-bundle `ℙX -> X`, the pullback of `W𝔾X -> W̄𝔾X`
/// along the unit.
#[derive(Clone, Debug)]
pub struct PathFib {
    g: LoopGroup,
}

pub fn path_fib(x: &Arc<FinSSet>) -> Result<PathFib> {
    Ok(PathFib { g: loop_group(x)? })
}

impl PathFib {
    pub fn group(&self) -> &LoopGroup {
        &self.g
    }

    pub fn base(&self) -> &Arc<FinSSet> {
        &self.g.x
    }

    pub fn project(&self, s: &PathSimplex) -> Simplex {
        s.x
    }

    /// Left multiplication on the group coordinate.
    pub fn act(&self, h: &LoopWord, s: &PathSimplex) -> PathSimplex {
        PathSimplex {
            x: s.x,
            g: self.g.mul(h, &s.g),
        }
    }

    /// The point of `ℙX` over `x` with unit group coordinate.
    pub fn unit_over(&self, x: Simplex) -> PathSimplex {
        PathSimplex { x, g: self.g.unit(x.dim()) }
    }

    /// The full tuple in `W𝔾X`.
    pub fn to_total(&self, s: &PathSimplex) -> Vec<LoopWord> {
        let mut out = alloc::vec![s.g.clone()];
        out.extend(unit_map(&self.g, s.x));
        out
    }
}

/// `d_0` in any pullback of `W𝔾X` along the unit: the group coordinate
/// picks up `τ` of the base simplex.
pub(crate) fn twisted_face(g: &LoopGroup, x: Simplex, w: &LoopWord, i: usize) -> LoopWord {
    let d = g.face(w, i);
    if i == 0 {
        g.mul(&d, &g.bar(x))
    } else {
        d
    }
}

impl LazySSet for PathFib {
    type Simplex = PathSimplex;

    fn dim(&self, s: &PathSimplex) -> usize {
        s.x.dim()
    }

    fn face(&self, s: &PathSimplex, i: usize) -> PathSimplex {
        PathSimplex {
            x: self.g.x.face(s.x, i),
            g: twisted_face(&self.g, s.x, &s.g, i),
        }
    }

    fn degeneracy(&self, s: &PathSimplex, j: usize) -> PathSimplex {
        PathSimplex {
            x: s.x.degeneracy(j),
            g: self.g.degeneracy(&s.g, j),
        }
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> PathSimplex {
        let xs = self.g.x.simplices(n);
        PathSimplex {
            x: xs[pick(rng, xs.len())],
            g: self.g.sample(n, rng),
        }
    }
}
