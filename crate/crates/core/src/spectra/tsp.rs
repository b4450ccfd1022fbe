//! The monad `T` on sequences of retractive spaces whose algebras are
//! sequential spectra: `T(Z)_n = ∨_{i<=n} Σ^{n-i}_X Z_i`.

use alloc::vec::Vec;

use super::seq::SeqSpec;
use super::tower::SuspTower;
use crate::retractive::{RetMap, RetSpace, Wedge, WedgePoint};
use crate::sset::Simplex;
use crate::{Error, Result};

/// `T(Z)` for a sequence `Z_0, .., Z_N`.
#[derive(Clone, Debug)]
pub struct Tsp {
    seq: Vec<RetSpace>,
    towers: Vec<SuspTower>,
    levels: Vec<Wedge>,
}

/// A simplex of `T(Z)_n` off the section: summand `i`, base simplex,
/// `n - i` circle coordinates and the point of `Z_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TspPoint {
    pub summand: usize,
    pub x: Simplex,
    pub coords: Vec<Simplex>,
    pub z: Simplex,
}

impl Tsp {
    pub fn new(seq: &[RetSpace]) -> Result<Self> {
        let n = seq.len().checked_sub(1).ok_or(Error::InvalidArgument("empty sequence".into()))?;
        let base = seq[0].base().clone();
        let towers: Vec<SuspTower> = seq.iter().enumerate().map(|(i, z)| SuspTower::new(z, n - i)).collect::<Result<_>>()?;
        let levels = (0..=n)
            .map(|m| {
                let summands: Vec<RetSpace> = (0..=m).map(|i| towers[i].level(m - i).clone()).collect();
                Wedge::new(&base, &summands)
            })
            .collect::<Result<_>>()?;
        Ok(Tsp { seq: seq.to_vec(), towers, levels })
    }

    pub fn trunc(&self) -> usize {
        self.seq.len() - 1
    }

    pub fn input(&self) -> &[RetSpace] {
        &self.seq
    }

    pub fn level(&self, n: usize) -> &RetSpace {
        self.levels[n].space()
    }

    pub fn levels(&self) -> Vec<RetSpace> {
        self.levels.iter().map(|w| w.space().clone()).collect()
    }

    pub fn tower(&self, i: usize) -> &SuspTower {
        &self.towers[i]
    }

    pub fn build(&self, n: usize, p: &TspPoint) -> Result<Simplex> {
        let u = self.towers[p.summand].build(p.x, &p.coords, p.z)?;
        Ok(self.levels[n].inject(p.summand, u))
    }

    pub fn split(&self, n: usize, s: Simplex) -> Option<TspPoint> {
        match self.levels[n].split(s) {
            WedgePoint::Base(_) => None,
            WedgePoint::Summand(i, u) => self.towers[i].split(n - i, u).map(|t| TspPoint {
                summand: i,
                x: t.x,
                coords: t.coords,
                z: t.y,
            }),
        }
    }

    /// `η_n: Z_n -> T(Z)_n`, the last summand.
    pub fn eta(&self, n: usize) -> Result<RetMap> {
        self.levels[n].coprojection(n)
    }

    /// `T(f)` for maps `f_n: Z_n -> Z'_n`.
    pub fn map(&self, other: &Tsp, f: &[RetMap]) -> Result<Vec<RetMap>> {
        (0..=self.trunc())
            .map(|n| {
                let (src, tgt) = (self.level(n), other.level(n));
                RetMap::from_fn(src, tgt, |u| {
                    let s = Simplex::nondegenerate(u);
                    match self.split(n, s) {
                        None => Ok(tgt.base_simplex(src.project(s))),
                        Some(mut p) => {
                            p.z = f[p.summand].apply(p.z);
                            other.build(n, &p)
                        }
                    }
                })
            })
            .collect()
    }

    /// `μ: T(T(Z)) -> T(Z)` where `outer` is `T` applied to `self`'s levels.
    pub fn mu(&self, outer: &Tsp) -> Result<Vec<RetMap>> {
        (0..=self.trunc())
            .map(|n| {
                let (src, tgt) = (outer.level(n), self.level(n));
                RetMap::from_fn(src, tgt, |u| {
                    let s = Simplex::nondegenerate(u);
                    match outer.split(n, s) {
                        None => Ok(tgt.base_simplex(src.project(s))),
                        Some(p) => match self.split(p.summand, p.z) {
                            None => Ok(tgt.base_simplex(src.project(s))),
                            Some(q) => {
                                let mut coords = p.coords;
                                coords.extend(q.coords);
                                self.build(n, &TspPoint { summand: q.summand, x: p.x, coords, z: q.z })
                            }
                        },
                    }
                })
            })
            .collect()
    }
}

/// The algebra map `T(A)_n -> A_n` of a spectrum: iterated structure maps
/// on each summand.
pub fn algebra_map(a: &SeqSpec, t: &Tsp) -> Result<Vec<RetMap>> {
    (0..=a.trunc())
        .map(|n| {
            let (src, tgt) = (t.level(n), a.level(n));
            RetMap::from_fn(src, tgt, |u| {
                let s = Simplex::nondegenerate(u);
                match t.split(n, s) {
                    None => Ok(tgt.base_simplex(src.project(s))),
                    Some(p) => iterate_sigma(a, p.summand, p.x, &p.coords, p.z),
                }
            })
        })
        .collect()
}

/// `σ_{i+j-1}(t_1 ∧ σ(.. σ_i(t_j ∧ z)))` for `z` in `A_i`.
pub fn iterate_sigma(a: &SeqSpec, i: usize, x: Simplex, coords: &[Simplex], z: Simplex) -> Result<Simplex> {
    let mut cur = z;
    for (j, &t) in coords.iter().rev().enumerate() {
        cur = a.sigma(i + j, x, t, cur)?;
    }
    Ok(cur)
}

/// Recovers structure maps from an algebra map: `σ_{n-1}` is its
/// restriction to the summand `Σ_X A_{n-1}` of `T(A)_n`.
pub fn from_algebra(seq: &[RetSpace], t: &Tsp, alpha: &[RetMap]) -> Result<SeqSpec> {
    let towers: Vec<_> = (0..seq.len().saturating_sub(1)).map(|i| t.tower(i).stage(1).clone()).collect();
    let maps = (1..seq.len())
        .map(|n| {
            let stage = &towers[n - 1];
            RetMap::from_fn(stage.space(), &seq[n], |u| {
                let s = Simplex::nondegenerate(u);
                Ok(alpha[n].apply(t.levels[n].inject(n - 1, s)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SeqSpec::new(seq.to_vec(), towers, maps, None)
}

/// Unit and associativity of the algebra map of `a`, and the round trip
/// back to the structure maps.
pub fn tsp_algebra_check(a: &SeqSpec) -> Result<bool> {
    let t = Tsp::new(a.levels())?;
    let alpha = algebra_map(a, &t)?;
    for (n, al) in alpha.iter().enumerate() {
        if al.compose(&t.eta(n)?)? != RetMap::identity(a.level(n)) {
            return Ok(false);
        }
    }
    let tt = Tsp::new(&t.levels())?;
    let mu = t.mu(&tt)?;
    let t_alpha = tt.map(&t, &alpha)?;
    for n in 0..=a.trunc() {
        if alpha[n].compose(&t_alpha[n])?.map() != alpha[n].compose(&mu[n])?.map() {
            return Ok(false);
        }
    }
    let back = from_algebra(a.levels(), &t, &alpha)?;
    Ok((0..a.trunc()).all(|n| back.struct_map(n).map() == a.struct_map(n).map()))
}

/// Unit and associativity laws of `T` itself on a sequence.
pub fn tsp_monad_check(seq: &[RetSpace]) -> Result<bool> {
    let t = Tsp::new(seq)?;
    let tt = Tsp::new(&t.levels())?;
    let ttt = Tsp::new(&tt.levels())?;
    let mu = t.mu(&tt)?;
    let mu_t = tt.mu(&ttt)?;
    let t_mu = ttt.map(&tt, &mu)?;
    let eta_t: Vec<RetMap> = (0..=t.trunc()).map(|n| tt.eta(n)).collect::<Result<_>>()?;
    let etas: Vec<RetMap> = (0..=t.trunc()).map(|n| t.eta(n)).collect::<Result<_>>()?;
    let t_eta = t.map(&tt, &etas)?;
    for n in 0..=t.trunc() {
        let id = RetMap::identity(t.level(n));
        if mu[n].compose(&eta_t[n])? != id || mu[n].compose(&t_eta[n])?.map() != id.map() {
            return Ok(false);
        }
        if mu[n].compose(&mu_t[n])?.map() != mu[n].compose(&t_mu[n])?.map() {
            return Ok(false);
        }
    }
    Ok(true)
}
