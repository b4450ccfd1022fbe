//! Levelwise base change of sequential spectra, global morphisms, and the
//! comparisons of free spectra with pulled-back spheres.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::seq::{free_seq, free_tower, SeqMor, SeqSpec};
use crate::global::{GlobMor, GlobObj};
use crate::retractive::{PullbackRet, PushPoint, Pushforward, RetMap, RetSpace, SmashPoint};
use crate::sset::{pushout, same, FinSSet, NdId, SMap, Simplex};
use crate::{Error, Result};

/// `f_!A`, with the pushforwards of its levels.
#[derive(Clone, Debug)]
pub struct PushSpec {
    source: SeqSpec,
    spec: SeqSpec,
    pushes: Vec<Pushforward>,
}

impl PushSpec {
    /// The spectrum that was pushed forward.
    pub fn source(&self) -> &SeqSpec {
        &self.source
    }

    pub fn spec(&self) -> &SeqSpec {
        &self.spec
    }

    pub fn push(&self, n: usize) -> &Pushforward {
        &self.pushes[n]
    }
}

/// `f^*B`, with the pullbacks of its levels.
#[derive(Clone, Debug)]
pub struct PullSpec {
    spec: SeqSpec,
    pulls: Vec<PullbackRet>,
}

impl PullSpec {
    pub fn spec(&self) -> &SeqSpec {
        &self.spec
    }

    pub fn pull(&self, n: usize) -> &PullbackRet {
        &self.pulls[n]
    }
}

/// `f_!` applied levelwise; the structure maps are `f_!σ_n` transported
/// along `f_!(S^1 ⊙ A_n) ≅ S^1 ⊙ f_!A_n`.
pub fn push_spec(f: &SMap, a: &SeqSpec) -> Result<PushSpec> {
    if a.bound().is_some() {
        return Err(Error::InvalidArgument("f_! of a truncated spectrum".into()));
    }
    let pushes: Vec<Pushforward> = a.levels().iter().map(|l| Pushforward::new(f, l)).collect::<Result<_>>()?;
    let levels = pushes.iter().map(|p| p.space().clone()).collect();
    let spec = SeqSpec::from_fn(levels, None, |n, outer, src, tgt| {
        RetMap::from_fn(src, tgt, |u| match outer.split(Simplex::nondegenerate(u)) {
            SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
            SmashPoint::Tuple(x, c) => match pushes[n].split(c[1]) {
                PushPoint::Base(_) => Ok(tgt.base_simplex(x)),
                PushPoint::Fibre(v) => {
                    let over = a.level(n).project(v);
                    Ok(pushes[n + 1].fibre(a.sigma(n, over, c[0], v)?))
                }
            },
        })
    })?;
    Ok(PushSpec {
        source: a.clone(),
        spec,
        pushes,
    })
}

/// `f_!` of a morphism `m: A -> B`.
pub fn push_mor(pa: &PushSpec, pb: &PushSpec, m: &SeqMor) -> Result<SeqMor> {
    let maps = (0..=pa.spec.trunc())
        .map(|n| push_level_map(&pa.pushes[n], &pb.pushes[n], m.level(n)))
        .collect::<Result<Vec<_>>>()?;
    SeqMor::new(&pa.spec, &pb.spec, maps)
}

fn push_level_map(p: &Pushforward, q: &Pushforward, g: &RetMap) -> Result<RetMap> {
    RetMap::from_fn(p.space(), q.space(), |u| match p.split(Simplex::nondegenerate(u)) {
        PushPoint::Base(x) => Ok(q.space().base_simplex(x)),
        PushPoint::Fibre(y) => Ok(q.fibre(g.apply(y))),
    })
}

/// `f^*` applied levelwise.
pub fn pull_spec(f: &SMap, b: &SeqSpec) -> Result<PullSpec> {
    if b.bound().is_some() {
        return Err(Error::InvalidArgument("f^* of a truncated spectrum".into()));
    }
    let pulls: Vec<PullbackRet> = b.levels().iter().map(|l| PullbackRet::new(f, l)).collect::<Result<_>>()?;
    let levels = pulls.iter().map(|p| p.space().clone()).collect();
    let spec = SeqSpec::from_fn(levels, None, |n, outer, src, tgt| {
        RetMap::from_fn(src, tgt, |u| match outer.split(Simplex::nondegenerate(u)) {
            SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
            SmashPoint::Tuple(x, c) => {
                let (_, z) = pulls[n].split(c[1]);
                let w = b.sigma(n, f.apply(x), c[0], z)?;
                pulls[n + 1].elem(x, w).ok_or(Error::NotOverBase("σ left the fibre".into()))
            }
        })
    })?;
    Ok(PullSpec { spec, pulls })
}

/// The comparison `f_!Σ^{∞-k}_X Y -> Σ^{∞-k}_{X'} f_!Y` for a free `A`
/// and `target = free_seq(k, f_!Y)`, with `push_y` the pushforward of `Y`.
pub fn push_free_compare(k: usize, pa: &PushSpec, push_y: &Pushforward, target: &SeqSpec) -> Result<SeqMor> {
    let f = push_y.base_map();
    let src_tower = free_tower(pa.source(), k)?;
    let tgt_tower = free_tower(target, k)?;
    let mut maps = Vec::new();
    for n in 0..=target.trunc() {
        let (src, tgt) = (pa.spec.level(n), target.level(n));
        let push = &pa.pushes[n];
        maps.push(RetMap::from_fn(src, tgt, |u| match push.split(Simplex::nondegenerate(u)) {
            PushPoint::Base(x) => Ok(tgt.base_simplex(x)),
            PushPoint::Fibre(v) => {
                if n < k {
                    return Ok(tgt.base_simplex(f.apply(push.source().project(v))));
                }
                match src_tower.split(n - k, v) {
                    None => Ok(tgt.base_simplex(f.apply(push.source().project(v)))),
                    Some(p) => tgt_tower.build(f.apply(p.x), &p.coords, push_y.fibre(p.y)),
                }
            }
        })?);
    }
    SeqMor::new(&pa.spec, target, maps)
}

/// A global morphism of spectra `(X, A) -> (X', B)`: a base map `f` and a
/// morphism `f_!A -> B`.
#[derive(Clone, Debug)]
pub struct GlobSeqMor {
    push: PushSpec,
    mor: SeqMor,
}

impl GlobSeqMor {
    pub fn new(f: &SMap, a: &SeqSpec, b: &SeqSpec, maps: Vec<RetMap>) -> Result<Self> {
        let push = push_spec(f, a)?;
        let mor = SeqMor::new(&push.spec, b, maps)?;
        Ok(GlobSeqMor { push, mor })
    }

    pub fn base_map(&self) -> &SMap {
        self.push.pushes[0].base_map()
    }

    pub fn mor(&self) -> &SeqMor {
        &self.mor
    }

    /// The global morphism of retractive spaces at level `n`.
    pub fn level(&self, n: usize) -> Result<GlobMor> {
        let src = GlobObj::new(self.push.source.level(n).clone());
        let tgt = GlobObj::new(self.mor.target().level(n).clone());
        GlobMor::new(&src, &tgt, self.base_map(), self.mor.level(n))
    }

    /// The squares `Σ_{X'} f_!A_n -> f_!A_{n+1} -> B_{n+1}` as squares of
    /// total spaces covering `f`: `Ψ_{n+1} ∘ σ^A_n = σ^B_n ∘ Σ Ψ_n`.
    pub fn squares_commute(&self) -> Result<bool> {
        let a = &self.push.source;
        let b = self.mor.target();
        let f = self.base_map();
        for n in 0..a.trunc() {
            let g0 = self.level(n)?;
            let g1 = self.level(n + 1)?;
            let (t0, t1) = (g0.total_map(), g1.total_map());
            let src = a.susp_space(n);
            for u in src.total().all_nd() {
                let s = Simplex::nondegenerate(u);
                let left = t1.apply(a.struct_map(n).apply(s));
                let right = match a.susp(n).split(s) {
                    SmashPoint::Base(x) => b.level(n + 1).base_simplex(f.apply(x)),
                    SmashPoint::Tuple(x, c) => b.sigma(n, f.apply(x), c[0], t0.apply(c[1]))?,
                };
                if left != right {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `X^*𝕊`: the sphere spectrum over the point pulled back along `X -> ∗`.
pub fn pulled_sphere(base: &Arc<FinSSet>, trunc: usize) -> Result<(SeqSpec, PullSpec)> {
    let (s0, _) = RetSpace::plus_base_parts(&SMap::identity(&Arc::new(crate::sset::point())))?;
    let sphere = free_seq(0, &s0, trunc)?;
    let f = SMap::constant(base, sphere.base(), NdId::new(0, 0))?;
    let pulled = pull_spec(&f, &sphere)?;
    Ok((sphere, pulled))
}

/// `Σ^∞_X X_{+X} -> X^*𝕊`, level by level.
pub fn trivial_bundle_compare(free: &SeqSpec, sphere: &SeqSpec, pulled: &PullSpec) -> Result<SeqMor> {
    let t_free = free_tower(free, 0)?;
    let t_sph = free_tower(sphere, 0)?;
    let s0 = sphere.level(0);
    let live = s0.total().vertices().find(|&v| !s0.is_base(v)).ok_or(Error::InvalidArgument("S^0 without a second point".into()))?;
    let target = pulled.spec();
    let mut maps = Vec::new();
    for n in 0..=free.trunc() {
        let (src, tgt) = (free.level(n), target.level(n));
        maps.push(RetMap::from_fn(src, tgt, |u| {
            let s = Simplex::nondegenerate(u);
            match t_free.split(n, s) {
                None => Ok(tgt.base_simplex(src.project(s))),
                Some(p) => {
                    let pt = t_sph.level(0).base().vertices().next().expect("point").lift(p.x.dim());
                    let w = t_sph.build(pt, &p.coords, live.lift(p.x.dim()))?;
                    pulled.pull(n).elem(p.x, w).ok_or(Error::NotOverBase("point of the sphere".into()))
                }
            }
        })?);
    }
    SeqMor::new(free, target, maps)
}

/// The census of `S^n ∨_x X`, built as a pushout of `S^n <- ∗ -> X`.
pub fn wedge_census(sphere_n: &RetSpace, base: &Arc<FinSSet>, x: NdId) -> Result<Vec<usize>> {
    if !same(sphere_n.base(), &Arc::new(crate::sset::point())) {
        return Err(Error::NotOverBase("expected a sphere over the point".into()));
    }
    let at_x = SMap::constant(sphere_n.base(), base, x)?;
    let p = pushout(sphere_n.section(), &at_x)?;
    Ok(p.object().census())
}
