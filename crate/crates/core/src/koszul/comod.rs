//! `X_+`-comodules in pointed simplicial sets, the cotensor `X⋆N`, base
//! change of comodules, and the pre-duality composite.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::borel::{path_module, PathModule};
use crate::retractive::{associator, point_simplex, left_unitor, smash_map, sphere0, PushPoint, Pushforward, RetMap, RetSpace, SmashPoint, SmashProduct};
use crate::sset::{point, product, same, FinSSet, NdId, Pullback, SMap, Simplex};
use crate::{Error, Result};

/// The coalgebra `X_+` with its diagonal, as a pointed simplicial set.
#[derive(Clone, Debug)]
pub struct PlusCoalg {
    base: Arc<FinSSet>,
    plus: RetSpace,
    incl: SMap,
    located: BTreeMap<NdId, NdId>,
}

impl PlusCoalg {
    pub fn new(base: &Arc<FinSSet>) -> Result<Arc<Self>> {
        let pt = Arc::new(point());
        let (plus, incl) = RetSpace::plus_base_parts(&SMap::constant(base, &pt, NdId::new(0, 0))?)?;
        let located = base.all_nd().map(|u| (incl.image(u).nd(), u)).collect();
        Ok(Arc::new(PlusCoalg {
            base: base.clone(),
            plus,
            incl,
            located,
        }))
    }

    pub fn base(&self) -> &Arc<FinSSet> {
        &self.base
    }

    pub fn plus(&self) -> &RetSpace {
        &self.plus
    }

    /// `x` as a simplex of `X_+`.
    pub fn point(&self, x: Simplex) -> Simplex {
        self.incl.apply(x)
    }

    /// The simplex of `X` behind a non-base simplex of `X_+`.
    pub fn locate(&self, s: Simplex) -> Option<Simplex> {
        self.located.get(&s.nd()).map(|&u| Simplex::new(s.deg(), u))
    }

    /// `X_+ -> S^0`, sending `X` to the non-base point.
    pub fn counit(&self) -> Result<RetMap> {
        let s0 = sphere0();
        let other = s0.total().nd(0).find(|&v| v != s0.basepoint()).expect("S^0 has two points");
        RetMap::from_fn(&self.plus, &s0, |u| {
            let s = Simplex::nondegenerate(u);
            Ok(match self.locate(s) {
                Some(_) => Simplex::nondegenerate(other).lift(u.dim()),
                None => s0.base_simplex(point_simplex(u.dim())),
            })
        })
    }

    /// `Δ_+: X_+ -> X_+ ∧ X_+`.
    pub fn diagonal(&self, pp: &SmashProduct) -> Result<RetMap> {
        RetMap::from_fn(&self.plus, pp.space(), |u| {
            let s = Simplex::nondegenerate(u);
            match self.locate(s) {
                Some(x) => pp.tuple(point_simplex(u.dim()), &[self.point(x), self.point(x)]),
                None => Ok(pp.space().base_simplex(point_simplex(u.dim()))),
            }
        })
    }

    /// `f_+: X_+ -> X'_+`.
    pub fn plus_map(&self, target: &PlusCoalg, f: &SMap) -> Result<RetMap> {
        if !same(f.source(), &self.base) || !same(f.target(), &target.base) {
            return Err(Error::Mismatch("map between the wrong bases".into()));
        }
        RetMap::from_fn(&self.plus, &target.plus, |u| {
            let s = Simplex::nondegenerate(u);
            Ok(match self.locate(s) {
                Some(x) => target.point(f.apply(x)),
                None => target.plus.base_simplex(point_simplex(u.dim())),
            })
        })
    }
}

/// A pointed simplicial set `N` with a coaction `ρ: N -> X_+ ∧ N`.
#[derive(Clone, Debug)]
pub struct ComodData {
    coalg: Arc<PlusCoalg>,
    module: RetSpace,
    smash: SmashProduct,
    rho: RetMap,
}

impl ComodData {
    /// Checks counit and coassociativity exactly.
    pub fn new(coalg: &Arc<PlusCoalg>, module: &RetSpace, rho: RetMap, smash: SmashProduct) -> Result<Self> {
        if !same(rho.source().total(), module.total()) || !same(rho.target().total(), smash.space().total()) {
            return Err(Error::Mismatch("coaction with the wrong ends".into()));
        }
        let c = ComodData {
            coalg: coalg.clone(),
            module: module.clone(),
            smash,
            rho,
        };
        if !c.counit_holds()? {
            return Err(Error::BadAction("coaction is not counital".into()));
        }
        if !c.coassociative()? {
            return Err(Error::BadAction("coaction is not coassociative".into()));
        }
        Ok(c)
    }

    /// The coaction `n ↦ label(n) ∧ n`, with `label` given on the non-base
    /// nondegenerate simplices.
    pub fn from_labels(coalg: &Arc<PlusCoalg>, module: &RetSpace, mut label: impl FnMut(Simplex) -> Result<Simplex>) -> Result<Self> {
        let smash = SmashProduct::pair(coalg.plus(), module)?;
        let rho = RetMap::from_fn(module, smash.space(), |u| {
            let s = Simplex::nondegenerate(u);
            if module.is_base(s) {
                return Ok(smash.space().base_simplex(point_simplex(u.dim())));
            }
            smash.tuple(point_simplex(u.dim()), &[coalg.point(label(s)?), s])
        })?;
        ComodData::new(coalg, module, rho, smash)
    }

    pub fn coalg(&self) -> &Arc<PlusCoalg> {
        &self.coalg
    }

    pub fn module(&self) -> &RetSpace {
        &self.module
    }

    pub fn rho(&self) -> &RetMap {
        &self.rho
    }

    pub fn smash(&self) -> &SmashProduct {
        &self.smash
    }

    /// The simplex of `X` that `ρ` attaches to `s`, if `s` is off the
    /// basepoint.
    pub fn label(&self, s: Simplex) -> Option<Simplex> {
        match self.smash.split(self.rho.apply(s)) {
            SmashPoint::Base(_) => None,
            SmashPoint::Tuple(_, c) => self.coalg.locate(c[0]),
        }
    }

    /// `λ ∘ (ε ∧ id) ∘ ρ = id`.
    pub fn counit_holds(&self) -> Result<bool> {
        let s0n = SmashProduct::pair(&sphere0(), &self.module)?;
        let eps = smash_map(&self.smash, &s0n, &[&self.coalg.counit()?, &RetMap::identity(&self.module)])?;
        let back = left_unitor(&s0n, &self.module)?.compose(&eps)?.compose(&self.rho)?;
        Ok(back.map() == RetMap::identity(&self.module).map())
    }

    /// `α ∘ (Δ ∧ id) ∘ ρ = (id ∧ ρ) ∘ ρ`.
    pub fn coassociative(&self) -> Result<bool> {
        let plus = self.coalg.plus();
        let pp = SmashProduct::pair(plus, plus)?;
        let pp_n = SmashProduct::pair(pp.space(), &self.module)?;
        let p_pn = SmashProduct::pair(plus, self.smash.space())?;
        let delta = smash_map(&self.smash, &pp_n, &[&self.coalg.diagonal(&pp)?, &RetMap::identity(&self.module)])?;
        let assoc = associator(&pp, &pp_n, &self.smash, &p_pn)?;
        let left = assoc.compose(&delta)?.compose(&self.rho)?;
        let id_rho = smash_map(&self.smash, &p_pn, &[&RetMap::identity(plus), &self.rho])?;
        let right = id_rho.compose(&self.rho)?;
        Ok(left.map() == right.map())
    }

    /// `id ∧ f` between the coaction targets.
    fn smash_with(&self, other: &ComodData, f: &RetMap) -> Result<RetMap> {
        smash_map(&self.smash, &other.smash, &[&RetMap::identity(self.coalg.plus()), f])
    }

    /// Comodule maps: pointed maps `f` with `ρ ∘ f = (id ∧ f) ∘ ρ`.
    pub fn homs(&self, other: &ComodData) -> Result<Vec<RetMap>> {
        if !same(self.coalg.base(), other.coalg.base()) {
            return Err(Error::Mismatch("comodules over different coalgebras".into()));
        }
        let mut out = Vec::new();
        for f in self.module.homs(&other.module)? {
            let lhs = other.rho.compose(&f)?;
            let rhs = self.smash_with(other, &f)?.compose(&self.rho)?;
            if lhs.map() == rhs.map() {
                out.push(f);
            }
        }
        Ok(out)
    }
}

/// `X_!Y` with the coaction `[y] ↦ p(y) ∧ [y]`.
pub fn coaction(coalg: &Arc<PlusCoalg>, y: &RetSpace) -> Result<(ComodData, Pushforward)> {
    if !same(y.base(), coalg.base()) {
        return Err(Error::NotOverBase("coaction over another base".into()));
    }
    let pt = Arc::new(point());
    let push = Pushforward::new(&SMap::constant(y.base(), &pt, NdId::new(0, 0))?, y)?;
    let c = ComodData::from_labels(coalg, push.space(), |s| match push.split(s) {
        PushPoint::Fibre(w) => Ok(y.project(w)),
        PushPoint::Base(_) => Err(Error::Mismatch("label of the basepoint".into())),
    })?;
    Ok((c, push))
}

/// `X⋆N = lim(N -> X_+ ∧ N <- X × N)` as a retractive space over `X`.
#[derive(Clone, Debug)]
pub struct Costar {
    prod: Pullback,
    pb: Pullback,
    space: RetSpace,
}

pub fn costar(n: &ComodData) -> Result<Costar> {
    let x = n.coalg.base().clone();
    let m = n.module.total().clone();
    let prod = product(&x, &m)?;
    let sm = &n.smash;
    let q = SMap::from_fn(prod.object().clone(), sm.space().total().clone(), |u| {
        let (a, b) = prod.split(Simplex::nondegenerate(u));
        if n.module.is_base(b) {
            Ok(sm.space().base_simplex(point_simplex(u.dim())))
        } else {
            sm.tuple(point_simplex(u.dim()), &[n.coalg.point(a), b])
        }
    })?;
    let pb = Pullback::new(n.rho.map(), &q)?;
    let retraction = prod.left().compose(pb.right())?;
    let m0 = Simplex::nondegenerate(n.module.basepoint());
    let section = SMap::from_fn(x.clone(), pb.object().clone(), |u| {
        let s = Simplex::nondegenerate(u);
        let d = u.dim();
        let inner = prod.pair(s, m0.lift(d)).ok_or(Error::NotFactorable("section leaves X × N".into()))?;
        pb.pair(m0.lift(d), inner).ok_or(Error::NotFactorable("section leaves the pullback".into()))
    })?;
    let space = RetSpace::new(section, retraction)?;
    Ok(Costar { prod, pb, space })
}

impl Costar {
    pub fn space(&self) -> &RetSpace {
        &self.space
    }

    /// The point `(x, n)` when it lies in `X⋆N`.
    pub fn elem(&self, x: Simplex, n: Simplex) -> Option<Simplex> {
        self.pb.pair(n, self.prod.pair(x, n)?)
    }

    /// The `N` coordinate.
    pub fn coordinate(&self, s: Simplex) -> Simplex {
        self.pb.left().apply(s)
    }

    /// The unit `Y -> X⋆X_!Y`, `y ↦ (p(y), [y])`.
    pub fn unit(&self, y: &RetSpace, push: &Pushforward) -> Result<RetMap> {
        RetMap::from_fn(y, &self.space, |u| {
            let s = Simplex::nondegenerate(u);
            self.elem(y.project(s), push.fibre(s)).ok_or(Error::NotFactorable("unit leaves the pullback".into()))
        })
    }

    /// The counit `X_!(X⋆N) -> N`, `[(x, n)] ↦ n`.
    pub fn counit(&self, n: &ComodData, push: &Pushforward) -> Result<RetMap> {
        RetMap::from_fn(push.space(), &n.module, |u| {
            let s = Simplex::nondegenerate(u);
            Ok(match push.split(s) {
                PushPoint::Fibre(w) => self.coordinate(w),
                PushPoint::Base(_) => n.module.base_simplex(point_simplex(u.dim())),
            })
        })
    }

    /// The transpose `Y -> X⋆N` of a comodule map `φ: X_!Y -> N`.
    pub fn transpose(&self, y: &RetSpace, push: &Pushforward, phi: &RetMap) -> Result<RetMap> {
        RetMap::from_fn(y, &self.space, |u| {
            let s = Simplex::nondegenerate(u);
            self.elem(y.project(s), phi.apply(push.fibre(s))).ok_or(Error::NotFactorable("transpose leaves the pullback".into()))
        })
    }
}

/// `f_!N`: the same pointed set, coacting through `f_+`.
pub fn comod_push(target: &Arc<PlusCoalg>, f: &SMap, n: &ComodData) -> Result<ComodData> {
    if !same(f.target(), target.base()) || !same(f.source(), n.coalg.base()) {
        return Err(Error::Mismatch("pushforward along a map with the wrong ends".into()));
    }
    ComodData::from_labels(target, &n.module, |s| {
        n.label(s).map(|x| f.apply(x)).ok_or(Error::Mismatch("label of the basepoint".into()))
    })
}

/// `f^*M = lim(M -> X'_+ ∧ M <- X_+ ∧ M)` with its `X_+`-coaction and the
/// projection to `M`.
pub fn comod_pull(source: &Arc<PlusCoalg>, f: &SMap, m: &ComodData) -> Result<(ComodData, SMap)> {
    let fp = source.plus_map(&m.coalg, f)?;
    let xm = SmashProduct::pair(source.plus(), &m.module)?;
    let fm = smash_map(&xm, &m.smash, &[&fp, &RetMap::identity(&m.module)])?;
    let pb = Pullback::new(m.rho.map(), fm.map())?;
    let m0 = Simplex::nondegenerate(m.module.basepoint());
    let bp = pb
        .pair(m0, xm.space().base_simplex(point_simplex(0)))
        .ok_or(Error::NotFactorable("basepoint leaves the pullback".into()))?;
    let module = RetSpace::pointed(pb.object(), bp.nd())?;
    let c = ComodData::from_labels(source, &module, |s| {
        let (_, t) = pb.split(s);
        match xm.split(t) {
            SmashPoint::Tuple(_, c) => source.locate(c[0]).ok_or(Error::Mismatch("label off X".into())),
            SmashPoint::Base(_) => Err(Error::Mismatch("label of the basepoint".into())),
        }
    })?;
    Ok((c, pb.left().clone()))
}

/// Both sides of pre-duality for `Y` over a reduced `X`: the comodule
/// `X_!Y` and the `𝔾X`-module `ℙX_! p(X)^*Y`.
#[derive(Clone, Debug)]
pub struct KoszulPre {
    pub comodule: ComodData,
    pub module: PathModule,
}

pub fn koszul_pre(coalg: &Arc<PlusCoalg>, y: &RetSpace) -> Result<KoszulPre> {
    if !coalg.base().is_reduced() {
        return Err(Error::NotReduced);
    }
    let (comodule, _) = coaction(coalg, y)?;
    Ok(KoszulPre {
        comodule,
        module: path_module(y)?,
    })
}
