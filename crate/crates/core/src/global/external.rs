//! The external smash product `(X, Y) △ (X', Z)` over `X × X'`.

use alloc::sync::Arc;

use super::{GlobMor, GlobObj};
use crate::retractive::{sphere0, PullbackRet, RetMap, RetSpace, SmashProduct};
use crate::sset::{product, Colimit, Diagram, FinSSet, Pullback, SMap, Simplex};
use crate::{Error, Result};

/// A simplex of `Y △ Z`: in the base `X × X'`, or a pair `(y, z)` with
/// neither coordinate in a section.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtPoint {
    Base(Simplex),
    Pair(Simplex, Simplex),
}

/// `(X, Y) △ (X', Z)`: the colimit of
/// `X×Z <- X×X' -> Y×X'`, `X×Z -> Y×Z <- Y×X'` and `X×Z -> X×X' <- Y×X'`.
#[derive(Clone, Debug)]
pub struct ExtSmash {
    left: GlobObj,
    right: GlobObj,
    bases: Pullback,
    totals: Pullback,
    colim: Colimit,
    obj: GlobObj,
}

fn cross(target: &Pullback, f: &SMap, g: &SMap, source: &Pullback) -> Result<SMap> {
    target.lift(&f.compose(source.left())?, &g.compose(source.right())?)
}

impl ExtSmash {
    pub fn new(left: &GlobObj, right: &GlobObj) -> Result<Self> {
        let (x, y) = (left.base(), left.space());
        let (x2, z) = (right.base(), right.space());
        let bases = product(x, x2)?;
        let xz = product(x, z.total())?;
        let yx = product(y.total(), x2)?;
        let totals = product(y.total(), z.total())?;
        let id_x = SMap::identity(x);
        let id_x2 = SMap::identity(x2);
        let id_y = SMap::identity(y.total());
        let id_z = SMap::identity(z.total());
        let mut dia = Diagram::new();
        let top = dia.add_object(bases.object().clone());
        let oxz = dia.add_object(xz.object().clone());
        let oyx = dia.add_object(yx.object().clone());
        let oyz = dia.add_object(totals.object().clone());
        let bottom = dia.add_object(bases.object().clone());
        dia.add_arrow(top, oxz, cross(&xz, &id_x, z.section(), &bases)?)?;
        dia.add_arrow(top, oyx, cross(&yx, y.section(), &id_x2, &bases)?)?;
        dia.add_arrow(oxz, oyz, cross(&totals, y.section(), &id_z, &xz)?)?;
        dia.add_arrow(oyx, oyz, cross(&totals, &id_y, z.section(), &yx)?)?;
        dia.add_arrow(oxz, bottom, cross(&bases, &id_x, z.retraction(), &xz)?)?;
        dia.add_arrow(oyx, bottom, cross(&bases, y.retraction(), &id_x2, &yx)?)?;
        let colim = dia.colimit()?;
        let rr = cross(&bases, y.retraction(), z.retraction(), &totals)?;
        let id_b = SMap::identity(bases.object());
        let retraction = colim.factor_partial(bases.object(), &[None, None, None, Some(&rr), Some(&id_b)])?;
        let obj = GlobObj::new(RetSpace::new(colim.cocone(bottom).clone(), retraction)?);
        Ok(ExtSmash {
            left: left.clone(),
            right: right.clone(),
            bases,
            totals,
            colim,
            obj,
        })
    }

    pub fn object(&self) -> &GlobObj {
        &self.obj
    }

    pub fn space(&self) -> &RetSpace {
        self.obj.space()
    }

    pub fn left(&self) -> &GlobObj {
        &self.left
    }

    pub fn right(&self) -> &GlobObj {
        &self.right
    }

    /// `X × X'` with its projections.
    pub fn bases(&self) -> &Pullback {
        &self.bases
    }

    pub fn base_pair(&self, x: Simplex, x2: Simplex) -> Result<Simplex> {
        self.bases.pair(x, x2).ok_or_else(|| Error::Mismatch("base simplices of different dimension".into()))
    }

    pub fn tuple(&self, y: Simplex, z: Simplex) -> Result<Simplex> {
        let p = self.totals.pair(y, z).ok_or_else(|| Error::Mismatch("simplices of different dimension".into()))?;
        Ok(self.colim.inject(3, p))
    }

    pub fn split(&self, s: Simplex) -> ExtPoint {
        let sp = self.space();
        if sp.is_base(s) {
            return ExtPoint::Base(sp.project(s));
        }
        let e = self.colim.represent(s);
        debug_assert_eq!(e.object, 3);
        let (y, z) = self.totals.split(e.simplex);
        ExtPoint::Pair(y, z)
    }

    /// A global morphism out of the smash, given the base map and the total
    /// map on decomposed simplices.
    pub fn map_to(&self, target: &GlobObj, f: &SMap, mut g: impl FnMut(ExtPoint) -> Result<Simplex>) -> Result<GlobMor> {
        let total = SMap::from_fn(self.space().total().clone(), target.space().total().clone(), |u| g(self.split(Simplex::nondegenerate(u))))?;
        GlobMor::from_square(&self.obj, target, f, &total)
    }
}

/// `m1 △ m2`.
pub fn ext_smash_mor(m1: &GlobMor, m2: &GlobMor, src: &ExtSmash, tgt: &ExtSmash) -> Result<GlobMor> {
    let f = cross(tgt.bases(), m1.base_map(), m2.base_map(), src.bases())?;
    let t1 = m1.total_map();
    let t2 = m2.total_map();
    src.map_to(tgt.object(), &f, |p| match p {
        ExtPoint::Base(x) => Ok(tgt.space().base_simplex(f.apply(x))),
        ExtPoint::Pair(y, z) => tgt.tuple(t1.apply(y), t2.apply(z)),
    })
}

/// `(∗, S^0) △ (X, Y) -> (X, Y)`.
pub fn ext_unit_left(s: &ExtSmash) -> Result<GlobMor> {
    let a = s.right().clone();
    let f = s.bases().right().clone();
    s.map_to(&a, &f, |p| match p {
        ExtPoint::Base(x) => Ok(a.space().base_simplex(f.apply(x))),
        ExtPoint::Pair(_, y) => Ok(y),
    })
}

/// `((X,A) △ (X',B)) △ (X'',C) -> (X,A) △ ((X',B) △ (X'',C))`.
pub fn ext_assoc(ab: &ExtSmash, ab_c: &ExtSmash, bc: &ExtSmash, a_bc: &ExtSmash) -> Result<GlobMor> {
    let outer = ab_c.bases();
    let inner = ab.bases();
    let x = inner.left().compose(outer.left())?;
    let x2 = inner.right().compose(outer.left())?;
    let x3 = outer.right().clone();
    let f = a_bc.bases().lift(&x, &bc.bases().lift(&x2, &x3)?)?;
    ab_c.map_to(a_bc.object(), &f, |p| match p {
        ExtPoint::Base(b) => Ok(a_bc.space().base_simplex(f.apply(b))),
        ExtPoint::Pair(u, w) => match ab.split(u) {
            ExtPoint::Pair(a, b) => a_bc.tuple(a, bc.tuple(b, w)?),
            ExtPoint::Base(_) => Err(Error::NotFactorable("pair collapsed onto the base".into())),
        },
    })
}

/// `(X,Y) △ (X',Z) -> (X',Z) △ (X,Y)`.
pub fn ext_symmetry(ab: &ExtSmash, ba: &ExtSmash) -> Result<GlobMor> {
    let f = ba.bases().lift(ab.bases().right(), ab.bases().left())?;
    ab.map_to(ba.object(), &f, |p| match p {
        ExtPoint::Base(b) => Ok(ba.space().base_simplex(f.apply(b))),
        ExtPoint::Pair(y, z) => ba.tuple(z, y),
    })
}

/// The comparison `Δ^*((X,Y) △ (X,Z)) -> Y ∧_X Z` covering the identity.
pub fn diag_compare(y: &RetSpace, z: &RetSpace) -> Result<(RetMap, bool)> {
    let e = ExtSmash::new(&GlobObj::new(y.clone()), &GlobObj::new(z.clone()))?;
    let x = y.base();
    let diag = e.bases().lift(&SMap::identity(x), &SMap::identity(x))?;
    let pulled = PullbackRet::new(&diag, e.space())?;
    let sm = SmashProduct::pair(y, z)?;
    let m = RetMap::from_fn(pulled.space(), sm.space(), |u| {
        let (b, s) = pulled.split(Simplex::nondegenerate(u));
        match e.split(s) {
            ExtPoint::Base(_) => Ok(sm.space().base_simplex(b)),
            ExtPoint::Pair(p, q) => sm.tuple(b, &[p, q]),
        }
    })?;
    let iso = m.is_isomorphism();
    Ok((m, iso))
}

/// The comparison `(X,Y) △ (X',Z) -> p_1^*Y ∧_{X×X'} p_2^*Z`.
pub fn ext_to_fib_compare(a: &GlobObj, b: &GlobObj) -> Result<(RetMap, bool)> {
    let e = ExtSmash::new(a, b)?;
    let p1 = PullbackRet::new(e.bases().left(), a.space())?;
    let p2 = PullbackRet::new(e.bases().right(), b.space())?;
    let sm = SmashProduct::pair(p1.space(), p2.space())?;
    let m = RetMap::from_fn(e.space(), sm.space(), |u| match e.split(Simplex::nondegenerate(u)) {
        ExtPoint::Base(x) => Ok(sm.space().base_simplex(x)),
        ExtPoint::Pair(y, z) => {
            let x = e.base_pair(a.space().project(y), b.space().project(z))?;
            let py = p1.elem(x, y).ok_or_else(|| Error::NotFactorable("not over the base".into()))?;
            let pz = p2.elem(x, z).ok_or_else(|| Error::NotFactorable("not over the base".into()))?;
            sm.tuple(x, &[py, pz])
        }
    })?;
    let iso = m.is_isomorphism();
    Ok((m, iso))
}

/// `(∗, K)` for a pointed `K`.
pub fn embed_fib(k: &RetSpace) -> GlobObj {
    GlobObj::new(k.clone())
}

/// `(K, K^*S^0) = (K, K_{+K})`.
pub fn embed_base(k: &Arc<FinSSet>) -> Result<GlobObj> {
    Ok(GlobObj::new(PullbackRet::of_pointed(k, &sphere0())?.space().clone()))
}
