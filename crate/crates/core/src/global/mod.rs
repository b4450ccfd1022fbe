//! Retractive spaces over varying bases: pairs `(X, Y)` and morphisms
//! `(f, ψ)` with `ψ: f_!Y -> Z`.

mod external;
mod gens;

pub use external::{diag_compare, embed_base, embed_fib, ext_assoc, ext_smash_mor, ext_symmetry, ext_to_fib_compare, ext_unit_left, ExtPoint, ExtSmash};
pub use gens::{generating_cofibrations, generating_trivial_cofibrations, glob_pushout, pushout_product_global, GlobPushout};

use alloc::sync::Arc;

use crate::retractive::{sphere0, PullbackRet, PushPoint, Pushforward, RetMap, RetSpace};
use crate::sset::{same, FinSSet, SMap, Simplex};
use crate::{Error, Result};

/// An object `(X, Y)` of the global category.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobObj {
    space: RetSpace,
}

impl GlobObj {
    pub fn new(space: RetSpace) -> Self {
        GlobObj { space }
    }

    /// `(∗, S^0)`, the unit for the external smash.
    pub fn unit() -> Self {
        GlobObj::new(sphere0())
    }

    /// `(X, 0_X)`.
    pub fn zero(base: &Arc<FinSSet>) -> Self {
        GlobObj::new(RetSpace::zero(base))
    }

    pub fn base(&self) -> &Arc<FinSSet> {
        self.space.base()
    }

    pub fn space(&self) -> &RetSpace {
        &self.space
    }
}

/// Which of the equivalent descriptions of a global morphism to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorForm {
    Pair,
    OverTarget,
    OverSource,
    Square,
}

/// A global morphism in one of its equivalent descriptions.
#[derive(Clone, Debug)]
pub enum Presentation {
    /// `(f, ψ)` with `ψ: f_!Y -> Z`.
    Pair(SMap, RetMap),
    /// `ψ: f_!Y -> Z` together with the pushout that defines its source.
    OverTarget(Pushforward, RetMap),
    /// `ψ^∨: Y -> f^*Z` together with the pullback it lands in.
    OverSource(PullbackRet, RetMap),
    /// The map of total spaces `Ψ: Y -> Z` covering `f`.
    Square(SMap, SMap),
}

/// A morphism `(f, ψ): (X, Y) -> (X', Z)`.
#[derive(Clone, Debug)]
pub struct GlobMor {
    source: GlobObj,
    target: GlobObj,
    push: Pushforward,
    psi: RetMap,
}

impl PartialEq for GlobMor {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.base_map() == other.base_map() && self.psi == other.psi
    }
}

impl GlobMor {
    pub fn new(source: &GlobObj, target: &GlobObj, f: &SMap, psi: &RetMap) -> Result<Self> {
        if !same(f.source(), source.base()) || !same(f.target(), target.base()) {
            return Err(Error::Mismatch("base map does not match the objects".into()));
        }
        let push = Pushforward::new(f, source.space())?;
        if !same(psi.source().total(), push.space().total()) || !same(psi.target().total(), target.space().total()) {
            return Err(Error::Mismatch("ψ must go from f_!Y to Z".into()));
        }
        let psi = RetMap::new(push.space().clone(), target.space().clone(), psi.map().clone())?;
        Ok(GlobMor {
            source: source.clone(),
            target: target.clone(),
            push,
            psi,
        })
    }

    /// From the map of total spaces covering `f`.
    pub fn from_square(source: &GlobObj, target: &GlobObj, f: &SMap, total: &SMap) -> Result<Self> {
        let y = source.space();
        let z = target.space();
        if !same(total.source(), y.total()) || !same(total.target(), z.total()) {
            return Err(Error::Mismatch("total map does not match the objects".into()));
        }
        if z.retraction().compose(total)? != f.compose(y.retraction())? || total.compose(y.section())? != z.section().compose(f)? {
            return Err(Error::NotOverBase("square does not commute".into()));
        }
        let push = Pushforward::new(f, y)?;
        let psi = push.coadjunct_of_total(total, z)?;
        Ok(GlobMor {
            source: source.clone(),
            target: target.clone(),
            push,
            psi,
        })
    }

    pub fn from_presentation(source: &GlobObj, target: &GlobObj, p: &Presentation) -> Result<Self> {
        match p {
            Presentation::Pair(f, psi) => GlobMor::new(source, target, f, psi),
            Presentation::OverTarget(push, psi) => GlobMor::new(source, target, push.base_map(), psi),
            Presentation::OverSource(pulled, phi) => {
                if !same(phi.source().total(), source.space().total()) || !same(pulled.source().total(), target.space().total()) {
                    return Err(Error::Mismatch("ψ^∨ must go from Y to f^*Z".into()));
                }
                let total = pulled.projection().compose(phi.map())?;
                GlobMor::from_square(source, target, pulled.base_map(), &total)
            }
            Presentation::Square(f, total) => GlobMor::from_square(source, target, f, total),
        }
    }

    pub fn identity(a: &GlobObj) -> Self {
        let f = SMap::identity(a.base());
        let total = SMap::identity(a.space().total());
        GlobMor::from_square(a, a, &f, &total).expect("identity square")
    }

    /// `0_-(f): (X, 0_X) -> (X', 0_{X'})`.
    pub fn zero_of(f: &SMap) -> Result<Self> {
        let a = GlobObj::zero(f.source());
        let b = GlobObj::zero(f.target());
        GlobMor::from_square(&a, &b, f, f)
    }

    pub fn source(&self) -> &GlobObj {
        &self.source
    }

    pub fn target(&self) -> &GlobObj {
        &self.target
    }

    pub fn base_map(&self) -> &SMap {
        self.push.base_map()
    }

    pub fn psi(&self) -> &RetMap {
        &self.psi
    }

    pub fn pushforward(&self) -> &Pushforward {
        &self.push
    }

    /// `Ψ: Y -> Z`.
    pub fn total_map(&self) -> SMap {
        self.psi.map().compose(self.push.fibre_map()).expect("composable")
    }

    /// `ψ^∨: Y -> f^*Z`.
    pub fn adjunct(&self) -> Result<(PullbackRet, RetMap)> {
        let pulled = PullbackRet::new(self.base_map(), self.target.space())?;
        let phi = self.push.adjunct(&self.psi, &pulled)?;
        Ok((pulled, phi))
    }

    pub fn convert(&self, form: MorForm) -> Result<Presentation> {
        Ok(match form {
            MorForm::Pair => Presentation::Pair(self.base_map().clone(), self.psi.clone()),
            MorForm::OverTarget => Presentation::OverTarget(self.push.clone(), self.psi.clone()),
            MorForm::OverSource => {
                let (pulled, phi) = self.adjunct()?;
                Presentation::OverSource(pulled, phi)
            }
            MorForm::Square => Presentation::Square(self.base_map().clone(), self.total_map()),
        })
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GlobMor) -> Result<GlobMor> {
        let f = self.base_map().compose(first.base_map())?;
        let total = self.total_map().compose(&first.total_map())?;
        GlobMor::from_square(&first.source, &self.target, &f, &total)
    }

    /// Monomorphism on bases and on total spaces.
    pub fn is_mono(&self) -> bool {
        self.base_map().is_mono() && self.total_map().is_mono()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.base_map().is_isomorphism() && self.total_map().is_isomorphism()
    }
}

impl Pushforward {
    /// The map `f_!Y -> Z` determined by a total map `Y -> Z` covering `f`.
    pub(crate) fn coadjunct_of_total(&self, total: &SMap, z: &RetSpace) -> Result<RetMap> {
        RetMap::from_fn(self.space(), z, |u| match self.split(Simplex::nondegenerate(u)) {
            PushPoint::Base(x) => Ok(z.base_simplex(x)),
            PushPoint::Fibre(y) => Ok(total.apply(y)),
        })
    }
}
