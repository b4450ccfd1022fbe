//! Simplicial maps between finite simplicial sets.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::finsset::FinSSet;
use super::simplex::{NdId, Simplex};
use crate::{Error, Result};

/// A simplicial map, recorded by the image of every nondegenerate simplex.
#[derive(Clone, Debug)]
pub struct SMap {
    source: Arc<FinSSet>,
    target: Arc<FinSSet>,
    images: Vec<Vec<Simplex>>,
}

pub(crate) fn same(a: &Arc<FinSSet>, b: &Arc<FinSSet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for SMap {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && same(&self.source, &other.source) && same(&self.target, &other.target)
    }
}

impl Eq for SMap {}

impl SMap {
    /// Checks that every image has the right dimension and that faces are
    /// preserved.
    pub fn new(source: Arc<FinSSet>, target: Arc<FinSSet>, images: Vec<Vec<Simplex>>) -> Result<Self> {
        let levels = source.dim().map_or(0, |d| d + 1);
        if images.len() != levels || (0..levels).any(|d| images[d].len() != source.count(d)) {
            return Err(Error::Mismatch("image table does not match the source".into()));
        }
        for (d, level) in images.iter().enumerate() {
            for &y in level {
                if y.dim() != d || !target.contains(y) {
                    return Err(Error::Mismatch(format!("image in dimension {d} is not a {d}-simplex of the target")));
                }
            }
        }
        let map = SMap { source, target, images };
        map.check_faces()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: Arc<FinSSet>, target: Arc<FinSSet>, images: Vec<Vec<Simplex>>) -> Self {
        SMap { source, target, images }
    }

    fn check_faces(&self) -> Result<()> {
        for d in 1..self.images.len() {
            for x in self.source.nd(d) {
                let fx = self.images[d][x.index()];
                for (i, &f) in self.source.nd_faces(x).iter().enumerate() {
                    if self.target.face(fx, i) != self.apply(f) {
                        return Err(Error::NotSimplicial(format!("d{i} {}", self.source.name(x))));
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a map from its values on nondegenerate simplices, visited by
    /// increasing dimension.
    pub fn from_fn(
        source: Arc<FinSSet>,
        target: Arc<FinSSet>,
        mut f: impl FnMut(NdId) -> Result<Simplex>,
    ) -> Result<Self> {
        let mut images = Vec::new();
        for d in 0..source.dim().map_or(0, |d| d + 1) {
            let mut level = Vec::with_capacity(source.count(d));
            for x in source.nd(d) {
                level.push(f(x)?);
            }
            images.push(level);
        }
        SMap::new(source, target, images)
    }

    pub fn identity(x: &Arc<FinSSet>) -> Self {
        let images = (0..x.dim().map_or(0, |d| d + 1))
            .map(|d| x.nd(d).map(Simplex::nondegenerate).collect())
            .collect();
        SMap {
            source: x.clone(),
            target: x.clone(),
            images,
        }
    }

    /// The unique map from the empty simplicial set.
    pub fn from_empty(target: &Arc<FinSSet>) -> Self {
        SMap {
            source: Arc::new(FinSSet::empty()),
            target: target.clone(),
            images: Vec::new(),
        }
    }

    /// The map collapsing everything onto the vertex `v`.
    pub fn constant(source: &Arc<FinSSet>, target: &Arc<FinSSet>, v: NdId) -> Result<Self> {
        if v.dim() != 0 || v.index() >= target.count(0) {
            return Err(Error::ForeignSimplex);
        }
        let images = (0..source.dim().map_or(0, |d| d + 1))
            .map(|d| source.nd(d).map(|_| Simplex::nondegenerate(v).lift(d)).collect())
            .collect();
        Ok(SMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn source(&self) -> &Arc<FinSSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinSSet> {
        &self.target
    }

    pub fn images(&self) -> &[Vec<Simplex>] {
        &self.images
    }

    pub fn image(&self, x: NdId) -> Simplex {
        self.images[x.dim()][x.index()]
    }

    /// Value on an arbitrary simplex; degeneracies commute with the map.
    pub fn apply(&self, s: Simplex) -> Simplex {
        self.image(s.nd()).degenerate(s.deg())
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &SMap) -> Result<SMap> {
        if !same(first.target(), &self.source) {
            return Err(Error::Mismatch("composite of non-composable maps".into()));
        }
        let images = first
            .images
            .iter()
            .map(|level| level.iter().map(|&s| self.apply(s)).collect())
            .collect();
        Ok(SMap {
            source: first.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SMap) -> Result<SMap> {
        next.compose(self)
    }

    /// Same images, reinterpreted against equal copies of source and target.
    pub fn retarget(&self, source: &Arc<FinSSet>, target: &Arc<FinSSet>) -> Result<SMap> {
        if !same(source, &self.source) || !same(target, &self.target) {
            return Err(Error::Mismatch("retarget to a different simplicial set".into()));
        }
        Ok(SMap {
            source: source.clone(),
            target: target.clone(),
            images: self.images.clone(),
        })
    }

    /// Injective on simplices.
    pub fn is_mono(&self) -> bool {
        let mut seen = alloc::collections::BTreeSet::new();
        self.images.iter().flatten().all(|s| !s.is_degenerate() && seen.insert(s.nd()))
    }

    /// Surjective on simplices.
    pub fn is_epi(&self) -> bool {
        let mut hit: Vec<Vec<bool>> = (0..self.target.dim().map_or(0, |d| d + 1))
            .map(|d| alloc::vec![false; self.target.count(d)])
            .collect();
        for s in self.images.iter().flatten() {
            if !s.is_degenerate() {
                hit[s.nd().dim()][s.nd().index()] = true;
            }
        }
        hit.iter().flatten().all(|&h| h)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.census() == self.target.census() && self.is_mono()
    }

    pub fn inverse(&self) -> Option<SMap> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut images: Vec<Vec<Simplex>> = (0..self.target.dim().map_or(0, |d| d + 1))
            .map(|d| alloc::vec![Simplex::nondegenerate(NdId::new(0, 0)); self.target.count(d)])
            .collect();
        for x in self.source.all_nd() {
            let y = self.image(x).nd();
            images[y.dim()][y.index()] = Simplex::nondegenerate(x);
        }
        Some(SMap {
            source: self.target.clone(),
            target: self.source.clone(),
            images,
        })
    }
}
