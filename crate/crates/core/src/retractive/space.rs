use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::sset::{coproduct, FinSSet, MapSearch, NdId, SMap, Simplex};
use crate::sset::{point, same};
use crate::{Error, Result};

/// A space `Y` over and under `X`: a section `i: X -> Y` and a retraction
/// `r: Y -> X` with `r ∘ i = id`.
#[derive(Clone, Debug)]
pub struct RetSpace {
    section: SMap,
    retraction: SMap,
    in_section: Vec<Vec<bool>>,
    truncation: Option<usize>,
}

impl PartialEq for RetSpace {
    fn eq(&self, other: &Self) -> bool {
        self.section == other.section && self.retraction == other.retraction && self.truncation == other.truncation
    }
}

impl RetSpace {
    pub fn new(section: SMap, retraction: SMap) -> Result<Self> {
        if !same(section.source(), retraction.target()) || !same(section.target(), retraction.source()) {
            return Err(Error::NotRetractive("section and retraction do not match".into()));
        }
        if retraction.compose(&section)? != SMap::identity(section.source()) {
            return Err(Error::NotRetractive("r ∘ i is not the identity".into()));
        }
        let total = section.target().clone();
        let mut in_section: Vec<Vec<bool>> = (0..total.dim().map_or(0, |d| d + 1)).map(|d| alloc::vec![false; total.count(d)]).collect();
        for s in section.images().iter().flatten() {
            // a retraction forces the section to be injective on simplices
            in_section[s.nd().dim()][s.nd().index()] = true;
        }
        let retraction = retraction.retarget(&total, section.source())?;
        Ok(RetSpace {
            section,
            retraction,
            in_section,
            truncation: None,
        })
    }

    /// Marks the space as valid only in dimensions `0..=n`.
    pub fn with_truncation(mut self, n: Option<usize>) -> Self {
        self.truncation = n;
        self
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    /// The `d`-skeleton over the same base, which must have dimension at
    /// most `d`.
    pub fn skeleton(&self, d: usize) -> Result<Self> {
        if self.base().dim().is_some_and(|b| b > d) {
            return Err(Error::BeyondTruncation(d));
        }
        let total = Arc::new(self.total().skeleton(d));
        let section = SMap::new(self.base().clone(), total.clone(), self.section.images().to_vec())?;
        let retraction = SMap::new(total, self.base().clone(), self.retraction.images().iter().take(d + 1).cloned().collect())?;
        Ok(RetSpace::new(section, retraction)?.with_truncation(Some(d)))
    }

    /// `0_X`: the base itself.
    pub fn zero(base: &Arc<FinSSet>) -> Self {
        let id = SMap::identity(base);
        RetSpace::new(id.clone(), id).expect("identity is a retraction")
    }

    /// `E_{+X} = X ⊔ E` for a map `p: E -> X`.
    pub fn plus_base(p: &SMap) -> Result<Self> {
        Ok(RetSpace::plus_base_parts(p)?.0)
    }

    /// `E_{+X}` together with the inclusion `E -> E_{+X}`.
    pub fn plus_base_parts(p: &SMap) -> Result<(Self, SMap)> {
        let base = p.target().clone();
        let c = coproduct(&[base.clone(), p.source().clone()])?;
        let retraction = c.factor(&base, &[SMap::identity(&base), p.clone()])?;
        Ok((RetSpace::new(c.cocone(0).clone(), retraction)?, c.cocone(1).clone()))
    }

    /// `(-)_{+X}` on a map `g: E -> E'` of spaces over `X`, with
    /// `p: E -> X` and `q: E' -> X`.
    pub fn plus_map(p: &SMap, q: &SMap, g: &SMap) -> Result<RetMap> {
        if q.compose(g)? != *p {
            return Err(Error::NotOverBase("map does not commute with the projections".into()));
        }
        let base = p.target().clone();
        let cs = coproduct(&[base.clone(), p.source().clone()])?;
        let ct = coproduct(&[base.clone(), q.source().clone()])?;
        let source = RetSpace::new(cs.cocone(0).clone(), cs.factor(&base, &[SMap::identity(&base), p.clone()])?)?;
        let target = RetSpace::new(ct.cocone(0).clone(), ct.factor(&base, &[SMap::identity(&base), q.clone()])?)?;
        let m = cs.factor(ct.object(), &[ct.cocone(0).clone(), ct.cocone(1).compose(g)?])?;
        RetMap::new(source, target, m)
    }

    /// `X_{+X}`, the unit for the fibrewise smash.
    pub fn unit(base: &Arc<FinSSet>) -> Self {
        RetSpace::plus_base(&SMap::identity(base)).expect("identity")
    }

    /// A pointed simplicial set as a retractive space over the point.
    pub fn pointed(k: &Arc<FinSSet>, basepoint: NdId) -> Result<Self> {
        let pt = Arc::new(point());
        let section = SMap::constant(&pt, k, basepoint)?;
        let retraction = SMap::constant(k, &pt, NdId::new(0, 0))?;
        RetSpace::new(section, retraction)
    }

    /// `K_+` over the point.
    pub fn disjoint_basepoint(k: &Arc<FinSSet>) -> Self {
        let pt = Arc::new(point());
        RetSpace::plus_base(&SMap::constant(k, &pt, NdId::new(0, 0)).expect("point")).expect("point")
    }

    pub fn base(&self) -> &Arc<FinSSet> {
        self.section.source()
    }

    pub fn total(&self) -> &Arc<FinSSet> {
        self.section.target()
    }

    pub fn section(&self) -> &SMap {
        &self.section
    }

    pub fn retraction(&self) -> &SMap {
        &self.retraction
    }

    pub fn project(&self, s: Simplex) -> Simplex {
        self.retraction.apply(s)
    }

    pub fn base_simplex(&self, x: Simplex) -> Simplex {
        self.section.apply(x)
    }

    /// Whether `s` lies in the image of the section.
    pub fn is_base(&self, s: Simplex) -> bool {
        self.in_section[s.nd().dim()][s.nd().index()]
    }

    /// The basepoint of a space over the point.
    pub fn basepoint(&self) -> NdId {
        self.section.image(NdId::new(0, 0)).nd()
    }

    /// Nondegenerate simplices outside the section, by dimension.
    pub fn fibre_census(&self) -> Vec<usize> {
        self.in_section.iter().map(|l| l.iter().filter(|&&b| !b).count()).collect()
    }

    /// Maps over and under the base, `self -> other`.
    pub fn maps_to(&self, other: &RetSpace) -> Result<MapSearch<'static>> {
        if !same(self.base(), other.base()) {
            return Err(Error::NotOverBase("spaces over different bases".into()));
        }
        let r_src = self.retraction.clone();
        let r_tgt = other.retraction.clone();
        Ok(MapSearch::new(self.total(), other.total())
            .fix_along(&self.section, &other.section)
            .filter(move |x, c| r_tgt.apply(c) == r_src.image(x)))
    }

    pub fn hom_count(&self, other: &RetSpace) -> Result<usize> {
        Ok(self.maps_to(other)?.count())
    }

    pub fn homs(&self, other: &RetSpace) -> Result<Vec<RetMap>> {
        let maps = self.maps_to(other)?.maps();
        maps.into_iter().map(|m| RetMap::new(self.clone(), other.clone(), m)).collect()
    }
}

/// A map of retractive spaces over a fixed base.
#[derive(Clone, Debug, PartialEq)]
pub struct RetMap {
    source: RetSpace,
    target: RetSpace,
    map: SMap,
}

impl RetMap {
    pub fn new(source: RetSpace, target: RetSpace, map: SMap) -> Result<Self> {
        if !same(source.base(), target.base()) {
            return Err(Error::NotOverBase("spaces over different bases".into()));
        }
        if !same(map.source(), source.total()) || !same(map.target(), target.total()) {
            return Err(Error::Mismatch("map does not match the retractive spaces".into()));
        }
        let map = map.retarget(source.total(), target.total())?;
        if map.compose(source.section())? != target.section().retarget(source.base(), target.total())? {
            return Err(Error::NotOverBase("map does not preserve the section".into()));
        }
        for x in source.total().all_nd() {
            if target.project(map.image(x)) != source.retraction().image(x) {
                return Err(Error::NotOverBase(format!("map does not commute with retractions at {}", source.total().name(x))));
            }
        }
        Ok(RetMap { source, target, map })
    }

    /// Builds the map from its values on nondegenerate simplices of the
    /// source total space.
    pub fn from_fn(source: &RetSpace, target: &RetSpace, f: impl FnMut(NdId) -> Result<Simplex>) -> Result<Self> {
        let map = SMap::from_fn(source.total().clone(), target.total().clone(), f)?;
        RetMap::new(source.clone(), target.clone(), map)
    }

    /// The same assignment between spaces numbered like the original ones
    /// in low dimensions, such as skeleta.
    pub fn restrict(&self, source: &RetSpace, target: &RetSpace) -> Result<RetMap> {
        RetMap::from_fn(source, target, |x| Ok(self.map.image(x)))
    }

    pub fn identity(y: &RetSpace) -> Self {
        RetMap {
            source: y.clone(),
            target: y.clone(),
            map: SMap::identity(y.total()),
        }
    }

    /// The zero map `Y -> X -> Z`.
    pub fn zero(source: &RetSpace, target: &RetSpace) -> Result<Self> {
        let m = target.section().compose(source.retraction())?;
        RetMap::new(source.clone(), target.clone(), m)
    }

    pub fn source(&self) -> &RetSpace {
        &self.source
    }

    pub fn target(&self) -> &RetSpace {
        &self.target
    }

    pub fn map(&self) -> &SMap {
        &self.map
    }

    pub fn apply(&self, s: Simplex) -> Simplex {
        self.map.apply(s)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &RetMap) -> Result<RetMap> {
        Ok(RetMap {
            source: first.source.clone(),
            target: self.target.clone(),
            map: self.map.compose(&first.map)?,
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.map.is_isomorphism()
    }

    pub fn inverse(&self) -> Option<RetMap> {
        Some(RetMap {
            source: self.target.clone(),
            target: self.source.clone(),
            map: self.map.inverse()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{circle, standard};

    #[test]
    fn unit_and_zero() {
        let s1 = Arc::new(circle());
        let u = RetSpace::unit(&s1);
        assert_eq!(u.total().census(), alloc::vec![2, 2]);
        assert_eq!(u.fibre_census(), alloc::vec![1, 1]);
        let z = RetSpace::zero(&s1);
        assert_eq!(z.fibre_census(), alloc::vec![0, 0]);
        // maps 0 -> Y and Y -> 0 are unique
        assert_eq!(z.hom_count(&u).unwrap(), 1);
        assert_eq!(u.hom_count(&z).unwrap(), 1);
        // X_{+X} -> X_{+X}: the fibre copy goes to either copy
        assert_eq!(u.hom_count(&u).unwrap(), 2);
    }

    #[test]
    fn bad_retraction_rejected() {
        let d1 = Arc::new(standard(1));
        let pt = Arc::new(point());
        let i = SMap::constant(&pt, &d1, NdId::new(0, 1)).unwrap();
        let r = SMap::constant(&d1, &pt, NdId::new(0, 0)).unwrap();
        assert!(RetSpace::new(i.clone(), r).is_ok());
        let r2 = SMap::identity(&d1);
        assert!(RetSpace::new(i, r2).is_err());
    }
}
