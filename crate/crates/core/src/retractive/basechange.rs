//! Base change along a map of bases: `f_!`, `f^*` and `f_*`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::space::{RetMap, RetSpace};
use crate::digest::Fnv64;
use crate::sset::{coface, point, same, standard, yoneda, Colimit, Diagram, FinSSet, Levelwise, LevelwiseSource, MapSearch};
use crate::sset::{NdId, Pullback, SMap, Simplex};
use crate::{Error, Result};

/// A simplex of `f_!Y`: either in the base or coming from the fibre.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PushPoint {
    Base(Simplex),
    Fibre(Simplex),
}

/// `f_!Y = X' ∪_X Y`.
#[derive(Clone, Debug)]
pub struct Pushforward {
    map: SMap,
    space: RetSpace,
    source: RetSpace,
    colim: Colimit,
}

impl Pushforward {
    pub fn new(f: &SMap, y: &RetSpace) -> Result<Self> {
        if !same(f.source(), y.base()) {
            return Err(Error::NotOverBase("f_! of a space over another base".into()));
        }
        let mut dia = Diagram::new();
        let x = dia.add_object(y.base().clone());
        let t = dia.add_object(y.total().clone());
        let b = dia.add_object(f.target().clone());
        dia.add_arrow(x, t, y.section().clone())?;
        dia.add_arrow(x, b, f.clone())?;
        let colim = dia.colimit()?;
        let fr = f.compose(y.retraction())?;
        let retraction = colim.factor_partial(f.target(), &[None, Some(&fr), Some(&SMap::identity(f.target()))])?;
        let space = RetSpace::new(colim.cocone(2).clone(), retraction)?;
        Ok(Pushforward {
            map: f.clone(),
            space,
            source: y.clone(),
            colim,
        })
    }

    pub fn space(&self) -> &RetSpace {
        &self.space
    }

    pub fn base_map(&self) -> &SMap {
        &self.map
    }

    pub fn source(&self) -> &RetSpace {
        &self.source
    }

    pub fn fibre(&self, y: Simplex) -> Simplex {
        self.colim.inject(1, y)
    }

    /// The quotient map `Y -> f_!Y` covering `f`.
    pub fn fibre_map(&self) -> &SMap {
        self.colim.cocone(1)
    }

    pub fn split(&self, s: Simplex) -> PushPoint {
        if self.space.is_base(s) {
            PushPoint::Base(self.space.project(s))
        } else {
            PushPoint::Fibre(self.colim.represent(s).simplex)
        }
    }

    /// `ψ^∨: Y -> f^*Z` for `ψ: f_!Y -> Z`.
    pub fn adjunct(&self, psi: &RetMap, pulled: &PullbackRet) -> Result<RetMap> {
        if !same(psi.source().total(), self.space.total()) || !same(pulled.space().base(), self.source.base()) {
            return Err(Error::Mismatch("adjunct of a map with the wrong ends".into()));
        }
        let y = &self.source;
        RetMap::from_fn(y, pulled.space(), |u| {
            let s = Simplex::nondegenerate(u);
            pulled
                .elem(y.project(s), psi.apply(self.fibre(s)))
                .ok_or_else(|| Error::NotFactorable("adjunct leaves the pullback".into()))
        })
    }

    /// `φ^∧: f_!Y -> Z` for `φ: Y -> f^*Z`.
    pub fn coadjunct(&self, phi: &RetMap, pulled: &PullbackRet) -> Result<RetMap> {
        let z = pulled.source();
        let comp = pulled.projection().compose(phi.map())?;
        let m = self.colim.factor_partial(z.total(), &[None, Some(&comp), Some(z.section())])?;
        RetMap::new(self.space.clone(), z.clone(), m)
    }
}

/// `f^*Z = X ×_{X'} Z`.
#[derive(Clone, Debug)]
pub struct PullbackRet {
    map: SMap,
    source: RetSpace,
    space: RetSpace,
    pb: Pullback,
}

impl PullbackRet {
    pub fn new(f: &SMap, z: &RetSpace) -> Result<Self> {
        Self::build(f, z, None)
    }

    pub fn truncated(f: &SMap, z: &RetSpace, max_dim: usize) -> Result<Self> {
        Self::build(f, z, Some(max_dim))
    }

    fn build(f: &SMap, z: &RetSpace, max_dim: Option<usize>) -> Result<Self> {
        if !same(f.target(), z.base()) {
            return Err(Error::NotOverBase("f^* of a space over another base".into()));
        }
        let pb = match max_dim {
            Some(m) => Pullback::truncated(f, z.retraction(), m)?,
            None => Pullback::new(f, z.retraction())?,
        };
        let x = f.source();
        let section = SMap::from_fn(x.clone(), pb.object().clone(), |u| {
            let s = Simplex::nondegenerate(u);
            pb.pair(s, z.base_simplex(f.apply(s)))
                .ok_or_else(|| Error::BeyondTruncation(u.dim()))
        })?;
        let retraction = pb.left().clone();
        let space = RetSpace::new(section, retraction)?.with_truncation(max_dim);
        Ok(PullbackRet {
            map: f.clone(),
            source: z.clone(),
            space,
            pb,
        })
    }

    /// `K^*` for a pointed `K`: the product `X × K`.
    pub fn of_pointed(base: &Arc<FinSSet>, k: &RetSpace) -> Result<Self> {
        let pt = Arc::new(point());
        if !same(k.base(), &pt) {
            return Err(Error::NotOverBase("expected a space over the point".into()));
        }
        PullbackRet::new(&SMap::constant(base, k.base(), NdId::new(0, 0))?, k)
    }

    pub fn space(&self) -> &RetSpace {
        &self.space
    }

    pub fn source(&self) -> &RetSpace {
        &self.source
    }

    pub fn base_map(&self) -> &SMap {
        &self.map
    }

    pub fn elem(&self, x: Simplex, z: Simplex) -> Option<Simplex> {
        self.pb.pair(x, z)
    }

    pub fn split(&self, s: Simplex) -> (Simplex, Simplex) {
        self.pb.split(s)
    }

    /// The projection `f^*Z -> Z` covering `f`.
    pub fn projection(&self) -> &SMap {
        self.pb.right()
    }
}

/// Maps `P_σ -> Z` out of the pullbacks `P_σ = A ×_B Δ^n` along the
/// simplices `σ` of `B`, subject to `r_Z ∘ s = g ∘ pr_A`. With `pointed = Y`
/// (so `A` is the total space of `Y`) the sections must also send the part
/// of `P_σ` lying over the section of `Y` to the section of `Z`. This covers
/// both the direct image and the fibrewise mapping space.
struct SectionsOver {
    along: SMap,
    g: SMap,
    target: RetSpace,
    pointed: Option<RetSpace>,
    fibres: RefCell<BTreeMap<Simplex, Arc<Pullback>>>,
    maps: RefCell<BTreeMap<(Simplex, usize, bool), SMap>>,
}

type SectionKey = (Simplex, Vec<Vec<Simplex>>);

impl SectionsOver {
    fn fibre(&self, sigma: Simplex) -> Arc<Pullback> {
        if let Some(p) = self.fibres.borrow().get(&sigma) {
            return p.clone();
        }
        let y = yoneda(self.along.target(), sigma).expect("simplex of the base");
        let p = Arc::new(Pullback::new(&self.along, &y).expect("same base"));
        self.fibres.borrow_mut().insert(sigma, p.clone());
        p
    }

    fn sections(&self, sigma: Simplex) -> Vec<SMap> {
        let p = self.fibre(sigma);
        let g = self.g.clone();
        let left = p.left().clone();
        let rz = self.target.retraction().clone();
        let mut search = MapSearch::new(p.object(), self.target.total());
        if let Some(y) = &self.pointed {
            for t in p.object().all_nd() {
                let l = p.left().image(t);
                if y.is_base(l) {
                    search = search.fix(t, self.target.base_simplex(y.project(l)));
                }
            }
        }
        search = search.filter(move |w, c| rz.apply(c) == g.apply(left.image(w)));
        search.maps()
    }

    /// `P_{d_i σ} -> P_σ` (`degen == false`) or `P_{s_i σ} -> P_σ`, induced
    /// by the coface or codegeneracy of standard simplices.
    fn transport(&self, sigma: Simplex, i: usize, degen: bool) -> SMap {
        let key = (sigma, i, degen);
        if let Some(m) = self.maps.borrow().get(&key) {
            return m.clone();
        }
        let n = sigma.dim();
        let (other, cosimplicial) = if degen {
            let d_small = Arc::new(standard(n));
            let codeg = yoneda(&d_small, Simplex::nondegenerate(NdId::new(n, 0)).degeneracy(i));
            (sigma.degeneracy(i), codeg.expect("codegeneracy"))
        } else {
            (self.along.target().face(sigma, i), coface(n, i).expect("coface"))
        };
        let p_from = self.fibre(other);
        let p_to = self.fibre(sigma);
        let moved = cosimplicial
            .retarget(p_from.right().target(), p_to.right().target())
            .expect("standard simplices agree");
        let right = moved.compose(p_from.right()).expect("composable");
        let m = p_to.lift(p_from.left(), &right).expect("the square commutes");
        self.maps.borrow_mut().insert(key, m.clone());
        m
    }
}

impl LevelwiseSource for SectionsOver {
    type Key = SectionKey;

    fn level(&self, n: usize) -> Vec<SectionKey> {
        let mut out = Vec::new();
        for sigma in self.along.target().simplices(n) {
            for s in self.sections(sigma) {
                out.push((sigma, s.images().to_vec()));
            }
        }
        out
    }

    fn face(&self, _n: usize, i: usize, z: &SectionKey) -> SectionKey {
        let sigma = self.along.target().face(z.0, i);
        (sigma, pull_table(&self.transport(z.0, i, false), &z.1))
    }

    fn degeneracy(&self, _n: usize, j: usize, z: &SectionKey) -> SectionKey {
        (z.0.degeneracy(j), pull_table(&self.transport(z.0, j, true), &z.1))
    }

    fn name(&self, z: &SectionKey) -> String {
        let base = self.along.target().label(z.0);
        let mut h = Fnv64::new();
        for w in z.1.iter().flatten() {
            h.write_simplex(*w);
        }
        alloc::format!("<{base}|{:08x}>", h.finish() as u32)
    }
}

/// The table of `s ∘ m` from the table of `s`.
fn pull_table(m: &SMap, images: &[Vec<Simplex>]) -> Vec<Vec<Simplex>> {
    m.images()
        .iter()
        .map(|lvl| lvl.iter().map(|&w| images[w.nd().dim()][w.nd().index()].degenerate(w.deg())).collect())
        .collect()
}

/// A space of fibrewise sections, truncated: the direct image `f_*Y` or the
/// mapping space `F_X(Y, Z)`.
#[derive(Debug, Clone)]
pub struct SectionSpace {
    space: RetSpace,
    keys: Levelwise<SectionKey>,
    src: Arc<SectionsOver>,
}

impl core::fmt::Debug for SectionsOver {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("SectionsOver")
    }
}

impl SectionSpace {
    fn build(src: SectionsOver, top: usize) -> Result<Self> {
        if src.along.target().dim().is_some_and(|d| d > top) {
            return Err(Error::BeyondTruncation(top));
        }
        let keys = Levelwise::build(&src, top)?;
        let obj = keys.object().clone();
        let base = src.along.target().clone();
        let retraction = SMap::from_fn(obj.clone(), base.clone(), |x| Ok(keys.key(x).0))?;
        // the basepoint over σ is i_Z ∘ g ∘ pr_A
        let zero = src.target.section().compose(&src.g)?;
        let section = SMap::from_fn(base.clone(), obj.clone(), |x| {
            let sigma = Simplex::nondegenerate(x);
            let s = zero.compose(src.fibre(sigma).left())?;
            keys.simplex(&(sigma, s.images().to_vec())).ok_or(Error::BeyondTruncation(x.dim()))
        })?;
        let space = RetSpace::new(section, retraction)?.with_truncation(Some(top));
        Ok(SectionSpace { space, keys, src: Arc::new(src) })
    }

    pub fn space(&self) -> &RetSpace {
        &self.space
    }

    /// The simplex over `σ` given by the section map `s`, if it exists.
    pub fn simplex(&self, sigma: Simplex, s: &SMap) -> Option<Simplex> {
        self.keys.simplex(&(sigma, s.images().to_vec()))
    }

    /// `P_σ`, the domain of the sections over `σ`, with its projections.
    pub fn domain(&self, sigma: Simplex) -> Arc<Pullback> {
        self.src.fibre(sigma)
    }

    /// The base simplex and section table of a nondegenerate simplex.
    pub fn describe(&self, x: NdId) -> (Simplex, &[Vec<Simplex>]) {
        let k = self.keys.key(x);
        (k.0, &k.1)
    }
}

/// `f_*Y`, valid through dimension `top`. The base `X'` must have dimension
/// at most `top`.
pub fn direct_image(f: &SMap, y: &RetSpace, top: usize) -> Result<SectionSpace> {
    if !same(f.source(), y.base()) {
        return Err(Error::NotOverBase("f_* of a space over another base".into()));
    }
    let src = SectionsOver {
        along: f.clone(),
        g: SMap::identity(y.base()),
        target: y.clone(),
        pointed: None,
        fibres: RefCell::new(BTreeMap::new()),
        maps: RefCell::new(BTreeMap::new()),
    };
    SectionSpace::build(src, top)
}

/// The fibrewise mapping space `F_X(Y, Z)`, valid through dimension `top`.
pub fn internal_hom(y: &RetSpace, z: &RetSpace, top: usize) -> Result<SectionSpace> {
    if !same(y.base(), z.base()) {
        return Err(Error::NotOverBase("mapping space between different bases".into()));
    }
    let src = SectionsOver {
        along: y.retraction().clone(),
        g: y.retraction().clone(),
        target: z.clone(),
        pointed: Some(y.clone()),
        fibres: RefCell::new(BTreeMap::new()),
        maps: RefCell::new(BTreeMap::new()),
    };
    SectionSpace::build(src, top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary_inclusion, circle, standard};

    fn s1_over_point() -> RetSpace {
        let s1 = Arc::new(circle());
        RetSpace::pointed(&s1, NdId::new(0, 0)).unwrap()
    }

    #[test]
    fn pushforward_collapses_base() {
        // X_{+X} pushed to the point is X_+
        let s1 = Arc::new(circle());
        let pt = Arc::new(point());
        let f = SMap::constant(&s1, &pt, NdId::new(0, 0)).unwrap();
        let pf = Pushforward::new(&f, &RetSpace::unit(&s1)).unwrap();
        assert_eq!(pf.space().total().census(), alloc::vec![2, 1]);
    }

    #[test]
    fn pullback_to_product() {
        let d1 = Arc::new(standard(1));
        let k = s1_over_point();
        let p = PullbackRet::of_pointed(&d1, &k).unwrap();
        assert_eq!(p.space().total().census(), alloc::vec![2, 4, 2]);
    }

    #[test]
    fn adjunct_round_trip() {
        let inc = boundary_inclusion(1);
        let y = RetSpace::unit(inc.source());
        let z = RetSpace::unit(inc.target());
        let pf = Pushforward::new(&inc, &y).unwrap();
        let pb = PullbackRet::new(&inc, &z).unwrap();
        let left = pf.space().homs(&z).unwrap();
        let right = y.homs(pb.space()).unwrap();
        assert_eq!(left.len(), right.len());
        for psi in &left {
            let phi = pf.adjunct(psi, &pb).unwrap();
            assert_eq!(&pf.coadjunct(&phi, &pb).unwrap(), psi);
        }
    }

    #[test]
    fn direct_image_of_unit_along_inclusion() {
        // for the inclusion of a vertex all sections over the other vertex
        // are trivial: the fibre there is a point
        let pt = Arc::new(point());
        let d1 = Arc::new(standard(1));
        let f = SMap::constant(&pt, &d1, NdId::new(0, 0)).unwrap();
        let y = RetSpace::unit(&pt);
        let img = direct_image(&f, &y, 2).unwrap();
        assert_eq!(img.space().fibre_census()[0], 1);
    }

    #[test]
    fn loops_of_circle_at_low_dimension() {
        let k = s1_over_point();
        let pt = Arc::new(point());
        let h = internal_hom(&k, &k, 1).unwrap();
        assert!(same(h.space().base(), &pt) || **h.space().base() == *pt);
        // vertices of the mapping space are the pointed self-maps of S^1
        assert_eq!(h.space().total().count(0), k.hom_count(&k).unwrap());
    }
}
