//! Fibrewise smash products, tensors with pointed simplicial sets, wedges.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::basechange::PullbackRet;
use super::space::{RetMap, RetSpace};
use crate::sset::{same, Colimit, Diagram, Elem, FinSSet, Pullback, SMap, Simplex};
use crate::{Error, Result};

/// One factor of an iterated smash over `X`: a pointed simplicial set
/// (entering through `X × K`) or a retractive space over `X`.
#[derive(Clone, Debug)]
pub enum SmashFactor {
    Pointed(RetSpace),
    Fibre(RetSpace),
}

/// A simplex of an iterated smash: in the base, or a tuple of
/// coordinates over a base simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmashPoint {
    Base(Simplex),
    Tuple(Simplex, Vec<Simplex>),
}

/// `F_1 ∧_X ... ∧_X F_m`, built as the fibre product of the factors with
/// every tuple that meets a section collapsed onto the base.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pointed: Vec<Option<PullbackRet>>,
    factors: Vec<RetSpace>,
    stages: Vec<Pullback>,
    to_base: SMap,
    colim: Colimit,
    space: RetSpace,
}

impl SmashProduct {
    pub fn new(base: &Arc<FinSSet>, factors: &[SmashFactor]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument("empty smash product".into()));
        }
        let mut pointed = Vec::with_capacity(factors.len());
        let mut over = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                SmashFactor::Pointed(k) => {
                    let p = PullbackRet::of_pointed(base, k)?;
                    over.push(p.space().clone());
                    pointed.push(Some(p));
                }
                SmashFactor::Fibre(y) => {
                    if !same(y.base(), base) {
                        return Err(Error::NotOverBase("smash factor over another base".into()));
                    }
                    over.push(y.clone());
                    pointed.push(None);
                }
            }
        }
        let mut stages: Vec<Pullback> = Vec::new();
        let mut to_base = over[0].retraction().clone();
        for y in &over[1..] {
            let pb = Pullback::new(&to_base, y.retraction())?;
            to_base = to_base.compose(pb.left())?;
            stages.push(pb);
        }
        let fibre = to_base.source().clone();
        let mut dia = Diagram::new();
        let p = dia.add_object(fibre.clone());
        let b = dia.add_object(base.clone());
        for w in fibre.all_nd() {
            let s = Simplex::nondegenerate(w);
            let coords = split_chain(&stages, s);
            if coords.iter().zip(&over).any(|(&c, y)| y.is_base(c)) {
                dia.add_relation(Elem::new(p, s), Elem::new(b, to_base.apply(s)))?;
            }
        }
        let colim = dia.colimit()?;
        let retraction = colim.factor(base, &[to_base.clone(), SMap::identity(base)])?;
        let space = RetSpace::new(colim.cocone(b).clone(), retraction)?;
        Ok(SmashProduct {
            pointed,
            factors: over,
            stages,
            to_base,
            colim,
            space,
        })
    }

    /// `Y ∧_X Z`.
    pub fn pair(y: &RetSpace, z: &RetSpace) -> Result<Self> {
        SmashProduct::new(y.base(), &[SmashFactor::Fibre(y.clone()), SmashFactor::Fibre(z.clone())])
    }

    /// `K ⊙_X Y = X^*K ∧_X Y`.
    pub fn tensor(k: &RetSpace, y: &RetSpace) -> Result<Self> {
        SmashProduct::new(y.base(), &[SmashFactor::Pointed(k.clone()), SmashFactor::Fibre(y.clone())])
    }

    pub fn space(&self) -> &RetSpace {
        &self.space
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    /// The `i`-th factor as a space over the base (`X × K` for a pointed
    /// factor).
    pub fn factor(&self, i: usize) -> &RetSpace {
        &self.factors[i]
    }

    /// The tuple over `x` with the given coordinates: simplices of `K` for a
    /// pointed factor, of the total space for a fibre factor.
    pub fn tuple(&self, x: Simplex, coords: &[Simplex]) -> Result<Simplex> {
        if coords.len() != self.factors.len() {
            return Err(Error::Mismatch("wrong number of smash coordinates".into()));
        }
        let mut acc: Option<Simplex> = None;
        for (i, &c) in coords.iter().enumerate() {
            let u = match &self.pointed[i] {
                Some(p) => p.elem(x, c).ok_or(Error::Mismatch("coordinate of wrong dimension".into()))?,
                None => {
                    if self.factors[i].project(c) != x {
                        return Err(Error::NotOverBase("coordinate over a different base simplex".into()));
                    }
                    c
                }
            };
            acc = Some(match acc {
                None => u,
                Some(a) => self.stages[i - 1].pair(a, u).ok_or(Error::Mismatch("coordinates do not pair".into()))?,
            });
        }
        Ok(self.colim.inject(0, acc.expect("nonempty")))
    }

    pub fn split(&self, s: Simplex) -> SmashPoint {
        if self.space.is_base(s) {
            return SmashPoint::Base(self.space.project(s));
        }
        let w = self.colim.represent(s).simplex;
        let x = self.to_base.apply(w);
        let coords = split_chain(&self.stages, w)
            .into_iter()
            .zip(&self.pointed)
            .map(|(c, p)| match p {
                Some(p) => p.split(c).1,
                None => c,
            })
            .collect();
        SmashPoint::Tuple(x, coords)
    }

    /// A map out of the smash, given on nondegenerate simplices through
    /// their decomposition.
    pub fn map_to(&self, target: &RetSpace, mut f: impl FnMut(SmashPoint) -> Result<Simplex>) -> Result<RetMap> {
        RetMap::from_fn(&self.space, target, |u| f(self.split(Simplex::nondegenerate(u))))
    }
}

fn split_chain(stages: &[Pullback], s: Simplex) -> Vec<Simplex> {
    let mut out = Vec::with_capacity(stages.len() + 1);
    let mut cur = s;
    for p in stages.iter().rev() {
        let (l, r) = p.split(cur);
        out.push(r);
        cur = l;
    }
    out.push(cur);
    out.reverse();
    out
}

/// `Y ∧_X Z` as the colimit of `Y <- X -> Z`, `Y -> Y ×_X Z <- Z`,
/// `Y -> X <- Z`, without any normalisation.
pub fn smash_by_diagram(y: &RetSpace, z: &RetSpace) -> Result<(RetSpace, Colimit, Pullback)> {
    if !same(y.base(), z.base()) {
        return Err(Error::NotOverBase("smash of spaces over different bases".into()));
    }
    let base = y.base();
    let pb = Pullback::new(y.retraction(), z.retraction())?;
    let into_y = pb.lift(&SMap::identity(y.total()), &z.section().compose(y.retraction())?)?;
    let into_z = pb.lift(&y.section().compose(z.retraction())?, &SMap::identity(z.total()))?;
    let mut dia = Diagram::new();
    let top = dia.add_object(base.clone());
    let oy = dia.add_object(y.total().clone());
    let oz = dia.add_object(z.total().clone());
    let op = dia.add_object(pb.object().clone());
    let bottom = dia.add_object(base.clone());
    dia.add_arrow(top, oy, y.section().clone())?;
    dia.add_arrow(top, oz, z.section().clone())?;
    dia.add_arrow(oy, op, into_y)?;
    dia.add_arrow(oz, op, into_z)?;
    dia.add_arrow(oy, bottom, y.retraction().clone())?;
    dia.add_arrow(oz, bottom, z.retraction().clone())?;
    let colim = dia.colimit()?;
    let to_base = y.retraction().compose(pb.left())?;
    let retraction = colim.factor_partial(base, &[None, None, None, Some(&to_base), Some(&SMap::identity(base))])?;
    let space = RetSpace::new(colim.cocone(bottom).clone(), retraction)?;
    Ok((space, colim, pb))
}

/// A simplex of a wedge: in the base or in one summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WedgePoint {
    Base(Simplex),
    Summand(usize, Simplex),
}

/// `Y_1 ∨_X ... ∨_X Y_k`, the coproduct of retractive spaces.
#[derive(Clone, Debug)]
pub struct Wedge {
    colim: Colimit,
    space: RetSpace,
    summands: Vec<RetSpace>,
}

impl Wedge {
    pub fn new(base: &Arc<FinSSet>, summands: &[RetSpace]) -> Result<Self> {
        let mut dia = Diagram::new();
        let b = dia.add_object(base.clone());
        let mut comps = alloc::vec![SMap::identity(base)];
        for y in summands {
            if !same(y.base(), base) {
                return Err(Error::NotOverBase("wedge summand over another base".into()));
            }
            let o = dia.add_object(y.total().clone());
            dia.add_arrow(b, o, y.section().retarget(base, y.total())?)?;
            comps.push(y.retraction().retarget(y.total(), base)?);
        }
        let colim = dia.colimit()?;
        let retraction = colim.factor(base, &comps)?;
        let space = RetSpace::new(colim.cocone(b).clone(), retraction)?;
        Ok(Wedge {
            colim,
            space,
            summands: summands.to_vec(),
        })
    }

    pub fn space(&self) -> &RetSpace {
        &self.space
    }

    pub fn summand(&self, i: usize) -> &RetSpace {
        &self.summands[i]
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn inject(&self, i: usize, s: Simplex) -> Simplex {
        self.colim.inject(i + 1, s)
    }

    /// The coprojection of summand `i`.
    pub fn coprojection(&self, i: usize) -> Result<RetMap> {
        let y = &self.summands[i];
        RetMap::new(y.clone(), self.space.clone(), self.colim.cocone(i + 1).clone())
    }

    pub fn split(&self, s: Simplex) -> WedgePoint {
        if self.space.is_base(s) {
            return WedgePoint::Base(self.space.project(s));
        }
        let e = self.colim.represent(s);
        WedgePoint::Summand(e.object - 1, e.simplex)
    }

    /// A map out of the wedge given summand by summand.
    pub fn map_to(&self, target: &RetSpace, mut f: impl FnMut(usize, Simplex) -> Result<Simplex>) -> Result<RetMap> {
        RetMap::from_fn(&self.space, target, |u| match self.split(Simplex::nondegenerate(u)) {
            WedgePoint::Base(x) => Ok(target.base_simplex(x)),
            WedgePoint::Summand(i, y) => f(i, y),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{circle, point, standard, NdId};

    fn s1() -> RetSpace {
        RetSpace::pointed(&Arc::new(circle()), NdId::new(0, 0)).unwrap()
    }

    #[test]
    fn smash_of_circles_keeps_the_diagonal() {
        let pt = Arc::new(point());
        let s = SmashProduct::new(&pt, &[SmashFactor::Fibre(s1()), SmashFactor::Fibre(s1())]).unwrap();
        assert_eq!(s.space().total().census(), alloc::vec![1, 1, 2]);
    }

    #[test]
    fn diagram_and_direct_smash_agree() {
        let d1 = Arc::new(standard(1));
        let y = RetSpace::unit(&d1);
        let k = PullbackRet::of_pointed(&d1, &s1()).unwrap();
        let z = k.space().clone();
        let direct = SmashProduct::pair(&y, &z).unwrap();
        let (lit, _, _) = smash_by_diagram(&y, &z).unwrap();
        assert_eq!(direct.space().total().census(), lit.total().census());
    }

    #[test]
    fn split_inverts_tuple() {
        let d1 = Arc::new(standard(1));
        let y = RetSpace::unit(&d1);
        let t = SmashProduct::tensor(&s1(), &y).unwrap();
        for n in 0..3 {
            for s in t.space().total().simplices(n) {
                match t.split(s) {
                    SmashPoint::Base(x) => assert_eq!(t.space().base_simplex(x), s),
                    SmashPoint::Tuple(x, c) => assert_eq!(t.tuple(x, &c).unwrap(), s),
                }
            }
        }
    }

    #[test]
    fn wedge_of_circles() {
        let pt = Arc::new(point());
        let w = Wedge::new(&pt, &[s1(), s1(), s1()]).unwrap();
        assert_eq!(w.space().total().census(), alloc::vec![1, 3]);
        let e = Simplex::nondegenerate(NdId::new(1, 0));
        assert_eq!(w.split(w.inject(2, e)), WedgePoint::Summand(2, e));
    }
}
