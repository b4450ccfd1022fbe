//! Colimits of finite diagrams, computed dimension by dimension.
//!
//! Every simplex of every object is a node; arrows relate `x` with `f(x)`.
//! In dimension `d` the classes of nondegenerate `d`-simplices are found with
//! a union-find. A class related to a degenerate simplex becomes that
//! degenerate simplex, any other class becomes a new nondegenerate simplex
//! whose faces are read off a representative.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::finsset::{FinSSet, FinSSetBuilder};
use super::simplex::{NdId, Simplex};
use super::smap::{same, SMap};
use super::standard::point;
use crate::{Error, Result};

/// A simplex of one of the objects of a diagram.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Elem {
    pub object: usize,
    pub simplex: Simplex,
}

impl Elem {
    pub fn new(object: usize, simplex: Simplex) -> Self {
        Elem { object, simplex }
    }
}

#[derive(Clone, Debug)]
struct Arrow {
    source: usize,
    target: usize,
    map: SMap,
}

#[derive(Clone, Debug, Default)]
pub struct Diagram {
    objects: Vec<Arc<FinSSet>>,
    arrows: Vec<Arrow>,
    relations: Vec<(Elem, Elem)>,
}

struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            core::cmp::Ordering::Less => self.parent[a] = b,
            core::cmp::Ordering::Greater => self.parent[b] = a,
            core::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

enum Side {
    Node(usize),
    Value(Simplex),
}

impl Diagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, x: Arc<FinSSet>) -> usize {
        self.objects.push(x);
        self.objects.len() - 1
    }

    pub fn object(&self, i: usize) -> &Arc<FinSSet> {
        &self.objects[i]
    }

    pub fn add_arrow(&mut self, source: usize, target: usize, map: SMap) -> Result<()> {
        if source >= self.objects.len() || target >= self.objects.len() {
            return Err(Error::InvalidArgument("arrow between unknown objects".into()));
        }
        if !same(map.source(), &self.objects[source]) || !same(map.target(), &self.objects[target]) {
            return Err(Error::Mismatch("arrow does not match its objects".into()));
        }
        self.arrows.push(Arrow { source, target, map });
        Ok(())
    }

    /// Identifies two simplices of equal dimension; the relation is closed
    /// under faces automatically.
    pub fn add_relation(&mut self, a: Elem, b: Elem) -> Result<()> {
        for e in [a, b] {
            if e.object >= self.objects.len() || !self.objects[e.object].contains(e.simplex) {
                return Err(Error::ForeignSimplex);
            }
        }
        if a.simplex.dim() != b.simplex.dim() {
            return Err(Error::Mismatch("related simplices differ in dimension".into()));
        }
        self.relations.push((a, b));
        Ok(())
    }

    pub fn colimit(&self) -> Result<Colimit> {
        let levels = self.objects.iter().filter_map(|x| x.dim()).max().map_or(0, |d| d + 1);
        let mut rels: Vec<Vec<(Elem, Elem)>> = vec![Vec::new(); levels];
        for a in &self.arrows {
            let src = &self.objects[a.source];
            for x in src.all_nd() {
                rels[x.dim()].push((
                    Elem::new(a.source, Simplex::nondegenerate(x)),
                    Elem::new(a.target, a.map.image(x)),
                ));
            }
        }
        let mut seen = BTreeSet::new();
        let mut work: Vec<(Elem, Elem)> = self.relations.clone();
        while let Some((a, b)) = work.pop() {
            let key = if a <= b { (a, b) } else { (b, a) };
            if !seen.insert(key) {
                continue;
            }
            let d = a.simplex.dim();
            rels[d].push((a, b));
            if d > 0 {
                let (xa, xb) = (&self.objects[a.object], &self.objects[b.object]);
                for i in 0..=d {
                    work.push((
                        Elem::new(a.object, xa.face(a.simplex, i)),
                        Elem::new(b.object, xb.face(b.simplex, i)),
                    ));
                }
            }
        }

        let mut builder = FinSSetBuilder::new();
        let mut cls: Vec<Vec<Vec<Simplex>>> = vec![Vec::new(); self.objects.len()];
        let mut members: Vec<Vec<Vec<Elem>>> = Vec::new();
        for d in 0..levels {
            let mut offsets = Vec::with_capacity(self.objects.len());
            let mut total = 0;
            for x in &self.objects {
                offsets.push(total);
                total += x.count(d);
            }
            let mut uf = DisjointSet::new(total);
            let mut pending = Vec::new();
            let side = |e: Elem, cls: &Vec<Vec<Vec<Simplex>>>| {
                let x = e.simplex.nd();
                if e.simplex.is_degenerate() {
                    Side::Value(cls[e.object][x.dim()][x.index()].degenerate(e.simplex.deg()))
                } else {
                    Side::Node(offsets[e.object] + x.index())
                }
            };
            for &(a, b) in &rels[d] {
                match (side(a, &cls), side(b, &cls)) {
                    (Side::Node(p), Side::Node(q)) => uf.union(p, q),
                    (Side::Node(p), Side::Value(v)) | (Side::Value(v), Side::Node(p)) => pending.push((p, v)),
                    (Side::Value(v), Side::Value(w)) => {
                        if v != w {
                            return Err(Error::Mismatch("inconsistent identification of degenerate simplices".into()));
                        }
                    }
                }
            }
            let mut value: Vec<Option<Simplex>> = vec![None; total];
            for (p, v) in pending {
                let r = uf.find(p);
                match value[r] {
                    Some(w) if w != v => {
                        return Err(Error::Mismatch("inconsistent identification of degenerate simplices".into()));
                    }
                    _ => value[r] = Some(v),
                }
            }
            let mut fresh: Vec<Option<NdId>> = vec![None; total];
            let mut level_members: Vec<Vec<Elem>> = Vec::new();
            for (o, x) in self.objects.iter().enumerate() {
                let mut level = Vec::with_capacity(x.count(d));
                for u in x.nd(d) {
                    let r = uf.find(offsets[o] + u.index());
                    let elem = Elem::new(o, Simplex::nondegenerate(u));
                    let s = if let Some(v) = value[r] {
                        v
                    } else if let Some(id) = fresh[r] {
                        level_members[id.index()].push(elem);
                        Simplex::nondegenerate(id)
                    } else {
                        let faces = x
                            .nd_faces(u)
                            .iter()
                            .map(|f| cls[o][f.nd().dim()][f.nd().index()].degenerate(f.deg()))
                            .collect();
                        let id = builder.add_fresh(x.name(u), faces)?;
                        fresh[r] = Some(id);
                        level_members.push(vec![elem]);
                        Simplex::nondegenerate(id)
                    };
                    level.push(s);
                }
                cls[o].push(level);
            }
            members.push(level_members);
        }
        let object = Arc::new(builder.build()?);
        let mut cocone = Vec::with_capacity(self.objects.len());
        for (o, x) in self.objects.iter().enumerate() {
            let mut images = core::mem::take(&mut cls[o]);
            images.truncate(x.dim().map_or(0, |d| d + 1));
            cocone.push(SMap::new(x.clone(), object.clone(), images)?);
        }
        while members.last().is_some_and(Vec::is_empty) {
            members.pop();
        }
        Ok(Colimit {
            object,
            cocone,
            members,
        })
    }
}

/// The result of [`Diagram::colimit`]: the object, the cocone and, for each
/// new nondegenerate simplex, the nondegenerate simplices sent to it.
#[derive(Clone, Debug)]
pub struct Colimit {
    object: Arc<FinSSet>,
    cocone: Vec<SMap>,
    members: Vec<Vec<Vec<Elem>>>,
}

impl Colimit {
    pub fn object(&self) -> &Arc<FinSSet> {
        &self.object
    }

    pub fn cocone(&self, i: usize) -> &SMap {
        &self.cocone[i]
    }

    pub fn inject(&self, i: usize, s: Simplex) -> Simplex {
        self.cocone[i].apply(s)
    }

    pub fn members(&self, x: NdId) -> &[Elem] {
        &self.members[x.dim()][x.index()]
    }

    pub fn representative(&self, x: NdId) -> Elem {
        self.members[x.dim()][x.index()][0]
    }

    /// A representative of an arbitrary simplex, carrying its degeneracy.
    pub fn represent(&self, s: Simplex) -> Elem {
        let r = self.representative(s.nd());
        Elem::new(r.object, r.simplex.degenerate(s.deg()))
    }

    /// The induced map out of the colimit. `f(object, x)` gives the value on
    /// a nondegenerate simplex of an object, or `None` when that object is not
    /// prescribed. Every prescribed value is checked against the result.
    pub fn factor_with(
        &self,
        target: &Arc<FinSSet>,
        mut f: impl FnMut(usize, NdId) -> Option<Result<Simplex>>,
    ) -> Result<SMap> {
        let mut images: Vec<Vec<Simplex>> = Vec::new();
        for (d, level) in self.members.iter().enumerate() {
            let mut row = Vec::with_capacity(level.len());
            for (idx, ms) in level.iter().enumerate() {
                let mut found = None;
                for m in ms {
                    if let Some(v) = f(m.object, m.simplex.nd()) {
                        found = Some(v?);
                        break;
                    }
                }
                let v = found.ok_or_else(|| {
                    Error::NotFactorable(alloc::format!(
                        "no prescribed value on {}",
                        self.object.name(NdId::new(d, idx))
                    ))
                })?;
                row.push(v);
            }
            images.push(row);
        }
        let map = SMap::new(self.object.clone(), target.clone(), images)?;
        for (o, c) in self.cocone.iter().enumerate() {
            for x in c.source().all_nd() {
                if let Some(v) = f(o, x) {
                    if v? != map.apply(c.image(x)) {
                        return Err(Error::NotFactorable(alloc::format!(
                            "cocone condition fails on {}",
                            c.source().name(x)
                        )));
                    }
                }
            }
        }
        Ok(map)
    }

    /// The map induced by a compatible family, one map per object.
    pub fn factor(&self, target: &Arc<FinSSet>, components: &[SMap]) -> Result<SMap> {
        if components.len() != self.cocone.len() {
            return Err(Error::Mismatch("wrong number of components".into()));
        }
        for (c, k) in components.iter().zip(&self.cocone) {
            if !same(c.source(), k.source()) || !same(c.target(), target) {
                return Err(Error::Mismatch("component does not match the diagram".into()));
            }
        }
        self.factor_with(target, |o, x| Some(Ok(components[o].image(x))))
    }

    /// Like [`factor`](Self::factor) with some components omitted.
    pub fn factor_partial(&self, target: &Arc<FinSSet>, components: &[Option<&SMap>]) -> Result<SMap> {
        self.factor_with(target, |o, x| components.get(o).copied().flatten().map(|c| Ok(c.image(x))))
    }
}

/// Pushout of `B <- A -> C`; objects are numbered A = 0, B = 1, C = 2.
pub fn pushout(f: &SMap, g: &SMap) -> Result<Colimit> {
    if !same(f.source(), g.source()) {
        return Err(Error::Mismatch("pushout legs have different sources".into()));
    }
    let mut dia = Diagram::new();
    let a = dia.add_object(f.source().clone());
    let b = dia.add_object(f.target().clone());
    let c = dia.add_object(g.target().clone());
    dia.add_arrow(a, b, f.clone())?;
    dia.add_arrow(a, c, g.clone())?;
    dia.colimit()
}

pub fn coproduct(objects: &[Arc<FinSSet>]) -> Result<Colimit> {
    let mut dia = Diagram::new();
    for x in objects {
        dia.add_object(x.clone());
    }
    dia.colimit()
}

/// Coequalizer of `f, g: A -> B`; objects are A = 0, B = 1.
pub fn coequalizer(f: &SMap, g: &SMap) -> Result<Colimit> {
    if !same(f.source(), g.source()) || !same(f.target(), g.target()) {
        return Err(Error::Mismatch("coequalizer of maps with different ends".into()));
    }
    let mut dia = Diagram::new();
    let a = dia.add_object(f.source().clone());
    let b = dia.add_object(f.target().clone());
    dia.add_arrow(a, b, f.clone())?;
    dia.add_arrow(a, b, g.clone())?;
    dia.colimit()
}

/// `X/A` for a map `A -> X`, as the pushout of `* <- A -> X`; the collapsed
/// point is the only vertex of object 1. For empty `A` a disjoint point is
/// added.
pub fn quotient(inclusion: &SMap) -> Result<Colimit> {
    let pt = Arc::new(point());
    let mut dia = Diagram::new();
    let a = dia.add_object(inclusion.source().clone());
    let p = dia.add_object(pt.clone());
    let x = dia.add_object(inclusion.target().clone());
    dia.add_arrow(a, x, inclusion.clone())?;
    dia.add_arrow(a, p, SMap::constant(inclusion.source(), &pt, NdId::new(0, 0))?)?;
    dia.colimit()
}
