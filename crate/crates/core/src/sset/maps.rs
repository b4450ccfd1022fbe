//! Exhaustive enumeration of simplicial maps by backtracking.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::finsset::FinSSet;
use super::simplex::{NdId, Simplex};
use super::smap::SMap;

type Filter<'a> = Box<dyn Fn(NdId, Simplex) -> bool + 'a>;

/// Search for maps `source -> target`, optionally with prescribed values and
/// a predicate on each assignment.
pub struct MapSearch<'a> {
    source: Arc<FinSSet>,
    target: Arc<FinSSet>,
    fixed: BTreeMap<NdId, Simplex>,
    filter: Option<Filter<'a>>,
}

struct State<'s> {
    order: Vec<NdId>,
    index: Vec<BTreeMap<Vec<Simplex>, Vec<Simplex>>>,
    images: Vec<Vec<Simplex>>,
    source: &'s FinSSet,
}

impl<'a> MapSearch<'a> {
    pub fn new(source: &Arc<FinSSet>, target: &Arc<FinSSet>) -> Self {
        MapSearch {
            source: source.clone(),
            target: target.clone(),
            fixed: BTreeMap::new(),
            filter: None,
        }
    }

    /// Prescribes the image of a nondegenerate simplex.
    pub fn fix(mut self, x: NdId, image: Simplex) -> Self {
        self.fixed.insert(x, image);
        self
    }

    /// Prescribes the images of all nondegenerate simplices sent by `along`
    /// from its source, i.e. requires `result ∘ along = value`.
    pub fn fix_along(mut self, along: &SMap, value: &SMap) -> Self {
        for x in along.source().all_nd() {
            let s = along.image(x);
            if !s.is_degenerate() {
                self.fixed.insert(s.nd(), value.image(x));
            }
        }
        self
    }

    pub fn filter(mut self, f: impl Fn(NdId, Simplex) -> bool + 'a) -> Self {
        self.filter = Some(Box::new(f));
        self
    }

    fn state(&self) -> State<'_> {
        let levels = self.source.dim().map_or(0, |d| d + 1);
        let mut index = Vec::with_capacity(levels);
        index.push(BTreeMap::new());
        for d in 1..levels {
            let mut m: BTreeMap<Vec<Simplex>, Vec<Simplex>> = BTreeMap::new();
            for s in self.target.simplices(d) {
                m.entry(self.target.faces_of(s)).or_default().push(s);
            }
            index.push(m);
        }
        State {
            order: self.order(),
            index,
            images: (0..levels).map(|d| alloc::vec![Simplex::nondegenerate(NdId::new(0, 0)); self.source.count(d)]).collect(),
            source: &self.source,
        }
    }

    /// Vertices in breadth-first order along edges, prescribed ones first;
    /// every other simplex right after its last vertex, so that faces are
    /// checked as early as possible.
    fn order(&self) -> Vec<NdId> {
        let src = &*self.source;
        let nv = src.count(0);
        let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); nv];
        for e in src.nd(1) {
            let f = src.nd_faces(e);
            let (a, b) = (f[0].nd().index(), f[1].nd().index());
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut pos = alloc::vec![usize::MAX; nv];
        let mut next = 0;
        let mut queue = alloc::collections::VecDeque::new();
        let starts: Vec<usize> = (0..nv)
            .filter(|&v| self.fixed.contains_key(&NdId::new(0, v)))
            .chain(0..nv)
            .collect();
        for s in starts {
            if pos[s] != usize::MAX {
                continue;
            }
            pos[s] = next;
            next += 1;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if pos[w] == usize::MAX {
                        pos[w] = next;
                        next += 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut keyed: Vec<((usize, usize, usize), NdId)> = src
            .all_nd()
            .map(|x| {
                let s = Simplex::nondegenerate(x);
                let last = (0..=x.dim()).map(|k| pos[src.vertex(s, k).index()]).max().unwrap_or(0);
                ((last, x.dim(), x.index()), x)
            })
            .collect();
        keyed.sort();
        keyed.into_iter().map(|(_, x)| x).collect()
    }

    /// Calls `visit` on every map until it returns `false`.
    pub fn for_each(&self, mut visit: impl FnMut(&[Vec<Simplex>]) -> bool) {
        let mut st = self.state();
        let vertices: Vec<Simplex> = self.target.vertices().collect();
        self.go(&mut st, 0, &vertices, &mut visit);
    }

    fn go(
        &self,
        st: &mut State<'_>,
        pos: usize,
        vertices: &[Simplex],
        visit: &mut dyn FnMut(&[Vec<Simplex>]) -> bool,
    ) -> bool {
        if pos == st.order.len() {
            return visit(&st.images);
        }
        let x = st.order[pos];
        let d = x.dim();
        let required: Vec<Simplex> = st.source.nd_faces(x).iter().map(|f| st.images[f.nd().dim()][f.nd().index()].degenerate(f.deg())).collect();
        let candidates: Vec<Simplex> = if let Some(&v) = self.fixed.get(&x) {
            if v.dim() != d || !self.target.contains(v) || (d > 0 && self.target.faces_of(v) != required) {
                return true;
            }
            alloc::vec![v]
        } else if d == 0 {
            vertices.to_vec()
        } else {
            match st.index[d].get(&required) {
                Some(c) => c.clone(),
                None => return true,
            }
        };
        for c in candidates {
            if let Some(f) = &self.filter {
                if !f(x, c) {
                    continue;
                }
            }
            st.images[d][x.index()] = c;
            if !self.go(st, pos + 1, vertices, visit) {
                return false;
            }
        }
        true
    }

    pub fn count(&self) -> usize {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            true
        });
        n
    }

    pub fn maps(&self) -> Vec<SMap> {
        let mut out = Vec::new();
        self.for_each(|images| {
            out.push(SMap::new_unchecked(self.source.clone(), self.target.clone(), images.to_vec()));
            true
        });
        out
    }

    pub fn first(&self) -> Option<SMap> {
        let mut out = None;
        self.for_each(|images| {
            out = Some(SMap::new_unchecked(self.source.clone(), self.target.clone(), images.to_vec()));
            false
        });
        out
    }
}

/// All maps `source -> target`.
pub fn enumerate_maps(source: &Arc<FinSSet>, target: &Arc<FinSSet>) -> Vec<SMap> {
    MapSearch::new(source, target).maps()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::{boundary, circle, standard};

    #[test]
    fn yoneda_counts() {
        // maps Δ^n -> X are the n-simplices of X
        let s1 = Arc::new(circle());
        for n in 0..4 {
            let d = Arc::new(standard(n));
            assert_eq!(enumerate_maps(&d, &s1).len(), s1.level_size(n));
        }
        let d2 = Arc::new(standard(2));
        let d1 = Arc::new(standard(1));
        assert_eq!(enumerate_maps(&d1, &d2).len(), 6);
        assert_eq!(enumerate_maps(&d2, &d1).len(), 4);
    }

    #[test]
    fn boundary_maps() {
        // into Δ^1 only monotone vertex assignments extend
        let b2 = Arc::new(boundary(2));
        let d1 = Arc::new(standard(1));
        assert_eq!(enumerate_maps(&b2, &d1).len(), 4);
        // into S^1 each edge goes to e or to the degenerate edge
        let s1 = Arc::new(circle());
        assert_eq!(enumerate_maps(&b2, &s1).len(), 8);
    }
}
