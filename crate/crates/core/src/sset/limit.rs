//! Pullbacks and products.
//!
//! The nondegenerate `n`-simplices of `A ×_C B` are the pairs
//! `(s_I a, s_J b)` with `a`, `b` nondegenerate, `I ∩ J = ∅` and equal images
//! in `C`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::degop::{subsets, DegOp};
use super::finsset::{FinSSet, FinSSetBuilder};
use super::simplex::{NdId, Simplex};
use super::smap::{same, SMap};
use super::standard::point;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Pullback {
    object: Arc<FinSSet>,
    left: SMap,
    right: SMap,
    index: BTreeMap<(Simplex, Simplex), NdId>,
    truncation: Option<usize>,
}

impl Pullback {
    /// `A ×_C B` for `f: A -> C` and `g: B -> C`.
    pub fn new(f: &SMap, g: &SMap) -> Result<Self> {
        Self::build(f, g, None)
    }

    /// As [`new`](Self::new), keeping only simplices of dimension at most
    /// `max_dim`.
    pub fn truncated(f: &SMap, g: &SMap, max_dim: usize) -> Result<Self> {
        Self::build(f, g, Some(max_dim))
    }

    fn build(f: &SMap, g: &SMap, max_dim: Option<usize>) -> Result<Self> {
        if !same(f.target(), g.target()) {
            return Err(Error::Mismatch("pullback legs have different targets".into()));
        }
        let (a, b) = (f.source().clone(), g.source().clone());
        let (Some(da), Some(db)) = (a.dim(), b.dim()) else {
            return Ok(Pullback {
                object: Arc::new(FinSSet::empty()),
                left: SMap::from_empty(&a),
                right: SMap::from_empty(&b),
                index: BTreeMap::new(),
                truncation: max_dim,
            });
        };
        let top = max_dim.map_or(da + db, |m| m.min(da + db));
        // Group the nondegenerate simplices by the nondegenerate part of their
        // image.
        let mut by_base: BTreeMap<NdId, (Vec<NdId>, Vec<NdId>)> = BTreeMap::new();
        for x in a.all_nd() {
            by_base.entry(f.image(x).nd()).or_default().0.push(x);
        }
        for y in b.all_nd() {
            by_base.entry(g.image(y).nd()).or_default().1.push(y);
        }
        let mut cells: Vec<Vec<(Simplex, Simplex)>> = alloc::vec![Vec::new(); top + 1];
        for (xs, ys) in by_base.values() {
            for &x in xs {
                let fx = f.image(x).deg();
                for &y in ys {
                    let gy = g.image(y).deg();
                    let (p, q) = (x.dim(), y.dim());
                    for n in p.max(q)..=(p + q).min(top) {
                        for i in subsets(n, n - p) {
                            let di = DegOp::from_bits(i);
                            let target = fx.then(di);
                            let free = !i & ((1u64 << n) - 1);
                            for j in subsets_within(free, n - q) {
                                let dj = DegOp::from_bits(j);
                                if gy.then(dj) == target {
                                    cells[n].push((Simplex::new(di, x), Simplex::new(dj, y)));
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut builder = FinSSetBuilder::new();
        let mut index = BTreeMap::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (n, level) in cells.into_iter().enumerate() {
            let mut lrow = Vec::with_capacity(level.len());
            let mut rrow = Vec::with_capacity(level.len());
            for (u, v) in level {
                let faces = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|i| normalise(&index, a.face(u, i), b.face(v, i)).expect("faces of a cell are cells"))
                        .collect()
                };
                let id = builder.add_fresh(format!("({},{})", a.label(u), b.label(v)), faces)?;
                index.insert((u, v), id);
                lrow.push(u);
                rrow.push(v);
            }
            left.push(lrow);
            right.push(rrow);
        }
        let object = Arc::new(builder.build()?);
        let levels = object.dim().map_or(0, |d| d + 1);
        left.truncate(levels);
        right.truncate(levels);
        Ok(Pullback {
            left: SMap::new_unchecked(object.clone(), a, left),
            right: SMap::new_unchecked(object.clone(), b, right),
            object,
            index,
            truncation: max_dim,
        })
    }

    pub fn object(&self) -> &Arc<FinSSet> {
        &self.object
    }

    pub fn left(&self) -> &SMap {
        &self.left
    }

    pub fn right(&self) -> &SMap {
        &self.right
    }

    /// The simplex with components `a` and `b`, if they agree in the base.
    pub fn pair(&self, a: Simplex, b: Simplex) -> Option<Simplex> {
        if a.dim() != b.dim() {
            return None;
        }
        normalise(&self.index, a, b)
    }

    pub fn split(&self, s: Simplex) -> (Simplex, Simplex) {
        (self.left.apply(s), self.right.apply(s))
    }

    /// The map `W -> A ×_C B` with components `p` and `q`.
    pub fn lift(&self, p: &SMap, q: &SMap) -> Result<SMap> {
        if !same(p.source(), q.source()) || !same(p.target(), self.left.target()) || !same(q.target(), self.right.target()) {
            return Err(Error::Mismatch("components do not match the pullback".into()));
        }
        let w = p.source().clone();
        if let Some(t) = self.truncation {
            if w.dim().is_some_and(|d| d > t) {
                return Err(Error::BeyondTruncation(w.dim().unwrap_or(0)));
            }
        }
        SMap::from_fn(w, self.object.clone(), |x| {
            self.pair(p.image(x), q.image(x))
                .ok_or_else(|| Error::NotFactorable("components disagree in the base".into()))
        })
    }
}

fn normalise(index: &BTreeMap<(Simplex, Simplex), NdId>, a: Simplex, b: Simplex) -> Option<Simplex> {
    let common = a.deg().intersect(b.deg());
    let a0 = Simplex::new(a.deg().factor_out(common), a.nd());
    let b0 = Simplex::new(b.deg().factor_out(common), b.nd());
    index.get(&(a0, b0)).map(|&id| Simplex::new(common, id))
}

/// Subsets of the bits of `mask` with exactly `r` elements.
fn subsets_within(mask: u64, r: usize) -> impl Iterator<Item = u64> {
    let positions: Vec<u32> = (0..64).filter(|&j| mask & (1 << j) != 0).collect();
    let m = positions.len();
    subsets(m, r).map(move |s| {
        let mut out = 0u64;
        for (k, &p) in positions.iter().enumerate() {
            if s & (1 << k) != 0 {
                out |= 1 << p;
            }
        }
        out
    })
}

/// Cartesian product, as the pullback over the point.
pub fn product(a: &Arc<FinSSet>, b: &Arc<FinSSet>) -> Result<Pullback> {
    let pt = Arc::new(point());
    let v = NdId::new(0, 0);
    Pullback::new(&SMap::constant(a, &pt, v)?, &SMap::constant(b, &pt, v)?)
}

/// Iterated product `((X_1 × X_2) × ...) × X_k` with tuple access.
#[derive(Clone, Debug)]
pub struct ProductMany {
    factors: Vec<Arc<FinSSet>>,
    stages: Vec<Pullback>,
}

impl ProductMany {
    pub fn new(factors: &[Arc<FinSSet>]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument("empty product".into()));
        }
        let mut stages: Vec<Pullback> = Vec::new();
        for x in &factors[1..] {
            let acc = stages.last().map_or(factors[0].clone(), |p| p.object().clone());
            stages.push(product(&acc, x)?);
        }
        Ok(ProductMany {
            factors: factors.to_vec(),
            stages,
        })
    }

    pub fn object(&self) -> &Arc<FinSSet> {
        self.stages.last().map_or(&self.factors[0], Pullback::object)
    }

    pub fn tuple(&self, coords: &[Simplex]) -> Option<Simplex> {
        if coords.len() != self.factors.len() {
            return None;
        }
        let mut acc = coords[0];
        for (p, &c) in self.stages.iter().zip(&coords[1..]) {
            acc = p.pair(acc, c)?;
        }
        Some(acc)
    }

    pub fn split(&self, s: Simplex) -> Vec<Simplex> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut cur = s;
        for p in self.stages.iter().rev() {
            let (l, r) = p.split(cur);
            out.push(r);
            cur = l;
        }
        out.push(cur);
        out.reverse();
        out
    }

    /// Projection onto factor `i`.
    pub fn projection(&self, i: usize) -> Result<SMap> {
        let target = self.factors.get(i).ok_or(Error::InvalidArgument("no such factor".into()))?.clone();
        SMap::from_fn(self.object().clone(), target, |x| Ok(self.split(Simplex::nondegenerate(x))[i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::{circle, standard};

    #[test]
    fn square_and_torus() {
        let d1 = Arc::new(standard(1));
        let sq = product(&d1, &d1).unwrap();
        assert_eq!(sq.object().census(), alloc::vec![4, 5, 2]);
        let s1 = Arc::new(circle());
        let t = product(&s1, &s1).unwrap();
        assert_eq!(t.object().census(), alloc::vec![1, 3, 2]);
        let d2 = Arc::new(standard(2));
        // Δ^2 × Δ^1 is three tetrahedra
        assert_eq!(product(&d2, &d1).unwrap().object().census(), alloc::vec![6, 12, 10, 3]);
    }

    #[test]
    fn pair_and_split_round_trip() {
        let s1 = Arc::new(circle());
        let t = product(&s1, &s1).unwrap();
        for n in 0..4 {
            for s in t.object().simplices(n) {
                let (a, b) = t.split(s);
                assert_eq!(t.pair(a, b), Some(s));
            }
        }
    }

    #[test]
    fn cube_via_many() {
        let d1 = Arc::new(standard(1));
        let cube = ProductMany::new(&[d1.clone(), d1.clone(), d1]).unwrap();
        assert_eq!(cube.object().census(), alloc::vec![8, 19, 18, 6]);
        let s = Simplex::nondegenerate(NdId::new(3, 4));
        let coords = cube.split(s);
        assert_eq!(cube.tuple(&coords), Some(s));
    }
}
