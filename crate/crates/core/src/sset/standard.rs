//! Simplices, boundaries, horns and the circle.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::finsset::{FinSSet, FinSSetBuilder};
use super::simplex::{NdId, Simplex};
use super::smap::SMap;
use crate::{Error, Result};

fn subset_name(n: usize, s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|v| alloc::format!("{v}")).collect();
    if n < 10 {
        parts.concat()
    } else {
        parts.join(",")
    }
}

fn increasing_subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    go(0, n, size, &mut cur, &mut out);
    out
}

/// The subcomplex of `Δ^n` whose simplices are the vertex sets accepted by
/// `keep`, which must be closed under taking subsets.
pub fn simplicial_complex(n: usize, keep: impl Fn(&[usize]) -> bool) -> FinSSet {
    let mut b = FinSSetBuilder::new();
    let mut ids: BTreeMap<Vec<usize>, NdId> = BTreeMap::new();
    for size in 1..=n + 1 {
        for s in increasing_subsets(n, size) {
            if !keep(&s) {
                continue;
            }
            let faces = if size == 1 {
                Vec::new()
            } else {
                (0..size)
                    .map(|i| {
                        let mut f = s.clone();
                        f.remove(i);
                        Simplex::nondegenerate(ids[&f])
                    })
                    .collect()
            };
            let id = b.add(subset_name(n, &s), faces).expect("complex names are distinct");
            ids.insert(s, id);
        }
    }
    b.build().expect("a simplicial complex satisfies the identities")
}

/// The standard `n`-simplex.
pub fn standard(n: usize) -> FinSSet {
    simplicial_complex(n, |_| true)
}

/// `∂Δ^n`; empty for `n = 0`.
pub fn boundary(n: usize) -> FinSSet {
    simplicial_complex(n, |s| s.len() <= n)
}

/// The horn `Λ^n_k`: the boundary without its `k`-th face.
pub fn horn(n: usize, k: usize) -> Result<FinSSet> {
    if n == 0 || k > n {
        return Err(Error::InvalidArgument(alloc::format!("no horn Λ^{n}_{k}")));
    }
    Ok(simplicial_complex(n, |s| s.len() <= n && !(s.len() == n && !s.contains(&k))))
}

pub fn point() -> FinSSet {
    standard(0)
}

/// `Δ^1/∂Δ^1`: one vertex `*` and one edge `e`.
pub fn circle() -> FinSSet {
    let mut b = FinSSetBuilder::new();
    let v = Simplex::nondegenerate(b.add("*", Vec::new()).expect("fresh"));
    b.add("e", alloc::vec![v, v]).expect("fresh");
    b.build().expect("circle")
}

/// `Δ^n/∂Δ^n`: one vertex and one `n`-simplex, `n >= 1`.
pub fn sphere(n: usize) -> FinSSet {
    let mut b = FinSSetBuilder::new();
    let v = Simplex::nondegenerate(b.add("*", Vec::new()).expect("fresh"));
    b.add("e", alloc::vec![v.lift(n - 1); n + 1]).expect("fresh");
    b.build().expect("sphere")
}

/// Two points `*` and `1`, pointed at `*`.
pub fn two_points() -> FinSSet {
    let mut b = FinSSetBuilder::new();
    b.add("*", Vec::new()).expect("fresh");
    b.add("1", Vec::new()).expect("fresh");
    b.build().expect("S^0")
}

/// The vertex set of a simplex of `Δ^n`.
fn vertex_set(delta: &FinSSet, s: Simplex) -> Vec<usize> {
    let k = s.dim();
    (0..=k).map(|i| delta.vertex(s, i).index()).collect()
}

/// The map `Δ^n -> X` classifying the `n`-simplex `s`.
pub fn yoneda(x: &Arc<FinSSet>, s: Simplex) -> Result<SMap> {
    if !x.contains(s) {
        return Err(Error::ForeignSimplex);
    }
    let n = s.dim();
    let delta = Arc::new(standard(n));
    let d = delta.clone();
    SMap::from_fn(delta, x.clone(), move |y| {
        let verts = vertex_set(&d, Simplex::nondegenerate(y));
        Ok(x.apply_unchecked(s, &verts))
    })
}

/// Inclusion of a subcomplex of `Δ^n` built by [`simplicial_complex`].
pub fn subcomplex_inclusion(sub: &Arc<FinSSet>, n: usize) -> SMap {
    let delta = Arc::new(standard(n));
    let d = delta.clone();
    SMap::from_fn(sub.clone(), delta, |y| {
        d.find(sub.name(y)).map(Simplex::nondegenerate).ok_or(Error::UnknownSimplex(sub.name(y).into()))
    })
    .expect("subcomplex names match")
}

pub fn boundary_inclusion(n: usize) -> SMap {
    subcomplex_inclusion(&Arc::new(boundary(n)), n)
}

pub fn horn_inclusion(n: usize, k: usize) -> Result<SMap> {
    Ok(subcomplex_inclusion(&Arc::new(horn(n, k)?), n))
}

/// The coface `δ^i: Δ^{n-1} -> Δ^n`.
pub fn coface(n: usize, i: usize) -> Result<SMap> {
    if n == 0 || i > n {
        return Err(Error::InvalidArgument(alloc::format!("no coface δ^{i} into Δ^{n}")));
    }
    let target = Arc::new(standard(n));
    yoneda(&target, target.face(Simplex::nondegenerate(NdId::new(n, 0)), i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(standard(2).census(), alloc::vec![3, 3, 1]);
        assert_eq!(standard(2).total_count(), 7);
        assert_eq!(boundary(1).total_count(), 2);
        assert_eq!(boundary(0).total_count(), 0);
        assert_eq!(horn(2, 1).unwrap().total_count(), 5);
        assert_eq!(horn(3, 0).unwrap().census(), alloc::vec![4, 6, 3]);
        assert!(horn(0, 0).is_err());
        assert_eq!(circle().census(), alloc::vec![1, 1]);
    }

    #[test]
    fn level_sizes_of_simplex() {
        // k-simplices of Δ^n are monotone maps [k] -> [n], C(n+k+1, k+1) of them.
        let d2 = standard(2);
        assert_eq!(d2.level_size(0), 3);
        assert_eq!(d2.level_size(1), 6);
        assert_eq!(d2.level_size(2), 10);
        assert_eq!(d2.level_size(3), 15);
    }

    #[test]
    fn yoneda_of_degenerate() {
        let c = Arc::new(circle());
        let e = Simplex::nondegenerate(NdId::new(1, 0));
        let m = yoneda(&c, e.degeneracy(1)).unwrap();
        assert_eq!(m.source().census(), alloc::vec![3, 3, 1]);
        let faces: Vec<Simplex> = m.images()[1].clone();
        // edges 01, 02, 12 go to e, e, s0(*)
        assert_eq!(faces[0], e);
        assert_eq!(faces[1], e);
        assert_eq!(faces[2], Simplex::nondegenerate(NdId::new(0, 0)).degeneracy(0));
        let c2 = coface(2, 1).unwrap();
        assert!(c2.is_mono());
    }
}
