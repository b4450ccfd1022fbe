//! Normalisation of simplicial sets given level by level.
//!
//! An `n`-simplex `z` is degenerate exactly when `z = s_j d_j z` for some
//! `j`, so the nondegenerate part can be read off from the face and
//! degeneracy operators alone.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::finsset::{FinSSet, FinSSetBuilder};
use super::simplex::{NdId, Simplex};
use crate::{Error, Result};

/// A simplicial set presented by explicit levels `0..=top`, each listing all
/// simplices (degenerate ones included).
pub trait LevelwiseSource {
    type Key: Ord + Clone;

    fn level(&self, n: usize) -> Vec<Self::Key>;
    /// `d_i` of an `n`-simplex, `n >= 1`.
    fn face(&self, n: usize, i: usize, z: &Self::Key) -> Self::Key;
    /// `s_j` of an `n`-simplex.
    fn degeneracy(&self, n: usize, j: usize, z: &Self::Key) -> Self::Key;
    fn name(&self, z: &Self::Key) -> String;
}

/// The normalised result, valid in dimensions `0..=top`.
#[derive(Clone, Debug)]
pub struct Levelwise<K> {
    object: Arc<FinSSet>,
    top: usize,
    lookup: BTreeMap<K, Simplex>,
    keys: Vec<Vec<K>>,
}

impl<K: Ord + Clone> Levelwise<K> {
    pub fn build<S: LevelwiseSource<Key = K>>(src: &S, top: usize) -> Result<Self> {
        let mut b = FinSSetBuilder::new();
        let mut lookup: BTreeMap<K, Simplex> = BTreeMap::new();
        let mut keys: Vec<Vec<K>> = Vec::new();
        for n in 0..=top {
            let mut nd_keys = Vec::new();
            for z in src.level(n) {
                if lookup.contains_key(&z) {
                    continue;
                }
                let mut found = None;
                for j in 0..n {
                    let w = src.face(n, j, &z);
                    if src.degeneracy(n - 1, j, &w) == z {
                        let base = *lookup
                            .get(&w)
                            .ok_or_else(|| Error::Mismatch("level not closed under faces".into()))?;
                        found = Some(base.degeneracy(j));
                        break;
                    }
                }
                let s = match found {
                    Some(s) => s,
                    None => {
                        let faces = if n == 0 {
                            Vec::new()
                        } else {
                            (0..=n)
                                .map(|i| {
                                    lookup
                                        .get(&src.face(n, i, &z))
                                        .copied()
                                        .ok_or_else(|| Error::Mismatch("level not closed under faces".into()))
                                })
                                .collect::<Result<Vec<_>>>()?
                        };
                        let id = b.add_fresh(src.name(&z), faces)?;
                        nd_keys.push(z.clone());
                        Simplex::nondegenerate(id)
                    }
                };
                lookup.insert(z, s);
            }
            keys.push(nd_keys);
        }
        while keys.last().is_some_and(Vec::is_empty) {
            keys.pop();
        }
        Ok(Levelwise {
            object: Arc::new(b.build()?),
            top,
            lookup,
            keys,
        })
    }

    pub fn object(&self) -> &Arc<FinSSet> {
        &self.object
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn simplex(&self, z: &K) -> Option<Simplex> {
        self.lookup.get(z).copied()
    }

    /// The key of a nondegenerate simplex.
    pub fn key(&self, x: NdId) -> &K {
        &self.keys[x.dim()][x.index()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    /// Δ^n as monotone vertex tables.
    struct Simp(usize);

    impl LevelwiseSource for Simp {
        type Key = Vec<usize>;
        fn level(&self, k: usize) -> Vec<Vec<usize>> {
            let mut out = vec![vec![]];
            for _ in 0..=k {
                let mut next = Vec::new();
                for t in &out {
                    let lo = t.last().copied().unwrap_or(0);
                    for v in lo..=self.0 {
                        let mut u = t.clone();
                        u.push(v);
                        next.push(u);
                    }
                }
                out = next;
            }
            out
        }
        fn face(&self, _: usize, i: usize, z: &Vec<usize>) -> Vec<usize> {
            let mut z = z.clone();
            z.remove(i);
            z
        }
        fn degeneracy(&self, _: usize, j: usize, z: &Vec<usize>) -> Vec<usize> {
            let mut z = z.clone();
            z.insert(j, z[j]);
            z
        }
        fn name(&self, z: &Vec<usize>) -> String {
            format!("{z:?}").replace(' ', "")
        }
    }

    #[test]
    fn recovers_standard_simplex() {
        let l = Levelwise::build(&Simp(2), 4).unwrap();
        assert_eq!(l.object().census(), vec![3, 3, 1]);
        let z = vec![0, 1, 1, 2];
        let s = l.simplex(&z).unwrap();
        assert_eq!(s.deg().indices(), vec![1]);
    }
}
