//! Čech nerves of abstract covers.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::sset::{simplicial_complex, FinSSet};
use crate::{Error, Result};

/// A cover by finitely many sets, given by which subfamilies meet.
pub struct Cover<'a> {
    pub sets: usize,
    pub meets: &'a dyn Fn(&[usize]) -> bool,
}

/// Members of each set of a concrete cover.
pub fn meets_of(sets: &[BTreeSet<u32>]) -> impl Fn(&[usize]) -> bool + '_ {
    move |idx: &[usize]| match idx.split_first() {
        None => true,
        Some((&first, rest)) => sets[first].iter().any(|p| rest.iter().all(|&k| sets[k].contains(p))),
    }
}

/// The nerve, with vertices ordered by index: a `k`-simplex is an
/// increasing `(k+1)`-tuple of sets with a common point, and the repeated
/// tuples are its degeneracies.
pub fn cech_nerve(cover: &Cover<'_>) -> Result<FinSSet> {
    if cover.sets == 0 {
        return Ok(FinSSet::empty());
    }
    let n = cover.sets - 1;
    let subsets = increasing(cover.sets);
    for s in subsets.iter().filter(|s| (cover.meets)(s)) {
        for i in 0..s.len() {
            let mut f = s.clone();
            f.remove(i);
            if !f.is_empty() && !(cover.meets)(&f) {
                return Err(Error::InvalidArgument(format!("{s:?} meets but its face {f:?} does not")));
            }
        }
    }
    Ok(simplicial_complex(n, |s| (cover.meets)(s)))
}

fn increasing(n: usize) -> Vec<Vec<usize>> {
    (1u64..1 << n).map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect()).collect()
}
