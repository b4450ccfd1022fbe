//! Iterated fibrewise suspensions `Σ^j_X Y = S^1 ⊙_X (.. ⊙_X Y)`, with the
//! new circle coordinate always in front.

use alloc::vec::Vec;

use crate::retractive::{fib_suspension, RetMap, RetSpace, SmashPoint, SmashProduct};
use crate::sset::Simplex;
use crate::Result;

/// `Y, Σ_X Y, .., Σ^h_X Y`, each level literally the tensor of the
/// previous one.
#[derive(Clone, Debug)]
pub struct SuspTower {
    bottom: RetSpace,
    stages: Vec<SmashProduct>,
}

/// A simplex of `Σ^j_X Y` off the section: base simplex, circle
/// coordinates (outermost first) and the point of `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerPoint {
    pub x: Simplex,
    pub coords: Vec<Simplex>,
    pub y: Simplex,
}

impl SuspTower {
    pub fn new(y: &RetSpace, height: usize) -> Result<Self> {
        SuspTower::starting_with(y, &[], height)
    }

    /// A tower whose first stages are given (each must suspend the one
    /// below).
    pub fn starting_with(y: &RetSpace, given: &[SmashProduct], height: usize) -> Result<Self> {
        let mut stages: Vec<SmashProduct> = given.iter().take(height).cloned().collect();
        while stages.len() < height {
            let below = stages.last().map_or(y, |s| s.space());
            stages.push(fib_suspension(below)?);
        }
        Ok(SuspTower { bottom: y.clone(), stages })
    }

    pub fn height(&self) -> usize {
        self.stages.len()
    }

    pub fn level(&self, j: usize) -> &RetSpace {
        if j == 0 {
            &self.bottom
        } else {
            self.stages[j - 1].space()
        }
    }

    /// The smash presenting level `j >= 1` as `S^1 ⊙ level(j - 1)`.
    pub fn stage(&self, j: usize) -> &SmashProduct {
        &self.stages[j - 1]
    }

    /// The simplex of level `coords.len()`; collapses onto the base when
    /// a coordinate is the basepoint.
    pub fn build(&self, x: Simplex, coords: &[Simplex], y: Simplex) -> Result<Simplex> {
        let mut cur = y;
        for (j, &t) in coords.iter().rev().enumerate() {
            cur = self.stages[j].tuple(x, &[t, cur])?;
        }
        Ok(cur)
    }

    /// Inverse of [`build`](Self::build) at level `j`; `None` on the section.
    pub fn split(&self, j: usize, s: Simplex) -> Option<TowerPoint> {
        if self.level(j).is_base(s) {
            return None;
        }
        let mut coords = Vec::with_capacity(j);
        let mut cur = s;
        let mut x = self.level(j).project(s);
        for k in (1..=j).rev() {
            match self.stages[k - 1].split(cur) {
                SmashPoint::Tuple(b, c) => {
                    x = b;
                    coords.push(c[0]);
                    cur = c[1];
                }
                SmashPoint::Base(_) => return None,
            }
        }
        Some(TowerPoint { x, coords, y: cur })
    }

    /// `Σ^j g` between levels `j` of two towers, for `g` from the bottom of
    /// `self` to the bottom of `other`.
    pub fn map_level(&self, other: &SuspTower, j: usize, g: &RetMap) -> Result<RetMap> {
        let (src, tgt) = (self.level(j), other.level(j));
        RetMap::from_fn(src, tgt, |u| {
            let s = Simplex::nondegenerate(u);
            match self.split(j, s) {
                None => Ok(tgt.base_simplex(src.project(s))),
                Some(p) => other.build(p.x, &p.coords, g.apply(p.y)),
            }
        })
    }
}
