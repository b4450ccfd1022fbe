//! The prolonged fibrewise loop functor, valid up to a dimension bound.

use alloc::vec::Vec;

use super::seq::SeqSpec;
use crate::retractive::{internal_hom, sphere1, PullbackRet, RetMap, RetSpace, SectionSpace, SmashPoint};
use crate::sset::{FinSSet, NdId, SMap, Simplex};
use crate::{Error, Result};

/// `Ω_X A` with levels `F_X(X^*S^1, A_n)` through dimension `bound`.
///
/// The structure map sends `t ∧ ω` to the loop `s ↦ σ_n(s ∧ ω(t))`, the
/// choice for which `Σ_X` (prolonged without twist) is left adjoint.
#[derive(Clone, Debug)]
pub struct LoopSpec {
    spec: SeqSpec,
    circle: PullbackRet,
    sections: Vec<SectionSpace>,
}

impl LoopSpec {
    pub fn spec(&self) -> &SeqSpec {
        &self.spec
    }

    pub fn sections(&self, n: usize) -> &SectionSpace {
        &self.sections[n]
    }

    /// `ω(s)` for a simplex `ω` of `Ω_X A_n` and `s` in `S^1` of the same
    /// dimension.
    pub fn eval(&self, n: usize, w: Simplex, s: Simplex) -> Result<Simplex> {
        eval(&self.sections[n], &self.circle, w, s)
    }
}

fn eval(sec: &SectionSpace, circle: &PullbackRet, w: Simplex, s: Simplex) -> Result<Simplex> {
    let (x0, table) = sec.describe(w.nd());
    let d0 = w.nd().dim();
    let p = sec.domain(x0);
    let theta = Simplex::nondegenerate(NdId::new(d0, 0)).degenerate(w.deg());
    let a = circle.elem(x0.degenerate(w.deg()), s).ok_or(Error::Mismatch("loop coordinate of the wrong dimension".into()))?;
    let q = p.pair(a, theta).ok_or(Error::Mismatch("not a simplex of the section domain".into()))?;
    Ok(table[q.nd().dim()][q.nd().index()].degenerate(q.deg()))
}

fn monotone_of(delta: &FinSSet, s: Simplex) -> Vec<usize> {
    (0..=s.dim()).map(|k| delta.vertex(s, k).index()).collect()
}

/// `Ω_X A` through dimension `bound`, which must be at least the dimension
/// of the base.
pub fn loop_spec(a: &SeqSpec, bound: usize) -> Result<LoopSpec> {
    if a.bound().is_some() {
        return Err(Error::InvalidArgument("loops of a truncated spectrum".into()));
    }
    let circle = PullbackRet::of_pointed(a.base(), &sphere1())?;
    let sections: Vec<SectionSpace> = a.levels().iter().map(|l| internal_hom(circle.space(), l, bound)).collect::<Result<_>>()?;
    let levels: Vec<RetSpace> = sections.iter().map(|s| s.space().clone()).collect();
    let s1 = circle.source().total().clone();
    let spec = SeqSpec::from_fn(levels, Some(bound), |n, outer, src, tgt| {
        let (here, next) = (&sections[n], &sections[n + 1]);
        let total = here.space().total().clone();
        RetMap::from_fn(src, tgt, |u| match outer.split(Simplex::nondegenerate(u)) {
            SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
            SmashPoint::Tuple(x, c) => {
                let (t, w) = (c[0], c[1]);
                let p = next.domain(x);
                let right = p.right().clone();
                let delta = right.target().clone();
                let section = SMap::from_fn(p.object().clone(), a.level(n + 1).total().clone(), |q| {
                    let (cell, th) = p.split(Simplex::nondegenerate(q));
                    let (xt, s) = circle.split(cell);
                    let theta = monotone_of(&delta, th);
                    let wt = total.apply(w, &theta)?;
                    let tt = s1.apply(t, &theta)?;
                    let v = eval(here, &circle, wt, tt)?;
                    a.sigma(n, xt, s, v)
                })?;
                next.simplex(x, &section).ok_or(Error::BeyondTruncation(x.dim()))
            }
        })
    })?;
    Ok(LoopSpec { spec, circle, sections })
}
