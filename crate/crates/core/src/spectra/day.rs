//! Day convolution of symmetric sequences and the smash product of
//! symmetric spectra, fibrewise over one base or external over a product.
//!
//! `(A ⊗ B)(n)` is the wedge over `p + q = n` and `(p, q)`-shuffles `χ` of
//! `A(p) ∧ B(q)`; a simplex `[χ; a, b]` puts the slots of `a` before those
//! of `b` and then moves slot `i` to `χ(i)`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::perm::{block_decompose, block_shuffles, Perm};
use super::seq::SeqSpec;
use super::sym::{FreeSym, GAction, SphereSym, SymMor, SymSeq, SymSpec};
use super::tsp::iterate_sigma;
use crate::global::{ExtPoint, ExtSmash, GlobObj};
use crate::retractive::{sphere1, PullbackRet, RetMap, RetSpace, SmashFactor, SmashPoint, SmashProduct, Wedge, WedgePoint};
use crate::sset::{coequalizer, Colimit, FinSSet, SMap, Simplex};
use crate::{Error, Result};

/// How the two factors of a Day convolution are smashed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// `∧_X` over a common base.
    Fibrewise,
    /// `△` over the product of the bases.
    External,
}

#[derive(Clone, Debug)]
enum Paired {
    Fib(SmashProduct),
    Ext(ExtSmash),
}

impl Paired {
    fn new(pairing: Pairing, a: &RetSpace, b: &RetSpace) -> Result<Self> {
        Ok(match pairing {
            Pairing::Fibrewise => Paired::Fib(SmashProduct::pair(a, b)?),
            Pairing::External => Paired::Ext(ExtSmash::new(&GlobObj::new(a.clone()), &GlobObj::new(b.clone()))?),
        })
    }

    fn space(&self) -> &RetSpace {
        match self {
            Paired::Fib(s) => s.space(),
            Paired::Ext(e) => e.space(),
        }
    }

    fn tuple(&self, a: Simplex, b: Simplex) -> Result<Simplex> {
        match self {
            Paired::Fib(s) => s.tuple(s.factor(0).project(a), &[a, b]),
            Paired::Ext(e) => e.tuple(a, b),
        }
    }

    fn split(&self, s: Simplex) -> Option<(Simplex, Simplex)> {
        match self {
            Paired::Fib(p) => match p.split(s) {
                SmashPoint::Base(_) => None,
                SmashPoint::Tuple(_, c) => Some((c[0], c[1])),
            },
            Paired::Ext(e) => match e.split(s) {
                ExtPoint::Base(_) => None,
                ExtPoint::Pair(a, b) => Some((a, b)),
            },
        }
    }
}

/// A simplex of a Day convolution off the section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DayPoint {
    pub p: usize,
    pub shuffle: Perm,
    pub a: Simplex,
    pub b: Simplex,
}

#[derive(Clone, Debug)]
struct DayLevel {
    wedge: Wedge,
    summands: Vec<(usize, Perm)>,
    lookup: BTreeMap<(usize, Vec<usize>), usize>,
    pairs: Vec<Paired>,
}

/// `A ⊗ B` for symmetric sequences truncated at the same level.
#[derive(Clone, Debug)]
pub struct DayConv {
    pairing: Pairing,
    left: SymSeq,
    right: SymSeq,
    levels: Vec<DayLevel>,
    seq: SymSeq,
}

impl DayConv {
    pub fn new(a: &SymSeq, b: &SymSeq, pairing: Pairing) -> Result<Self> {
        if a.trunc() != b.trunc() {
            return Err(Error::Mismatch("Day convolution of different truncations".into()));
        }
        if pairing == Pairing::Fibrewise && !crate::sset::same(a.base(), b.base()) {
            return Err(Error::NotOverBase("fibrewise Day convolution over different bases".into()));
        }
        let mut levels = Vec::new();
        for n in 0..=a.trunc() {
            let pairs: Vec<Paired> = (0..=n).map(|p| Paired::new(pairing, a.level(p), b.level(n - p))).collect::<Result<_>>()?;
            let base = pairs[0].space().base().clone();
            let mut summands = Vec::new();
            let mut spaces = Vec::new();
            let mut lookup = BTreeMap::new();
            for (p, pair) in pairs.iter().enumerate() {
                for chi in block_shuffles(&[p, n - p]) {
                    lookup.insert((p, chi.images().to_vec()), summands.len());
                    summands.push((p, chi));
                    spaces.push(pair.space().clone());
                }
            }
            let wedge = Wedge::new(&base, &spaces)?;
            levels.push(DayLevel { wedge, summands, lookup, pairs });
        }
        let mut d = DayConv {
            pairing,
            left: a.clone(),
            right: b.clone(),
            levels,
            seq: SymSeq::unit(a.base(), 0),
        };
        let actions = (0..=a.trunc())
            .map(|n| {
                GAction::from_fn(d.level(n), n, |i, s| match d.split(n, s) {
                    None => Ok(s),
                    Some(pt) => d.elem(n, &Perm::transposition(n, i).compose(&pt.shuffle), pt.p, pt.a, pt.b),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        d.seq = SymSeq::new(actions)?;
        Ok(d)
    }

    pub fn pairing(&self) -> Pairing {
        self.pairing
    }

    pub fn left(&self) -> &SymSeq {
        &self.left
    }

    pub fn right(&self) -> &SymSeq {
        &self.right
    }

    pub fn seq(&self) -> &SymSeq {
        &self.seq
    }

    pub fn trunc(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn base(&self) -> &Arc<FinSSet> {
        self.levels[0].wedge.space().base()
    }

    pub fn level(&self, n: usize) -> &RetSpace {
        self.levels[n].wedge.space()
    }

    pub fn summand_count(&self, n: usize) -> usize {
        self.levels[n].summands.len()
    }

    /// `[g; a, b]` for any `g ∈ Σ_n`, with `a ∈ A(p)`, reduced to a shuffle.
    pub fn elem(&self, n: usize, g: &Perm, p: usize, a: Simplex, b: Simplex) -> Result<Simplex> {
        if p > n || g.len() != n {
            return Err(Error::Mismatch("not a summand of this level".into()));
        }
        let (chi, hs) = block_decompose(g, &[p, n - p]);
        let a = self.left.act(p, &hs[0], a);
        let b = self.right.act(n - p, &hs[1], b);
        let l = &self.levels[n];
        let i = l.lookup[&(p, chi.images().to_vec())];
        Ok(l.wedge.inject(i, l.pairs[p].tuple(a, b)?))
    }

    pub fn split(&self, n: usize, s: Simplex) -> Option<DayPoint> {
        let l = &self.levels[n];
        match l.wedge.split(s) {
            WedgePoint::Base(_) => None,
            WedgePoint::Summand(i, u) => {
                let (p, chi) = &l.summands[i];
                l.pairs[*p].split(u).map(|(a, b)| DayPoint {
                    p: *p,
                    shuffle: chi.clone(),
                    a,
                    b,
                })
            }
        }
    }

    /// A map out of level `n` given on decomposed simplices.
    pub fn map_level(&self, n: usize, target: &RetSpace, mut f: impl FnMut(&DayPoint) -> Result<Simplex>) -> Result<SMap> {
        let src = self.level(n);
        SMap::from_fn(src.total().clone(), target.total().clone(), |u| {
            let s = Simplex::nondegenerate(u);
            match self.split(n, s) {
                None => Ok(target.base_simplex(src.project(s))),
                Some(pt) => f(&pt),
            }
        })
    }
}

fn ret_maps(src: &DayConv, tgt: &[RetSpace], maps: Vec<SMap>) -> Result<Vec<RetMap>> {
    maps.into_iter().enumerate().map(|(n, m)| RetMap::new(src.level(n).clone(), tgt[n].clone(), m)).collect()
}

fn levels_of(s: &SymSeq) -> Vec<RetSpace> {
    (0..=s.trunc()).map(|n| s.level(n).clone()).collect()
}

/// `U ⊗ B -> B` for `U` the unit sequence on the left.
pub fn day_unit_left(d: &DayConv) -> Result<Vec<RetMap>> {
    let b = d.right();
    let maps = (0..=d.trunc())
        .map(|n| d.map_level(n, b.level(n), |pt| Ok(pt.b)))
        .collect::<Result<Vec<_>>>()?;
    ret_maps(d, &levels_of(b), maps)
}

/// `A ⊗ B -> B ⊗ A`, moving the block of `b` in front.
pub fn day_symmetry(ab: &DayConv, ba: &DayConv) -> Result<Vec<RetMap>> {
    let maps = (0..=ab.trunc())
        .map(|n| {
            ab.map_level(n, ba.level(n), |pt| {
                let q = n - pt.p;
                ba.elem(n, &pt.shuffle.compose(&Perm::block_swap(q, pt.p)), q, pt.b, pt.a)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ret_maps(ab, &levels_of(ba.seq()), maps)
}

/// `(A ⊗ B) ⊗ C -> A ⊗ (B ⊗ C)`.
pub fn day_assoc(ab: &DayConv, ab_c: &DayConv, bc: &DayConv, a_bc: &DayConv) -> Result<Vec<RetMap>> {
    let maps = (0..=ab_c.trunc())
        .map(|n| {
            ab_c.map_level(n, a_bc.level(n), |pt| {
                let pq = pt.p;
                let r = n - pq;
                let Some(inner) = ab.split(pq, pt.a) else {
                    return Ok(a_bc.level(n).base_simplex(ab_c.level(n).project(ab_c.elem(n, &pt.shuffle, pq, pt.a, pt.b)?)));
                };
                let (p, q) = (inner.p, pq - inner.p);
                let g = pt.shuffle.compose(&inner.shuffle.block_sum(&Perm::identity(r)));
                let bcs = bc.elem(q + r, &Perm::identity(q + r), q, inner.b, pt.b)?;
                a_bc.elem(n, &g, p, inner.a, bcs)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ret_maps(ab_c, &levels_of(a_bc.seq()), maps)
}

/// `f ⊗ g` for levelwise equivariant maps.
pub fn day_map(src: &DayConv, tgt: &DayConv, f: &[RetMap], g: &[RetMap]) -> Result<Vec<RetMap>> {
    let maps = (0..=src.trunc())
        .map(|n| tgt_map(src, tgt, n, f, g))
        .collect::<Result<Vec<_>>>()?;
    ret_maps(src, &levels_of(tgt.seq()), maps)
}

fn tgt_map(src: &DayConv, tgt: &DayConv, n: usize, f: &[RetMap], g: &[RetMap]) -> Result<SMap> {
    src.map_level(n, tgt.level(n), |pt| tgt.elem(n, &pt.shuffle, pt.p, f[pt.p].apply(pt.a), g[n - pt.p].apply(pt.b)))
}

/// The multiplication `𝕊 ⊗ 𝕊 -> 𝕊`, concatenating circle coordinates.
pub fn sphere_mult(s: &SphereSym, d: &DayConv) -> Result<Vec<RetMap>> {
    let maps = (0..=d.trunc())
        .map(|n| {
            d.map_level(n, s.spec().level(n), |pt| {
                let q = n - pt.p;
                match (s.split(pt.p, pt.a), s.split(q, pt.b)) {
                    (Some((x, mut ca)), Some((_, cb))) => {
                        ca.extend(cb);
                        s.elem(n, x, &pt.shuffle.act(&ca))
                    }
                    _ => Err(Error::Mismatch("section point in a smash summand".into())),
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ret_maps(d, &levels_of(s.spec().actions()), maps)
}

/// The unit `U -> 𝕊`.
pub fn sphere_unit(s: &SphereSym, u: &SymSeq) -> Result<Vec<RetMap>> {
    (0..=u.trunc())
        .map(|n| {
            if n == 0 {
                RetMap::new(u.level(0).clone(), s.spec().level(0).clone(), SMap::identity(u.level(0).total()))
            } else {
                RetMap::zero(u.level(n), s.spec().level(n))
            }
        })
        .collect()
}

/// The domain `A ⊗ 𝕊 ⊗ B` of the two actions, with the middle factor
/// merged into `B`: level `n` is the wedge over `p + r + q = n` and
/// `(p, r, q)`-shuffles of `A(p) ∧ (S^r ⊙ B(q))`.
#[derive(Clone, Debug)]
struct Middle {
    wedge: Wedge,
    summands: Vec<(usize, usize, Perm)>,
    pairs: BTreeMap<(usize, usize), (Paired, Option<SmashProduct>)>,
}

impl Middle {
    fn new(a: &SymSpec, b: &SymSpec, pairing: Pairing, n: usize) -> Result<Self> {
        let mut pairs = BTreeMap::new();
        let mut summands = Vec::new();
        let mut spaces = Vec::new();
        let mut base = None;
        for p in 0..=n {
            for r in 0..=n - p {
                let q = n - p - r;
                let (inner, right) = if r == 0 {
                    (None, b.level(q).clone())
                } else {
                    let mut factors: Vec<SmashFactor> = (0..r).map(|_| SmashFactor::Pointed(sphere1())).collect();
                    factors.push(SmashFactor::Fibre(b.level(q).clone()));
                    let t = SmashProduct::new(b.base(), &factors)?;
                    let sp = t.space().clone();
                    (Some(t), sp)
                };
                let pair = Paired::new(pairing, a.level(p), &right)?;
                base.get_or_insert_with(|| pair.space().base().clone());
                for chi in block_shuffles(&[p, r, q]) {
                    summands.push((p, r, chi));
                    spaces.push(pair.space().clone());
                }
                pairs.insert((p, r), (pair, inner));
            }
        }
        let wedge = Wedge::new(&base.expect("n >= 0"), &spaces)?;
        Ok(Middle { wedge, summands, pairs })
    }

    /// `(p, r, χ, a, circles, b)` for a simplex off the section.
    fn split(&self, s: Simplex) -> Option<(usize, usize, Perm, Simplex, Vec<Simplex>, Simplex)> {
        let WedgePoint::Summand(i, u) = self.wedge.split(s) else {
            return None;
        };
        let (p, r, chi) = &self.summands[i];
        let (pair, inner) = &self.pairs[&(*p, *r)];
        let (a, v) = pair.split(u)?;
        match inner {
            None => Some((*p, *r, chi.clone(), a, Vec::new(), v)),
            Some(t) => match t.split(v) {
                SmashPoint::Base(_) => None,
                SmashPoint::Tuple(_, mut c) => {
                    let b = c.pop().expect("the B coordinate");
                    Some((*p, *r, chi.clone(), a, c, b))
                }
            },
        }
    }
}

/// `A ∧ B` (fibrewise) or `A △ B` (external) of symmetric spectra: the
/// coequalizer of the two actions of `𝕊` on `A ⊗ B`.
#[derive(Clone, Debug)]
pub struct SymSmash {
    left: SymSpec,
    right: SymSpec,
    day: DayConv,
    quotients: Vec<Colimit>,
    spec: SymSpec,
}

impl SymSmash {
    pub fn new(a: &SymSpec, b: &SymSpec, pairing: Pairing) -> Result<Self> {
        let day = DayConv::new(a.actions(), b.actions(), pairing)?;
        let nn = day.trunc();
        let mut quotients = Vec::with_capacity(nn + 1);
        let mut levels = Vec::with_capacity(nn + 1);
        for n in 0..=nn {
            let m = Middle::new(a, b, pairing, n)?;
            let d = day.level(n);
            let msp = m.wedge.space();
            let act = |right: bool| -> Result<SMap> {
                SMap::from_fn(msp.total().clone(), d.total().clone(), |u| {
                    let s = Simplex::nondegenerate(u);
                    let Some((p, r, chi, x, ts, y)) = m.split(s) else {
                        return Ok(d.base_simplex(msp.project(s)));
                    };
                    let q = n - p - r;
                    if right {
                        let xb = b.level(q).project(y);
                        let by = iterate_sigma(b.seq(), q, xb, &ts, y)?;
                        day.elem(n, &chi, p, x, by)
                    } else {
                        let xa = a.level(p).project(x);
                        let sa = iterate_sigma(a.seq(), p, xa, &ts, x)?;
                        let ax = a.act(p + r, &Perm::block_swap(r, p), sa);
                        day.elem(n, &chi, p + r, ax, y)
                    }
                })
            };
            let (f, g) = (act(true)?, act(false)?);
            let c = coequalizer(&f, &g)?;
            let base = d.base().clone();
            let retraction = c.factor_partial(&base, &[None, Some(d.retraction())])?;
            let q = RetSpace::new(c.cocone(1).compose(d.section())?, retraction)?;
            levels.push(q);
            quotients.push(c);
        }
        let seq = SeqSpec::from_fn(levels.clone(), None, |n, outer, src, tgt| {
            RetMap::from_fn(src, tgt, |u| match outer.split(Simplex::nondegenerate(u)) {
                SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
                SmashPoint::Tuple(x, c) => match lift(&day, &quotients[n], n, c[1]) {
                    None => Ok(tgt.base_simplex(x)),
                    Some(pt) => {
                        let xa = a.level(pt.p).project(pt.a);
                        let sa = a.sigma(pt.p, xa, c[0], pt.a)?;
                        let v = day.elem(n + 1, &Perm::identity(1).block_sum(&pt.shuffle), pt.p + 1, sa, pt.b)?;
                        Ok(quotients[n + 1].inject(1, v))
                    }
                },
            })
        })?;
        let actions = levels
            .iter()
            .enumerate()
            .map(|(n, l)| {
                let sq = &quotients[n];
                let gens = (0..n.saturating_sub(1))
                    .map(|i| {
                        let through = sq.cocone(1).compose(day.seq().action(n).generator(i).map())?;
                        RetMap::new(l.clone(), l.clone(), sq.factor_partial(l.total(), &[None, Some(&through)])?)
                    })
                    .collect::<Result<Vec<_>>>()?;
                GAction::new(l.clone(), n, gens)
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = SymSpec::new(seq, actions)?;
        Ok(SymSmash {
            left: a.clone(),
            right: b.clone(),
            day,
            quotients,
            spec,
        })
    }

    pub fn spec(&self) -> &SymSpec {
        &self.spec
    }

    pub fn day(&self) -> &DayConv {
        &self.day
    }

    pub fn left(&self) -> &SymSpec {
        &self.left
    }

    pub fn right(&self) -> &SymSpec {
        &self.right
    }

    /// The class of a simplex of `A ⊗ B`.
    pub fn project(&self, n: usize, d: Simplex) -> Simplex {
        self.quotients[n].inject(1, d)
    }

    /// A simplex of `A ⊗ B` representing `s`, decomposed.
    pub fn lift(&self, n: usize, s: Simplex) -> Option<DayPoint> {
        lift(&self.day, &self.quotients[n], n, s)
    }

    /// The map out of level `n` induced by one on `A ⊗ B`, given on
    /// decomposed simplices.
    pub fn descend(&self, n: usize, target: &RetSpace, f: impl FnMut(&DayPoint) -> Result<Simplex>) -> Result<RetMap> {
        let on_day = self.day.map_level(n, target, f)?;
        let m = self.quotients[n].factor_partial(target.total(), &[None, Some(&on_day)])?;
        RetMap::new(self.spec.level(n).clone(), target.clone(), m)
    }
}

fn lift(day: &DayConv, quotient: &Colimit, n: usize, s: Simplex) -> Option<DayPoint> {
    // every class of the middle term also meets A ⊗ B
    let m = quotient.members(s.nd()).iter().find(|m| m.object == 1)?;
    day.split(n, m.simplex.degenerate(s.deg()))
}

/// `A ∧_X B`.
pub fn fib_smash_sym(a: &SymSpec, b: &SymSpec) -> Result<SymSmash> {
    SymSmash::new(a, b, Pairing::Fibrewise)
}

/// `(X, A) △ (X', B)` over `X × X'`.
pub fn ext_smash_sym(a: &SymSpec, b: &SymSpec) -> Result<SymSmash> {
    SymSmash::new(a, b, Pairing::External)
}

/// `X^*𝕊 ∧_X B -> B`, `[χ; s, b] ↦ χ·σ(s ∧ b)`.
pub fn smash_unit_left(sm: &SymSmash, sphere: &SphereSym) -> Result<SymMor> {
    if sm.day.pairing() != Pairing::Fibrewise {
        return Err(Error::InvalidArgument("the unit map is fibrewise".into()));
    }
    let b = sm.right();
    let maps = (0..=sm.spec().trunc())
        .map(|n| {
            let tgt = b.level(n);
            let on_day = sm.day.map_level(n, tgt, |pt| {
                let q = n - pt.p;
                let (_, cs) = sphere.split(pt.p, pt.a).ok_or(Error::Mismatch("section point in a smash summand".into()))?;
                let xb = b.level(q).project(pt.b);
                Ok(b.act(n, &pt.shuffle, iterate_sigma(b.seq(), q, xb, &cs, pt.b)?))
            })?;
            RetMap::new(sm.spec().level(n).clone(), tgt.clone(), sm.quotients[n].factor_partial(tgt.total(), &[None, Some(&on_day)])?)
        })
        .collect::<Result<Vec<_>>>()?;
    SymMor::new(sm.spec(), b, maps)
}

/// `𝚺^{∞-k}Y ∧ 𝚺^{∞-l}Z -> 𝚺^{∞-(k+l)}(Y ∧ Z)` (or `△`), where `target`
/// is free on `pair`, the smash of the two generators.
pub fn free_smash_compare(sm: &SymSmash, fy: &FreeSym, fz: &FreeSym, pair: &PairedGen, target: &FreeSym) -> Result<SymMor> {
    let (k, l) = (fy.k(), fz.k());
    let maps = (0..=sm.spec().trunc())
        .map(|n| {
            let tgt = target.level(n);
            sm.descend(n, tgt, |pt| {
                let (p, q) = (pt.p, n - pt.p);
                let (Some(a), Some(b)) = (fy.split(p, pt.a), fz.split(q, pt.b)) else {
                    return Err(Error::Mismatch("section point in a smash summand".into()));
                };
                // slots of the source: (s, y, s', z); of the target: (s, s', y, z)
                let (sa, sb) = (p - k, q - l);
                let mut beta = Vec::with_capacity(n);
                beta.extend(0..sa);
                beta.extend(p..p + sb);
                beta.extend(sa..p);
                beta.extend(p + sb..n);
                let beta = Perm::from_images(beta)?;
                let g = pt.shuffle.compose(&a.rep.block_sum(&b.rep)).compose(&beta);
                let mut cs = a.coords.clone();
                cs.extend(b.coords.iter().copied());
                let (x, w) = pair.tuple(a.x, b.x, a.y, b.y)?;
                target.elem(n, &g, x, &cs, w)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SymMor::new(sm.spec(), target.spec(), maps)
}

/// The smash `Y ∧_X Z` or `Y △ Z` of two generators.
#[derive(Clone, Debug)]
pub struct PairedGen(Paired);

impl PairedGen {
    pub fn new(pairing: Pairing, y: &RetSpace, z: &RetSpace) -> Result<Self> {
        Ok(PairedGen(Paired::new(pairing, y, z)?))
    }

    pub fn space(&self) -> &RetSpace {
        self.0.space()
    }

    fn tuple(&self, x: Simplex, x2: Simplex, y: Simplex, z: Simplex) -> Result<(Simplex, Simplex)> {
        let w = self.0.tuple(y, z)?;
        let base = match &self.0 {
            Paired::Fib(_) => x,
            Paired::Ext(e) => e.base_pair(x, x2)?,
        };
        Ok((base, w))
    }
}

/// `x^*A ∧ y^*B -> (x, y)^*(A △ B)` over the point, for `ext` the external
/// smash, `fib` the smash of the strict fibres and `fibre` the pulled-back
/// external smash.
pub fn strict_fibre_compare(
    ext: &SymSmash,
    fib: &SymSmash,
    pulls: (&[PullbackRet], &[PullbackRet]),
    fibre: (&SymSpec, &[PullbackRet]),
) -> Result<SymMor> {
    let (pa, pb) = pulls;
    let (target, pulled) = fibre;
    let maps = (0..=fib.spec().trunc())
        .map(|n| {
            let tgt = target.level(n);
            fib.descend(n, tgt, |pt| {
                let (xo, a) = pa[pt.p].split(pt.a);
                let (_, b) = pb[n - pt.p].split(pt.b);
                let v = ext.day.elem(n, &pt.shuffle, pt.p, a, b)?;
                pulled[n].elem(xo, ext.project(n, v)).ok_or(Error::NotOverBase("not over the chosen point".into()))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SymMor::new(fib.spec(), target, maps)
}
