//! Symmetric sequences and symmetric spectra: `Σ_n`-actions given by the
//! adjacent transpositions, the sphere, and the free functors.
//!
//! A permutation `g` moves the coordinate in slot `i` to slot `g(i)`. In
//! `S^p ⊙ A(q) -> A(p+q)` the circles fill the first `p` slots, and the new
//! circle of a structure map always enters in slot 0.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::change::{pull_spec, PullSpec};
use super::perm::{coset_decompose, coset_reps, Perm};
use super::seq::{SeqMor, SeqSpec};
use super::tsp::iterate_sigma;
use crate::retractive::{fib_suspension, sphere1, RetMap, RetSpace, SmashFactor, SmashPoint, SmashProduct, Wedge, WedgePoint};
use crate::sset::{same, FinSSet, SMap, Simplex};
use crate::{Error, Result};

/// A `Σ_n`-action on a retractive space, stored as the images of the
/// adjacent transpositions `τ_0, .., τ_{n-2}`.
#[derive(Clone, Debug)]
pub struct GAction {
    space: RetSpace,
    degree: usize,
    gens: Vec<RetMap>,
}

impl GAction {
    /// Checks the Coxeter relations among the generators.
    pub fn new(space: RetSpace, degree: usize, gens: Vec<RetMap>) -> Result<Self> {
        if gens.len() != degree.saturating_sub(1) {
            return Err(Error::Mismatch(alloc::format!("Σ_{degree} needs {} generators", degree.saturating_sub(1))));
        }
        let mut own = Vec::with_capacity(gens.len());
        for g in gens {
            if !same(g.source().total(), space.total()) || !same(g.target().total(), space.total()) {
                return Err(Error::Mismatch("generator is not an endomorphism of the space".into()));
            }
            own.push(RetMap::new(space.clone(), space.clone(), g.map().clone())?);
        }
        let id = SMap::identity(space.total());
        let power = |f: &SMap, k: usize| -> Result<SMap> {
            let mut acc = id.clone();
            for _ in 0..k {
                acc = f.compose(&acc)?;
            }
            Ok(acc)
        };
        for i in 0..own.len() {
            let t = own[i].map();
            if power(t, 2)? != id {
                return Err(Error::NotFactorable(alloc::format!("τ_{i} is not an involution")));
            }
            for (j, u) in own.iter().enumerate().skip(i + 1) {
                let tu = t.compose(u.map())?;
                let expect = if j == i + 1 { 3 } else { 2 };
                if power(&tu, expect)? != id {
                    return Err(Error::NotFactorable(alloc::format!("relation between τ_{i} and τ_{j} fails")));
                }
            }
        }
        Ok(GAction { space, degree, gens: own })
    }

    /// Generators given pointwise by `f(i, s)`.
    pub fn from_fn(space: &RetSpace, degree: usize, mut f: impl FnMut(usize, Simplex) -> Result<Simplex>) -> Result<Self> {
        let gens = (0..degree.saturating_sub(1))
            .map(|i| RetMap::from_fn(space, space, |u| f(i, Simplex::nondegenerate(u))))
            .collect::<Result<Vec<_>>>()?;
        GAction::new(space.clone(), degree, gens)
    }

    pub fn trivial(space: &RetSpace, degree: usize) -> Self {
        let gens = (0..degree.saturating_sub(1)).map(|_| RetMap::identity(space)).collect();
        GAction {
            space: space.clone(),
            degree,
            gens,
        }
    }

    pub fn space(&self) -> &RetSpace {
        &self.space
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generator(&self, i: usize) -> &RetMap {
        &self.gens[i]
    }

    pub fn act(&self, g: &Perm, s: Simplex) -> Simplex {
        debug_assert_eq!(g.len(), self.degree);
        g.adjacent_word().iter().rev().fold(s, |cur, &i| self.gens[i].apply(cur))
    }

    pub fn act_map(&self, g: &Perm) -> Result<RetMap> {
        RetMap::from_fn(&self.space, &self.space, |u| Ok(self.act(g, Simplex::nondegenerate(u))))
    }
}

/// `f ∘ τ_i = τ_i ∘ f` for every generator.
pub fn is_equivariant(f: &RetMap, src: &GAction, tgt: &GAction) -> Result<bool> {
    if src.degree != tgt.degree {
        return Err(Error::Mismatch("actions of different groups".into()));
    }
    for (a, b) in src.gens.iter().zip(&tgt.gens) {
        if f.map().compose(a.map())? != b.map().compose(f.map())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A symmetric sequence: one `Σ_n`-space per level.
#[derive(Clone, Debug)]
pub struct SymSeq {
    base: Arc<FinSSet>,
    levels: Vec<GAction>,
}

impl SymSeq {
    pub fn new(levels: Vec<GAction>) -> Result<Self> {
        let base = levels.first().ok_or(Error::InvalidArgument("a symmetric sequence needs level 0".into()))?.space.base().clone();
        for (n, l) in levels.iter().enumerate() {
            if l.degree != n {
                return Err(Error::Mismatch(alloc::format!("level {n} carries a Σ_{} action", l.degree)));
            }
            if !same(l.space.base(), &base) {
                return Err(Error::NotOverBase("levels over different bases".into()));
            }
        }
        Ok(SymSeq { base, levels })
    }

    /// `X_{+X}` at level 0 and `0_X` above: the unit of Day convolution.
    pub fn unit(base: &Arc<FinSSet>, trunc: usize) -> Self {
        let levels = (0..=trunc)
            .map(|n| {
                let space = if n == 0 { RetSpace::unit(base) } else { RetSpace::zero(base) };
                GAction::trivial(&space, n)
            })
            .collect();
        SymSeq { base: base.clone(), levels }
    }

    pub fn base(&self) -> &Arc<FinSSet> {
        &self.base
    }

    pub fn trunc(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &RetSpace {
        &self.levels[n].space
    }

    pub fn action(&self, n: usize) -> &GAction {
        &self.levels[n]
    }

    pub fn act(&self, n: usize, g: &Perm, s: Simplex) -> Simplex {
        self.levels[n].act(g, s)
    }
}

/// A symmetric spectrum: a sequential spectrum whose levels carry
/// `Σ_n`-actions for which every iterate `S^p ⊙ A(q) -> A(p+q)` is
/// `Σ_p × Σ_q`-equivariant.
#[derive(Clone, Debug)]
pub struct SymSpec {
    seq: SeqSpec,
    actions: SymSeq,
}

impl SymSpec {
    pub fn new(seq: SeqSpec, actions: Vec<GAction>) -> Result<Self> {
        if seq.bound().is_some() {
            return Err(Error::InvalidArgument("symmetric spectra are not truncated in dimension".into()));
        }
        if actions.len() != seq.levels().len() {
            return Err(Error::Mismatch("one action per level".into()));
        }
        for (n, a) in actions.iter().enumerate() {
            if !same(a.space.total(), seq.level(n).total()) {
                return Err(Error::Mismatch(alloc::format!("action at level {n} is on another space")));
            }
        }
        let s = SymSpec {
            seq,
            actions: SymSeq::new(actions)?,
        };
        if let Some((p, q)) = s.equivariance_failure()? {
            return Err(Error::NotFactorable(alloc::format!("S^{p} ⊙ A({q}) -> A({}) is not equivariant", p + q)));
        }
        Ok(s)
    }

    pub fn base(&self) -> &Arc<FinSSet> {
        self.seq.base()
    }

    pub fn seq(&self) -> &SeqSpec {
        &self.seq
    }

    pub fn trunc(&self) -> usize {
        self.seq.trunc()
    }

    pub fn level(&self, n: usize) -> &RetSpace {
        self.seq.level(n)
    }

    pub fn action(&self, n: usize) -> &GAction {
        self.actions.action(n)
    }

    pub fn actions(&self) -> &SymSeq {
        &self.actions
    }

    pub fn act(&self, n: usize, g: &Perm, s: Simplex) -> Simplex {
        self.actions.act(n, g, s)
    }

    pub fn struct_map(&self, n: usize) -> &RetMap {
        self.seq.struct_map(n)
    }

    pub fn sigma(&self, n: usize, x: Simplex, t: Simplex, a: Simplex) -> Result<Simplex> {
        self.seq.sigma(n, x, t, a)
    }

    /// The first `(p, q)` with `p + q <= N` at which the iterated structure
    /// map fails to commute with a generator of `Σ_p × Σ_q`.
    pub fn equivariance_failure(&self) -> Result<Option<(usize, usize)>> {
        let nn = self.trunc();
        for n in 1..=nn {
            for p in 1..=n {
                let q = n - p;
                let mut factors: Vec<SmashFactor> = (0..p).map(|_| SmashFactor::Pointed(sphere1())).collect();
                factors.push(SmashFactor::Fibre(self.level(q).clone()));
                let smash = SmashProduct::new(self.base(), &factors)?;
                for u in smash.space().total().all_nd() {
                    let SmashPoint::Tuple(x, c) = smash.split(Simplex::nondegenerate(u)) else {
                        continue;
                    };
                    let (ts, a) = (&c[..p], c[p]);
                    let here = iterate_sigma(&self.seq, q, x, ts, a)?;
                    // Σ_p on the circles (p = 1 is covered by the Σ_q checks)
                    for i in 0..p.saturating_sub(1) {
                        let tau = Perm::transposition(p, i);
                        let lhs = iterate_sigma(&self.seq, q, x, &tau.act(ts), a)?;
                        if lhs != self.act(n, &Perm::transposition(n, i), here) {
                            return Ok(Some((p, q)));
                        }
                    }
                    for j in 0..q.saturating_sub(1) {
                        let lhs = iterate_sigma(&self.seq, q, x, ts, self.act(q, &Perm::transposition(q, j), a))?;
                        if lhs != self.act(n, &Perm::transposition(n, p + j), here) {
                            return Ok(Some((p, q)));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Calls `visit` on every equivariant morphism `self -> other`.
    pub fn for_each_hom(&self, other: &SymSpec, visit: impl FnMut(&[RetMap]) -> bool) -> Result<()> {
        self.seq
            .for_each_hom_filtered(&other.seq, |n, f| is_equivariant(f, self.action(n), other.action(n)), visit)
    }

    pub fn hom_count(&self, other: &SymSpec) -> Result<usize> {
        let mut c = 0;
        self.for_each_hom(other, |_| {
            c += 1;
            true
        })?;
        Ok(c)
    }
}

/// The underlying sequential spectrum.
pub fn forget_to_seq(a: &SymSpec) -> SeqSpec {
    a.seq.clone()
}

/// A morphism of symmetric spectra.
#[derive(Clone, Debug)]
pub struct SymMor {
    source: SymSpec,
    target: SymSpec,
    mor: SeqMor,
}

impl SymMor {
    pub fn new(source: &SymSpec, target: &SymSpec, maps: Vec<RetMap>) -> Result<Self> {
        let mor = SeqMor::new(&source.seq, &target.seq, maps)?;
        for n in 0..=source.trunc() {
            if !is_equivariant(mor.level(n), source.action(n), target.action(n))? {
                return Err(Error::NotFactorable(alloc::format!("level {n} is not equivariant")));
            }
        }
        Ok(SymMor {
            source: source.clone(),
            target: target.clone(),
            mor,
        })
    }

    pub fn source(&self) -> &SymSpec {
        &self.source
    }

    pub fn target(&self) -> &SymSpec {
        &self.target
    }

    pub fn level(&self, n: usize) -> &RetMap {
        self.mor.level(n)
    }

    pub fn seq(&self) -> &SeqMor {
        &self.mor
    }

    pub fn is_isomorphism(&self) -> bool {
        self.mor.is_isomorphism()
    }

    pub fn iso_levels(&self) -> Vec<bool> {
        self.mor.iso_levels()
    }
}

fn circles(base: &Arc<FinSSet>, n: usize, last: Option<&RetSpace>) -> Result<SmashProduct> {
    let mut factors: Vec<SmashFactor> = (0..n).map(|_| SmashFactor::Pointed(sphere1())).collect();
    if let Some(y) = last {
        factors.push(SmashFactor::Fibre(y.clone()));
    }
    SmashProduct::new(base, &factors)
}

#[derive(Clone, Debug)]
struct SphereParts {
    unit: RetSpace,
    unit_incl: SMap,
    smashes: Vec<SmashProduct>,
}

impl SphereParts {
    fn elem(&self, n: usize, x: Simplex, cs: &[Simplex]) -> Result<Simplex> {
        if cs.len() != n {
            return Err(Error::Mismatch("one circle coordinate per smash factor".into()));
        }
        if n == 0 {
            return Ok(self.unit_incl.apply(x));
        }
        self.smashes[n - 1].tuple(x, cs)
    }

    fn split(&self, n: usize, s: Simplex) -> Option<(Simplex, Vec<Simplex>)> {
        if n == 0 {
            return (!self.unit.is_base(s)).then(|| (self.unit.project(s), Vec::new()));
        }
        match self.smashes[n - 1].split(s) {
            SmashPoint::Base(_) => None,
            SmashPoint::Tuple(x, c) => Some((x, c)),
        }
    }
}

/// The sphere `X^*𝕊`: `X_{+X}` at level 0 and `X^*(S^1)^{∧n}` at level `n`,
/// with `Σ_n` permuting the circles.
#[derive(Clone, Debug)]
pub struct SphereSym {
    parts: SphereParts,
    spec: SymSpec,
}

impl SphereSym {
    pub fn new(base: &Arc<FinSSet>, trunc: usize) -> Result<Self> {
        let (unit, unit_incl) = RetSpace::plus_base_parts(&SMap::identity(base))?;
        let smashes: Vec<SmashProduct> = (1..=trunc).map(|n| circles(base, n, None)).collect::<Result<_>>()?;
        let mut levels = alloc::vec![unit.clone()];
        levels.extend(smashes.iter().map(|s| s.space().clone()));
        let parts = SphereParts { unit, unit_incl, smashes };
        let seq = SeqSpec::from_fn(levels.clone(), None, |n, outer, src, tgt| {
            RetMap::from_fn(src, tgt, |u| match outer.split(Simplex::nondegenerate(u)) {
                SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
                SmashPoint::Tuple(x, c) => match parts.split(n, c[1]) {
                    None => Ok(tgt.base_simplex(x)),
                    Some((_, mut cs)) => {
                        cs.insert(0, c[0]);
                        parts.elem(n + 1, x, &cs)
                    }
                },
            })
        })?;
        let actions = levels
            .iter()
            .enumerate()
            .map(|(n, l)| {
                GAction::from_fn(l, n, |i, s| match parts.split(n, s) {
                    None => Ok(s),
                    Some((x, cs)) => parts.elem(n, x, &Perm::transposition(n, i).act(&cs)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = SymSpec::new(seq, actions)?;
        Ok(SphereSym { parts, spec })
    }

    pub fn spec(&self) -> &SymSpec {
        &self.spec
    }

    /// The simplex with circle coordinates `cs` over `x` (`cs` empty at
    /// level 0).
    pub fn elem(&self, n: usize, x: Simplex, cs: &[Simplex]) -> Result<Simplex> {
        self.parts.elem(n, x, cs)
    }

    /// `(x, circle coordinates)`, or `None` on the section.
    pub fn split(&self, n: usize, s: Simplex) -> Option<(Simplex, Vec<Simplex>)> {
        self.parts.split(n, s)
    }
}

/// `sphere_sym(X, N)`.
pub fn sphere_sym(base: &Arc<FinSSet>, trunc: usize) -> Result<SphereSym> {
    SphereSym::new(base, trunc)
}

/// The cyclic permutation `i ↦ i + 1 mod n` acting on level `n`.
pub fn cyclic_permutation(a: &SymSpec, n: usize) -> Result<RetMap> {
    let g = Perm::from_images((0..n).map(|i| (i + 1) % n).collect())?;
    a.action(n).act_map(&g)
}

/// A simplex of the free spectrum off the section: coset representative,
/// base simplex, circle coordinates and the point of `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePoint {
    pub rep: Perm,
    pub x: Simplex,
    pub coords: Vec<Simplex>,
    pub y: Simplex,
}

#[derive(Clone, Debug)]
struct FreeParts {
    k: usize,
    smashes: Vec<SmashProduct>,
    reps: Vec<Vec<Perm>>,
    lookup: Vec<BTreeMap<Vec<usize>, usize>>,
    wedges: Vec<Wedge>,
}

impl FreeParts {
    fn elem(&self, n: usize, g: &Perm, x: Simplex, coords: &[Simplex], y: Simplex) -> Result<Simplex> {
        let k = self.k;
        if n < k || g.len() != n || coords.len() != n - k {
            return Err(Error::Mismatch("not a simplex shape of this free level".into()));
        }
        let (rep, h) = coset_decompose(g, k);
        let mut cs = h.act(coords);
        cs.push(y);
        let i = self.lookup[n - k][rep.images()];
        Ok(self.wedges[n - k].inject(i, self.smashes[n - k].tuple(x, &cs)?))
    }

    fn split(&self, n: usize, s: Simplex) -> Option<FreePoint> {
        if n < self.k {
            return None;
        }
        let j = n - self.k;
        match self.wedges[j].split(s) {
            WedgePoint::Base(_) => None,
            WedgePoint::Summand(i, u) => match self.smashes[j].split(u) {
                SmashPoint::Base(_) => None,
                SmashPoint::Tuple(x, mut c) => {
                    let y = c.pop().expect("the Y coordinate");
                    Some(FreePoint {
                        rep: self.reps[j][i].clone(),
                        x,
                        coords: c,
                        y,
                    })
                }
            },
        }
    }
}

/// `𝚺^{∞-k}_X Y`: at level `n >= k` the wedge over `Σ_n / Σ_{n-k}` of
/// `S^{n-k} ⊙ Y`, with `Σ_n` permuting cosets and acting on the circles.
#[derive(Clone, Debug)]
pub struct FreeSym {
    generator: RetSpace,
    parts: FreeParts,
    spec: SymSpec,
}

impl FreeSym {
    pub fn new(k: usize, y: &RetSpace, trunc: usize) -> Result<Self> {
        if trunc < k {
            return Err(Error::InvalidArgument(alloc::format!("truncation {trunc} below the free level {k}")));
        }
        let base = y.base();
        let mut smashes = Vec::new();
        let mut reps = Vec::new();
        let mut lookup = Vec::new();
        let mut wedges = Vec::new();
        for n in k..=trunc {
            let s = circles(base, n - k, Some(y))?;
            let r = coset_reps(n, k);
            let summands: Vec<RetSpace> = r.iter().map(|_| s.space().clone()).collect();
            wedges.push(Wedge::new(base, &summands)?);
            lookup.push(r.iter().enumerate().map(|(i, g)| (g.images().to_vec(), i)).collect());
            reps.push(r);
            smashes.push(s);
        }
        let parts = FreeParts {
            k,
            smashes,
            reps,
            lookup,
            wedges,
        };
        let levels: Vec<RetSpace> = (0..=trunc)
            .map(|n| if n < k { RetSpace::zero(base) } else { parts.wedges[n - k].space().clone() })
            .collect();
        let seq = SeqSpec::from_fn(levels.clone(), None, |n, outer, src, tgt| {
            RetMap::from_fn(src, tgt, |u| match outer.split(Simplex::nondegenerate(u)) {
                SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
                SmashPoint::Tuple(x, c) => match parts.split(n, c[1]) {
                    None => Ok(tgt.base_simplex(x)),
                    Some(p) => {
                        let mut cs = alloc::vec![c[0]];
                        cs.extend(p.coords);
                        parts.elem(n + 1, &Perm::identity(1).block_sum(&p.rep), x, &cs, p.y)
                    }
                },
            })
        })?;
        let actions = levels
            .iter()
            .enumerate()
            .map(|(n, l)| {
                GAction::from_fn(l, n, |i, s| match parts.split(n, s) {
                    None => Ok(s),
                    Some(p) => parts.elem(n, &Perm::transposition(n, i).compose(&p.rep), p.x, &p.coords, p.y),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = SymSpec::new(seq, actions)?;
        Ok(FreeSym {
            generator: y.clone(),
            parts,
            spec,
        })
    }

    pub fn spec(&self) -> &SymSpec {
        &self.spec
    }

    pub fn k(&self) -> usize {
        self.parts.k
    }

    pub fn generator(&self) -> &RetSpace {
        &self.generator
    }

    pub fn level(&self, n: usize) -> &RetSpace {
        self.spec.level(n)
    }

    /// Number of wedge summands at level `n`.
    pub fn summands(&self, n: usize) -> usize {
        if n < self.parts.k {
            0
        } else {
            self.parts.reps[n - self.parts.k].len()
        }
    }

    /// `[g; coords, y]` for any `g ∈ Σ_n`, reduced to its coset.
    pub fn elem(&self, n: usize, g: &Perm, x: Simplex, coords: &[Simplex], y: Simplex) -> Result<Simplex> {
        self.parts.elem(n, g, x, coords, y)
    }

    pub fn split(&self, n: usize, s: Simplex) -> Option<FreePoint> {
        self.parts.split(n, s)
    }

    /// The morphism to `b` adjunct to `g: Y -> B(k)`:
    /// `[c; ts, y] ↦ c · σ^{(n-k)}(ts ∧ g(y))`.
    pub fn adjunct(&self, b: &SymSpec, g: &RetMap) -> Result<SymMor> {
        let k = self.parts.k;
        if !same(g.source().total(), self.generator.total()) || !same(g.target().total(), b.level(k).total()) {
            return Err(Error::Mismatch("adjunct of a map Y -> B(k) expected".into()));
        }
        let maps = (0..=self.spec.trunc())
            .map(|n| {
                let (src, tgt) = (self.level(n), b.level(n));
                RetMap::from_fn(src, tgt, |u| {
                    let s = Simplex::nondegenerate(u);
                    match self.split(n, s) {
                        None => Ok(tgt.base_simplex(src.project(s))),
                        Some(p) => Ok(b.act(n, &p.rep, iterate_sigma(&b.seq, k, p.x, &p.coords, g.apply(p.y))?)),
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SymMor::new(&self.spec, b, maps)
    }
}

/// `free_sym(k, Y, N)`.
pub fn free_sym(k: usize, y: &RetSpace, trunc: usize) -> Result<FreeSym> {
    FreeSym::new(k, y, trunc)
}

/// `ξ: 𝚺^{∞-(k+1)}_X(S^1 ⊙ Y) -> 𝚺^{∞-k}_X Y`, with both free spectra.
#[derive(Clone, Debug)]
pub struct XiMap {
    pub source: FreeSym,
    pub target: FreeSym,
    pub mor: SymMor,
}

/// The map adjunct to `t ∧ y ↦ [1; t, y]` at level `k + 1`.
pub fn xi(k: usize, y: &RetSpace, trunc: usize) -> Result<XiMap> {
    if trunc < k + 1 {
        return Err(Error::InvalidArgument("ξ needs truncation at least k + 1".into()));
    }
    let sy = fib_suspension(y)?;
    let source = FreeSym::new(k + 1, sy.space(), trunc)?;
    let target = FreeSym::new(k, y, trunc)?;
    let tgt = target.level(k + 1);
    let one = Perm::identity(k + 1);
    let g = sy.map_to(tgt, |p| match p {
        SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
        SmashPoint::Tuple(x, c) => target.elem(k + 1, &one, x, &[c[0]], c[1]),
    })?;
    let mor = source.adjunct(target.spec(), &g)?;
    Ok(XiMap { source, target, mor })
}

/// `f^*A` levelwise, with the pulled-back actions.
pub fn pull_sym(f: &SMap, a: &SymSpec) -> Result<(SymSpec, PullSpec)> {
    let pulled = pull_spec(f, &a.seq)?;
    let actions = (0..=a.trunc())
        .map(|n| {
            let pb = pulled.pull(n);
            GAction::from_fn(pb.space(), n, |i, s| {
                let (x, z) = pb.split(s);
                pb.elem(x, a.act(n, &Perm::transposition(n, i), z)).ok_or(Error::NotOverBase("action left the fibre".into()))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((SymSpec::new(pulled.spec().clone(), actions)?, pulled))
}
