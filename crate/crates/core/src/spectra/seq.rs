//! Sequential spectra over a fixed base, truncated at a level `N`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::tower::SuspTower;
use crate::retractive::{fib_suspension, sphere1, symmetry, tensor_assoc, RetMap, RetSpace, SmashPoint, SmashProduct};
use crate::sset::{same, FinSSet, Simplex};
use crate::{Error, Result};

/// Levels `A_0, .., A_N` with structure maps `σ_n: S^1 ⊙_X A_n -> A_{n+1}`.
///
/// When `bound` is set every level is only known up to that dimension and
/// the structure maps start at the corresponding skeleton of `S^1 ⊙_X A_n`.
#[derive(Clone, Debug)]
pub struct SeqSpec {
    base: Arc<FinSSet>,
    levels: Vec<RetSpace>,
    susp: Vec<SmashProduct>,
    susp_spaces: Vec<RetSpace>,
    struct_maps: Vec<RetMap>,
    bound: Option<usize>,
}

impl SeqSpec {
    /// `susp[n]` must be `S^1 ⊙ levels[n]` and `struct_maps[n]` must start
    /// there (or at its `bound`-skeleton).
    pub fn new(levels: Vec<RetSpace>, susp: Vec<SmashProduct>, struct_maps: Vec<RetMap>, bound: Option<usize>) -> Result<Self> {
        let base = levels.first().ok_or(Error::InvalidArgument("a spectrum needs level 0".into()))?.base().clone();
        let n = levels.len() - 1;
        if susp.len() != n || struct_maps.len() != n {
            return Err(Error::Mismatch("one suspension and one structure map per level below N".into()));
        }
        if levels.iter().any(|l| !same(l.base(), &base)) {
            return Err(Error::NotOverBase("levels over different bases".into()));
        }
        let mut susp_spaces = Vec::with_capacity(n);
        let mut maps = Vec::with_capacity(n);
        for (k, (s, m)) in susp.iter().zip(struct_maps).enumerate() {
            if s.arity() != 2 || !same(s.factor(1).total(), levels[k].total()) {
                return Err(Error::Mismatch("suspension does not match its level".into()));
            }
            let sp = match bound {
                Some(b) => s.space().skeleton(b)?,
                None => s.space().clone(),
            };
            if !same(m.source().total(), sp.total()) || !same(m.target().total(), levels[k + 1].total()) {
                return Err(Error::Mismatch("structure map does not match the levels".into()));
            }
            maps.push(RetMap::new(sp.clone(), levels[k + 1].clone(), m.map().clone())?);
            susp_spaces.push(sp);
        }
        Ok(SeqSpec {
            base,
            levels,
            susp,
            susp_spaces,
            struct_maps: maps,
            bound,
        })
    }

    /// Builds the suspensions itself and asks `f(n, S^1 ⊙ A_n, source,
    /// A_{n+1})` for each structure map.
    pub fn from_fn(
        levels: Vec<RetSpace>,
        bound: Option<usize>,
        mut f: impl FnMut(usize, &SmashProduct, &RetSpace, &RetSpace) -> Result<RetMap>,
    ) -> Result<Self> {
        let mut susp = Vec::new();
        let mut maps = Vec::new();
        for n in 0..levels.len().saturating_sub(1) {
            let s = fib_suspension(&levels[n])?;
            let sp = match bound {
                Some(b) => s.space().skeleton(b)?,
                None => s.space().clone(),
            };
            maps.push(f(n, &s, &sp, &levels[n + 1])?);
            susp.push(s);
        }
        SeqSpec::new(levels, susp, maps, bound)
    }

    /// The zero spectrum, `0_X` at every level.
    pub fn zero(base: &Arc<FinSSet>, trunc: usize) -> Result<Self> {
        let levels = (0..=trunc).map(|_| RetSpace::zero(base)).collect();
        SeqSpec::from_fn(levels, None, |_, _, src, tgt| RetMap::zero(src, tgt))
    }

    pub fn base(&self) -> &Arc<FinSSet> {
        &self.base
    }

    pub fn trunc(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn level(&self, n: usize) -> &RetSpace {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[RetSpace] {
        &self.levels
    }

    /// `S^1 ⊙_X A_n` as a smash.
    pub fn susp(&self, n: usize) -> &SmashProduct {
        &self.susp[n]
    }

    /// The source of `σ_n`.
    pub fn susp_space(&self, n: usize) -> &RetSpace {
        &self.susp_spaces[n]
    }

    pub fn struct_map(&self, n: usize) -> &RetMap {
        &self.struct_maps[n]
    }

    /// Every level is `0_X`.
    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(|l| l.fibre_census().iter().all(|&c| c == 0))
    }

    /// `σ_n(t ∧ a)` for `a` in `A_n` over `x`.
    pub fn sigma(&self, n: usize, x: Simplex, t: Simplex, a: Simplex) -> Result<Simplex> {
        Ok(self.struct_maps[n].apply(self.susp[n].tuple(x, &[t, a])?))
    }

    /// `Σ_X f` for `f: A_n -> B_n`, between the sources of the structure maps.
    pub fn susp_of_map(&self, other: &SeqSpec, n: usize, f: &RetMap) -> Result<RetMap> {
        let (src, tgt) = (self.susp_space(n), other.susp_space(n));
        let (s, o) = (&self.susp[n], &other.susp[n]);
        RetMap::from_fn(src, tgt, |u| match s.split(Simplex::nondegenerate(u)) {
            SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
            SmashPoint::Tuple(x, c) => o.tuple(x, &[c[0], f.apply(c[1])]),
        })
    }

    /// Calls `visit` on every morphism `self -> other` until it returns
    /// `false`.
    pub fn for_each_hom(&self, other: &SeqSpec, visit: impl FnMut(&[RetMap]) -> bool) -> Result<()> {
        self.for_each_hom_filtered(other, |_, _| Ok(true), visit)
    }

    /// Like [`for_each_hom`](Self::for_each_hom), discarding level maps
    /// rejected by `keep(n, f)` as soon as they are found.
    pub fn for_each_hom_filtered(
        &self,
        other: &SeqSpec,
        mut keep: impl FnMut(usize, &RetMap) -> Result<bool>,
        mut visit: impl FnMut(&[RetMap]) -> bool,
    ) -> Result<()> {
        if self.trunc() != other.trunc() || !same(&self.base, &other.base) {
            return Err(Error::Mismatch("spectra of different shapes".into()));
        }
        let mut acc = Vec::new();
        self.homs_from(other, 0, &mut acc, &mut keep, &mut visit)?;
        Ok(())
    }

    fn homs_from(
        &self,
        other: &SeqSpec,
        n: usize,
        acc: &mut Vec<RetMap>,
        keep: &mut impl FnMut(usize, &RetMap) -> Result<bool>,
        visit: &mut impl FnMut(&[RetMap]) -> bool,
    ) -> Result<bool> {
        let mut search = self.levels[n].maps_to(&other.levels[n])?;
        let mut expect = None;
        if n > 0 {
            let sf = self.susp_of_map(other, n - 1, &acc[n - 1])?;
            let value = other.struct_maps[n - 1].compose(&sf)?;
            search = search.fix_along(self.struct_maps[n - 1].map(), value.map());
            expect = Some(value);
        }
        for m in search.maps() {
            let f = RetMap::new(self.levels[n].clone(), other.levels[n].clone(), m)?;
            if let Some(v) = &expect {
                if f.map().compose(self.struct_maps[n - 1].map())? != *v.map() {
                    continue;
                }
            }
            if !keep(n, &f)? {
                continue;
            }
            acc.push(f);
            let go_on = if n == self.trunc() { visit(acc) } else { self.homs_from(other, n + 1, acc, keep, visit)? };
            acc.pop();
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn hom_count(&self, other: &SeqSpec) -> Result<usize> {
        let mut c = 0;
        self.for_each_hom(other, |_| {
            c += 1;
            true
        })?;
        Ok(c)
    }

    pub fn homs(&self, other: &SeqSpec) -> Result<Vec<SeqMor>> {
        let mut out = Vec::new();
        self.for_each_hom(other, |m| {
            out.push(m.to_vec());
            true
        })?;
        out.into_iter().map(|m| SeqMor::new(self, other, m)).collect()
    }
}

/// A morphism of spectra: one map per level, commuting with the structure
/// maps.
#[derive(Clone, Debug)]
pub struct SeqMor {
    source: SeqSpec,
    target: SeqSpec,
    maps: Vec<RetMap>,
}

impl PartialEq for SeqMor {
    fn eq(&self, other: &Self) -> bool {
        self.maps == other.maps
    }
}

impl SeqMor {
    pub fn new(source: &SeqSpec, target: &SeqSpec, maps: Vec<RetMap>) -> Result<Self> {
        if maps.len() != source.levels.len() || source.trunc() != target.trunc() {
            return Err(Error::Mismatch("one map per level".into()));
        }
        let mut own = Vec::with_capacity(maps.len());
        for (n, m) in maps.into_iter().enumerate() {
            if !same(m.source().total(), source.level(n).total()) || !same(m.target().total(), target.level(n).total()) {
                return Err(Error::Mismatch("level map does not match the spectra".into()));
            }
            own.push(RetMap::new(source.level(n).clone(), target.level(n).clone(), m.map().clone())?);
        }
        for n in 0..source.trunc() {
            let left = own[n + 1].compose(source.struct_map(n))?;
            let right = target.struct_map(n).compose(&source.susp_of_map(target, n, &own[n])?)?;
            if left.map() != right.map() {
                return Err(Error::NotFactorable(alloc::format!("square at level {n} does not commute")));
            }
        }
        Ok(SeqMor {
            source: source.clone(),
            target: target.clone(),
            maps: own,
        })
    }

    pub fn identity(a: &SeqSpec) -> Self {
        SeqMor {
            source: a.clone(),
            target: a.clone(),
            maps: a.levels.iter().map(RetMap::identity).collect(),
        }
    }

    pub fn source(&self) -> &SeqSpec {
        &self.source
    }

    pub fn target(&self) -> &SeqSpec {
        &self.target
    }

    pub fn level(&self, n: usize) -> &RetMap {
        &self.maps[n]
    }

    pub fn maps(&self) -> &[RetMap] {
        &self.maps
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &SeqMor) -> Result<SeqMor> {
        let maps = self.maps.iter().zip(&first.maps).map(|(g, f)| g.compose(f)).collect::<Result<Vec<_>>>()?;
        SeqMor::new(&first.source, &self.target, maps)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(RetMap::is_isomorphism)
    }

    /// Levels at which the map is an isomorphism.
    pub fn iso_levels(&self) -> Vec<bool> {
        self.maps.iter().map(RetMap::is_isomorphism).collect()
    }
}

/// `Σ^{∞-k}_X Y`: `0_X` below `k`, `Σ^{n-k}_X Y` at `n >= k`, and identity
/// structure maps from level `k` on.
pub fn free_seq(k: usize, y: &RetSpace, trunc: usize) -> Result<SeqSpec> {
    if trunc < k {
        return Err(Error::InvalidArgument(alloc::format!("truncation {trunc} below the free level {k}")));
    }
    let base = y.base();
    let tower = SuspTower::new(y, trunc - k)?;
    let mut levels = Vec::with_capacity(trunc + 1);
    let mut susp = Vec::with_capacity(trunc);
    let mut maps = Vec::with_capacity(trunc);
    for n in 0..=trunc {
        levels.push(if n < k { RetSpace::zero(base) } else { tower.level(n - k).clone() });
    }
    for n in 0..trunc {
        if n < k {
            let s = fib_suspension(&levels[n])?;
            maps.push(RetMap::zero(s.space(), &levels[n + 1])?);
            susp.push(s);
        } else {
            let s = tower.stage(n - k + 1).clone();
            maps.push(RetMap::identity(s.space()));
            susp.push(s);
        }
    }
    SeqSpec::new(levels, susp, maps, None)
}

/// The suspension tower sitting inside `Σ^{∞-k}_X Y`.
pub fn free_tower(free: &SeqSpec, k: usize) -> Result<SuspTower> {
    SuspTower::starting_with(free.level(k), &free.susp[k..], free.trunc() - k)
}

/// The morphism `Σ^{∞-k}_X Y -> B` adjunct to `g: Y -> B_k`.
pub fn free_adjunct(k: usize, free: &SeqSpec, b: &SeqSpec, g: &RetMap) -> Result<SeqMor> {
    let mut maps: Vec<RetMap> = Vec::with_capacity(free.levels.len());
    for n in 0..=free.trunc() {
        let m = if n < k {
            RetMap::zero(free.level(n), b.level(n))?
        } else if n == k {
            RetMap::new(free.level(k).clone(), b.level(k).clone(), g.map().clone())?
        } else {
            let sf = free.susp_of_map(b, n - 1, &maps[n - 1])?;
            let m = b.struct_map(n - 1).compose(&sf)?;
            RetMap::new(free.level(n).clone(), b.level(n).clone(), m.map().clone())?
        };
        maps.push(m);
    }
    SeqMor::new(free, b, maps)
}

/// `Σ^∞_X` applied levelwise to a map `g: Y -> Y'`, between free spectra
/// generated at the same level.
pub fn free_map(k: usize, a: &SeqSpec, b: &SeqSpec, g: &RetMap) -> Result<SeqMor> {
    let ta = free_tower(a, k)?;
    let tb = free_tower(b, k)?;
    let mut maps = Vec::with_capacity(a.levels.len());
    for n in 0..=a.trunc() {
        maps.push(if n < k { RetMap::zero(a.level(n), b.level(n))? } else { ta.map_level(&tb, n - k, g)? });
    }
    SeqMor::new(a, b, maps)
}

/// `ζ_k(C): Σ^{∞-(k+1)}_X(Σ_X C) -> Σ^{∞-k}_X C`.
pub fn zeta(k: usize, c: &RetSpace, trunc: usize) -> Result<SeqMor> {
    if trunc < k + 1 {
        return Err(Error::InvalidArgument("ζ needs truncation at least k + 1".into()));
    }
    let cod = free_seq(k, c, trunc)?;
    let dom = free_seq(k + 1, cod.level(k + 1), trunc)?;
    free_adjunct(k + 1, &dom, &cod, &RetMap::identity(cod.level(k + 1)))
}

/// `s_X A` with `(s_X A)_n = A_{n+1}`.
pub fn shift(a: &SeqSpec) -> Result<SeqSpec> {
    if a.trunc() == 0 {
        return Err(Error::InvalidArgument("cannot shift a spectrum truncated at level 0".into()));
    }
    SeqSpec::new(a.levels[1..].to_vec(), a.susp[1..].to_vec(), a.struct_maps[1..].to_vec(), a.bound)
}

/// `ℓ_X A` with `0_X` at level 0 and `A_{n-1}` at level `n`.
pub fn unshift(a: &SeqSpec) -> Result<SeqSpec> {
    let z = RetSpace::zero(&a.base);
    let s0 = fib_suspension(&z)?;
    let sp0 = match a.bound {
        Some(b) => s0.space().skeleton(b)?,
        None => s0.space().clone(),
    };
    let mut levels = alloc::vec![z];
    levels.extend(a.levels.iter().cloned());
    let mut susp = alloc::vec![s0];
    susp.extend(a.susp.iter().cloned());
    let mut maps = alloc::vec![RetMap::zero(&sp0, a.level(0))?];
    maps.extend(a.struct_maps.iter().cloned());
    SeqSpec::new(levels, susp, maps, a.bound)
}

/// The morphism `A -> s_X B` corresponding to `f: ℓ_X A -> B`.
pub fn unshift_adjunct(a: &SeqSpec, f: &SeqMor) -> Result<SeqMor> {
    SeqMor::new(a, &shift(&f.target)?, f.maps[1..].to_vec())
}

/// `Σ_X A` prolonged: levels `S^1 ⊙ A_n`, structure maps `Σ_X σ_n`.
pub fn susp_spec(a: &SeqSpec) -> Result<SeqSpec> {
    let susp = suspended_levels(a)?;
    let levels = susp.iter().map(|s| s.space().clone()).collect();
    SeqSpec::from_fn(levels, None, |n, outer, src, tgt| {
        RetMap::from_fn(src, tgt, |u| match outer.split(Simplex::nondegenerate(u)) {
            SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
            SmashPoint::Tuple(x, c) => susp[n + 1].tuple(x, &[c[0], a.struct_map(n).apply(c[1])]),
        })
    })
}

/// The version `S^1 ⊙ A` whose structure maps put the new circle inside:
/// `t ∧ (s ∧ a) ↦ s ∧ σ_n(t ∧ a)`.
pub fn tensor_spec(a: &SeqSpec) -> Result<SeqSpec> {
    let susp = suspended_levels(a)?;
    let levels = susp.iter().map(|s| s.space().clone()).collect();
    SeqSpec::from_fn(levels, None, |n, outer, src, tgt| {
        RetMap::from_fn(src, tgt, |u| match outer.split(Simplex::nondegenerate(u)) {
            SmashPoint::Base(x) => Ok(tgt.base_simplex(x)),
            SmashPoint::Tuple(x, c) => match susp[n].split(c[1]) {
                SmashPoint::Tuple(_, sa) => susp[n + 1].tuple(x, &[sa[0], a.sigma(n, x, c[0], sa[1])?]),
                SmashPoint::Base(_) => Ok(tgt.base_simplex(x)),
            },
        })
    })
}

/// `S^1 ⊙ A_n` for every `n <= N`, reusing the suspensions of `A`.
fn suspended_levels(a: &SeqSpec) -> Result<Vec<SmashProduct>> {
    if a.bound.is_some() {
        return Err(Error::InvalidArgument("expected a spectrum with untruncated levels".into()));
    }
    let mut out = a.susp.clone();
    out.push(fib_suspension(a.level(a.trunc()))?);
    Ok(out)
}

/// The swap of the two circle coordinates on `S^1 ⊙ (S^1 ⊙ Y)`, built from
/// the symmetry of `S^1 ∧ S^1`.
pub fn twist(outer: &SmashProduct, inner: &SmashProduct) -> Result<RetMap> {
    let s1 = sphere1();
    let ss = SmashProduct::pair(&s1, &s1)?;
    let sym = symmetry(&ss, &ss)?;
    let flat = SmashProduct::tensor(ss.space(), inner.factor(1))?;
    let there = tensor_assoc(outer, inner, &ss, &flat)?;
    let swap = RetMap::from_fn(flat.space(), flat.space(), |u| match flat.split(Simplex::nondegenerate(u)) {
        SmashPoint::Base(x) => Ok(flat.space().base_simplex(x)),
        SmashPoint::Tuple(x, c) => flat.tuple(x, &[sym.apply(c[0]), c[1]]),
    })?;
    let back = there.inverse().ok_or(Error::NotFactorable("tensor associativity is not invertible".into()))?;
    back.compose(&swap)?.compose(&there)
}

/// Checks `tensor_spec(A)`'s structure maps against `susp_spec(A)`'s
/// composed with the twist, level by level.
pub fn twist_relates(a: &SeqSpec) -> Result<bool> {
    let s = susp_spec(a)?;
    let t = tensor_spec(a)?;
    for n in 0..s.trunc() {
        let tw = twist(s.susp(n), a.susp(n))?;
        let lhs = t.struct_map(n).map().clone();
        let rhs = s.struct_map(n).compose(&tw)?;
        if lhs != *rhs.map() {
            return Ok(false);
        }
    }
    Ok(true)
}
