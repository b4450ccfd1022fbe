//! Pointed `𝔾X`-spaces, the Borel quotient `𝔟_X`, and the pullback
//! `p(X)^*` along the path fibration with its maps `η` and `ε`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand_core::RngCore;

use super::kan::{in_image_of, path_fib, twisted_face, LoopGroup, LoopWord, PathFib, PathSimplex};
use super::lazy::{pick, seeded, LazySSet, SampleReport, SimplicialGroup};
use crate::retractive::RetSpace;
use crate::sset::{FinSSet, Levelwise, LevelwiseSource, NdId, SMap, Simplex};
use crate::{Error, Result};

/// A finite pointed simplicial set `M` with a `𝔾X`-action through a local
/// system: each edge `e` of `X` acts by a pointed automorphism `α_e`, and a
/// generator `ȳ` acts by `α` of the edge `y|[0,1]`.
///
/// The action is simplicial exactly when `α_{02} = α_{01} ∘ α_{12}` on every
/// 2-simplex, which [`new`](Self::new) checks.
#[derive(Clone, Debug)]
pub struct LocalSystem {
    group: LoopGroup,
    fibre: RetSpace,
    autos: Vec<SMap>,
    inverses: Vec<SMap>,
}

impl LocalSystem {
    pub fn new(group: &LoopGroup, fibre: &RetSpace, autos: Vec<SMap>) -> Result<Self> {
        let x = group.base();
        if autos.len() != x.count(1) {
            return Err(Error::BadAction(format!("{} automorphisms for {} edges", autos.len(), x.count(1))));
        }
        let mut inverses = Vec::with_capacity(autos.len());
        for a in &autos {
            let inv = a.inverse().ok_or_else(|| Error::BadAction("edge action is not invertible".into()))?;
            if a.compose(fibre.section())? != *fibre.section() {
                return Err(Error::BadAction("edge action moves the basepoint".into()));
            }
            inverses.push(inv);
        }
        let sys = LocalSystem {
            group: group.clone(),
            fibre: fibre.clone(),
            autos,
            inverses,
        };
        let id = SMap::identity(fibre.total());
        for z in x.nd(2) {
            let z = Simplex::nondegenerate(z);
            let along = |e: Simplex| sys.edge_map(e, false).unwrap_or(&id).clone();
            let (a01, a12, a02) = (along(x.face(z, 2)), along(x.face(z, 0)), along(x.face(z, 1)));
            if a01.compose(&a12)? != a02 {
                return Err(Error::BadAction(format!("cocycle condition fails on {}", x.label(z))));
            }
        }
        Ok(sys)
    }

    /// The trivial action.
    pub fn trivial(group: &LoopGroup, fibre: &RetSpace) -> Self {
        let id = SMap::identity(fibre.total());
        LocalSystem::new(group, fibre, alloc::vec![id; group.base().count(1)]).expect("trivial action")
    }

    pub fn group(&self) -> &LoopGroup {
        &self.group
    }

    pub fn fibre(&self) -> &RetSpace {
        &self.fibre
    }

    fn edge_map(&self, e: Simplex, inverse: bool) -> Option<&SMap> {
        if e.is_degenerate() {
            return None;
        }
        let k = e.nd().index();
        Some(if inverse { &self.inverses[k] } else { &self.autos[k] })
    }

    fn first_edge(&self, y: Simplex) -> Simplex {
        self.group.base().apply(y, &[0, 1]).expect("edge of a simplex")
    }

    /// `g · m` for `g ∈ 𝔾X_n` and an `n`-simplex `m`; the rightmost letter
    /// acts first.
    pub fn act(&self, g: &LoopWord, m: Simplex) -> Simplex {
        let mut cur = m;
        for (y, inv) in g.word.letters().iter().rev() {
            if let Some(a) = self.edge_map(self.first_edge(*y), *inv) {
                cur = a.apply(cur);
            }
        }
        cur
    }
}

/// The key of a simplex of `X ×_τ M`: orbit representatives `[x, 1, m]` of
/// `(ℙX × M)/𝔾X`.
struct Twisted<'a> {
    sys: &'a LocalSystem,
}

impl LevelwiseSource for Twisted<'_> {
    type Key = (Simplex, Simplex);

    fn level(&self, n: usize) -> Vec<(Simplex, Simplex)> {
        let xs = self.sys.group.base().simplices(n);
        let ms = self.sys.fibre.total().simplices(n);
        xs.iter().flat_map(|&x| ms.iter().map(move |&m| (x, m))).collect()
    }

    fn face(&self, _n: usize, i: usize, &(x, m): &(Simplex, Simplex)) -> (Simplex, Simplex) {
        borel_face(self.sys, x, m, i)
    }

    fn degeneracy(&self, _n: usize, j: usize, &(x, m): &(Simplex, Simplex)) -> (Simplex, Simplex) {
        (x.degeneracy(j), m.degeneracy(j))
    }

    fn name(&self, &(x, m): &(Simplex, Simplex)) -> String {
        format!("[{},{}]", self.sys.group.base().label(x), self.sys.fibre.total().label(m))
    }
}

/// `d_i [x, m]`: normalising the face of `[x, 1, m]` divides by `τ(x)` on
/// the `M` coordinate when `i = 0`.
fn borel_face(sys: &LocalSystem, x: Simplex, m: Simplex, i: usize) -> (Simplex, Simplex) {
    let base = sys.group.base();
    let dm = sys.fibre.total().face(m, i);
    if i == 0 {
        let tau = sys.group.bar(x);
        (base.face(x, 0), sys.act(&sys.group.inv(&tau), dm))
    } else {
        (base.face(x, i), dm)
    }
}

/// `𝔟_X(M) = (ℙX × M)/𝔾X` as a retractive space over `X`, through
/// dimension `bound`.
#[derive(Clone, Debug)]
pub struct BorelQuotient {
    levels: Levelwise<(Simplex, Simplex)>,
    space: RetSpace,
    x: Arc<FinSSet>,
    m: Arc<FinSSet>,
}

impl BorelQuotient {
    pub fn space(&self) -> &RetSpace {
        &self.space
    }

    /// The class of `[x, 1, m]`.
    pub fn class(&self, x: Simplex, m: Simplex) -> Option<Simplex> {
        if let Some(c) = self.levels.simplex(&(x, m)) {
            return Some(c);
        }
        // above the stored levels only common degeneracies remain, and
        // τ(s_0 x) = 1 makes d_0 untwisted on those
        let j = (0..x.dim()).find(|&j| in_image_of(x, j) && in_image_of(m, j))?;
        let c = self.class(self.x.face(x, j), self.m.face(m, j))?;
        Some(c.degeneracy(j))
    }

    /// The class of `[x, g, m]`, normalised to `[x, 1, g^{-1} m]`.
    pub fn class_of(&self, sys: &LocalSystem, p: &PathSimplex, m: Simplex) -> Option<Simplex> {
        self.class(p.x, sys.act(&sys.group.inv(&p.g), m))
    }

    pub fn key(&self, u: NdId) -> (Simplex, Simplex) {
        *self.levels.key(u)
    }
}

pub fn borel_quotient(sys: &LocalSystem, bound: usize) -> Result<BorelQuotient> {
    let x = sys.group.base().clone();
    let m = sys.fibre.total();
    let full = x.dim().unwrap_or(0) + m.dim().unwrap_or(0);
    let top = bound.min(full);
    let levels = Levelwise::build(&Twisted { sys }, top)?;
    let total = levels.object().clone();
    let m0 = Simplex::nondegenerate(sys.fibre.basepoint());
    let section = SMap::from_fn(x.clone(), total.clone(), |u| {
        let s = Simplex::nondegenerate(u);
        levels.simplex(&(s, m0.lift(u.dim()))).ok_or(Error::BeyondTruncation(u.dim()))
    })?;
    let retraction = SMap::from_fn(total, x, |u| Ok(levels.key(u).0))?;
    let space = RetSpace::new(section, retraction)?.with_truncation((top < full).then_some(top));
    Ok(BorelQuotient { levels, space, x: sys.group.base().clone(), m: m.clone() })
}

/// `p(X)^*Y`: an `n`-simplex is `(y, g)` with `y ∈ Y_n` and `g ∈ 𝔾X_n`,
/// lying over `(p(y), g) ∈ ℙX`.
#[derive(Clone, Debug)]
pub struct PulledPath {
    path: PathFib,
    y: RetSpace,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PulledSimplex {
    pub y: Simplex,
    pub g: LoopWord,
}

pub fn pull_path(y: &RetSpace) -> Result<PulledPath> {
    Ok(PulledPath { path: path_fib(y.base())?, y: y.clone() })
}

impl PulledPath {
    pub fn path(&self) -> &PathFib {
        &self.path
    }

    pub fn space(&self) -> &RetSpace {
        &self.y
    }

    pub fn act(&self, h: &LoopWord, s: &PulledSimplex) -> PulledSimplex {
        PulledSimplex {
            y: s.y,
            g: self.path.group().mul(h, &s.g),
        }
    }

    /// The map to `ℙX`.
    pub fn to_path(&self, s: &PulledSimplex) -> PathSimplex {
        PathSimplex {
            x: self.y.project(s.y),
            g: s.g.clone(),
        }
    }

    /// The section `ℙX -> p(X)^*Y`.
    pub fn section(&self, p: &PathSimplex) -> PulledSimplex {
        PulledSimplex {
            y: self.y.base_simplex(p.x),
            g: p.g.clone(),
        }
    }

    /// Orbit representative and the group element carrying it to `s`.
    pub fn normalise(&self, s: &PulledSimplex) -> (PulledSimplex, LoopWord) {
        let unit = PulledSimplex {
            y: s.y,
            g: self.path.group().unit(s.y.dim()),
        };
        (unit, s.g.clone())
    }

    /// `ε_Y: p(X)^*Y/𝔾X -> Y` on an orbit representative.
    pub fn epsilon(&self, rep: &PulledSimplex) -> Simplex {
        rep.y
    }

    /// `ε_Y^{-1}`.
    pub fn epsilon_inverse(&self, y: Simplex) -> PulledSimplex {
        PulledSimplex {
            y,
            g: self.path.group().unit(y.dim()),
        }
    }

    /// `η_P: P -> p(X)^*(P/𝔾X)` for `P = p(X)^*Y`, with `P/𝔾X` identified
    /// with `Y` through `ε`.
    pub fn eta(&self, s: &PulledSimplex) -> PulledSimplex {
        let (rep, _) = self.normalise(s);
        PulledSimplex {
            y: self.epsilon(&rep),
            g: self.to_path(s).g,
        }
    }

    /// The inverse of `η`, using freeness of `ℙX`: the unique translate of
    /// the orbit representative lying over the given point of `ℙX`.
    pub fn eta_inverse(&self, t: &PulledSimplex) -> PulledSimplex {
        let rep = self.epsilon_inverse(t.y);
        let over = self.to_path(&rep);
        let h = self.path.group().mul(&t.g, &self.path.group().inv(&over.g));
        self.act(&h, &rep)
    }
}

impl LazySSet for PulledPath {
    type Simplex = PulledSimplex;

    fn dim(&self, s: &PulledSimplex) -> usize {
        s.y.dim()
    }

    fn face(&self, s: &PulledSimplex, i: usize) -> PulledSimplex {
        PulledSimplex {
            y: self.y.total().face(s.y, i),
            g: twisted_face(self.path.group(), self.y.project(s.y), &s.g, i),
        }
    }

    fn degeneracy(&self, s: &PulledSimplex, j: usize) -> PulledSimplex {
        PulledSimplex {
            y: s.y.degeneracy(j),
            g: self.path.group().degeneracy(&s.g, j),
        }
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> PulledSimplex {
        let ys = self.y.total().simplices(n);
        PulledSimplex {
            y: ys[pick(rng, ys.len())],
            g: self.path.group().sample(n, rng),
        }
    }
}

/// `𝔣_X(Y) = ℙX_! p(X)^*Y`: the pointed `𝔾X`-space obtained by collapsing
/// the copy of `ℙX` to the basepoint. `None` is the basepoint.
#[derive(Clone, Debug)]
pub struct PathModule {
    pulled: PulledPath,
}

pub fn path_module(y: &RetSpace) -> Result<PathModule> {
    Ok(PathModule { pulled: pull_path(y)? })
}

impl PathModule {
    pub fn pulled(&self) -> &PulledPath {
        &self.pulled
    }

    pub fn class(&self, s: &PulledSimplex) -> Option<PulledSimplex> {
        (!self.pulled.y.is_base(s.y)).then(|| s.clone())
    }

    pub fn act(&self, h: &LoopWord, s: &Option<PulledSimplex>) -> Option<PulledSimplex> {
        s.as_ref().map(|s| self.pulled.act(h, s))
    }
}

impl LazySSet for PathModule {
    type Simplex = (usize, Option<PulledSimplex>);

    fn dim(&self, s: &Self::Simplex) -> usize {
        s.0
    }

    fn face(&self, (n, s): &Self::Simplex, i: usize) -> Self::Simplex {
        (n - 1, s.as_ref().and_then(|s| self.class(&self.pulled.face(s, i))))
    }

    fn degeneracy(&self, (n, s): &Self::Simplex, j: usize) -> Self::Simplex {
        (n + 1, s.as_ref().map(|s| self.pulled.degeneracy(s, j)))
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Self::Simplex {
        (n, self.class(&self.pulled.sample(n, rng)))
    }
}

/// `η` and `ε` on sampled simplices of `p(X)^*Y`: both commute with the
/// simplicial operators, `η` is equivariant and inverted by its
/// freeness inverse, and `ε` is a bijection on orbit representatives.
pub fn eta_eps_check(y: &RetSpace, samples: usize, max_dim: usize, seed: u64) -> Result<SampleReport> {
    let p = pull_path(y)?;
    let g = p.path().group();
    let mut rng = seeded(seed);
    let mut report = SampleReport::new("eta-epsilon", seed);
    for _ in 0..samples {
        let n = pick(&mut rng, max_dim + 1);
        let s = p.sample(n, &mut rng);
        let h = g.sample(n, &mut rng);
        let mut ok = p.eta_inverse(&p.eta(&s)) == s;
        ok &= p.eta(&p.act(&h, &s)) == p.act(&h, &p.eta(&s));
        let (rep, carry) = p.normalise(&s);
        ok &= p.act(&carry, &rep) == s;
        ok &= p.epsilon_inverse(p.epsilon(&rep)) == rep;
        if n > 0 {
            let i = pick(&mut rng, n + 1);
            ok &= p.eta(&p.face(&s, i)) == p.face(&p.eta(&s), i);
            // ε commutes with faces on representatives
            let (frep, _) = p.normalise(&p.face(&rep, i));
            ok &= p.epsilon(&frep) == y.total().face(rep.y, i);
        }
        let j = pick(&mut rng, n + 1);
        ok &= p.eta(&p.degeneracy(&s, j)) == p.degeneracy(&p.eta(&s), j);
        report.record(ok, || format!("{s:?}"));
    }
    Ok(report)
}

/// The `𝔾X`-action on `ℙX` is free and covers the identity of `X`.
pub fn path_action_check(x: &Arc<FinSSet>, samples: usize, max_dim: usize, seed: u64) -> Result<SampleReport> {
    let p = path_fib(x)?;
    let g = p.group();
    let mut rng = seeded(seed);
    let mut report = SampleReport::new("path-action", seed);
    for _ in 0..samples {
        let n = pick(&mut rng, max_dim + 1);
        let s = p.sample(n, &mut rng);
        let h = g.sample(n, &mut rng);
        let t = p.act(&h, &s);
        let mut ok = p.project(&t) == p.project(&s);
        ok &= (t == s) == h.word.is_unit();
        if n > 0 {
            let i = pick(&mut rng, n + 1);
            ok &= p.face(&t, i) == p.act(&g.face(&h, i), &p.face(&s, i));
        }
        report.record(ok, || format!("{h:?} on {s:?}"));
    }
    Ok(report)
}
