//! Simplicial objects given by evaluators rather than stored levels.

use alloc::format;
use alloc::string::String;
use core::fmt;

use rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A simplicial set whose levels may be infinite: simplices are opaque terms
/// compared by equality and acted on by face and degeneracy evaluators.
pub trait LazySSet {
    type Simplex: Clone + PartialEq + fmt::Debug;

    fn dim(&self, s: &Self::Simplex) -> usize;
    fn face(&self, s: &Self::Simplex, i: usize) -> Self::Simplex;
    fn degeneracy(&self, s: &Self::Simplex, j: usize) -> Self::Simplex;
    /// A pseudo-random `n`-simplex.
    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Self::Simplex;
}

/// A simplicial group: each level a group, faces and degeneracies
/// homomorphisms.
pub trait SimplicialGroup: LazySSet {
    fn unit(&self, n: usize) -> Self::Simplex;
    fn mul(&self, a: &Self::Simplex, b: &Self::Simplex) -> Self::Simplex;
    fn inv(&self, a: &Self::Simplex) -> Self::Simplex;
}

/// A uniform index below `k > 0`.
pub(crate) fn pick(rng: &mut dyn RngCore, k: usize) -> usize {
    (rng.next_u64() % k as u64) as usize
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Outcome of a sampled check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub check: String,
    pub seed: u64,
    pub samples: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SampleReport {
    pub fn new(check: impl Into<String>, seed: u64) -> Self {
        SampleReport {
            check: check.into(),
            seed,
            samples: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\tseed={}\tsamples={}\tfailures={}", self.check, self.seed, self.samples, self.failures)?;
        if let Some(w) = &self.first_failure {
            write!(f, "\tfirst={w}")?;
        }
        Ok(())
    }
}

/// Checks `samples` randomly chosen instances of the simplicial identities
/// on simplices of dimension at most `max_dim`.
pub fn check_identities<L: LazySSet>(l: &L, name: &str, samples: usize, max_dim: usize, seed: u64) -> SampleReport {
    let mut rng = seeded(seed);
    let mut report = SampleReport::new(format!("identities:{name}"), seed);
    for _ in 0..samples {
        let n = pick(&mut rng, max_dim + 1);
        let s = l.sample(n, &mut rng);
        if l.dim(&s) != n {
            report.record(false, || format!("sample {s:?} has the wrong dimension"));
            continue;
        }
        let kind = if n >= 2 { pick(&mut rng, 3) } else { 1 + pick(&mut rng, 2) };
        let (ok, what) = match kind {
            0 => {
                let j = 1 + pick(&mut rng, n);
                let i = pick(&mut rng, j);
                let lhs = l.face(&l.face(&s, j), i);
                let rhs = l.face(&l.face(&s, i), j - 1);
                (lhs == rhs, format!("d{i} d{j} on {s:?}"))
            }
            1 => {
                let j = pick(&mut rng, n + 1);
                let i = pick(&mut rng, j + 1);
                let lhs = l.degeneracy(&l.degeneracy(&s, j), i);
                let rhs = l.degeneracy(&l.degeneracy(&s, i), j + 1);
                (lhs == rhs, format!("s{i} s{j} on {s:?}"))
            }
            _ => {
                let j = pick(&mut rng, n + 1);
                let i = pick(&mut rng, n + 2);
                let lhs = l.face(&l.degeneracy(&s, j), i);
                let rhs = if i == j || i == j + 1 {
                    s.clone()
                } else if i < j {
                    l.degeneracy(&l.face(&s, i), j - 1)
                } else {
                    l.degeneracy(&l.face(&s, i - 1), j)
                };
                (lhs == rhs, format!("d{i} s{j} on {s:?}"))
            }
        };
        report.record(ok, || what);
    }
    report
}

/// Checks that faces and degeneracies are homomorphisms on sampled pairs.
pub fn check_homomorphisms<G: SimplicialGroup>(g: &G, name: &str, samples: usize, max_dim: usize, seed: u64) -> SampleReport {
    let mut rng = seeded(seed);
    let mut report = SampleReport::new(format!("homomorphism:{name}"), seed);
    for _ in 0..samples {
        let n = pick(&mut rng, max_dim + 1);
        let (a, b) = (g.sample(n, &mut rng), g.sample(n, &mut rng));
        let ab = g.mul(&a, &b);
        let ok = if n > 0 && pick(&mut rng, 2) == 0 {
            let i = pick(&mut rng, n + 1);
            g.face(&ab, i) == g.mul(&g.face(&a, i), &g.face(&b, i))
        } else {
            let j = pick(&mut rng, n + 1);
            g.degeneracy(&ab, j) == g.mul(&g.degeneracy(&a, j), &g.degeneracy(&b, j))
        };
        let unit_ok = g.mul(&a, &g.inv(&a)) == g.unit(n);
        report.record(ok && unit_ok, || format!("{a:?}, {b:?}"));
    }
    report
}
