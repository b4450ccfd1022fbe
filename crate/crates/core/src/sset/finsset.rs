//! Finite simplicial sets stored by their nondegenerate simplices.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::degop::{is_monotone, subsets, DegOp, MAX_DIM};
use super::simplex::{NdId, Simplex};
use crate::{Error, Result};

/// A finite simplicial set. Level `d` lists the nondegenerate `d`-simplices;
/// every face is stored in normal form.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct FinSSet {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<Simplex>>>,
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == '#')
}

/// `theta^*` of `s` for a monotone `theta: [k] -> [dim s]`, against a face
/// table that may still be under construction.
pub(crate) fn apply_in(faces: &[Vec<Vec<Simplex>>], s: Simplex, theta: &[usize]) -> Simplex {
    let eta = s.deg().surjection(s.dim());
    let mut comp: Vec<usize> = theta.iter().map(|&t| eta[t]).collect();
    let mut cur = s.nd();
    loop {
        let m = cur.dim();
        let mut next = 0;
        let mut missing = None;
        for &v in &comp {
            if v > next {
                missing = Some(next);
                break;
            }
            next = v + 1;
        }
        if missing.is_none() && next <= m {
            missing = Some(next);
        }
        let Some(j) = missing else {
            return Simplex::new(DegOp::from_surjection(&comp), cur);
        };
        let f = faces[m][cur.index()][j];
        let tau = f.deg().surjection(m - 1);
        for v in comp.iter_mut() {
            if *v > j {
                *v -= 1;
            }
            *v = tau[*v];
        }
        cur = f.nd();
    }
}

pub(crate) fn face_table(n: usize, i: usize) -> Vec<usize> {
    (0..=n).filter(|&k| k != i).collect()
}

impl FinSSet {
    pub fn empty() -> Self {
        FinSSet::default()
    }

    /// Highest dimension with a nondegenerate simplex; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.names.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Number of nondegenerate simplices in dimension `d`.
    pub fn count(&self, d: usize) -> usize {
        self.names.get(d).map_or(0, Vec::len)
    }

    /// Nondegenerate counts by dimension.
    pub fn census(&self) -> Vec<usize> {
        self.names.iter().map(Vec::len).collect()
    }

    pub fn total_count(&self) -> usize {
        self.names.iter().map(Vec::len).sum()
    }

    pub fn nd(&self, d: usize) -> impl Iterator<Item = NdId> + '_ {
        (0..self.count(d)).map(move |i| NdId::new(d, i))
    }

    /// All nondegenerate simplices, by increasing dimension.
    pub fn all_nd(&self) -> impl Iterator<Item = NdId> + '_ {
        (0..self.names.len()).flat_map(move |d| self.nd(d))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.nd(0).map(Simplex::nondegenerate)
    }

    pub fn name(&self, x: NdId) -> &str {
        &self.names[x.dim()][x.index()]
    }

    pub fn find(&self, name: &str) -> Option<NdId> {
        self.all_nd().find(|&x| self.name(x) == name)
    }

    /// Stored faces of a nondegenerate simplex.
    pub fn nd_faces(&self, x: NdId) -> &[Simplex] {
        &self.faces[x.dim()][x.index()]
    }

    pub fn contains(&self, s: Simplex) -> bool {
        let x = s.nd();
        x.index() < self.count(x.dim()) && (s.deg().bits() >> s.dim()) == 0
    }

    /// Readable label such as `e` or `s1.0(e)`.
    pub fn label(&self, s: Simplex) -> String {
        if s.is_degenerate() {
            let idx: Vec<String> = s.deg().indices().iter().map(|i| i.to_string()).collect();
            format!("s{}({})", idx.join("."), self.name(s.nd()))
        } else {
            self.name(s.nd()).to_string()
        }
    }

    pub fn face(&self, s: Simplex, i: usize) -> Simplex {
        let n = s.dim();
        debug_assert!(n >= 1 && i <= n);
        if !s.is_degenerate() {
            return self.faces[n][s.nd().index()][i];
        }
        apply_in(&self.faces, s, &face_table(n, i))
    }

    pub fn faces_of(&self, s: Simplex) -> Vec<Simplex> {
        (0..=s.dim()).map(|i| self.face(s, i)).collect()
    }

    /// The structure map for a monotone `theta: [k] -> [dim s]` given by its
    /// vertex table.
    pub fn apply(&self, s: Simplex, theta: &[usize]) -> Result<Simplex> {
        if theta.is_empty() || !is_monotone(theta) || theta.iter().any(|&t| t > s.dim()) {
            return Err(Error::InvalidArgument(format!("{theta:?} is not a monotone map into [{}]", s.dim())));
        }
        if !self.contains(s) {
            return Err(Error::ForeignSimplex);
        }
        Ok(apply_in(&self.faces, s, theta))
    }

    pub(crate) fn apply_unchecked(&self, s: Simplex, theta: &[usize]) -> Simplex {
        apply_in(&self.faces, s, theta)
    }

    /// The `k`-th vertex of `s`.
    pub fn vertex(&self, s: Simplex, k: usize) -> NdId {
        apply_in(&self.faces, s, &[k]).nd()
    }

    /// Every `n`-simplex, degenerate or not, in a fixed order: by the
    /// dimension of the nondegenerate part, then position, then operator.
    pub fn simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for e in 0..=n.min(self.names.len().saturating_sub(1)) {
            if self.count(e) == 0 {
                continue;
            }
            let ops: Vec<DegOp> = if n == 0 {
                alloc::vec![DegOp::IDENTITY]
            } else {
                subsets(n, n - e).map(DegOp::from_bits).collect()
            };
            for x in self.nd(e) {
                for &op in &ops {
                    out.push(Simplex::new(op, x));
                }
            }
        }
        out
    }

    /// Number of `n`-simplices including degenerate ones.
    pub fn level_size(&self, n: usize) -> usize {
        (0..=n).map(|e| self.count(e) * binomial(n, n - e)).sum()
    }

    /// Restriction to the simplices of dimension at most `d`.
    pub fn skeleton(&self, d: usize) -> FinSSet {
        FinSSet {
            names: self.names.iter().take(d + 1).cloned().collect(),
            faces: self.faces.iter().take(d + 1).cloned().collect(),
        }
    }

    /// Exactly one vertex.
    pub fn is_reduced(&self) -> bool {
        self.count(0) == 1
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Incremental construction of a [`FinSSet`], checked on [`build`](Self::build).
#[derive(Clone, Default, Debug)]
pub struct FinSSetBuilder {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<Simplex>>>,
    used: BTreeSet<String>,
}

impl FinSSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self, d: usize) -> usize {
        self.names.get(d).map_or(0, Vec::len)
    }

    /// Adds a nondegenerate simplex whose dimension is `faces.len() - 1`
    /// (a vertex when `faces` is empty).
    pub fn add(&mut self, name: impl Into<String>, faces: Vec<Simplex>) -> Result<NdId> {
        let name = name.into();
        if !valid_name(&name) {
            return Err(Error::InvalidName(name));
        }
        if self.used.contains(&name) {
            return Err(Error::DuplicateName(name));
        }
        let d = faces.len().saturating_sub(1);
        if faces.len() == 1 {
            return Err(Error::BadFaces {
                simplex: name,
                reason: "a simplex has no faces or at least two".into(),
            });
        }
        if d > MAX_DIM {
            return Err(Error::DimensionTooLarge(d));
        }
        for f in &faces {
            let x = f.nd();
            if f.dim() + 1 != d || x.index() >= self.count(x.dim()) || (f.deg().bits() >> f.dim()) != 0 {
                return Err(Error::BadFaces {
                    simplex: name,
                    reason: "face is not a simplex of the previous dimension".into(),
                });
            }
        }
        while self.names.len() <= d {
            self.names.push(Vec::new());
            self.faces.push(Vec::new());
        }
        let id = NdId::new(d, self.names[d].len());
        self.used.insert(name.clone());
        self.names[d].push(name);
        self.faces[d].push(faces);
        Ok(id)
    }

    /// Like [`add`](Self::add) but makes the name unique by suffixing.
    pub fn add_fresh(&mut self, name: impl Into<String>, faces: Vec<Simplex>) -> Result<NdId> {
        let mut name: String = name.into();
        if !valid_name(&name) {
            name = name.replace(|c: char| c.is_whitespace() || c == '#', "_");
            if name.is_empty() {
                name.push('_');
            }
        }
        if self.used.contains(&name) {
            let mut k = 1;
            while self.used.contains(&format!("{name}'{k}")) {
                k += 1;
            }
            name = format!("{name}'{k}");
        }
        self.add(name, faces)
    }

    pub fn face(&self, s: Simplex, i: usize) -> Simplex {
        apply_in(&self.faces, s, &face_table(s.dim(), i))
    }

    pub fn build(self) -> Result<FinSSet> {
        let mut names = self.names;
        let mut faces = self.faces;
        while names.last().is_some_and(Vec::is_empty) {
            names.pop();
            faces.pop();
        }
        let out = FinSSet { names, faces };
        out.check_identities()?;
        Ok(out)
    }
}

impl FinSSet {
    fn check_identities(&self) -> Result<()> {
        for d in 2..self.faces.len() {
            for x in self.nd(d) {
                let s = Simplex::nondegenerate(x);
                for j in 1..=d {
                    let dj = self.face(s, j);
                    for i in 0..j {
                        let di = self.face(s, i);
                        if self.face(dj, i) != self.face(di, j - 1) {
                            return Err(Error::SimplicialIdentity {
                                simplex: self.name(x).to_string(),
                                i,
                                j,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
