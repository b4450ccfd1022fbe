//! Double spectra `A_m(n)` with structure maps in both directions, and the
//! grid `Σ^m_X P_n` generated by a spectrum `P`.

use alloc::vec::Vec;

use super::seq::{twist, SeqSpec};
use super::tower::SuspTower;
use crate::retractive::{fib_suspension, RetMap, RetSpace, SmashPoint, SmashProduct};
use crate::sset::{same, Simplex};
use crate::{Error, Result};

/// Which index stays fixed at 0 in [`ev0`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `A_•(0)`: vary the first index.
    First,
    /// `A_0(•)`: vary the second index.
    Second,
}

/// A grid `A_m(n)` for `m <= M`, `n <= N`, with `μ_{m,n}: Σ_X A_m(n) ->
/// A_{m+1}(n)` and `ν_{m,n}: Σ_X A_m(n) -> A_m(n+1)` out of the same
/// suspension.
#[derive(Clone, Debug)]
pub struct DblSpec {
    grid: Vec<Vec<RetSpace>>,
    susp: Vec<Vec<SmashProduct>>,
    mu: Vec<Vec<Option<RetMap>>>,
    nu: Vec<Vec<Option<RetMap>>>,
}

impl DblSpec {
    pub fn new(grid: Vec<Vec<RetSpace>>, susp: Vec<Vec<SmashProduct>>, mu: Vec<Vec<Option<RetMap>>>, nu: Vec<Vec<Option<RetMap>>>) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 || grid.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("a double spectrum needs a rectangular grid".into()));
        }
        for m in 0..rows {
            for n in 0..cols {
                let s = &susp[m][n];
                if !same(s.factor(1).total(), grid[m][n].total()) {
                    return Err(Error::Mismatch("suspension does not match its cell".into()));
                }
                for (maps, next, name) in [(&mu, (m + 1, n), "μ"), (&nu, (m, n + 1), "ν")] {
                    let inside = next.0 < rows && next.1 < cols;
                    match (&maps[m][n], inside) {
                        (Some(f), true) => {
                            if !same(f.source().total(), s.space().total()) || !same(f.target().total(), grid[next.0][next.1].total()) {
                                return Err(Error::Mismatch(alloc::format!("{name} does not match the grid")));
                            }
                        }
                        (None, false) => {}
                        _ => return Err(Error::Mismatch(alloc::format!("{name} missing or beyond the grid"))),
                    }
                }
            }
        }
        let d = DblSpec { grid, susp, mu, nu };
        if !d.interchange()? {
            return Err(Error::NotFactorable("structure maps do not interchange".into()));
        }
        Ok(d)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.grid.len() - 1, self.grid[0].len() - 1)
    }

    pub fn cell(&self, m: usize, n: usize) -> &RetSpace {
        &self.grid[m][n]
    }

    pub fn susp(&self, m: usize, n: usize) -> &SmashProduct {
        &self.susp[m][n]
    }

    pub fn mu(&self, m: usize, n: usize) -> Option<&RetMap> {
        self.mu[m][n].as_ref()
    }

    pub fn nu(&self, m: usize, n: usize) -> Option<&RetMap> {
        self.nu[m][n].as_ref()
    }

    /// `μ_{m,n+1} ∘ Σν_{m,n} = ν_{m+1,n} ∘ Σμ_{m,n} ∘ τ` on
    /// `S^1 ⊙ S^1 ⊙ A_m(n)`, where `τ` swaps the two circles.
    pub fn interchange(&self) -> Result<bool> {
        let (mm, nn) = self.shape();
        for m in 0..mm {
            for n in 0..nn {
                let inner = &self.susp[m][n];
                let outer = fib_suspension(inner.space())?;
                let tw = twist(&outer, inner)?;
                let nu = self.nu[m][n].as_ref().expect("inside");
                let mu = self.mu[m][n].as_ref().expect("inside");
                let s_nu = suspend_into(&outer, &self.susp[m][n + 1], nu)?;
                let s_mu = suspend_into(&outer, &self.susp[m + 1][n], mu)?;
                let left = self.mu[m][n + 1].as_ref().expect("inside").compose(&s_nu)?;
                let right = self.nu[m + 1][n].as_ref().expect("inside").compose(&s_mu)?.compose(&tw)?;
                if left.map() != right.map() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Count of morphisms `self -> other`: maps of all cells commuting with
    /// both families of structure maps.
    pub fn hom_count(&self, other: &DblSpec) -> Result<usize> {
        if self.shape() != other.shape() {
            return Err(Error::Mismatch("double spectra of different shapes".into()));
        }
        let (mm, nn) = self.shape();
        let order: Vec<(usize, usize)> = (0..=nn).flat_map(|n| (0..=mm).map(move |m| (m, n))).collect();
        let mut acc: Vec<Vec<Option<RetMap>>> = alloc::vec![alloc::vec![None; nn + 1]; mm + 1];
        let mut count = 0;
        self.count_from(other, &order, 0, &mut acc, &mut count)?;
        Ok(count)
    }

    fn count_from(&self, other: &DblSpec, order: &[(usize, usize)], k: usize, acc: &mut Vec<Vec<Option<RetMap>>>, count: &mut usize) -> Result<()> {
        if k == order.len() {
            *count += 1;
            return Ok(());
        }
        let (m, n) = order[k];
        let mut search = self.grid[m][n].maps_to(&other.grid[m][n])?;
        let mut checks: Vec<(RetMap, RetMap)> = Vec::new();
        if m > 0 {
            let f = acc[m - 1][n].as_ref().expect("earlier cell");
            let sf = suspend_into(&self.susp[m - 1][n], &other.susp[m - 1][n], f)?;
            let value = other.mu[m - 1][n].as_ref().expect("inside").compose(&sf)?;
            let along = self.mu[m - 1][n].clone().expect("inside");
            search = search.fix_along(along.map(), value.map());
            checks.push((along, value));
        }
        if n > 0 {
            let f = acc[m][n - 1].as_ref().expect("earlier cell");
            let sf = suspend_into(&self.susp[m][n - 1], &other.susp[m][n - 1], f)?;
            let value = other.nu[m][n - 1].as_ref().expect("inside").compose(&sf)?;
            let along = self.nu[m][n - 1].clone().expect("inside");
            search = search.fix_along(along.map(), value.map());
            checks.push((along, value));
        }
        for g in search.maps() {
            if checks.iter().any(|(along, value)| g.compose(along.map()).ok().as_ref() != Some(value.map())) {
                continue;
            }
            acc[m][n] = Some(RetMap::new(self.grid[m][n].clone(), other.grid[m][n].clone(), g)?);
            self.count_from(other, order, k + 1, acc, count)?;
        }
        acc[m][n] = None;
        Ok(())
    }
}

/// `Σ_X f` from `src = S^1 ⊙ A` to `tgt = S^1 ⊙ B` for `f: A -> B`.
fn suspend_into(src: &SmashProduct, tgt: &SmashProduct, f: &RetMap) -> Result<RetMap> {
    src.map_to(tgt.space(), |p| match p {
        SmashPoint::Base(x) => Ok(tgt.space().base_simplex(x)),
        SmashPoint::Tuple(x, c) => tgt.tuple(x, &[c[0], f.apply(c[1])]),
    })
}

/// The grid `Σ^m_X P_n` for `m <= rows`: `μ` is the identity and `ν`
/// moves the new circle past the `m` old ones before applying `σ_n`.
pub fn dbl_from(p: &SeqSpec, rows: usize) -> Result<DblSpec> {
    if p.bound().is_some() {
        return Err(Error::InvalidArgument("grid of a truncated spectrum".into()));
    }
    let nn = p.trunc();
    // the column over P_n reuses P's own suspension as its first stage
    let towers: Vec<SuspTower> = (0..=nn)
        .map(|n| {
            let first: Vec<SmashProduct> = if n < nn { alloc::vec![p.susp(n).clone()] } else { Vec::new() };
            SuspTower::starting_with(p.level(n), &first, rows + 1)
        })
        .collect::<Result<_>>()?;
    let grid: Vec<Vec<RetSpace>> = (0..=rows).map(|m| (0..=nn).map(|n| towers[n].level(m).clone()).collect()).collect();
    let susp: Vec<Vec<SmashProduct>> = (0..=rows).map(|m| (0..=nn).map(|n| towers[n].stage(m + 1).clone()).collect()).collect();
    let mut mu = alloc::vec![alloc::vec![None; nn + 1]; rows + 1];
    let mut nu = alloc::vec![alloc::vec![None; nn + 1]; rows + 1];
    for m in 0..=rows {
        for n in 0..=nn {
            if m < rows {
                mu[m][n] = Some(RetMap::identity(towers[n].level(m + 1)));
            }
            if n < nn {
                nu[m][n] = Some(if m == 0 {
                    p.struct_map(n).clone()
                } else {
                    let (src, tgt) = (towers[n].level(m + 1), towers[n + 1].level(m));
                    RetMap::from_fn(src, tgt, |u| {
                        let s = Simplex::nondegenerate(u);
                        match towers[n].split(m + 1, s) {
                            None => Ok(tgt.base_simplex(src.project(s))),
                            Some(pt) => {
                                let y = p.sigma(n, pt.x, pt.coords[0], pt.y)?;
                                towers[n + 1].build(pt.x, &pt.coords[1..], y)
                            }
                        }
                    })?
                });
            }
        }
    }
    DblSpec::new(grid, susp, mu, nu)
}

/// Row or column 0 as a sequential spectrum.
pub fn ev0(d: &DblSpec, dir: Direction) -> Result<SeqSpec> {
    let (mm, nn) = d.shape();
    match dir {
        Direction::First => SeqSpec::new(
            (0..=mm).map(|m| d.grid[m][0].clone()).collect(),
            (0..mm).map(|m| d.susp[m][0].clone()).collect(),
            (0..mm).map(|m| d.mu[m][0].clone().expect("inside")).collect(),
            None,
        ),
        Direction::Second => SeqSpec::new(
            d.grid[0].clone(),
            d.susp[0][..nn].to_vec(),
            (0..nn).map(|n| d.nu[0][n].clone().expect("inside")).collect(),
            None,
        ),
    }
}
