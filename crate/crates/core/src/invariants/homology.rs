//! Normalised chains and homology over a field.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::retractive::RetSpace;
use crate::sset::{FinSSet, NdId};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Field {
    Rational,
    /// `𝔽_p` for a prime `p <= 97`.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || p > 97 || (2..p).any(|d| p % d == 0) {
            return Err(Error::InvalidArgument(alloc::format!("{p} is not a prime at most 97")));
        }
        Ok(Field::Prime(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// The normalised chain complex of a pair `(X, A)`: the basis in each
/// dimension is the nondegenerate simplices of `X` outside `A`, and a face
/// that is degenerate or lies in `A` contributes nothing.
#[derive(Clone, Debug)]
pub struct ChainData {
    field: Field,
    basis: Vec<Vec<NdId>>,
    /// `boundary[n]` is `∂_n : C_n -> C_{n-1}` as rows indexed by `C_{n-1}`.
    boundary: Vec<Vec<Vec<i64>>>,
}

impl ChainData {
    pub fn new(x: &FinSSet, field: Field) -> Self {
        Self::relative(x, |_| false, field)
    }

    pub fn relative(x: &FinSSet, in_sub: impl Fn(NdId) -> bool, field: Field) -> Self {
        let levels = x.dim().map_or(0, |d| d + 1);
        let basis: Vec<Vec<NdId>> = (0..levels).map(|d| x.nd(d).filter(|&u| !in_sub(u)).collect()).collect();
        let mut boundary = Vec::with_capacity(levels);
        for n in 0..levels {
            if n == 0 {
                boundary.push(Vec::new());
                continue;
            }
            let mut m = vec![vec![0i64; basis[n].len()]; basis[n - 1].len()];
            for (c, &u) in basis[n].iter().enumerate() {
                for (i, f) in x.nd_faces(u).iter().enumerate() {
                    if f.is_degenerate() {
                        continue;
                    }
                    if let Ok(r) = basis[n - 1].binary_search(&f.nd()) {
                        m[r][c] += if i % 2 == 0 { 1 } else { -1 };
                    }
                }
            }
            boundary.push(m);
        }
        ChainData { field, basis, boundary }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank_of_chains(&self, n: usize) -> usize {
        self.basis.get(n).map_or(0, Vec::len)
    }

    pub fn boundary(&self, n: usize) -> &[Vec<i64>] {
        &self.boundary[n]
    }

    /// `∂_{n-1} ∘ ∂_n = 0` for every `n`, over the integers.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..self.boundary.len()).all(|n| {
            let (a, b) = (&self.boundary[n - 1], &self.boundary[n]);
            let cols = self.basis[n].len();
            a.iter().all(|row| (0..cols).all(|c| row.iter().enumerate().map(|(k, &v)| v * b[k][c]).sum::<i64>() == 0))
        })
    }

    /// Betti numbers over the field, one per dimension of `X`.
    pub fn homology(&self) -> Vec<usize> {
        let levels = self.basis.len();
        let ranks: Vec<usize> = (0..levels).map(|n| if n == 0 { 0 } else { rank(&self.boundary[n], self.field) }).collect();
        (0..levels)
            .map(|n| self.basis[n].len() - ranks[n] - ranks.get(n + 1).copied().unwrap_or(0))
            .collect()
    }
}

/// Rank by fraction-free elimination over `ℚ`, or by elimination mod `p`.
pub fn rank(m: &[Vec<i64>], field: Field) -> usize {
    match field {
        Field::Rational => rank_rational(m),
        Field::Prime(p) => rank_mod(m, p),
    }
}

fn rank_rational(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].abs();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn rank_mod(m: &[Vec<i64>], p: u32) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&v| v.rem_euclid(p)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |v: i64| (1..p).find(|&w| v * w % p == 1).expect("nonzero residues are invertible");
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let s = inv(a[r][c]);
        for v in a[r].iter_mut() {
            *v = *v * s % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] - f * a[r][j]).rem_euclid(p);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn homology(x: &FinSSet, field: Field) -> Vec<usize> {
    ChainData::new(x, field).homology()
}

/// `H̃_*` of a pointed simplicial set, as the homology relative to the
/// basepoint.
pub fn reduced_homology(x: &FinSSet, basepoint: NdId, field: Field) -> Vec<usize> {
    ChainData::relative(x, |u| u == basepoint, field).homology()
}

/// `H̃_*(X_!Y)`: the homology of the pair `(Y, X)`, since `X_!Y = Y/X`.
pub fn rel_quotient_homology(y: &RetSpace, field: Field) -> Vec<usize> {
    let in_base = |u: NdId| y.is_base(crate::sset::Simplex::nondegenerate(u));
    ChainData::relative(y.total(), in_base, field).homology()
}

/// Drops trailing zeros.
pub fn normalise_dims(v: &[usize]) -> Vec<usize> {
    let mut out = v.to_vec();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::retractive::{point_plus, sphere1, SmashProduct};
    use crate::sset::{boundary, circle, product, sphere, standard};
    use alloc::sync::Arc;
    use proptest::prelude::*;

    const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

    #[test]
    fn small_spaces() {
        for f in FIELDS {
            assert_eq!(homology(&circle(), f), vec![1, 1]);
            assert_eq!(homology(&boundary(2), f), vec![1, 1]);
            assert_eq!(homology(&standard(3), f), vec![1, 0, 0, 0]);
            assert_eq!(normalise_dims(&homology(&boundary(3), f)), vec![1, 0, 1]);
            assert_eq!(homology(&sphere(2), f), vec![1, 0, 1]);
            let t = product(&Arc::new(circle()), &Arc::new(circle())).unwrap();
            assert_eq!(homology(t.object(), f), vec![1, 2, 1]);
        }
        assert!(homology(&FinSSet::empty(), Field::Rational).is_empty());
    }

    #[test]
    fn smash_of_circles() {
        let s = SmashProduct::pair(&sphere1(), &sphere1()).unwrap();
        for f in [Field::Rational, Field::Prime(2)] {
            assert_eq!(rel_quotient_homology(s.space(), f), vec![0, 0, 1]);
            let total = s.space().total();
            let h = homology(total, f);
            assert_eq!(h, vec![1, 0, 1]);
        }
    }

    /// `ℝP^2` with one cell per dimension distinguishes the fields.
    fn projective_plane() -> FinSSet {
        use crate::sset::{FinSSetBuilder, Simplex};
        let mut b = FinSSetBuilder::new();
        let v = b.add("v", vec![]).unwrap();
        let e = b.add("e", vec![v.into(), v.into()]).unwrap();
        b.add("t", vec![Simplex::from(e), Simplex::from(v).lift(1), Simplex::from(e)]).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn torsion_shows_over_f2_only() {
        let rp2 = projective_plane();
        assert_eq!(homology(&rp2, Field::Rational), vec![1, 0, 0]);
        assert_eq!(homology(&rp2, Field::Prime(2)), vec![1, 1, 1]);
        assert_eq!(homology(&rp2, Field::Prime(3)), vec![1, 0, 0]);
        assert!(ChainData::new(&rp2, Field::Rational).boundary_squares_to_zero());
    }

    #[test]
    fn relative_and_reduced() {
        let c = circle();
        assert_eq!(reduced_homology(&c, NdId::new(0, 0), Field::Rational), vec![0, 1]);
        let y = point_plus(&Arc::new(c), NdId::new(0, 0)).unwrap();
        assert_eq!(rel_quotient_homology(&y, Field::Rational), vec![1, 0]);
        assert!(Field::prime(4).is_err() && Field::prime(101).is_err() && Field::prime(97).is_ok());
    }

    fn rank_oracle(m: &[Vec<i64>]) -> usize {
        // rank over ℚ with f64 Gaussian elimination; entries are small
        let mut a: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).max_by(|&i, &j| a[i][c].abs().partial_cmp(&a[j][c].abs()).unwrap()) else { break };
            if a[p][c].abs() < 1e-9 {
                continue;
            }
            a.swap(r, p);
            for i in r + 1..a.len() {
                let f = a[i][c] / a[r][c];
                for j in c..cols {
                    a[i][j] -= f * a[r][j];
                }
            }
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn rational_rank_matches_float(m in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 0..6)) {
            prop_assert_eq!(rank(&m, Field::Rational), rank_oracle(&m));
            prop_assert!(rank(&m, Field::Prime(2)) <= rank(&m, Field::Rational));
        }

        #[test]
        fn euler_characteristic_is_field_independent(n in 0usize..4, k in 0usize..4) {
            let x = product(&Arc::new(standard(n)), &Arc::new(boundary(k.max(1)))).unwrap();
            let chi = |v: Vec<usize>| v.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum::<i64>();
            let cells: i64 = x.object().census().iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
            for f in FIELDS {
                prop_assert_eq!(chi(homology(x.object(), f)), cells);
            }
            prop_assert!(ChainData::new(x.object(), Field::Rational).boundary_squares_to_zero());
        }
    }
}
