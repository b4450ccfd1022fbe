//! Lifting properties by exhaustive search, and pushout-products.

use alloc::format;
use alloc::vec::Vec;

use super::verdict::{digest_maps, Verdict};
use crate::global::{pushout_product_global, GlobMor};
use crate::retractive::{smash_map, RetMap, SmashProduct};
use crate::sset::{enumerate_maps, horn_inclusion, product, pushout, MapSearch, SMap};
use crate::Result;

/// Whether `p` has the right lifting property with respect to `i`: every
/// commutative square from `i` to `p` has a diagonal filler.
pub fn rlp(i: &SMap, p: &SMap) -> Verdict {
    let digest = digest_maps(&[i, p]);
    let (a, b) = (i.source(), i.target());
    let (y, x) = (p.source(), p.target());
    let mut squares = 0usize;
    for u in enumerate_maps(a, y) {
        let pu = p.compose(&u).expect("p ∘ u is composable");
        for v in MapSearch::new(b, x).fix_along(i, &pu).maps() {
            if v.compose(i).expect("v ∘ i is composable") != pu {
                continue;
            }
            squares += 1;
            if !has_lift(i, p, &u, &v) {
                let show = |f: &SMap| {
                    let imgs: Vec<_> = f.source().all_nd().map(|s| f.target().label(f.image(s))).collect();
                    imgs.join(",")
                };
                let witness = format!("no lift for u=[{}] v=[{}]", show(&u), show(&v));
                return Verdict::new("rlp", digest, false, witness);
            }
        }
    }
    Verdict::new("rlp", digest, true, format!("squares={squares}"))
}

fn has_lift(i: &SMap, p: &SMap, u: &SMap, v: &SMap) -> bool {
    let mut found = false;
    MapSearch::new(i.target(), p.source())
        .fix_along(i, u)
        .filter(|s, img| p.apply(img) == v.image(s))
        .for_each(|images| {
            let h = SMap::new(i.target().clone(), p.source().clone(), images.to_vec()).expect("search yields maps");
            found = h.compose(i).is_ok_and(|hi| hi == *u) && p.compose(&h).is_ok_and(|ph| ph == *v);
            !found
        });
    found
}

/// The default horn cap: two above the dimension of the source.
pub fn default_horn_cap(p: &SMap) -> usize {
    p.source().dim().unwrap_or(0) + 2
}

/// `p` against every horn `Λ^n_k -> Δ^n` with `n <= cap`. A pass means
/// "no obstruction up to the cap".
pub fn fibration_check(p: &SMap, cap: usize) -> Verdict {
    let digest = digest_maps(&[p]);
    let mut horns = 0;
    for n in 1..=cap {
        for k in 0..=n {
            let h = horn_inclusion(n, k).expect("k <= n");
            let v = rlp(&h, p);
            horns += 1;
            if !v.pass {
                return Verdict::new("fibration", digest, false, format!("cap={cap} horn=({n},{k}) {}", v.witness));
            }
        }
    }
    Verdict::new("fibration", digest, true, format!("cap={cap} horns={horns}"))
}

/// A corner map and what was learned about it.
#[derive(Clone, Debug)]
pub struct PushoutProduct {
    pub corner: SMap,
    pub mono: bool,
    /// Nondegenerate simplices of the target outside the image, per
    /// dimension.
    pub complement: Vec<usize>,
}

impl PushoutProduct {
    fn new(corner: SMap) -> Self {
        let mono = corner.is_mono();
        let t = corner.target();
        let mut complement = Vec::new();
        if mono {
            complement = t.census();
            for s in corner.images().iter().flatten() {
                complement[s.dim()] -= 1;
            }
        }
        PushoutProduct { corner, mono, complement }
    }
}

/// `i □ j : B×C ∪_{A×C} A×D -> B×D` for `i: A -> B`, `j: C -> D`.
pub fn pushout_product(i: &SMap, j: &SMap) -> Result<PushoutProduct> {
    let (a, b) = (i.source(), i.target());
    let (c, d) = (j.source(), j.target());
    let (ac, bc, ad, bd) = (product(a, c)?, product(b, c)?, product(a, d)?, product(b, d)?);
    let i_c = bc.lift(&i.compose(ac.left())?, ac.right())?;
    let a_j = ad.lift(ac.left(), &j.compose(ac.right())?)?;
    let b_j = bd.lift(bc.left(), &j.compose(bc.right())?)?;
    let i_d = bd.lift(&i.compose(ad.left())?, ad.right())?;
    let po = pushout(&i_c, &a_j)?;
    let corner = po.factor(bd.object(), &[b_j.compose(&i_c)?, b_j, i_d])?;
    Ok(PushoutProduct::new(corner))
}

/// The same for the fibrewise smash product over a common base.
pub fn pushout_product_fibrewise(i: &RetMap, j: &RetMap) -> Result<PushoutProduct> {
    let (a, b) = (i.source(), i.target());
    let (c, d) = (j.source(), j.target());
    let ac = SmashProduct::pair(a, c)?;
    let bc = SmashProduct::pair(b, c)?;
    let ad = SmashProduct::pair(a, d)?;
    let bd = SmashProduct::pair(b, d)?;
    let (id_a, id_b) = (RetMap::identity(a), RetMap::identity(b));
    let (id_c, id_d) = (RetMap::identity(c), RetMap::identity(d));
    let i_c = smash_map(&ac, &bc, &[i, &id_c])?;
    let a_j = smash_map(&ac, &ad, &[&id_a, j])?;
    let b_j = smash_map(&bc, &bd, &[&id_b, j])?;
    let i_d = smash_map(&ad, &bd, &[i, &id_d])?;
    let po = pushout(i_c.map(), a_j.map())?;
    let corner = po.factor(bd.space().total(), &[b_j.compose(&i_c)?.map().clone(), b_j.map().clone(), i_d.map().clone()])?;
    Ok(PushoutProduct::new(corner))
}

/// The same for the external smash; the corner is recorded on totals and
/// the verdict also requires the base map to be a monomorphism.
pub fn pushout_product_external(i: &GlobMor, j: &GlobMor) -> Result<PushoutProduct> {
    let m = pushout_product_global(i, j)?;
    let mut out = PushoutProduct::new(m.total_map());
    out.mono = out.mono && m.base_map().is_mono();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::global::generating_cofibrations;
    use crate::retractive::RetSpace;
    use crate::sset::{boundary_inclusion, circle, point, standard, two_points, yoneda, FinSSet, NdId};
    use alloc::sync::Arc;

    #[test]
    fn identity_lifts_everything() {
        let i = boundary_inclusion(2);
        let id = SMap::identity(&Arc::new(circle()));
        assert!(rlp(&i, &id).pass);
        assert!(rlp(&horn_inclusion(2, 1).unwrap(), &SMap::identity(&Arc::new(standard(1)))).pass);
    }

    #[test]
    fn interval_to_point_is_not_a_trivial_fibration() {
        let pt = Arc::new(point());
        let p = SMap::constant(&Arc::new(standard(1)), &pt, NdId::new(0, 0)).unwrap();
        let v = rlp(&boundary_inclusion(1), &p);
        assert!(!v.pass);
        assert!(v.witness.starts_with("no lift"));
        // but ∂Δ^0 = ∅ -> Δ^0 lifts: Δ^1 has a vertex
        assert!(rlp(&boundary_inclusion(0), &p).pass);
    }

    #[test]
    fn discrete_maps_are_fibrations() {
        let two = Arc::new(two_points());
        let pt = Arc::new(point());
        let p = SMap::constant(&two, &pt, NdId::new(0, 0)).unwrap();
        let v = fibration_check(&p, 3);
        assert!(v.pass, "{v}");
        assert_eq!(v.witness, "cap=3 horns=9");
        assert!(fibration_check(&SMap::identity(&two), default_horn_cap(&p)).pass);
    }

    #[test]
    fn the_interval_is_not_kan() {
        // Λ^2_0 -> Δ^1 with d_2 the edge and d_1 constant at 0 does not fill
        let pt = Arc::new(point());
        let p = SMap::constant(&Arc::new(standard(1)), &pt, NdId::new(0, 0)).unwrap();
        let v = fibration_check(&p, 2);
        assert!(!v.pass);
        // the circle model is not Kan either: Λ^2_1 with both edges e
        let c = Arc::new(circle());
        let q = SMap::constant(&c, &pt, NdId::new(0, 0)).unwrap();
        assert!(!fibration_check(&q, 2).pass);
    }

    #[test]
    fn cartesian_square() {
        let i = boundary_inclusion(1);
        let pp = pushout_product(&i, &i).unwrap();
        assert!(pp.mono);
        assert_eq!(pp.complement, alloc::vec![0, 1, 2]);
        // with an identity the corner is an isomorphism
        let id = SMap::identity(&Arc::new(standard(1)));
        let q = pushout_product(&i, &id).unwrap();
        assert!(q.corner.is_isomorphism());
    }

    #[test]
    fn cartesian_generators() {
        for n in 0..=2 {
            for m in 0..=2 {
                let pp = pushout_product(&boundary_inclusion(n), &boundary_inclusion(m)).unwrap();
                assert!(pp.mono, "{n} {m}");
                // the interior of Δ^n × Δ^m: shuffles of every dimension
                let total: usize = pp.complement.iter().sum();
                assert!(total > 0);
            }
        }
    }

    /// `(∂Δ^n -> Δ^n)_{+X}` along a simplex `σ: Δ^n -> X`.
    pub(crate) fn fibrewise_generators(x: &Arc<FinSSet>, max: usize) -> Vec<RetMap> {
        let mut out = Vec::new();
        for n in 0..=max {
            for s in x.simplices(n) {
                let sigma = yoneda(x, s).unwrap();
                let inc = boundary_inclusion(n);
                out.push(RetSpace::plus_map(&sigma.compose(&inc).unwrap(), &sigma, &inc).unwrap());
            }
        }
        out
    }

    #[test]
    fn fibrewise_generators_over_the_circle() {
        let x = Arc::new(circle());
        let gens = fibrewise_generators(&x, 2);
        // v; s_0 v, e; s_0 s_0 v, s_0 e, s_1 e
        assert_eq!(gens.len(), 1 + 2 + 3);
        for i in &gens {
            for j in &gens {
                assert!(pushout_product_fibrewise(i, j).unwrap().mono);
            }
        }
    }

    #[test]
    fn external_generators() {
        let gens = generating_cofibrations(2).unwrap();
        for i in &gens {
            for j in &gens {
                assert!(pushout_product_external(i, j).unwrap().mono);
            }
        }
    }

    #[test]
    fn non_mono_corner_is_reported() {
        // the fold ∂Δ^1 -> Δ^0 against ∂Δ^1 -> Δ^1: the corner sends a
        // two-edge circle onto the interval
        let pt = Arc::new(point());
        let fold = SMap::constant(&Arc::new(crate::sset::boundary(1)), &pt, NdId::new(0, 0)).unwrap();
        let pp = pushout_product(&fold, &boundary_inclusion(1)).unwrap();
        assert_eq!(pp.corner.source().census(), alloc::vec![2, 2]);
        assert!(!pp.mono);
        assert!(pp.complement.is_empty());
    }
}
