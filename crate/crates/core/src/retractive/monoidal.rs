//! Canonical comparison maps for the fibrewise smash product, built out of
//! the smash decomposition rather than by matching names.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::basechange::{internal_hom, PullbackRet, PushPoint, Pushforward, SectionSpace};
use super::smash::{SmashPoint, SmashProduct};
use super::space::{RetMap, RetSpace};
use crate::sset::{circle, point, FinSSet, NdId, SMap, Simplex};
use crate::{Error, Result};

fn unexpected_base() -> Error {
    Error::NotFactorable("tuple collapsed onto the base".into())
}

/// The point of the right dimension, for coordinates in a pointed factor.
pub(crate) fn point_simplex(n: usize) -> Simplex {
    Simplex::nondegenerate(NdId::new(0, 0)).lift(n)
}

/// `S^1` with its only vertex as basepoint.
pub fn sphere1() -> RetSpace {
    RetSpace::pointed(&Arc::new(circle()), NdId::new(0, 0)).expect("circle is pointed")
}

/// `S^0 = ∗_+`.
pub fn sphere0() -> RetSpace {
    RetSpace::unit(&Arc::new(point()))
}

/// `f_1 ∧ ... ∧ f_m` between two smash products of the same arity.
/// Pointed factors must carry maps of pointed sets over the point.
pub fn smash_map(src: &SmashProduct, tgt: &SmashProduct, maps: &[&RetMap]) -> Result<RetMap> {
    if maps.len() != src.arity() || maps.len() != tgt.arity() {
        return Err(Error::Mismatch("smash of maps with the wrong arity".into()));
    }
    src.map_to(tgt.space(), |p| match p {
        SmashPoint::Base(x) => Ok(tgt.space().base_simplex(x)),
        SmashPoint::Tuple(x, c) => {
            let img: Vec<Simplex> = c.iter().zip(maps).map(|(&s, f)| f.apply(s)).collect();
            tgt.tuple(x, &img)
        }
    })
}

/// `X_{+X} ∧_X Y -> Y` for a smash whose first factor is the unit.
pub fn left_unitor(s: &SmashProduct, y: &RetSpace) -> Result<RetMap> {
    s.map_to(y, |p| match p {
        SmashPoint::Base(x) => Ok(y.base_simplex(x)),
        SmashPoint::Tuple(_, c) => Ok(c[1]),
    })
}

/// `Y ∧_X X_{+X} -> Y`.
pub fn right_unitor(s: &SmashProduct, y: &RetSpace) -> Result<RetMap> {
    s.map_to(y, |p| match p {
        SmashPoint::Base(x) => Ok(y.base_simplex(x)),
        SmashPoint::Tuple(_, c) => Ok(c[0]),
    })
}

/// The swap `Y ∧_X Z -> Z ∧_X Y`.
pub fn symmetry(yz: &SmashProduct, zy: &SmashProduct) -> Result<RetMap> {
    yz.map_to(zy.space(), |p| match p {
        SmashPoint::Base(x) => Ok(zy.space().base_simplex(x)),
        SmashPoint::Tuple(x, c) => zy.tuple(x, &[c[1], c[0]]),
    })
}

/// `(A ∧ B) ∧ C -> A ∧ (B ∧ C)`.
pub fn associator(ab: &SmashProduct, ab_c: &SmashProduct, bc: &SmashProduct, a_bc: &SmashProduct) -> Result<RetMap> {
    ab_c.map_to(a_bc.space(), |p| match p {
        SmashPoint::Base(x) => Ok(a_bc.space().base_simplex(x)),
        SmashPoint::Tuple(x, c) => match ab.split(c[0]) {
            SmashPoint::Tuple(_, ab_coords) => {
                let inner = bc.tuple(x, &[ab_coords[1], c[1]])?;
                a_bc.tuple(x, &[ab_coords[0], inner])
            }
            SmashPoint::Base(_) => Err(unexpected_base()),
        },
    })
}

/// Regroups a nested binary smash into the flat ternary one:
/// `(A ∧ B) ∧ C -> A ∧ B ∧ C`.
pub fn flatten_left(ab: &SmashProduct, ab_c: &SmashProduct, flat: &SmashProduct) -> Result<RetMap> {
    ab_c.map_to(flat.space(), |p| match p {
        SmashPoint::Base(x) => Ok(flat.space().base_simplex(x)),
        SmashPoint::Tuple(x, c) => match ab.split(c[0]) {
            SmashPoint::Tuple(_, a) => flat.tuple(x, &[a[0], a[1], c[1]]),
            SmashPoint::Base(_) => Err(unexpected_base()),
        },
    })
}

/// The strong monoidal comparison `f^*(A ∧_{X'} B) -> f^*A ∧_X f^*B`.
pub fn pullback_monoidal(pulled: &PullbackRet, inner: &SmashProduct, fa: &PullbackRet, fb: &PullbackRet, outer: &SmashProduct) -> Result<RetMap> {
    RetMap::from_fn(pulled.space(), outer.space(), |u| {
        let (x, s) = pulled.split(Simplex::nondegenerate(u));
        match inner.split(s) {
            SmashPoint::Base(_) => Ok(outer.space().base_simplex(x)),
            SmashPoint::Tuple(_, c) => {
                let a = fa.elem(x, c[0]).ok_or_else(|| Error::NotFactorable("not over the base".into()))?;
                let b = fb.elem(x, c[1]).ok_or_else(|| Error::NotFactorable("not over the base".into()))?;
                outer.tuple(x, &[a, b])
            }
        }
    })
}

/// The projection formula map `f_!(A ∧_X f^*B) -> f_!A ∧_{X'} B`.
/// `inner` is `A ∧_X f^*B`, `push` is `f_!` of it, `push_a` is `f_!A` and
/// `outer` is `f_!A ∧_{X'} B`.
pub fn projection_formula(push: &Pushforward, inner: &SmashProduct, fb: &PullbackRet, push_a: &Pushforward, outer: &SmashProduct) -> Result<RetMap> {
    let f = push.base_map();
    RetMap::from_fn(push.space(), outer.space(), |u| match push.split(Simplex::nondegenerate(u)) {
        PushPoint::Base(x) => Ok(outer.space().base_simplex(x)),
        PushPoint::Fibre(s) => match inner.split(s) {
            SmashPoint::Base(x) => Ok(outer.space().base_simplex(f.apply(x))),
            SmashPoint::Tuple(x, c) => {
                let b = fb.split(c[1]).1;
                outer.tuple(f.apply(x), &[push_a.fibre(c[0]), b])
            }
        },
    })
}

/// `f_!(K ⊙_X Y) -> K ⊙_{X'} f_!Y`.
pub fn push_tensor(push: &Pushforward, inner: &SmashProduct, push_y: &Pushforward, outer: &SmashProduct) -> Result<RetMap> {
    let f = push.base_map();
    RetMap::from_fn(push.space(), outer.space(), |u| match push.split(Simplex::nondegenerate(u)) {
        PushPoint::Base(x) => Ok(outer.space().base_simplex(x)),
        PushPoint::Fibre(s) => match inner.split(s) {
            SmashPoint::Base(x) => Ok(outer.space().base_simplex(f.apply(x))),
            SmashPoint::Tuple(x, c) => outer.tuple(f.apply(x), &[c[0], push_y.fibre(c[1])]),
        },
    })
}

/// `K ⊙_X (L ⊙_X Y) -> (K ∧ L) ⊙_X Y` where `kl` is the smash over the
/// point.
pub fn tensor_assoc(outer: &SmashProduct, inner: &SmashProduct, kl: &SmashProduct, target: &SmashProduct) -> Result<RetMap> {
    outer.map_to(target.space(), |p| match p {
        SmashPoint::Base(x) => Ok(target.space().base_simplex(x)),
        SmashPoint::Tuple(x, c) => match inner.split(c[1]) {
            SmashPoint::Tuple(_, ly) => {
                let pair = kl.tuple(point_simplex(x.dim()), &[c[0], ly[0]])?;
                target.tuple(x, &[pair, ly[1]])
            }
            SmashPoint::Base(_) => Err(unexpected_base()),
        },
    })
}

/// `Σ_X Y = S^1 ⊙_X Y`.
pub fn fib_suspension(y: &RetSpace) -> Result<SmashProduct> {
    SmashProduct::tensor(&sphere1(), y)
}

/// The cotensor `F_X(X^*K, Y)` up to dimension `top`.
pub fn pcotensor(k: &RetSpace, y: &RetSpace, top: usize) -> Result<SectionSpace> {
    let pk = PullbackRet::of_pointed(y.base(), k)?;
    internal_hom(pk.space(), y, top)
}

/// `Ω_X Y = F_X(X^*S^1, Y)` up to dimension `top`.
pub fn fib_loops(y: &RetSpace, top: usize) -> Result<SectionSpace> {
    pcotensor(&sphere1(), y, top)
}

/// `x_{+X}` for a vertex `x`: the base with one extra point over `x`.
pub fn point_plus(base: &Arc<FinSSet>, x: NdId) -> Result<RetSpace> {
    let pt = Arc::new(point());
    RetSpace::plus_base(&SMap::constant(&pt, base, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary_inclusion, standard};

    fn corpus(base: &Arc<FinSSet>) -> Vec<RetSpace> {
        let mut out = alloc::vec![RetSpace::unit(base), RetSpace::zero(base), point_plus(base, NdId::new(0, 0)).unwrap()];
        out.push(PullbackRet::of_pointed(base, &sphere1()).unwrap().space().clone());
        out
    }

    #[test]
    fn unitors_and_symmetry_are_isomorphisms() {
        let base = Arc::new(standard(1));
        let u = RetSpace::unit(&base);
        for y in corpus(&base) {
            let l = SmashProduct::pair(&u, &y).unwrap();
            assert!(left_unitor(&l, &y).unwrap().is_isomorphism());
            let r = SmashProduct::pair(&y, &u).unwrap();
            assert!(right_unitor(&r, &y).unwrap().is_isomorphism());
            for z in corpus(&base) {
                let yz = SmashProduct::pair(&y, &z).unwrap();
                let zy = SmashProduct::pair(&z, &y).unwrap();
                let t = symmetry(&yz, &zy).unwrap();
                assert!(t.is_isomorphism());
                let back = symmetry(&zy, &yz).unwrap();
                assert_eq!(back.compose(&t).unwrap(), RetMap::identity(yz.space()));
            }
        }
    }

    #[test]
    fn pentagon() {
        let base = Arc::new(circle());
        let s = PullbackRet::of_pointed(&base, &sphere1()).unwrap().space().clone();
        let p = point_plus(&base, NdId::new(0, 0)).unwrap();
        let u = RetSpace::unit(&base);
        let (a, b, c, d) = (s.clone(), p, u, s);
        let sm = |l: &RetSpace, r: &RetSpace| SmashProduct::pair(l, r).unwrap();
        let ab = sm(&a, &b);
        let ab_c = sm(ab.space(), &c);
        let ab_c_d = sm(ab_c.space(), &d);
        let cd = sm(&c, &d);
        let ab_cd = sm(ab.space(), cd.space());
        let b_cd = sm(&b, cd.space());
        let a_b_cd = sm(&a, b_cd.space());
        let bc = sm(&b, &c);
        let a_bc = sm(&a, bc.space());
        let a_bc_d = sm(a_bc.space(), &d);
        let bc_d = sm(bc.space(), &d);
        let a_bc_d2 = sm(&a, bc_d.space());
        let first = associator(&ab, &ab_cd, &b_cd, &a_b_cd)
            .unwrap()
            .compose(&associator(&ab_c, &ab_c_d, &cd, &ab_cd).unwrap())
            .unwrap();
        let alpha_abc = associator(&ab, &ab_c, &bc, &a_bc).unwrap();
        let l1 = smash_map(&ab_c_d, &a_bc_d, &[&alpha_abc, &RetMap::identity(&d)]).unwrap();
        let l2 = associator(&a_bc, &a_bc_d, &bc_d, &a_bc_d2).unwrap();
        let alpha_bcd = associator(&bc, &bc_d, &cd, &b_cd).unwrap();
        let l3 = smash_map(&a_bc_d2, &a_b_cd, &[&RetMap::identity(&a), &alpha_bcd]).unwrap();
        let second = l3.compose(&l2).unwrap().compose(&l1).unwrap();
        assert!(first.is_isomorphism());
        assert_eq!(first.map(), second.map());
    }

    #[test]
    fn projection_formula_and_monoidal_pullback() {
        let f = boundary_inclusion(2);
        let x = f.source().clone();
        let x2 = f.target().clone();
        for a in corpus(&x) {
            for b in corpus(&x2) {
                let fb = PullbackRet::new(&f, &b).unwrap();
                let inner = SmashProduct::pair(&a, fb.space()).unwrap();
                let push = Pushforward::new(&f, inner.space()).unwrap();
                let push_a = Pushforward::new(&f, &a).unwrap();
                let outer = SmashProduct::pair(push_a.space(), &b).unwrap();
                let m = projection_formula(&push, &inner, &fb, &push_a, &outer).unwrap();
                assert!(m.is_isomorphism());
            }
        }
        for a in corpus(&x2) {
            for b in corpus(&x2) {
                let inner = SmashProduct::pair(&a, &b).unwrap();
                let pulled = PullbackRet::new(&f, inner.space()).unwrap();
                let fa = PullbackRet::new(&f, &a).unwrap();
                let fb = PullbackRet::new(&f, &b).unwrap();
                let outer = SmashProduct::pair(fa.space(), fb.space()).unwrap();
                assert!(pullback_monoidal(&pulled, &inner, &fa, &fb, &outer).unwrap().is_isomorphism());
            }
        }
    }

    #[test]
    fn tensors() {
        let base = Arc::new(standard(1));
        let s1 = sphere1();
        for y in corpus(&base) {
            let t0 = SmashProduct::tensor(&sphere0(), &y).unwrap();
            assert_eq!(t0.space().total().census(), y.total().census());
            let inner = SmashProduct::tensor(&s1, &y).unwrap();
            let outer = SmashProduct::tensor(&s1, inner.space()).unwrap();
            let kl = SmashProduct::pair(&s1, &s1).unwrap();
            let target = SmashProduct::tensor(kl.space(), &y).unwrap();
            assert!(tensor_assoc(&outer, &inner, &kl, &target).unwrap().is_isomorphism());
        }
        // S^1 ⊙ x_{+X} is X with a circle attached at x
        let xp = point_plus(&base, NdId::new(0, 1)).unwrap();
        let t = fib_suspension(&xp).unwrap();
        assert_eq!(t.space().total().census(), alloc::vec![2, 2]);
    }
}
