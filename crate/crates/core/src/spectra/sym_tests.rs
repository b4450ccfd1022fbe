use alloc::sync::Arc;
use alloc::vec::Vec;

use super::*;
use crate::retractive::{point_plus, sphere0, RetMap, RetSpace};
use crate::sset::{point, standard, FinSSet, NdId, SMap, Simplex};

fn d1() -> Arc<FinSSet> {
    Arc::new(standard(1))
}

fn pt() -> Arc<FinSSet> {
    Arc::new(point())
}

/// Orbits of `Σ_n` under right multiplication by `Σ_{n-k}`, counted by
/// brute force.
fn coset_oracle(n: usize, k: usize) -> usize {
    let all = Perm::all(n);
    let sub: Vec<Perm> = Perm::all(n - k).into_iter().map(|h| h.block_sum(&Perm::identity(k))).collect();
    let mut seen: Vec<Perm> = Vec::new();
    let mut orbits = 0;
    for g in &all {
        if seen.contains(g) {
            continue;
        }
        orbits += 1;
        seen.extend(sub.iter().map(|h| g.compose(h)));
    }
    orbits
}

#[test]
fn sphere_levels_and_swap() {
    let x = d1();
    let s = sphere_sym(&x, 3).unwrap();
    let one = s.spec().level(1);
    let pulled = crate::retractive::PullbackRet::of_pointed(&x, &crate::retractive::sphere1()).unwrap();
    assert_eq!(one.total().census(), pulled.space().total().census());
    // over the point the swap exchanges the two triangles of S^1 ∧ S^1
    let sp = sphere_sym(&pt(), 2).unwrap();
    let two = sp.spec().level(2);
    let nondeg: Vec<NdId> = two.total().all_nd().filter(|u| u.dim() == 2).collect();
    assert_eq!(nondeg.len(), 2);
    let tau = sp.spec().action(2).generator(0);
    assert_eq!(tau.apply(Simplex::nondegenerate(nondeg[0])), Simplex::nondegenerate(nondeg[1]));
}

#[test]
fn actions_check_relations() {
    let sp = sphere_sym(&pt(), 3).unwrap();
    let l3 = sp.spec().level(3).clone();
    let cyc = cyclic_permutation(sp.spec(), 3).unwrap();
    let t0 = sp.spec().action(3).generator(0).clone();
    assert!(GAction::new(l3.clone(), 3, alloc::vec![t0.clone(), cyc.clone()]).is_err());
    // both generators acting alike factors through the sign and is allowed
    assert!(GAction::new(l3.clone(), 3, alloc::vec![t0.clone(), t0.clone()]).is_ok());
    assert!(GAction::new(l3, 3, alloc::vec![t0]).is_err());
    // the cyclic map has order 3 and is not the identity
    let id = RetMap::identity(sp.spec().level(3));
    assert_ne!(cyc.map(), id.map());
    assert_eq!(cyc.compose(&cyc).unwrap().compose(&cyc).unwrap().map(), id.map());
}

#[test]
fn trivial_action_breaks_the_sphere() {
    let sp = sphere_sym(&pt(), 2).unwrap();
    let actions: Vec<GAction> = (0..=2).map(|n| GAction::trivial(sp.spec().level(n), n)).collect();
    assert!(SymSpec::new(forget_to_seq(sp.spec()), actions).is_err());
}

#[test]
fn forgetting_the_point_sphere() {
    let sp = sphere_sym(&pt(), 3).unwrap();
    let seq = forget_to_seq(sp.spec());
    let free = free_seq(0, &sphere0(), 3).unwrap();
    let tower = free_tower(&free, 0).unwrap();
    let maps = (0..=3)
        .map(|n| {
            let (src, tgt) = (free.level(n), seq.level(n));
            RetMap::from_fn(src, tgt, |u| {
                let s = Simplex::nondegenerate(u);
                match tower.split(n, s) {
                    None => Ok(tgt.base_simplex(src.project(s))),
                    Some(p) => sp.elem(n, p.x, &p.coords),
                }
            })
            .unwrap()
        })
        .collect();
    let m = SeqMor::new(&free, &seq, maps).unwrap();
    assert!(m.is_isomorphism());
    assert!(forget_to_seq(free_sym(2, &RetSpace::zero(&pt()), 3).unwrap().spec()).is_zero());
}

#[test]
fn free_on_unit_is_sphere() {
    let x = d1();
    let f = free_sym(0, &RetSpace::unit(&x), 3).unwrap();
    let s = sphere_sym(&x, 3).unwrap();
    let maps = (0..=3)
        .map(|n| {
            let (src, tgt) = (f.level(n), s.spec().level(n));
            RetMap::from_fn(src, tgt, |u| {
                let v = Simplex::nondegenerate(u);
                match f.split(n, v) {
                    None => Ok(tgt.base_simplex(src.project(v))),
                    Some(p) => s.elem(n, p.x, &p.coords),
                }
            })
            .unwrap()
        })
        .collect();
    let m = SymMor::new(f.spec(), s.spec(), maps).unwrap();
    assert!(m.is_isomorphism());
}

#[test]
fn free_summand_counts() {
    let f = free_sym(1, &sphere0(), 4).unwrap();
    assert!(f.level(0).fibre_census().iter().all(|&c| c == 0));
    for n in 1..=4 {
        assert_eq!(f.summands(n), n);
        assert_eq!(f.summands(n), coset_oracle(n, 1));
    }
    let g = free_sym(2, &sphere0(), 4).unwrap();
    for n in 2..=4 {
        assert_eq!(g.summands(n), coset_oracle(n, 2));
    }
}

#[test]
fn free_sym_adjunction() {
    let x = d1();
    let b = sphere_sym(&x, 2).unwrap();
    let b2 = free_sym(1, &point_plus(&x, NdId::new(0, 0)).unwrap(), 2).unwrap();
    for target in [b.spec(), b2.spec()] {
        for k in 0..=2 {
            for y in [RetSpace::unit(&x), point_plus(&x, NdId::new(0, 1)).unwrap()] {
                let f = free_sym(k, &y, 2).unwrap();
                let homs = y.homs(target.level(k)).unwrap();
                assert_eq!(f.spec().hom_count(target).unwrap(), homs.len(), "k = {k}");
                for g in &homs {
                    let m = f.adjunct(target, g).unwrap();
                    // restricted to the identity coset it is g again
                    for u in y.total().all_nd() {
                        let s = Simplex::nondegenerate(u);
                        if y.is_base(s) {
                            continue;
                        }
                        let v = f.elem(k, &Perm::identity(k), y.project(s), &[], s).unwrap();
                        assert_eq!(m.level(k).apply(v), g.apply(s));
                    }
                }
            }
        }
    }
}

#[test]
fn xi_levels() {
    for k in 0..=1 {
        let m = xi(k, &sphere0(), k + 2).unwrap();
        let isos = m.mor.iso_levels();
        assert!(m.source.level(k).fibre_census().iter().all(|&c| c == 0));
        assert!(isos[k + 1], "k = {k}");
        let n = k + 2;
        assert_eq!(m.source.summands(n), coset_oracle(n, k + 1));
        assert_eq!(m.target.summands(n), coset_oracle(n, k));
        assert!(!isos[n]);
        // each summand lands in the one indexed by its coset
        let src = m.source.level(n);
        let mut hit = alloc::collections::BTreeSet::new();
        for u in src.total().all_nd() {
            let s = Simplex::nondegenerate(u);
            let Some(p) = m.source.split(n, s) else { continue };
            let v = m.mor.level(n).apply(s);
            let Some(q) = m.target.split(n, v) else { continue };
            assert_eq!(q.rep, coset_decompose(&p.rep, k).0);
            hit.insert(v.nd());
        }
        // and every simplex of the target off the section is reached
        let tgt = m.target.level(n);
        let off = tgt.total().all_nd().filter(|&u| !tgt.is_base(Simplex::nondegenerate(u))).count();
        assert_eq!(hit.len(), off);
    }
}

#[test]
fn pulled_sphere_is_sphere() {
    let x = d1();
    let s = sphere_sym(&x, 2).unwrap();
    let at = SMap::constant(&pt(), &x, NdId::new(0, 1)).unwrap();
    let (fibre, _) = pull_sym(&at, s.spec()).unwrap();
    let sp = sphere_sym(&pt(), 2).unwrap();
    for n in 0..=2 {
        assert_eq!(fibre.level(n).total().census(), sp.spec().level(n).total().census());
    }
}

fn concentrated(base: &Arc<FinSSet>, degree: usize, trunc: usize, y: &RetSpace) -> SymSeq {
    let levels = (0..=trunc)
        .map(|n| {
            let sp = if n == degree { y.clone() } else { RetSpace::zero(base) };
            GAction::trivial(&sp, n)
        })
        .collect();
    SymSeq::new(levels).unwrap()
}

#[test]
fn day_two_shuffles_swapped() {
    let x = d1();
    let y = point_plus(&x, NdId::new(0, 0)).unwrap();
    let a = concentrated(&x, 1, 2, &y);
    let d = DayConv::new(&a, &a, Pairing::Fibrewise).unwrap();
    // one summand per (p, shuffle): 1 + 2 + 1
    assert_eq!(d.summand_count(2), 4);
    let tau = d.seq().action(2).generator(0);
    let mut swapped = 0;
    for u in d.level(2).total().all_nd() {
        let s = Simplex::nondegenerate(u);
        let Some(p) = d.split(2, s) else { continue };
        assert_eq!(p.p, 1);
        let q = d.split(2, tau.apply(s)).unwrap();
        assert_ne!(p.shuffle, q.shuffle);
        assert_eq!((q.a, q.b), (p.a, p.b));
        swapped += 1;
    }
    assert!(swapped > 0);
}

fn iso_equivariant(maps: &[RetMap], src: &SymSeq, tgt: &SymSeq) -> bool {
    maps.iter().enumerate().all(|(n, m)| m.is_isomorphism() && is_equivariant(m, src.action(n), tgt.action(n)).unwrap())
}

#[test]
fn day_is_symmetric_monoidal() {
    let x = d1();
    let s = sphere_sym(&x, 3).unwrap();
    let f = free_sym(1, &point_plus(&x, NdId::new(0, 1)).unwrap(), 3).unwrap();
    let (a, b) = (s.spec().actions(), f.spec().actions());
    let u = SymSeq::unit(&x, 3);
    let ub = DayConv::new(&u, b, Pairing::Fibrewise).unwrap();
    assert!(iso_equivariant(&day_unit_left(&ub).unwrap(), ub.seq(), b));
    let ab = DayConv::new(a, b, Pairing::Fibrewise).unwrap();
    let ba = DayConv::new(b, a, Pairing::Fibrewise).unwrap();
    let sym = day_symmetry(&ab, &ba).unwrap();
    assert!(iso_equivariant(&sym, ab.seq(), ba.seq()));
    let back = day_symmetry(&ba, &ab).unwrap();
    for n in 0..=3 {
        assert_eq!(back[n].compose(&sym[n]).unwrap().map(), RetMap::identity(ab.level(n)).map());
    }
    let c = a;
    let ab_c = DayConv::new(ab.seq(), c, Pairing::Fibrewise).unwrap();
    let bc = DayConv::new(b, c, Pairing::Fibrewise).unwrap();
    let a_bc = DayConv::new(a, bc.seq(), Pairing::Fibrewise).unwrap();
    let assoc = day_assoc(&ab, &ab_c, &bc, &a_bc).unwrap();
    assert!(iso_equivariant(&assoc, ab_c.seq(), a_bc.seq()));
}

#[test]
fn sphere_is_a_commutative_monoid() {
    let x = d1();
    let s = sphere_sym(&x, 3).unwrap();
    let a = s.spec().actions();
    let ss = DayConv::new(a, a, Pairing::Fibrewise).unwrap();
    let mu = sphere_mult(&s, &ss).unwrap();
    assert!(mu.iter().enumerate().all(|(n, m)| is_equivariant(m, ss.seq().action(n), a.action(n)).unwrap()));
    let ids: Vec<RetMap> = (0..=3).map(|n| RetMap::identity(a.level(n))).collect();
    // associativity
    let ss_s = DayConv::new(ss.seq(), a, Pairing::Fibrewise).unwrap();
    let s_ss = DayConv::new(a, ss.seq(), Pairing::Fibrewise).unwrap();
    let assoc = day_assoc(&ss, &ss_s, &ss, &s_ss).unwrap();
    let mu_1 = day_map(&ss_s, &ss, &mu, &ids).unwrap();
    let one_mu = day_map(&s_ss, &ss, &ids, &mu).unwrap();
    for n in 0..=3 {
        let left = mu[n].compose(&mu_1[n]).unwrap();
        let right = mu[n].compose(&one_mu[n]).unwrap().compose(&assoc[n]).unwrap();
        assert_eq!(left.map(), right.map(), "n = {n}");
    }
    // unit
    let u = SymSeq::unit(&x, 3);
    let eta = sphere_unit(&s, &u).unwrap();
    let us = DayConv::new(&u, a, Pairing::Fibrewise).unwrap();
    let eta_1 = day_map(&us, &ss, &eta, &ids).unwrap();
    let unitor = day_unit_left(&us).unwrap();
    for n in 0..=3 {
        assert_eq!(mu[n].compose(&eta_1[n]).unwrap().map(), unitor[n].map());
    }
    // commutativity
    let sym = day_symmetry(&ss, &ss).unwrap();
    for n in 0..=3 {
        assert_eq!(mu[n].compose(&sym[n]).unwrap().map(), mu[n].map());
    }
}

#[test]
fn smash_unit_and_zero() {
    let x = d1();
    let s = sphere_sym(&x, 2).unwrap();
    let b = free_sym(1, &point_plus(&x, NdId::new(0, 0)).unwrap(), 2).unwrap();
    let sm = fib_smash_sym(s.spec(), b.spec()).unwrap();
    assert!(smash_unit_left(&sm, &s).unwrap().is_isomorphism());
    let z = free_sym(0, &RetSpace::zero(&x), 2).unwrap();
    let zb = fib_smash_sym(z.spec(), b.spec()).unwrap();
    assert!(forget_to_seq(zb.spec()).is_zero());
}

#[test]
fn free_smash_free_fibrewise() {
    let x = d1();
    let y = point_plus(&x, NdId::new(0, 0)).unwrap();
    let z = RetSpace::unit(&x);
    for (k, l) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let n = 2;
        let fy = free_sym(k, &y, n).unwrap();
        let fz = free_sym(l, &z, n).unwrap();
        let sm = fib_smash_sym(fy.spec(), fz.spec()).unwrap();
        let pair = PairedGen::new(Pairing::Fibrewise, &y, &z).unwrap();
        let target = free_sym(k + l, pair.space(), n).unwrap();
        let m = free_smash_compare(&sm, &fy, &fz, &pair, &target).unwrap();
        assert!(m.is_isomorphism(), "(k, l) = ({k}, {l}): {:?}", m.iso_levels());
    }
}

#[test]
fn free_smash_free_external() {
    let x = d1();
    let y = point_plus(&x, NdId::new(0, 1)).unwrap();
    let z = sphere0();
    for (k, l) in [(0, 0), (1, 0), (0, 1)] {
        let fy = free_sym(k, &y, 1).unwrap();
        let fz = free_sym(l, &z, 1).unwrap();
        let sm = ext_smash_sym(fy.spec(), fz.spec()).unwrap();
        let pair = PairedGen::new(Pairing::External, &y, &z).unwrap();
        let target = free_sym(k + l, pair.space(), 1).unwrap();
        let m = free_smash_compare(&sm, &fy, &fz, &pair, &target).unwrap();
        assert!(m.is_isomorphism(), "(k, l) = ({k}, {l})");
    }
}

#[test]
fn strict_fibre_of_external_smash() {
    let x = d1();
    let y = point_plus(&x, NdId::new(0, 0)).unwrap();
    let a = free_sym(0, &y, 1).unwrap();
    let b = free_sym(1, &sphere0(), 1).unwrap();
    let ext = ext_smash_sym(a.spec(), b.spec()).unwrap();
    let at_x = SMap::constant(&pt(), &x, NdId::new(0, 0)).unwrap();
    let at_y = SMap::identity(&pt());
    let (xa, pxa) = pull_sym(&at_x, a.spec()).unwrap();
    let (yb, pyb) = pull_sym(&at_y, b.spec()).unwrap();
    let fib = fib_smash_sym(&xa, &yb).unwrap();
    let base = ext.spec().base().clone();
    let xy = SMap::constant(&pt(), &base, NdId::new(0, 0)).unwrap();
    let (target, pulled) = pull_sym(&xy, ext.spec()).unwrap();
    let pa: Vec<_> = (0..=1).map(|n| pxa.pull(n).clone()).collect();
    let pb: Vec<_> = (0..=1).map(|n| pyb.pull(n).clone()).collect();
    let pt_: Vec<_> = (0..=1).map(|n| pulled.pull(n).clone()).collect();
    let m = strict_fibre_compare(&ext, &fib, (&pa, &pb), (&target, &pt_)).unwrap();
    assert!(m.is_isomorphism());
}
