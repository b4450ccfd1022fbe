use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::*;
use crate::retractive::{point_plus, PullbackRet, RetMap, RetSpace, sphere1};
use crate::sset::{circle, point, product, sphere, standard, two_points, FinSSet, NdId, SMap, Simplex};

fn s1() -> Arc<FinSSet> {
    Arc::new(circle())
}

fn corpus() -> Vec<(&'static str, Arc<FinSSet>)> {
    let t = product(&s1(), &s1()).unwrap().object().clone();
    alloc::vec![("S1", s1()), ("S2", Arc::new(sphere(2))), ("T2", t)]
}

fn v0() -> NdId {
    NdId::new(0, 0)
}

#[test]
fn loop_group_rejects_unreduced() {
    assert!(loop_group(&Arc::new(standard(1))).is_err());
    assert!(loop_group(&Arc::new(point())).is_ok());
}

#[test]
fn circle_loop_group_has_one_generator_per_level() {
    let g = loop_group(&s1()).unwrap();
    for n in 0..5 {
        // (n+1)-simplices of S^1 not s_0-degenerate: surjections [n+1] -> [1]
        // with η(0) ≠ η(1), plus the edge itself when n = 0
        let oracle = (1..=n + 1).filter(|&cut| cut == 1).count();
        assert_eq!(g.generators(n).len(), oracle, "n = {n}");
    }
    let e = Simplex::nondegenerate(NdId::new(1, 0));
    assert!(!g.bar(e).word.is_unit());
    assert!(g.bar(e.degeneracy(0)).word.is_unit());
    // faces of the level-1 generator both give the level-0 generator
    let y = g.generators(1)[0];
    let gy = g.bar(y);
    assert_eq!(g.face(&gy, 0), g.bar(e));
    assert_eq!(g.face(&gy, 1), g.bar(e));
}

#[test]
fn sphere_loop_group_levels() {
    let g = loop_group(&Arc::new(sphere(2))).unwrap();
    assert!(g.generators(0).is_empty());
    assert_eq!(g.generators(1).len(), 1);
    let p = loop_group(&Arc::new(point())).unwrap();
    assert!((0..4).all(|n| p.generators(n).is_empty()));
}

#[test]
fn simplicial_identities_hold_on_samples() {
    for (name, x) in corpus() {
        let g = loop_group(&x).unwrap();
        let checks = [
            check_identities(&g, name, 1000, 3, 0),
            check_homomorphisms(&g, name, 300, 3, 0),
            check_identities(&wbar(&g), name, 1000, 3, 0),
            check_identities(&w_total(&g), name, 1000, 3, 0),
            check_identities(&path_fib(&x).unwrap(), name, 1000, 3, 0),
        ];
        for r in &checks {
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn unit_is_simplicial() {
    for (name, x) in corpus() {
        let g = loop_group(&x).unwrap();
        let b = wbar(&g);
        for n in 0..=3 {
            for s in x.simplices(n) {
                let u = unit_map(&g, s);
                assert_eq!(b.dim(&u), n);
                for i in 0..=n.saturating_sub(0) {
                    if n > 0 {
                        assert_eq!(unit_map(&g, x.face(s, i)), b.face(&u, i), "{name}: d{i} {s:?}");
                    }
                }
                for j in 0..=n {
                    assert_eq!(unit_map(&g, s.degeneracy(j)), b.degeneracy(&u, j), "{name}: s{j} {s:?}");
                }
            }
        }
    }
}

#[test]
fn path_fibration_is_the_pullback() {
    for (_, x) in corpus() {
        let p = path_fib(&x).unwrap();
        let w = w_total(p.group());
        let b = wbar(p.group());
        let mut rng = seeded(7);
        for _ in 0..300 {
            let n = (rng.next_u32() % 4) as usize;
            let s = p.sample(n, &mut rng);
            let t = p.to_total(&s);
            // over the unit, and faces agree with those of W𝔾X
            assert_eq!(w.project(&t), unit_map(p.group(), s.x));
            assert_eq!(b.dim(&w.project(&t)), n);
            for i in 0..=n {
                if n > 0 {
                    assert_eq!(p.to_total(&p.face(&s, i)), w.face(&t, i));
                }
                assert_eq!(p.to_total(&p.degeneracy(&s, i)), w.degeneracy(&t, i));
            }
        }
        let u = p.unit_over(Simplex::nondegenerate(v0()));
        assert_eq!(p.project(&u), Simplex::nondegenerate(v0()));
    }
}

use rand_core::RngCore;

#[test]
fn components_of_the_circle_loop_group() {
    // all words of length <= 4 in 𝔾S^1_1; an edge joins d_1 h to d_0 h
    let g = loop_group(&s1()).unwrap();
    let gens = g.generators(1);
    let mut words = alloc::vec![FreeWord::unit()];
    let mut frontier = words.clone();
    for _ in 0..4 {
        let mut next = Vec::new();
        for w in &frontier {
            for &y in &gens {
                for inv in [false, true] {
                    let l = FreeWord::from_letters([(y, inv)]);
                    let v = w.mul(&l);
                    if v.len() == w.len() + 1 {
                        next.push(v);
                    }
                }
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    // reduced words in k letters: 1 + Σ 2k(2k-1)^{l-1}
    let k = gens.len();
    let oracle = 1 + (1..=4).map(|l| 2 * k * (2 * k - 1).pow(l - 1)).sum::<usize>();
    assert_eq!(words.len(), oracle);
    let merges = words
        .iter()
        .filter(|w| {
            let h = LoopWord { dim: 1, word: (*w).clone() };
            let (a, b) = (g.face(&h, 0), g.face(&h, 1));
            a.word.abelianise() != b.word.abelianise()
        })
        .count();
    assert_eq!(merges, 0);
}

#[test]
fn path_action_is_free_and_fibrewise() {
    for (_, x) in corpus() {
        let r = path_action_check(&x, 200, 3, 0).unwrap();
        assert!(r.passed(), "{r}");
    }
}

fn pointed3() -> RetSpace {
    let mut b = crate::sset::FinSSetBuilder::new();
    for n in ["*", "a", "b"] {
        b.add(n, Vec::new()).unwrap();
    }
    RetSpace::pointed(&Arc::new(b.build().unwrap()), v0()).unwrap()
}

fn swap(m: &RetSpace) -> SMap {
    let t = m.total().clone();
    SMap::new(
        t.clone(),
        t,
        alloc::vec![alloc::vec![
            Simplex::nondegenerate(NdId::new(0, 0)),
            Simplex::nondegenerate(NdId::new(0, 2)),
            Simplex::nondegenerate(NdId::new(0, 1)),
        ]],
    )
    .unwrap()
}

#[test]
fn local_systems_check_the_cocycle() {
    let t = product(&s1(), &s1()).unwrap().object().clone();
    let g = loop_group(&t).unwrap();
    let m = pointed3();
    let id = SMap::identity(m.total());
    // on the torus one edge twisted and the others not breaks a 2-simplex
    let mut autos = alloc::vec![id.clone(); t.count(1)];
    autos[0] = swap(&m);
    let all_swaps = alloc::vec![swap(&m); t.count(1)];
    assert!(LocalSystem::new(&g, &m, autos).is_err() || LocalSystem::new(&g, &m, all_swaps).is_err());
    let moved = SMap::constant(m.total(), m.total(), NdId::new(0, 1)).unwrap();
    assert!(LocalSystem::new(&loop_group(&s1()).unwrap(), &m, alloc::vec![moved]).is_err());
}

#[test]
fn borel_quotients() {
    let x = s1();
    let g = loop_group(&x).unwrap();
    // trivial action on S^0 gives X_{+X}
    let s0 = crate::retractive::sphere0();
    let q = borel_quotient(&LocalSystem::trivial(&g, &s0), 4).unwrap();
    let unit = RetSpace::unit(&x);
    assert_eq!(q.space().total().census(), unit.total().census());
    assert_eq!(q.space().hom_count(&unit).unwrap(), unit.hom_count(&unit).unwrap());
    assert!(q.space().homs(&unit).unwrap().iter().any(RetMap::is_isomorphism));
    // the one-point space gives 0_X
    let pt = RetSpace::pointed(&Arc::new(point()), v0()).unwrap();
    let z = borel_quotient(&LocalSystem::trivial(&g, &pt), 4).unwrap();
    assert!(RetMap::zero(z.space(), &RetSpace::zero(&x)).unwrap().is_isomorphism());
    // a swap along the loop joins the two extra points
    let m = pointed3();
    let tw = LocalSystem::new(&g, &m, alloc::vec![swap(&m)]).unwrap();
    let q = borel_quotient(&tw, 4).unwrap();
    let e = Simplex::nondegenerate(NdId::new(1, 0));
    let a = Simplex::nondegenerate(NdId::new(0, 1)).lift(1);
    let c = q.class(e, a).unwrap();
    let ends: BTreeSet<_> = q.space().total().faces_of(c).into_iter().collect();
    assert_eq!(ends.len(), 2);
    let triv = borel_quotient(&LocalSystem::trivial(&g, &m), 4).unwrap();
    let c = triv.class(e, a).unwrap();
    let ends: BTreeSet<_> = triv.space().total().faces_of(c).into_iter().collect();
    assert_eq!(ends.len(), 1);
}

#[test]
fn borel_normalisation_is_well_defined() {
    let x = s1();
    let g = loop_group(&x).unwrap();
    let m = pointed3();
    let sys = LocalSystem::new(&g, &m, alloc::vec![swap(&m)]).unwrap();
    let q = borel_quotient(&sys, 3).unwrap();
    let p = path_fib(&x).unwrap();
    let mut rng = seeded(0);
    for _ in 0..300 {
        let n = (rng.next_u32() % 3) as usize;
        let s = p.sample(n, &mut rng);
        let ms = m.total().simplices(n);
        let mm = ms[(rng.next_u32() as usize) % ms.len()];
        let c = q.class_of(&sys, &s, mm).unwrap();
        // translating the pair does not change its class
        let h = g.sample(n, &mut rng);
        assert_eq!(q.class_of(&sys, &p.act(&h, &s), sys.act(&h, mm)), Some(c));
        for i in 0..=n {
            if n > 0 {
                let direct = q.class_of(&sys, &p.face(&s, i), m.total().face(mm, i)).unwrap();
                assert_eq!(q.space().total().face(c, i), direct);
            }
        }
    }
}

#[test]
fn quotient_of_the_group_by_itself() {
    // (ℙX × 𝔾X)/𝔾X ≅ ℙX through [x, g, m] ↦ (x, m^{-1} g)
    let x = s1();
    let p = path_fib(&x).unwrap();
    let g = p.group();
    let phi = |s: &PathSimplex, m: &LoopWord| PathSimplex { x: s.x, g: g.mul(&g.inv(m), &s.g) };
    let mut rng = seeded(3);
    for _ in 0..300 {
        let n = (rng.next_u32() % 3) as usize;
        let (s, m, h) = (p.sample(n, &mut rng), g.sample(n, &mut rng), g.sample(n, &mut rng));
        assert_eq!(phi(&p.act(&h, &s), &g.mul(&h, &m)), phi(&s, &m));
        // the normalised representative [x, 1, g^{-1} m] has the same image
        let rep = p.unit_over(s.x);
        assert_eq!(phi(&rep, &g.mul(&g.inv(&s.g), &m)), phi(&s, &m));
        for i in 0..=n {
            if n > 0 {
                assert_eq!(phi(&p.face(&s, i), &g.face(&m, i)), p.face(&phi(&s, &m), i));
            }
        }
    }
}

#[test]
fn eta_and_epsilon() {
    let x = s1();
    let ys = [RetSpace::unit(&x), point_plus(&x, v0()).unwrap(), PullbackRet::of_pointed(&x, &sphere1()).unwrap().space().clone()];
    for y in &ys {
        let r = eta_eps_check(y, 100, 3, 0).unwrap();
        assert!(r.passed(), "{r}");
    }
    let pt = Arc::new(point());
    let r = eta_eps_check(&RetSpace::unit(&pt), 50, 3, 0).unwrap();
    assert!(r.passed());
}

fn plus_labels(c: &ComodData) -> Vec<(Simplex, Option<Simplex>)> {
    c.module().total().all_nd().map(|u| (Simplex::nondegenerate(u), c.label(Simplex::nondegenerate(u)))).collect()
}

#[test]
fn coactions_of_pushforwards() {
    let x = s1();
    let coalg = PlusCoalg::new(&x).unwrap();
    let (c, _) = coaction(&coalg, &RetSpace::unit(&x)).unwrap();
    assert_eq!(c.module().total().census(), coalg.plus().total().census());
    // the diagonal: every simplex of X is labelled by itself
    for (s, l) in plus_labels(&c) {
        match l {
            Some(x) => assert_eq!(x.dim(), s.dim()),
            None => assert!(c.module().is_base(s)),
        }
    }
    let labels: BTreeSet<_> = plus_labels(&c).into_iter().filter_map(|(_, l)| l).collect();
    assert_eq!(labels.len(), x.total_count());
    // x_{+X} gives S^0 coacting through x
    let (c, _) = coaction(&coalg, &point_plus(&x, v0()).unwrap()).unwrap();
    assert_eq!(c.module().total().census(), alloc::vec![2]);
    let nb = c.module().total().nd(0).find(|&v| v != c.module().basepoint()).unwrap();
    assert_eq!(c.label(Simplex::nondegenerate(nb)), Some(Simplex::nondegenerate(v0())));
}

#[test]
fn non_counital_coaction_is_rejected() {
    let x = Arc::new(point());
    let coalg = PlusCoalg::new(&x).unwrap();
    let n = RetSpace::disjoint_basepoint(&Arc::new(two_points()));
    let smash = crate::retractive::SmashProduct::pair(coalg.plus(), &n).unwrap();
    let pt0 = Simplex::nondegenerate(v0());
    let others: Vec<NdId> = n.total().nd(0).filter(|&v| v != n.basepoint()).collect();
    let rho = RetMap::from_fn(&n, smash.space(), |u| {
        let s = Simplex::nondegenerate(u);
        if n.is_base(s) {
            return Ok(smash.space().base_simplex(pt0));
        }
        // send each point to x ∧ (the other point)
        let o = if u == others[0] { others[1] } else { others[0] };
        smash.tuple(pt0, &[coalg.point(pt0), Simplex::nondegenerate(o)])
    })
    .unwrap();
    assert!(ComodData::new(&coalg, &n, rho, smash).is_err());
}

fn retractive_corpus(x: &Arc<FinSSet>) -> Vec<RetSpace> {
    alloc::vec![
        RetSpace::unit(x),
        RetSpace::zero(x),
        point_plus(x, v0()).unwrap(),
        PullbackRet::of_pointed(x, &sphere1()).unwrap().space().clone(),
    ]
}

#[test]
fn costar_examples() {
    // over the point X⋆N = N
    let pt = Arc::new(point());
    let cp = PlusCoalg::new(&pt).unwrap();
    let (n, _) = coaction(&cp, &crate::retractive::sphere1()).unwrap();
    let cs = costar(&n).unwrap();
    assert_eq!(cs.space().total().census(), n.module().total().census());
    // X⋆X_+ = X_{+X}, through the unit
    let x = s1();
    let coalg = PlusCoalg::new(&x).unwrap();
    let unit = RetSpace::unit(&x);
    let (c, push) = coaction(&coalg, &unit).unwrap();
    let cs = costar(&c).unwrap();
    assert!(cs.unit(&unit, &push).unwrap().is_isomorphism());
    for y in retractive_corpus(&x) {
        let (c, push) = coaction(&coalg, &y).unwrap();
        let cs = costar(&c).unwrap();
        let eta = cs.unit(&y, &push).unwrap();
        // triangle identity: counit ∘ X_!(unit) = id
        let pc = crate::retractive::Pushforward::new(push.base_map(), cs.space()).unwrap();
        let counit = cs.counit(&c, &pc).unwrap();
        let pushed = RetMap::from_fn(push.space(), pc.space(), |u| {
            let s = Simplex::nondegenerate(u);
            Ok(match push.split(s) {
                crate::retractive::PushPoint::Fibre(w) => pc.fibre(eta.apply(w)),
                crate::retractive::PushPoint::Base(_) => pc.space().base_simplex(Simplex::nondegenerate(v0()).lift(u.dim())),
            })
        })
        .unwrap();
        assert_eq!(counit.compose(&pushed).unwrap().map(), RetMap::identity(push.space()).map());
    }
}

#[test]
fn costar_adjunction_counts() {
    let x = s1();
    let coalg = PlusCoalg::new(&x).unwrap();
    let ys = retractive_corpus(&x);
    let comods: Vec<ComodData> = ys.iter().map(|y| coaction(&coalg, y).unwrap().0).collect();
    for y in &ys {
        let (c, push) = coaction(&coalg, y).unwrap();
        for n in &comods {
            let cs = costar(n).unwrap();
            let left = c.homs(n).unwrap();
            assert_eq!(y.hom_count(cs.space()).unwrap(), left.len());
            let ts: BTreeSet<Vec<Vec<Simplex>>> = left.iter().map(|f| cs.transpose(y, &push, f).unwrap().map().images().to_vec()).collect();
            assert_eq!(ts.len(), left.len());
        }
    }
}

#[test]
fn comodule_base_change() {
    let s = s1();
    let d1 = Arc::new(standard(1));
    let pt = Arc::new(point());
    let e = Simplex::nondegenerate(NdId::new(1, 0));
    let quotient = SMap::new(d1.clone(), s.clone(), alloc::vec![alloc::vec![Simplex::nondegenerate(v0()); 2], alloc::vec![e]]).unwrap();
    let maps = [
        SMap::identity(&s),
        SMap::constant(&s, &pt, v0()).unwrap(),
        SMap::constant(&pt, &s, v0()).unwrap(),
        quotient,
    ];
    let mut cases = 0;
    for f in &maps {
        let (src, tgt) = (PlusCoalg::new(f.source()).unwrap(), PlusCoalg::new(f.target()).unwrap());
        let ns: Vec<ComodData> = [RetSpace::unit(f.source()), point_plus(f.source(), v0()).unwrap()].iter().map(|y| coaction(&src, y).unwrap().0).collect();
        let ms: Vec<ComodData> = retractive_corpus(f.target()).iter().take(3).map(|y| coaction(&tgt, y).unwrap().0).collect();
        for n in &ns {
            let pushed = comod_push(&tgt, f, n).unwrap();
            assert_eq!(pushed.module().total().census(), n.module().total().census());
            for m in &ms {
                let (pulled, _) = comod_pull(&src, f, m).unwrap();
                assert_eq!(pushed.homs(m).unwrap().len(), n.homs(&pulled).unwrap().len());
                cases += 1;
            }
        }
        if f.source() == f.target() {
            for m in &ms {
                let (pulled, proj) = comod_pull(&src, f, m).unwrap();
                assert!(proj.is_isomorphism());
                assert_eq!(pulled.module().total().census(), m.module().total().census());
            }
        }
    }
    assert!(cases >= 10);
}

#[test]
fn pre_duality_sides() {
    let x = s1();
    let coalg = PlusCoalg::new(&x).unwrap();
    let k = koszul_pre(&coalg, &RetSpace::unit(&x)).unwrap();
    assert_eq!(k.comodule.module().total().census(), coalg.plus().total().census());
    // module side for x_{+X}: one free orbit in each dimension
    let y = point_plus(&x, v0()).unwrap();
    let k = koszul_pre(&coalg, &y).unwrap();
    let g = k.module.pulled().path().group().clone();
    let mut rng = seeded(0);
    for n in 0..=1 {
        let mut reps = BTreeSet::new();
        for _ in 0..50 {
            let (_, s) = k.module.sample(n, &mut rng);
            let Some(s) = s else { continue };
            let h = g.sample(n, &mut rng);
            assert_eq!(k.module.act(&h, &Some(s.clone())) == Some(s.clone()), h.word.is_unit());
            reps.insert(k.module.pulled().normalise(&s).0);
        }
        let off = y.total().simplices(n).into_iter().filter(|&s| !y.is_base(s)).count();
        assert_eq!(reps.len(), off);
    }
    assert!(check_identities(&k.module, "module", 300, 2, 0).passed());
    // over the point both sides are pointed sets
    let pt = Arc::new(point());
    let cp = PlusCoalg::new(&pt).unwrap();
    let k = koszul_pre(&cp, &crate::retractive::sphere1()).unwrap();
    let mut rng = seeded(1);
    for _ in 0..20 {
        let (_, s) = k.module.sample(1, &mut rng);
        if let Some(s) = s {
            assert!(s.g.word.is_unit());
        }
    }
    assert!(koszul_pre(&PlusCoalg::new(&Arc::new(standard(1))).unwrap(), &RetSpace::unit(&Arc::new(standard(1)))).is_err());
}
