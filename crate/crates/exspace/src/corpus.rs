//! The frozen corpus: small bases, maps among them, retractive spaces over
//! each base, and the interchange files kept under `corpus/`.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use exspace_core::global::{generating_cofibrations, GlobObj};
use exspace_core::invariants::Cover;
use exspace_core::retractive::{point_plus, sphere0, sphere1, PullbackRet, RetSpace, SmashProduct};
use exspace_core::spectra::{free_seq, free_sym, sphere_sym};
use exspace_core::sset::{boundary, boundary_inclusion, circle, horn, horn_inclusion, point, product, standard, yoneda, FinSSet, NdId, SMap, Simplex};

use crate::format::{CoverData, Object};

/// Where interchange files are looked up when a relative path does not
/// resolve on its own.
pub const CORPUS_ENV: &str = "EXSPACE_CORPUS";

pub fn corpus_dir() -> PathBuf {
    match std::env::var_os(CORPUS_ENV) {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus"),
    }
}

pub fn v0() -> NdId {
    NdId::new(0, 0)
}

fn arc(x: FinSSet) -> Arc<FinSSet> {
    Arc::new(x)
}

pub fn torus() -> FinSSet {
    let s1 = arc(circle());
    product(&s1, &s1).expect("finite product").object().as_ref().clone()
}

/// The corpus bases, with their short names.
pub fn bases() -> Vec<(&'static str, Arc<FinSSet>)> {
    vec![
        ("pt", arc(point())),
        ("d1", arc(standard(1))),
        ("d2", arc(standard(2))),
        ("bd2", arc(boundary(2))),
        ("horn21", arc(horn(2, 1).expect("k <= n"))),
        ("s1", arc(circle())),
        ("t2", arc(torus())),
    ]
}

pub fn base(name: &str) -> Arc<FinSSet> {
    bases().into_iter().find(|b| b.0 == name).map(|b| b.1).unwrap_or_else(|| panic!("no corpus base {name}"))
}

/// `0_X`, `X_{+X}`, `x_{+X}` at the first vertex, and `X × S^1` with the
/// basepoint section.
pub fn ret_corpus(x: &Arc<FinSSet>) -> Vec<(&'static str, RetSpace)> {
    vec![
        ("zero", RetSpace::zero(x)),
        ("unit", RetSpace::unit(x)),
        ("point_plus", point_plus(x, v0()).expect("vertex exists")),
        ("pulled_s1", PullbackRet::of_pointed(x, &sphere1()).expect("pointed").space().clone()),
    ]
}

/// `Δ^1 -> S^1` collapsing the boundary.
pub fn interval_to_circle() -> SMap {
    let (d1, s1) = (base("d1"), base("s1"));
    let e = Simplex::nondegenerate(NdId::new(1, 0));
    SMap::new(d1, s1, vec![vec![Simplex::nondegenerate(v0()); 2], vec![e]]).expect("simplicial")
}

/// Maps among corpus bases, used for base change.
pub fn base_maps() -> Vec<(&'static str, SMap)> {
    let (pt, d1, d2, s1) = (base("pt"), base("d1"), base("d2"), base("s1"));
    let at = |x: &Arc<FinSSet>, v: usize| SMap::constant(&pt, x, NdId::new(0, v)).expect("vertex exists");
    let to_pt = |x: &Arc<FinSSet>| SMap::constant(x, &pt, v0()).expect("nonempty target");
    let edge = yoneda(&d2, Simplex::nondegenerate(NdId::new(1, 0))).expect("a simplex of Δ^2");
    vec![
        ("d1_to_pt", to_pt(&d1)),
        ("pt_at_0_d1", at(&d1, 0)),
        ("pt_at_1_d1", at(&d1, 1)),
        ("bd1_in_d1", boundary_inclusion(1)),
        ("bd2_in_d2", boundary_inclusion(2)),
        ("horn21_in_d2", horn_inclusion(2, 1).expect("k <= n")),
        ("edge_in_d2", edge),
        ("d1_to_s1", interval_to_circle()),
        ("s1_to_pt", to_pt(&s1)),
        ("pt_in_s1", at(&s1, 0)),
    ]
}

pub fn glob_corpus() -> Vec<(&'static str, GlobObj)> {
    let (d1, s1, bd2) = (base("d1"), base("s1"), base("bd2"));
    vec![
        ("unit", GlobObj::unit()),
        ("sphere1", GlobObj::new(sphere1())),
        ("s1_point_plus", GlobObj::new(point_plus(&s1, v0()).expect("vertex"))),
        ("d1_unit", GlobObj::new(RetSpace::unit(&d1))),
        ("d1_zero", GlobObj::zero(&d1)),
        ("bd2_pulled_s1", GlobObj::new(PullbackRet::of_pointed(&bd2, &sphere1()).expect("pointed").space().clone())),
    ]
}

pub fn cover_corpus() -> Vec<(&'static str, CoverData)> {
    let c = |sets: &[&[u32]]| CoverData {
        names: (0..sets.len()).map(|i| format!("U{i}")).collect(),
        sets: sets.iter().map(|s| s.iter().copied().collect::<BTreeSet<u32>>()).collect(),
    };
    vec![
        ("three_arcs", c(&[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]])),
        ("single", c(&[&[0, 1, 2, 3]])),
        ("full3", c(&[&[0, 1], &[0, 2], &[0, 3]])),
        ("two_components", c(&[&[0, 1], &[1, 2], &[5, 6]])),
    ]
}

/// Runs `f` on the cover as an abstract nerve predicate.
pub fn with_cover<T>(c: &CoverData, f: impl FnOnce(&Cover<'_>) -> T) -> T {
    let meets = exspace_core::invariants::meets_of(&c.sets);
    let cover = Cover {
        sets: c.sets.len(),
        meets: &meets,
    };
    f(&cover)
}

/// The files kept under `corpus/`, each the canonical print of the object.
pub fn files() -> Vec<(String, Object)> {
    let mut out: Vec<(String, Object)> = Vec::new();
    for (name, x) in bases() {
        out.push((format!("{name}.sset"), Object::SSet(x)));
    }
    out.push(("empty.sset".into(), Object::SSet(arc(FinSSet::empty()))));
    for (name, f) in base_maps() {
        out.push((format!("{name}.smap"), Object::SMap(f)));
    }
    for b in ["s1", "d1"] {
        let x = base(b);
        for (name, y) in ret_corpus(&x) {
            out.push((format!("{name}_{b}.retspace"), Object::Ret(y)));
        }
    }
    let sm = SmashProduct::pair(&sphere1(), &sphere1()).expect("smash of circles");
    out.push(("s1_smash_s1.retspace".into(), Object::Ret(sm.space().clone())));
    out.push(("s1_smash_s1.sset".into(), Object::SSet(sm.space().total().clone())));
    for (name, a) in glob_corpus() {
        out.push((format!("{name}.globobj"), Object::GlobObj(a)));
    }
    let gens = generating_cofibrations(1).expect("generators");
    for (k, m) in gens.iter().enumerate() {
        out.push((format!("generating_{k}.globmor"), Object::GlobMor(m.clone())));
    }
    let d1 = base("d1");
    out.push(("free0_unit_d1.seqspec".into(), Object::Seq(free_seq(0, &RetSpace::unit(&d1), 2).expect("free"))));
    out.push(("free1_point_plus_d1.seqspec".into(), Object::Seq(free_seq(1, &point_plus(&d1, v0()).expect("vertex"), 2).expect("free"))));
    out.push(("sphere_d1.symspec".into(), Object::Sym(sphere_sym(&d1, 2).expect("sphere").spec().clone())));
    out.push(("free1_s0.symspec".into(), Object::Sym(free_sym(1, &sphere0(), 3).expect("free").spec().clone())));
    for (name, c) in cover_corpus() {
        out.push((format!("{name}.cover"), Object::Cover(c)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_object;

    #[test]
    fn corpus_shapes() {
        let census: Vec<Vec<usize>> = bases().iter().map(|b| b.1.census()).collect();
        assert_eq!(census, vec![vec![1], vec![2, 1], vec![3, 3, 1], vec![3, 3], vec![3, 2], vec![1, 1], vec![1, 3, 2]]);
        for (_, x) in bases() {
            assert_eq!(ret_corpus(&x).len(), 4);
        }
        for (name, f) in base_maps() {
            assert!(f.source().dim().is_some(), "{name}");
        }
    }

    #[test]
    fn files_round_trip() {
        for (name, o) in files() {
            let text = o.print();
            let back = parse_object(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(back.kind(), o.kind());
            assert_eq!(back.print(), text, "{name}");
        }
    }
}
