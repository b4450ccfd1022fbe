//! Named verification suites. Each check yields one [`Verdict`]; a library
//! error while building the comparison counts as a failure and is reported
//! in the witness.

use std::collections::BTreeSet;
use std::sync::Arc;

use exspace_core::digest::Fnv64;
use exspace_core::global::{
    diag_compare, ext_assoc, ext_symmetry, ext_to_fib_compare, ext_unit_left, generating_cofibrations, ExtSmash, GlobMor, GlobObj, MorForm,
};
use exspace_core::invariants::{
    default_horn_cap, fibration_check, homology, normalise_dims, pushout_product, pushout_product_external, pushout_product_fibrewise,
    rel_quotient_homology, rlp, split_seq_check, cech_nerve, ChainData, Field, Verdict,
};
use exspace_core::koszul::{
    check_homomorphisms, check_identities, coaction, comod_pull, comod_push, costar, eta_eps_check, loop_group, path_action_check, path_fib,
    unit_map, w_total, wbar, ComodData, LazySSet, PlusCoalg, SampleReport,
};
use exspace_core::retractive::{
    associator, direct_image, left_unitor, point_plus, projection_formula, pullback_monoidal, push_tensor, right_unitor, smash_map, sphere0,
    sphere1, symmetry, PullbackRet, Pushforward, RetMap, RetSpace, SmashProduct,
};
use exspace_core::spectra::{
    day_assoc, day_map, day_symmetry, day_unit_left, ext_smash_sym, fib_smash_sym, free_adjunct, free_seq, free_smash_compare, free_sym,
    is_equivariant, pull_sym, Perm, pulled_sphere, push_free_compare, push_spec, smash_unit_left, sphere_mult, sphere_sym, sphere_unit,
    strict_fibre_compare, trivial_bundle_compare, tsp_algebra_check, tsp_monad_check, twist_relates, xi, zeta, DayConv, Pairing, PairedGen,
    SymMor, SymSeq,
};
use exspace_core::sset::{
    boundary_inclusion, enumerate_maps, product, pushout, sphere, standard, yoneda, FinSSet, NdId, Pullback, SMap, Simplex,
};
use exspace_core::Result as CoreResult;

use crate::corpus::{base, base_maps, bases, corpus_dir, cover_corpus, files, glob_corpus, ret_corpus, v0, with_cover};
use crate::format::parse_object;

pub const SUITES: [&str; 7] = ["unstable", "global", "seq", "sym", "koszul", "homology", "all"];

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    /// Truncation of the sequential spectra checks.
    pub trunc: usize,
    /// Truncation of the symmetric spectra checks.
    pub sym_trunc: usize,
    /// Horn dimension cap; `None` means two above the source dimension.
    pub horn_cap: Option<usize>,
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            trunc: 4,
            sym_trunc: 3,
            horn_cap: None,
            samples: 1000,
        }
    }
}

/// Runs a suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, opts: &Options) -> Option<Vec<Verdict>> {
    let out = match name {
        "unstable" => unstable(opts),
        "global" => global(opts),
        "seq" => seq(opts),
        "sym" => sym(opts),
        "koszul" => koszul(opts),
        "homology" => homology_suite(opts),
        "all" => SUITES[..6].iter().flat_map(|s| run_suite(s, opts).expect("known suite")).collect(),
        _ => return None,
    };
    Some(out)
}

/// Header, one TSV line per verdict, and a summary, each line ending in a
/// newline. Lines starting with `#` are commentary.
pub fn report(name: &str, opts: &Options, verdicts: &[Verdict]) -> String {
    let mut out = format!("# suite={name} seed={} trunc={} sym_trunc={} samples={}\n", opts.seed, opts.trunc, opts.sym_trunc, opts.samples);
    for v in verdicts {
        out.push_str(&v.tsv());
        out.push('\n');
    }
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    out.push_str(&format!(
        "# {} checks, {} passed, {} failed (suite {name}, seed {})\n",
        verdicts.len(),
        verdicts.len() - failed,
        failed,
        opts.seed
    ));
    out
}

#[derive(Default)]
struct Batch {
    out: Vec<Verdict>,
}

impl Batch {
    fn check(&mut self, claim: impl Into<String>, digest: u64, f: impl FnOnce() -> CoreResult<(bool, String)>) {
        let claim = claim.into();
        let v = match f() {
            Ok((pass, witness)) => Verdict::new(claim, digest, pass, witness),
            Err(e) => Verdict::new(claim, digest, false, format!("error: {e}")),
        };
        self.out.push(v);
    }

    fn sampled(&mut self, claim: impl Into<String>, r: CoreResult<SampleReport>) {
        let claim = claim.into();
        let mut h = Fnv64::new();
        h.write(claim.as_bytes());
        match r {
            Ok(r) => {
                h.write_u64(r.seed);
                let mut w = format!("seed={} samples={} failures={}", r.seed, r.samples, r.failures);
                if let Some(f) = &r.first_failure {
                    w.push_str(&format!(" first={f}"));
                }
                self.out.push(Verdict::new(claim, h.finish(), r.passed(), w));
            }
            Err(e) => self.out.push(Verdict::new(claim, h.finish(), false, format!("error: {e}"))),
        }
    }
}

fn digest(label: &str, xs: &[&FinSSet]) -> u64 {
    let mut h = Fnv64::new();
    h.write(label.as_bytes());
    for x in xs {
        h.write_sset(x);
    }
    h.finish()
}

fn digest_ret(label: &str, ys: &[&RetSpace]) -> u64 {
    let mut h = Fnv64::new();
    h.write(label.as_bytes());
    for y in ys {
        h.write_sset(y.base());
        h.write_sset(y.total());
        for s in y.section().images().iter().flatten().chain(y.retraction().images().iter().flatten()) {
            h.write_simplex(*s);
        }
    }
    h.finish()
}

fn show_dims(v: &[usize]) -> String {
    let parts: Vec<String> = normalise_dims(v).iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `C(n, k)` by the multiplicative formula.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn arc(x: FinSSet) -> Arc<FinSSet> {
    Arc::new(x)
}

fn iso_word(b: bool) -> &'static str {
    if b {
        "iso"
    } else {
        "not iso"
    }
}

// ---------------------------------------------------------------- unstable

pub fn unstable(opts: &Options) -> Vec<Verdict> {
    let mut out = shuffles();
    out.extend(product_symmetry());
    out.extend(yoneda_counts());
    out.extend(universal_properties());
    out.extend(base_change_adjunction());
    out.extend(direct_image_adjunction());
    out.extend(projection_formulas());
    out.extend(pullback_monoidality());
    out.extend(monoidal_coherence());
    out.extend(pushforward_tensors());
    out.extend(file_checks(&["sset", "smap", "retspace"]));
    let _ = opts;
    out
}

/// `|nondeg_{n+m}(Δ^n × Δ^m)| = C(n+m, n)` for `n + m <= 6`.
pub fn shuffles() -> Vec<Verdict> {
    let mut b = Batch::default();
    for n in 0..=6 {
        for m in 0..=6 - n {
            let (dn, dm) = (arc(standard(n)), arc(standard(m)));
            b.check(format!("unstable.shuffles n={n} m={m}"), digest("shuffles", &[&dn, &dm]), || {
                let p = product(&dn, &dm)?;
                let got = p.object().count(n + m);
                let want = binomial(n + m, n);
                Ok((got == want, format!("top={got} binomial={want}")))
            });
        }
    }
    b.out
}

pub fn product_symmetry() -> Vec<Verdict> {
    let mut b = Batch::default();
    let bs = bases();
    for (i, (na, x)) in bs.iter().enumerate() {
        for (nb, y) in &bs[i..] {
            b.check(format!("unstable.product_swap {na}x{nb}"), digest("swap", &[x, y]), || {
                let p = product(x, y)?;
                let q = product(y, x)?;
                let swap = q.lift(p.right(), p.left())?;
                let back = p.lift(q.right(), q.left())?;
                let pass = swap.is_isomorphism() && back.compose(&swap)? == SMap::identity(p.object());
                Ok((pass, format!("census={:?}", p.object().census())))
            });
        }
    }
    b.out
}

/// `|Hom(Δ^n, X)| = |X_n| = Σ_k |nondeg_k X| · C(n, k)`.
pub fn yoneda_counts() -> Vec<Verdict> {
    let mut b = Batch::default();
    for (name, x) in bases() {
        for n in 0..=3 {
            let dn = arc(standard(n));
            b.check(format!("unstable.yoneda {name} n={n}"), digest("yoneda", &[&dn, &x]), || {
                let got = enumerate_maps(&dn, &x).len();
                let want: usize = x.census().iter().enumerate().map(|(k, &c)| c * binomial(n, k)).sum();
                Ok((got == want, format!("maps={got} simplices={want}")))
            });
        }
    }
    b.out
}

pub fn universal_properties() -> Vec<Verdict> {
    let mut b = Batch::default();
    let maps: Vec<(&str, SMap)> = base_maps();
    let get = |n: &str| maps.iter().find(|m| m.0 == n).expect("corpus map").1.clone();
    let pt = base("pt");
    let to_pt = |x: &Arc<FinSSet>| SMap::constant(x, &pt, v0()).expect("nonempty");
    let bd1 = get("bd1_in_d1");
    let horn = get("horn21_in_d2");
    let pushouts = [
        ("circle", bd1.clone(), to_pt(bd1.source())),
        ("two_gon", bd1.clone(), bd1.clone()),
        ("horn_collapse", horn.clone(), to_pt(horn.source())),
        ("path", get("pt_at_0_d1"), get("pt_at_1_d1")),
    ];
    let targets = ["pt", "d1", "s1", "bd2"];
    for (name, f, g) in &pushouts {
        for t in targets {
            let tt = base(t);
            b.check(format!("unstable.pushout_universal {name} to {t}"), digest("pushout", &[f.source(), f.target(), g.target(), &tt]), || {
                let po = pushout(f, g)?;
                let homs = enumerate_maps(po.object(), &tt).len();
                let mut factored = BTreeSet::new();
                let mut pairs = 0;
                for u in enumerate_maps(f.target(), &tt) {
                    let uf = u.compose(f)?;
                    for v in enumerate_maps(g.target(), &tt) {
                        if v.compose(g)? != uf {
                            continue;
                        }
                        pairs += 1;
                        let h = po.factor(&tt, &[uf.clone(), u.clone(), v])?;
                        factored.insert(h.images().to_vec());
                    }
                }
                Ok((pairs == homs && factored.len() == pairs, format!("cocones={pairs} maps={homs}")))
            });
        }
    }
    let pullbacks = [
        ("product_d1_s1", to_pt(&base("d1")), to_pt(&base("s1"))),
        ("fibre_of_d1_to_s1", get("pt_in_s1"), get("d1_to_s1")),
        ("edge_meets_boundary", get("edge_in_d2"), get("bd2_in_d2")),
    ];
    for (name, f, g) in &pullbacks {
        for t in ["pt", "d1", "s1"] {
            let tt = base(t);
            b.check(format!("unstable.pullback_universal {name} from {t}"), digest("pullback", &[f.source(), g.source(), f.target(), &tt]), || {
                let pb = Pullback::new(f, g)?;
                let homs = enumerate_maps(&tt, pb.object()).len();
                let mut lifted = BTreeSet::new();
                let mut pairs = 0;
                for a in enumerate_maps(&tt, f.source()) {
                    let fa = f.compose(&a)?;
                    for c in enumerate_maps(&tt, g.source()) {
                        if g.compose(&c)? != fa {
                            continue;
                        }
                        pairs += 1;
                        lifted.insert(pb.lift(&a, &c)?.images().to_vec());
                    }
                }
                Ok((pairs == homs && lifted.len() == pairs, format!("cones={pairs} maps={homs}")))
            });
        }
    }
    b.out
}

/// `|Hom(f_!Y, Z)| = |Hom(Y, f^*Z)|`, with both adjunct round trips.
pub fn base_change_adjunction() -> Vec<Verdict> {
    let mut b = Batch::default();
    for (fname, f) in base_maps() {
        let (x, x2) = (f.source().clone(), f.target().clone());
        for (yn, y) in ret_corpus(&x) {
            for (zn, z) in ret_corpus(&x2) {
                b.check(format!("unstable.adjunction {fname} Y={yn} Z={zn}"), digest_ret(fname, &[&y, &z]), || {
                    let pf = Pushforward::new(&f, &y)?;
                    let pb = PullbackRet::new(&f, &z)?;
                    let left = pf.space().homs(&z)?;
                    let right = y.homs(pb.space())?;
                    let mut ok = left.len() == right.len();
                    for psi in &left {
                        ok &= pf.coadjunct(&pf.adjunct(psi, &pb)?, &pb)? == *psi;
                    }
                    for phi in &right {
                        ok &= pf.adjunct(&pf.coadjunct(phi, &pb)?, &pb)? == *phi;
                    }
                    Ok((ok, format!("left={} right={}", left.len(), right.len())))
                });
            }
        }
    }
    b.out
}

/// `|Hom(f^*Z, Y)| = |Hom(Z, f_*Y)|` with `f_*Y` computed through the
/// dimension of the probe `Z`.
pub fn direct_image_adjunction() -> Vec<Verdict> {
    let mut b = Batch::default();
    for (fname, f) in base_maps().into_iter().filter(|m| matches!(m.0, "pt_at_0_d1" | "bd1_in_d1" | "d1_to_pt" | "pt_in_s1")) {
        let (x, x2) = (f.source().clone(), f.target().clone());
        for (yn, y) in ret_corpus(&x) {
            for (zn, z) in ret_corpus(&x2).into_iter().filter(|z| z.0 != "pulled_s1") {
                b.check(format!("unstable.direct_image {fname} Y={yn} Z={zn}"), digest_ret(fname, &[&y, &z]), || {
                    let top = z.total().dim().unwrap_or(0);
                    let img = direct_image(&f, &y, top)?;
                    let pulled = PullbackRet::new(&f, &z)?;
                    let left = pulled.space().hom_count(&y)?;
                    let right = z.hom_count(img.space())?;
                    Ok((left == right, format!("left={left} right={right} top={top}")))
                });
            }
        }
    }
    b.out
}

fn monoidal_maps() -> Vec<(&'static str, SMap)> {
    base_maps()
        .into_iter()
        .filter(|m| matches!(m.0, "bd2_in_d2" | "horn21_in_d2" | "d1_to_s1" | "pt_at_0_d1" | "s1_to_pt"))
        .collect()
}

/// `f_!(A ∧ f^*B) -> f_!A ∧ B`.
pub fn projection_formulas() -> Vec<Verdict> {
    let mut b = Batch::default();
    for (fname, f) in monoidal_maps() {
        let (x, x2) = (f.source().clone(), f.target().clone());
        for (an, a) in ret_corpus(&x) {
            for (bn, bb) in ret_corpus(&x2) {
                b.check(format!("unstable.projection_formula {fname} A={an} B={bn}"), digest_ret(fname, &[&a, &bb]), || {
                    let fb = PullbackRet::new(&f, &bb)?;
                    let inner = SmashProduct::pair(&a, fb.space())?;
                    let push = Pushforward::new(&f, inner.space())?;
                    let push_a = Pushforward::new(&f, &a)?;
                    let outer = SmashProduct::pair(push_a.space(), &bb)?;
                    let m = projection_formula(&push, &inner, &fb, &push_a, &outer)?;
                    Ok((m.is_isomorphism(), iso_word(m.is_isomorphism()).into()))
                });
            }
        }
    }
    b.out
}

/// `f^*(A ∧ B) -> f^*A ∧ f^*B`.
pub fn pullback_monoidality() -> Vec<Verdict> {
    let mut b = Batch::default();
    for (fname, f) in monoidal_maps() {
        let x2 = f.target().clone();
        for (an, a) in ret_corpus(&x2) {
            for (bn, bb) in ret_corpus(&x2) {
                b.check(format!("unstable.pullback_monoidal {fname} A={an} B={bn}"), digest_ret(fname, &[&a, &bb]), || {
                    let inner = SmashProduct::pair(&a, &bb)?;
                    let pulled = PullbackRet::new(&f, inner.space())?;
                    let fa = PullbackRet::new(&f, &a)?;
                    let fb = PullbackRet::new(&f, &bb)?;
                    let outer = SmashProduct::pair(fa.space(), fb.space())?;
                    let m = pullback_monoidal(&pulled, &inner, &fa, &fb, &outer)?;
                    Ok((m.is_isomorphism(), iso_word(m.is_isomorphism()).into()))
                });
            }
        }
    }
    b.out
}

pub fn monoidal_coherence() -> Vec<Verdict> {
    let mut b = Batch::default();
    for bn in ["d1", "s1"] {
        let x = base(bn);
        let corpus = ret_corpus(&x);
        let u = RetSpace::unit(&x);
        for (yn, y) in &corpus {
            b.check(format!("unstable.unitors {bn} {yn}"), digest_ret("unitors", &[y]), || {
                let l = left_unitor(&SmashProduct::pair(&u, y)?, y)?;
                let r = right_unitor(&SmashProduct::pair(y, &u)?, y)?;
                Ok((l.is_isomorphism() && r.is_isomorphism(), "both iso".into()))
            });
            for (zn, z) in &corpus {
                b.check(format!("unstable.symmetry {bn} {yn},{zn}"), digest_ret("symmetry", &[y, z]), || {
                    let yz = SmashProduct::pair(y, z)?;
                    let zy = SmashProduct::pair(z, y)?;
                    let t = symmetry(&yz, &zy)?;
                    let back = symmetry(&zy, &yz)?;
                    let pass = t.is_isomorphism() && back.compose(&t)? == RetMap::identity(yz.space());
                    Ok((pass, "involutive iso".into()))
                });
                for (wn, w) in &corpus {
                    b.check(format!("unstable.associator {bn} {yn},{zn},{wn}"), digest_ret("assoc", &[y, z, w]), || {
                        let ab = SmashProduct::pair(y, z)?;
                        let ab_c = SmashProduct::pair(ab.space(), w)?;
                        let bc = SmashProduct::pair(z, w)?;
                        let a_bc = SmashProduct::pair(y, bc.space())?;
                        let m = associator(&ab, &ab_c, &bc, &a_bc)?;
                        Ok((m.is_isomorphism(), iso_word(m.is_isomorphism()).into()))
                    });
                }
            }
        }
    }
    let x = base("s1");
    let s = PullbackRet::of_pointed(&x, &sphere1()).expect("pointed").space().clone();
    let p = point_plus(&x, v0()).expect("vertex");
    let u = RetSpace::unit(&x);
    b.check("unstable.pentagon s1 pulled_s1,point_plus,unit,pulled_s1", digest_ret("pentagon", &[&s, &p, &u]), || {
        let (a, bb, c, d) = (&s, &p, &u, &s);
        let sm = SmashProduct::pair;
        let ab = sm(a, bb)?;
        let ab_c = sm(ab.space(), c)?;
        let ab_c_d = sm(ab_c.space(), d)?;
        let cd = sm(c, d)?;
        let ab_cd = sm(ab.space(), cd.space())?;
        let b_cd = sm(bb, cd.space())?;
        let a_b_cd = sm(a, b_cd.space())?;
        let bc = sm(bb, c)?;
        let a_bc = sm(a, bc.space())?;
        let a_bc_d = sm(a_bc.space(), d)?;
        let bc_d = sm(bc.space(), d)?;
        let a_bc_d2 = sm(a, bc_d.space())?;
        let first = associator(&ab, &ab_cd, &b_cd, &a_b_cd)?.compose(&associator(&ab_c, &ab_c_d, &cd, &ab_cd)?)?;
        let l1 = smash_map(&ab_c_d, &a_bc_d, &[&associator(&ab, &ab_c, &bc, &a_bc)?, &RetMap::identity(d)])?;
        let l2 = associator(&a_bc, &a_bc_d, &bc_d, &a_bc_d2)?;
        let l3 = smash_map(&a_bc_d2, &a_b_cd, &[&RetMap::identity(a), &associator(&bc, &bc_d, &cd, &b_cd)?])?;
        let second = l3.compose(&l2)?.compose(&l1)?;
        Ok((first.map() == second.map(), "both composites agree".into()))
    });
    b.out
}

/// `f_!(S^1 ⊙ Y) ≅ S^1 ⊙ f_!Y`.
pub fn pushforward_tensors() -> Vec<Verdict> {
    let mut b = Batch::default();
    let k = sphere1();
    for (fname, f) in monoidal_maps() {
        for (yn, y) in ret_corpus(f.source()) {
            b.check(format!("unstable.push_tensor {fname} {yn}"), digest_ret(fname, &[&y]), || {
                let inner = SmashProduct::tensor(&k, &y)?;
                let push = Pushforward::new(&f, inner.space())?;
                let push_y = Pushforward::new(&f, &y)?;
                let outer = SmashProduct::tensor(&k, push_y.space())?;
                let m = push_tensor(&push, &inner, &push_y, &outer)?;
                Ok((m.is_isomorphism(), iso_word(m.is_isomorphism()).into()))
            });
        }
    }
    b.out
}

/// Every corpus file with one of the given extensions parses, prints back
/// byte for byte, and matches the built-in object of the same name.
pub fn file_checks(kinds: &[&str]) -> Vec<Verdict> {
    let mut b = Batch::default();
    let dir = corpus_dir();
    let Ok(entries) = std::fs::read_dir(&dir) else {
        return b.out;
    };
    let builtin = files();
    let mut names: Vec<String> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .filter(|n| n.rsplit_once('.').is_some_and(|(_, ext)| kinds.contains(&ext)))
        .collect();
    names.sort();
    for name in names {
        let text = std::fs::read_to_string(dir.join(&name)).unwrap_or_default();
        let mut h = Fnv64::new();
        h.write(text.as_bytes());
        let (pass, witness) = match parse_object(&text) {
            Ok(o) => {
                let printed = o.print();
                let frozen = builtin.iter().find(|f| f.0 == name).map(|f| f.1.print());
                match (printed == text, frozen) {
                    (false, _) => (false, "print differs from the file".to_string()),
                    (true, Some(f)) if f != text => (false, "differs from the built-in corpus object".to_string()),
                    (true, Some(_)) => (true, format!("{} round trip, frozen", o.kind())),
                    (true, None) => (true, format!("{} round trip", o.kind())),
                }
            }
            Err(e) => (false, format!("parse error at {e}")),
        };
        b.out.push(Verdict::new(format!("files.round_trip {name}"), h.finish(), pass, witness));
    }
    b.out
}

// ------------------------------------------------------------------ global

pub fn global(_opts: &Options) -> Vec<Verdict> {
    let mut out = external_monoidal();
    out.extend(zero_absorbs());
    out.extend(diagonal_comparisons());
    out.extend(ext_to_fib_comparisons());
    out.extend(global_conversions());
    out.extend(external_pushout_products());
    out.extend(file_checks(&["globobj", "globmor"]));
    out
}

fn glob_digest(label: &str, objs: &[&GlobObj]) -> u64 {
    let spaces: Vec<&RetSpace> = objs.iter().map(|o| o.space()).collect();
    digest_ret(label, &spaces)
}

pub fn external_monoidal() -> Vec<Verdict> {
    let mut b = Batch::default();
    let corpus = glob_corpus();
    for (an, a) in &corpus {
        b.check(format!("global.unit {an}"), glob_digest("unit", &[a]), || {
            let m = ext_unit_left(&ExtSmash::new(&GlobObj::unit(), a)?)?;
            Ok((m.is_isomorphism(), iso_word(m.is_isomorphism()).into()))
        });
        for (bn, bb) in &corpus {
            b.check(format!("global.symmetry {an},{bn}"), glob_digest("symmetry", &[a, bb]), || {
                let ab = ExtSmash::new(a, bb)?;
                let ba = ExtSmash::new(bb, a)?;
                let m = ext_symmetry(&ab, &ba)?;
                let back = ext_symmetry(&ba, &ab)?;
                let pass = m.is_isomorphism() && back.compose(&m)? == GlobMor::identity(ab.object());
                Ok((pass, "involutive iso".into()))
            });
            b.check(format!("global.base_is_product {an},{bn}"), glob_digest("base", &[a, bb]), || {
                let ab = ExtSmash::new(a, bb)?;
                let p = product(a.base(), bb.base())?;
                Ok((**ab.object().base() == **p.object(), format!("base census={:?}", p.object().census())))
            });
        }
    }
    // associativity on triples from the smaller objects
    let small = &corpus[..5];
    for (an, a) in small {
        for (bn, bb) in small {
            for (cn, c) in small {
                b.check(format!("global.assoc {an},{bn},{cn}"), glob_digest("assoc", &[a, bb, c]), || {
                    let ab = ExtSmash::new(a, bb)?;
                    let ab_c = ExtSmash::new(ab.object(), c)?;
                    let bc = ExtSmash::new(bb, c)?;
                    let a_bc = ExtSmash::new(a, bc.object())?;
                    let m = ext_assoc(&ab, &ab_c, &bc, &a_bc)?;
                    Ok((m.is_isomorphism(), iso_word(m.is_isomorphism()).into()))
                });
            }
        }
    }
    b.out
}

/// `(X, 0) △ (X', Z) ≅ (X × X', 0)`.
pub fn zero_absorbs() -> Vec<Verdict> {
    let mut b = Batch::default();
    for xn in ["pt", "d1", "s1", "bd2"] {
        let x = base(xn);
        for (zn, z) in glob_corpus() {
            b.check(format!("global.zero_absorbs {xn} {zn}"), glob_digest(xn, &[&z]), || {
                let zero = GlobObj::zero(&x);
                let e = ExtSmash::new(&zero, &z)?;
                let p = product(&x, z.base())?;
                let pass = e.space().section().is_isomorphism() && **e.object().base() == **p.object();
                Ok((pass, format!("total census={:?}", e.space().total().census())))
            });
        }
    }
    b.out
}

pub fn diagonal_comparisons() -> Vec<Verdict> {
    let mut b = Batch::default();
    for xn in ["d1", "s1", "bd2"] {
        let corpus = ret_corpus(&base(xn));
        for (yn, y) in &corpus {
            for (zn, z) in &corpus {
                b.check(format!("global.diag_compare {xn} {yn},{zn}"), digest_ret("diag", &[y, z]), || {
                    let (_, iso) = diag_compare(y, z)?;
                    Ok((iso, iso_word(iso).into()))
                });
            }
        }
    }
    b.out
}

pub fn ext_to_fib_comparisons() -> Vec<Verdict> {
    let mut b = Batch::default();
    let corpus = glob_corpus();
    for (an, a) in &corpus {
        for (bn, bb) in &corpus {
            b.check(format!("global.ext_to_fib {an},{bn}"), glob_digest("ext_to_fib", &[a, bb]), || {
                let (_, iso) = ext_to_fib_compare(a, bb)?;
                Ok((iso, iso_word(iso).into()))
            });
        }
    }
    b.out
}

/// Every presentation of a global morphism converts back to the morphism.
pub fn global_conversions() -> Vec<Verdict> {
    let mut b = Batch::default();
    let mut mors: Vec<(String, GlobMor)> = Vec::new();
    match generating_cofibrations(2) {
        Ok(gens) => mors.extend(gens.into_iter().enumerate().map(|(k, m)| (format!("generating_{k}"), m))),
        Err(e) => b.out.push(Verdict::new("global.convert generators", 0, false, format!("error: {e}"))),
    }
    for (n, a) in glob_corpus() {
        mors.push((format!("identity_{n}"), GlobMor::identity(&a)));
    }
    for (n, m) in &mors {
        b.check(format!("global.convert {n}"), glob_digest("convert", &[m.source(), m.target()]), || {
            let mut ok = true;
            for form in [MorForm::Pair, MorForm::OverTarget, MorForm::OverSource, MorForm::Square] {
                ok &= GlobMor::from_presentation(m.source(), m.target(), &m.convert(form)?)? == *m;
            }
            Ok((ok, "four forms".into()))
        });
    }
    b.out
}

/// `i □ j` for generating cofibrations `i, j` with `n, m <= 2`.
pub fn external_pushout_products() -> Vec<Verdict> {
    let mut b = Batch::default();
    let gens = match generating_cofibrations(2) {
        Ok(g) => g,
        Err(e) => {
            b.out.push(Verdict::new("global.pushout_product generators", 0, false, format!("error: {e}")));
            return b.out;
        }
    };
    for (p, i) in gens.iter().enumerate() {
        for (q, j) in gens.iter().enumerate() {
            b.check(format!("global.pushout_product {p},{q}"), glob_digest("pp", &[i.source(), i.target(), j.source(), j.target()]), || {
                let pp = pushout_product_external(i, j)?;
                Ok((pp.mono, format!("mono={} complement={:?}", pp.mono, pp.complement)))
            });
        }
    }
    b.out
}

// --------------------------------------------------------------------- seq

pub fn seq(opts: &Options) -> Vec<Verdict> {
    let n = opts.trunc;
    let mut out = trivial_bundles(n);
    out.extend(wedge_censuses(n));
    out.extend(zeta_maps(n));
    out.extend(free_seq_adjunction());
    out.extend(pushforward_free());
    out.extend(tsp_checks());
    out.extend(file_checks(&["seqspec"]));
    out
}

/// `Σ^∞_X X_{+X} ≅ X * 𝕊` levelwise.
pub fn trivial_bundles(trunc: usize) -> Vec<Verdict> {
    let mut b = Batch::default();
    for xn in ["d1", "s1", "bd2"] {
        let x = base(xn);
        b.check(format!("seq.trivial_bundle {xn} N={trunc}"), digest("trivial_bundle", &[&x]), || {
            let free = free_seq(0, &RetSpace::unit(&x), trunc)?;
            let (sphere, pulled) = pulled_sphere(&x, trunc)?;
            let m = trivial_bundle_compare(&free, &sphere, &pulled)?;
            Ok((m.is_isomorphism(), format!("levels iso={:?}", m.iso_levels())))
        });
    }
    b.out
}

/// Ordered set partitions of `n` things into `k` blocks, `k! S(n, k)`.
pub fn ordered_partitions(n: usize, k: usize) -> usize {
    // inclusion-exclusion over the blocks left empty
    let mut total: i64 = 0;
    for j in 0..=k {
        let term = binomial(k, j) as i64 * ((k - j) as i64).pow(n as u32);
        total += if j % 2 == 0 { term } else { -term };
    }
    total as usize
}

/// Level `n` of `Σ^∞_X x_{+X}` has the census of `S^n ∨_x X`, where the
/// smash model of `S^n` has `k! S(n, k)` nondegenerate `k`-simplices off
/// the basepoint.
pub fn wedge_censuses(trunc: usize) -> Vec<Verdict> {
    let mut b = Batch::default();
    for xn in ["d1", "s1", "bd2"] {
        let x = base(xn);
        let free = free_seq(0, &point_plus(&x, v0()).expect("vertex"), trunc);
        for n in 1..=trunc {
            b.check(format!("seq.wedge_census {xn} n={n}"), digest("wedge", &[&x]), || {
                let free = free.clone()?;
                let got = free.level(n).total().census();
                let mut want = x.census();
                want.resize(want.len().max(n + 1), 0);
                for k in 1..=n {
                    want[k] += ordered_partitions(n, k);
                }
                Ok((got == want, format!("census={got:?}")))
            });
        }
    }
    b.out
}

/// `ζ: Σ^{∞-(k+1)} S^1 ⊙ C -> Σ^{∞-k} C` is an isomorphism above level `k`.
pub fn zeta_maps(trunc: usize) -> Vec<Verdict> {
    let mut b = Batch::default();
    let cs = [("point_plus_d1", point_plus(&base("d1"), v0()).expect("vertex")), ("unit_s1", RetSpace::unit(&base("s1")))];
    for (cn, c) in &cs {
        for k in 0..trunc {
            b.check(format!("seq.zeta {cn} k={k} N={trunc}"), digest_ret("zeta", &[c]), || {
                let z = zeta(k, c, trunc)?;
                let isos = z.iso_levels();
                Ok((isos[k + 1..].iter().all(|&i| i), format!("levels iso={isos:?}")))
            });
        }
    }
    b.out
}

pub fn free_seq_adjunction() -> Vec<Verdict> {
    let mut b = Batch::default();
    let x = base("d1");
    let targets = [
        ("free0_point_plus1", free_seq(0, &point_plus(&x, NdId::new(0, 1)).expect("vertex"), 2)),
        ("free1_unit", free_seq(1, &RetSpace::unit(&x), 2)),
    ];
    for (tn, target) in &targets {
        for k in 0..=2 {
            for (yn, y) in ret_corpus(&x).into_iter().filter(|y| y.0 != "pulled_s1") {
                b.check(format!("seq.free_adjunction k={k} Y={yn} A={tn}"), digest_ret("free_adj", &[&y]), || {
                    let target = target.clone()?;
                    let free = free_seq(k, &y, 2)?;
                    let left = free.hom_count(&target)?;
                    let homs = y.homs(target.level(k))?;
                    let mut ok = left == homs.len();
                    for g in &homs {
                        ok &= free_adjunct(k, &free, &target, g)?.level(k).map() == g.map();
                    }
                    Ok((ok, format!("left={left} right={}", homs.len())))
                });
            }
        }
    }
    b.out
}

/// `f_! Σ^{∞-k} Y ≅ Σ^{∞-k} f_!Y`.
pub fn pushforward_free() -> Vec<Verdict> {
    let mut b = Batch::default();
    for (fname, f) in base_maps().into_iter().filter(|m| matches!(m.0, "d1_to_pt" | "d1_to_s1" | "pt_at_0_d1" | "s1_to_pt")) {
        for (yn, y) in ret_corpus(f.source()) {
            for k in 0..=1 {
                b.check(format!("seq.push_free {fname} {yn} k={k}"), digest_ret(fname, &[&y]), || {
                    let free = free_seq(k, &y, 2)?;
                    let pa = push_spec(&f, &free)?;
                    let py = Pushforward::new(&f, &y)?;
                    let target = free_seq(k, py.space(), 2)?;
                    let c = push_free_compare(k, &pa, &py, &target)?;
                    Ok((c.is_isomorphism(), format!("levels iso={:?}", c.iso_levels())))
                });
            }
        }
    }
    b.out
}

pub fn tsp_checks() -> Vec<Verdict> {
    let mut b = Batch::default();
    let x = base("d1");
    let seq = [point_plus(&x, v0()).expect("vertex"), RetSpace::unit(&x), RetSpace::zero(&x)];
    b.check("seq.tsp_monad d1", digest_ret("tsp", &seq.iter().collect::<Vec<_>>()), || Ok((tsp_monad_check(&seq)?, "unit and multiplication laws".into())));
    let specs = [
        ("free0_s0", free_seq(0, &sphere0(), 2)),
        ("free1_unit_d1", free_seq(1, &RetSpace::unit(&x), 2)),
        ("free0_point_plus_d1", free_seq(0, &point_plus(&x, v0()).expect("vertex"), 2)),
    ];
    for (n, a) in &specs {
        b.check(format!("seq.tsp_algebra {n}"), digest("tsp_algebra", &[]), || {
            let a = a.clone()?;
            Ok((tsp_algebra_check(&a)?, "structure maps round trip".into()))
        });
        b.check(format!("seq.twist {n}"), digest("twist", &[]), || {
            let a = a.clone()?;
            Ok((twist_relates(&a)?, "suspension and tensor differ by the twist".into()))
        });
    }
    b.out
}

// --------------------------------------------------------------------- sym

pub fn sym(opts: &Options) -> Vec<Verdict> {
    let n = opts.sym_trunc;
    let mut out = xi_maps();
    out.extend(free_on_unit(n));
    out.extend(free_sym_adjunction());
    out.extend(day_monoidal(n));
    out.extend(free_smash_fibrewise(n));
    out.extend(free_smash_external(n));
    out.extend(strict_fibres(n.min(2)));
    out.extend(ext_sym_bases());
    out.extend(file_checks(&["symspec"]));
    out
}

/// `ξ: 𝚺^{∞-(k+1)} S^1 ∧ Y -> 𝚺^{∞-k} Y` at level `k + 1`.
pub fn xi_maps() -> Vec<Verdict> {
    let mut b = Batch::default();
    let ys = [("s0", sphere0()), ("point_plus_d1", point_plus(&base("d1"), v0()).expect("vertex"))];
    for (yn, y) in &ys {
        for k in 0..=2 {
            b.check(format!("sym.xi {yn} k={k}"), digest_ret("xi", &[y]), || {
                let m = xi(k, y, k + 2)?;
                let isos = m.mor.iso_levels();
                Ok((isos[k + 1], format!("levels iso={isos:?}")))
            });
        }
    }
    b.out
}

/// `𝚺^∞_X X_{+X}` is the sphere spectrum `X * 𝕊`.
pub fn free_on_unit(trunc: usize) -> Vec<Verdict> {
    let mut b = Batch::default();
    for xn in ["d1", "s1"] {
        let x = base(xn);
        b.check(format!("sym.free_on_unit {xn} N={trunc}"), digest("free_on_unit", &[&x]), || {
            let f = free_sym(0, &RetSpace::unit(&x), trunc)?;
            let s = sphere_sym(&x, trunc)?;
            let maps = (0..=trunc)
                .map(|n| {
                    let (src, tgt) = (f.level(n), s.spec().level(n));
                    RetMap::from_fn(src, tgt, |u| {
                        let v = Simplex::nondegenerate(u);
                        match f.split(n, v) {
                            None => Ok(tgt.base_simplex(src.project(v))),
                            Some(p) => s.elem(n, p.x, &p.coords),
                        }
                    })
                })
                .collect::<CoreResult<Vec<_>>>()?;
            let m = SymMor::new(f.spec(), s.spec(), maps)?;
            Ok((m.is_isomorphism(), "equivariant iso".into()))
        });
    }
    b.out
}

pub fn free_sym_adjunction() -> Vec<Verdict> {
    let mut b = Batch::default();
    let x = base("d1");
    let targets = [
        ("sphere", sphere_sym(&x, 2).map(|s| s.spec().clone())),
        ("free1_point_plus0", free_sym(1, &point_plus(&x, v0()).expect("vertex"), 2).map(|f| f.spec().clone())),
    ];
    for (tn, target) in &targets {
        for k in 0..=2 {
            for (yn, y) in [("unit", RetSpace::unit(&x)), ("point_plus1", point_plus(&x, NdId::new(0, 1)).expect("vertex"))] {
                b.check(format!("sym.free_adjunction k={k} Y={yn} A={tn}"), digest_ret("sym_adj", &[&y]), || {
                    let target = target.clone()?;
                    let f = free_sym(k, &y, 2)?;
                    let homs = y.homs(target.level(k))?;
                    let left = f.spec().hom_count(&target)?;
                    let mut ok = left == homs.len();
                    for g in &homs {
                        // restricted to the identity coset the adjunct is g
                        let m = f.adjunct(&target, g)?;
                        for u in y.total().all_nd() {
                            let s = Simplex::nondegenerate(u);
                            if !y.is_base(s) {
                                ok &= m.level(k).apply(f.elem(k, &Perm::identity(k), y.project(s), &[], s)?) == g.apply(s);
                            }
                        }
                    }
                    Ok((ok, format!("left={left} right={}", homs.len())))
                });
            }
        }
    }
    b.out
}

fn iso_equivariant(maps: &[RetMap], src: &SymSeq, tgt: &SymSeq) -> CoreResult<bool> {
    for (n, m) in maps.iter().enumerate() {
        if !m.is_isomorphism() || !is_equivariant(m, src.action(n), tgt.action(n))? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn day_monoidal(trunc: usize) -> Vec<Verdict> {
    let mut b = Batch::default();
    let x = base("d1");
    let fib = Pairing::Fibrewise;
    b.check(format!("sym.day_monoidal d1 N={trunc}"), digest("day", &[&x]), || {
        let s = sphere_sym(&x, trunc)?;
        let f = free_sym(1, &point_plus(&x, NdId::new(0, 1))?, trunc)?;
        let (a, bb) = (s.spec().actions(), f.spec().actions());
        let u = SymSeq::unit(&x, trunc);
        let ub = DayConv::new(&u, bb, fib)?;
        let mut ok = iso_equivariant(&day_unit_left(&ub)?, ub.seq(), bb)?;
        let ab = DayConv::new(a, bb, fib)?;
        let ba = DayConv::new(bb, a, fib)?;
        let sym = day_symmetry(&ab, &ba)?;
        ok &= iso_equivariant(&sym, ab.seq(), ba.seq())?;
        let back = day_symmetry(&ba, &ab)?;
        for n in 0..=trunc {
            ok &= back[n].compose(&sym[n])?.map() == RetMap::identity(ab.level(n)).map();
        }
        let ab_c = DayConv::new(ab.seq(), a, fib)?;
        let bc = DayConv::new(bb, a, fib)?;
        let a_bc = DayConv::new(a, bc.seq(), fib)?;
        ok &= iso_equivariant(&day_assoc(&ab, &ab_c, &bc, &a_bc)?, ab_c.seq(), a_bc.seq())?;
        Ok((ok, "unit, symmetry and associator are equivariant isos".into()))
    });
    b.check(format!("sym.sphere_monoid d1 N={trunc}"), digest("sphere_monoid", &[&x]), || {
        let s = sphere_sym(&x, trunc)?;
        let a = s.spec().actions();
        let ss = DayConv::new(a, a, fib)?;
        let mu = sphere_mult(&s, &ss)?;
        let mut ok = true;
        for (n, m) in mu.iter().enumerate() {
            ok &= is_equivariant(m, ss.seq().action(n), a.action(n))?;
        }
        let ids: Vec<RetMap> = (0..=trunc).map(|n| RetMap::identity(a.level(n))).collect();
        let ss_s = DayConv::new(ss.seq(), a, fib)?;
        let s_ss = DayConv::new(a, ss.seq(), fib)?;
        let assoc = day_assoc(&ss, &ss_s, &ss, &s_ss)?;
        let mu_1 = day_map(&ss_s, &ss, &mu, &ids)?;
        let one_mu = day_map(&s_ss, &ss, &ids, &mu)?;
        let u = SymSeq::unit(&x, trunc);
        let eta = sphere_unit(&s, &u)?;
        let us = DayConv::new(&u, a, fib)?;
        let eta_1 = day_map(&us, &ss, &eta, &ids)?;
        let unitor = day_unit_left(&us)?;
        let sym = day_symmetry(&ss, &ss)?;
        for n in 0..=trunc {
            ok &= mu[n].compose(&mu_1[n])?.map() == mu[n].compose(&one_mu[n])?.compose(&assoc[n])?.map();
            ok &= mu[n].compose(&eta_1[n])?.map() == unitor[n].map();
            ok &= mu[n].compose(&sym[n])?.map() == mu[n].map();
        }
        Ok((ok, "associative, unital, commutative".into()))
    });
    b.check(format!("sym.smash_unit d1 N={}", trunc.min(2)), digest("smash_unit", &[&x]), || {
        let n = trunc.min(2);
        let s = sphere_sym(&x, n)?;
        let f = free_sym(1, &point_plus(&x, v0())?, n)?;
        let sm = fib_smash_sym(s.spec(), f.spec())?;
        let m = smash_unit_left(&sm, &s)?;
        Ok((m.is_isomorphism(), iso_word(m.is_isomorphism()).into()))
    });
    b.out
}

fn smash_pairs() -> [(usize, usize); 10] {
    [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)]
}

/// `𝚺^{∞-k} Y ∧_X 𝚺^{∞-l} Z ≅ 𝚺^{∞-(k+l)} (Y ∧_X Z)` for `k + l <= 3`.
pub fn free_smash_fibrewise(trunc: usize) -> Vec<Verdict> {
    let mut b = Batch::default();
    for xn in ["d1", "s1"] {
        let x = base(xn);
        let corpus = ret_corpus(&x);
        for (yn, y) in &corpus {
            for (zn, z) in &corpus {
                for (k, l) in smash_pairs() {
                    b.check(format!("sym.free_smash fibrewise {xn} Y={yn} Z={zn} k={k} l={l} N={trunc}"), digest_ret("free_smash", &[y, z]), || {
                        let fy = free_sym(k, y, trunc)?;
                        let fz = free_sym(l, z, trunc)?;
                        let sm = fib_smash_sym(fy.spec(), fz.spec())?;
                        let pair = PairedGen::new(Pairing::Fibrewise, y, z)?;
                        let target = free_sym(k + l, pair.space(), trunc)?;
                        let m = free_smash_compare(&sm, &fy, &fz, &pair, &target)?;
                        Ok((m.is_isomorphism(), format!("levels iso={:?}", m.iso_levels())))
                    });
                }
            }
        }
    }
    b.out
}

/// The same for the external smash, over the product of the bases.
pub fn free_smash_external(trunc: usize) -> Vec<Verdict> {
    let mut b = Batch::default();
    let lefts = [
        ("point_plus_d1", point_plus(&base("d1"), NdId::new(0, 1)).expect("vertex")),
        ("unit_d1", RetSpace::unit(&base("d1"))),
        ("pulled_s1_d1", PullbackRet::of_pointed(&base("d1"), &sphere1()).expect("pointed").space().clone()),
    ];
    let rights = [("s0", sphere0()), ("s1", sphere1()), ("point_plus_s1", point_plus(&base("s1"), v0()).expect("vertex"))];
    for (yn, y) in &lefts {
        for (zn, z) in &rights {
            for (k, l) in smash_pairs() {
                b.check(format!("sym.free_smash external Y={yn} Z={zn} k={k} l={l} N={trunc}"), digest_ret("free_smash_ext", &[y, z]), || {
                    let fy = free_sym(k, y, trunc)?;
                    let fz = free_sym(l, z, trunc)?;
                    let sm = ext_smash_sym(fy.spec(), fz.spec())?;
                    let pair = PairedGen::new(Pairing::External, y, z)?;
                    let target = free_sym(k + l, pair.space(), trunc)?;
                    let m = free_smash_compare(&sm, &fy, &fz, &pair, &target)?;
                    Ok((m.is_isomorphism(), format!("levels iso={:?}", m.iso_levels())))
                });
            }
        }
    }
    b.out
}

/// `(x, y)^*(A △ B) ≅ x^*A ∧ y^*B` for free spectra `A`, `B`.
pub fn strict_fibres(trunc: usize) -> Vec<Verdict> {
    let mut b = Batch::default();
    let pt = base("pt");
    let lefts = [("point_plus_d1", point_plus(&base("d1"), v0()).expect("vertex")), ("unit_s1", RetSpace::unit(&base("s1")))];
    let rights = [("s0", sphere0()), ("point_plus_d1", point_plus(&base("d1"), NdId::new(0, 1)).expect("vertex"))];
    for (yn, y) in &lefts {
        for (zn, z) in &rights {
            for (k, l) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                let xs: Vec<NdId> = y.base().nd(0).collect();
                let ys: Vec<NdId> = z.base().nd(0).collect();
                for &vx in &xs {
                    for &vy in &ys {
                        let claim = format!("sym.strict_fibre A={yn} k={k} B={zn} l={l} at ({},{}) N={trunc}", vx.index(), vy.index());
                        b.check(claim, digest_ret("strict_fibre", &[y, z]), || {
                            let a = free_sym(k, y, trunc)?;
                            let bb = free_sym(l, z, trunc)?;
                            let ext = ext_smash_sym(a.spec(), bb.spec())?;
                            let at_x = SMap::constant(&pt, y.base(), vx)?;
                            let at_y = SMap::constant(&pt, z.base(), vy)?;
                            let (xa, pxa) = pull_sym(&at_x, a.spec())?;
                            let (yb, pyb) = pull_sym(&at_y, bb.spec())?;
                            let fib = fib_smash_sym(&xa, &yb)?;
                            let base_xy = ext.spec().base().clone();
                            let pair = product(y.base(), z.base())?;
                            let v = pair.pair(Simplex::nondegenerate(vx), Simplex::nondegenerate(vy)).ok_or(exspace_core::Error::ForeignSimplex)?;
                            let xy = SMap::constant(&pt, &base_xy, v.nd())?;
                            let (target, pulled) = pull_sym(&xy, ext.spec())?;
                            let pa: Vec<_> = (0..=trunc).map(|n| pxa.pull(n).clone()).collect();
                            let pb: Vec<_> = (0..=trunc).map(|n| pyb.pull(n).clone()).collect();
                            let pt_: Vec<_> = (0..=trunc).map(|n| pulled.pull(n).clone()).collect();
                            let m = strict_fibre_compare(&ext, &fib, (&pa, &pb), (&target, &pt_))?;
                            Ok((m.is_isomorphism(), format!("levels iso={:?}", m.iso_levels())))
                        });
                    }
                }
            }
        }
    }
    b.out
}

/// The external smash of symmetric spectra lives over the product of the
/// bases.
pub fn ext_sym_bases() -> Vec<Verdict> {
    let mut b = Batch::default();
    let (d1, s1) = (base("d1"), base("s1"));
    b.check("sym.ext_base d1,s1", digest("ext_base", &[&d1, &s1]), || {
        let a = free_sym(0, &RetSpace::unit(&d1), 2)?;
        let c = free_sym(1, &point_plus(&s1, v0())?, 2)?;
        let e = ext_smash_sym(a.spec(), c.spec())?;
        let p = product(&d1, &s1)?;
        Ok((**e.spec().base() == **p.object(), format!("base census={:?}", e.spec().base().census())))
    });
    b.out
}

// ------------------------------------------------------------------ koszul

fn reduced_corpus() -> Vec<(&'static str, Arc<FinSSet>)> {
    vec![("s1", base("s1")), ("s2", arc(sphere(2))), ("t2", base("t2"))]
}

pub fn koszul(opts: &Options) -> Vec<Verdict> {
    let mut out = loop_group_identities(opts);
    out.extend(path_actions(opts));
    out.extend(unit_maps());
    out.extend(comodules());
    out.extend(costar_bijections());
    out
}

/// Sampled simplicial identities for `𝔾X`, `W̄𝔾X`, `W𝔾X` and `ℙX`, and the
/// homomorphism property of the faces and degeneracies of `𝔾X`.
pub fn loop_group_identities(opts: &Options) -> Vec<Verdict> {
    let mut b = Batch::default();
    let (s, seed) = (opts.samples, opts.seed);
    for (name, x) in reduced_corpus() {
        let g = match loop_group(&x) {
            Ok(g) => g,
            Err(e) => {
                b.sampled(format!("koszul.loop_group {name}"), Err(e));
                continue;
            }
        };
        b.sampled(format!("koszul.identities G{name}"), Ok(check_identities(&g, name, s, 3, seed)));
        b.sampled(format!("koszul.homomorphisms G{name}"), Ok(check_homomorphisms(&g, name, s, 3, seed)));
        b.sampled(format!("koszul.identities Wbar G{name}"), Ok(check_identities(&wbar(&g), name, s, 3, seed)));
        b.sampled(format!("koszul.identities W G{name}"), Ok(check_identities(&w_total(&g), name, s, 3, seed)));
        b.sampled(format!("koszul.identities P{name}"), path_fib(&x).map(|p| check_identities(&p, name, s, 3, seed)));
    }
    b.out
}

/// Freeness and fibrewise-ness of the `𝔾X`-action on `ℙX`, and the
/// `η`/`ε` identifications for pulled-back path spaces.
pub fn path_actions(opts: &Options) -> Vec<Verdict> {
    let mut b = Batch::default();
    for (name, x) in reduced_corpus() {
        b.sampled(format!("koszul.free_action P{name}"), path_action_check(&x, opts.samples, 3, opts.seed));
    }
    let x = base("s1");
    for (yn, y) in ret_corpus(&x) {
        b.sampled(format!("koszul.eta_epsilon s1 {yn}"), eta_eps_check(&y, opts.samples, 3, opts.seed));
    }
    b.out
}

/// `x ↦ [τx, τd_0x, ...]` commutes with all faces and degeneracies, checked
/// on every simplex through dimension 3.
pub fn unit_maps() -> Vec<Verdict> {
    let mut b = Batch::default();
    for (name, x) in reduced_corpus() {
        b.check(format!("koszul.unit_map {name}"), digest("unit", &[&x]), || {
            let g = loop_group(&x)?;
            let w = wbar(&g);
            let mut checked = 0;
            for n in 0..=3 {
                for s in x.simplices(n) {
                    let u = unit_map(&g, s);
                    if w.dim(&u) != n {
                        return Ok((false, format!("wrong dimension at {}", x.label(s))));
                    }
                    for i in 0..=n {
                        if n > 0 && unit_map(&g, x.face(s, i)) != w.face(&u, i) {
                            return Ok((false, format!("d{i} at {}", x.label(s))));
                        }
                        if unit_map(&g, s.degeneracy(i)) != w.degeneracy(&u, i) {
                            return Ok((false, format!("s{i} at {}", x.label(s))));
                        }
                    }
                    checked += 1;
                }
            }
            Ok((true, format!("simplices={checked}")))
        });
    }
    b.out
}

/// Counit and coassociativity for the comodules `X_!Y` and their base
/// changes.
pub fn comodules() -> Vec<Verdict> {
    let mut b = Batch::default();
    for xn in ["pt", "d1", "s1"] {
        let x = base(xn);
        for (yn, y) in ret_corpus(&x) {
            b.check(format!("koszul.comodule {xn} {yn}"), digest_ret("comodule", &[&y]), || {
                let coalg = PlusCoalg::new(&x)?;
                let (c, _) = coaction(&coalg, &y)?;
                Ok((c.counit_holds()? && c.coassociative()?, "counit and coassociativity".into()))
            });
        }
    }
    let maps = base_maps();
    for (fname, f) in maps.iter().filter(|m| matches!(m.0, "d1_to_s1" | "d1_to_pt" | "pt_in_s1" | "s1_to_pt")) {
        for (yn, y) in ret_corpus(f.source()) {
            b.check(format!("koszul.comod_push {fname} {yn}"), digest_ret(fname, &[&y]), || {
                let src = PlusCoalg::new(f.source())?;
                let tgt = PlusCoalg::new(f.target())?;
                let (c, _) = coaction(&src, &y)?;
                let pushed = comod_push(&tgt, f, &c)?;
                Ok((pushed.counit_holds()? && pushed.coassociative()?, "counit and coassociativity".into()))
            });
        }
        for (zn, z) in ret_corpus(f.target()) {
            b.check(format!("koszul.comod_pull {fname} {zn}"), digest_ret(fname, &[&z]), || {
                let src = PlusCoalg::new(f.source())?;
                let tgt = PlusCoalg::new(f.target())?;
                let (c, _) = coaction(&tgt, &z)?;
                let (pulled, _) = comod_pull(&src, f, &c)?;
                Ok((pulled.counit_holds()? && pulled.coassociative()?, "counit and coassociativity".into()))
            });
        }
    }
    b.out
}

/// `Hom_comod(X_!Y, N) ≅ Hom(Y, X⋆N)` on the comodule corpus.
pub fn costar_bijections() -> Vec<Verdict> {
    let mut b = Batch::default();
    for xn in ["pt", "s1"] {
        let x = base(xn);
        let ys = ret_corpus(&x);
        let coalg = match PlusCoalg::new(&x) {
            Ok(c) => c,
            Err(e) => {
                b.out.push(Verdict::new(format!("koszul.costar {xn}"), 0, false, format!("error: {e}")));
                continue;
            }
        };
        let comods: Vec<(&str, CoreResult<ComodData>)> = ys.iter().map(|(n, y)| (*n, coaction(&coalg, y).map(|c| c.0))).collect();
        for (yn, y) in &ys {
            for (nn, n) in &comods {
                b.check(format!("koszul.costar {xn} Y={yn} N={nn}"), digest_ret("costar", &[y]), || {
                    let n = n.clone()?;
                    let (c, push) = coaction(&coalg, y)?;
                    let cs = costar(&n)?;
                    let left = c.homs(&n)?;
                    let right = y.hom_count(cs.space())?;
                    let mut images = BTreeSet::new();
                    for f in &left {
                        images.insert(cs.transpose(y, &push, f)?.map().images().to_vec());
                    }
                    Ok((left.len() == right && images.len() == left.len(), format!("comodule maps={} maps={right}", left.len())))
                });
            }
        }
    }
    b.out
}

// ---------------------------------------------------------------- homology

pub fn homology_suite(opts: &Options) -> Vec<Verdict> {
    let mut out = fixed_homology();
    out.extend(boundary_squares());
    out.extend(split_sequences());
    out.extend(homology_invariance());
    out.extend(kunneth());
    out.extend(cech_checks());
    out.extend(lifting_checks(opts));
    out.extend(cartesian_pushout_products());
    out.extend(fibrewise_pushout_products());
    out.extend(file_checks(&["cover"]));
    out
}

fn smash_circles() -> CoreResult<RetSpace> {
    Ok(SmashProduct::pair(&sphere1(), &sphere1())?.space().clone())
}

pub fn fixed_homology() -> Vec<Verdict> {
    let mut b = Batch::default();
    for field in [Field::Rational, Field::Prime(2)] {
        let cases: Vec<(&str, CoreResult<Arc<FinSSet>>, Vec<usize>)> = vec![
            ("s1", Ok(base("s1")), vec![1, 1]),
            ("bd2", Ok(base("bd2")), vec![1, 1]),
            ("s1_smash_s1", smash_circles().map(|y| y.total().clone()), vec![1, 0, 1]),
            ("t2", Ok(base("t2")), vec![1, 2, 1]),
            ("d2", Ok(base("d2")), vec![1]),
        ];
        for (name, x, want) in cases {
            b.check(format!("homology.value {name} {field}"), 0, || {
                let x = x?;
                let got = normalise_dims(&homology(&x, field));
                Ok((got == want, show_dims(&got)))
            });
        }
    }
    b.out
}

pub fn boundary_squares() -> Vec<Verdict> {
    let mut b = Batch::default();
    let mut spaces: Vec<(String, Arc<FinSSet>)> = bases().into_iter().map(|(n, x)| (n.to_string(), x)).collect();
    for (xn, x) in bases() {
        for (yn, y) in ret_corpus(&x) {
            spaces.push((format!("{yn}_{xn}"), y.total().clone()));
        }
    }
    for (name, x) in spaces {
        b.check(format!("homology.boundary_squared {name}"), digest("d2", &[&x]), || {
            let c = ChainData::new(&x, Field::Rational);
            Ok((c.boundary_squares_to_zero(), format!("chains={:?}", x.census())))
        });
    }
    b.out
}

pub fn split_sequences() -> Vec<Verdict> {
    let mut b = Batch::default();
    for (xn, x) in bases() {
        for (yn, y) in ret_corpus(&x) {
            for field in [Field::Rational, Field::Prime(2)] {
                match split_seq_check(&y, field) {
                    Ok(mut v) => {
                        v.claim = format!("homology.split_seq {yn}_{xn} {field}");
                        b.out.push(v);
                    }
                    Err(e) => b.out.push(Verdict::new(format!("homology.split_seq {yn}_{xn} {field}"), 0, false, format!("error: {e}"))),
                }
            }
        }
    }
    b.out
}

/// Isomorphic objects have equal homology: `X × Y` against `Y × X`.
pub fn homology_invariance() -> Vec<Verdict> {
    let mut b = Batch::default();
    let bs: Vec<_> = bases().into_iter().filter(|b| b.0 != "t2").collect();
    for (i, (an, x)) in bs.iter().enumerate() {
        for (bn, y) in &bs[i + 1..] {
            b.check(format!("homology.invariance {an}x{bn}"), digest("invariance", &[x, y]), || {
                let p = product(x, y)?;
                let q = product(y, x)?;
                let (hp, hq) = (homology(p.object(), Field::Rational), homology(q.object(), Field::Rational));
                Ok((hp == hq, show_dims(&hp)))
            });
        }
    }
    b.out
}

/// `H̃(K ∧ L)` is the convolution of `H̃(K)` and `H̃(L)` over a field.
pub fn kunneth() -> Vec<Verdict> {
    let mut b = Batch::default();
    let spheres: Vec<(&str, CoreResult<RetSpace>)> = vec![("s0", Ok(sphere0())), ("s1", Ok(sphere1())), ("s1_smash_s1", smash_circles())];
    for (kn, k) in &spheres {
        for (ln, l) in &spheres {
            for field in [Field::Rational, Field::Prime(2)] {
                b.check(format!("homology.kunneth {kn},{ln} {field}"), 0, || {
                    let (k, l) = (k.clone()?, l.clone()?);
                    let kl = SmashProduct::pair(&k, &l)?;
                    let (hk, hl) = (rel_quotient_homology(&k, field), rel_quotient_homology(&l, field));
                    let got = normalise_dims(&rel_quotient_homology(kl.space(), field));
                    let mut want = vec![0; hk.len() + hl.len()];
                    for (i, a) in hk.iter().enumerate() {
                        for (j, c) in hl.iter().enumerate() {
                            want[i + j] += a * c;
                        }
                    }
                    let want = normalise_dims(&want);
                    Ok((got == want, show_dims(&got)))
                });
            }
        }
    }
    b.out
}

pub fn cech_checks() -> Vec<Verdict> {
    let mut b = Batch::default();
    for (name, c) in cover_corpus() {
        b.check(format!("homology.cech {name}"), 0, || {
            let x = with_cover(&c, cech_nerve)?;
            let h = normalise_dims(&homology(&x, Field::Rational));
            let pass = match name {
                "three_arcs" => h == [1, 1] && x.census() == [3, 3],
                "single" => x.census() == [1],
                "full3" => x.census() == [3, 3, 1] && h == [1],
                "two_components" => h == [2],
                _ => true,
            };
            Ok((pass, format!("census={:?} H={}", x.census(), show_dims(&h))))
        });
    }
    b.out
}

pub fn lifting_checks(opts: &Options) -> Vec<Verdict> {
    let mut b = Batch::default();
    let (pt, d1) = (base("pt"), base("d1"));
    let i = boundary_inclusion(1);
    match SMap::constant(&d1, &pt, v0()) {
        Ok(p) => {
            let v = rlp(&i, &p);
            b.out.push(Verdict::new("homology.rlp_fails bd1_in_d1 against d1_to_pt", v.digest, !v.pass, v.witness));
            let cap = opts.horn_cap.unwrap_or(2);
            let v = fibration_check(&p, cap);
            b.out.push(Verdict::new("homology.not_kan d1_to_pt", v.digest, !v.pass, v.witness));
        }
        Err(e) => b.out.push(Verdict::new("homology.rlp_fails", 0, false, format!("error: {e}"))),
    }
    for (name, x) in [("s1", base("s1")), ("d2", base("d2"))] {
        let v = rlp(&boundary_inclusion(2), &SMap::identity(&x));
        b.out.push(Verdict::new(format!("homology.rlp_identity bd2_in_d2 against id_{name}"), v.digest, v.pass, v.witness));
    }
    let two = arc(exspace_core::sset::two_points());
    match SMap::constant(&two, &pt, v0()) {
        Ok(p) => {
            let cap = opts.horn_cap.unwrap_or(3);
            let v = fibration_check(&p, cap);
            b.out.push(Verdict::new("homology.fibration two_points_to_pt", v.digest, v.pass, v.witness));
            let v = fibration_check(&SMap::identity(&two), opts.horn_cap.unwrap_or_else(|| default_horn_cap(&p)));
            b.out.push(Verdict::new("homology.fibration id_two_points", v.digest, v.pass, v.witness));
        }
        Err(e) => b.out.push(Verdict::new("homology.fibration", 0, false, format!("error: {e}"))),
    }
    b.out
}

pub fn cartesian_pushout_products() -> Vec<Verdict> {
    let mut b = Batch::default();
    for n in 0..=2 {
        for m in 0..=2 {
            let (i, j) = (boundary_inclusion(n), boundary_inclusion(m));
            b.check(format!("homology.pushout_product cartesian n={n} m={m}"), exspace_core::invariants::digest_maps(&[&i, &j]), || {
                let pp = pushout_product(&i, &j)?;
                Ok((pp.mono, format!("mono={} complement={:?}", pp.mono, pp.complement)))
            });
        }
    }
    b.out
}

/// `(∂Δ^n -> Δ^n)_{+X}` along every simplex `Δ^n -> X`, `n <= 2`.
pub fn fibrewise_generators(x: &Arc<FinSSet>) -> CoreResult<Vec<(String, RetMap)>> {
    let mut out = Vec::new();
    for n in 0..=2 {
        for s in x.simplices(n) {
            let sigma = yoneda(x, s)?;
            let inc = boundary_inclusion(n);
            out.push((x.label(s), RetSpace::plus_map(&sigma.compose(&inc)?, &sigma, &inc)?));
        }
    }
    Ok(out)
}

pub fn fibrewise_pushout_products() -> Vec<Verdict> {
    let mut b = Batch::default();
    for xn in ["d1", "s1"] {
        let x = base(xn);
        let gens = match fibrewise_generators(&x) {
            Ok(g) => g,
            Err(e) => {
                b.out.push(Verdict::new(format!("homology.pushout_product fibrewise {xn}"), 0, false, format!("error: {e}")));
                continue;
            }
        };
        for (p, i) in &gens {
            for (q, j) in &gens {
                b.check(format!("homology.pushout_product fibrewise {xn} {p},{q}"), digest_ret("pp", &[i.source(), i.target(), j.source(), j.target()]), || {
                    let pp = pushout_product_fibrewise(i, j)?;
                    Ok((pp.mono, format!("mono={} complement={:?}", pp.mono, pp.complement)))
                });
            }
        }
    }
    b.out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(1, 3), 0);
        // ordered set partitions: 1; 1, 2; 1, 6, 6
        assert_eq!((1..=3).map(|k| ordered_partitions(3, k)).collect::<Vec<_>>(), vec![1, 6, 6]);
        assert_eq!(ordered_partitions(2, 2), 2);
        assert_eq!(ordered_partitions(4, 4), 24);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("bogus", &Options::default()).is_none());
    }

    #[test]
    fn report_shape() {
        let v = vec![Verdict::new("a", 1, true, "w"), Verdict::new("b", 2, false, "x")];
        let r = report("demo", &Options::default(), &v);
        let lines: Vec<&str> = r.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "# suite=demo seed=0 trunc=4 sym_trunc=3 samples=1000");
        assert_eq!(lines[1], "a\t0000000000000001\tPASS\tw");
        assert_eq!(lines[3], "# 2 checks, 1 passed, 1 failed (suite demo, seed 0)");
    }
}
