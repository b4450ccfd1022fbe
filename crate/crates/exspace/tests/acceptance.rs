//! Acceptance criteria, one line each. Runs without the test harness so the
//! lines always appear in `cargo test` output; exits non-zero if any
//! criterion fails or runs over its time limit.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use exspace::corpus::{base, cover_corpus, v0, with_cover};
use exspace::suites::{self, Options};
use exspace_core::invariants::{cech_nerve, fibration_check, homology, normalise_dims, rlp, Field, Verdict};
use exspace_core::retractive::{point_plus, sphere1, SmashProduct};
use exspace_core::spectra::free_seq;
use exspace_core::sset::{boundary_inclusion, product, standard, two_points, SMap};

/// Pascal's triangle, independent of the library and of the suites.
fn pascal(n: usize, k: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k]
}

/// Stirling numbers of the second kind by their recurrence.
fn stirling2(n: usize, k: usize) -> usize {
    match (n, k) {
        (0, 0) => 1,
        (0, _) | (_, 0) => 0,
        _ => k * stirling2(n - 1, k) + stirling2(n - 1, k - 1),
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Nondegenerate simplices of the `n`-fold smash of the one-edge circle,
/// off the basepoint: `k! S(n, k)` in dimension `k`.
fn sphere_census_off_basepoint(n: usize) -> Vec<usize> {
    (0..=n).map(|k| factorial(k) * stirling2(n, k)).collect()
}

fn all_pass(vs: &[Verdict]) -> Result<String, String> {
    match vs.iter().find(|v| !v.pass) {
        None => Ok(format!("{} checks", vs.len())),
        Some(v) => Err(format!("{} checks, first failure: {}", vs.len(), v.tsv())),
    }
}

fn at_least(vs: &[Verdict], n: usize, what: &str) -> Result<String, String> {
    if vs.len() < n {
        return Err(format!("only {} {what} cases, need {n}", vs.len()));
    }
    all_pass(vs)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn c1_shuffles() -> Result<String, String> {
    let mut cases = 0;
    for n in 0..=6 {
        for m in 0..=6 - n {
            let p = product(&Arc::new(standard(n)), &Arc::new(standard(m))).map_err(|e| e.to_string())?;
            let got = p.object().count(n + m);
            ensure(got == pascal(n + m, n), format!("Δ^{n}×Δ^{m}: {got} top simplices, expected {}", pascal(n + m, n)))?;
            cases += 1;
        }
    }
    let vs = suites::shuffles();
    ensure(vs.len() == cases, "suite covers every (n, m)")?;
    all_pass(&vs).map(|_| format!("{cases} products"))
}

fn c2_adjunction() -> Result<String, String> {
    at_least(&suites::base_change_adjunction(), 30, "adjunction")
}

fn c3_base_change() -> Result<String, String> {
    let a = at_least(&suites::projection_formulas(), 20, "projection formula")?;
    let b = at_least(&suites::pullback_monoidality(), 20, "pullback monoidality")?;
    Ok(format!("projection {a}; pullback {b}"))
}

fn c4_external() -> Result<String, String> {
    let mut out = Vec::new();
    out.extend(suites::external_monoidal());
    out.extend(suites::zero_absorbs());
    out.extend(suites::diagonal_comparisons());
    out.extend(suites::ext_to_fib_comparisons());
    all_pass(&out)
}

fn c5_free_spectra() -> Result<String, String> {
    all_pass(&suites::trivial_bundles(4))?;
    // the sphere model itself has the expected census
    let mut s = sphere1();
    for n in 1..=4 {
        if n > 1 {
            s = SmashProduct::pair(&s, &sphere1()).map_err(|e| e.to_string())?.space().clone();
        }
        let mut c = s.total().census();
        c[0] -= 1;
        ensure(c == sphere_census_off_basepoint(n), format!("S^{n} census {c:?}"))?;
    }
    for name in ["d1", "s1", "bd2"] {
        let x = base(name);
        let f = free_seq(0, &point_plus(&x, v0()).map_err(|e| e.to_string())?, 4).map_err(|e| e.to_string())?;
        for n in 1..=4 {
            let mut want = x.census();
            want.resize(want.len().max(n + 1), 0);
            for (k, c) in sphere_census_off_basepoint(n).into_iter().enumerate() {
                want[k] += c;
            }
            let got = f.level(n).total().census();
            ensure(got == want, format!("{name} level {n}: {got:?}, expected {want:?}"))?;
        }
    }
    all_pass(&suites::wedge_censuses(4))?;
    all_pass(&suites::zeta_maps(4))?;
    all_pass(&suites::xi_maps())?;
    Ok("trivial bundle N=4, wedge census, ζ, ξ".into())
}

fn c6_free_smash() -> Result<String, String> {
    let a = all_pass(&suites::free_smash_fibrewise(3))?;
    let b = all_pass(&suites::free_smash_external(3))?;
    Ok(format!("fibrewise {a}; external {b}"))
}

fn c7_strict_fibre() -> Result<String, String> {
    all_pass(&suites::strict_fibres(2))
}

fn c8_homology() -> Result<String, String> {
    let s11 = SmashProduct::pair(&sphere1(), &sphere1()).map_err(|e| e.to_string())?;
    for field in [Field::Rational, Field::Prime(2)] {
        ensure(normalise_dims(&homology(&base("s1"), field)) == [1, 1], "H(S^1)")?;
        ensure(normalise_dims(&homology(&base("bd2"), field)) == [1, 1], "H(∂Δ^2)")?;
        ensure(normalise_dims(&homology(s11.space().total(), field)) == [1, 0, 1], "H(S^1∧S^1)")?;
    }
    all_pass(&suites::split_sequences())?;
    all_pass(&suites::boundary_squares())?;
    all_pass(&suites::fixed_homology())
}

fn c9_koszul() -> Result<String, String> {
    let opts = Options::default();
    ensure(opts.samples == 1000 && opts.seed == 0, "default sampling is 1000 at seed 0")?;
    let ids = suites::loop_group_identities(&opts);
    for v in &ids {
        ensure(v.witness.starts_with("seed=0 samples=1000 "), format!("{} sampled {}", v.claim, v.witness))?;
    }
    let mut out = ids;
    out.extend(suites::path_actions(&opts));
    out.extend(suites::comodules());
    out.extend(suites::costar_bijections());
    all_pass(&out)
}

fn c10_cech() -> Result<String, String> {
    let covers = cover_corpus();
    let get = |n: &str| covers.iter().find(|c| c.0 == n).expect("corpus cover").1.clone();
    let arcs = with_cover(&get("three_arcs"), cech_nerve).map_err(|e| e.to_string())?;
    ensure(normalise_dims(&homology(&arcs, Field::Rational)) == [1, 1], "three arcs")?;
    let single = with_cover(&get("single"), cech_nerve).map_err(|e| e.to_string())?;
    ensure(single.census() == [1], "single set")?;
    Ok("three arcs (1,1); single set Δ^0".into())
}

fn c11_lifting() -> Result<String, String> {
    let pt = base("pt");
    let p = SMap::constant(&base("d1"), &pt, v0()).map_err(|e| e.to_string())?;
    ensure(!rlp(&boundary_inclusion(1), &p).pass, "∂Δ^1 -> Δ^1 lifts against Δ^1 -> Δ^0")?;
    let q = SMap::constant(&Arc::new(two_points()), &pt, v0()).map_err(|e| e.to_string())?;
    ensure(fibration_check(&q, 3).pass, "discrete map is a fibration")?;
    let mut out = suites::cartesian_pushout_products();
    out.extend(suites::fibrewise_pushout_products());
    out.extend(suites::external_pushout_products());
    all_pass(&out)
}

fn c12_verify_all() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_exspace"))
            .args(["verify", "all", "--seed", "0"])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let text = String::from_utf8_lossy(&first.stdout).into_owned();
    ensure(first.status.code() == Some(0), format!("exit {:?}", first.status.code()))?;
    ensure(!text.lines().any(|l| l.split('\t').nth(2) == Some("FAIL")), "a FAIL line")?;
    let summary = text.lines().last().unwrap_or_default().to_string();
    ensure(summary.contains(" 0 failed"), summary.clone())?;
    let second = run()?;
    ensure(second.stdout == first.stdout, "second run differs")?;
    Ok(summary.trim_start_matches("# ").to_string())
}

type Criterion = (&'static str, u64, fn() -> Result<String, String>);

fn main() {
    let criteria: [Criterion; 12] = [
        ("1 shuffle counts", 10, c1_shuffles),
        ("2 base-change adjunction", 60, c2_adjunction),
        ("3 projection formula and pullback monoidality", 120, c3_base_change),
        ("4 external smash", 120, c4_external),
        ("5 free spectra", 120, c5_free_spectra),
        ("6 free smash products", 300, c6_free_smash),
        ("7 strict fibres", 60, c7_strict_fibre),
        ("8 homology", 60, c8_homology),
        ("9 Koszul constructions", 300, c9_koszul),
        ("10 Cech nerves", 5, c10_cech),
        ("11 lifting and pushout-products", 120, c11_lifting),
        ("12 verify all, twice, byte-identical", 600, c12_verify_all),
    ];
    // a panic counts as a failure and its message goes on the criterion line
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let took = t.elapsed();
        let r = match r {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("took {took:.1?}, limit {limit}s")),
            r => r,
        };
        match r {
            Ok(detail) => println!("PASS  criterion {name} ({took:.2?} of {limit}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name} ({took:.2?} of {limit}s): {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 12 acceptance criteria passed");
}
