use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn exe() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_exspace"));
    c.env_remove("EXSPACE_CORPUS");
    c
}

fn repo() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    exe().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn script(name: &str) -> String {
    repo().join("scripts").join(name).to_string_lossy().into_owned()
}

#[test]
fn run_exit_codes() {
    let ok = run(&["run", &script("circle_homology.exs")]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).starts_with("# seed=0\n"));

    let bad = run(&["run", &script("wrong_dims.exs")]);
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.lines().any(|l| l.split('\t').nth(2) == Some("FAIL")), "{text}");
    assert!(text.lines().last().unwrap().starts_with("FAIL line 3: "));

    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.exs");
    std::fs::write(&broken, "let x = circle()\nlet x = point()\n").unwrap();
    let e = run(&["run", broken.to_str().unwrap()]);
    assert_eq!(e.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&e.stderr).contains("line 2"));
}

#[test]
fn free_smash_script_passes() {
    let o = run(&["run", &script("free_smash.exs")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    for s in ["cech.exs", "lifting.exs"] {
        assert_eq!(run(&["run", &script(s)]).status.code(), Some(0), "{s}");
    }
}

#[test]
fn seed_is_echoed_and_runs_repeat() {
    let a = run(&["run", &script("circle_homology.exs"), "--seed", "7"]);
    let b = run(&["run", &script("circle_homology.exs"), "--seed", "7"]);
    assert!(stdout(&a).starts_with("# seed=7\n"));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["run", &script("circle_homology.exs")]);
    // digests mix in the seed
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn verify_reports() {
    let o = run(&["verify", "homology"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# suite=homology seed=0 trunc=4"));
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(rows.len() > 100);
    for r in &rows {
        let cols: Vec<&str> = r.split('\t').collect();
        assert_eq!(cols.len(), 4, "{r}");
        assert_eq!(cols[1].len(), 16);
        assert_eq!(cols[2], "PASS", "{r}");
    }
    assert_eq!(run(&["verify", "homology"]).stdout, o.stdout);
    let k = run(&["verify", "koszul", "--seed", "3", "--samples", "50"]);
    assert_eq!(k.status.code(), Some(0));
    assert!(stdout(&k).contains("seed=3 samples=50 failures=0"));
}

#[test]
fn verify_rejects_unknown_suites_and_flags() {
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "homology", "--horn-cap", "lots"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn show_formats() {
    assert_eq!(stdout(&run(&["show", "d2.sset"])), "dims: 3,3,1\n");
    assert_eq!(stdout(&run(&["show", "empty.sset"])), "dims: (empty)\n");
    // S^1 × S^1 from one-vertex circles: one vertex, three edges, two triangles
    assert_eq!(stdout(&run(&["show", "t2.sset"])), "dims: 1,3,2\n");
    let full = stdout(&run(&["show", "s1.sset", "--format", "full"]));
    assert_eq!(full, std::fs::read_to_string(repo().join("corpus/s1.sset")).unwrap());
    let dot = stdout(&run(&["show", "d1.sset", "--format", "dot"]));
    assert!(dot.starts_with("digraph faces {") && dot.matches("->").count() == 2);
    let r = stdout(&run(&["show", "point_plus_s1.retspace"]));
    assert_eq!(r, "dims: 2,1\nbase dims: 1,1\n");
    assert_eq!(run(&["show", "d2.sset", "--format", "png"]).status.code(), Some(2));
}

#[test]
fn show_parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.sset");
    std::fs::write(&p, "sset v1\ndim 1 e\nend\n").unwrap();
    let o = run(&["show", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line "));
    assert_eq!(run(&["show", "no_such_file.sset"]).status.code(), Some(2));
}

#[test]
fn corpus_directory_from_env() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("only_here.sset"), "sset v1\ndim 0 a\ndim 0 b\nend\n").unwrap();
    let o = exe().env("EXSPACE_CORPUS", dir.path()).args(["show", "only_here.sset"]).output().unwrap();
    assert_eq!(stdout(&o), "dims: 2\n");
    let s = dir.path().join("uses_corpus.exs");
    std::fs::write(&s, "let x = load(\"only_here.sset\")\nassert_dims(homology(x), (2))\n").unwrap();
    let o = exe().env("EXSPACE_CORPUS", dir.path()).args(["run", s.to_str().unwrap()]).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn cech_subcommand() {
    let o = run(&["cech", "three_arcs.cover"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "dims: 3,3\nhomology: (1,1)\n");
    assert_eq!(stdout(&run(&["cech", "single.cover"])), "dims: 1\nhomology: (1)\n");
    assert_eq!(run(&["cech", "d2.sset"]).status.code(), Some(2));
}
