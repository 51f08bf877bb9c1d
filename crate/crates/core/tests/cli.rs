use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use freeprod::group::library::{cyclic_named, symmetric3};
use freeprod::group::FiniteGroup;
use freeprod::refute::fixtures::klein_inclusions;
use freeprod::separation::SeparationCertificate;
use tempfile::TempDir;

fn freeprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeprod")).args(args).output().unwrap()
}

fn write_group(dir: &Path, name: &str, g: &FiniteGroup) -> String {
    let path = dir.join(name);
    fs::write(&path, serde_json::to_string(&g.to_spec()).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

struct Setup {
    dir: TempDir,
    g: String,
    h: String,
}

impl Setup {
    fn new(g: FiniteGroup, h: FiniteGroup) -> Self {
        let dir = TempDir::new().unwrap();
        let gp = write_group(dir.path(), "G.json", &g);
        let hp = write_group(dir.path(), "H.json", &h);
        Setup { dir, g: gp, h: hp }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn quotient(&self, m: &str, out: &str) -> Output {
        let out = self.path(out);
        freeprod(&["quotient", "--G", &self.g, "--H", &self.h, "-m", m, "--out", out.to_str().unwrap()])
    }
}

fn stderr_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stderr).unwrap()
}

#[test]
fn separate_prints_verifiable_certificate() {
    let s = Setup::new(cyclic_named(3, "g"), cyclic_named(3, "h"));
    let word = r#"[{"side":"G","element":"g"},{"side":"H","element":"h"},{"side":"G","element":"g^2"},{"side":"H","element":"h^2"}]"#;
    let out = freeprod(&["separate", "--G", &s.g, "--H", &s.h, "--word", word]);
    assert_eq!(out.status.code(), Some(0));
    let cert = SeparationCertificate::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(cert.word.len(), 4);

    fs::write(s.path("w.json"), word).unwrap();
    let from_file = format!("@{}", s.path("w.json").display());
    let again = freeprod(&["separate", "--G", &s.g, "--H", &s.h, "--word", &from_file]);
    assert_eq!(again.stdout, out.stdout);
}

#[test]
fn quotient_and_verify() {
    let s = Setup::new(symmetric3(), cyclic_named(2, "h"));
    assert_eq!(s.quotient("3", "q.json").status.code(), Some(0));
    let out = freeprod(&["verify", s.path("q.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pass inequations"));
    assert!(text.contains("pass factorial"));
}

#[test]
fn output_is_deterministic() {
    let s = Setup::new(cyclic_named(2, "g"), cyclic_named(3, "h"));
    s.quotient("4", "a.json");
    s.quotient("4", "b.json");
    assert_eq!(fs::read(s.path("a.json")).unwrap(), fs::read(s.path("b.json")).unwrap());
}

#[test]
fn validation_errors_exit_2() {
    let s = Setup::new(cyclic_named(2, "g"), cyclic_named(2, "h"));
    let out = freeprod(&["separate", "--G", &s.g, "--H", &s.h, "--word", "[]"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"]["kind"], "validation");

    let out = freeprod(&["separate", "--G", &s.g, "--H", &s.h, "--word", "[{\"side\":"]);
    assert_eq!(out.status.code(), Some(2));

    let out = freeprod(&["separate", "--G", &s.g, "--H", &s.h, "--word", r#"[{"side":"G","element":"zz"}]"#]);
    assert_eq!(out.status.code(), Some(2));

    assert_eq!(s.quotient("0", "q.json").status.code(), Some(2));

    fs::write(s.path("bad.json"), r#"{"labels":["e","x"],"table":[[0,1],[1,1]]}"#).unwrap();
    let bad = s.path("bad.json");
    let out = freeprod(&["quotient", "--G", bad.to_str().unwrap(), "--H", &s.h, "-m", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = freeprod(&["quotient", "--G", &s.g, "--H", &s.h, "-m", "2", "--g", "e"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exhausted_conjugators_exit_3() {
    let s = Setup::new(cyclic_named(2, "g"), cyclic_named(2, "h"));
    let out = freeprod(&["quotient", "--G", &s.g, "--H", &s.h, "-m", "2", "--max-conjugators", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_json(&out)["error"]["kind"], "pipeline");
}

#[test]
fn tampering_exits_4_and_names_check() {
    let s = Setup::new(cyclic_named(2, "g"), cyclic_named(3, "h"));
    s.quotient("3", "q.json");
    let mut cert: serde_json::Value = serde_json::from_slice(&fs::read(s.path("q.json")).unwrap()).unwrap();
    let p = cert["p"].as_u64().unwrap();
    let x = cert["word_image_mod_p"][0][0].as_u64().unwrap();
    cert["word_image_mod_p"][0][0] = ((x + 1) % p).into();
    fs::write(s.path("t.json"), cert.to_string()).unwrap();
    let out = freeprod(&["verify", s.path("t.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr_json(&out)["error"]["message"].as_str().unwrap().contains("word_image"));

    // a prime dividing D_s
    let d_s: u64 = cert["D_s"].as_str().unwrap().parse().unwrap();
    let bad_p = (2..=d_s).find(|q| d_s.is_multiple_of(*q)).unwrap_or(1);
    cert["p"] = if bad_p == 1 { 4.into() } else { bad_p.into() };
    fs::write(s.path("t.json"), cert.to_string()).unwrap();
    let out = freeprod(&["verify", s.path("t.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr_json(&out)["error"]["message"].as_str().unwrap().contains("'prime'"));
}

#[test]
fn refute_klein_candidate() {
    let dir = TempDir::new().unwrap();
    let cand = dir.path().join("klein.json");
    fs::write(&cand, serde_json::to_string(&klein_inclusions().to_spec()).unwrap()).unwrap();
    let out_path = dir.path().join("r.json");
    let out = freeprod(&[
        "refute",
        "--candidate",
        cand.to_str().unwrap(),
        "--oracle",
        "dihedral",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let cert: serde_json::Value = serde_json::from_slice(&fs::read(&out_path).unwrap()).unwrap();
    assert_eq!(cert["m"], 2);
    assert!(cert["oracle_checks"].as_array().unwrap().iter().any(|c| c["kind"] == "dihedral"));
    let out = freeprod(&["verify", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let mut spec: serde_json::Value = serde_json::from_slice(&fs::read(&cand).unwrap()).unwrap();
    spec["iota_G"]["g"] = "(e,e)".into();
    spec["iota_H"]["h"] = "(g,g)".into();
    spec["iota_H"]["e"] = "(g,e)".into();
    fs::write(&cand, spec.to_string()).unwrap();
    let out = freeprod(&["refute", "--candidate", cand.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fixtures_command_writes_tree() {
    let dir = TempDir::new().unwrap();
    let out = freeprod(&["fixtures", "--max-m", "2", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for sub in ["groups", "quotients", "candidates", "refutations"] {
        assert!(dir.path().join(sub).is_dir(), "{sub}");
    }
    assert!(dir.path().join("quotients/z2_z2_m2.json").is_file());
    assert_eq!(freeprod(&["fixtures"]).status.code(), Some(2));
}
