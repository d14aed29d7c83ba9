use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use singcat_core::fixtures::{kx_spec, uniserial};
use singcat_core::io::{algebra_from_json, algebra_to_json, module_to_json, subcat_from_json, subcat_to_json};
use singcat_core::linalg::Field;
use tempfile::TempDir;

fn singcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singcat")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn emit(dir: &Path, name: &str) {
    let o = singcat(&["example", name, "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

fn read(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

fn p(dir: &TempDir, f: &str) -> String {
    dir.path().join(f).to_str().unwrap().to_string()
}

#[test]
fn emitted_fixtures_round_trip() {
    let dir = TempDir::new().unwrap();
    for name in ["kx2", "hereditary-a2", "a2-tilde-3233", "a2-infty-window"] {
        emit(dir.path(), name);
        let aj = read(&dir.path().join(format!("{name}.algebra.json")));
        let alg = std::sync::Arc::new(algebra_from_json(&aj, None).unwrap());
        assert_eq!(algebra_to_json(&alg), aj, "{name}");
        let sj = read(&dir.path().join(format!("{name}.subcat.json")));
        let spec = subcat_from_json(&sj, &alg, &|_| unreachable!()).unwrap();
        let mut back = subcat_to_json(&spec, sj["algebra"].as_str().unwrap());
        if let Some(a) = sj.get("annotations") {
            back["annotations"] = a.clone();
        }
        assert_eq!(back, sj, "{name}");
    }
    let alg = read(&dir.path().join("a2-tilde-3233.algebra.json"));
    assert_eq!(alg["vertices"].as_array().unwrap().len(), 11);
    let window = read(&dir.path().join("a2-infty-window.subcat.json"));
    assert_eq!(window["annotations"]["safe_region"]["columns"], json!([2, 10]));
}

#[test]
fn example_8_2_pipeline() {
    let dir = TempDir::new().unwrap();
    emit(dir.path(), "a2-tilde-3233");
    let sub = p(&dir, "a2-tilde-3233.subcat.json");
    let alg = p(&dir, "a2-tilde-3233.algebra.json");

    let r = p(&dir, "ct.json");
    let o = singcat(&["ct", "verify", "--algebra", &alg, "--subcat", &sub, "--mode", "certificate", "--out", &r]);
    assert_eq!(code(&o), 0);
    let ct = read(Path::new(&r));
    assert!(ct["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    assert!(ct["checks"].as_array().unwrap().iter().any(|c| c["check"] == "dZ_closure"));

    let r = p(&dir, "skel.json");
    let o = singcat(&["sing", "skeleton", "--d", "2", "--horizon", "24", "--subcat", &sub, "--expected", "4", "--out", &r]);
    assert_eq!(code(&o), 0);
    let sk = read(Path::new(&r));
    assert_eq!(sk["computed_count"], 3);
    assert_eq!(sk["expected_count"], 4);
    assert_eq!(sk["discrepancy"], true);
    assert_eq!(sk["hom_matrix"], json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));

    let o = singcat(&["sing", "skeleton", "--d", "3", "--subcat", &sub]);
    assert_eq!(code(&o), 3);

    let r = p(&dir, "gor.json");
    let o = singcat(&["sing", "gorenstein", "--algebra", &alg, "--out", &r]);
    assert_eq!(code(&o), 1);
    let g = read(Path::new(&r));
    assert_eq!(g["verdict"], "not_gorenstein");
    assert_eq!(g["witness"]["vertex"], "(3,4)");
    assert_eq!(g["witness"]["pd"]["kind"], "infinite_periodic");

    let o = singcat(&["sing", "gorenstein", "--algebra", &alg, "--horizon", "1"]);
    assert_eq!(code(&o), 2);

    let r = p(&dir, "gp.json");
    let o = singcat(&["sing", "gp", "--subcat", &sub, "--out", &r]);
    assert_eq!(code(&o), 1);
    assert_eq!(read(Path::new(&r))["hypothesis"], "hypothesis_failed");
}

#[test]
fn input_errors_exit_3() {
    let dir = TempDir::new().unwrap();
    let bad = p(&dir, "bad.json");
    fs::write(
        &bad,
        r#"{"field":{"kind":"rational"},"vertices":["u"],"arrows":[{"id":"a","src":"u","tgt":"w"}]}"#,
    )
    .unwrap();
    assert_eq!(code(&singcat(&["alg", "validate", &bad])), 3);
    assert_eq!(code(&singcat(&["alg", "validate", &p(&dir, "missing.json")])), 3);
    fs::write(&bad, "{not json").unwrap();
    assert_eq!(code(&singcat(&["alg", "validate", &bad])), 3);
    assert_eq!(code(&singcat(&["example", "nope", "--out", dir.path().to_str().unwrap()])), 3);
    emit(dir.path(), "kx2");
    assert_eq!(code(&singcat(&["--field", "4", "alg", "validate", &p(&dir, "kx2.algebra.json")])), 3);
    assert_eq!(code(&singcat(&["bogus"])), 3);
}

#[test]
fn module_commands_and_field_override() {
    let dir = TempDir::new().unwrap();
    let f = Field::rational();
    let spec = kx_spec(4, f).unwrap();
    let alg = p(&dir, "kx4.json");
    fs::write(&alg, algebra_to_json(&spec.alg).to_string()).unwrap();
    for m in 1..=4 {
        let x = uniserial(&spec.alg, m).unwrap();
        fs::write(p(&dir, &format!("m{m}.json")), module_to_json(&x, Some("kx4.json")).to_string()).unwrap();
    }
    let (m1, m2, m3) = (p(&dir, "m1.json"), p(&dir, "m2.json"), p(&dir, "m3.json"));
    let r = p(&dir, "r.json");
    for field in ["2", "101", "Q"] {
        let o = singcat(&["--field", field, "mod", "hom", "--algebra", &alg, "--m", &m2, "--n", &m3, "--out", &r]);
        assert_eq!(code(&o), 0);
        assert_eq!(read(Path::new(&r))["dims"], json!([2, 1]), "field {field}");
    }
    singcat(&["mod", "ext", "--algebra", &alg, "--m", &m1, "--n", &m1, "--degree", "2", "--out", &r]);
    assert_eq!(read(Path::new(&r))["dims"], json!([1]));
    let o = singcat(&["mod", "syzygy", "--algebra", &alg, "--m", &m1, "--k", "1", "--out", &r]);
    assert_eq!(code(&o), 0);
    assert_eq!(read(Path::new(&r))["dims"], json!({"0": 3}));
    let o = singcat(&["mod", "resolve", "--algebra", &alg, "--m", &m1, "--length", "3", "--out", &r]);
    assert_eq!(code(&o), 0);
    let res = read(Path::new(&r));
    assert_eq!(res["terms"][0]["dim"], 4);
    assert_eq!(res["pd"]["kind"], "infinite_periodic");
}

#[test]
fn full_mode_and_refutation() {
    let dir = TempDir::new().unwrap();
    emit(dir.path(), "kx2");
    let sub = p(&dir, "kx2.subcat.json");
    let indecs = p(&dir, "indecs.json");
    let sj = read(Path::new(&sub));
    fs::write(&indecs, sj["generators"].to_string()).unwrap();
    let r = p(&dir, "r.json");
    let o = singcat(&["ct", "verify", "--subcat", &sub, "--mode", "full", "--indecs", &indecs, "--seed", "7", "--out", &r]);
    assert_eq!(code(&o), 0);
    assert_eq!(read(Path::new(&r))["verdict"], "verified");
    assert_eq!(code(&singcat(&["ct", "verify", "--subcat", &sub, "--mode", "full"])), 3);

    // {M1} alone does not generate k[x]/(x^2)
    let mut only_s = sj.clone();
    only_s["generators"] = json!([sj["generators"][0]]);
    let s_only = p(&dir, "s_only.json");
    fs::write(&s_only, only_s.to_string()).unwrap();
    let o = singcat(&["ct", "verify", "--subcat", &s_only, "--out", &r]);
    assert_eq!(code(&o), 1);
    assert_eq!(read(Path::new(&r))["verdict"], "refuted");

    let m = p(&dir, "m.json");
    fs::write(&m, sj["generators"][0].to_string()).unwrap();
    let o = singcat(&["ct", "resolution", "--subcat", &sub, "--m", &m, "--out", &r]);
    assert_eq!(code(&o), 0);
    assert_eq!(read(Path::new(&r))["pass"], true);
    let o = singcat(&["ct", "angle", "--subcat", &sub, "--m", &m, "--out", &r]);
    assert_eq!(code(&o), 0);
    assert_eq!(read(Path::new(&r))["dims"], json!([1, 2, 1]));
}

#[test]
fn hereditary_skeleton_is_empty() {
    let dir = TempDir::new().unwrap();
    emit(dir.path(), "hereditary-a2");
    let r = p(&dir, "r.json");
    let o = singcat(&["sing", "skeleton", "--subcat", &p(&dir, "hereditary-a2.subcat.json"), "--out", &r]);
    assert_eq!(code(&o), 0);
    assert_eq!(read(Path::new(&r))["computed_count"], 0);
    let o = singcat(&["sing", "gorenstein", "--algebra", &p(&dir, "hereditary-a2.algebra.json")]);
    assert_eq!(code(&o), 0);
}
