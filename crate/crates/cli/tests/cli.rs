use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qcocycle")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json_of(args: &[&str]) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{args:?}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn invariant_examples() {
    let v = json_of(&["invariant", "--pd", "builtin:trefoil", "--quandle", "dihedral:3", "--cocycle", "theta:3"]);
    assert_eq!(v["invariant"]["values"], json!({"0": 3, "2": 6}));
    assert_eq!(v["colorings"], 9);
    assert_eq!(v["per_coloring"].as_array().unwrap().len(), 9);
    let v = json_of(&["invariant", "--pd", "unknot", "--quandle", "dihedral:5", "--cocycle", "theta:5"]);
    assert_eq!(v["invariant"]["values"], json!({"0": 5}));
    let v = json_of(&["invariant", "--pd", "builtin:trefoil", "--quandle", "dihedral:4", "--cocycle", "theta:4"]);
    assert_eq!(v["invariant"]["values"], json!({"0": 4}));
    let v = json_of(&["invariant", "--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "--quandle", "conj:D6:h", "--cocycle", "transfer-b1b2:3"]);
    assert_eq!(v["colorings"], 9);
}

#[test]
fn pd_from_file() {
    let dir = std::env::temp_dir().join(format!("qcocycle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig8.pd");
    std::fs::write(&path, "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]\n").unwrap();
    let v = json_of(&["cover", "--pd", path.to_str().unwrap(), "--fold", "2", "--branched"]);
    assert_eq!(v["abelianization"]["torsion"], json!([5]));
    let out = dir.join("out.json");
    let (code, stdout) = run(&["dw", "--lens", "5:0", "--out", out.to_str().unwrap()]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["triangulation"]["values"], json!({"0": 5}));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn homology_examples() {
    let v = json_of(&["homology", "--quandle", "dihedral:3", "--degree", "3", "--coeff", "F3"]);
    assert_eq!(v["dim"], 1);
    let v = json_of(&["homology", "--quandle", "dihedral:3", "--degree", "3", "--coeff", "Z"]);
    assert_eq!(v["torsion"], json!([3]));
    let v = json_of(&["homology", "--quandle", "dihedral:3", "--degree", "2", "--coeff", "Z"]);
    assert_eq!((v["rank"].clone(), v["torsion"].clone()), (json!(0), json!([])));
}

#[test]
fn cover_dw_compare() {
    let v = json_of(&["cover", "--pd", "builtin:trefoil", "--fold", "2", "--branched"]);
    assert_eq!(v["abelianization"]["pretty"], "Z/3");
    let v = json_of(&["cover", "--pd", "builtin:trefoil", "--fold", "2"]);
    assert_eq!(v["abelianization"]["pretty"], "Z + Z/3");
    let v = json_of(&["dw", "--lens", "3:1"]);
    assert_eq!(v["triangulation"]["values"], json!({"0": 1, "2": 2}));
    assert_eq!(v["agree"], true);
    let v = json_of(&["compare", "--p", "5"]);
    assert_eq!((v["constant"].clone(), v["match"].clone()), (json!(5), json!(true)));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["invariant", "--pd", "trefoil", "--quandle", "dihedral:3", "--cocycle", "theta:5"]).0, 2);
    assert_eq!(run(&["invariant", "--pd", "X[1,2,3]", "--quandle", "dihedral:3", "--cocycle", "theta:3"]).0, 2);
    assert_eq!(run(&["invariant", "--pd", "trefoil", "--quandle", "bogus:3", "--cocycle", "theta:3"]).0, 2);
    assert_eq!(run(&["compare", "--p", "4"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let out = Command::new(env!("CARGO_BIN_EXE_qcocycle"))
        .args(["homology", "--quandle", "dihedral:5", "--degree", "3"])
        .env("QCOCYCLE_MAX_MATRIX_ENTRIES", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn deterministic_across_worker_counts() {
    for args in [
        &["invariant", "--pd", "builtin:fig8", "--quandle", "dihedral:5", "--cocycle", "theta:5"][..],
        &["invariant", "--pd", "torus:7", "--quandle", "dihedral:7", "--cocycle", "theta:7"][..],
        &["homology", "--quandle", "dihedral:5", "--degree", "3", "--coeff", "Z"][..],
    ] {
        let outputs: Vec<String> = ["1", "2", "4"]
            .iter()
            .map(|w| {
                let mut a = args.to_vec();
                a.extend(["--workers", w]);
                let (code, out) = run(&a);
                assert_eq!(code, 0);
                out
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
        assert_eq!(run(args).1, outputs[0]);
    }
}
