use std::path::Path;
use std::process::{Command, Output};

use sha2::{Digest, Sha256};

fn classcover(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_classcover"))
        .args(args)
        .current_dir(dir)
        .env_remove("CLASSCOVER_CONFIG")
        .env_remove("CLASSCOVER_ENUM_CAP")
        .env_remove("CLASSCOVER_FORMAT")
        .env_remove("CLASSCOVER_OUT")
        .env_remove("CLASSCOVER_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records().map(|x| x.unwrap().iter().map(String::from).collect()).collect()
}

fn sha(path: &Path) -> Vec<u8> {
    Sha256::digest(std::fs::read(path).unwrap()).to_vec()
}

#[test]
fn help_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = classcover(&["--help"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Usage"));
    for sub in ["cover", "spectrum", "width", "lemma-check", "qsimple", "filterbase", "alpha", "density", "residuals"] {
        assert!(stdout(&o).contains(sub), "{sub}");
    }
}

#[test]
fn cover_a5_has_four_noncentral_rows() {
    let dir = tempfile::tempdir().unwrap();
    let o = classcover(&["cover", "--group", "A_5", "--all-classes"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    let noncentral: Vec<_> = rows.iter().filter(|r| r[2] != "1").collect();
    assert_eq!(noncentral.len(), 4);
    assert!(noncentral.iter().all(|r| r[3] != "never" && !r[4].is_empty()));
    let three_cycles = rows.iter().find(|r| r[2] == "20").unwrap();
    assert_eq!(three_cycles[3], "2");
    let identity = rows.iter().find(|r| r[2] == "1").unwrap();
    assert_eq!(identity[3], "never");
}

#[test]
fn width_keyc_a4_v4() {
    let dir = tempfile::tempdir().unwrap();
    let o = classcover(&["width", "--group", "A_4", "--target", "V4", "--gens", "(123)", "--mode", "keyc"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["minimalT"], 1);
    assert_eq!(v["d"], 1);
    assert_eq!(v["group"], "A_4");
}

#[test]
fn width_segal_reports_bound() {
    let dir = tempfile::tempdir().unwrap();
    let o = classcover(&["width", "--group", "S_4", "--gens", "(12),(1234)", "--mode", "segal"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["paperBound"], 190);
    assert!(v["minimalT"].as_u64().unwrap() <= 190);
    assert_eq!(v["alpha"], 4);
}

#[test]
fn reruns_are_byte_identical_and_write_sidecars() {
    let dir = tempfile::tempdir().unwrap();
    let args = |out: &str| {
        vec![
            "cover".to_string(),
            "--group".into(),
            "A_6".into(),
            "--group".into(),
            "PSL(2,7)".into(),
            "--all-classes".into(),
            "--csv".into(),
            out.into(),
        ]
    };
    for out in ["a.csv", "b.csv"] {
        let a = args(out);
        let a: Vec<&str> = a.iter().map(String::as_str).collect();
        assert_eq!(classcover(&a, dir.path()).status.code(), Some(0));
    }
    assert_eq!(sha(&dir.path().join("a.csv")), sha(&dir.path().join("b.csv")));
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("a.csv.meta.json")).unwrap()).unwrap();
    assert!(meta["unix_time"].as_u64().is_some());
    assert_eq!(meta["config"]["format"], "csv");
    let json1 = classcover(&["spectrum", "--family", "sl", "--n", "4,6", "--p", "3", "--format", "json"], dir.path());
    let json2 = classcover(&["spectrum", "--family", "sl", "--n", "4,6", "--p", "3", "--format", "json"], dir.path());
    assert_eq!(json1.stdout, json2.stdout);
}

#[test]
fn cached_class_tables_reproduce_cold_runs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |out: &str, cache: bool| {
        let mut a = vec!["cover", "-g", "SL(2,5)", "-g", "A_7", "--all-classes", "--out", out];
        if cache {
            a.extend(["--cache-dir", "cache"]);
        }
        assert_eq!(classcover(&a, dir.path()).status.code(), Some(0));
        sha(&dir.path().join(out))
    };
    let plain = run("plain.csv", false);
    let cold = run("cold.csv", true);
    assert_eq!(std::fs::read_dir(dir.path().join("cache")).unwrap().count(), 2);
    let warm = run("warm.csv", true);
    assert_eq!(plain, cold);
    assert_eq!(cold, warm);
    let lemma_cold = classcover(&["lemma-check", "-g", "A_5"], dir.path());
    let lemma_warm = classcover(&["lemma-check", "-g", "A_5", "--cache-dir", "cache"], dir.path());
    assert_eq!(lemma_cold.stdout, lemma_warm.stdout);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |a: &[&str]| classcover(a, dir.path()).status.code();
    assert_eq!(code(&["cover", "--group", "A_9", "--enum-cap", "1000"]), Some(3));
    assert_eq!(code(&["cover", "--group", "Q_8"]), Some(2));
    assert_eq!(code(&["cover", "--group", "A_5", "--bogus"]), Some(2));
    assert_eq!(code(&["cover", "--group", "A_5", "--enum-cap", "0"]), Some(2));
    assert_eq!(code(&["width", "--group", "S_4", "--gens", "(123)", "--mode", "segal"]), Some(2));
    assert_eq!(code(&["width", "--group", "A_5", "--gens", "(123)", "--mode", "segal"]), Some(2));
    assert_eq!(code(&["cover", "--corpus", "missing.json"]), Some(1));
    std::fs::write(dir.path().join("corpus.json"), r#"["A_5", "C_5"]"#).unwrap();
    assert_eq!(code(&["cover", "--corpus", "corpus.json"]), Some(2));
    assert_eq!(code(&["cover"]), Some(2));
}

#[test]
fn config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c.toml"), "format = \"json\"\nenum_cap = 50\n").unwrap();
    // file cap blocks A_5, the flag lifts it
    let blocked = classcover(&["cover", "-g", "A_5", "--config", "c.toml"], dir.path());
    assert_eq!(blocked.status.code(), Some(3));
    let o = classcover(&["cover", "-g", "A_5", "--config", "c.toml", "--enum-cap", "1000"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(serde_json::from_str::<serde_json::Value>(&stdout(&o)).is_ok());
    let env = Command::new(env!("CARGO_BIN_EXE_classcover"))
        .args(["cover", "-g", "A_5", "--config", "c.toml"])
        .current_dir(dir.path())
        .env("CLASSCOVER_ENUM_CAP", "1000")
        .env("CLASSCOVER_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(0));
    assert!(stdout(&env).starts_with("group,class_rep"));
}

#[test]
fn generator_files() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("a5.json"), r#"{"degree": 5, "generators": [[2,3,1,4,5],[1,2,4,5,3]]}"#).unwrap();
    let o = classcover(&["alpha", "-g", "file(a5.json)", "-g", "S_4"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows[0][1..], ["60", "5"]);
    assert_eq!(rows[1][1..], ["24", "4"]);
}

#[test]
fn lemma_qsimple_density_residuals() {
    let dir = tempfile::tempdir().unwrap();
    let o = classcover(&["lemma-check", "-g", "S_4", "-g", "SL(2,3)"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(csv_rows(&stdout(&o)).iter().all(|r| r[2] == "0"));
    // an outer automorphism of C_2 x C_2 given by generator images
    let o = classcover(&["lemma-check", "-g", "C_2 x C_2", "--auto", "<#0 | #1>,<#1 | #0>"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(csv_rows(&stdout(&o)).len(), 5);

    let o = classcover(&["qsimple", "-g", "central(SL(2,5), SL(2,5))", "--swap", "1,2"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["eligible"], true);
    assert_eq!(v["minimalC"], 2);

    let o = classcover(&["density", "--tau-product", "5", "--check-closure"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["abelianizationOrder"], 2);
    assert_eq!(v["closureIsWhole"], true);

    let o = classcover(&["density", "-g", "S_4", "--gstar"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gStarOrder"], 12);

    let o = classcover(&["residuals", "-g", "SL(2,5)"], dir.path());
    assert_eq!(csv_rows(&stdout(&o))[0][1..], ["120", "120", "2", "1"]);
}

#[test]
fn spectrum_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = classcover(&["spectrum", "--family", "an", "--n", "1000"], dir.path());
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 11);
    for r in &rows {
        let err: f64 = r[4].parse().unwrap();
        assert!(err <= 0.1, "{r:?}");
    }
    let o = classcover(&["spectrum", "--family", "sl", "--n", "5", "--p", "2", "--beta", "0.9"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = classcover(&["spectrum", "--family", "sl", "--n", "4"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn filterbase_modes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("fam.json"),
        r#"{"members": ["A_5", "PSL(2,7)", {"range": "A_n", "from": 5, "to": 40}]}"#,
    )
    .unwrap();
    let o = classcover(&["filterbase", "--family", "fam.json", "--mode", "profile"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(csv_rows(&stdout(&o)).len(), 38);
    // identity everywhere except a big class on A_5: the intersection is all but coordinate 1
    std::fs::write(
        dir.path().join("t.json"),
        r#"{"tuples": [{"all": "e", "at": {"1": "(12345)"}}, {"all": "beta:0.9"}]}"#,
    )
    .unwrap();
    let o = classcover(
        &["filterbase", "--family", "fam.json", "--tuples", "t.json", "--mode", "dichotomy", "--eps", "0.5"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exclusive"], true);
    assert_eq!(v["fip"]["hasFip"], false);
    assert_eq!(v["certificate"]["verified"], true);
    let o = classcover(
        &["filterbase", "--family", "fam.json", "--datum", "e", "--mode", "certificate"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
}
