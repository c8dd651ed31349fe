use std::process::{Command, Output};

fn cgring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cgring")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = cgring(&all);
    assert!(o.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn ring_describe() {
    let two = json(&["ring", "describe", "<g1,g2|>"]);
    assert_eq!(two["variables"].as_array().unwrap().len(), 3);
    assert!(two["relations"].as_array().unwrap().is_empty());
    let three = json(&["ring", "describe", "<g1,g2,g3|>"]);
    assert_eq!(three["variables"].as_array().unwrap().len(), 7);
    assert_eq!(three["relations"].as_array().unwrap().len(), 1);
    let c4 = json(&["ring", "describe", "<g1|g1^4>"]);
    assert_eq!(c4["dimension"], 3);
}

#[test]
fn presentation_from_file() {
    let path = std::env::temp_dir().join(format!("cgring-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "<a|a^6>\n").unwrap();
    let d = json(&["ring", "describe", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(d["dimension"], 4);
}

#[test]
fn ideals() {
    let o = cgring(&["ideal", "bullet", "<g1|>", "--words", "g1"]);
    assert_eq!(stdout(&o).trim(), "-lambda1 + 1");
    let o = cgring(&["ideal", "hashhash", "<g1,g2|>"]);
    assert_eq!(stdout(&o).trim(), "(zero ideal)");
    let h = json(&["ideal", "hash", "<g1,g2|>", "--words", "g1^2,g2^3"]);
    assert_eq!(h["provenance"], "hash");
    assert_eq!(h["generators"][0], "2*lambda1^2 - 2");
}

#[test]
fn normalgen_exit_codes() {
    let c = "<g1,g2|g1^2,g2^3>";
    assert_eq!(cgring(&["normalgen", c, "--words", "g1*g2*g1*g2"]).status.code(), Some(0));
    assert_eq!(cgring(&["normalgen", "<g1|>", "--words", "g1"]).status.code(), Some(2));
    assert_eq!(cgring(&["normalgen", "<g1,g2|>", "--words", "g1", "--hash"]).status.code(), Some(0));
}

#[test]
fn errors_exit_with_one() {
    let o = cgring(&["ring", "describe", "<g1,g2|g3>"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(cgring(&["boyer", "--s", "2", "--t", "3", "--r", "2", "--word", "g1*g1"]).status.code(), Some(1));
}

#[test]
fn boyer_json_is_reproducible() {
    let args = ["--json", "boyer", "--s", "2", "--t", "3", "--r", "2", "--word", "g1*g2"];
    let (a, b) = (cgring(&args), cgring(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["conclusion"], "(g1*g2)^2 does not normally generate C_2 * C_3");
    assert_eq!(v["unit_certificate"]["product"], "1");
}

#[test]
fn sw_commands() {
    let v = json(&["sw", "verify", "--r", "2", "--s", "3", "--t", "5", "--word", "g1*g2*g3", "--properness"]);
    assert_eq!(v["properness"], "proper");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let s = json(&["sw", "static-checks"]);
    assert!(s["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let p = json(&["sw", "probe", "--c0", "1", "--c1", "-1/2", "--c2", "0", "--c3", "1", "--trials", "3", "--seed", "4"]);
    assert_eq!(p["seed"], 4);
}

#[test]
fn seeded_reports_record_the_seed() {
    let args = ["--json", "oracle", "fuzz", "--trials", "40", "--seed", "7"];
    let (a, b) = (cgring(&args), cgring(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert!(v["mismatches"].as_array().unwrap().is_empty());
    let id = json(&["identity", "selftest", "--seed", "1", "--trials", "2", "--length", "3"]);
    assert_eq!(id["seed"], 1);
    assert!(id["checks"].as_array().unwrap().iter().all(|c| c["failures"] == 0));
}
