use std::process::Command;

fn iwidth(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_iwidth"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn value<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
}

#[test]
fn decompose() {
    let (code, out, _) = iwidth(&["decompose", "-m", "7", "(1 2 3 4 5 6 7)"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "factors"), Some("3"));
    assert_eq!(value(&out, "verified"), Some("true"));
    assert_eq!(value(&out, "factor.1.order"), Some("2"));

    let (code, out, _) = iwidth(&["decompose", "-m", "5", "()"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "factors"), Some("0"));

    let (code, out, err) = iwidth(&["decompose", "-m", "5", "(1 2)"]);
    assert_ne!(code, 0);
    assert!(out.is_empty());
    assert!(err.contains("odd permutation"), "{err}");

    let (code, _, err) = iwidth(&["decompose", "-m", "5", "(1 2"]);
    assert_ne!(code, 0);
    assert!(err.contains("parse"), "{err}");
}

#[test]
fn eta() {
    let a5 = fixture("a5.json");
    let (code, out, _) = iwidth(&["eta", &a5, "--classes", "2A 2A", "--target", "3A"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "eta"), Some("3"));
    assert_eq!(value(&out, "kappa"), Some("4/5"));
    assert_eq!(value(&out, "centralizer.2A"), Some("4"));
    assert_eq!(value(&out, "centralizer.3A"), Some("3"));

    let (_, out, _) = iwidth(&["eta", &a5, "-c", "2A,2A", "-t", "1A"]);
    assert_eq!(value(&out, "eta"), Some("15"));

    let (code, _, err) = iwidth(&["eta", &a5, "-c", "2A 2a", "-t", "1A"]);
    assert_ne!(code, 0);
    assert!(err.contains("1A 2A 3A 5A 5B"), "{err}");
}

#[test]
fn reports_are_deterministic() {
    let a = iwidth(&["width", "A6"]);
    let b = iwidth(&["width", "A6"]);
    assert_eq!(a, b);
    assert_eq!(value(&a.1, "width"), Some("2"));
    assert_eq!(value(&a.1, "order"), Some("360"));
}

#[test]
fn json_mode_mirrors_keys() {
    let (code, out, _) = iwidth(&["--json", "degree", "-p", "4,2,1", "-q", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degree"], "7568");
    let (_, text, _) = iwidth(&["degree", "-p", "4,2,1", "-q", "2"]);
    let keys: Vec<&str> = text.lines().map(|l| l.split(": ").next().unwrap()).collect();
    let json_keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, json_keys);
}

#[test]
fn table_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psl.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = iwidth(&["table-compute", "PSL27", "-o", p]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "degrees"), Some("1 3 3 6 7 8"));
    let (code, out, _) = iwidth(&["table-validate", p]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "passed"), Some("true"));
    let (code, out, _) = iwidth(&["cover", p, "-k", "4"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "width"), Some("3"));

    let broken = dir.path().join("broken.json");
    let text = std::fs::read_to_string(fixture("a5.json")).unwrap();
    std::fs::write(&broken, text.replacen("\"size\": 20", "\"size\": 21", 1)).unwrap();
    let (code, out, _) = iwidth(&["table-validate", broken.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "passed"), Some("false"));
}

#[test]
fn generator_files() {
    let dir = tempfile::tempdir().unwrap();
    let perms = dir.path().join("a5.txt");
    std::fs::write(&perms, "# A5\n(1 2 3 4 5)\n(1 2 3)\n").unwrap();
    let (code, _, err) = iwidth(&["width", "--generators", perms.to_str().unwrap()]);
    assert_ne!(code, 0);
    assert!(err.contains("degree"), "{err}");
    let (code, out, _) = iwidth(&["width", "--generators", perms.to_str().unwrap(), "-m", "5"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "order"), Some("60"));
    assert_eq!(value(&out, "width"), Some("2"));

    // SL_2(3) has one involution, so it is not generated by involutions
    let mats = dir.path().join("sl23.txt");
    std::fs::write(&mats, "GF(3) 2\n1 1\n0 1\nGF(3) 2\n1 0\n1 1\n").unwrap();
    let (code, _, err) = iwidth(&["width", "-g", mats.to_str().unwrap()]);
    assert_ne!(code, 0);
    assert!(err.contains("involutions"), "{err}");
}

#[test]
fn lie_commands() {
    let (_, out, _) = iwidth(&["ppd", "-q", "2", "-n", "6"]);
    assert_eq!(value(&out, "ppd"), Some("[]"));
    let (_, out, _) = iwidth(&["torus", "-s", "3", "-q", "2"]);
    assert_eq!(value(&out, "order"), Some("3"));
    let (_, out, _) = iwidth(&["table1", "--row", "q2q-q1", "-n", "7", "-q", "2"]);
    assert_eq!(value(&out, "value"), Some("7568"));
    let (_, out, _) = iwidth(&["d2closed", "-q", "2", "-r", "7", "--r1", "7"]);
    assert_eq!(value(&out, "value"), Some("946"));
    let (_, out, _) = iwidth(&["d3closed", "-q", "2", "-r", "7", "--r1", "7"]);
    assert_eq!(value(&out, "integral"), Some("false"));

    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("id.txt");
    std::fs::write(&m, "GF(2^2) 3\n1 0 0\n0 1 0\n0 0 1\n").unwrap();
    let (code, out, _) = iwidth(&["weil", m.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "zeta"), Some("8"));
    assert_eq!(value(&out, "chi.0"), Some("2"));
    let (code, out, _) = iwidth(&["dalpha", "-k", "2", "-q", "2", "--row", "2", "-n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "d_alpha"), Some("946"));
    let (code, _, _) = iwidth(&["dalpha", "-k", "4", "-q", "2", "--row", "0", "-n", "7"]);
    assert_ne!(code, 0);
}
