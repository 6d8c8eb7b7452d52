use suzuki_descent::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_SCALE, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("szdescent").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn sz_table_matches_golden_snapshot() {
    let (code, out, _) = call(&["table", "sz", "--n", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let golden = include_str!("golden/table_sz_n1.json");
    assert_eq!(out, golden);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 11);
    assert_eq!(v["rows"].as_array().unwrap().len(), 11);
}

#[test]
fn json_output_is_deterministic() {
    let a = call(&["verify", "chevalley", "--n", "1", "--seed", "7", "--format", "json"]);
    let b = call(&["verify", "chevalley", "--n", "1", "--seed", "7", "--format", "json"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a.1, b.1);
}

#[test]
fn roots_print_zeta8_names() {
    let (code, out, _) = call(&["roots", "--n", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("omega_W = zeta8^5"), "{out}");
    assert!(out.contains("omega_Wbar = zeta8^3"), "{out}");
}

#[test]
fn verification_reports_identity_counts() {
    for check in ["orthogonality", "thm41", "digne-michel"] {
        let (code, out, _) = call(&["verify", check, "--n", "1", "--format", "json"]);
        assert_eq!(code, EXIT_OK, "{check}: {out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["identities"].as_u64().unwrap() > 0);
        assert!(v["failures"].as_array().unwrap().is_empty());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["no-such-command"]).0, EXIT_USAGE);
    assert_eq!(call(&["table", "sz", "--n", "13"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "induction", "--n", "1", "--budget", "10"]).0, EXIT_SCALE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_ne!(EXIT_FAILURE, EXIT_OK);
}

#[test]
fn csv_is_marked_lossy() {
    let (code, out, _) = call(&["table", "outer", "--n", "1", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with('#') && out.lines().next().unwrap().contains("lossy"));
}

#[test]
fn fourier_latex() {
    let (code, out, _) = call(&["fourier", "--latex"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(r"\frac{\sqrt2}{2} & -\frac{\sqrt2}{2}"));
}
