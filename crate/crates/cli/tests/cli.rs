use ambient_dirac::Report;
use ambient_dirac_cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ambient-dirac").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn nf_examples() {
    assert_eq!(
        invoke(&["nf", "[Q,y]"]),
        (EXIT_OK, "-2*x\n".into(), String::new())
    );
    assert_eq!(invoke(&["nf", "x*y + y*x"]).1, "2*h\n");
    assert_eq!(invoke(&["nf", "2*h - x*y"]).1, "-x*y + 2*h\n");
    assert_eq!(
        invoke(&["nf", "y^3*x^3"]).1,
        "-x^3*y^3 + 2*x^2*y^2*h - 4*x*y*h + 8*h^2 + 8*h\n"
    );
}

#[test]
fn nf_errors_are_usage_errors() {
    let (code, out, err) = invoke(&["nf", "x^-1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("syntax error at 2"), "{err}");
    let (code, _, err) = invoke(&["nf", "[x + h, y]"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("mixed parity"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(invoke(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    assert_eq!(
        invoke(&["verify", "--suite", "flat", "--sig", "1,0"]).0,
        EXIT_USAGE
    );
    assert_eq!(invoke(&["solve", "--p", "1"]).0, EXIT_USAGE);
    assert_eq!(invoke(&[]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn relations_at_one_signature() {
    let (code, out, _) = invoke(&[
        "verify",
        "--suite",
        "relations",
        "--sig",
        "2,2",
        "--deg",
        "3",
        "--trials",
        "20",
        "--seed",
        "7",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("fail 0"));
}

#[test]
fn constants_table() {
    let (code, out, _) = invoke(&["constants", "--parity", "odd", "--pmax", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "p=1  c=8  pass\n");
    let (_, out, _) = invoke(&["constants", "--parity", "even", "--pmax", "2"]);
    assert_eq!(out, "p=1  c=1  pass\np=2  c=-4  pass\n");
}

#[test]
fn solve_prints_obstruction() {
    let (code, out, _) = invoke(&["solve", "--parity", "even", "--p", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("obstruction: slot 2: -x*y^3*sigma"), "{out}");
    let (_, out, _) = invoke(&["solve", "--parity", "odd", "--p", "1"]);
    assert!(
        out.contains("representative: sigma - 1/2*x*y*sigma - 1/4*x^2*y^2*sigma"),
        "{out}"
    );
    let (_, out, _) = invoke(&["solve", "--parity", "even", "--generic-w", "--max-order", "4"]);
    assert!(
        out.contains("denominators: w + 1/2*n - 1, w + 1/2*n - 2"),
        "{out}"
    );
    assert!(out.contains("obstruction: none"));
}

#[test]
fn json_report_shape_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let code = invoke(&[
            "verify",
            "--suite",
            "flat",
            "--sig",
            "2,1",
            "--deg",
            "2",
            "--trials",
            "3",
            "--seed",
            "11",
            "--json",
            path.to_str().unwrap(),
        ])
        .0;
        assert_eq!(code, EXIT_OK);
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["suite", "cases", "summary", "seed", "version"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    let report: Report = serde_json::from_str(&text).unwrap();
    assert!(report.tally_is_consistent());
    assert_eq!(report.seed, Some(11));
}

#[test]
fn exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("prop3.json");
    let code = invoke(&[
        "verify",
        "--suite",
        "prop3",
        "--pmax",
        "2",
        "--json",
        path.to_str().unwrap(),
    ])
    .0;
    assert_eq!(code, EXIT_OK);
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.summary.flagged > 0);
    assert_eq!(report.summary.fail, 0);

    let (code, out, _) = invoke(&["verify", "--suite", "jacobi", "--inject-fail"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("injected failure"));
}
