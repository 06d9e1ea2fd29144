//! Acceptance criteria 1 to 11, one pass/fail line each. Exits nonzero if
//! any criterion fails.

use std::collections::BTreeSet;

use ambient_dirac::algebra::suites::{verify_identity_suite, IdentitySuite};
use ambient_dirac::clifford::{
    cross_module_oracle, kernel_lemma_report, mixed_signatures, verify_flat_relations, DEFAULT_SIGNATURES,
};
use ambient_dirac::expr::normal_form;
use ambient_dirac::solvers::suites::{constants_report, even_solver_report, odd_solver_report};
use ambient_dirac::weighted::{displayed_exceptional_set, exceptional_weights, yiso_report};
use ambient_dirac::{Parity, Report, Status};
use ambient_dirac_cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

const SEED: u64 = 7;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn nf(text: &str) -> ambient_dirac::AlgebraElement {
    normal_form(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn all_pass(r: &Report) -> Outcome {
    let bad: Vec<&str> = r
        .cases
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| c.id.as_str())
        .collect();
    if bad.is_empty() {
        Ok(format!("{} cases", r.summary.total))
    } else {
        Err(format!("not passing: {}", bad.join("; ")))
    }
}

fn no_fail(r: &Report) -> Result<(), String> {
    let bad: Vec<&str> = r
        .cases
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| c.id.as_str())
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(format!("failing: {}", bad.join("; ")))
    }
}

fn status_of(r: &Report, id: &str) -> Result<Status, String> {
    r.case(id)
        .map(|c| c.status)
        .ok_or_else(|| format!("missing case {id}"))
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn relations() -> Outcome {
    let mut r = verify_identity_suite(IdentitySuite::Relations, 0, SEED);
    ensure(
        r.summary.total == 12,
        format!("{} algebra relations", r.summary.total),
    )?;
    for sig in DEFAULT_SIGNATURES {
        let flat = verify_flat_relations(sig, 3, 20, SEED);
        for c in &flat.cases {
            let trials: usize = c
                .computed
                .split('/')
                .nth(1)
                .and_then(|t| t.parse().ok())
                .unwrap_or(0);
            ensure(trials >= 20, format!("{}: only {trials} spinors", c.id))?;
        }
        r.absorb(flat);
    }
    all_pass(&r)
}

fn shifts() -> Outcome {
    all_pass(&verify_identity_suite(IdentitySuite::Prop2, 8, SEED))
}

fn commutators() -> Outcome {
    let r = verify_identity_suite(IdentitySuite::Prop3, 6, SEED);
    no_fail(&r)?;
    let mut expected_flags = BTreeSet::new();
    for p in 1..=6i64 {
        let (e, o) = (2 * p, 2 * p + 1);
        expected_flags.insert(format!("[x^{e},y] p={p}"));
        expected_flags.insert(format!("[x^{o},y^2] p={p}"));
        ensure(
            nf(&format!("[x^{e},y]")) == nf(&format!("-{}*x^{}", 2 * p, e - 1)),
            format!("[x^{e},y] != -2p x^(2p-1)"),
        )?;
        ensure(
            nf(&format!("[x^{o},y^2]")) == nf(&format!("-2*x^{e}*y - {}*x^{}*(h + {p})", 4 * p, e - 1)),
            format!("[x^{o},y^2] != -2x^(2p)y - 4p x^(2p-1)(h+p)"),
        )?;
    }
    let flagged: BTreeSet<String> = r
        .cases
        .iter()
        .filter(|c| c.status == Status::Flagged)
        .map(|c| c.id.clone())
        .collect();
    ensure(flagged == expected_flags, format!("flagged set {flagged:?}"))?;
    ensure(
        nf("[x^2,y]") == nf("-2*x") && nf("[Q,y]") == nf("-2*x"),
        "[x^2,y] at p=1",
    )?;
    Ok(format!(
        "{} pass, {} flagged as expected",
        r.summary.pass, r.summary.flagged
    ))
}

fn products() -> Outcome {
    let r = verify_identity_suite(IdentitySuite::Prop4, 5, SEED);
    no_fail(&r)?;
    for p in 1..=5 {
        let id = format!("y^{0}x^{0} p={p}", 2 * p);
        ensure(status_of(&r, &id)? == Status::Pass, format!("{id} not verbatim"))?;
        ensure(
            r.case(&format!("y^{0}x^{0} mod x^2 p={p}", 2 * p + 1)).is_some(),
            "odd case missing",
        )?;
    }
    let z2 = r.case("y^2x^2 p=1").map(|c| c.note.clone()).unwrap_or_default();
    ensure(z2.contains("Z_2 = y^2"), format!("p=1 extraction: {z2}"))?;
    let odd = nf("y^3*x^3").reduce_mod_x_power(2);
    ensure(
        odd == nf("8*h^2 + 8*h - 4*x*y*h"),
        format!("y^3x^3 mod x^2 = {odd}"),
    )?;
    ensure(odd == nf("4*h*y*x + 8*h").reduce_mod_x_power(2), "4h yx + 8h")?;
    ensure(
        status_of(&r, "y^3x^3 mod x^2 p=1")? == Status::Flagged,
        "odd display not flagged",
    )?;
    Ok(format!(
        "{} even verbatim, odd published with {} flags",
        r.summary.pass, r.summary.flagged
    ))
}

fn kernel_lemma() -> Outcome {
    let sigs = mixed_signatures(8);
    let r = kernel_lemma_report(&sigs, 5, SEED);
    ensure(
        r.summary.total == sigs.len() * 6,
        format!("{} cases", r.summary.total),
    )?;
    all_pass(&r).map(|s| format!("{s} over {} signatures", sigs.len()))
}

fn y_isomorphism() -> Outcome {
    let r = yiso_report(4, 4, SEED);
    no_fail(&r)?;
    let mut mismatches = 0;
    for p in 1..=4 {
        for q in p + 1..=p + 4 {
            let id = format!("exceptional weights s({p},{q})");
            let want = if exceptional_weights(p, q) == displayed_exceptional_set(p, q) {
                Status::Pass
            } else {
                mismatches += 1;
                Status::Flagged
            };
            ensure(status_of(&r, &id)? == want, format!("{id} has the wrong status"))?;
        }
    }
    for p in 1..=4 {
        ensure(
            status_of(&r, &format!("x^-1 via y on s({p},{})", p + 1))? == Status::Pass,
            "x^-1 formula",
        )?;
        if p % 2 == 0 {
            let id = format!("x^-1 = -(1/p) y display on s({p},{})", p + 1);
            ensure(
                status_of(&r, &id)? == Status::Flagged,
                format!("{id} not flagged"),
            )?;
        }
    }
    Ok(format!(
        "{} cases, {mismatches} exceptional-set mismatches flagged",
        r.summary.total
    ))
}

fn solver(parity: Parity) -> Outcome {
    let r = match parity {
        Parity::Even => even_solver_report(5, 8, 10, SEED),
        Parity::Odd => odd_solver_report(5, 8, 10, SEED),
    };
    let independence = r.cases.iter().filter(|c| c.id.contains(" under ")).count();
    ensure(independence >= 15, format!("{independence} independence cases"))?;
    for c in r.cases.iter().filter(|c| c.id.contains(" under ")) {
        ensure(c.computed == "10/10", format!("{}: {}", c.id, c.computed))?;
    }
    all_pass(&r)
}

fn proportionality() -> Outcome {
    let even = constants_report(Parity::Even, 5);
    let odd = constants_report(Parity::Odd, 5);
    all_pass(&even)?;
    all_pass(&odd)?;
    let anchors = [(&even, "p=1", "1"), (&even, "p=2", "-4"), (&odd, "p=1", "8")];
    for (r, id, want) in anchors {
        let got = r.case(id).map(|c| c.computed.as_str()).unwrap_or("");
        ensure(got == want, format!("{} {id}: {got}", r.suite))?;
    }
    for c in &odd.cases {
        ensure(
            c.computed != "0" && !c.computed.contains('n'),
            format!("odd {}: {}", c.id, c.computed),
        )?;
    }
    let table = |r: &Report| {
        r.cases
            .iter()
            .map(|c| c.computed.clone())
            .collect::<Vec<_>>()
            .join(", ")
    };
    Ok(format!("even [{}], odd [{}]", table(&even), table(&odd)))
}

fn oracle() -> Outcome {
    let mut r = Report::new("oracle", Some(SEED));
    for sig in DEFAULT_SIGNATURES {
        r.absorb(cross_module_oracle(sig, 100, 4, SEED));
    }
    let words: usize = r
        .cases
        .iter()
        .filter_map(|c| c.computed.split('/').nth(1).and_then(|t| t.parse::<usize>().ok()))
        .sum();
    ensure(words >= 100 * DEFAULT_SIGNATURES.len(), format!("{words} words"))?;
    all_pass(&r).map(|s| format!("{s}, {words} words"))
}

fn invoke(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ambient-dirac").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned())
}

fn cli() -> Outcome {
    let (code, out) = invoke(&["nf", "[Q,y]"]);
    ensure(
        code == EXIT_OK && out == "-2*x\n",
        format!("nf printed {out:?} with exit {code}"),
    )?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut docs = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.path().join(name);
        let path = path.to_str().unwrap();
        let (code, _) = invoke(&[
            "verify", "--suite", "yiso", "--pmax", "2", "--seed", "3", "--json", path,
        ]);
        ensure(code == EXIT_OK, format!("yiso exit {code}"))?;
        docs.push(std::fs::read(path).map_err(|e| e.to_string())?);
    }
    ensure(docs[0] == docs[1], "JSON differs between identical runs")?;

    let flagged = dir.path().join("flagged.json");
    let (code, _) = invoke(&[
        "verify",
        "--suite",
        "prop3",
        "--pmax",
        "1",
        "--json",
        flagged.to_str().unwrap(),
    ]);
    let report: Report = serde_json::from_slice(&std::fs::read(&flagged).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(code == EXIT_OK && report.summary.flagged > 0, "flagged-only run")?;
    ensure(
        invoke(&["verify", "--suite", "jacobi", "--inject-fail"]).0 == EXIT_FAIL,
        "injected failure",
    )?;
    ensure(invoke(&["nf", "x^-1"]).0 == EXIT_USAGE, "syntax error exit code")?;
    Ok("nf, JSON determinism, exit codes 0/1/2".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("relations in the algebra and the flat model", relations),
        ("shift identities", shifts),
        ("commutator identities", commutators),
        ("product identities", products),
        ("kernel/image lemma", kernel_lemma),
        ("y-isomorphism and exceptional weights", y_isomorphism),
        ("even solver", || solver(Parity::Even)),
        ("odd solver", || solver(Parity::Odd)),
        ("proportionality constants", proportionality),
        ("cross-module oracle", oracle),
        ("command line", cli),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}  ({detail}; {ms} ms)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}  ({detail}; {ms} ms)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
