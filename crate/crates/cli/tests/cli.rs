mod common;

use std::process::{Command as Proc, Output};

use foliation_cli::corpus::Corpus;
use foliation_cli::parse::{parse_field, parse_polynomial, print_field, print_polynomial};
use foliation_cli::run::{run, run_corpus, Command, ExitCode, JobSpec};
use foliation_core::{free_basis, is_weakly_tame, quasi_weights, FreeBasis};
use serde_json::Value;

fn foliation(args: &[&str]) -> Output {
    Proc::new(env!("CARGO_BIN_EXE_foliation")).args(args).output().expect("binary runs")
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--machine");
    let out = foliation(&all);
    let doc = serde_json::from_slice(&out.stdout).expect("machine output is JSON");
    (out.status.code().unwrap(), doc)
}

#[test]
fn free_basis_of_cusp() {
    let (code, doc) = machine(&["free-basis", "--vars", "x,y", "x^2+y^3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["kind"], "Theorem1");
    assert_eq!(doc["generators"].as_array().unwrap().len(), 2);
    assert_eq!(doc["saito_det"], "-y^3 - x^2");
}

#[test]
fn rotation_preserves_circle() {
    let out = foliation(&["cofactor", "--vars", "x,y", "--field", "y; -x", "x^2+y^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "status: ok\ncofactor: 0\n");
}

#[test]
fn non_member_has_no_lift() {
    let (code, doc) = machine(&["jacobian-lift", "x^5 + y^5 + x^2*y^2"]);
    assert_eq!(code, 1);
    assert_eq!(doc["status"], "NotMember");
}

#[test]
fn negatives_exit_one() {
    let cases: &[&[&str]] = &[
        &["cofactor", "--field", "1; 0", "x^2+y^2"],
        &["weights", "x^2 + y^3 + y^2"],
        &["free-basis", "x^5 + y^5 + x^2*y^2"],
        &["decompose", "--field", "1; 0", "x^2+y^3"],
    ];
    for args in cases {
        let (code, doc) = machine(args);
        assert_eq!(code, 1, "{args:?}: {doc}");
        assert_ne!(doc["status"], "ok");
    }
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["weights", "x^-1"],
        &["weights", "x + (y"],
        &["weights", "x + w"],
        &["frobnicate", "x"],
        &["cofactor", "x^2"],
        &["cofactor", "--field", "1; 2; 3", "x^2+y^2"],
        &["oracle", "x^2+y^2"],
        &["weights", "3"],
        &["nd-check", "x+y^2"],
        &["weights"],
    ];
    for args in cases {
        let out = foliation(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn parse_errors_report_offsets() {
    let (code, doc) = machine(&["weights", "x + y^"]);
    assert_eq!(code, 2);
    assert_eq!(doc["offset"], 6);
}

#[test]
fn three_variable_check() {
    let (code, doc) = machine(&[
        "nd-check",
        "--vars",
        "x,y,z",
        "--field",
        "-2*y; 1; 0",
        "--field",
        "-3*z^2; 0; 1",
        "x + y^2 + z^3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["minors"], serde_json::json!(["1", "-2*y", "3*z^2"]));
    assert_eq!(doc["conditions"]["condition1"], true);
    assert_eq!(doc["x_star"], "z^3 + y^2 + x; 0; 0");

    let (code, doc) = machine(&[
        "nd-decompose",
        "--vars",
        "x,y,z",
        "--field",
        "-2*y; 1; 0",
        "--field",
        "-3*z^2; 0; 1",
        "--field",
        "-2*y*z - 3*z^2; z; 1",
        "x + y^2 + z^3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["decomposition"], serde_json::json!(["z", "1", "0"]));
}

#[test]
fn oracle_reports_dimension() {
    let (code, doc) = machine(&["oracle", "--degree", "1", "x^2+y^2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["dimension"], 2);
    assert_eq!(doc["dimension_recheck"], 2);
}

#[test]
fn machine_output_is_byte_stable() {
    for args in [
        vec!["free-basis", "x^2*y", "--machine"],
        vec!["certify", "--degree", "3", "x^2+y^3", "--machine"],
        vec!["weakly-tame", "--corpus", "bundled", "--machine"],
    ] {
        let a = foliation(&args).stdout;
        let b = foliation(&args).stdout;
        assert!(!a.is_empty());
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn printed_polynomials_reparse() {
    let mut r = common::rng(11);
    for e in &Corpus::bundled().entry {
        let f = e.polynomial().unwrap();
        assert_eq!(parse_polynomial(&print_polynomial(&f, &e.vars), &e.vars).unwrap(), f);
        for x in e.family().unwrap() {
            assert_eq!(parse_field(&print_field(&x, &e.vars), &e.vars).unwrap(), x);
        }
        for _ in 0..10 {
            let p = &common::random_poly(&mut r, e.vars.len(), 3) * &common::q(e.vars.len(), 1, 6);
            assert_eq!(parse_polynomial(&print_polynomial(&p, &e.vars), &e.vars).unwrap(), p);
            let x = common::random_field(&mut r, e.vars.len(), 2);
            assert_eq!(parse_field(&print_field(&x, &e.vars), &e.vars).unwrap(), x);
        }
    }
}

#[test]
fn corpus_verdicts_hold() {
    for e in &Corpus::bundled().entry {
        let f = e.polynomial().unwrap();
        if !e.is_planar() {
            assert_eq!(e.free_basis, "NDim");
            continue;
        }
        let (tame, milnor) = is_weakly_tame(&f).unwrap();
        assert_eq!(Some(tame), e.weakly_tame, "{}", e.name);
        assert_eq!(milnor.value(), e.milnor, "{}", e.name);
        assert_eq!(quasi_weights(&f).unwrap().map(|w| [w.l, w.m, w.d]), e.weights, "{}", e.name);
        let verdict = match free_basis(&f).unwrap() {
            FreeBasis::Basis(b) => b.kind.name().to_string(),
            FreeBasis::Failure(fail) => format!("{:?}", fail.kind),
        };
        assert_eq!(verdict, e.free_basis, "{}", e.name);
    }
}

#[test]
fn batch_mode_takes_worst_exit() {
    let corpus = Corpus::bundled();
    let template = JobSpec::new(Command::FreeBasis, "", &[]);
    let (code, text) = run_corpus(Command::FreeBasis, &corpus, &template);
    assert_eq!(code, ExitCode::Negative);
    assert!(text.contains("== non-member"));
    let (code, _) = run_corpus(Command::TrivialGens, &corpus, &template);
    assert_eq!(code, ExitCode::Success);
}

#[test]
fn library_run_matches_binary() {
    let job = JobSpec::new(Command::Weights, "x^2 + y^3", &["x", "y"]);
    let report = run(&job);
    assert_eq!(report.exit, ExitCode::Success);
    let out = foliation(&["weights", "x^2 + y^3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), report.to_text());
}

#[test]
fn negative_statuses_never_exit_zero_or_two() {
    let corpus = Corpus::bundled();
    for command in Command::ALL {
        for e in corpus.entry.iter().filter(|e| command.applies_to(e.vars.len())) {
            let mut job = JobSpec::new(command, &e.f, &[]);
            job.vars = e.vars.clone();
            job.fields = e.fields.clone();
            job.degree = Some(2);
            let r = run(&job);
            match r.status.as_str() {
                "ok" => assert_eq!(r.exit, ExitCode::Success),
                "error" => assert_eq!(r.exit, ExitCode::Usage),
                _ => assert_eq!(r.exit, ExitCode::Negative, "{command} {}", e.name),
            }
        }
    }
}
