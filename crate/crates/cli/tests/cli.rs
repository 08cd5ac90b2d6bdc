use std::process::Command;

use serde_json::Value;

use twverma::exact::{ParamPoly, Rational};
use twverma::fourier::hat_pi_table;
use twverma::liealg::{LieBasis, Weight, WeylGroupElem};
use twverma::realize::{pi_table, signature_of};
use twverma::suite::{self, SuiteConfig};
use twverma::verma::{self, catalog::HasseEdge, ModuleSpec};
use twverma::weyl::{parse_element, parse_vector, WeylElement};
use twverma::CheckRecord;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twverma")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out, err) = run(&a);
    let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    assert_eq!(v["command"], args[0]);
    assert!(v["version"].is_string() && v["inputs"].is_object());
    (code, v)
}

fn records(v: &Value) -> &Vec<Value> {
    v["records"].as_array().unwrap()
}

fn symbolic() -> Weight<ParamPoly> {
    Weight::symbolic().unwrap()
}

#[test]
fn symbolic_tables_round_trip() {
    for w in WeylGroupElem::ALL {
        for fourier in [false, true] {
            let mut args = vec!["tables", "--w", w.name(), "--symbolic"];
            if fourier {
                args.push("--fourier");
            }
            let (code, v) = run_json(&args);
            assert_eq!(code, 0);
            let t = if fourier {
                hat_pi_table(w, &symbolic()).unwrap()
            } else {
                pi_table(w, &symbolic()).unwrap()
            };
            let rows = records(&v);
            assert_eq!(rows.len(), 8);
            for r in rows {
                let b = LieBasis::from_name(r["element"].as_str().unwrap()).unwrap();
                let parsed: WeylElement<ParamPoly> = parse_element(r["operator"].as_str().unwrap()).unwrap();
                assert_eq!(&parsed, t.op(b), "w={w} fourier={fourier} {b}");
            }
        }
    }
}

#[test]
fn rational_table_round_trip() {
    let (code, v) = run_json(&["tables", "--w", "s2s1", "--lambda", "1/2,-3"]);
    assert_eq!(code, 0);
    let lam = Weight::new(Rational::new(1.into(), 2.into()), Rational::from_integer((-3).into()));
    let t = pi_table(WeylGroupElem::S2S1, &lam).unwrap();
    for r in records(&v) {
        let b = LieBasis::from_name(r["element"].as_str().unwrap()).unwrap();
        let parsed: WeylElement<Rational> = parse_element(r["operator"].as_str().unwrap()).unwrap();
        assert_eq!(&parsed, t.op(b));
    }
}

#[test]
fn mixed_lambda_is_parametric() {
    let (code, out, _) = run(&["tables", "--w", "s1", "--lambda", "l1,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("pi(h2) = x*dx + y*dy + 2*z*dz + 5"), "{out}");
}

#[test]
fn s1_table_text() {
    let (code, out, _) = run(&["tables", "--w", "s1", "--symbolic"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.trim_start().starts_with("pi(")).count(), 8);
    assert!(out.contains("pi(f2) = dz"));
    assert!(out.contains("pi(h1) = -2*x*dx + y*dy - z*dz + l1"));
}

#[test]
fn bad_names_are_errors() {
    assert_eq!(run(&["tables", "--w", "s3"]).0, 2);
    assert_eq!(run(&["act", "--op", "k1"]).0, 2);
    assert_eq!(run(&["tables", "--lambda", "1"]).0, 2);
}

#[test]
fn singular_examples() {
    let (code, out, _) = run(&["singular", "--w", "e", "--lambda", "1,1", "--mu", "-3,3"]);
    assert_eq!((code, out.trim()), (0, "dx^2"));
    let (code, out, _) = run(&["singular", "--w", "e", "--lambda", "0,0", "--mu", "-5,-5"]);
    assert_eq!((code, out.trim()), (0, "(empty)"));
}

#[test]
fn solver_rejects_symbolic_weights() {
    let (code, _, err) = run(&["singular", "--w", "e", "--lambda", "l1,l2", "--mu", "0,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("rational"));
    assert_eq!(run(&["singular", "--w", "e", "--lambda", "1,1", "--mu", "l1,0"]).0, 2);
}

#[test]
fn singular_kernel_round_trip() {
    let (code, v) = run_json(&["singular", "--w", "e", "--lambda", "2,1", "--mu", "-4,4"]);
    assert_eq!(code, 0);
    let spec = ModuleSpec::new(WeylGroupElem::E, Weight::<Rational>::from_ints(2, 1)).unwrap();
    let kernel = verma::singular_vectors(&spec, &Weight::from_ints(-4, 4), &LieBasis::RAISING, 8);
    assert_eq!(kernel.len(), 1);
    let parsed: Vec<_> = records(&v)
        .iter()
        .map(|r| parse_vector::<Rational>(r["vector"].as_str().unwrap(), signature_of(WeylGroupElem::E)).unwrap())
        .collect();
    assert_eq!(parsed, kernel);
}

#[test]
fn branch_kernel_is_killed_by_e1() {
    let (code, v) = run_json(&["singular", "--w", "s1", "--lambda", "1,1", "--branch", "--degree-bound", "5"]);
    assert_eq!(code, 0);
    let spec = ModuleSpec::new(WeylGroupElem::S1, Weight::<Rational>::from_ints(1, 1)).unwrap();
    let vs = records(&v);
    // dimensions 1, 1, 2, 2, 3, 3 in degrees 0..=5
    assert_eq!(vs.len(), 12);
    for r in vs {
        let x = parse_vector::<Rational>(r["vector"].as_str().unwrap(), spec.signature).unwrap();
        assert!(spec.act(LieBasis::E1, &x).is_zero());
    }
}

#[test]
fn branch_command_passes() {
    let (code, v) = run_json(&["branch", "--lambda", "0,2", "--degree-bound", "6"]);
    assert_eq!(code, 0);
    for r in records(&v) {
        let rec: CheckRecord = serde_json::from_value(r.clone()).unwrap();
        assert!(rec.pass);
    }
}

#[test]
fn act_applies_rightmost_first() {
    let (code, out, _) = run(&["act", "--w", "s1", "--op", "e1", "--vector", "x^2"]);
    assert_eq!((code, out.trim()), (0, "2*x"));
    // [e1, f1] = h1 acts on 1 by l1
    let (_, ef, _) = run(&["act", "--w", "e", "--lambda", "3/2,0", "--op", "e1*f1"]);
    let (_, fe, _) = run(&["act", "--w", "e", "--lambda", "3/2,0", "--op", "f1 e1"]);
    assert_eq!((ef.trim(), fe.trim()), ("3/2", "0"));
}

#[test]
fn character_matches_core() {
    let (code, v) = run_json(&["character", "--w", "s1s2", "--lambda", "1,2", "--depth", "4"]);
    assert_eq!(code, 0);
    let spec = ModuleSpec::new(WeylGroupElem::S1S2, Weight::<Rational>::from_ints(1, 2)).unwrap();
    let ch = verma::character_truncated(&spec, 4);
    let rows = records(&v);
    assert_eq!(rows.len(), ch.len());
    for r in rows {
        let d: [u32; 2] = serde_json::from_value(r["depth"].clone()).unwrap();
        // Kostant partition count: min(m1, m2) + 1
        let expected = d[0].min(d[1]) as u64 + 1;
        assert_eq!(r["multiplicity"].as_u64().unwrap(), expected);
        assert_eq!(ch[&d] as u64, expected);
    }
}

#[test]
fn hasse_s1_dot() {
    let (code, out, _) = run(&["hasse", "--w", "s1", "--lambda", "0,0", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), 6);
    assert_eq!(out.lines().filter(|l| l.contains("->")).count(), 8);
    assert!(!out.contains("color=red"));
}

#[test]
fn hasse_json_round_trip() {
    for w in ["e", "s1"] {
        let (code, v) = run_json(&["hasse", "--w", w, "--lambda", "1,1"]);
        assert_eq!(code, 0);
        let edges: Vec<HasseEdge> = serde_json::from_value(v["records"].clone()).unwrap();
        assert_eq!(edges.len(), 8);
        assert!(edges.iter().all(|e| e.pass));
        assert_eq!(v["inputs"]["nodes"].as_array().unwrap().len(), 6);
    }
    assert_eq!(run(&["hasse", "--w", "s2", "--lambda", "0,0"]).0, 2);
}

#[test]
fn report_round_trip() {
    let (code, v) = run_json(&["verify-all", "--criterion", "2"]);
    assert_eq!(code, 0);
    let direct = suite::criterion(2, &SuiteConfig::default()).unwrap().report;
    let parsed: Vec<CheckRecord> = records(&v)
        .iter()
        .map(|r| {
            assert_eq!(r["criterion"], 2);
            serde_json::from_value(r.clone()).unwrap()
        })
        .collect();
    assert_eq!(parsed, direct.records);
}

#[test]
fn mutation_exits_one() {
    assert_eq!(run(&["verify-all", "--criterion", "1"]).0, 0);
    let (code, v) = run_json(&["verify-all", "--criterion", "1", "--mutate", "h1"]);
    assert_eq!(code, 1);
    let failing: Vec<&Value> = records(&v).iter().filter(|r| r["pass"] == false).collect();
    assert!(!failing.is_empty());
    for r in failing {
        let inputs = r["inputs"].as_str().unwrap();
        assert!(inputs.contains("(f1, e1)") || inputs.contains("(f12, e12)"), "{inputs}");
    }
}

#[test]
fn exit_code_tracks_failing_records() {
    for args in [
        vec!["verify-all", "--criterion", "3", "--lambda", "1,1"],
        vec!["verify-all", "--criterion", "3", "--lambda", "2,1"],
        vec!["verify-all"],
    ] {
        let (code, v) = run_json(&args);
        let any_fail = records(&v).iter().any(|r| r["pass"] == false);
        assert_eq!(code, i32::from(any_fail), "{args:?}");
    }
}
