use std::process::{Command, Output};

fn appell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_appell")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_shows_every_case() {
    let o = appell(&["list"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let ids: Vec<&str> = out.lines().filter(|l| !l.starts_with(' ')).filter_map(|l| l.split_whitespace().next()).collect();
    assert_eq!(ids.len(), 19);
    for id in ["T1", "T2", "T3", "E1", "E8", "E9", "D1", "D5", "X1", "X2"] {
        assert!(ids.contains(&id), "{id} missing");
    }
    assert!(out.contains("a=35 alpha=1 beta=1/4 delta=1/8 gamma=1"));
    assert!(out.contains("a=22 alpha=1 beta=1/4 delta=1/3 gamma=1"));
}

#[test]
fn verify_default_t1_passes() {
    let o = appell(&["verify", "--case", "T1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("T1 PASS"));
}

#[test]
fn records_carry_the_report_fields() {
    let o = appell(&["verify", "--case", "E5", "--case", "d1", "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let recs: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[1]["id"], "D1");
    for r in &recs {
        for key in ["id", "params", "prec", "lhs", "rhs", "abs_err", "rel_err", "diagonals_used", "converged", "pass"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["prec"], 50);
        assert_eq!(r["pass"], true);
    }
}

#[test]
fn large_delta_is_a_domain_error_then_a_divergent_report() {
    let o = appell(&["verify", "--case", "T1", "--set", "delta=25"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("violated constraint"));

    let o = appell(&["verify", "--case", "T1", "--set", "delta=25", "--max-diagonals", "120", "--override-domain", "--format", "records"]);
    assert_eq!(o.status.code(), Some(1));
    let r: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r["converged"], false);
    assert_eq!(r["pass"], false);
    assert!(r["lhs"].is_null());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(appell(&["verify", "--case", "nope"]).status.code(), Some(2));
    assert_eq!(appell(&["verify", "--case", "T1", "--prec", "10"]).status.code(), Some(2));
    assert_eq!(appell(&["verify", "--case", "T1", "--tol", "1e-45"]).status.code(), Some(2));
    assert_eq!(appell(&["verify", "--case", "E9", "--set", "a=3"]).status.code(), Some(2));
    assert_eq!(appell(&["verify", "--case", "T1", "--set", "a"]).status.code(), Some(2));
}

#[test]
fn gf_check_with_zero_y() {
    let o = appell(&["gf-check", "--order", "2", "--trials", "3", "--zero-y"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("PASS")).all(|l| l.contains(" y=0 ")));
    assert!(out.contains("12 of 12 checks passed"));
}

#[test]
fn gf_check_mutation_is_caught() {
    let o = appell(&["gf-check", "--order", "8", "--trials", "2", "--mutate", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("0 of 8 checks passed"));
    assert!(out.lines().filter(|l| l.starts_with("FAIL")).all(|l| l.ends_with("first mismatch at z^5")));
}

#[test]
fn runs_are_deterministic() {
    let args = ["gf-check", "--order", "10", "--trials", "4", "--seed", "7", "--format", "records"];
    assert_eq!(appell(&args).stdout, appell(&args).stdout);
    let args = ["verify", "--case", "E2", "--case", "T3", "--format", "records"];
    assert_eq!(appell(&args).stdout, appell(&args).stdout);
}
