use appell_core::harness::{
    cases, evaluate, evaluate_case, find_case, EvalConfig, Params, SumConfig, SumStatus, SUM_TOL_FACTOR,
};
use appell_core::specfun::{hurwitz_zeta, ApComplex};
use appell_core::Error;
use proptest::prelude::*;

fn shifts(a: &str, alpha: &str, beta: &str, gamma: &str, delta: &str, k: &str) -> Params {
    Params::of(&[("a", a), ("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta), ("k", k)])
}

fn rel(x: &ApComplex, y: &ApComplex) -> f64 {
    (x - y).abs_f64() / y.abs_f64()
}

#[test]
fn e8_agrees_with_two_t1_evaluations() {
    // E8 at (a, α, β, γ, δ) is T1(a/2, α, β, γ, δ) − T1(3a/2, 3α, β, 3γ, δ) at k = −1.
    let cfg = SumConfig::for_prec(50, 1e-30, 400);
    let e8 = find_case("E8").unwrap();
    let t1 = find_case("T1").unwrap();
    let p = shifts("50", "1", "1/100", "1", "1/100", "-1").without("k");
    let lo = shifts("25", "1", "1/100", "1", "1/100", "-1");
    let hi = shifts("75", "3", "1/100", "3", "1/100", "-1");

    let e8_lhs = (e8.lhs)(&p, &cfg).unwrap();
    let lo_lhs = (t1.lhs)(&lo, &cfg).unwrap();
    let hi_lhs = (t1.lhs)(&hi, &cfg).unwrap();
    assert!(e8_lhs.converged && lo_lhs.converged && hi_lhs.converged);
    let diff = &lo_lhs.value - &hi_lhs.value;
    assert!(rel(&e8_lhs.value, &diff) < 1e-25, "lhs mismatch {:e}", rel(&e8_lhs.value, &diff));

    let e8_rhs = (e8.rhs)(&p, 60).unwrap().value;
    let t1_rhs = &(t1.rhs)(&lo, 60).unwrap().value - &(t1.rhs)(&hi, 60).unwrap().value;
    assert!(rel(&e8_rhs, &t1_rhs) < 1e-45);

    // Both T1 legs checked at the E8 tolerance; a/2 = 25 sits near the T1 floor.
    let leg = EvalConfig { tol: Some(e8.default_tol), ..EvalConfig::default() };
    for r in [
        evaluate("E8", &Params::new(), &EvalConfig::default()).unwrap(),
        evaluate_case(t1, &lo, &leg).unwrap(),
        evaluate_case(t1, &hi, &leg).unwrap(),
    ] {
        assert!(r.pass, "{} failed: {:?}", r.id, r.rel_err);
    }
}

#[test]
fn degenerate_shifts_collapse_to_hurwitz() {
    // α = β = γ = δ = 0: the sum must equal −2^k ζ(1−k, a/2).
    let case = find_case("T1").unwrap();
    for (a, k) in [(30, -1), (32, -2), (34, -3)] {
        let p = shifts(&a.to_string(), "0", "0", "0", "0", &k.to_string());
        let rep = evaluate_case(case, &p, &EvalConfig::default()).unwrap();
        let lhs = (case.lhs)(&p, &SumConfig::for_prec(50, 1e-30 * SUM_TOL_FACTOR, 400)).unwrap();
        assert!(rep.pass && lhs.converged, "a={a} k={k} {:?} {:?}", rep.rel_err, lhs.status);
        let z = hurwitz_zeta(&ApComplex::from_i64(1 - k, 70), &ApComplex::from_i64(a, 70).div_i64(2)).unwrap();
        let want = -&z.scale_real(&ApComplex::from_i64(2, 70).powi(k).unwrap().re().clone());
        assert!(rel(&lhs.value, &want) < 1e-30, "a={a} k={k}");
    }
}

#[test]
fn reports_respect_their_contract() {
    let cfg = EvalConfig::default();
    for case in cases().iter().filter(|c| !["E9", "D5"].contains(&c.id)) {
        let r = evaluate_case(case, &(case.defaults)(), &cfg).unwrap();
        assert!(r.diagonals_used <= cfg.max_diagonals + 1);
        if r.converged {
            let tail = r.diagnostics.tail_log10.unwrap_or(f64::NEG_INFINITY);
            assert!(tail < r.tol.log10(), "{}: tail {tail}", r.id);
            assert_eq!(r.pass, r.rel_err.unwrap() <= r.tol && r.diagnostics.subchecks.iter().all(|s| s.pass));
        } else {
            assert!(r.lhs.is_none() && !r.pass);
        }
    }
}

#[test]
fn out_of_domain_is_rejected_up_front() {
    let p = shifts("30", "1/2", "0", "1", "25", "-1");
    match evaluate("T1", &p, &EvalConfig::default()) {
        Err(Error::Domain(msg)) => assert!(msg.contains("|delta| <= 1/2"), "{msg}"),
        other => panic!("expected a domain error, got {other:?}"),
    }
    assert!(matches!(evaluate("E9", &Params::of(&[("a", "3")]), &EvalConfig::default()), Err(Error::Domain(_))));
    assert!(matches!(evaluate("T1", &Params::of(&[("q", "3")]), &EvalConfig::default()), Err(Error::Domain(_))));
    assert!(matches!(evaluate("nope", &Params::new(), &EvalConfig::default()), Err(Error::UnknownCase(_))));
}

#[test]
fn params_parse_rationals_and_complex_literals() {
    let mut p = Params::new();
    p.apply_assignment("k=1/2+1/3i").unwrap();
    p.set("a", "35/2").unwrap();
    p.set("beta", "0.25").unwrap();
    let s = p.to_strings();
    assert_eq!(s["k"], "1/2+1/3i");
    assert_eq!(s["a"], "35/2");
    assert_eq!(s["beta"], "1/4");
    assert!(p.apply_assignment("nonsense").is_err());
    assert!(p.set("a", "1/0").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn large_delta_is_flagged_non_convergent(delta in 20i64..40, k in prop::sample::select(vec!["-1", "-2", "1/2+1/3i"])) {
        // a off the lattice a − pδ = 0 so the only way out is divergence.
        let p = shifts("211/7", "1/2", "0", "1", &delta.to_string(), k);
        let cfg = EvalConfig { override_domain: true, max_diagonals: 120, ..EvalConfig::default() };
        let r = evaluate("T1", &p, &cfg).unwrap();
        prop_assert!(!r.converged && !r.pass && r.lhs.is_none());
        let stopped = matches!(r.status, SumStatus::Diverged { .. } | SumStatus::CapReached);
        prop_assert!(stopped, "status {:?}", r.status);
        prop_assert!(r.diagnostics.notes.iter().any(|n| n.contains("outside the declared domain")));
    }
}
