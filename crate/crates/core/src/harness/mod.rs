//! Identity registry, summation engine and the verification driver.

pub mod cases;
pub mod constants;
pub mod params;
pub mod report;
pub mod sum;
mod summands;
pub mod tables;

pub use cases::{cases, find_case, CaseSpec, RhsValue};
pub use constants::paper_constants_check;
pub use params::Params;
pub use report::{Diagnostics, VerificationReport};
pub use sum::{sum_double, sum_single, SumConfig, SumResult, SumStatus};

use crate::error::{Error, Result};
use crate::specfun::ApComplex;

/// Extra digits for the closed-form side.
const RHS_EXTRA_DIGITS: u32 = 10;
/// The sum stops on fronts below tol·SUM_TOL_FACTOR.
pub const SUM_TOL_FACTOR: f64 = 1e-3;

#[derive(Debug, Clone)]
pub struct EvalConfig {
    pub prec: u32,
    /// Overrides the case's default tolerance.
    pub tol: Option<f64>,
    pub max_diagonals: usize,
    pub override_domain: bool,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { prec: 50, tol: None, max_diagonals: 400, override_domain: false }
    }
}

/// Default parameters overlaid with `overrides`.  Fixed cases reject any
/// override.
pub fn resolve_params(case: &CaseSpec, overrides: &Params) -> Result<Params> {
    if overrides.keys().next().is_none() {
        return Ok((case.defaults)());
    }
    if case.fixed {
        return Err(Error::Domain(format!("{} has fixed parameters; --set is not accepted", case.id)));
    }
    for k in overrides.keys() {
        if !case.fields.contains(&k) {
            return Err(Error::Domain(format!("{} does not read parameter `{k}`", case.id)));
        }
    }
    Ok((case.defaults)().merged(overrides))
}

/// Significant digits of `value` backed by the tail estimate.
fn justified_digits(value: &ApComplex, tail_log10: f64, prec: u32) -> u32 {
    if value.is_zero() || !tail_log10.is_finite() {
        return prec;
    }
    let d = (value.log10_abs() - tail_log10).floor() - 1.0;
    d.clamp(1.0, f64::from(prec)) as u32
}

fn errors(lhs: &ApComplex, rhs: &ApComplex, prec: u32) -> (f64, f64) {
    let diff = lhs - rhs;
    let abs = if diff.is_zero() { 0.0 } else { 10f64.powf(diff.log10_abs()) };
    let rel = if rhs.is_zero() || rhs.log10_abs() < -f64::from(prec) / 2.0 {
        abs
    } else if diff.is_zero() {
        0.0
    } else {
        10f64.powf(diff.log10_abs() - rhs.log10_abs())
    };
    (abs, rel)
}

/// Evaluates one case at `params` (already resolved).
pub fn evaluate_case(case: &CaseSpec, params: &Params, cfg: &EvalConfig) -> Result<VerificationReport> {
    let tol = cfg.tol.unwrap_or(case.default_tol);
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let mut notes = Vec::new();
    match (case.check)(params) {
        Ok(()) => {}
        Err(e) if cfg.override_domain => notes.push(format!("outside the declared domain ({e}); evaluated on override")),
        Err(e) => return Err(e),
    }
    let sum_cfg = SumConfig::for_prec(cfg.prec, tol * SUM_TOL_FACTOR, cfg.max_diagonals);
    let sum = (case.lhs)(params, &sum_cfg)?;
    let rhs = (case.rhs)(params, cfg.prec + RHS_EXTRA_DIGITS)?;

    let mut diagnostics = Diagnostics {
        max_term_log10: sum.max_term_log10.is_finite().then_some(sum.max_term_log10),
        tail_log10: sum.tail_log10.is_finite().then_some(sum.tail_log10),
        quad_error: rhs.quad_error,
        best_truncation: None,
        subchecks: rhs.subchecks.iter().map(|(n, p)| report::Subcheck { name: n.clone(), pass: *p }).collect(),
        notes,
    };
    if let SumStatus::Singular { reason, .. } = &sum.status {
        diagnostics.notes.push(reason.clone());
    }

    let rhs_str = Some(rhs.value.to_decimal(cfg.prec));
    let subchecks_ok = rhs.subchecks.iter().all(|(_, ok)| *ok);
    let (lhs_str, abs_err, rel_err, pass) = if sum.converged {
        let (abs, rel) = errors(&sum.value, &rhs.value, cfg.prec);
        let digits = justified_digits(&sum.value, sum.tail_log10, cfg.prec);
        (Some(sum.value.to_decimal(digits)), Some(abs), Some(rel), rel <= tol && subchecks_ok)
    } else {
        if let (Some((d, _)), Some(bp)) = (sum.min_front, &sum.best_partial) {
            let (_, rel) = errors(bp, &rhs.value, cfg.prec);
            diagnostics.best_truncation = Some(report::BestTruncation { diagonal: d, rel_err: rel });
        }
        (None, None, None, false)
    };

    Ok(VerificationReport {
        id: case.id.to_string(),
        params: params.to_strings(),
        prec: cfg.prec,
        tol,
        lhs: lhs_str,
        rhs: rhs_str,
        abs_err,
        rel_err,
        diagonals_used: sum.diagonals_used,
        converged: sum.converged,
        pass,
        status: sum.status,
        diagnostics,
    })
}

/// Looks up `id`, resolves overrides and evaluates.
pub fn evaluate(id: &str, overrides: &Params, cfg: &EvalConfig) -> Result<VerificationReport> {
    let case = find_case(id)?;
    let params = resolve_params(case, overrides)?;
    evaluate_case(case, &params, cfg)
}
