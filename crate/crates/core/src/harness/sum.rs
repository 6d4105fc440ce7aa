//! Adaptive truncation of single sums and of double sums taken along
//! anti-diagonals n + p = d.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::ApComplex;

/// Diagonals inspected before the divergence test is armed.
pub const DIVERGENCE_WARMUP: usize = 20;
/// Growth factor over the warm-up maximum that counts as divergence.
pub const DIVERGENCE_FACTOR_LOG10: f64 = 6.0;
/// Consecutive small fronts needed to stop.
pub const QUIET_FRONTS: usize = 3;

#[derive(Debug, Clone, Copy)]
pub struct SumConfig {
    /// Relative tolerance for the stopping rule.
    pub tol: f64,
    pub max_diagonals: usize,
    /// Working precision of the terms, in digits.
    pub wp: u32,
    /// Fronts are compared with tol·max(10^floor, |partial|).
    pub scale_floor_log10: f64,
}

impl SumConfig {
    /// Working precision prec + 15 + max_diagonals/2; the threshold is
    /// relative down to |partial| = 10^{−prec/2}.
    pub fn for_prec(prec: u32, tol: f64, max_diagonals: usize) -> Self {
        SumConfig {
            tol,
            max_diagonals,
            wp: prec + 15 + (max_diagonals / 2) as u32,
            scale_floor_log10: -f64::from(prec) / 2.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SumStatus {
    Converged,
    /// A front exceeded 10^6 times the largest warm-up front.
    Diverged { diagonal: usize },
    /// A term hit a pole (zero base, Pochhammer pole).
    Singular { n: usize, p: usize, reason: String },
    CapReached,
}

#[derive(Debug, Clone)]
pub struct SumResult {
    /// Partial sum through the last diagonal taken.
    pub value: ApComplex,
    pub diagonals_used: usize,
    /// log10 of the largest front magnitude.
    pub max_term_log10: f64,
    /// log10 of the largest of the last three fronts.
    pub tail_log10: f64,
    pub converged: bool,
    pub status: SumStatus,
    /// Smallest nonzero front seen (after d = 0) and the partial sum there.
    pub min_front: Option<(usize, f64)>,
    pub best_partial: Option<ApComplex>,
}

fn mag(v: &ApComplex) -> f64 {
    if v.is_zero() {
        f64::NEG_INFINITY
    } else {
        v.log10_abs()
    }
}

/// Sums fronts F(0), F(1), … produced by `front`.
fn sum_fronts<F>(mut front: F, cfg: &SumConfig) -> Result<SumResult>
where
    F: FnMut(usize) -> Result<std::result::Result<ApComplex, (usize, usize, String)>>,
{
    let tol_log = cfg.tol.log10();
    let mut partial = ApComplex::zero(cfg.wp);
    let mut warm_max = f64::NEG_INFINITY;
    let mut max_term = f64::NEG_INFINITY;
    let mut recent: Vec<f64> = Vec::new();
    let mut quiet = 0usize;
    let mut min_front: Option<(usize, f64)> = None;
    let mut best_partial = None;

    let finish = |value: ApComplex,
                  used: usize,
                  max_term: f64,
                  recent: &[f64],
                  status: SumStatus,
                  min_front,
                  best_partial| {
        let tail = recent.iter().rev().take(QUIET_FRONTS).copied().fold(f64::NEG_INFINITY, f64::max);
        SumResult {
            value,
            diagonals_used: used,
            max_term_log10: max_term,
            tail_log10: tail,
            converged: status == SumStatus::Converged,
            status,
            min_front,
            best_partial,
        }
    };

    for d in 0..cfg.max_diagonals {
        let f = match front(d)? {
            Ok(v) => v,
            Err((n, p, reason)) => {
                let st = SumStatus::Singular { n, p, reason };
                return Ok(finish(partial, d, max_term, &recent, st, min_front, best_partial));
            }
        };
        partial += &f;
        let m = mag(&f);
        recent.push(m);
        max_term = max_term.max(m);
        if d <= DIVERGENCE_WARMUP {
            warm_max = warm_max.max(m);
        } else if m > warm_max + DIVERGENCE_FACTOR_LOG10 {
            let st = SumStatus::Diverged { diagonal: d };
            return Ok(finish(partial, d + 1, max_term, &recent, st, min_front, best_partial));
        }
        if d > 0 && m.is_finite() && min_front.is_none_or(|(_, best)| m < best) {
            min_front = Some((d, m));
            best_partial = Some(partial.clone());
        }
        let scale = mag(&partial).max(cfg.scale_floor_log10);
        if m < tol_log + scale {
            quiet += 1;
            if quiet >= QUIET_FRONTS {
                return Ok(finish(partial, d + 1, max_term, &recent, SumStatus::Converged, min_front, best_partial));
            }
        } else {
            quiet = 0;
        }
    }
    Ok(finish(partial, cfg.max_diagonals, max_term, &recent, SumStatus::CapReached, min_front, best_partial))
}

/// Maps pole errors from a term to a singular-term finding.
fn classify(n: usize, p: usize, r: Result<ApComplex>) -> Result<std::result::Result<ApComplex, (usize, usize, String)>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::Pole(msg)) => Ok(Err((n, p, msg))),
        Err(e) => Err(e),
    }
}

/// Σ_{n,p ≥ 0} f(n, p) by anti-diagonals.
pub fn sum_double<F>(mut f: F, cfg: &SumConfig) -> Result<SumResult>
where
    F: FnMut(usize, usize) -> Result<ApComplex>,
{
    sum_fronts(
        |d| {
            let mut acc = ApComplex::zero(cfg.wp);
            for n in 0..=d {
                let p = d - n;
                match classify(n, p, f(n, p))? {
                    Ok(t) => acc += &t,
                    Err(e) => return Ok(Err(e)),
                }
            }
            Ok(Ok(acc))
        },
        cfg,
    )
}

/// Σ_{n ≥ 0} f(n) with the same stopping and divergence rules.
pub fn sum_single<F>(mut f: F, cfg: &SumConfig) -> Result<SumResult>
where
    F: FnMut(usize) -> Result<ApComplex>,
{
    sum_fronts(|n| classify(n, 0, f(n)), cfg)
}
