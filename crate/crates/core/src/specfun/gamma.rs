//! Gamma and digamma by argument raising plus the Stirling-type asymptotic
//! series, with reflection for Re(z) < 1/2.

use rug::Rational;

use super::apcomplex::{bits_for, pi, ApComplex};
use super::{EvenBernoulli, GUARD_DIGITS};
use crate::error::{Error, Result};

pub(crate) fn nonpositive_integer(z: &ApComplex) -> bool {
    matches!(z.as_integer(), Some(n) if n <= 0)
}

/// Smallest real part for which the asymptotic series reaches `wp` digits.
fn stirling_threshold(wp: u32) -> f64 {
    0.37 * f64::from(wp) + 4.0
}

/// Shift count r ≥ 0 with Re(z + r) ≥ max(threshold, |Im z|).
fn raise_count(z: &ApComplex, wp: u32) -> usize {
    let re = z.re().to_f64();
    let target = stirling_threshold(wp).max(z.im().to_f64().abs());
    if re >= target {
        0
    } else {
        (target - re).ceil() as usize
    }
}

/// ln Γ(w) for Re(w) ≥ threshold by the Stirling series; the truncation
/// error is below the first omitted term times sec^{2j}(arg(w)/2).
fn ln_gamma_stirling(w: &ApComplex, wp: u32) -> Result<ApComplex> {
    let bits = bits_for(wp);
    let ln_w = w.ln()?;
    let half = ApComplex::from_f64(0.5, 0.0, wp);
    let two_pi = ApComplex::from_real(pi(bits) * 2u32);
    let mut acc = &(&(w - &half) * &ln_w) - w;
    acc += two_pi.ln()?.div_i64(2);

    let theta = w.arg().to_f64().abs();
    let sec_half = 1.0 / (theta / 2.0).cos();
    let tol = -f64::from(wp) - 2.0;
    let w_inv = w.recip()?;
    let w_inv2 = w_inv.square();
    let mut pw = w_inv.clone(); // w^{-(2j-1)}
    let max_terms = 4 * wp as usize + 40;
    let mut bern = EvenBernoulli::new(bits);
    for j in 1..=max_terms {
        let denom = (2 * j * (2 * j - 1)) as i64;
        let term = pw.scale_real(bern.get(j)).div_i64(denom);
        acc += &term;
        let nb = bern.log10_abs(j + 1)
            - ((2 * j + 2) as f64 * (2 * j + 1) as f64).log10()
            - (2 * j + 1) as f64 * w.log10_abs()
            + (2 * j + 2) as f64 * sec_half.log10();
        if nb < tol {
            return Ok(acc);
        }
        pw = &pw * &w_inv2;
    }
    Err(Error::Convergence("Stirling series did not reach the target accuracy".into()))
}

/// Γ(z).
pub fn gamma(z: &ApComplex) -> Result<ApComplex> {
    if nonpositive_integer(z) {
        return Err(Error::Pole(format!("gamma at nonpositive integer {}", z.to_decimal(10))));
    }
    let digits = z.prec();
    let wp = digits + GUARD_DIGITS;
    let zw = z.with_prec(wp);
    Ok(gamma_wp(&zw, wp)?.with_prec(digits))
}

fn gamma_wp(z: &ApComplex, wp: u32) -> Result<ApComplex> {
    if z.re() < &0.5 {
        // Γ(z) = π / (sin(πz) Γ(1−z))
        let one_minus = (-z).add_i64(1);
        let pz = z.scale_real(&pi(bits_for(wp)));
        let denom = &pz.sin() * &gamma_wp(&one_minus, wp)?;
        return ApComplex::pi(wp).checked_div(&denom);
    }
    let r = raise_count(z, wp);
    let mut w = z.clone();
    let mut prod = ApComplex::one(wp);
    for _ in 0..r {
        prod = &prod * &w;
        w = w.add_i64(1);
    }
    ln_gamma_stirling(&w, wp)?.exp().checked_div(&prod)
}

/// ψ(z) = Γ′(z)/Γ(z).
pub fn digamma(z: &ApComplex) -> Result<ApComplex> {
    if nonpositive_integer(z) {
        return Err(Error::Pole(format!("digamma at nonpositive integer {}", z.to_decimal(10))));
    }
    let digits = z.prec();
    let wp = digits + GUARD_DIGITS;
    Ok(digamma_wp(&z.with_prec(wp), wp)?.with_prec(digits))
}

fn digamma_wp(z: &ApComplex, wp: u32) -> Result<ApComplex> {
    if z.re() < &0.5 {
        // ψ(z) = ψ(1−z) − π cot(πz)
        let one_minus = (-z).add_i64(1);
        let pz = z.scale_real(&pi(bits_for(wp)));
        let cot = pz.cot()?;
        return Ok(&digamma_wp(&one_minus, wp)? - &cot.scale_real(&pi(bits_for(wp))));
    }
    let r = raise_count(z, wp);
    let mut w = z.clone();
    let mut shift = ApComplex::zero(wp);
    for _ in 0..r {
        shift += w.recip()?;
        w = w.add_i64(1);
    }
    Ok(&digamma_asymptotic(&w, wp)? - &shift)
}

/// ψ(w) ~ ln w − 1/(2w) − Σ B_{2j}/(2j w^{2j}).
fn digamma_asymptotic(w: &ApComplex, wp: u32) -> Result<ApComplex> {
    let bits = bits_for(wp);
    let w_inv = w.recip()?;
    let mut acc = &w.ln()? - &w_inv.div_i64(2);
    let w_inv2 = w_inv.square();
    let mut pw = w_inv2.clone();
    let theta = w.arg().to_f64().abs();
    let sec_half = 1.0 / (theta / 2.0).cos();
    let tol = -f64::from(wp) - 2.0;
    let max_terms = 4 * wp as usize + 40;
    let mut bern = EvenBernoulli::new(bits);
    for j in 1..=max_terms {
        let term = pw.scale_real(bern.get(j)).div_i64((2 * j) as i64);
        acc -= &term;
        let nb = bern.log10_abs(j + 1) - ((2 * j + 2) as f64).log10() - (2 * j + 2) as f64 * w.log10_abs()
            + (2 * j + 2) as f64 * sec_half.log10();
        if nb < tol {
            return Ok(acc);
        }
        pw = &pw * &w_inv2;
    }
    Err(Error::Convergence("digamma asymptotic series did not converge".into()))
}

/// n! as a rational, for exact prefactors.
pub fn factorial_rational(n: u32) -> Rational {
    Rational::from(rug::Integer::from(rug::Integer::factorial(n)))
}
