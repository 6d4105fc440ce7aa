//! Hurwitz zeta ζ(s, a) and ∂ζ/∂s by Euler–Maclaurin summation.

use rug::Float;

use super::apcomplex::{bits_for, ApComplex};
use super::{EvenBernoulli, GUARD_DIGITS};
use crate::error::{Error, Result};

const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Pivot and correction-order limits for one Euler–Maclaurin evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmSettings {
    /// Terms summed directly, N ≥ 1.
    pub pivot: usize,
    /// Corrections always added before the tail test is consulted.
    pub min_corrections: usize,
    /// Hard cap on M; hitting it is a convergence error.
    pub max_corrections: usize,
}

impl EmSettings {
    /// N = max(⌈|s|⌉, ⌈wp·ln10/ln2π⌉ + ⌈|Im s|/2⌉), raised by ⌈−Re a⌉ when
    /// Re a < 0 so that Re(N + a) stays positive.
    pub fn choose(s: &ApComplex, a: &ApComplex, wp: u32) -> Self {
        let abs_s = s.abs_f64();
        let im = s.im().to_f64().abs();
        let base = (f64::from(wp) * std::f64::consts::LN_10 / LN_2PI).ceil() + (im / 2.0).ceil();
        let mut pivot = abs_s.ceil().max(base).max(1.0) as usize;
        let re_a = a.re().to_f64();
        if re_a < 0.0 {
            pivot += (-re_a).ceil() as usize;
        }
        EmSettings { pivot, min_corrections: 1, max_corrections: 4 * wp as usize + 200 }
    }

    pub fn with_pivot(mut self, pivot: usize) -> Self {
        self.pivot = pivot.max(1);
        self
    }
}

/// Value (and optionally s-derivative) plus the correction order used.
#[derive(Debug, Clone)]
pub struct EmValue {
    pub value: ApComplex,
    pub deriv: Option<ApComplex>,
    pub corrections: usize,
}

fn common_digits(s: &ApComplex, a: &ApComplex) -> u32 {
    s.prec().min(a.prec())
}

fn check_pole(s: &ApComplex) -> Result<()> {
    if s.as_integer() == Some(1) {
        return Err(Error::Pole("Hurwitz zeta at s = 1".into()));
    }
    Ok(())
}

/// Digits lost when the direct sum grows like |N + a|^{1−σ} for σ < 1.
fn cancellation_digits(s: &ApComplex, a: &ApComplex, pivot: usize) -> u32 {
    let sigma = s.re().to_f64();
    if sigma >= 0.0 {
        return 0;
    }
    let x = (a.re().to_f64() + pivot as f64).abs().max(1.0) + a.im().to_f64().abs();
    ((1.0 - sigma) * x.log10()).ceil().max(0.0) as u32
}

/// ζ(s, a) with automatically chosen settings.
pub fn hurwitz_zeta(s: &ApComplex, a: &ApComplex) -> Result<ApComplex> {
    check_pole(s)?;
    let digits = common_digits(s, a);
    let wp = digits + GUARD_DIGITS;
    let settings = EmSettings::choose(s, a, wp);
    Ok(hurwitz_zeta_em(s, a, &settings, false)?.value.with_prec(digits))
}

/// ζ(s, a) with explicit settings.
pub fn hurwitz_zeta_with(s: &ApComplex, a: &ApComplex, settings: &EmSettings) -> Result<ApComplex> {
    check_pole(s)?;
    let digits = common_digits(s, a);
    Ok(hurwitz_zeta_em(s, a, settings, false)?.value.with_prec(digits))
}

/// ∂ζ(s, a)/∂s.
pub fn hurwitz_zeta_ds(s: &ApComplex, a: &ApComplex) -> Result<ApComplex> {
    check_pole(s)?;
    let digits = common_digits(s, a);
    let wp = digits + GUARD_DIGITS;
    let settings = EmSettings::choose(s, a, wp);
    let out = hurwitz_zeta_em(s, a, &settings, true)?;
    Ok(out.deriv.expect("derivative requested").with_prec(digits))
}

pub fn riemann_zeta(s: &ApComplex) -> Result<ApComplex> {
    hurwitz_zeta(s, &ApComplex::one(s.prec()))
}

pub fn riemann_zeta_ds(s: &ApComplex) -> Result<ApComplex> {
    hurwitz_zeta_ds(s, &ApComplex::one(s.prec()))
}

/// ψ^{(m)}(z) = (−1)^{m+1} m! ζ(m+1, z), m ≥ 1.
pub fn polygamma(m: u32, z: &ApComplex) -> Result<ApComplex> {
    if m == 0 {
        return super::gamma::digamma(z);
    }
    if super::gamma::nonpositive_integer(z) {
        return Err(Error::Pole(format!("polygamma at nonpositive integer {}", z.to_decimal(10))));
    }
    let digits = z.prec();
    let wp = digits + GUARD_DIGITS;
    let s = ApComplex::from_i64(i64::from(m) + 1, wp);
    let zw = z.with_prec(wp);
    let zeta = hurwitz_zeta_em(&s, &zw, &EmSettings::choose(&s, &zw, wp), false)?.value;
    let fact = Float::with_val(bits_for(wp), rug::Integer::from(rug::Integer::factorial(m)));
    let mut out = zeta.scale_real(&fact);
    if m.is_multiple_of(2) {
        out = -out;
    }
    Ok(out.with_prec(digits))
}

/// Core Euler–Maclaurin evaluation at the working precision of the
/// settings' caller.  Term j of the correction sum is B_{2j}·R_j with
/// R_j = (s)_{2j−1} X^{−s−2j+1}/(2j)!, X = N + a; Q_j carries the same
/// with (s)_{2j−1} replaced by its s-derivative.
pub fn hurwitz_zeta_em(s: &ApComplex, a: &ApComplex, settings: &EmSettings, deriv: bool) -> Result<EmValue> {
    check_pole(s)?;
    let wp = common_digits(s, a) + GUARD_DIGITS + cancellation_digits(s, a, settings.pivot.max(1));
    let s = s.with_prec(wp);
    let a = a.with_prec(wp);
    let n_piv = settings.pivot.max(1);

    let neg_s = -&s;
    let mut sum = ApComplex::zero(wp);
    let mut dsum = ApComplex::zero(wp);
    for n in 0..n_piv {
        let base = a.add_i64(n as i64);
        if base.is_zero() {
            return Err(Error::Domain(format!("Hurwitz zeta: a + {n} = 0 inside the direct sum")));
        }
        let t = base.pow(&neg_s)?;
        if deriv {
            dsum -= &(&base.ln()? * &t);
        }
        sum += &t;
    }

    let x = a.add_i64(n_piv as i64);
    if x.re() <= &0 {
        return Err(Error::Domain("Hurwitz zeta: Re(N + a) must be positive".into()));
    }
    let ln_x = x.ln()?;
    let x_neg_s = x.pow(&neg_s)?;
    let x_inv = x.recip()?;
    let x_inv2 = x_inv.square();
    let s_minus_1 = s.add_i64(-1);
    let x_one_minus_s = &x_neg_s * &x;
    let integral = x_one_minus_s.checked_div(&s_minus_1)?;
    sum += &integral;
    sum += &x_neg_s.div_i64(2);
    if deriv {
        dsum -= &(&ln_x * &integral);
        dsum -= &integral.checked_div(&s_minus_1)?;
        dsum -= &(&ln_x * &x_neg_s).div_i64(2);
    }

    let bits = bits_for(wp);
    let mut bern = EvenBernoulli::new(bits);
    let sigma = s.re().to_f64();
    let tol_log = -f64::from(wp);
    // R_1 = s X^{−s−1}/2, Q_1 = X^{−s−1}/2
    let mut q_j = (&x_neg_s * &x_inv).div_i64(2);
    let mut r_j = &s * &q_j;
    let mut used = 0usize;
    for j in 1..=settings.max_corrections + 1 {
        let b = bern.get(j).clone();
        let term = r_j.scale_real(&b);
        let dterm = if deriv { Some((&q_j - &(&ln_x * &r_j)).scale_real(&b)) } else { None };
        if term.is_zero() && dterm.as_ref().is_none_or(|d| d.is_zero()) && s.as_integer().is_some() {
            // (s)_{2j−1} = 0 for s a nonpositive integer: the series has ended.
            return Ok(EmValue { value: sum, deriv: deriv.then_some(dsum), corrections: used });
        }
        if j > settings.min_corrections.max(1) {
            // Bound for stopping at M = j − 1.
            let m = (j - 1) as f64;
            let factor = if sigma + 2.0 * m + 1.0 > 0.0 {
                ((s.add_i64(2 * (j as i64 - 1) + 1)).abs_f64() / (sigma + 2.0 * m + 1.0)).log10()
            } else {
                f64::INFINITY
            };
            let small = |t: &ApComplex, est: &ApComplex| {
                let scale = if est.is_zero() { 0.0 } else { est.log10_abs() };
                factor + t.log10_abs() < tol_log + scale || t.is_zero()
            };
            let ok_v = small(&term, &sum);
            let ok_d = dterm.as_ref().is_none_or(|d| small(d, &dsum));
            if ok_v && ok_d {
                return Ok(EmValue { value: sum, deriv: deriv.then_some(dsum), corrections: used });
            }
        }
        if j > settings.max_corrections {
            break;
        }
        sum += &term;
        if let Some(d) = dterm {
            dsum += &d;
        }
        used = j;
        // Advance: multiply by (s+2j−1)(s+2j)/((2j+1)(2j+2) X²).
        let jj = j as i64;
        let f1 = s.add_i64(2 * jj - 1);
        let f2 = s.add_i64(2 * jj);
        let q = &f1 * &f2;
        let qp = s.scale_i64(2).add_i64(4 * jj - 1);
        let denom = (2 * jj + 1) * (2 * jj + 2);
        let new_q = if deriv { (&(&q_j * &q) + &(&r_j * &qp)) * &x_inv2 } else { q_j.clone() };
        r_j = (&r_j * &q) * &x_inv2;
        r_j = r_j.div_i64(denom);
        q_j = new_q.div_i64(denom);
    }
    Err(Error::Convergence(format!(
        "Euler-Maclaurin tail bound not met after {} corrections",
        settings.max_corrections
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{bernoulli_poly, ExactComplex};
    use crate::specfun::apcomplex::pi;
    use rug::Rational;

    fn rel(a: &ApComplex, b: &ApComplex) -> f64 {
        (a - b).log10_abs() - b.log10_abs()
    }

    #[test]
    fn zeta_two_one() {
        let v = hurwitz_zeta(&ApComplex::from_i64(2, 40), &ApComplex::one(40)).unwrap();
        let p = pi(bits_for(40));
        let want = ApComplex::from_real(Float::with_val(bits_for(40), &p * &p) / 6u32);
        assert!(rel(&v, &want) < -39.0);
    }

    #[test]
    fn zeta_index_shift() {
        let s = ApComplex::from_f64(2.5, 3.0, 40);
        let a = ApComplex::from_f64(0.75, -0.5, 40);
        let lhs = &hurwitz_zeta(&s, &a).unwrap() - &hurwitz_zeta(&s, &a.add_i64(1)).unwrap();
        let rhs = a.pow(&-&s).unwrap();
        assert!(rel(&lhs, &rhs) < -38.0);
    }

    #[test]
    fn zeta_negative_integer_exact() {
        // ζ(1−4, 1/3) = −B_4(1/3)/4
        let a = Rational::from((1, 3));
        let v = hurwitz_zeta(&ApComplex::from_i64(-3, 40), &ApComplex::from_rational(&a, 40)).unwrap();
        let b4 = bernoulli_poly(4).eval(&a);
        let want = ApComplex::from_rational(&(-b4 / 4u32), 40);
        assert!(rel(&v, &want) < -39.0);
    }

    #[test]
    fn riemann_values() {
        let z0 = riemann_zeta(&ApComplex::zero(30)).unwrap();
        assert!(rel(&z0, &ApComplex::from_f64(-0.5, 0.0, 30)) < -29.0);
        let zm2 = riemann_zeta(&ApComplex::from_i64(-2, 30)).unwrap();
        assert!(zm2.is_zero() || zm2.log10_abs() < -40.0);
        assert!(matches!(riemann_zeta(&ApComplex::one(30)), Err(Error::Pole(_))));
    }

    #[test]
    fn zeta_prime_minus_one() {
        let d = riemann_zeta_ds(&ApComplex::from_i64(-1, 30)).unwrap();
        let want = ExactComplex::parse("-0.16542114370045092921391966024278063").unwrap().to_ap(30);
        assert!(rel(&d, &want) < -29.0);
    }

    #[test]
    fn derivative_index_shift() {
        let s = ApComplex::from_f64(-1.5, 0.25, 35);
        let a = ApComplex::from_f64(1.25, 0.0, 35);
        let lhs = &hurwitz_zeta_ds(&s, &a).unwrap() - &hurwitz_zeta_ds(&s, &a.add_i64(1)).unwrap();
        let rhs = -&(&a.ln().unwrap() * &a.pow(&-&s).unwrap());
        assert!(rel(&lhs, &rhs) < -33.0);
    }

    #[test]
    fn polygamma_trigamma_half() {
        // ψ1(1/2) = π²/2
        let v = polygamma(1, &ApComplex::from_f64(0.5, 0.0, 40)).unwrap();
        let p = pi(bits_for(40));
        let want = ApComplex::from_real(Float::with_val(bits_for(40), &p * &p) / 2u32);
        assert!(rel(&v, &want) < -39.0);
    }

    #[test]
    fn invariant_under_pivot_and_order_changes() {
        let s = ApComplex::from_f64(3.25, -1.5, 30);
        let a = ApComplex::from_f64(0.5, 0.5, 30);
        let wp = 30 + GUARD_DIGITS;
        let base = EmSettings::choose(&s, &a, wp);
        let v0 = hurwitz_zeta_em(&s, &a, &base, false).unwrap();
        let doubled = hurwitz_zeta_em(&s, &a, &base.with_pivot(2 * base.pivot), false).unwrap();
        let more = EmSettings { min_corrections: v0.corrections + 2, ..base };
        let v2 = hurwitz_zeta_em(&s, &a, &more, false).unwrap();
        assert!(rel(&doubled.value, &v0.value) < -(wp as f64) + 2.0);
        assert!(rel(&v2.value, &v0.value) < -(wp as f64) + 2.0);
        assert!(v2.corrections >= v0.corrections + 2);
    }

    #[test]
    fn capped_corrections_fail_loudly() {
        let s = ApComplex::from_f64(2.5, 0.0, 30);
        let a = ApComplex::one(30);
        let tight = EmSettings { pivot: 1, min_corrections: 1, max_corrections: 2 };
        assert!(matches!(hurwitz_zeta_em(&s, &a, &tight, false), Err(Error::Convergence(_))));
    }
}
