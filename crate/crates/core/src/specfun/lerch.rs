//! Lerch transcendent by direct summation inside |w| ≤ 0.99, and the
//! ₂F₁(1, b; b+1; w) it specializes to.

use super::apcomplex::ApComplex;
use super::GUARD_DIGITS;
use crate::error::{Error, Result};

/// Largest |w| accepted by the direct series.
pub const MAX_ABS_W: f64 = 0.99;

/// Φ(w, s, a) = Σ_{m≥0} w^m / (m + a)^s.
pub fn lerch_phi(w: &ApComplex, s: &ApComplex, a: &ApComplex) -> Result<ApComplex> {
    let rho = w.abs_f64();
    if rho > MAX_ABS_W {
        return Err(Error::Domain(format!("Lerch series needs |w| <= {MAX_ABS_W}, got {rho:.6}")));
    }
    if matches!(a.as_integer(), Some(n) if n <= 0) {
        return Err(Error::Pole(format!("Lerch transcendent at a = {}", a.to_decimal(10))));
    }
    let digits = w.prec().min(s.prec()).min(a.prec());
    let wp = digits + GUARD_DIGITS;
    let (w, s, a) = (w.with_prec(wp), s.with_prec(wp), a.with_prec(wp));
    let neg_s = -&s;
    let mut sum = a.pow(&neg_s)?;
    if w.is_zero() {
        return Ok(sum.with_prec(digits));
    }
    let sigma = s.re().to_f64();
    let im_s = s.im().to_f64().abs();
    let re_a = a.re().to_f64();
    let im_a = a.im().to_f64().abs();
    let tol = -f64::from(wp);
    let mut wm = ApComplex::one(wp);
    let cap = 200_000usize;
    for m in 1..cap {
        wm = &wm * &w;
        let base = a.add_i64(m as i64);
        if base.is_zero() {
            return Err(Error::Pole("Lerch transcendent: m + a = 0".into()));
        }
        let t = &wm * &base.pow(&neg_s)?;
        sum += &t;
        let shift = m as f64 + re_a;
        if shift > 1.0 {
            // Ratio of consecutive magnitudes beyond m is at most rho_m.
            let rho_m = rho * (1.0 + 1.0 / shift).powf(sigma.abs()) * (im_s * im_a / (shift * shift)).exp();
            if rho_m < 1.0 && !t.is_zero() {
                let bound = t.log10_abs() + (rho_m / (1.0 - rho_m)).log10();
                let scale = if sum.is_zero() { 0.0 } else { sum.log10_abs() };
                if bound < tol + scale {
                    return Ok(sum.with_prec(digits));
                }
            } else if t.is_zero() {
                return Ok(sum.with_prec(digits));
            }
        }
    }
    Err(Error::Convergence("Lerch series exceeded its term cap".into()))
}

/// ₂F₁(1, b; b+1; w) = b·Φ(w, 1, b).
pub fn hyp2f1_unit(b: &ApComplex, w: &ApComplex) -> Result<ApComplex> {
    let one = ApComplex::one(b.prec());
    Ok(b * &lerch_phi(w, &one, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::apcomplex::{bits_for, ln2};

    fn rel(a: &ApComplex, b: &ApComplex) -> f64 {
        (a - b).log10_abs() - b.log10_abs()
    }

    fn two_ln2(d: u32) -> ApComplex {
        ApComplex::from_real(ln2(bits_for(d)) * 2u32)
    }

    #[test]
    fn origin_keeps_first_term() {
        let s = ApComplex::from_f64(2.0, 1.0, 30);
        let a = ApComplex::from_f64(1.5, 0.0, 30);
        let v = lerch_phi(&ApComplex::zero(30), &s, &a).unwrap();
        assert!(rel(&v, &a.pow(&-&s).unwrap()) < -29.0);
    }

    #[test]
    fn half_one_one() {
        let half = ApComplex::from_f64(0.5, 0.0, 40);
        let one = ApComplex::one(40);
        assert!(rel(&lerch_phi(&half, &one, &one).unwrap(), &two_ln2(40)) < -39.0);
        assert!(rel(&hyp2f1_unit(&one, &half).unwrap(), &two_ln2(40)) < -39.0);
        assert!(rel(&hyp2f1_unit(&one, &ApComplex::zero(40)).unwrap(), &one) < -39.0);
    }

    #[test]
    fn index_shift() {
        let w = ApComplex::from_f64(-0.6, 0.3, 35);
        let s = ApComplex::from_f64(1.5, -0.5, 35);
        let a = ApComplex::from_f64(0.75, 0.0, 35);
        let lhs = &lerch_phi(&w, &s, &a).unwrap() - &(&w * &lerch_phi(&w, &s, &a.add_i64(1)).unwrap());
        assert!(rel(&lhs, &a.pow(&-&s).unwrap()) < -33.0);
    }

    #[test]
    fn rejects_unit_circle() {
        let w = ApComplex::from_f64(0.995, 0.0, 30);
        let one = ApComplex::one(30);
        assert!(matches!(lerch_phi(&w, &one, &one), Err(Error::Domain(_))));
    }
}
