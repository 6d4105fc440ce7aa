//! Exp-sinh quadrature on (0, ∞) and the two integral representations of
//! the Hurwitz zeta function built on it.

use rug::Float;

use crate::error::{Error, Result};
use crate::specfun::{bits_for, gamma, pi, ApComplex, GUARD_DIGITS};

/// Refinement levels tried before giving up; level L uses step 2^{−L}.
pub const MAX_LEVELS: usize = 12;
const MIN_LEVELS: usize = 3;
const T_LIMIT: f64 = 9.0;

#[derive(Debug, Clone)]
pub struct QuadResult {
    pub value: ApComplex,
    /// |I_L − I_{L−1}| plus the truncation bound at the window edges.
    pub error_estimate: f64,
    pub levels_used: usize,
}

/// Abscissa x(t) = exp(π/2·sinh t) and weight x′(t) = π/2·cosh t·x(t).
fn node(t: &Float, half_pi: &Float) -> (Float, Float) {
    let bits = t.prec();
    let sh = Float::with_val(bits, t.sinh_ref());
    let ch = Float::with_val(bits, t.cosh_ref());
    let x = Float::with_val(bits, half_pi * &sh).exp();
    let w = Float::with_val(bits, half_pi * &ch) * &x;
    (x, w)
}

/// ∫₀^∞ f(x) dx for f analytic on (0, ∞) with at worst an integrable x^λ
/// singularity at 0 and exponential decay at ∞.  Converged means
/// error_estimate < 10^{−prec}·max(1, |I|).
pub fn integrate_semiinf<F>(f: F, prec: u32) -> Result<QuadResult>
where
    F: Fn(&Float) -> Result<ApComplex>,
{
    let wp = prec + GUARD_DIGITS;
    let bits = bits_for(wp);
    let half_pi = pi(bits) / 2u32;
    let trunc_log = -f64::from(wp) - 10.0;

    let eval_at = |t: f64| -> Result<ApComplex> {
        let (x, w) = node(&Float::with_val(bits, t), &half_pi);
        if x.is_zero() || x.is_infinite() {
            return Ok(ApComplex::zero(wp));
        }
        Ok(f(&x)?.with_prec(wp).scale_real(&w))
    };

    // Window: walk outward from t = 0 in steps of 1/8 until the weighted
    // integrand stays below 10^{trunc_log} relative to its peak.
    let step = 0.125;
    let mut peak = f64::NEG_INFINITY;
    let mut edges = [0.0f64; 2];
    let mut edge_mag = [f64::NEG_INFINITY; 2];
    for (side, dir) in [(0usize, -1.0f64), (1, 1.0)] {
        let mut t = 0.0;
        let mut quiet = 0;
        loop {
            t += dir * step;
            if t.abs() > T_LIMIT {
                return Err(Error::Convergence("integrand does not decay inside the quadrature window".into()));
            }
            let v = eval_at(t)?;
            let m = if v.is_zero() { f64::NEG_INFINITY } else { v.log10_abs() };
            peak = peak.max(m);
            if m < trunc_log + peak.max(0.0) {
                quiet += 1;
                if quiet >= 3 {
                    edges[side] = t;
                    edge_mag[side] = m;
                    break;
                }
            } else {
                quiet = 0;
            }
        }
    }
    let trunc_bound: f64 = edge_mag.iter().map(|m| 10f64.powf(*m)).sum::<f64>() * 2.0;
    let (t_lo, t_hi) = (edges[0], edges[1]);

    // Level 0 with h = 1/8 over the window, then halve.
    let mut h = step;
    let mut total = ApComplex::zero(wp);
    let n_lo = (t_lo / h).floor() as i64;
    let n_hi = (t_hi / h).ceil() as i64;
    for j in n_lo..=n_hi {
        total += &eval_at(j as f64 * h)?;
    }
    let mut prev = total.scale_real(&Float::with_val(bits, h));
    for level in 1..=MAX_LEVELS {
        h /= 2.0;
        let n_lo = (t_lo / h).floor() as i64;
        let n_hi = (t_hi / h).ceil() as i64;
        let mut j = if n_lo % 2 == 0 { n_lo + 1 } else { n_lo };
        while j <= n_hi {
            total += &eval_at(j as f64 * h)?;
            j += 2;
        }
        let cur = total.scale_real(&Float::with_val(bits, h));
        let diff = &cur - &prev;
        let diff_mag = if diff.is_zero() { 0.0 } else { 10f64.powf(diff.log10_abs()) };
        let err = diff_mag + trunc_bound;
        let scale = cur.abs_f64().max(1.0);
        if level >= MIN_LEVELS && err < 10f64.powf(-f64::from(prec)) * scale {
            return Ok(QuadResult { value: cur.with_prec(prec), error_estimate: err, levels_used: level });
        }
        prev = cur;
    }
    Err(Error::Convergence(format!("quadrature did not converge within {MAX_LEVELS} levels")))
}

/// (1/Γ(s)) ∫₀^∞ x^{s−1} e^{−ax}/(1 − e^{−x}) dx, Re s > 1, Re a > 0.
pub fn hurwitz_integral(s: &ApComplex, a: &ApComplex, prec: u32) -> Result<(ApComplex, QuadResult)> {
    if s.re() <= &1 || a.re() <= &0 {
        return Err(Error::Domain("integral representation needs Re(s) > 1 and Re(a) > 0".into()));
    }
    let wp = prec + GUARD_DIGITS;
    let sm1 = s.with_prec(wp).add_i64(-1);
    let neg_a = -&a.with_prec(wp);
    let q = integrate_semiinf(
        |x| {
            let xc = ApComplex::from_real(x.clone());
            let ln_x = ApComplex::from_real(Float::with_val(x.prec(), x.ln_ref()));
            let xs = (&sm1 * &ln_x).exp();
            let ea = (&neg_a * &xc).exp();
            // 1 − e^{−x} = −expm1(−x)
            let denom = -Float::with_val(x.prec(), -x.clone()).exp_m1();
            Ok((&xs * &ea).scale_real(&Float::with_val(x.prec(), denom.recip_ref())))
        },
        wp,
    )?;
    let g = gamma(&s.with_prec(wp))?;
    let value = q.value.checked_div(&g)?.with_prec(prec);
    Ok((value, q))
}

/// ∫₀^∞ 2^{1+k}(y² + c²/4)^{(k−1)/2} sin((1−k)·atan(2y/c))/(e^{2πy} − 1) dy, Re c > 0.
pub fn hermite_tail_integral(k: &ApComplex, c: &ApComplex, prec: u32) -> Result<QuadResult> {
    if c.re() <= &0 {
        return Err(Error::Domain("Hermite integral needs Re(c) > 0".into()));
    }
    let wp = prec + GUARD_DIGITS;
    let k = k.with_prec(wp);
    let c = c.with_prec(wp);
    let bits = bits_for(wp);
    let two_pi = pi(bits) * 2u32;
    let c2_4 = c.square().div_i64(4);
    let half_km1 = k.add_i64(-1).div_i64(2);
    let one_minus_k = (-&k).add_i64(1);
    let two_pow = ApComplex::from_i64(2, wp).pow(&k.add_i64(1))?;
    let c_inv2 = c.recip()?.scale_i64(2);
    let q = integrate_semiinf(
        |y| {
            let yc = ApComplex::from_real(y.clone());
            let base = &yc.square() + &c2_4;
            let p = base.pow(&half_km1)?;
            let ang = (&yc * &c_inv2).atan()?;
            let sn = (&one_minus_k * &ang).sin();
            let em1 = Float::with_val(y.prec(), &two_pi * y).exp_m1();
            Ok((&(&two_pow * &p) * &sn).scale_real(&Float::with_val(y.prec(), em1.recip_ref())))
        },
        prec,
    )?;
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::hurwitz_zeta;

    fn rel(a: &ApComplex, b: &ApComplex) -> f64 {
        (a - b).log10_abs() - b.log10_abs()
    }

    #[test]
    fn elementary_integrals() {
        let one = ApComplex::one(40);
        let q = integrate_semiinf(|x| Ok(ApComplex::from_real(Float::with_val(x.prec(), -x).exp())), 40).unwrap();
        assert!(rel(&q.value, &one) < -39.0);
        assert!(q.error_estimate < 1e-40);
        let q = integrate_semiinf(|x| Ok(ApComplex::from_real(Float::with_val(x.prec(), -x).exp() * x)), 40).unwrap();
        assert!(rel(&q.value, &one) < -39.0);
        let q = integrate_semiinf(
            |x| Ok(ApComplex::from_real(Float::with_val(x.prec(), -x).exp() * Float::with_val(x.prec(), x.sqrt_ref()))),
            40,
        )
        .unwrap();
        let want = gamma(&ApComplex::from_f64(1.5, 0.0, 40)).unwrap();
        assert!(rel(&q.value, &want) < -39.0);
    }

    #[test]
    fn hurwitz_integral_matches_series() {
        for &(s, a) in &[(2.0, 1.0), (3.0, 0.5), (2.5, 1.5)] {
            let s = ApComplex::from_f64(s, 0.0, 40);
            let a = ApComplex::from_f64(a, 0.0, 40);
            let (v, q) = hurwitz_integral(&s, &a, 40).unwrap();
            assert!(rel(&v, &hurwitz_zeta(&s, &a).unwrap()) < -35.0);
            assert!(q.error_estimate < 1e-40);
        }
        let bad = hurwitz_integral(&ApComplex::one(30), &ApComplex::one(30), 30);
        assert!(matches!(bad, Err(Error::Domain(_))));
    }

    #[test]
    fn hermite_closes_against_zeta() {
        for &(k, c) in &[(-1.0, 3.0), (-2.0, 1.0), (0.5, 2.5)] {
            let k = ApComplex::from_f64(k, 0.0, 40);
            let c = ApComplex::from_f64(c, 0.0, 40);
            let q = hermite_tail_integral(&k, &c, 40).unwrap();
            // −2^k ζ(1−k, c/2) = −c^{k−1} + c^k/k − I
            let rhs = &(&(-&c.pow(&k.add_i64(-1)).unwrap()) + &c.pow(&k).unwrap().checked_div(&k).unwrap()) - &q.value;
            let z = hurwitz_zeta(&(-&k).add_i64(1), &c.div_i64(2)).unwrap();
            let lhs = -&(&ApComplex::from_i64(2, 40).pow(&k).unwrap() * &z);
            assert!(rel(&lhs, &rhs) < -35.0, "k={k} c={c}");
        }
    }
}
