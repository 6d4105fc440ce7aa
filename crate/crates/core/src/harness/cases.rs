//! The identity registry: one entry per identity, each pairing a summed
//! left-hand side with an independently evaluated closed form.

use rug::Rational;

use super::params::Params;
use super::sum::{sum_single, SumConfig, SumResult};
use super::summands::{self as sm, ex, PochForm, Shifts};
use super::tables::Family;
use crate::error::{Error, Result};
use crate::exactpoly::{bernoulli_poly, ExactComplex};
use crate::quadrature::{hermite_tail_integral, hurwitz_integral};
use crate::specfun::{
    bits_for, catalan, digamma, gamma, gen_harmonic, hurwitz_zeta, hurwitz_zeta_ds, hyp2f1_unit, lerch_phi, ln2,
    polygamma, riemann_zeta, riemann_zeta_ds, ApComplex,
};

/// Closed-form side of a case.
#[derive(Debug, Clone)]
pub struct RhsValue {
    pub value: ApComplex,
    /// Error estimate of a quadrature inside the closed form.
    pub quad_error: Option<f64>,
    /// Exact side conditions that must hold for the case to pass.
    pub subchecks: Vec<(String, bool)>,
}

impl RhsValue {
    fn plain(value: ApComplex) -> Self {
        RhsValue { value, quad_error: None, subchecks: Vec::new() }
    }
}

pub struct CaseSpec {
    pub id: &'static str,
    pub description: &'static str,
    /// The identity, LHS = RHS, in plain text.
    pub formula: &'static str,
    pub domain: &'static str,
    /// Parameters the case reads.
    pub fields: &'static [&'static str],
    pub default_tol: f64,
    /// Parameters are literal constants of the identity and cannot be set.
    pub fixed: bool,
    pub defaults: fn() -> Params,
    pub samples: fn() -> Vec<Params>,
    pub check: fn(&Params) -> Result<()>,
    pub lhs: fn(&Params, &SumConfig) -> Result<SumResult>,
    pub rhs: fn(&Params, u32) -> Result<RhsValue>,
}

impl std::fmt::Debug for CaseSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CaseSpec({})", self.id)
    }
}

// ---- domain checks -------------------------------------------------------

fn violated(what: &str) -> Error {
    Error::Domain(format!("violated constraint: {what}"))
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(violated(what))
    }
}

fn abs_le_half(v: &ExactComplex) -> bool {
    let n2 = Rational::from(&v.re * &v.re) + Rational::from(&v.im * &v.im);
    n2 <= Rational::from((1, 4))
}

fn shifts_domain(p: &Params, a_scale: f64) -> Result<()> {
    let a = p.req("a")?;
    let b = p.req("beta")?;
    let d = p.req("delta")?;
    p.req("alpha")?;
    p.req("gamma")?;
    require(abs_le_half(b), "|beta| <= 1/2")?;
    require(abs_le_half(d), "|delta| <= 1/2")?;
    let lhs = a.re_f64() * a_scale;
    let bound = 1.0 + b.abs_f64() + d.abs_f64();
    if a_scale == 1.0 {
        require(lhs >= bound, "Re(a) >= 1 + |beta| + |delta|")
    } else {
        require(lhs >= bound, "Re(a)/2 >= 1 + |beta| + |delta|")
    }
}

fn k_bounded(p: &Params, kmax: f64) -> Result<&ExactComplex> {
    let k = p.req("k")?;
    require(!k.is_zero(), "k != 0")?;
    if k.abs_f64() > kmax {
        return Err(violated(&format!("|k| <= {kmax}")));
    }
    Ok(k)
}

fn t1_domain(p: &Params) -> Result<()> {
    shifts_domain(p, 1.0)?;
    k_bounded(p, 10.0)?;
    Ok(())
}

fn int_k_range(p: &Params, lo: i64, hi: i64) -> Result<i64> {
    let k = p.req("k")?.as_integer().ok_or_else(|| violated("k is an integer"))?;
    require((lo..=hi).contains(&k), &format!("{lo} <= k <= {hi}"))?;
    Ok(k)
}

fn c_of(p: &Params) -> Result<ExactComplex> {
    Ok(Shifts::read(p)?.c())
}

fn c_half_not_pole(p: &Params) -> Result<()> {
    let c = c_of(p)?;
    let h = c.scale(&Rational::from((1, 2)));
    if let Some(v) = h.as_integer() {
        require(v > 0, "(a + alpha + gamma)/2 is not a nonpositive integer")?;
    }
    Ok(())
}

// ---- shared helpers -------------------------------------------------------

fn k_ap(p: &Params, wp: u32) -> Result<ApComplex> {
    p.ap("k", wp)
}

fn two_pow(k: &ApComplex) -> Result<ApComplex> {
    ApComplex::from_i64(2, k.prec()).pow(k)
}

fn ln2_ap(wp: u32) -> ApComplex {
    ApComplex::from_real(ln2(bits_for(wp)))
}

fn half_c(p: &Params, wp: u32) -> Result<ApComplex> {
    Ok(c_of(p)?.to_ap(wp).div_i64(2))
}

/// −2^k ζ(1 − k, c/2), the T1 closed form.
fn t1_closed(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = k_ap(p, wp)?;
    let z = hurwitz_zeta(&(-&k).add_i64(1), &half_c(p, wp)?)?;
    Ok(RhsValue::plain(-&(&two_pow(&k)? * &z)))
}

fn t1_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::t1_lhs(Shifts::read(p)?, p.req("k")?.clone(), PochForm::Reciprocal, cfg)
}

fn shift_params(a: &str, alpha: &str, beta: &str, gamma: &str, delta: &str, k: &str) -> Params {
    Params::of(&[("a", a), ("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta), ("k", k)])
}

const SHIFT_FIELDS: &[&str] = &["a", "alpha", "beta", "gamma", "delta", "k"];
const SHIFT_FIELDS_NO_K: &[&str] = &["a", "alpha", "beta", "gamma", "delta"];
const T1_DOMAIN: &str = "Re(a) >= 1 + |beta| + |delta|, |beta| <= 1/2, |delta| <= 1/2, 0 < |k| <= 10";

fn no_samples() -> Vec<Params> {
    Vec::new()
}

fn no_check(_: &Params) -> Result<()> {
    Ok(())
}

// ---- T1 ------------------------------------------------------------------

fn t1_defaults() -> Params {
    shift_params("30", "1/2", "1/100", "1", "1/50", "-1")
}

fn t1_samples() -> Vec<Params> {
    vec![
        shift_params("32", "1", "1/100", "1/2", "1/100", "-2"),
        shift_params("28", "1/2", "1/50", "1", "0", "-1/2"),
        shift_params("30", "1", "0", "1", "1/100", "1/2+1/3i"),
        shift_params("3", "1/2", "1/4", "1", "1/3", "4"),
        shift_params("5/2", "1/3", "1/5", "1/4", "1/6", "3"),
    ]
}

// ---- T2 / T3 ---------------------------------------------------------------

fn single_params(a: &str, alpha: &str, x: &str, k: &str) -> Params {
    Params::of(&[("a", a), ("alpha", alpha), ("x", x), ("k", k)])
}

fn single_domain(p: &Params) -> Result<()> {
    let a = p.req("a")?;
    let al = p.req("alpha")?;
    let x = p.req("x")?;
    p.req("k")?;
    require(abs_le_half(al), "|alpha| <= 1/2")?;
    require(a.re_f64() >= 1.0 + al.abs_f64(), "Re(a) >= 1 + |alpha|")?;
    require((a + x).re_f64() > 0.0, "Re(a + x) > 0")
}

fn t2_domain(p: &Params) -> Result<()> {
    single_domain(p)?;
    let k = p.req("k")?;
    require(!k.is_zero() && *k != ex(-1), "k not in {0, -1}")?;
    let den = &(k * p.req("alpha")?) - p.req("a")?;
    require(den.abs_f64() >= 1e-6, "|k*alpha - a| >= 1e-6")
}

fn t2_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::t2_lhs(p.req("a")?, p.req("alpha")?, p.req("x")?, p.req("k")?, cfg)
}

fn t2_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = k_ap(p, wp)?;
    let a = p.ap("a", wp)?;
    let al = p.ap("alpha", wp)?;
    let ax = &a + &p.ap("x", wp)?;
    let neg_k = -&k;
    let z1 = hurwitz_zeta(&neg_k, &ax.div_i64(2))?;
    let z2 = hurwitz_zeta(&neg_k, &ax.add_i64(1).div_i64(2))?;
    let num = &two_pow(&k.add_i64(1))? * &(&z2 - &z1);
    let den = &k * &(&(&k * &al) - &a);
    Ok(RhsValue::plain(num.checked_div(&den)?))
}

fn t2_defaults() -> Params {
    single_params("2", "1/4", "1/3", "3")
}

fn t2_samples() -> Vec<Params> {
    vec![
        single_params("3", "1/2", "1/2", "2"),
        single_params("5/2", "-1/3", "1/5", "5"),
        single_params("2", "1/4", "0", "1"),
        single_params("7/4", "-1/2", "2/3", "4"),
        single_params("4", "1/5+1/10i", "1/7", "6"),
    ]
}

fn t3_domain(p: &Params) -> Result<()> {
    single_domain(p)?;
    require(!p.req("k")?.is_zero(), "k != 0")
}

fn t3_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::t3_lhs(p.req("a")?, p.req("alpha")?, p.req("x")?, p.req("k")?, cfg)
}

fn t3_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = k_ap(p, wp)?;
    let ax = &p.ap("a", wp)? + &p.ap("x", wp)?;
    Ok(RhsValue::plain(hurwitz_zeta(&(-&k).add_i64(1), &ax)?))
}

fn t3_defaults() -> Params {
    single_params("2", "1/4", "1/3", "3")
}

fn t3_samples() -> Vec<Params> {
    vec![
        single_params("3", "1/2", "1/2", "2"),
        single_params("5/2", "-1/3", "1/5", "5"),
        single_params("2", "1/4", "0", "1"),
        single_params("7/4", "-1/2", "2/3", "4"),
        single_params("4", "1/5+1/10i", "1/7", "6"),
    ]
}

// ---- E1 ------------------------------------------------------------------

fn e1_domain(p: &Params) -> Result<()> {
    shifts_domain(p, 1.0)?;
    int_k_range(p, 1, 10)?;
    c_half_not_pole(p)
}

/// Summand of the T1 form at −k.
fn e1_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    let k = p.req("k")?;
    sm::t1_lhs(Shifts::read(p)?, -k, PochForm::Reciprocal, cfg)
}

fn e1_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = p.int("k")?;
    let ps = polygamma(k as u32, &half_c(p, wp)?)?;
    let fact = gamma(&ApComplex::from_i64(k + 1, wp))?;
    // −2^{−k}(−1)^{−1−k} ψ^{(k)}(c/2)/k!
    let sign = if (k + 1) % 2 == 0 { -1 } else { 1 };
    let v = ps.checked_div(&fact)?.scale_i64(sign).checked_div(&ApComplex::from_i64(2, wp).powi(k)?)?;
    Ok(RhsValue::plain(v))
}

fn e1_defaults() -> Params {
    shift_params("26", "1/2", "1/100", "1", "1/50", "1")
}

fn e1_samples() -> Vec<Params> {
    vec![
        shift_params("28", "1", "1/100", "1/2", "0", "2"),
        shift_params("30", "1/2", "0", "1", "1/100", "1"),
        shift_params("34", "1", "1/200", "1", "1/200", "3"),
    ]
}

// ---- E2 ------------------------------------------------------------------

fn e2_domain(p: &Params) -> Result<()> {
    t1_domain(p)?;
    let q = p.req("q")?.as_integer().ok_or_else(|| violated("q is an integer"))?;
    require((2..=7).contains(&q), "2 <= q <= 7")
}

fn e2_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    let q = p.req("q")?.re.clone();
    sm::t1_lhs(Shifts::read(p)?.scaled(&q), p.req("k")?.clone(), PochForm::Reciprocal, cfg)
}

fn e2_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = k_ap(p, wp)?;
    let q = p.int("q")?;
    let s = (-&k).add_i64(1);
    let hc = half_c(p, wp)?;
    let mut acc = ApComplex::zero(wp);
    for n in 0..q {
        let shift = ExactComplex::ratio(n, q).to_ap(wp);
        acc += &hurwitz_zeta(&s, &(&hc + &shift))?;
    }
    let qk = ApComplex::from_i64(q, wp).pow(&k.add_i64(-1))?;
    Ok(RhsValue::plain(-&(&(&two_pow(&k)? * &qk) * &acc)))
}

fn with_q(mut p: Params, q: &str) -> Params {
    p.set("q", q).expect("built-in q");
    p
}

fn e2_defaults() -> Params {
    with_q(shift_params("3", "1/2", "1/4", "1", "1/3", "2"), "3")
}

fn e2_samples() -> Vec<Params> {
    vec![
        with_q(shift_params("2", "1/3", "1/5", "1/2", "1/4", "3"), "2"),
        with_q(shift_params("5/2", "1", "1/2", "1/4", "1/8", "4"), "5"),
        with_q(shift_params("3", "1/2", "1/8+1/8i", "1", "1/6", "1"), "7"),
    ]
}

// ---- E3 ------------------------------------------------------------------

fn e3_domain(p: &Params) -> Result<()> {
    t1_domain(p)?;
    require(p.req("k")?.re < 0, "Re(k) < 0")?;
    require(c_of(p)?.re_f64() > 0.0, "Re(a + alpha + gamma) > 0")
}

fn e3_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = k_ap(p, wp)?;
    let (v, q) = hurwitz_integral(&(-&k).add_i64(1), &half_c(p, wp)?, wp)?;
    Ok(RhsValue { value: -&(&two_pow(&k)? * &v), quad_error: Some(q.error_estimate), subchecks: Vec::new() })
}

fn e3_defaults() -> Params {
    shift_params("26", "1/2", "1/100", "1", "1/50", "-1")
}

fn e3_samples() -> Vec<Params> {
    vec![
        shift_params("28", "1", "1/100", "1/2", "0", "-2"),
        shift_params("30", "1/2", "0", "1", "1/100", "-1/2"),
        shift_params("30", "1", "1/200", "1", "1/200", "-1/3+1/4i"),
    ]
}

// ---- E4 ------------------------------------------------------------------

fn e4_domain(p: &Params) -> Result<()> {
    t1_domain(p)?;
    c_half_not_pole(p)
}

fn e4_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = k_ap(p, wp)?;
    let s = (-&k).add_i64(1);
    let h = gen_harmonic(&half_c(p, wp)?.add_i64(-1), &s)?;
    let v = &riemann_zeta(&s)? - &h;
    Ok(RhsValue::plain(-&(&two_pow(&k)? * &v)))
}

fn e4_defaults() -> Params {
    shift_params("24", "1", "1/100", "1", "1/100", "-3/2")
}

fn e4_samples() -> Vec<Params> {
    vec![
        shift_params("26", "1/2", "1/50", "1", "0", "-1"),
        shift_params("5/2", "1/2", "1/4", "1", "1/3", "3"),
        shift_params("28", "1", "0", "1/2", "1/100", "1/2+1/3i"),
    ]
}

// ---- E5 ------------------------------------------------------------------

fn e5_domain(p: &Params) -> Result<()> {
    shifts_domain(p, 1.0)?;
    int_k_range(p, 1, 10)?;
    Ok(())
}

fn e5_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = p.int("k")?;
    let hc = c_of(p)?.scale(&Rational::from((1, 2)));
    let b = bernoulli_poly(k as usize).eval_exact(&hc);
    // 2^k/k exactly
    let coef = Rational::from(rug::Integer::from(1) << k as u32) / Rational::from(k);
    Ok(RhsValue::plain(b.scale(&coef).to_ap(wp)))
}

fn e5_defaults() -> Params {
    shift_params("3", "1/2", "1/4", "1", "1/3", "4")
}

fn e5_samples() -> Vec<Params> {
    vec![
        shift_params("2", "1/3", "1/5", "1/2", "1/4", "1"),
        shift_params("17/2", "1", "1/2", "1/4", "1/8", "7"),
        shift_params("3", "1/2+1/3i", "1/8", "1", "1/6", "10"),
    ]
}

// ---- E6 ------------------------------------------------------------------

fn e6_domain(p: &Params) -> Result<()> {
    t1_domain(p)?;
    require(c_of(p)?.re_f64() > 0.0, "Re(a + alpha + gamma) > 0")
}

fn e6_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = k_ap(p, wp)?;
    let c = c_of(p)?.to_ap(wp);
    let q = hermite_tail_integral(&k, &c, wp)?;
    let v = &(&(-&c.pow(&k.add_i64(-1))?) + &c.pow(&k)?.checked_div(&k)?) - &q.value;
    Ok(RhsValue { value: v, quad_error: Some(q.error_estimate), subchecks: Vec::new() })
}

fn e6_defaults() -> Params {
    shift_params("26", "1", "1/100", "1", "1/100", "-2")
}

fn e6_samples() -> Vec<Params> {
    vec![
        shift_params("26", "1/2", "1/50", "1", "0", "-1"),
        shift_params("3", "1/2", "1/4", "1", "1/3", "5"),
        shift_params("28", "1", "0", "1/2", "1/100", "1/2+1/3i"),
    ]
}

// ---- E7 ------------------------------------------------------------------

/// Largest |k| for the Dirichlet-series case.
const E7_KMAX: f64 = 60.0;

fn e7_domain(p: &Params) -> Result<()> {
    shifts_domain(p, 1.0)?;
    let k = k_bounded(p, E7_KMAX)?;
    require(k.re > 1, "Re(k) > 1")?;
    let c = c_of(p)?;
    require(c.is_real(), "a + alpha + gamma is real")?;
    require(c.re > 0 && c.re <= 2, "0 < (a + alpha + gamma)/2 <= 1")
}

fn e7_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = k_ap(p, wp)?;
    let c = c_of(p)?.to_ap(wp);
    let pi_ap = ApComplex::pi(wp);
    let half_pi_arg = &(-&k).add_i64(1) * &pi_ap.div_i64(2);
    let (s1, c1) = (half_pi_arg.sin(), half_pi_arg.cos());
    let pic = &pi_ap * &c;
    let neg_k = -&k;
    let cfg = SumConfig { tol: 10f64.powi(-(wp as i32) + 5), max_diagonals: 200_000, wp, scale_floor_log10: 0.0 };
    let r = sum_single(
        |m| {
            let m = m as i64 + 1;
            let ang = pic.scale_i64(m);
            let br = &(&ang.cos() * &s1) + &(&c1 * &ang.sin());
            Ok(&ApComplex::from_i64(m, wp).pow(&neg_k)? * &br)
        },
        &cfg,
    )?;
    if !r.converged {
        return Err(Error::Convergence("Dirichlet series of the closed form did not converge".into()));
    }
    let pre = gamma(&k)?.scale_i64(-2).checked_div(&pi_ap.pow(&k)?)?;
    Ok(RhsValue::plain(&pre * &r.value))
}

fn e7_defaults() -> Params {
    shift_params("3/2", "1/4", "1/7", "-1/4", "1/11", "20")
}

fn e7_samples() -> Vec<Params> {
    vec![
        shift_params("3/2", "-1/4", "1/9", "1/4", "1/5", "16"),
        shift_params("1", "0", "0", "1/2", "0", "24"),
        shift_params("7/5", "1/4", "1/8", "0", "1/6", "18"),
    ]
}

// ---- E8 ------------------------------------------------------------------

fn e8_domain(p: &Params) -> Result<()> {
    shifts_domain(p, 0.5)
}

fn e8_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::e8_lhs(Shifts::read(p)?, cfg)
}

fn e8_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let a = p.ap("a", wp)?;
    let w = &(&a + &p.ap("alpha", wp)?.scale_i64(2)) + &p.ap("gamma", wp)?.scale_i64(2);
    let hi = polygamma(1, &w.scale_i64(3).div_i64(4))?;
    let lo = polygamma(1, &w.div_i64(4))?;
    Ok(RhsValue::plain((&hi - &lo).div_i64(2)))
}

fn e8_defaults() -> Params {
    shift_params("50", "1", "1/100", "1", "1/100", "-1").without("k")
}

fn e8_samples() -> Vec<Params> {
    vec![
        shift_params("52", "1/2", "1/50", "1", "0", "-1").without("k"),
        shift_params("56", "1", "0", "1/2", "1/100", "-1").without("k"),
        shift_params("60", "1/2", "1/100", "1/2", "1/100", "-1").without("k"),
    ]
}

// ---- E9 ------------------------------------------------------------------

/// Offset r in 8C − r.
pub const E9_OFFSET: (&str, &str) = (
    "75212337272621857920793935018753452980170388400522851847928913376",
    "10213049603314044640247750329701049140178779927760268106012748125",
);

pub fn e9_offset() -> Rational {
    let n: rug::Integer = E9_OFFSET.0.parse().expect("literal");
    let d: rug::Integer = E9_OFFSET.1.parse().expect("literal");
    Rational::from((n, d))
}

/// ½(ψ1(117/4) − ψ1(39/4)) = 8C − r, with r reduced exactly through
/// ψ1(z + 1) = ψ1(z) − 1/z².
pub fn e9_offset_exact() -> Rational {
    let mut s = Rational::new();
    for j in 0..29 {
        let z = Rational::from((1 + 4 * j, 4));
        s += (z.clone() * &z).recip();
    }
    for j in 0..9 {
        let z = Rational::from((3 + 4 * j, 4));
        s -= (z.clone() * &z).recip();
    }
    s / 2u32
}

fn e9_defaults() -> Params {
    Params::of(&[("a", "35"), ("alpha", "1"), ("beta", "1/4"), ("gamma", "1"), ("delta", "1/8")])
}

fn e9_lhs(_: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::e9_lhs(cfg)
}

fn e9_rhs(_: &Params, wp: u32) -> Result<RhsValue> {
    let r = e9_offset();
    let v = &catalan(wp)?.scale_i64(8) - &ApComplex::from_rational(&r, wp);
    Ok(RhsValue {
        value: v,
        quad_error: None,
        subchecks: vec![("exact rational offset equals r".into(), e9_offset_exact() == r)],
    })
}

// ---- D1 ------------------------------------------------------------------

fn d1_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::t1_lhs(Shifts::read(p)?, p.req("k")?.clone(), PochForm::Rewritten, cfg)
}

fn d1_defaults() -> Params {
    shift_params("3", "1/2", "1/4", "1", "1/3", "3")
}

fn d1_samples() -> Vec<Params> {
    vec![
        shift_params("24", "1/2", "1/100", "1", "1/50", "-1"),
        shift_params("2", "1/3", "1/5", "1/2", "1/4", "6"),
        shift_params("28", "1", "0", "1/2", "1/100", "1/2+1/3i"),
    ]
}

// ---- D2 ------------------------------------------------------------------

fn d2_domain(p: &Params) -> Result<()> {
    t1_domain(p)?;
    let k = p.req("k")?;
    require(!matches!(k.as_integer(), Some(v) if v > 0), "k is not a positive integer")
}

fn d2_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::d2_lhs(Shifts::read(p)?, p.req("k")?.clone(), cfg)
}

fn d2_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let k = k_ap(p, wp)?;
    let s = (-&k).add_i64(1);
    let hc = half_c(p, wp)?;
    let v = &hurwitz_zeta_ds(&s, &hc)? - &(&ln2_ap(wp) * &hurwitz_zeta(&s, &hc)?);
    Ok(RhsValue::plain(&two_pow(&k)? * &v))
}

fn d2_defaults() -> Params {
    shift_params("26", "1/2", "1/100", "1", "1/100", "-1/2")
}

fn d2_samples() -> Vec<Params> {
    vec![
        shift_params("28", "1", "0", "1", "1/100", "-1"),
        shift_params("28", "1/2", "1/100", "1/2", "0", "1/2"),
        shift_params("30", "1", "1/200", "1", "1/200", "1/2+1/3i"),
    ]
}

// ---- D3 / D4 ----------------------------------------------------------------

fn d3_domain(p: &Params) -> Result<()> {
    shifts_domain(p, 1.0)?;
    c_half_not_pole(p)
}

fn d3_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::d3_lhs(Shifts::read(p)?, cfg)
}

fn d3_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let hc = half_c(p, wp)?;
    let z = hurwitz_zeta_ds(&ApComplex::from_i64(2, wp), &hc)?;
    let v = &z - &(&ln2_ap(wp) * &polygamma(1, &hc)?);
    Ok(RhsValue::plain(v.div_i64(2)))
}

fn d4_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::d4_lhs(Shifts::read(p)?, cfg)
}

fn d4_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let hc = half_c(p, wp)?;
    let z = hurwitz_zeta_ds(&ApComplex::from_i64(3, wp), &hc)?;
    // (ln 4 − 1)/8
    let coef = ln2_ap(wp).scale_i64(2).add_i64(-1).div_i64(8);
    let v = &(-&z.div_i64(2)) - &(&coef * &polygamma(2, &hc)?);
    Ok(RhsValue::plain(v))
}

fn d34_defaults() -> Params {
    shift_params("26", "1/2", "1/100", "1", "1/100", "-1").without("k")
}

fn d34_samples() -> Vec<Params> {
    vec![
        shift_params("28", "1", "0", "1", "1/100", "-1").without("k"),
        shift_params("28", "1/2", "1/100", "1/2", "0", "-1").without("k"),
        shift_params("30", "1", "1/200", "1", "1/200", "-1").without("k"),
    ]
}

// ---- D5 ------------------------------------------------------------------

fn d5_defaults() -> Params {
    Params::of(&[("a", "22"), ("alpha", "1"), ("beta", "1/4"), ("gamma", "1"), ("delta", "1/3")])
}

fn d5_lhs(_: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::d5_lhs(cfg)
}

/// −ζ′(3)/2 + ¼ζ(3)(ln 4 − 1) and the six rational-logarithm terms.
pub fn d5_constant(wp: u32) -> Result<ApComplex> {
    let lg = |v: i64| ApComplex::from_i64(v, wp).ln();
    let frac = |n: &str, d: &str| -> ApComplex {
        let n: rug::Integer = n.parse().expect("literal");
        let d: rug::Integer = d.parse().expect("literal");
        ApComplex::from_rational(&Rational::from((n, d)), wp)
    };
    let three = ApComplex::from_i64(3, wp);
    let ln4m1 = lg(4)?.add_i64(-1);
    let mut v = -&riemann_zeta_ds(&three)?.div_i64(2);
    v += &(&riemann_zeta(&three)? * &ln4m1).div_i64(4);
    v -= &(&frac("289853", "3456000") * &lg(2)?);
    v -= &(&frac("259", "11664") * &lg(3)?);
    v -= &(&frac("25523438671457", "85200014592000") * &ln4m1);
    v -= &(&frac("9", "2000") * &lg(5)?);
    v -= &(&frac("1", "686") * &lg(7)?);
    v -= &(&frac("1", "2662") * &lg(11)?);
    Ok(v)
}

fn d5_rhs(_: &Params, wp: u32) -> Result<RhsValue> {
    Ok(RhsValue::plain(d5_constant(wp)?))
}

// ---- X1 / X2 -------------------------------------------------------------

fn x_params(x: &str, y: &str, z: &str) -> Params {
    Params::of(&[("x", x), ("y", y), ("z", z)])
}

fn x_domain(p: &Params) -> Result<()> {
    let x = p.req("x")?;
    let y = p.req("y")?;
    let z = p.req("z")?;
    require(z.re < 0, "Re(z) < 0")?;
    require(z.re_f64().exp() <= 0.99, "|e^z| <= 0.99")?;
    let c = x - y;
    if let Some(v) = c.as_integer() {
        require(v > 0, "x - y is not a nonpositive integer")?;
    }
    // |u|·max(e|y|, 1/π) < 1 with u = z·e^{−yz}
    let zy = y * z;
    let u = z.abs_f64() * (-zy.re_f64()).exp();
    let rate = u * (std::f64::consts::E * y.abs_f64()).max(std::f64::consts::FRAC_1_PI);
    require(rate < 1.0, "|z e^{-yz}| max(e|y|, 1/pi) < 1")
}

fn x1_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::x_lhs(Family::Euler, p.req("x")?, p.req("y")?, p.req("z")?, cfg)
}

fn x2_lhs(p: &Params, cfg: &SumConfig) -> Result<SumResult> {
    sm::x_lhs(Family::Bernoulli, p.req("x")?, p.req("y")?, p.req("z")?, cfg)
}

fn x_common(p: &Params, wp: u32) -> Result<(ApComplex, ApComplex, ApComplex)> {
    let c = (p.req("x")? - p.req("y")?).to_ap(wp);
    Ok((c, p.ap("y", wp)?, p.ap("z", wp)?))
}

fn x1_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let (c, y, z) = x_common(p, wp)?;
    let ez = z.exp();
    let f = hyp2f1_unit(&c, &-&ez)?;
    let first = (&(&z * &c).exp() * &f).scale_i64(2);
    let second = &c * &(&digamma(&c.div_i64(2))? - &digamma(&c.add_i64(1).div_i64(2))?);
    let v = (&(&y * &z).exp() * &(&first + &second)).checked_div(&(&z * &c))?;
    Ok(RhsValue::plain(v))
}

fn x2_rhs(p: &Params, wp: u32) -> Result<RhsValue> {
    let (c, y, z) = x_common(p, wp)?;
    let ez = z.exp();
    let c2 = c.square();
    let phi = lerch_phi(&ez, &ApComplex::from_i64(2, wp), &c)?;
    let f = hyp2f1_unit(&c, &ez)?;
    let inner = (&(&z * &c).exp() * &(&(&c2 * &phi) - &(&(&z * &c) * &f))).checked_div(&c2)?;
    let v = (&(&y * &z).exp() * &(&inner - &polygamma(1, &c)?)).checked_div(&z)?;
    Ok(RhsValue::plain(v))
}

fn x_defaults() -> Params {
    x_params("1/2", "0", "-1")
}

fn x_samples() -> Vec<Params> {
    vec![
        x_params("11/24", "1/8", "-1/2"),
        x_params("1", "-1/4", "-3/2"),
        x_params("5/4", "0", "-1"),
        x_params("7/12", "1/4", "-1/2"),
        x_params("1/4", "-1/4", "-1"),
        x_params("11/8", "1/8", "-3/2"),
    ]
}

// ---- registry -------------------------------------------------------------

static CASES: &[CaseSpec] = &[
    CaseSpec {
        id: "T1",
        description: "double Appell sum with shifted Bernoulli and Euler polynomials",
        formula: "sum_{n,p>=0} B_p(gamma+p*delta) E_n(alpha+n*beta) (a-n*beta-p*delta)^(k-n-p-2) [bracket] / ((k)_(1-n-p) n! p!) = -2^k zeta(1-k, (a+alpha+gamma)/2)",
        domain: T1_DOMAIN,
        fields: SHIFT_FIELDS,
        default_tol: 1e-30,
        fixed: false,
        defaults: t1_defaults,
        samples: t1_samples,
        check: t1_domain,
        lhs: t1_lhs,
        rhs: t1_closed,
    },
    CaseSpec {
        id: "T2",
        description: "single Euler-polynomial sum against a difference of Hurwitz zetas",
        formula: "sum_{n>=0} E_n(x+n*alpha) (-1)^(1+n) (1-k)_(n-1) / ((a-n*alpha)^(1-k+n) n!) = 2^(1+k) (zeta(-k,(1+a+x)/2) - zeta(-k,(a+x)/2)) / (k(k*alpha-a))",
        domain: "Re(a) >= 1 + |alpha|, |alpha| <= 1/2, Re(a+x) > 0, k not in {0, -1}, |k*alpha - a| >= 1e-6",
        fields: &["a", "alpha", "x", "k"],
        default_tol: 1e-30,
        fixed: false,
        defaults: t2_defaults,
        samples: t2_samples,
        check: t2_domain,
        lhs: t2_lhs,
        rhs: t2_rhs,
    },
    CaseSpec {
        id: "T3",
        description: "single Bernoulli-polynomial sum against one Hurwitz zeta",
        formula: "sum_{n>=0} (-1)^n (a-alpha*k) (1-k)_(n-1) (a-alpha*n)^(k-n-1) B_n(x+n*alpha)/n! = zeta(1-k, a+x)",
        domain: "Re(a) >= 1 + |alpha|, |alpha| <= 1/2, Re(a+x) > 0, k != 0",
        fields: &["a", "alpha", "x", "k"],
        default_tol: 1e-30,
        fixed: false,
        defaults: t3_defaults,
        samples: t3_samples,
        check: t3_domain,
        lhs: t3_lhs,
        rhs: t3_rhs,
    },
    CaseSpec {
        id: "E1",
        description: "T1 form at -k against a polygamma value",
        formula: "T1 summand with k -> -k = -2^(-k) (-1)^(-1-k) psi^(k)((a+alpha+gamma)/2) / k!",
        domain: "T1 shift constraints, integer 1 <= k <= 10",
        fields: SHIFT_FIELDS,
        default_tol: 1e-25,
        fixed: false,
        defaults: e1_defaults,
        samples: e1_samples,
        check: e1_domain,
        lhs: e1_lhs,
        rhs: e1_rhs,
    },
    CaseSpec {
        id: "E2",
        description: "T1 form with a, alpha, gamma scaled by q against a finite sum of Hurwitz zetas",
        formula: "T1 summand at (q*a, q*alpha, beta, q*gamma, delta, k) = -2^k q^(k-1) sum_{n<q} zeta(1-k, n/q + (a+alpha+gamma)/2)",
        domain: "T1 domain, integer 2 <= q <= 7",
        fields: &["a", "alpha", "beta", "gamma", "delta", "k", "q"],
        default_tol: 1e-25,
        fixed: false,
        defaults: e2_defaults,
        samples: e2_samples,
        check: e2_domain,
        lhs: e2_lhs,
        rhs: e2_rhs,
    },
    CaseSpec {
        id: "E3",
        description: "T1 against the integral representation of the Hurwitz zeta",
        formula: "T1 sum = -2^k / Gamma(1-k) int_0^inf x^(-k) e^(-x c/2) / (1-e^(-x)) dx, c = a+alpha+gamma",
        domain: "T1 domain, Re(k) < 0, Re(c) > 0",
        fields: SHIFT_FIELDS,
        default_tol: 1e-25,
        fixed: false,
        defaults: e3_defaults,
        samples: e3_samples,
        check: e3_domain,
        lhs: t1_lhs,
        rhs: e3_rhs,
    },
    CaseSpec {
        id: "E4",
        description: "T1 against a generalized harmonic number and Riemann zeta",
        formula: "T1 sum = -2^k (zeta(1-k) - H_(c/2-1)^(1-k)), c = a+alpha+gamma",
        domain: "T1 domain, c/2 not a nonpositive integer",
        fields: SHIFT_FIELDS,
        default_tol: 1e-25,
        fixed: false,
        defaults: e4_defaults,
        samples: e4_samples,
        check: e4_domain,
        lhs: t1_lhs,
        rhs: e4_rhs,
    },
    CaseSpec {
        id: "E5",
        description: "T1 at positive integer k against a Bernoulli polynomial value",
        formula: "T1 sum = (2^k/k) B_k((a+alpha+gamma)/2)",
        domain: "T1 shift constraints, integer 1 <= k <= 10",
        fields: SHIFT_FIELDS,
        default_tol: 1e-25,
        fixed: false,
        defaults: e5_defaults,
        samples: e5_samples,
        check: e5_domain,
        lhs: t1_lhs,
        rhs: e5_rhs,
    },
    CaseSpec {
        id: "E6",
        description: "T1 against the Hermite integral for the Hurwitz zeta",
        formula: "T1 sum = -c^(k-1) + c^k/k - int_0^inf 2^(1+k) (y^2+c^2/4)^((k-1)/2) sin((1-k) atan(2y/c)) / (e^(2 pi y)-1) dy",
        domain: "T1 domain, Re(c) > 0",
        fields: SHIFT_FIELDS,
        default_tol: 1e-25,
        fixed: false,
        defaults: e6_defaults,
        samples: e6_samples,
        check: e6_domain,
        lhs: t1_lhs,
        rhs: e6_rhs,
    },
    CaseSpec {
        id: "E7",
        description: "T1 against the Hurwitz Dirichlet series",
        formula: "T1 sum = -2 Gamma(k)/pi^k sum_{m>=1} m^(-k) (cos(m pi c) sin((1-k) pi/2) + cos((1-k) pi/2) sin(m pi c))",
        domain: "T1 shift constraints, Re(k) > 1, |k| <= 60, c = a+alpha+gamma real with 0 < c/2 <= 1",
        fields: SHIFT_FIELDS,
        default_tol: 1e-25,
        fixed: false,
        defaults: e7_defaults,
        samples: e7_samples,
        check: e7_domain,
        lhs: t1_lhs,
        rhs: e7_rhs,
    },
    CaseSpec {
        id: "E8",
        description: "difference of two k = -1 sums against a trigamma difference",
        formula: "sum_{n,p} [3-shift part + 2^(n+p+1) 1-shift part] / ((-1)_(1-n-p) n! p!) = (psi1(3(a+2alpha+2gamma)/4) - psi1((a+2alpha+2gamma)/4))/2",
        domain: "Re(a)/2 >= 1 + |beta| + |delta|, |beta| <= 1/2, |delta| <= 1/2",
        fields: SHIFT_FIELDS_NO_K,
        default_tol: 1e-25,
        fixed: false,
        defaults: e8_defaults,
        samples: e8_samples,
        check: e8_domain,
        lhs: e8_lhs,
        rhs: e8_rhs,
    },
    CaseSpec {
        id: "E9",
        description: "Catalan's constant from the E8 difference at fixed parameters",
        formula: "E8 sum at a=35, alpha=gamma=1, beta=1/4, delta=1/8 = 8C - r (r an explicit rational)",
        domain: "fixed parameters",
        fields: SHIFT_FIELDS_NO_K,
        default_tol: 1e-25,
        fixed: true,
        defaults: e9_defaults,
        samples: no_samples,
        check: no_check,
        lhs: e9_lhs,
        rhs: e9_rhs,
    },
    CaseSpec {
        id: "D1",
        description: "T1 with the reciprocal Pochhammer rewritten as a rising factorial",
        formula: "T1 summand with 1/(k)_(1-n-p) -> (-1)^(n+p+1) (1-k)_(n+p-1) = -2^k zeta(1-k, (a+alpha+gamma)/2)",
        domain: T1_DOMAIN,
        fields: SHIFT_FIELDS,
        default_tol: 1e-25,
        fixed: false,
        defaults: d1_defaults,
        samples: d1_samples,
        check: t1_domain,
        lhs: d1_lhs,
        rhs: t1_closed,
    },
    CaseSpec {
        id: "D2",
        description: "k-derivative of T1",
        formula: "d/dk of the D1 sum (with harmonic numbers H_(-k+n+p-1), H_(-k)) = 2^k (zeta'(1-k, c/2) - ln 2 zeta(1-k, c/2))",
        domain: "T1 domain, k not a positive integer",
        fields: SHIFT_FIELDS,
        default_tol: 1e-25,
        fixed: false,
        defaults: d2_defaults,
        samples: d2_samples,
        check: d2_domain,
        lhs: d2_lhs,
        rhs: d2_rhs,
    },
    CaseSpec {
        id: "D3",
        description: "k-derivative of T1 at k = -1",
        formula: "D2 sum at k = -1 (with H_(n+p)) = (zeta'(2, c/2) - ln 2 psi1(c/2))/2",
        domain: "Re(a) >= 1 + |beta| + |delta|, |beta| <= 1/2, |delta| <= 1/2",
        fields: SHIFT_FIELDS_NO_K,
        default_tol: 1e-25,
        fixed: false,
        defaults: d34_defaults,
        samples: d34_samples,
        check: d3_domain,
        lhs: d3_lhs,
        rhs: d3_rhs,
    },
    CaseSpec {
        id: "D4",
        description: "k-derivative of T1 at k = -2",
        formula: "D2 sum at k = -2 (with H_(n+p+1)) = -zeta'(3, c/2)/2 - (ln 4 - 1)/8 psi2(c/2)",
        domain: "Re(a) >= 1 + |beta| + |delta|, |beta| <= 1/2, |delta| <= 1/2",
        fields: SHIFT_FIELDS_NO_K,
        default_tol: 1e-25,
        fixed: false,
        defaults: d34_defaults,
        samples: d34_samples,
        check: d3_domain,
        lhs: d4_lhs,
        rhs: d4_rhs,
    },
    CaseSpec {
        id: "D5",
        description: "Apery's constant derivative from D4 at fixed parameters",
        formula: "D4 sum at a=22, alpha=gamma=1, beta=1/4, delta=1/3 = -zeta'(3)/2 + zeta(3)(ln 4 - 1)/4 - (six rational multiples of logarithms)",
        domain: "fixed parameters",
        fields: SHIFT_FIELDS_NO_K,
        default_tol: 1e-20,
        fixed: true,
        defaults: d5_defaults,
        samples: no_samples,
        check: no_check,
        lhs: d5_lhs,
        rhs: d5_rhs,
    },
    CaseSpec {
        id: "X1",
        description: "shifted Euler generating function at u = z e^(-yz), integrated form",
        formula: "sum_{n>=0} E_n(x+ny) u^n/(n+1)! = e^(yz)/(z c) (2 e^(zc) 2F1(1,c;c+1;-e^z) + c(psi(c/2) - psi((c+1)/2))), c = x-y",
        domain: "Re(z) < 0, |e^z| <= 0.99, |z e^(-yz)| max(e|y|, 1/pi) < 1, x-y not a nonpositive integer",
        fields: &["x", "y", "z"],
        default_tol: 1e-25,
        fixed: false,
        defaults: x_defaults,
        samples: x_samples,
        check: x_domain,
        lhs: x1_lhs,
        rhs: x1_rhs,
    },
    CaseSpec {
        id: "X2",
        description: "shifted Bernoulli generating function at u = z e^(-yz), integrated form",
        formula: "sum_{n>=0} B_n(x+ny) u^n/(n+1)! = e^(yz)/z (e^(zc)(c^2 Phi(e^z,2,c) - z c 2F1(1,c;c+1;e^z))/c^2 - psi1(c)), c = x-y",
        domain: "Re(z) < 0, |e^z| <= 0.99, |z e^(-yz)| max(e|y|, 1/pi) < 1, x-y not a nonpositive integer",
        fields: &["x", "y", "z"],
        default_tol: 1e-25,
        fixed: false,
        defaults: x_defaults,
        samples: x_samples,
        check: x_domain,
        lhs: x2_lhs,
        rhs: x2_rhs,
    },
];

/// Every registered case, in listing order.
pub fn cases() -> &'static [CaseSpec] {
    CASES
}

pub fn find_case(id: &str) -> Result<&'static CaseSpec> {
    CASES
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}
