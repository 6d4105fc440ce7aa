//! Left-hand sides: each function builds its summand and hands it to the
//! sum engine.  Polynomial factors, bases and brackets are formed exactly
//! and rounded once; powers, Pochhammer products and logarithms are the
//! only floating steps.

use rug::Rational;

use super::params::Params;
use super::sum::{sum_double, sum_single, SumConfig, SumResult};
use super::tables::{Family, ShiftedTable};
use crate::error::{Error, Result};
use crate::exactpoly::ExactComplex;
use crate::specfun::{gen_harmonic, pochhammer_int, recip_pochhammer_shift, ApComplex};

pub(crate) fn ex(v: i64) -> ExactComplex {
    ExactComplex::from_i64(v)
}

pub(crate) fn exq(n: i64, d: i64) -> ExactComplex {
    ExactComplex::ratio(n, d)
}

/// Reads the T1 symbols a, α, β, γ, δ.
pub(crate) struct Shifts {
    pub a: ExactComplex,
    pub alpha: ExactComplex,
    pub beta: ExactComplex,
    pub gamma: ExactComplex,
    pub delta: ExactComplex,
}

impl Shifts {
    pub fn read(p: &Params) -> Result<Self> {
        Ok(Shifts {
            a: p.req("a")?.clone(),
            alpha: p.req("alpha")?.clone(),
            beta: p.req("beta")?.clone(),
            gamma: p.req("gamma")?.clone(),
            delta: p.req("delta")?.clone(),
        })
    }

    /// a, α, γ multiplied by `q` (β and δ unchanged).
    pub fn scaled(&self, q: &Rational) -> Self {
        Shifts {
            a: self.a.scale(q),
            alpha: self.alpha.scale(q),
            beta: self.beta.clone(),
            gamma: self.gamma.scale(q),
            delta: self.delta.clone(),
        }
    }

    /// c = a + α + γ.
    pub fn c(&self) -> ExactComplex {
        &(&self.a + &self.alpha) + &self.gamma
    }

    fn tables(&self, wp: u32) -> (ShiftedTable, ShiftedTable) {
        (
            ShiftedTable::new(Family::Bernoulli, &self.gamma, &self.delta, wp),
            ShiftedTable::new(Family::Euler, &self.alpha, &self.beta, wp),
        )
    }

    /// a − nβ − pδ, exactly.
    fn base(&self, n: usize, p: usize) -> ExactComplex {
        let nb = self.beta.scale(&Rational::from(n as u64));
        let pd = self.delta.scale(&Rational::from(p as u64));
        &(&self.a - &nb) - &pd
    }

    /// δ(β(k² − k(n+p+1) + 2np + n + p) − a(k − n + p)) + (a − βn)(a + β(p − k)) + δ² p (k − n).
    fn bracket(&self, k: &ExactComplex, n: usize, p: usize) -> ExactComplex {
        let (a, b, d) = (&self.a, &self.beta, &self.delta);
        let ni = ex(n as i64);
        let pi = ex(p as i64);
        let k2 = k * k;
        let inner_b = &(&(&k2 - &(k * &ex((n + p + 1) as i64))) + &ex((2 * n * p + n + p) as i64)) * b;
        let inner_a = a * &(&(k - &ni) + &pi);
        let t1 = d * &(&inner_b - &inner_a);
        let t2 = &(a - &(b * &ni)) * &(a + &(b * &(&pi - k)));
        let t3 = &(&(d * d) * &pi) * &(k - &ni);
        &(&t1 + &t2) + &t3
    }
}

fn nonzero_base(base: &ExactComplex, n: usize, p: usize) -> Result<()> {
    if base.is_zero() {
        return Err(Error::Pole(format!("base a - n*beta - p*delta vanishes at n={n}, p={p}")));
    }
    Ok(())
}

/// base^{e} for an exact base and exponent k − shift.
fn power(base: &ApComplex, k: &ExactComplex, k_ap: &ApComplex, shift: i64) -> Result<ApComplex> {
    match k.as_integer() {
        Some(ki) => base.powi(ki - shift),
        None => base.pow(&k_ap.add_i64(-shift)),
    }
}

/// Which reciprocal-Pochhammer factor multiplies the T1 summand.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum PochForm {
    /// 1/(k)_{1−n−p}
    Reciprocal,
    /// (−1)^{n+p+1} (1 − k)_{n+p−1}
    Rewritten,
}

/// The T1 summand with the given shifts and k.
pub(crate) struct T1Summand {
    sh: Shifts,
    k: ExactComplex,
    k_ap: ApComplex,
    bt: ShiftedTable,
    et: ShiftedTable,
    poch: Vec<ApComplex>,
    form: PochForm,
    wp: u32,
}

impl T1Summand {
    pub fn new(sh: Shifts, k: ExactComplex, form: PochForm, wp: u32) -> Self {
        let (bt, et) = sh.tables(wp);
        let k_ap = k.to_ap(wp);
        T1Summand { sh, k, k_ap, bt, et, poch: Vec::new(), form, wp }
    }

    fn poch(&mut self, d: usize) -> Result<ApComplex> {
        while self.poch.len() <= d {
            let i = self.poch.len();
            let v = match self.form {
                PochForm::Reciprocal => recip_pochhammer_shift(&self.k_ap, i)?,
                PochForm::Rewritten => {
                    let one_minus_k = (-&self.k_ap).add_i64(1);
                    let v = pochhammer_int(&one_minus_k, i as i64 - 1)?;
                    if i.is_multiple_of(2) {
                        -v
                    } else {
                        v
                    }
                }
            };
            self.poch.push(v);
        }
        Ok(self.poch[d].clone())
    }

    pub fn term(&mut self, n: usize, p: usize) -> Result<ApComplex> {
        let d = n + p;
        let pf = self.poch(d)?;
        if pf.is_zero() {
            return Ok(ApComplex::zero(self.wp));
        }
        let base_x = self.sh.base(n, p);
        nonzero_base(&base_x, n, p)?;
        let base = base_x.to_ap(self.wp);
        let pw = power(&base, &self.k, &self.k_ap, d as i64 + 2)?;
        let br = self.sh.bracket(&self.k, n, p).to_ap(self.wp);
        let be = self.bt.get(p) * self.et.get(n);
        Ok(&(&(&be * &pw) * &pf) * &br)
    }
}

pub(crate) fn t1_lhs(sh: Shifts, k: ExactComplex, form: PochForm, cfg: &SumConfig) -> Result<SumResult> {
    let mut s = T1Summand::new(sh, k, form, cfg.wp);
    sum_double(|n, p| s.term(n, p), cfg)
}

/// Cached H_{z}^{(1)} values indexed by d for z = z0 + d.
struct HarmonicRow {
    z0: ApComplex,
    vals: Vec<ApComplex>,
}

impl HarmonicRow {
    fn new(z0: ApComplex) -> Self {
        HarmonicRow { z0, vals: Vec::new() }
    }

    fn get(&mut self, d: usize) -> Result<ApComplex> {
        if self.vals.is_empty() {
            let one = ApComplex::one(self.z0.prec());
            self.vals.push(gen_harmonic(&self.z0, &one)?);
        }
        while self.vals.len() <= d {
            // H_{z+1} = H_z + 1/(z+1)
            let i = self.vals.len() as i64;
            let step = self.z0.add_i64(i).recip()?;
            let next = &self.vals[self.vals.len() - 1] + &step;
            self.vals.push(next);
        }
        Ok(self.vals[d].clone())
    }
}

/// ∂/∂k of the T1 sum, summed term by term.
pub(crate) fn d2_lhs(sh: Shifts, k: ExactComplex, cfg: &SumConfig) -> Result<SumResult> {
    let wp = cfg.wp;
    let k_ap = k.to_ap(wp);
    let (mut bt, mut et) = sh.tables(wp);
    let one_minus_k = (-&k_ap).add_i64(1);
    let mut h_shift = HarmonicRow::new((-&k_ap).add_i64(-1));
    let h_minus_k = gen_harmonic(&-&k_ap, &ApComplex::one(wp))?;
    let a_bd = (&sh.a * &(&sh.beta + &sh.delta)).to_ap(wp);
    let mut poch: Vec<ApComplex> = Vec::new();
    sum_double(
        |n, p| {
            let d = n + p;
            while poch.len() <= d {
                let i = poch.len() as i64;
                poch.push(pochhammer_int(&one_minus_k, i - 1)?);
            }
            let base_x = sh.base(n, p);
            nonzero_base(&base_x, n, p)?;
            let base = base_x.to_ap(wp);
            let pw = power(&base, &k, &k_ap, d as i64 + 2)?;
            let br = sh.bracket(&k, n, p).to_ap(wp);
            let logs = &(&base.ln()? - &h_shift.get(d)?) + &h_minus_k;
            // βδ(−2k + n + p + 1) − β²n − δ²p
            let bd = &sh.beta * &sh.delta;
            let lin = &(&(&bd * &(&ex((d + 1) as i64) - &k.scale(&Rational::from(2)))) - &(&(&sh.beta * &sh.beta) * &ex(n as i64)))
                - &(&(&sh.delta * &sh.delta) * &ex(p as i64));
            let mut inner = &a_bd - &(&br * &logs);
            inner += &lin.to_ap(wp);
            let mut t = &(&(bt.get(p) * et.get(n)) * &poch[d]) * &(&pw * &inner);
            if d % 2 == 1 {
                t = -t;
            }
            Ok(t)
        },
        cfg,
    )
}

/// The k = −1 derivative identity (trigamma and ζ′(2, ·)), summed in combined form.
pub(crate) fn d3_lhs(sh: Shifts, cfg: &SumConfig) -> Result<SumResult> {
    let wp = cfg.wp;
    let (mut bt, mut et) = sh.tables(wp);
    let mut h = HarmonicRow::new(ApComplex::zero(wp));
    let mut fact = vec![ApComplex::one(wp)];
    let (a, b, dl) = (&sh.a, &sh.beta, &sh.delta);
    sum_double(
        |n, p| {
            let d = n + p;
            while fact.len() <= d {
                let i = fact.len() as i64;
                let prev = fact[fact.len() - 1].clone();
                fact.push(prev.scale_i64(i));
            }
            let base_x = sh.base(n, p);
            nonzero_base(&base_x, n, p)?;
            let base = base_x.to_ap(wp);
            let pw = base.powi(-(d as i64) - 3)?;
            let (ni, pi) = (ex(n as i64), ex(p as i64));
            let n1 = ex(n as i64 + 1);
            let p1 = ex(p as i64 + 1);
            // A = (a − βn)(a + β + βp) + aδ(n − p + 1) + 2βδ(n+1)(p+1) − δ²(n+1)p
            let amb = a - &(b * &ni);
            let big_a = &(&(&(&amb * &(&(a + b) + &(b * &pi))) + &(&(a * dl) * &ex(n as i64 - p as i64 + 1)))
                + &(&(&(b * dl) * &ex(2)) * &(&n1 * &p1)))
                - &(&(dl * dl) * &(&n1 * &pi));
            // rest = −δ(a(n − p) + β(2np + n + p − 1)) − (a − βn)(a + βp) + δ²np
            let rest = &(&(-&(dl * &(&(a * &ex(n as i64 - p as i64)) + &(b * &ex((2 * n * p + n + p) as i64 - 1)))))
                - &(&amb * &(a + &(b * &pi))))
                + &(&(dl * dl) * &ex((n * p) as i64));
            let logs = &h.get(d)? - &base.ln()?;
            let inner = &(&big_a.to_ap(wp) * &logs) + &rest.to_ap(wp);
            let mut t = &(&(bt.get(p) * et.get(n)) * &fact[d]) * &(&pw * &inner);
            if d % 2 == 1 {
                t = -t;
            }
            Ok(t)
        },
        cfg,
    )
}

/// The k = −2 derivative identity (tetragamma and ζ′(3, ·)), summed in combined form.
pub(crate) fn d4_lhs(sh: Shifts, cfg: &SumConfig) -> Result<SumResult> {
    let wp = cfg.wp;
    let (mut bt, mut et) = sh.tables(wp);
    let mut h = HarmonicRow::new(ApComplex::one(wp));
    let mut fact = vec![ApComplex::one(wp)];
    let (a, b, dl) = (&sh.a, &sh.beta, &sh.delta);
    sum_double(
        |n, p| {
            let d = n + p;
            // fact[d] = (d+1)!
            while fact.len() <= d {
                let i = fact.len() as i64 + 1;
                let prev = fact[fact.len() - 1].clone();
                fact.push(prev.scale_i64(i));
            }
            let base_x = sh.base(n, p);
            nonzero_base(&base_x, n, p)?;
            let base = base_x.to_ap(wp);
            let pw = base.powi(-(d as i64) - 4)?;
            let (ni, pi) = (ex(n as i64), ex(p as i64));
            let amb = a - &(b * &ni);
            // A4 = δ(a(n − p + 2) + β(2np + 3n + 3p + 6)) + (a − βn)(a + β(p + 2)) − δ²(n + 2)p
            let a4 = &(&(dl * &(&(a * &ex(n as i64 - p as i64 + 2)) + &(b * &ex((2 * n * p + 3 * n + 3 * p + 6) as i64))))
                + &(&amb * &(a + &(b * &ex(p as i64 + 2)))))
                - &(&(dl * dl) * &(&ex(n as i64 + 2) * &pi));
            // rest = δ(a(n − p + 1) + β + 2β(np + n + p)) + (a − βn)(a + β + βp) − δ²(n + 1)p
            let rest = &(&(dl * &(&(&(a * &ex(n as i64 - p as i64 + 1)) + b) + &(b * &ex(2 * (n * p + n + p) as i64))))
                + &(&amb * &(&(a + b) + &(b * &pi))))
                - &(&(dl * dl) * &(&ex(n as i64 + 1) * &pi));
            let logs = &h.get(d)? - &base.ln()?;
            let inner = &rest.to_ap(wp) - &(&a4.to_ap(wp) * &logs);
            let mut t = &(&(bt.get(p) * et.get(n)) * &fact[d]) * &(&pw * &inner);
            if d % 2 == 1 {
                t = -t;
            }
            Ok(t)
        },
        cfg,
    )
}

/// The trigamma difference identity (k = −1 at a/2 minus 3a/2), summed in combined form.
pub(crate) fn e8_lhs(sh: Shifts, cfg: &SumConfig) -> Result<SumResult> {
    let wp = cfg.wp;
    let (mut b1, mut e1) = sh.tables(wp);
    let sh3 = Shifts { a: sh.a.clone(), ..sh.scaled(&Rational::from(3)) };
    let (mut b3, mut e3) = sh3.tables(wp);
    let k_ap = ApComplex::from_i64(-1, wp);
    let mut rp: Vec<ApComplex> = Vec::new();
    let (a, b, dl) = (&sh.a, &sh.beta, &sh.delta);
    let a32 = a.scale(&Rational::from((3, 2)));
    let two = ApComplex::from_i64(2, wp);
    sum_double(
        |n, p| {
            let d = n + p;
            while rp.len() <= d {
                rp.push(recip_pochhammer_shift(&k_ap, rp.len())?);
            }
            let (ni, pi) = (ex(n as i64), ex(p as i64));
            let (n1, p1) = (ex(n as i64 + 1), ex(p as i64 + 1));
            // first: −(3a/2 − βn)(3a/2 + β + βp) − (3/2)aδ(n − p + 1) − 2βδ(n+1)(p+1) + δ²(n+1)p
            let f1 = &(&(&(-&(&(&a32 - &(b * &ni)) * &(&(&a32 + b) + &(b * &pi))))
                - &(&(&a32 * dl) * &ex(n as i64 - p as i64 + 1)))
                - &(&(&(b * dl) * &ex(2)) * &(&n1 * &p1)))
                + &(&(dl * dl) * &(&n1 * &pi));
            let base1 = &(&a32 - &(b * &ni)) - &(dl * &pi);
            nonzero_base(&base1, n, p)?;
            let pw1 = base1.to_ap(wp).powi(-(d as i64) - 3)?;
            // second: (a − 2βn)(a + 2β(p+1)) + 2aδ(n − p + 1) + 8βδ(n+1)(p+1) − 4δ²(n+1)p
            let f2 = &(&(&(&(a - &(&(b * &ni) * &ex(2))) * &(a + &(&(b * &p1) * &ex(2))))
                + &(&(a * dl) * &ex(2 * (n as i64 - p as i64 + 1))))
                + &(&(&(b * dl) * &ex(8)) * &(&n1 * &p1)))
                - &(&(&(dl * dl) * &ex(4)) * &(&n1 * &pi));
            let base2 = a - &(&(&(b * &ni) + &(dl * &pi)) * &ex(2));
            nonzero_base(&base2, n, p)?;
            let pw2 = base2.to_ap(wp).powi(-(d as i64) - 3)?;
            let first = &(b3.get(p) * e3.get(n)) * &(&f1.to_ap(wp) * &pw1);
            let second = &(&(b1.get(p) * e1.get(n)) * &(&f2.to_ap(wp) * &pw2)) * &two.powi(d as i64 + 1)?;
            Ok(&(&first + &second) * &rp[d])
        },
        cfg,
    )
}

/// E9: the Catalan case with its literal constants.
pub(crate) fn e9_lhs(cfg: &SumConfig) -> Result<SumResult> {
    let wp = cfg.wp;
    let mut b3 = ShiftedTable::new(Family::Bernoulli, &ex(3), &exq(1, 8), wp);
    let mut e3 = ShiftedTable::new(Family::Euler, &ex(3), &exq(1, 4), wp);
    let mut b1 = ShiftedTable::new(Family::Bernoulli, &ex(1), &exq(1, 8), wp);
    let mut e1 = ShiftedTable::new(Family::Euler, &ex(1), &exq(1, 4), wp);
    let minus_one = ApComplex::from_i64(-1, wp);
    let eight = ApComplex::from_i64(8, wp);
    let mut rp: Vec<ApComplex> = Vec::new();
    sum_double(
        |n, p| {
            let d = n + p;
            while rp.len() <= d {
                rp.push(recip_pochhammer_shift(&minus_one, rp.len())?);
            }
            let (ni, pi) = (n as i64, p as i64);
            let base1 = 420 - 2 * ni - pi;
            let base2 = 140 - 2 * ni - pi;
            if base1 == 0 || base2 == 0 {
                return Err(Error::Pole(format!("zero base at n={n}, p={p}")));
            }
            let w1 = ni * (pi + 420) - 423 * pi - 177_664;
            let w2 = ni * (pi + 140) - 143 * pi - 20_024;
            let t1 = &(b3.get(p) * e3.get(n)) * &ApComplex::from_i64(base1, wp).powi(-(d as i64) - 3)?.scale_i64(w1);
            let t2 = &(b1.get(p) * e1.get(n)) * &ApComplex::from_i64(base2, wp).powi(-(d as i64) - 3)?.scale_i64(w2);
            Ok(&(&(&t1 - &t2) * &rp[d]) * &eight.powi(d as i64 + 1)?)
        },
        cfg,
    )
}

/// D5: the ζ′(3) case with its literal constants.
pub(crate) fn d5_lhs(cfg: &SumConfig) -> Result<SumResult> {
    let wp = cfg.wp;
    let mut bt = ShiftedTable::new(Family::Bernoulli, &ex(1), &exq(1, 3), wp);
    let mut et = ShiftedTable::new(Family::Euler, &ex(1), &exq(1, 4), wp);
    let mut h = HarmonicRow::new(ApComplex::one(wp));
    let mut fact = vec![ApComplex::one(wp)];
    let twelve = ApComplex::from_i64(12, wp);
    sum_double(
        |n, p| {
            let d = n + p;
            while fact.len() <= d {
                let i = fact.len() as i64 + 1;
                let prev = fact[fact.len() - 1].clone();
                fact.push(prev.scale_i64(i));
            }
            let (ni, pi) = (n as i64, p as i64);
            let base = 264 - 3 * ni - 4 * pi;
            if base == 0 {
                return Err(Error::Pole(format!("zero base at n={n}, p={p}")));
            }
            // 22 − n/4 − p/3 = base/12
            let log_arg = ExactComplex::new(Rational::from((base, 12)), Rational::new()).to_ap(wp);
            let c_h = ni * (pi - 282) + 260 * pi - 73_464;
            let c_log = -ni * pi + 282 * ni - 260 * pi + 73_464;
            let c0 = -ni * pi + 279 * ni - 256 * pi + 71_556;
            let mut inner = h.get(d)?.scale_i64(c_h);
            inner += &log_arg.ln()?.scale_i64(c_log);
            inner = inner.add_i64(c0);
            let pw = ApComplex::from_i64(base, wp).powi(-(d as i64) - 4)?;
            let mut t = &(&(bt.get(p) * et.get(n)) * &fact[d]) * &(&(&pw * &twelve.powi(d as i64 + 2)?) * &inner);
            if d % 2 == 1 {
                t = -t;
            }
            Ok(t)
        },
        cfg,
    )
}

/// Σ E_n(x + nα)(−1)^{1+n}(1 − k)_{n−1} / ((a − nα)^{1−k+n} n!).
pub(crate) fn t2_lhs(a: &ExactComplex, alpha: &ExactComplex, x: &ExactComplex, k: &ExactComplex, cfg: &SumConfig) -> Result<SumResult> {
    let wp = cfg.wp;
    let k_ap = k.to_ap(wp);
    let one_minus_k = (-&k_ap).add_i64(1);
    let mut et = ShiftedTable::new(Family::Euler, x, alpha, wp);
    sum_single(
        |n| {
            let base_x = a - &alpha.scale(&Rational::from(n as u64));
            nonzero_base(&base_x, n, 0)?;
            let base = base_x.to_ap(wp);
            // (a − nα)^{−(1 − k + n)} = base^{k − (n + 1)}
            let pw = power(&base, k, &k_ap, n as i64 + 1)?;
            let poch = pochhammer_int(&one_minus_k, n as i64 - 1)?;
            if poch.is_zero() {
                return Ok(ApComplex::zero(wp));
            }
            let t = &(et.get(n) * &poch) * &pw;
            Ok(if n % 2 == 0 { -t } else { t })
        },
        cfg,
    )
}

/// Σ (−1)^n (a − αk)(1 − k)_{n−1}(a − αn)^{k−n−1} B_n(x + nα)/n!.
pub(crate) fn t3_lhs(a: &ExactComplex, alpha: &ExactComplex, x: &ExactComplex, k: &ExactComplex, cfg: &SumConfig) -> Result<SumResult> {
    let wp = cfg.wp;
    let k_ap = k.to_ap(wp);
    let one_minus_k = (-&k_ap).add_i64(1);
    let pref = (a - &(alpha * k)).to_ap(wp);
    let mut bt = ShiftedTable::new(Family::Bernoulli, x, alpha, wp);
    sum_single(
        |n| {
            let base_x = a - &alpha.scale(&Rational::from(n as u64));
            nonzero_base(&base_x, n, 0)?;
            let base = base_x.to_ap(wp);
            let pw = power(&base, k, &k_ap, n as i64 + 1)?;
            let poch = pochhammer_int(&one_minus_k, n as i64 - 1)?;
            if poch.is_zero() {
                return Ok(ApComplex::zero(wp));
            }
            let t = &(&(bt.get(n) * &poch) * &pw) * &pref;
            Ok(if n % 2 == 1 { -t } else { t })
        },
        cfg,
    )
}

/// Σ z^n e^{−nyz} P_n(x + ny)/(n + 1)!.
pub(crate) fn x_lhs(family: Family, x: &ExactComplex, y: &ExactComplex, z: &ExactComplex, cfg: &SumConfig) -> Result<SumResult> {
    let wp = cfg.wp;
    let zap = z.to_ap(wp);
    let u = &zap * &(-&(&y.to_ap(wp) * &zap)).exp();
    let mut table = ShiftedTable::new(family, x, y, wp);
    let mut un = ApComplex::one(wp);
    sum_single(
        |n| {
            if n > 0 {
                un = &un * &u;
            }
            Ok((&un * table.get(n)).div_i64(n as i64 + 1))
        },
        cfg,
    )
}
