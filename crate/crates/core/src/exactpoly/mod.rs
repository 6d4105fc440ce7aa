//! Exact Bernoulli and Euler polynomials over the rationals.
//!
//! Coefficients are built once from cached Bernoulli numbers and Euler
//! constant terms and evaluated either exactly (rational or Gaussian-rational
//! points) or by Horner's rule at a requested decimal precision.

mod cache;

use std::fmt;
use std::ops::{Add, Sub};

use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::specfun::{bits_for, ApComplex};

pub use cache::{
    bernoulli_high_water, binomial, with_bernoulli, with_binomial_row, with_euler_zero, BernoulliCache,
    BinomialCache, EulerZeroCache,
};

/// B_0 … B_n exactly.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    with_bernoulli(n, |b| b.to_vec())
}

pub fn bernoulli_number(n: usize) -> Rational {
    with_bernoulli(n, |b| b[n].clone())
}

/// Dense polynomial with rational coefficients; `coeffs[i]` multiplies x^i.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::new());
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::new(vec![])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// c·x^k
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::new(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| Rational::from(a * c)).collect())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Exact evaluation at a Gaussian-rational point.
    pub fn eval_exact(&self, z: &ExactComplex) -> ExactComplex {
        if z.is_real() {
            return ExactComplex::from(self.eval(&z.re));
        }
        let mut acc = ExactComplex::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * z;
            acc.re += c;
        }
        acc
    }

    /// Horner evaluation at `digits` decimal digits.
    ///
    /// Coefficients are rounded once. When the terms |c_i z^i| dwarf the
    /// result the evaluation is repeated with enough extra digits to cover
    /// the cancellation.
    pub fn eval_complex(&self, z: &ApComplex, digits: u32) -> ApComplex {
        let log_z = z.log10_abs();
        let log_terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| log10_rational(c) + if i == 0 { 0.0 } else { i as f64 * log_z })
            .fold(f64::NEG_INFINITY, f64::max);
        let growth = log_terms.max(0.0).ceil() as u32;
        let mut wp = digits + 10 + growth;
        loop {
            let v = self.horner_at(z, wp);
            let loss = log_terms - v.log10_abs();
            let needed = digits + 10 + loss.max(0.0).ceil() as u32;
            if v.is_zero() || needed <= wp || wp > digits + 10 + growth + 4000 {
                return v.with_prec(digits);
            }
            wp = needed + 5;
        }
    }

    fn horner_at(&self, z: &ApComplex, wp: u32) -> ApComplex {
        let zz = z.with_prec(wp);
        let b = bits_for(wp);
        let mut acc = ApComplex::zero(wp);
        for c in self.coeffs.iter().rev() {
            acc = &acc * &zz;
            acc = acc.add_real(&Float::with_val(b, c));
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Rational::from(c * i as u64))
                .collect(),
        )
    }

    /// p(c0 + c1·x), expanded exactly.
    pub fn compose_linear(&self, c0: &Rational, c1: &Rational) -> Poly {
        let lin = Poly::new(vec![c0.clone(), c1.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin) + Poly::constant(c.clone());
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![Rational::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        Poly::new(out)
    }
}

fn log10_rational(r: &Rational) -> f64 {
    let f = Float::with_val(64, r);
    f.abs().log10().to_f64()
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if *c < 0 { " - " } else { " + " })?;
            } else if *c < 0 {
                f.write_str("-")?;
            }
            let a = Rational::from(c.abs_ref());
            match i {
                0 => write!(f, "{a}")?,
                1 if a == 1 => f.write_str("x")?,
                1 => write!(f, "{a}*x")?,
                _ if a == 1 => write!(f, "x^{i}")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

/// B_n(x) = Σ_k C(n, k) B_k x^{n−k}.
pub fn bernoulli_poly(n: usize) -> Poly {
    with_bernoulli(n, |b| {
        with_binomial_row(n, |row| {
            let mut coeffs = vec![Rational::new(); n + 1];
            for k in 0..=n {
                if !b[k].is_zero() {
                    coeffs[n - k] = Rational::from(&b[k] * &row[k]);
                }
            }
            Poly::new(coeffs)
        })
    })
}

/// E_n(x) = Σ_k C(n, k) E_k(0) x^{n−k}.
pub fn euler_poly(n: usize) -> Poly {
    with_euler_zero(n, |e| {
        with_binomial_row(n, |row| {
            let mut coeffs = vec![Rational::new(); n + 1];
            for k in 0..=n {
                if !e[k].is_zero() {
                    coeffs[n - k] = Rational::from(&e[k] * &row[k]);
                }
            }
            Poly::new(coeffs)
        })
    })
}

pub fn eval_rational(p: &Poly, x: &Rational) -> Rational {
    p.eval(x)
}

pub fn eval_complex(p: &Poly, z: &ApComplex, prec: u32) -> ApComplex {
    p.eval_complex(z, prec)
}

pub fn diff_poly(p: &Poly) -> Poly {
    p.derivative()
}

pub fn factorial(n: usize) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

/// Exact Gaussian rational `re + im·i`; the representation of every
/// user-supplied parameter.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ExactComplex {
    pub re: Rational,
    pub im: Rational,
}

impl ExactComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        ExactComplex { re, im }
    }

    pub fn zero() -> Self {
        ExactComplex::default()
    }

    pub fn from_i64(v: i64) -> Self {
        ExactComplex::from(Rational::from(v))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ExactComplex::from(Rational::from((n, d)))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if !self.is_real() || *self.re.denom() != 1 {
            return None;
        }
        self.re.numer().to_i64()
    }

    pub fn to_ap(&self, digits: u32) -> ApComplex {
        ApComplex::from_rationals(&self.re, &self.im, digits)
    }

    pub fn scale(&self, c: &Rational) -> ExactComplex {
        ExactComplex { re: Rational::from(&self.re * c), im: Rational::from(&self.im * c) }
    }

    /// |z| as a double (for domain checks only).
    pub fn abs_f64(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    pub fn re_f64(&self) -> f64 {
        self.re.to_f64()
    }

    /// Parses `p/q`, decimals (`0.25`, `-1.5e-2`) and complex forms
    /// `re+imi`, `re-imi`, `imi`, `i`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err("empty number".into());
        }
        if let Some(body) = t.strip_suffix('i') {
            // split at the last sign that is not an exponent sign or leading
            let bytes = body.as_bytes();
            let mut split = None;
            for idx in (1..bytes.len()).rev() {
                let c = bytes[idx] as char;
                if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                    split = Some(idx);
                    break;
                }
            }
            let (re_s, im_s) = match split {
                Some(i) => (&body[..i], &body[i..]),
                None => ("0", body),
            };
            let im_s = match im_s {
                "" | "+" => "1",
                "-" => "-1",
                other => other,
            };
            return Ok(ExactComplex { re: parse_rational(re_s)?, im: parse_rational(im_s)? });
        }
        Ok(ExactComplex::from(parse_rational(&t)?))
    }
}

/// Exact rational from `p/q` or a decimal literal.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim().trim_start_matches('+');
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(n / d);
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|e| format!("bad exponent in `{s}`: {e}"))?),
        None => (s, 0),
    };
    let (neg, m) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa),
    };
    let (int_part, frac_part) = m.split_once('.').unwrap_or((m, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("not a number: `{s}`"));
    }
    let digits = format!("{int_part}{frac_part}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("not a number: `{s}`"));
    }
    let mut value = Rational::from(Integer::from_str_radix(&digits, 10).map_err(|e| e.to_string())?);
    let scale = exp - frac_part.len() as i32;
    let ten = Rational::from(Integer::from(Integer::u_pow_u(10, scale.unsigned_abs())));
    if scale >= 0 {
        value *= ten;
    } else {
        value /= ten;
    }
    Ok(if neg { -value } else { value })
}

impl From<Rational> for ExactComplex {
    fn from(re: Rational) -> Self {
        ExactComplex { re, im: Rational::new() }
    }
}

impl From<ExactComplex> for String {
    fn from(z: ExactComplex) -> String {
        z.to_string()
    }
}

impl TryFrom<String> for ExactComplex {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        ExactComplex::parse(&s)
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im = Rational::from(self.im.abs_ref());
        let sign = if self.im < 0 { '-' } else { '+' };
        if self.re.is_zero() {
            let s = if sign == '-' { "-" } else { "" };
            return write!(f, "{s}{im}i");
        }
        write!(f, "{}{sign}{im}i", self.re)
    }
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, o: &ExactComplex) -> ExactComplex {
        ExactComplex { re: Rational::from(&self.re + &o.re), im: Rational::from(&self.im + &o.im) }
    }
}

impl Sub<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, o: &ExactComplex) -> ExactComplex {
        ExactComplex { re: Rational::from(&self.re - &o.re), im: Rational::from(&self.im - &o.im) }
    }
}

impl std::ops::Mul<&ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, o: &ExactComplex) -> ExactComplex {
        if self.im.is_zero() && o.im.is_zero() {
            return ExactComplex::from(Rational::from(&self.re * &o.re));
        }
        let re = Rational::from(&self.re * &o.re) - Rational::from(&self.im * &o.im);
        let im = Rational::from(&self.re * &o.im) + Rational::from(&self.im * &o.re);
        ExactComplex { re, im }
    }
}

impl std::ops::Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex { re: Rational::from(-&self.re), im: Rational::from(-&self.im) }
    }
}
