//! Arbitrary-precision complex values on top of MPFR floats.
//!
//! Precision is tracked in bits inside the floats and exposed in decimal
//! digits. Binary operations produce the smaller of the two operand
//! precisions.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::{Float, Rational};

use crate::error::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Bits needed to carry `digits` decimal digits.
pub fn bits_for(digits: u32) -> u32 {
    (f64::from(digits) * LOG2_10).ceil() as u32 + 4
}

/// Decimal digits carried by `bits` bits (rounded down).
pub fn digits_for(bits: u32) -> u32 {
    (f64::from(bits.saturating_sub(4)) / LOG2_10).floor() as u32
}

pub fn pi(bits: u32) -> Float {
    Float::with_val(bits, Constant::Pi)
}

pub fn ln2(bits: u32) -> Float {
    Float::with_val(bits, Constant::Log2)
}

pub fn euler_gamma(bits: u32) -> Float {
    Float::with_val(bits, Constant::Euler)
}

#[derive(Clone, PartialEq)]
pub struct ApComplex {
    re: Float,
    im: Float,
}

impl ApComplex {
    pub fn new(re: Float, im: Float) -> Self {
        let bits = re.prec().min(im.prec());
        let mut out = ApComplex { re, im };
        out.set_bits(bits);
        out
    }

    pub fn from_real(re: Float) -> Self {
        let bits = re.prec();
        ApComplex { re, im: Float::new(bits) }
    }

    pub fn zero(digits: u32) -> Self {
        Self::from_i64(0, digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::from_i64(1, digits)
    }

    pub fn i(digits: u32) -> Self {
        let b = bits_for(digits);
        ApComplex { re: Float::new(b), im: Float::with_val(b, 1) }
    }

    pub fn from_i64(v: i64, digits: u32) -> Self {
        let b = bits_for(digits);
        ApComplex { re: Float::with_val(b, v), im: Float::new(b) }
    }

    pub fn from_f64(re: f64, im: f64, digits: u32) -> Self {
        let b = bits_for(digits);
        ApComplex { re: Float::with_val(b, re), im: Float::with_val(b, im) }
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        let b = bits_for(digits);
        ApComplex { re: Float::with_val(b, r), im: Float::new(b) }
    }

    pub fn from_rationals(re: &Rational, im: &Rational, digits: u32) -> Self {
        let b = bits_for(digits);
        ApComplex { re: Float::with_val(b, re), im: Float::with_val(b, im) }
    }

    pub fn pi(digits: u32) -> Self {
        Self::from_real(pi(bits_for(digits)))
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn into_parts(self) -> (Float, Float) {
        (self.re, self.im)
    }

    pub fn bits(&self) -> u32 {
        self.re.prec().min(self.im.prec())
    }

    /// Working precision in decimal digits.
    pub fn prec(&self) -> u32 {
        digits_for(self.bits())
    }

    fn set_bits(&mut self, bits: u32) {
        if self.re.prec() != bits {
            self.re.set_prec(bits);
        }
        if self.im.prec() != bits {
            self.im.set_prec(bits);
        }
    }

    /// Same value re-rounded (or zero-extended) to `digits` digits.
    pub fn with_prec(&self, digits: u32) -> Self {
        let mut out = self.clone();
        out.set_bits(bits_for(digits));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        ApComplex { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|² at the value's precision.
    pub fn norm_sqr(&self) -> Float {
        let b = self.bits();
        Float::with_val(b, self.re.square_ref()) + Float::with_val(b, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.bits(), self.re.hypot_ref(&self.im))
    }

    /// |z| as a double; saturates to 0 or infinity outside the f64 range.
    pub fn abs_f64(&self) -> f64 {
        let lo = Float::with_val(64, &self.re).hypot(&Float::with_val(64, &self.im));
        lo.to_f64()
    }

    /// log10 |z|, valid far outside the f64 exponent range; −inf at zero.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let lo = Float::with_val(64, &self.re).hypot(&Float::with_val(64, &self.im));
        lo.log10().to_f64()
    }

    pub fn arg(&self) -> Float {
        Float::with_val(self.bits(), self.im.atan2_ref(&self.re))
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        let b = self.bits();
        ApComplex { re: Float::with_val(b, &self.re * k), im: Float::with_val(b, &self.im * k) }
    }

    pub fn div_i64(&self, k: i64) -> Self {
        let b = self.bits();
        ApComplex { re: Float::with_val(b, &self.re / k), im: Float::with_val(b, &self.im / k) }
    }

    pub fn scale_real(&self, f: &Float) -> Self {
        let b = self.bits().min(f.prec());
        ApComplex { re: Float::with_val(b, &self.re * f), im: Float::with_val(b, &self.im * f) }
    }

    pub fn add_real(&self, f: &Float) -> Self {
        let b = self.bits().min(f.prec());
        ApComplex { re: Float::with_val(b, &self.re + f), im: Float::with_val(b, &self.im) }
    }

    pub fn add_i64(&self, k: i64) -> Self {
        let b = self.bits();
        ApComplex { re: Float::with_val(b, &self.re + k), im: self.im.clone() }
    }

    pub fn mul_i(&self) -> Self {
        ApComplex { re: -self.im.clone(), im: self.re.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Pole("reciprocal of zero".into()));
        }
        let b = self.bits();
        let n = self.norm_sqr();
        Ok(ApComplex {
            re: Float::with_val(b, &self.re / &n),
            im: Float::with_val(b, -Float::with_val(b, &self.im / &n)),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Pole("division by zero".into()));
        }
        Ok(self / other)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn exp(&self) -> Self {
        let b = self.bits();
        let m = Float::with_val(b, self.re.exp_ref());
        let (s, c) = Float::with_val(b, &self.im).sin_cos(Float::new(b));
        ApComplex { re: Float::with_val(b, &m * &c), im: m * s }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Pole("logarithm of zero".into()));
        }
        let b = self.bits();
        let re = if self.im.is_zero() {
            Float::with_val(b, self.re.abs_ref()).ln()
        } else {
            self.abs().ln()
        };
        Ok(ApComplex { re, im: self.arg() })
    }

    /// ln(1 + z) without cancellation for small |z|.
    pub fn ln_1p(&self) -> Result<Self> {
        let b = self.bits();
        let one_plus_re = Float::with_val(b, &self.re + 1u32);
        if one_plus_re.is_zero() && self.im.is_zero() {
            return Err(Error::Pole("logarithm of zero".into()));
        }
        // |1+z|² − 1 = 2x + x² + y²
        let t = Float::with_val(b, &self.re * 2u32)
            + Float::with_val(b, self.re.square_ref())
            + Float::with_val(b, self.im.square_ref());
        let re = t.ln_1p() / 2u32;
        let im = Float::with_val(b, self.im.atan2_ref(&one_plus_re));
        Ok(ApComplex { re, im })
    }

    pub fn sqrt(&self) -> Self {
        let b = self.bits();
        if self.is_zero() {
            return self.clone();
        }
        let r = self.abs();
        if self.re >= 0 {
            let t = (Float::with_val(b, &r + &self.re) / 2u32).sqrt();
            let im = Float::with_val(b, &self.im / &t) / 2u32;
            ApComplex { re: t, im }
        } else {
            let t = (Float::with_val(b, &r - &self.re) / 2u32).sqrt();
            let re = Float::with_val(b, self.im.abs_ref()) / &t / 2u32;
            let im = if self.im.is_sign_negative() { -t } else { t };
            ApComplex { re, im }
        }
    }

    pub fn sin(&self) -> Self {
        let b = self.bits();
        let (s, c) = Float::with_val(b, &self.re).sin_cos(Float::new(b));
        let (sh, ch) = Float::with_val(b, &self.im).sinh_cosh(Float::new(b));
        ApComplex { re: s * ch, im: c * sh }
    }

    pub fn cos(&self) -> Self {
        let b = self.bits();
        let (s, c) = Float::with_val(b, &self.re).sin_cos(Float::new(b));
        let (sh, ch) = Float::with_val(b, &self.im).sinh_cosh(Float::new(b));
        ApComplex { re: c * ch, im: -(s * sh) }
    }

    pub fn cot(&self) -> Result<Self> {
        self.cos().checked_div(&self.sin())
    }

    /// Principal arctangent, (i/2)·[ln(1 − iw) − ln(1 + iw)].
    pub fn atan(&self) -> Result<Self> {
        if self.im.is_zero() {
            let b = self.bits();
            return Ok(ApComplex::from_real(Float::with_val(b, self.re.atan_ref())));
        }
        let iw = self.mul_i();
        let d = &(-&iw).ln_1p()? - &iw.ln_1p()?;
        Ok(d.mul_i().div_i64(2))
    }

    /// z^n by repeated squaring.
    pub fn powi(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Ok(ApComplex::one(self.prec()).with_bits(self.bits()));
        }
        if self.is_zero() {
            return if n > 0 { Ok(self.clone()) } else { Err(Error::Pole("0 to a negative power".into())) };
        }
        let mut base = if n < 0 { self.recip()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc: Option<ApComplex> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        Ok(acc.expect("nonzero exponent"))
    }

    /// Exact small integer value, if the number is one.
    pub fn as_integer(&self) -> Option<i64> {
        if !self.im.is_zero() || !self.re.is_integer() {
            return None;
        }
        self.re.to_integer().and_then(|i| i.to_i64())
    }

    /// Principal power exp(s·ln z); integer exponents use repeated squaring.
    pub fn pow(&self, s: &Self) -> Result<Self> {
        if let Some(n) = s.as_integer() {
            if n.unsigned_abs() <= 1 << 20 {
                return self.powi(n);
            }
        }
        if self.is_zero() {
            return if s.re > 0 {
                Ok(self.clone())
            } else {
                Err(Error::Pole("0 raised to a power with Re(s) <= 0".into()))
            };
        }
        Ok((s * &self.ln()?).exp())
    }

    fn with_bits(mut self, bits: u32) -> Self {
        self.set_bits(bits);
        self
    }

    /// Decimal rendering: `re` when the imaginary part is exactly zero,
    /// otherwise `re+imi` / `re-imi`, each with `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        let d = digits.max(1) as usize;
        let re = fmt_float(&self.re, d);
        if self.im.is_zero() {
            return re;
        }
        let im = fmt_float(&Float::with_val(self.im.prec(), self.im.abs_ref()), d);
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        format!("{re}{sign}{im}i")
    }
}

fn fmt_float(f: &Float, digits: usize) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    f.to_string_radix(10, Some(digits))
}

impl fmt::Debug for ApComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ApComplex({})", self.to_decimal(self.prec().min(40)))
    }
}

impl fmt::Display for ApComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(self.prec()))
    }
}

impl Neg for &ApComplex {
    type Output = ApComplex;
    fn neg(self) -> ApComplex {
        ApComplex { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for ApComplex {
    type Output = ApComplex;
    fn neg(self) -> ApComplex {
        ApComplex { re: -self.re, im: -self.im }
    }
}

impl Add<&ApComplex> for &ApComplex {
    type Output = ApComplex;
    fn add(self, o: &ApComplex) -> ApComplex {
        let b = self.bits().min(o.bits());
        ApComplex { re: Float::with_val(b, &self.re + &o.re), im: Float::with_val(b, &self.im + &o.im) }
    }
}

impl Sub<&ApComplex> for &ApComplex {
    type Output = ApComplex;
    fn sub(self, o: &ApComplex) -> ApComplex {
        let b = self.bits().min(o.bits());
        ApComplex { re: Float::with_val(b, &self.re - &o.re), im: Float::with_val(b, &self.im - &o.im) }
    }
}

impl Mul<&ApComplex> for &ApComplex {
    type Output = ApComplex;
    fn mul(self, o: &ApComplex) -> ApComplex {
        let b = self.bits().min(o.bits());
        if self.im.is_zero() && o.im.is_zero() {
            return ApComplex { re: Float::with_val(b, &self.re * &o.re), im: Float::new(b) };
        }
        let ac = Float::with_val(b, &self.re * &o.re);
        let bd = Float::with_val(b, &self.im * &o.im);
        let ad = Float::with_val(b, &self.re * &o.im);
        let bc = Float::with_val(b, &self.im * &o.re);
        ApComplex { re: ac - bd, im: ad + bc }
    }
}

impl Div<&ApComplex> for &ApComplex {
    type Output = ApComplex;
    /// Division; a zero divisor yields non-finite parts (use `checked_div`).
    fn div(self, o: &ApComplex) -> ApComplex {
        let b = self.bits().min(o.bits());
        if o.im.is_zero() {
            return ApComplex {
                re: Float::with_val(b, &self.re / &o.re),
                im: Float::with_val(b, &self.im / &o.re),
            };
        }
        let n = o.norm_sqr();
        let re = Float::with_val(b, &self.re * &o.re) + Float::with_val(b, &self.im * &o.im);
        let im = Float::with_val(b, &self.im * &o.re) - Float::with_val(b, &self.re * &o.im);
        ApComplex { re: re / &n, im: im / &n }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ApComplex> for ApComplex {
            type Output = ApComplex;
            fn $m(self, o: ApComplex) -> ApComplex {
                (&self).$m(&o)
            }
        }
        impl $tr<&ApComplex> for ApComplex {
            type Output = ApComplex;
            fn $m(self, o: &ApComplex) -> ApComplex {
                (&self).$m(o)
            }
        }
        impl $tr<ApComplex> for &ApComplex {
            type Output = ApComplex;
            fn $m(self, o: ApComplex) -> ApComplex {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&ApComplex> for ApComplex {
    fn add_assign(&mut self, o: &ApComplex) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl AddAssign<ApComplex> for ApComplex {
    fn add_assign(&mut self, o: ApComplex) {
        *self += &o;
    }
}

impl SubAssign<&ApComplex> for ApComplex {
    fn sub_assign(&mut self, o: &ApComplex) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&ApComplex> for ApComplex {
    fn mul_assign(&mut self, o: &ApComplex) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &ApComplex, b: &ApComplex, digits: i32) -> bool {
        let d = (a - b).log10_abs();
        let scale = b.log10_abs().max(0.0);
        d - scale < -f64::from(digits)
    }

    #[test]
    fn field_arithmetic() {
        let z = ApComplex::from_f64(1.0, 1.0, 30);
        let w = &(&z * &z) - &z;
        assert!(close(&w, &ApComplex::from_f64(-1.0, 1.0, 30), 28));
        let q = &w / &z;
        assert!(close(&(&q * &z), &w, 28));
        assert!(ApComplex::zero(30).recip().is_err());
    }

    #[test]
    fn exp_ln_inverse() {
        let z = ApComplex::from_f64(0.3, -2.5, 60);
        let back = z.exp().ln().unwrap();
        assert!(close(&back, &z, 55));
        // e^{iπ} = −1
        let ipi = ApComplex::pi(60).mul_i();
        assert!(close(&ipi.exp(), &ApComplex::from_i64(-1, 60), 55));
    }

    #[test]
    fn ln_1p_small_argument() {
        let tiny = ApComplex::from_f64(1e-200, 1e-200, 40);
        let l = tiny.ln_1p().unwrap();
        // ln(1+z) = z − z²/2 + …; z² is far below the working precision.
        assert!(close(&l, &tiny, 35));
    }

    #[test]
    fn sqrt_branch() {
        let z = ApComplex::from_f64(-4.0, 0.0, 30);
        assert!(close(&z.sqrt(), &ApComplex::from_f64(0.0, 2.0, 30), 28));
        let w = ApComplex::from_f64(-3.0, -4.0, 30);
        let r = w.sqrt();
        assert!(close(&(&r * &r), &w, 28));
        assert!(r.re() > &0);
    }

    #[test]
    fn atan_matches_real_and_complex() {
        let one = ApComplex::one(50);
        let quarter_pi = ApComplex::pi(50).div_i64(4);
        assert!(close(&one.atan().unwrap(), &quarter_pi, 48));
        let z = ApComplex::from_f64(0.5, 0.25, 50);
        let t = z.atan().unwrap();
        let tan = t.sin().checked_div(&t.cos()).unwrap();
        assert!(close(&tan, &z, 45));
    }

    #[test]
    fn powers() {
        let z = ApComplex::from_f64(1.5, -0.5, 40);
        let p = z.powi(-7).unwrap();
        let q = z.pow(&ApComplex::from_i64(-7, 40)).unwrap();
        assert!(close(&p, &q, 38));
        let s = ApComplex::from_f64(0.5, 1.0 / 3.0, 40);
        let general = z.pow(&s).unwrap();
        let via = (&s * &z.ln().unwrap()).exp();
        assert!(close(&general, &via, 38));
        assert!(ApComplex::zero(30).powi(-1).is_err());
    }

    #[test]
    fn decimal_rendering() {
        let z = ApComplex::from_f64(0.5, -0.25, 30);
        let s = z.to_decimal(5);
        assert!(s.contains('-') && s.ends_with('i'), "{s}");
        assert_eq!(ApComplex::zero(30).to_decimal(5), "0");
    }
}
