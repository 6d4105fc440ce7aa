//! Truncated power series in z over the rationals, and exact coefficient
//! checks of the Bernoulli/Euler generating functions.

use std::fmt;

use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{bernoulli_poly, euler_poly, factorial};

/// Coefficients of z^0 … z^{order−1}.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series of the given order; missing coefficients are zero, extra ones
    /// are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::new());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Series::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::from(1), order)
    }

    /// c·z.
    pub fn var(c: Rational, order: usize) -> Self {
        Series::new(vec![Rational::new(), c], order)
    }

    /// Σ z^n/n!·c^n, i.e. e^{cz}.
    pub fn exp_linear(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut t = Rational::from(1);
        for n in 0..order {
            coeffs.push(t.clone());
            t *= c;
            t /= n as u64 + 1;
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeff_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.coeffs[i]
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn same_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| Rational::from(a + b)).collect();
        Ok(Series { coeffs })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| Rational::from(a - b)).collect();
        Ok(Series { coeffs })
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::new(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += Rational::from(a * b);
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| Rational::from(a * c)).collect() }
    }

    /// exp of a series with zero constant term: n·b_n = Σ_{k=1}^n k·a_k·b_{n−k}.
    pub fn exp(&self) -> Result<Series> {
        let n = self.order();
        if n > 0 && !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp needs a zero constant term".into()));
        }
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        if n == 0 {
            return Ok(Series { coeffs: b });
        }
        b.push(Rational::from(1));
        for m in 1..n {
            let mut acc = Rational::new();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += Rational::from(&self.coeffs[k] * &b[m - k]) * k as u64;
                }
            }
            acc /= m as u64;
            b.push(acc);
        }
        Ok(Series { coeffs: b })
    }

    /// Multiplicative inverse: b_0 = 1/a_0, b_n = −(1/a_0) Σ_{k=1}^n a_k b_{n−k}.
    pub fn recip(&self) -> Result<Series> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::Precondition("reciprocal needs a nonzero constant term".into()));
        }
        let inv0 = Rational::from(self.coeffs[0].recip_ref());
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        b.push(inv0.clone());
        for m in 1..n {
            let mut acc = Rational::new();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += Rational::from(&self.coeffs[k] * &b[m - k]);
                }
            }
            acc *= &inv0;
            b.push(-acc);
        }
        Ok(Series { coeffs: b })
    }

    /// self^n by repeated squaring.
    pub fn pow(&self, n: u32) -> Series {
        let mut acc = Series::one(self.order());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("equal orders");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("equal orders");
            }
        }
        acc
    }

    /// f(g(z)) for g with zero constant term (Horner in g).
    pub fn compose(&self, g: &Series) -> Result<Series> {
        self.same_order(g)?;
        if g.order() > 0 && !g.coeffs[0].is_zero() {
            return Err(Error::Precondition("composition needs g(0) = 0".into()));
        }
        let mut acc = Series::zero(self.order());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

/// Generating functions checked by `gf_check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GfKind {
    BernoulliPlain,
    EulerPlain,
    BernoulliAppell,
    EulerAppell,
}

impl GfKind {
    pub const ALL: [GfKind; 4] =
        [GfKind::BernoulliPlain, GfKind::EulerPlain, GfKind::BernoulliAppell, GfKind::EulerAppell];

    pub fn name(self) -> &'static str {
        match self {
            GfKind::BernoulliPlain => "bernoulli_plain",
            GfKind::EulerPlain => "euler_plain",
            GfKind::BernoulliAppell => "bernoulli_appell",
            GfKind::EulerAppell => "euler_appell",
        }
    }

    fn is_appell(self) -> bool {
        matches!(self, GfKind::BernoulliAppell | GfKind::EulerAppell)
    }

    fn is_bernoulli(self) -> bool {
        matches!(self, GfKind::BernoulliPlain | GfKind::BernoulliAppell)
    }
}

/// How the shifted sums are read: u is replaced by z·e^{−yz} on the left,
/// so both sides are compared as series in z.
pub const GF_READING: &str = "LHS = sum_{n<order} P_n(x+ny) u^n/n! with u = z*exp(-y*z); both sides compared as series in z";

/// Outcome of one exact generating-function comparison.
#[derive(Debug, Clone, Serialize)]
pub struct GfReport {
    pub kind: GfKind,
    pub x: String,
    pub y: String,
    pub order: usize,
    pub equal: bool,
    pub first_mismatch: Option<usize>,
    pub reading: &'static str,
}

/// Left side Σ_{n<order} P_n(x+ny) u^n / n!, with u = z e^{−yz}
/// (u = z and y = 0 for the plain kinds).
pub fn gf_lhs(kind: GfKind, x: &Rational, y: &Rational, order: usize) -> Series {
    let y = if kind.is_appell() { y.clone() } else { Rational::new() };
    let u = Series::var(Rational::from(1), order)
        .mul(&Series::exp_linear(&-y.clone(), order))
        .expect("equal orders");
    let mut acc = Series::zero(order);
    let mut un = Series::one(order);
    for n in 0..order {
        let poly = if kind.is_bernoulli() { bernoulli_poly(n) } else { euler_poly(n) };
        let arg = x + Rational::from(&y * n as u64);
        let c = poly.eval(&arg) / Rational::from(factorial(n));
        acc = acc.add(&un.scale(&c)).expect("equal orders");
        un = un.mul(&u).expect("equal orders");
    }
    acc
}

/// Closed forms: z e^{xz}/(e^z − 1) and 2e^{xz}/(e^z + 1), each divided by
/// (1 − yz) for the Appell kinds.
pub fn gf_rhs(kind: GfKind, x: &Rational, y: &Rational, order: usize) -> Series {
    let exz = Series::exp_linear(x, order);
    let base = if kind.is_bernoulli() {
        // (e^z − 1)/z = Σ z^n/(n+1)!
        let mut c = Vec::with_capacity(order);
        let mut f = Integer::from(1);
        for n in 0..order {
            f *= n as u64 + 1;
            c.push(Rational::from((Integer::from(1), f.clone())));
        }
        let d = Series::new(c, order).recip().expect("unit constant term");
        exz.mul(&d).expect("equal orders")
    } else {
        let mut ez1 = Series::exp_linear(&Rational::from(1), order);
        if order > 0 {
            *ez1.coeff_mut(0) += 1;
        }
        let d = ez1.recip().expect("constant term 2");
        exz.mul(&d).expect("equal orders").scale(&Rational::from(2))
    };
    if kind.is_appell() && order > 0 {
        let one_minus_yz = Series::new(vec![Rational::from(1), -y.clone()], order);
        base.mul(&one_minus_yz.recip().expect("unit constant term")).expect("equal orders")
    } else {
        base
    }
}

/// Compares both sides coefficient by coefficient.  `mutate` adds 1 to the
/// left-hand coefficient at that index first (self-test of the comparison).
pub fn gf_check_with(kind: GfKind, x: &Rational, y: &Rational, order: usize, mutate: Option<usize>) -> GfReport {
    let mut lhs = gf_lhs(kind, x, y, order);
    if let Some(i) = mutate {
        if i < order {
            *lhs.coeff_mut(i) += 1;
        }
    }
    let rhs = gf_rhs(kind, x, y, order);
    let first_mismatch = (0..order).find(|&i| lhs.coeff(i) != rhs.coeff(i));
    GfReport {
        kind,
        x: x.to_string(),
        y: if kind.is_appell() { y.to_string() } else { "0".into() },
        order,
        equal: first_mismatch.is_none(),
        first_mismatch,
        reading: GF_READING,
    }
}

pub fn gf_check(kind: GfKind, x: &Rational, y: &Rational, order: usize) -> GfReport {
    gf_check_with(kind, x, y, order, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    fn s(v: &[(i64, i64)], order: usize) -> Series {
        Series::new(v.iter().map(|&(n, d)| q(n, d)).collect(), order)
    }

    #[test]
    fn arithmetic_and_truncation() {
        let a = s(&[(1, 1), (1, 1)], 3);
        let b = s(&[(1, 1), (-1, 1)], 3);
        assert_eq!(a.add(&b).unwrap(), s(&[(2, 1)], 3));
        assert_eq!(a.mul(&b).unwrap(), s(&[(1, 1), (0, 1), (-1, 1)], 3));
        let z = Series::var(q(1, 1), 2);
        assert_eq!(z.mul(&z).unwrap(), Series::zero(2));
        assert!(matches!(a.mul(&z), Err(Error::OrderMismatch { left: 3, right: 2 })));
    }

    #[test]
    fn exponential() {
        assert_eq!(Series::zero(4).exp().unwrap(), Series::one(4));
        let ez = Series::var(q(1, 1), 4).exp().unwrap();
        assert_eq!(ez, s(&[(1, 1), (1, 1), (1, 2), (1, 6)], 4));
        let e2 = Series::var(q(-2, 1), 3).exp().unwrap();
        assert_eq!(e2, s(&[(1, 1), (-2, 1), (2, 1)], 3));
        assert_eq!(e2, Series::exp_linear(&q(-2, 1), 3));
        assert!(matches!(Series::one(3).exp(), Err(Error::Precondition(_))));
    }

    #[test]
    fn reciprocal() {
        assert_eq!(Series::one(3).recip().unwrap(), Series::one(3));
        let g = s(&[(1, 1), (-1, 1)], 3).recip().unwrap();
        assert_eq!(g, s(&[(1, 1), (1, 1), (1, 1)], 3));
        let ez1 = s(&[(1, 1), (1, 2), (1, 6)], 3).recip().unwrap();
        assert_eq!(ez1, s(&[(1, 1), (-1, 2), (1, 12)], 3));
        assert!(matches!(Series::var(q(1, 1), 3).recip(), Err(Error::Precondition(_))));
    }

    #[test]
    fn powers() {
        let z = Series::var(q(1, 1), 5);
        assert_eq!(z.pow(3), s(&[(0, 1), (0, 1), (0, 1), (1, 1)], 5));
        let b = s(&[(0, 1), (1, 1), (-1, 1)], 5);
        assert_eq!(b.pow(2), s(&[(0, 1), (0, 1), (1, 1), (-2, 1), (1, 1)], 5));
        let ze = Series::var(q(1, 1), 4).mul(&Series::exp_linear(&q(-1, 1), 4)).unwrap();
        assert_eq!(ze.pow(2), s(&[(0, 1), (0, 1), (1, 1), (-2, 1)], 4));
        assert_eq!(ze.pow(2).valuation(), Some(2));
    }

    #[test]
    fn composition() {
        // exp(z) ∘ (z − z²/2 + z³/3) = 1 + z + O(z⁴)   (log(1+z))
        let ez = Series::exp_linear(&q(1, 1), 4);
        let log1p = s(&[(0, 1), (1, 1), (-1, 2), (1, 3)], 4);
        assert_eq!(ez.compose(&log1p).unwrap(), s(&[(1, 1), (1, 1)], 4));
    }

    #[test]
    fn examples_from_contract() {
        let r = gf_check(GfKind::BernoulliPlain, &q(0, 1), &q(0, 1), 8);
        assert!(r.equal);
        let rhs = gf_rhs(GfKind::BernoulliPlain, &q(0, 1), &q(0, 1), 8);
        let b = crate::exactpoly::bernoulli_numbers(7);
        for n in 0..8 {
            assert_eq!(*rhs.coeff(n), (&b[n] / Rational::from(factorial(n))));
        }
        assert!(gf_check(GfKind::EulerAppell, &q(1, 2), &q(0, 1), 8).equal);
        assert!(gf_check(GfKind::BernoulliAppell, &q(1, 3), &q(1, 5), 16).equal);
    }

    #[test]
    fn mutation_is_located() {
        let r = gf_check_with(GfKind::EulerAppell, &q(1, 3), &q(-2, 7), 12, Some(5));
        assert!(!r.equal);
        assert_eq!(r.first_mismatch, Some(5));
    }
}
