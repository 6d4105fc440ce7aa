//! Complex special functions at arbitrary precision.
//!
//! Every exported function works internally with `GUARD_DIGITS` extra digits
//! and rounds its result to the precision of its inputs.

pub mod apcomplex;
pub mod gamma;
pub mod lerch;
pub mod misc;
pub mod zeta;

use rug::Float;

pub use apcomplex::{bits_for, digits_for, euler_gamma, ln2, pi, ApComplex};
pub use gamma::{digamma, gamma};
pub use lerch::{hyp2f1_unit, lerch_phi};
pub use misc::{catalan, gen_harmonic, pochhammer_int, recip_pochhammer_shift};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_ds, hurwitz_zeta_with, polygamma, riemann_zeta, riemann_zeta_ds,
    EmSettings,
};

use crate::exactpoly::with_bernoulli;

/// Extra decimal digits carried inside every special-function evaluation.
pub const GUARD_DIGITS: u32 = 15;

/// Lazily rounded even Bernoulli numbers B_2, B_4, … at a fixed precision.
pub(crate) struct EvenBernoulli {
    bits: u32,
    vals: Vec<Float>,
    log10: Vec<f64>,
}

impl EvenBernoulli {
    pub(crate) fn new(bits: u32) -> Self {
        EvenBernoulli { bits, vals: Vec::new(), log10: Vec::new() }
    }

    fn ensure(&mut self, j: usize) {
        if j <= self.vals.len() {
            return;
        }
        let want = (j + 16).max(2 * self.vals.len());
        let bits = self.bits;
        let start = self.vals.len() + 1;
        let fresh: Vec<Float> =
            with_bernoulli(2 * want, |b| (start..=want).map(|i| Float::with_val(bits, &b[2 * i])).collect());
        for f in fresh {
            self.log10.push(f.to_f64().abs().log10());
            self.vals.push(f);
        }
    }

    /// B_{2j}, j ≥ 1.
    pub(crate) fn get(&mut self, j: usize) -> &Float {
        self.ensure(j);
        &self.vals[j - 1]
    }

    /// log10 |B_{2j}| (f64; B_{2j} stays inside f64 range for j < 130).
    pub(crate) fn log10_abs(&mut self, j: usize) -> f64 {
        self.ensure(j);
        let v = self.log10[j - 1];
        if v.is_finite() {
            v
        } else {
            log10_bernoulli_asymptotic(j)
        }
    }
}

/// log10 |B_{2j}| from |B_{2j}| ≈ 2 (2j)! / (2π)^{2j}.
fn log10_bernoulli_asymptotic(j: usize) -> f64 {
    let n = 2.0 * j as f64;
    let ln_fact = n * n.ln() - n + 0.5 * (2.0 * std::f64::consts::PI * n).ln();
    (2f64.ln() + ln_fact - n * (2.0 * std::f64::consts::PI).ln()) / std::f64::consts::LN_10
}
