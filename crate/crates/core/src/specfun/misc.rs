//! Harmonic numbers, Pochhammer products and Catalan's constant.

use super::apcomplex::{bits_for, euler_gamma, ApComplex};
use super::gamma::digamma;
use super::zeta::{hurwitz_zeta, polygamma, riemann_zeta};
use super::GUARD_DIGITS;
use crate::error::{Error, Result};

/// Largest integer argument summed directly by `gen_harmonic`.
const DIRECT_HARMONIC_MAX: i64 = 100_000;

/// H_z^{(r)} = ζ(r) − ζ(r, z+1); for r = 1, ψ(z+1) + γ.  Nonnegative
/// integer z is summed directly.
pub fn gen_harmonic(z: &ApComplex, r: &ApComplex) -> Result<ApComplex> {
    let digits = z.prec().min(r.prec());
    let wp = digits + GUARD_DIGITS;
    let (zw, rw) = (z.with_prec(wp), r.with_prec(wp));
    let r_int = rw.as_integer();
    if let Some(n) = zw.as_integer() {
        if (0..=DIRECT_HARMONIC_MAX).contains(&n) {
            let neg_r = -&rw;
            let mut acc = ApComplex::zero(wp);
            for j in 1..=n {
                let t = match r_int {
                    Some(1) => ApComplex::from_i64(j, wp).recip()?,
                    _ => ApComplex::from_i64(j, wp).pow(&neg_r)?,
                };
                acc += &t;
            }
            return Ok(acc.with_prec(digits));
        }
    }
    let z1 = zw.add_i64(1);
    let out = if r_int == Some(1) {
        digamma(&z1)?.add_real(&euler_gamma(bits_for(wp)))
    } else {
        &riemann_zeta(&rw)? - &hurwitz_zeta(&rw, &z1)?
    };
    Ok(out.with_prec(digits))
}

/// 1/(k)_{1−d}: d = 0 gives 1/k, d = 1 gives 1, d ≥ 2 gives Π_{i=1}^{d−1}(k − i).
pub fn recip_pochhammer_shift(k: &ApComplex, d: usize) -> Result<ApComplex> {
    match d {
        0 => k.recip().map_err(|_| Error::Pole("1/(k)_1 at k = 0".into())),
        _ => {
            let mut acc = ApComplex::one(k.prec()).with_prec(k.prec());
            for i in 1..d {
                acc = &acc * &k.add_i64(-(i as i64));
            }
            Ok(acc)
        }
    }
}

/// (x)_m for integer m; negative m gives 1/((x−1)(x−2)⋯(x−|m|)).
pub fn pochhammer_int(x: &ApComplex, m: i64) -> Result<ApComplex> {
    let mut acc = ApComplex::one(x.prec());
    if m >= 0 {
        for i in 0..m {
            acc = &acc * &x.add_i64(i);
        }
        Ok(acc)
    } else {
        for i in 1..=(-m) {
            acc = &acc * &x.add_i64(-i);
        }
        acc.recip().map_err(|_| Error::Pole(format!("Pochhammer ({})_{m} has a pole", x.to_decimal(10))))
    }
}

/// Catalan's constant as (ψ^{(1)}(1/4) − ψ^{(1)}(3/4))/16.
pub fn catalan(digits: u32) -> Result<ApComplex> {
    let wp = digits + GUARD_DIGITS;
    let q1 = ApComplex::from_f64(0.25, 0.0, wp);
    let q3 = ApComplex::from_f64(0.75, 0.0, wp);
    let d = &polygamma(1, &q1)? - &polygamma(1, &q3)?;
    Ok(d.div_i64(16).with_prec(digits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::apcomplex::ln2;

    fn rel(a: &ApComplex, b: &ApComplex) -> f64 {
        (a - b).log10_abs() - b.log10_abs()
    }

    #[test]
    fn harmonic_small_values() {
        let two = ApComplex::from_i64(2, 40);
        let h0 = gen_harmonic(&ApComplex::zero(40), &two).unwrap();
        assert!(h0.is_zero());
        let h3 = gen_harmonic(&ApComplex::from_i64(3, 40), &two).unwrap();
        assert!(rel(&h3, &ApComplex::from_f64(49.0, 0.0, 40).div_i64(36)) < -39.0);
    }

    #[test]
    fn harmonic_half() {
        // H_{1/2} = 2 − 2 ln 2
        let h = gen_harmonic(&ApComplex::from_f64(0.5, 0.0, 40), &ApComplex::one(40)).unwrap();
        let want = ApComplex::from_real(ln2(bits_for(40)) * -2i32).add_i64(2);
        assert!(rel(&h, &want) < -38.0);
    }

    #[test]
    fn harmonic_zeta_route_matches_direct() {
        // integer z summed directly vs. the zeta route at z + tiny offset limit
        let r = ApComplex::from_f64(2.5, 0.0, 30);
        let direct = gen_harmonic(&ApComplex::from_i64(7, 30), &r).unwrap();
        let viaz = &riemann_zeta(&r).unwrap() - &hurwitz_zeta(&r, &ApComplex::from_i64(8, 30)).unwrap();
        assert!(rel(&direct, &viaz) < -28.0);
    }

    #[test]
    fn pochhammer_shift_cases() {
        let k = ApComplex::from_i64(5, 30);
        assert!(rel(&recip_pochhammer_shift(&k, 1).unwrap(), &ApComplex::one(30)) < -29.0);
        assert!(rel(&recip_pochhammer_shift(&k, 3).unwrap(), &ApComplex::from_i64(12, 30)) < -29.0);
        assert!(matches!(recip_pochhammer_shift(&ApComplex::zero(30), 0), Err(Error::Pole(_))));
    }

    #[test]
    fn catalan_value() {
        let c = catalan(30).unwrap();
        let want = crate::exactpoly::ExactComplex::parse("0.915965594177219015054603514932384110774")
            .unwrap()
            .to_ap(30);
        assert!(rel(&c, &want) < -29.0);
    }
}
