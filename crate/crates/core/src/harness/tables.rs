//! Per-index values B_p(γ + pδ)/p! and E_n(α + nβ)/n!, evaluated exactly
//! and rounded once, grown on demand.

use rug::Rational;

use crate::exactpoly::{bernoulli_poly, euler_poly, factorial, ExactComplex};
use crate::specfun::ApComplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Bernoulli,
    Euler,
}

/// P_m(c0 + m·c1)/m! for m = 0, 1, …
pub struct ShiftedTable {
    family: Family,
    c0: ExactComplex,
    c1: ExactComplex,
    wp: u32,
    values: Vec<ApComplex>,
}

impl ShiftedTable {
    pub fn new(family: Family, c0: &ExactComplex, c1: &ExactComplex, wp: u32) -> Self {
        ShiftedTable { family, c0: c0.clone(), c1: c1.clone(), wp, values: Vec::new() }
    }

    /// Exact P_m(c0 + m·c1)/m!.
    pub fn exact(&self, m: usize) -> ExactComplex {
        let poly = match self.family {
            Family::Bernoulli => bernoulli_poly(m),
            Family::Euler => euler_poly(m),
        };
        let arg = &self.c0 + &self.c1.scale(&Rational::from(m as u64));
        let v = poly.eval_exact(&arg);
        v.scale(&Rational::from((1, factorial(m))))
    }

    pub fn get(&mut self, m: usize) -> &ApComplex {
        while self.values.len() <= m {
            let i = self.values.len();
            let v = self.exact(i).to_ap(self.wp);
            self.values.push(v);
        }
        &self.values[m]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_entries() {
        // B_2(γ + 2δ)/2 with γ = 1, δ = 1/2: B_2(2)/2 = (4 − 2 + 1/6)/2 = 13/12
        let t = ShiftedTable::new(Family::Bernoulli, &ExactComplex::from_i64(1), &ExactComplex::ratio(1, 2), 30);
        assert_eq!(t.exact(2), ExactComplex::ratio(13, 12));
        // E_1(α + β)/1 = α + β − 1/2
        let e = ShiftedTable::new(Family::Euler, &ExactComplex::ratio(1, 3), &ExactComplex::ratio(1, 4), 30);
        assert_eq!(e.exact(1), ExactComplex::ratio(1, 12));
    }
}
