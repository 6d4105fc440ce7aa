//! Append-only exact tables shared across threads: Pascal rows, Bernoulli
//! numbers and Euler polynomial constant terms. Reads take a shared lock;
//! extension takes the write lock, and a computed prefix never changes.

use std::sync::{LazyLock, RwLock};

use rug::{Integer, Rational};

/// Pascal triangle rows, `rows[n][k] = C(n, k)`.
#[derive(Debug, Default)]
pub struct BinomialCache {
    rows: Vec<Vec<Integer>>,
}

impl BinomialCache {
    pub fn extend_to(&mut self, n: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![Integer::from(1)]);
        }
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(Integer::from(1));
            for w in prev.windows(2) {
                row.push(Integer::from(&w[0] + &w[1]));
            }
            row.push(Integer::from(1));
            self.rows.push(row);
        }
    }

    pub fn row(&self, n: usize) -> &[Integer] {
        &self.rows[n]
    }

    pub fn high_water(&self) -> usize {
        self.rows.len()
    }
}

/// Bernoulli numbers with B_1 = −1/2, the coefficients of z/(e^z − 1).
#[derive(Debug)]
pub struct BernoulliCache {
    values: Vec<Rational>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        BernoulliCache { values: vec![Rational::from(1)] }
    }
}

impl BernoulliCache {
    /// Extends through index `n` with B_m = −1/(m+1) Σ_{j<m} C(m+1, j) B_j.
    pub fn extend_to(&mut self, n: usize, binom: &BinomialCache) {
        while self.values.len() <= n {
            let m = self.values.len();
            if m > 1 && m % 2 == 1 {
                self.values.push(Rational::new());
                continue;
            }
            let row = binom.row(m + 1);
            let mut acc = Rational::new();
            for (j, b) in self.values.iter().enumerate() {
                if !b.is_zero() {
                    acc += Rational::from(b * &row[j]);
                }
            }
            acc /= -(m as i64 + 1);
            self.values.push(acc);
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Number of entries computed so far.
    pub fn high_water(&self) -> usize {
        self.values.len()
    }
}

/// Constant terms E_n(0) of the Euler polynomials.
#[derive(Debug)]
pub struct EulerZeroCache {
    values: Vec<Rational>,
}

impl Default for EulerZeroCache {
    fn default() -> Self {
        EulerZeroCache { values: vec![Rational::from(1)] }
    }
}

impl EulerZeroCache {
    /// From E_n(1) + E_n(0) = 2·0^n: E_n(0) = −½ Σ_{k<n} C(n, k) E_k(0).
    pub fn extend_to(&mut self, n: usize, binom: &BinomialCache) {
        while self.values.len() <= n {
            let m = self.values.len();
            let row = binom.row(m);
            let mut acc = Rational::new();
            for (k, e) in self.values.iter().enumerate() {
                if !e.is_zero() {
                    acc += Rational::from(e * &row[k]);
                }
            }
            acc /= -2;
            self.values.push(acc);
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

static BINOMIALS: LazyLock<RwLock<BinomialCache>> = LazyLock::new(Default::default);
static BERNOULLI: LazyLock<RwLock<BernoulliCache>> = LazyLock::new(Default::default);
static EULER_ZERO: LazyLock<RwLock<EulerZeroCache>> = LazyLock::new(Default::default);

fn ensure_binomials(n: usize) {
    if BINOMIALS.read().expect("binomial cache poisoned").high_water() > n {
        return;
    }
    BINOMIALS.write().expect("binomial cache poisoned").extend_to(n);
}

/// Runs `f` on the Pascal row `n`.
pub fn with_binomial_row<R>(n: usize, f: impl FnOnce(&[Integer]) -> R) -> R {
    ensure_binomials(n);
    let guard = BINOMIALS.read().expect("binomial cache poisoned");
    f(guard.row(n))
}

pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::new();
    }
    with_binomial_row(n, |row| row[k].clone())
}

/// Runs `f` on the slice `[B_0, …, B_n]`.
pub fn with_bernoulli<R>(n: usize, f: impl FnOnce(&[Rational]) -> R) -> R {
    let ready = BERNOULLI.read().expect("bernoulli cache poisoned").high_water() > n;
    if !ready {
        ensure_binomials(n + 1);
        let binom = BINOMIALS.read().expect("binomial cache poisoned");
        BERNOULLI.write().expect("bernoulli cache poisoned").extend_to(n, &binom);
    }
    let guard = BERNOULLI.read().expect("bernoulli cache poisoned");
    f(&guard.values()[..=n])
}

/// Runs `f` on the slice `[E_0(0), …, E_n(0)]`.
pub fn with_euler_zero<R>(n: usize, f: impl FnOnce(&[Rational]) -> R) -> R {
    let ready = EULER_ZERO.read().expect("euler cache poisoned").values().len() > n;
    if !ready {
        ensure_binomials(n);
        let binom = BINOMIALS.read().expect("binomial cache poisoned");
        EULER_ZERO.write().expect("euler cache poisoned").extend_to(n, &binom);
    }
    let guard = EULER_ZERO.read().expect("euler cache poisoned");
    f(&guard.values()[..=n])
}

/// Current number of cached Bernoulli numbers.
pub fn bernoulli_high_water() -> usize {
    BERNOULLI.read().expect("bernoulli cache poisoned").high_water()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_rows() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(40, 20), Integer::from(137_846_528_820u64));
    }

    #[test]
    fn cache_is_append_only() {
        let first = with_bernoulli(10, |b| b.to_vec());
        let _ = with_bernoulli(40, |b| b.len());
        let again = with_bernoulli(10, |b| b.to_vec());
        assert_eq!(first, again);
        assert!(bernoulli_high_water() >= 41);
        with_bernoulli(40, |b| {
            assert_eq!(b[0], 1);
            for n in (3..=40).step_by(2) {
                assert!(b[n].is_zero());
            }
        });
    }

    #[test]
    fn euler_constant_terms() {
        // E_1(0) = −1/2, E_2(0) = 0, E_3(0) = 1/4
        with_euler_zero(3, |e| {
            assert_eq!(e[1], Rational::from((-1, 2)));
            assert!(e[2].is_zero());
            assert_eq!(e[3], Rational::from((1, 4)));
        });
    }
}
