//! Case parameters: exact Gaussian rationals keyed by symbol name.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactpoly::ExactComplex;
use crate::specfun::ApComplex;

/// Symbols a case may read.
pub const KEYS: [&str; 10] = ["a", "alpha", "beta", "gamma", "delta", "k", "x", "y", "z", "q"];

/// Parameter set; absent entries are unused by the case.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Params {
    values: BTreeMap<&'static str, ExactComplex>,
}

fn canonical_key(key: &str) -> Option<&'static str> {
    KEYS.iter().copied().find(|k| *k == key)
}

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    /// Builder from `(key, literal)` pairs; panics on bad literals, which
    /// makes it suitable only for built-in defaults.
    pub fn of(pairs: &[(&str, &str)]) -> Self {
        let mut p = Params::new();
        for (k, v) in pairs {
            p.set(k, v).unwrap_or_else(|e| panic!("bad built-in parameter {k}={v}: {e}"));
        }
        p
    }

    pub fn set(&mut self, key: &str, literal: &str) -> Result<()> {
        let k = canonical_key(key).ok_or_else(|| Error::Parse(format!("unknown parameter `{key}`")))?;
        let v = ExactComplex::parse(literal).map_err(|e| Error::Parse(format!("{key}: {e}")))?;
        self.values.insert(k, v);
        Ok(())
    }

    pub fn set_value(&mut self, key: &str, v: ExactComplex) -> Result<()> {
        let k = canonical_key(key).ok_or_else(|| Error::Parse(format!("unknown parameter `{key}`")))?;
        self.values.insert(k, v);
        Ok(())
    }

    /// Parses `key=value`.
    pub fn apply_assignment(&mut self, assignment: &str) -> Result<()> {
        let (k, v) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got `{assignment}`")))?;
        self.set(k.trim(), v.trim())
    }

    pub fn get(&self, key: &str) -> Option<&ExactComplex> {
        self.values.get(key)
    }

    /// The value, or a domain error naming the missing symbol.
    pub fn req(&self, key: &str) -> Result<&ExactComplex> {
        self.get(key).ok_or_else(|| Error::Domain(format!("parameter `{key}` is required")))
    }

    pub fn ap(&self, key: &str, digits: u32) -> Result<ApComplex> {
        Ok(self.req(key)?.to_ap(digits))
    }

    /// Integer-valued parameter.
    pub fn int(&self, key: &str) -> Result<i64> {
        self.req(key)?
            .as_integer()
            .ok_or_else(|| Error::Domain(format!("parameter `{key}` must be an integer")))
    }

    pub fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.values.keys().copied()
    }

    pub fn remove(&mut self, key: &str) -> Option<ExactComplex> {
        self.values.remove(key)
    }

    pub fn without(mut self, key: &str) -> Params {
        self.remove(key);
        self
    }

    /// Overlays `other` on top of `self`.
    pub fn merged(&self, other: &Params) -> Params {
        let mut out = self.clone();
        for (k, v) in &other.values {
            out.values.insert(k, v.clone());
        }
        out
    }

    /// Exact string form of each entry, in key order.
    pub fn to_strings(&self) -> BTreeMap<String, String> {
        self.values.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Params({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assignments_parse_exactly() {
        let mut p = Params::new();
        p.apply_assignment("beta=1/4").unwrap();
        p.apply_assignment("k = 1/2+1/3i").unwrap();
        p.apply_assignment("q=3").unwrap();
        assert_eq!(p.get("beta"), Some(&ExactComplex::ratio(1, 4)));
        assert_eq!(p.int("q").unwrap(), 3);
        assert!(p.int("beta").is_err());
        assert!(p.apply_assignment("omega=1").is_err());
        assert!(p.apply_assignment("a").is_err());
        assert_eq!(p.to_string(), "beta=1/4 k=1/2+1/3i q=3");
    }
}
