//! Sparse polynomials with exponent vectors packed into a `u128`.
//!
//! Variable `i` occupies bits `4i..4i+4`, so up to 32 variables with
//! exponents at most 15 fit in one key. Keys compare like the exponent
//! vectors they encode only after unpacking; ordering is done on
//! [`Monomial`]s.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::NullstellensatzError;

pub const MAX_VARIABLES: usize = 32;
pub const MAX_EXPONENT: u8 = 15;

/// An exponent vector over a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u8>,
}

impl Monomial {
    pub fn new(exponents: Vec<u8>) -> Result<Self, NullstellensatzError> {
        if exponents.len() > MAX_VARIABLES {
            return Err(NullstellensatzError::TooManyVariables(exponents.len()));
        }
        if let Some(var) = exponents.iter().position(|&k| k > MAX_EXPONENT) {
            return Err(NullstellensatzError::ExponentTooLarge { var, exponent: exponents[var] });
        }
        Ok(Monomial { exponents })
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exponents
    }

    pub fn var_count(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&k| k as usize).sum()
    }

    pub(crate) fn key(&self) -> u128 {
        pack(&self.exponents)
    }

    pub(crate) fn from_key(key: u128, vars: usize) -> Self {
        Monomial { exponents: (0..vars).map(|i| exponent(key, i)).collect() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &k) in self.exponents.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "X{}", i + 1)?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(&self.exponents)
    }
}

fn pack(exponents: &[u8]) -> u128 {
    exponents
        .iter()
        .enumerate()
        .fold(0u128, |key, (i, &k)| key | (k as u128) << (4 * i))
}

#[inline]
fn exponent(key: u128, var: usize) -> u8 {
    (key >> (4 * var) & 0xF) as u8
}

/// A polynomial with integer coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    vars: usize,
    terms: HashMap<u128, BigInt>,
}

impl SparsePoly {
    pub fn one(vars: usize) -> Self {
        SparsePoly { vars, terms: HashMap::from([(0, BigInt::one())]) }
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(&m.key()).cloned().unwrap_or_default()
    }

    /// Terms sorted by exponent vector.
    pub fn terms(&self) -> Vec<(Monomial, BigInt)> {
        let mut out: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(&k, c)| (Monomial::from_key(k, self.vars), c.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Multiplies by `(X_i - X_j)`, dropping every product term rejected by
    /// `keep`. Products whose exponent would pass 15 are always dropped by
    /// callers through `keep`, since `keep` sees the raw exponent.
    pub fn mul_difference(&mut self, i: usize, j: usize, keep: impl Fn(u128, usize, u8) -> bool) {
        let mut next: HashMap<u128, BigInt> = HashMap::with_capacity(self.terms.len() * 2);
        for (&key, coeff) in &self.terms {
            for (var, positive) in [(i, true), (j, false)] {
                let raised = exponent(key, var) + 1;
                if raised > MAX_EXPONENT || !keep(key, var, raised) {
                    continue;
                }
                let product = key + (1u128 << (4 * var));
                let slot = next.entry(product).or_default();
                if positive {
                    *slot += coeff;
                } else {
                    *slot -= coeff;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        self.terms = next;
    }

    pub(crate) fn raw_terms(&self) -> impl Iterator<Item = (&u128, &BigInt)> {
        self.terms.iter()
    }
}

pub(crate) fn exponent_of(key: u128, var: usize) -> u8 {
    exponent(key, var)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_round_trips() {
        let m = Monomial::new(vec![3, 0, 15, 1]).unwrap();
        assert_eq!(Monomial::from_key(m.key(), 4), m);
        assert_eq!(m.to_string(), "X1^3 X3^15 X4");
        assert!(Monomial::new(vec![16]).is_err());
        assert!(Monomial::new(vec![0; 33]).is_err());
    }

    #[test]
    fn product_of_two_differences() {
        // (X1 - X2)(X1 - X3) = X1^2 - X1X3 - X1X2 + X2X3
        let mut p = SparsePoly::one(3);
        p.mul_difference(0, 1, |_, _, _| true);
        p.mul_difference(0, 2, |_, _, _| true);
        let terms: Vec<(Vec<u8>, i64)> = p
            .terms()
            .into_iter()
            .map(|(m, c)| (m.exponents().to_vec(), i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(
            terms,
            vec![(vec![0, 1, 1], 1), (vec![1, 0, 1], -1), (vec![1, 1, 0], -1), (vec![2, 0, 0], 1)]
        );
    }
}
