//! Integer polynomials in one variable `q` with overflow-checked arithmetic.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense coefficients, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPolynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Adds `c` to the coefficient of `q^k`.
    pub fn add_term(&mut self, k: usize, c: i64) -> Result<()> {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] = self.coeffs[k]
            .checked_add(c)
            .ok_or(Error::Overflow("polynomial addition"))?;
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        let mut out = self.clone();
        for (k, &c) in other.coeffs.iter().enumerate() {
            out.add_term(k, c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a
                    .checked_mul(b)
                    .ok_or(Error::Overflow("polynomial multiplication"))?;
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(term)
                    .ok_or(Error::Overflow("polynomial multiplication"))?;
            }
        }
        Ok(IntPolynomial::new(coeffs))
    }

    pub fn checked_pow(&self, exp: u32) -> Result<IntPolynomial> {
        let mut acc = IntPolynomial::constant(1);
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Horner evaluation at `q = x`.
    pub fn eval(&self, x: i64) -> Result<i64> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::Overflow("polynomial evaluation"))
        })
    }

    /// Human-readable form such as `q^3 - q`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let magnitude = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let var = match k {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{k}"),
            };
            if magnitude != 1 || k == 0 {
                out.push_str(&magnitude.to_string());
            }
            out.push_str(&var);
        }
        out
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        IntPolynomial::new(coeffs)
    }
}

impl From<IntPolynomial> for Vec<i64> {
    fn from(p: IntPolynomial) -> Vec<i64> {
        p.coeffs
    }
}

impl fmt::Display for IntPolynomial {
    /// Coefficients low to high separated by spaces; `"0"` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "{}", self.coeffs.iter().join(" "))
        }
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .enumerate()
            .map(|(i, tok)| {
                tok.parse::<i64>()
                    .map_err(|_| Error::parse(i + 1, format!("`{tok}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPolynomial::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_format() {
        let p: IntPolynomial = "0 -1 0 1".parse().unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_string(), "0 -1 0 1");
        assert_eq!(p.pretty(), "q^3 - q");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(
            "0 0".parse::<IntPolynomial>().unwrap(),
            IntPolynomial::zero()
        );
        assert!(matches!(
            "1 x".parse::<IntPolynomial>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert_eq!(IntPolynomial::new(vec![-2, 0, 3]).pretty(), "3q^2 - 2");
    }

    #[test]
    fn arithmetic() {
        let q_plus_1 = IntPolynomial::new(vec![1, 1]);
        let q_minus_1 = IntPolynomial::new(vec![-1, 1]);
        let q = IntPolynomial::monomial(1, 1);
        let prod = q
            .checked_mul(&q_plus_1)
            .unwrap()
            .checked_mul(&q_minus_1)
            .unwrap();
        assert_eq!(prod, "0 -1 0 1".parse().unwrap());
        assert_eq!(prod.eval(2).unwrap(), 6);
        assert_eq!(q_plus_1.checked_pow(0).unwrap(), IntPolynomial::constant(1));
        assert_eq!(q_plus_1.checked_pow(3).unwrap().coeffs(), &[1, 3, 3, 1]);
        let negated = q_minus_1.checked_mul(&IntPolynomial::constant(-1)).unwrap();
        assert_eq!(
            q_plus_1.checked_add(&negated).unwrap(),
            IntPolynomial::constant(2)
        );
    }

    #[test]
    fn overflow_is_reported() {
        let big = IntPolynomial::constant(i64::MAX);
        assert!(big.checked_add(&IntPolynomial::constant(1)).is_err());
        assert!(big.checked_mul(&IntPolynomial::constant(2)).is_err());
        assert!(IntPolynomial::new(vec![0, 2]).checked_pow(64).is_err());
        assert!(IntPolynomial::monomial(1, 64).eval(2).is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(coeffs in proptest::collection::vec(-1000i64..1000, 0..12)) {
            let p = IntPolynomial::new(coeffs);
            prop_assert_eq!(p.to_string().parse::<IntPolynomial>().unwrap(), p);
        }

        #[test]
        fn eval_is_a_ring_homomorphism(
            a in proptest::collection::vec(-50i64..50, 0..6),
            b in proptest::collection::vec(-50i64..50, 0..6),
            x in -3i64..=3,
        ) {
            let (a, b) = (IntPolynomial::new(a), IntPolynomial::new(b));
            let prod = a.checked_mul(&b).unwrap();
            prop_assert_eq!(prod.eval(x).unwrap(), a.eval(x).unwrap() * b.eval(x).unwrap());
            let sum = a.checked_add(&b).unwrap();
            prop_assert_eq!(sum.eval(x).unwrap(), a.eval(x).unwrap() + b.eval(x).unwrap());
        }
    }
}
