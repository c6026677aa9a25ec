//! Polynomials in the formal variable T with integer or Gaussian-integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::gauss::GaussInt;

/// Integer polynomial, coefficients from T⁰ upward, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial { coeffs: vec![] };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    /// T ↦ c·T.
    pub fn substitute_scaled(&self, c: &BigInt) -> Self {
        let mut scale = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &scale);
            scale *= c;
        }
        Self::new(out)
    }

    /// Coefficients as i64, when they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Serialize for IntPolynomial {
    /// Serialized as decimal strings so nothing is lost past 64 bits.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "T")?,
                1 => write!(f, "{a}T")?,
                _ if a.is_one() => write!(f, "T^{k}")?,
                _ => write!(f, "{a}T^{k}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial over Z[i], used for the Andrianov–Evdokimov quartic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GaussPolynomial {
    coeffs: Vec<GaussInt>,
}

impl GaussPolynomial {
    pub fn new(mut coeffs: Vec<GaussInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        GaussPolynomial { coeffs }
    }

    pub fn from_int(p: &IntPolynomial) -> Option<Self> {
        p.to_i64().map(|v| Self::new(v.into_iter().map(GaussInt::from).collect()))
    }

    pub fn coeff(&self, k: usize) -> GaussInt {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[GaussInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![GaussInt::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += *a * *b;
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for GaussPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                _ => format!("({c})T^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_display() {
        let a = IntPolynomial::from_i64(&[1, -3]);
        let b = IntPolynomial::from_i64(&[1, 3]);
        let ab = a.mul(&b);
        assert_eq!(ab, IntPolynomial::from_i64(&[1, 0, -9]));
        assert_eq!(ab.degree(), 2);
        assert_eq!(ab.to_string(), "1 - 9T^2");
        assert!(ab.sub(&ab).is_zero());
    }

    #[test]
    fn scaled_substitution() {
        let a = IntPolynomial::from_i64(&[1, -1, 2]);
        assert_eq!(a.substitute_scaled(&BigInt::from(5)), IntPolynomial::from_i64(&[1, -5, 50]));
    }

    #[test]
    fn large_powers_do_not_overflow() {
        let a = IntPolynomial::from_i64(&[1, -47]);
        let big = a.pow(21);
        assert_eq!(big.degree(), 21);
        assert_eq!(big.coeff(21), BigInt::from(-47).pow(21));
        assert!(big.to_i64().is_none());
    }
}
