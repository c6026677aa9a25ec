//! Gaussian integers Z[i].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::field::check_odd_prime;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    pub const fn from_int(n: i64) -> Self {
        GaussInt { re: n, im: 0 }
    }

    /// i^k for any integer k.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussInt::ONE,
            1 => GaussInt::I,
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    pub fn conj(self) -> Self {
        GaussInt::new(self.re, -self.im)
    }

    pub fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn scale(self, k: i64) -> Self {
        GaussInt::new(self.re * k, self.im * k)
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = GaussInt::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// `self / d` when the quotient lies in Z[i].
    pub fn div_exact(self, d: GaussInt) -> Option<GaussInt> {
        // Widened so that divisors up to the i64 range do not overflow.
        let (a, b, c, e) = (self.re as i128, self.im as i128, d.re as i128, d.im as i128);
        let n = c * c + e * e;
        if n == 0 {
            return None;
        }
        let (re, im) = (a * c + b * e, b * c - a * e);
        if re % n != 0 || im % n != 0 {
            return None;
        }
        Some(GaussInt::new(i64::try_from(re / n).ok()?, i64::try_from(im / n).ok()?))
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re as f64, self.im as f64)
    }

    /// Rational integer value, if the imaginary part vanishes.
    pub fn as_int(self) -> Option<i64> {
        (self.im == 0).then_some(self.re)
    }
}

impl From<i64> for GaussInt {
    fn from(n: i64) -> Self {
        GaussInt::from_int(n)
    }
}

impl Add for GaussInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussInt::new(self.re + o.re, self.im + o.im)
    }
}

impl AddAssign for GaussInt {
    fn add_assign(&mut self, o: Self) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl Sub for GaussInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussInt::new(self.re - o.re, self.im - o.im)
    }
}

impl SubAssign for GaussInt {
    fn sub_assign(&mut self, o: Self) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl Mul for GaussInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussInt::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Neg for GaussInt {
    type Output = Self;
    fn neg(self) -> Self {
        GaussInt::new(-self.re, -self.im)
    }
}

impl Sum for GaussInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GaussInt::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, i) => write!(f, "{i}i"),
            (r, i) if i < 0 => write!(f, "{r}-{}i", -i),
            (r, i) => write!(f, "{r}+{i}i"),
        }
    }
}

/// The Gaussian prime of norm `p` congruent to 1 mod 2+2i, with positive
/// imaginary part. Its conjugate is the other primary prime above `p`.
pub fn gauss_primary_decompose(p: u64) -> Result<GaussInt> {
    check_odd_prime(p)?;
    if p % 4 != 1 {
        return Err(Error::InadmissiblePrime { p, reason: "inert in Z[i]" });
    }
    let p = p as i64;
    let mut x = 1;
    while x * x < p {
        let y2 = p - x * x;
        let y = (y2 as f64).sqrt().round() as i64;
        if y * y == y2 {
            // Exactly one of x, y is odd; rotate into x odd, y even.
            let z = if x % 2 == 1 { GaussInt::new(x, y) } else { GaussInt::new(y, x) };
            for k in 0..4 {
                let w = z * GaussInt::i_pow(k);
                if w.re.rem_euclid(2) == 1 && (w.re + w.im).rem_euclid(4) == 1 {
                    return Ok(if w.im > 0 { w } else { w.conj() });
                }
            }
        }
        x += 1;
    }
    unreachable!("Fermat's two-squares theorem")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = GaussInt::new(2, 1);
        let b = GaussInt::new(-1, 3);
        assert_eq!(a * b, GaussInt::new(-5, 5));
        assert_eq!((a * b).div_exact(b), Some(a));
        assert_eq!(a.div_exact(GaussInt::new(3, 0)), None);
        assert_eq!(GaussInt::I * GaussInt::I, GaussInt::from(-1));
        assert_eq!(GaussInt::i_pow(-1), GaussInt::new(0, -1));
        assert_eq!(a.pow(3), a * a * a);
        assert_eq!(a.to_string(), "2+1i");
    }

    #[test]
    fn primary_primes() {
        let p5 = gauss_primary_decompose(5).unwrap();
        assert_eq!(p5.norm(), 5);
        assert_eq!(p5, GaussInt::new(-1, 2));
        assert!((0..4).any(|k| GaussInt::new(2, 1) * GaussInt::i_pow(k) == p5));
        let p13 = gauss_primary_decompose(13).unwrap();
        assert_eq!(p13, GaussInt::new(3, 2));
        assert!(gauss_primary_decompose(3).is_err());
        assert!(gauss_primary_decompose(2).is_err());
        for p in crate::arith::field::odd_primes_upto(400).into_iter().filter(|p| p % 4 == 1) {
            let z = gauss_primary_decompose(p).unwrap();
            assert_eq!(z.norm(), p as i64);
            assert_eq!((z - GaussInt::ONE).div_exact(GaussInt::new(2, 2)).is_some(), true);
        }
    }
}
