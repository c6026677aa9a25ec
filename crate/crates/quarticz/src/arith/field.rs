//! Prime fields and the quadratic characters used throughout.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p as i64));
    }
    Ok(())
}

/// Odd primes up to and including `bound`.
pub fn odd_primes_upto(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&n| is_prime(n)).collect()
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

fn reduce(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

/// Legendre symbol (a/p) by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    check_odd_prime(p)?;
    Ok(legendre_unchecked(reduce(a, p), p))
}

/// Legendre symbol for a residue already in `[0, p)`; `p` must be an odd prime.
pub(crate) fn legendre_unchecked(a: u64, p: u64) -> i8 {
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// The quadratic characters χ₋₁, χ₂, χ₋₂ evaluated at an odd integer.
pub fn kronecker_char(d: i64, n: i64) -> Result<i8> {
    if n % 2 == 0 {
        return Err(Error::EvenArgument(n));
    }
    let r = n.rem_euclid(8);
    let chi_m1 = if r % 4 == 1 { 1 } else { -1 };
    let chi_2 = if r == 1 || r == 7 { 1 } else { -1 };
    match d {
        -1 => Ok(chi_m1),
        2 => Ok(chi_2),
        -2 => Ok(chi_m1 * chi_2),
        _ => Err(Error::UnsupportedCharacter(d)),
    }
}

/// χ₋₁ on an odd prime, the nebentypus of the level-16 form.
pub fn chi_m1(p: u64) -> i64 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}

pub fn chi(d: i64, p: u64) -> i64 {
    kronecker_char(d, p as i64).expect("odd prime and supported label") as i64
}

/// A square root of −1 in F_p, if one exists.
pub fn sqrt_minus_one(p: u64) -> Option<u64> {
    if p % 4 != 1 {
        return None;
    }
    // Any non-residue c gives c^((p-1)/4) with square −1.
    (2..p)
        .find(|&c| legendre_unchecked(c, p) == -1)
        .map(|c| pow_mod(c, (p - 1) / 4, p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpElement {
    value: u64,
    p: u64,
}

impl FpElement {
    pub fn new(a: i64, p: u64) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(FpElement { value: reduce(a, p), p })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn pow(self, e: u64) -> Self {
        FpElement { value: pow_mod(self.value, e, self.p), p: self.p }
    }

    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| self.pow(self.p - 2))
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn legendre(self) -> i8 {
        legendre_unchecked(self.value, self.p)
    }

    fn with(self, v: u64) -> Self {
        FpElement { value: v % self.p, p: self.p }
    }
}

impl Add for FpElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        self.with(self.value + o.value)
    }
}

impl Sub for FpElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        self.with(self.value + self.p - o.value)
    }
}

impl Mul for FpElement {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        self.with(self.value * o.value)
    }
}

impl Neg for FpElement {
    type Output = Self;
    fn neg(self) -> Self {
        self.with(self.p - self.value)
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_legendre(a: i64, p: u64) -> i8 {
        let a = reduce(a, p);
        if a == 0 {
            return 0;
        }
        if (1..p).any(|x| x * x % p == a) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(1, 7).unwrap(), 1);
        assert_eq!(legendre(-1, 3).unwrap(), -1);
        assert_eq!(legendre(2, 7).unwrap(), 1);
        assert!(legendre(2, 9).is_err());
        assert!(legendre(2, 2).is_err());
    }

    #[test]
    fn legendre_matches_square_table() {
        for p in odd_primes_upto(60) {
            for a in -70..70 {
                assert_eq!(legendre(a, p).unwrap(), brute_legendre(a, p), "a={a} p={p}");
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_char(-1, 5).unwrap(), 1);
        assert_eq!(kronecker_char(2, 3).unwrap(), -1);
        assert_eq!(kronecker_char(-2, 3).unwrap(), 1);
        assert!(kronecker_char(2, 4).is_err());
        assert!(kronecker_char(3, 5).is_err());
    }

    #[test]
    fn kronecker_agrees_with_legendre_at_primes() {
        for p in odd_primes_upto(200) {
            assert_eq!(kronecker_char(-1, p as i64).unwrap(), brute_legendre(-1, p));
            assert_eq!(kronecker_char(2, p as i64).unwrap(), brute_legendre(2, p));
            assert_eq!(kronecker_char(-2, p as i64).unwrap(), brute_legendre(-2, p));
        }
    }

    #[test]
    fn sqrt_minus_one_squares_to_minus_one() {
        for p in odd_primes_upto(200) {
            match sqrt_minus_one(p) {
                Some(i) => assert_eq!(i * i % p, p - 1),
                None => assert_eq!(p % 4, 3),
            }
        }
    }

    #[test]
    fn field_ops() {
        let a = FpElement::new(-3, 7).unwrap();
        let b = FpElement::new(5, 7).unwrap();
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 6);
        assert_eq!((a * b).value(), 6);
        assert_eq!((a * a.inv().unwrap()).value(), 1);
        assert!(FpElement::new(0, 7).unwrap().inv().is_none());
        assert_eq!((-b).value(), 2);
    }
}
