//! Truncated Fourier expansions in the quarter unit e^{πiτ/4}.
//!
//! A genus-1 series stores exponent `e` at index `[e, 0, 0]`; a genus-2
//! series stores `[e1, e2, e3]` for e^{πi(e1τ1 + e2τ2 + e3τ3)/4}. Terms are
//! kept while `e1 + e3 <= order`.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::gauss::GaussInt;
use crate::error::{Error, Result};

pub type Index = [i64; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeriesOp {
    Add,
    Mul,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarterSeries {
    genus: u8,
    order: i64,
    coeffs: BTreeMap<Index, GaussInt>,
}

fn weight(ix: &Index) -> i64 {
    ix[0] + ix[2]
}

impl QuarterSeries {
    pub fn zero(genus: u8, order: i64) -> Self {
        assert!(genus == 1 || genus == 2, "genus must be 1 or 2");
        QuarterSeries { genus, order, coeffs: BTreeMap::new() }
    }

    pub fn one(genus: u8, order: i64) -> Self {
        Self::monomial(genus, [0, 0, 0], GaussInt::ONE, order)
    }

    pub fn monomial(genus: u8, ix: Index, c: GaussInt, order: i64) -> Self {
        Self::from_terms(genus, order, [(ix, c)])
    }

    /// Collects terms, summing repeated indices and dropping anything past
    /// the bound or equal to zero.
    pub fn from_terms(genus: u8, order: i64, terms: impl IntoIterator<Item = (Index, GaussInt)>) -> Self {
        let mut s = Self::zero(genus, order);
        for (ix, c) in terms {
            debug_assert!(genus == 2 || (ix[1] == 0 && ix[2] == 0));
            if weight(&ix) <= order {
                *s.coeffs.entry(ix).or_default() += c;
            }
        }
        s.coeffs.retain(|_, c| !c.is_zero());
        s
    }

    /// Genus-1 series from `(exponent, coefficient)` pairs.
    pub fn genus1(order: i64, terms: impl IntoIterator<Item = (i64, GaussInt)>) -> Self {
        Self::from_terms(1, order, terms.into_iter().map(|(e, c)| ([e, 0, 0], c)))
    }

    pub fn genus(&self) -> u8 {
        self.genus
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, ix: Index) -> GaussInt {
        self.coeffs.get(&ix).copied().unwrap_or_default()
    }

    /// Genus-1 coefficient of u^e.
    pub fn coeff(&self, e: i64) -> GaussInt {
        self.get([e, 0, 0])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &GaussInt)> {
        self.coeffs.iter()
    }

    /// Same coefficients, validity bound lowered to `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        let coeffs = self.coeffs.iter().filter(|(ix, _)| weight(ix) <= order).map(|(k, v)| (*k, *v)).collect();
        QuarterSeries { genus: self.genus, order, coeffs }
    }

    fn check_genus(&self, other: &Self) -> Result<()> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus, other.genus));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self, order: i64) -> Result<Self> {
        self.check_genus(other)?;
        let order = order.min(self.order).min(other.order);
        Ok(Self::from_terms(
            self.genus,
            order,
            self.coeffs.iter().chain(other.coeffs.iter()).map(|(k, v)| (*k, *v)),
        ))
    }

    pub fn scale(&self, c: GaussInt) -> Self {
        Self::from_terms(self.genus, self.order, self.coeffs.iter().map(|(k, v)| (*k, *v * c)))
    }

    /// Truncated product. Every exponent is nonnegative in `e1` and `e3`,
    /// so a product of series valid to N₁ and N₂ is valid to min(N₁, N₂).
    pub fn mul(&self, other: &Self, order: i64) -> Result<Self> {
        self.check_genus(other)?;
        let order = order.min(self.order).min(other.order);
        let mut rhs: Vec<(Index, GaussInt)> = other.coeffs.iter().map(|(k, v)| (*k, *v)).collect();
        rhs.sort_by_key(|(ix, _)| weight(ix));
        let mut acc: HashMap<Index, GaussInt> = HashMap::with_capacity(self.len().max(rhs.len()) * 4);
        for (a, ca) in &self.coeffs {
            let wa = weight(a);
            for (b, cb) in &rhs {
                if wa + weight(b) > order {
                    break;
                }
                let ix = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                *acc.entry(ix).or_default() += *ca * *cb;
            }
        }
        Ok(Self::from_terms(self.genus, order, acc))
    }

    pub fn product<'a>(genus: u8, order: i64, factors: impl IntoIterator<Item = &'a QuarterSeries>) -> Result<Self> {
        let mut acc = Self::one(genus, order);
        for f in factors {
            acc = acc.mul(f, order)?;
        }
        Ok(acc)
    }

    /// Applies an index map to every term; the caller states the new bound.
    pub fn map_index(&self, genus: u8, order: i64, f: impl Fn(Index) -> Option<Index>) -> Self {
        Self::from_terms(genus, order, self.coeffs.iter().filter_map(|(k, v)| f(*k).map(|ix| (ix, *v))))
    }

    /// f(τ) ↦ f(4τ) on a genus-1 series.
    pub fn rescale4(&self) -> Self {
        assert_eq!(self.genus, 1);
        self.map_index(1, self.order * 4, |[e, _, _]| Some([4 * e, 0, 0]))
    }

    /// Numeric value; `tau` holds τ (genus 1) or (τ1, τ2, τ3) (genus 2).
    pub fn eval(&self, tau: &[Complex64]) -> Complex64 {
        let unit = Complex64::new(0.0, std::f64::consts::PI / 4.0);
        self.coeffs
            .iter()
            .map(|(ix, c)| {
                let arg = match self.genus {
                    1 => tau[0] * ix[0] as f64,
                    _ => tau[0] * ix[0] as f64 + tau[1] * ix[1] as f64 + tau[2] * ix[2] as f64,
                };
                c.to_complex() * (unit * arg).exp()
            })
            .sum()
    }

    /// Equality of coefficients up to a common bound.
    pub fn agrees_with(&self, other: &Self, order: i64) -> bool {
        self.genus == other.genus && self.truncate(order).coeffs == other.truncate(order).coeffs
    }
}

pub fn series_combine(a: &QuarterSeries, b: &QuarterSeries, op: SeriesOp, order: i64) -> Result<QuarterSeries> {
    match op {
        SeriesOp::Add => a.add(b, order),
        SeriesOp::Mul => a.mul(b, order),
    }
}
