//! Theta characteristics m = (m′, m″) with entries in {0, 1}.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

/// Genus-g characteristic; `top` is m′ and `bottom` is m″, only the first
/// `genus` entries are used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic {
    genus: u8,
    top: [u8; 3],
    bottom: [u8; 3],
}

impl Characteristic {
    pub fn new(top: &[u8], bottom: &[u8]) -> Result<Self> {
        let g = top.len();
        if g == 0 || g > 3 || bottom.len() != g || top.iter().chain(bottom).any(|&x| x > 1) {
            return Err(Error::InvalidCharacteristic(format!("{top:?}/{bottom:?}")));
        }
        let mut t = [0; 3];
        let mut b = [0; 3];
        t[..g].copy_from_slice(top);
        b[..g].copy_from_slice(bottom);
        Ok(Characteristic { genus: g as u8, top: t, bottom: b })
    }

    /// Genus-2 characteristic (a, b, c, d) with m′ = (a, b), m″ = (c, d).
    pub fn g2(a: u8, b: u8, c: u8, d: u8) -> Self {
        Self::new(&[a, b], &[c, d]).expect("entries in {0,1}")
    }

    /// Genus-1 characteristic (a, c).
    pub fn g1(a: u8, c: u8) -> Self {
        Self::new(&[a], &[c]).expect("entries in {0,1}")
    }

    pub fn genus(&self) -> usize {
        self.genus as usize
    }

    pub fn top(&self) -> &[u8] {
        &self.top[..self.genus()]
    }

    pub fn bottom(&self) -> &[u8] {
        &self.bottom[..self.genus()]
    }

    /// The 2g entries (m′, m″).
    pub fn entries(&self) -> Vec<i64> {
        self.top().iter().chain(self.bottom()).map(|&x| x as i64).collect()
    }

    pub fn from_entries(genus: usize, v: &[i64]) -> Self {
        let r: Vec<u8> = v.iter().map(|x| x.rem_euclid(2) as u8).collect();
        Self::new(&r[..genus], &r[genus..2 * genus]).unwrap()
    }

    pub fn parity(&self) -> Parity {
        let s: u8 = self.top().iter().zip(self.bottom()).map(|(a, b)| a * b).sum();
        if s % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// (a, b, c, d) of a genus-2 characteristic.
    pub fn abcd(&self) -> [i64; 4] {
        assert_eq!(self.genus, 2);
        [self.top[0] as i64, self.top[1] as i64, self.bottom[0] as i64, self.bottom[1] as i64]
    }

    /// Appends one more coordinate to m′ and m″.
    pub fn extend(&self, t: u8, b: u8) -> Self {
        let mut top = self.top().to_vec();
        let mut bottom = self.bottom().to_vec();
        top.push(t);
        bottom.push(b);
        Self::new(&top, &bottom).unwrap()
    }
}

pub fn all_characteristics(genus: usize) -> Vec<Characteristic> {
    (0..1u32 << (2 * genus))
        .map(|bits| {
            let v: Vec<i64> = (0..2 * genus).rev().map(|k| ((bits >> k) & 1) as i64).collect();
            Characteristic::from_entries(genus, &v)
        })
        .collect()
}

pub fn even_characteristics(genus: usize) -> Vec<Characteristic> {
    all_characteristics(genus).into_iter().filter(Characteristic::is_even).collect()
}

/// The six characteristics of F_Z.
pub fn fz_tuple() -> [Characteristic; 6] {
    let g = Characteristic::g2;
    [g(0, 0, 0, 0), g(0, 0, 0, 1), g(0, 0, 1, 0), g(0, 0, 1, 1), g(0, 1, 1, 0), g(0, 1, 0, 0)]
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.top().iter().chain(self.bottom()) {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Characteristic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bits: Vec<u8> = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidCharacteristic(s.to_string())),
            })
            .collect::<Result<_>>()?;
        if bits.is_empty() || bits.len() % 2 == 1 {
            return Err(Error::InvalidCharacteristic(s.to_string()));
        }
        let g = bits.len() / 2;
        Characteristic::new(&bits[..g], &bits[g..])
    }
}

impl Serialize for Characteristic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Characteristic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Comma-joined form of a tuple, e.g. "0000,0001".
pub fn tuple_string(ms: &[Characteristic]) -> String {
    ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_examples() {
        assert!(Characteristic::g2(0, 0, 0, 0).is_even());
        assert_eq!(Characteristic::g2(1, 0, 1, 0).parity(), Parity::Odd);
        assert_eq!(even_characteristics(2).len(), 10);
        assert_eq!(even_characteristics(1).len(), 3);
        assert_eq!(even_characteristics(3).len(), 36);
    }

    #[test]
    fn string_round_trip() {
        for m in all_characteristics(2) {
            let s = m.to_string();
            assert_eq!(s.parse::<Characteristic>().unwrap(), m);
            let json = serde_json::to_string(&m).unwrap();
            assert_eq!(serde_json::from_str::<Characteristic>(&json).unwrap(), m);
        }
        assert!("012".parse::<Characteristic>().is_err());
        assert!("0120".parse::<Characteristic>().is_err());
    }

    #[test]
    fn fz_members_are_even_and_distinct() {
        let t = fz_tuple();
        assert!(t.iter().all(Characteristic::is_even));
        let mut v = t.to_vec();
        v.sort();
        v.dedup();
        assert_eq!(v.len(), 6);
        assert_eq!(tuple_string(&t[..2]), "0000,0001");
    }
}
