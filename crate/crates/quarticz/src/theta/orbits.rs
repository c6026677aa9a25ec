//! Orbits of Sp₂(Z) on sets of even characteristics.

use std::collections::BTreeSet;

use crate::theta::characteristic::{even_characteristics, Characteristic};
use crate::theta::symplectic::sp4_generators;
use crate::theta::transform::characteristic_action;

/// A set of even genus-2 characteristics as a bitmask over the ten evens.
pub type EvenSet = u16;

pub fn set_members(s: EvenSet) -> Vec<Characteristic> {
    let evens = even_characteristics(2);
    (0..10).filter(|i| s >> i & 1 == 1).map(|i| evens[i]).collect()
}

pub fn set_from_members(ms: &[Characteristic]) -> EvenSet {
    let evens = even_characteristics(2);
    ms.iter().map(|m| 1 << evens.iter().position(|e| e == m).expect("even characteristic")).fold(0, |a, b| a | b)
}

/// Permutations of the ten evens induced by generators of Sp₂(Z).
fn generator_perms() -> Vec<[usize; 10]> {
    let evens = even_characteristics(2);
    sp4_generators()
        .iter()
        .map(|g| {
            let mut p = [0; 10];
            for (i, m) in evens.iter().enumerate() {
                let (mm, _) = characteristic_action(g, m).expect("symplectic generator");
                p[i] = evens.iter().position(|e| *e == mm).expect("action preserves parity");
            }
            p
        })
        .collect()
}

/// Orbits of Sp₂(Z) on the k-element subsets of the even characteristics,
/// each orbit sorted and the list ordered by smallest member.
pub fn orbit_decomposition(k: u32) -> Vec<Vec<EvenSet>> {
    let perms = generator_perms();
    let apply = |p: &[usize; 10], s: EvenSet| (0..10).filter(|i| s >> i & 1 == 1).fold(0u16, |a, i| a | 1 << p[i]);
    let mut seen = BTreeSet::new();
    let mut orbits = vec![];
    for s in (0u16..1 << 10).filter(|s| s.count_ones() == k) {
        if seen.contains(&s) {
            continue;
        }
        let mut orbit = BTreeSet::from([s]);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for p in &perms {
                let y = apply(p, x);
                if orbit.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.extend(orbit.iter().copied());
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::characteristic::fz_tuple;

    #[test]
    fn six_subsets_split() {
        let orbits = orbit_decomposition(6);
        assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), 210);
        let fz = set_from_members(&fz_tuple());
        let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        assert_eq!(orbits.len(), 3, "{sizes:?}");
        assert_eq!(orbits.iter().find(|o| o.contains(&fz)).unwrap().len(), 15);
        assert_eq!(set_from_members(&set_members(fz)), fz);
    }
}
