//! Integral symplectic 4×4 matrices, congruence subgroups and the named generators.

use std::fmt;
use std::ops::Mul;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Block = [[i64; 2]; 2];

/// M = [[A, B], [C, D]] in Sp₂(Z), acting by τ ↦ (Aτ + B)(Cτ + D)⁻¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymplecticMat(pub [[i64; 4]; 4]);

fn j4() -> [[i64; 4]; 4] {
    [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]
}

fn mul4(a: &[[i64; 4]; 4], b: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn transpose4(a: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i];
        }
    }
    out
}

impl SymplecticMat {
    pub fn new(rows: [[i64; 4]; 4]) -> Result<Self> {
        let m = SymplecticMat(rows);
        if !m.is_symplectic() {
            return Err(Error::NotSymplectic);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        SymplecticMat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    }

    pub fn from_blocks(a: Block, b: Block, c: Block, d: Block) -> Result<Self> {
        let mut m = [[0; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = a[i][j];
                m[i][j + 2] = b[i][j];
                m[i + 2][j] = c[i][j];
                m[i + 2][j + 2] = d[i][j];
            }
        }
        Self::new(m)
    }

    fn block(&self, r: usize, c: usize) -> Block {
        [[self.0[r][c], self.0[r][c + 1]], [self.0[r + 1][c], self.0[r + 1][c + 1]]]
    }

    pub fn a(&self) -> Block {
        self.block(0, 0)
    }
    pub fn b(&self) -> Block {
        self.block(0, 2)
    }
    pub fn c(&self) -> Block {
        self.block(2, 0)
    }
    pub fn d(&self) -> Block {
        self.block(2, 2)
    }

    /// ᵗM J M = J.
    pub fn is_symplectic(&self) -> bool {
        mul4(&mul4(&transpose4(&self.0), &j4()), &self.0) == j4()
    }

    pub fn transpose(&self) -> Self {
        SymplecticMat(transpose4(&self.0))
    }

    /// M⁻¹ = [[ᵗD, −ᵗB], [−ᵗC, ᵗA]].
    pub fn inverse(&self) -> Self {
        let t = |b: Block| [[b[0][0], b[1][0]], [b[0][1], b[1][1]]];
        let neg = |b: Block| b.map(|r| r.map(|x| -x));
        Self::from_blocks(t(self.d()), neg(t(self.b())), neg(t(self.c())), t(self.a())).expect("inverse of a symplectic matrix")
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(), |acc, _| acc * *self)
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.0.iter().flatten().map(|x| x.abs()).max().unwrap_or(0)
    }

    fn congruent_identity(&self, n: i64) -> bool {
        (0..4).all(|i| (0..4).all(|j| (self.0[i][j] - i64::from(i == j)).rem_euclid(n) == 0))
    }

    pub fn in_gamma2(&self) -> bool {
        self.congruent_identity(2)
    }

    pub fn in_gamma4(&self) -> bool {
        self.congruent_identity(4)
    }

    /// Γ(2,4): Γ(2) with diag(B) ≡ diag(C) ≡ 0 mod 4.
    pub fn in_gamma24(&self) -> bool {
        let (b, c) = (self.b(), self.c());
        self.in_gamma2() && (0..2).all(|i| b[i][i] % 4 == 0 && c[i][i] % 4 == 0)
    }

    /// Γ(4,8): Γ(4) with diag(B) ≡ diag(C) ≡ 0 mod 8.
    pub fn in_gamma48(&self) -> bool {
        let (b, c) = (self.b(), self.c());
        self.in_gamma4() && (0..2).all(|i| b[i][i] % 8 == 0 && c[i][i] % 8 == 0)
    }

    pub fn rows(&self) -> [[i64; 4]; 4] {
        self.0
    }
}

impl Mul for SymplecticMat {
    type Output = SymplecticMat;
    fn mul(self, o: SymplecticMat) -> SymplecticMat {
        SymplecticMat(mul4(&self.0, &o.0))
    }
}

impl fmt::Display for SymplecticMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.iter().map(|r| format!("{r:?}")).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// The ten generators e₁..e₁₀ of Γ(2)/Γ(4,8), indexed from 1.
pub fn generator(i: usize) -> Result<SymplecticMat> {
    let e1 = SymplecticMat([[1, 0, 0, 0], [2, 1, 0, 0], [0, 0, 1, -2], [0, 0, 0, 1]]);
    let e3 = SymplecticMat([[1, 0, 0, 2], [0, 1, 2, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
    let e7 = SymplecticMat([[1, 0, 2, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
    let e8 = SymplecticMat([[1, 0, 0, 0], [0, 1, 0, 2], [0, 0, 1, 0], [0, 0, 0, 1]]);
    Ok(match i {
        1 => e1,
        2 => e1.transpose(),
        3 => e3,
        4 => e3.transpose(),
        5 => SymplecticMat([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]),
        6 => SymplecticMat([[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]),
        7 => e7,
        8 => e8,
        9 => e7.transpose(),
        10 => e8.transpose(),
        _ => return Err(Error::GeneratorIndex(i)),
    })
}

pub fn generators() -> Vec<SymplecticMat> {
    (1..=10).map(|i| generator(i).unwrap()).collect()
}

/// The five extra generators which, with Γ(4,8), generate Γ_Z:
/// e₁e₄, e₁e₆, e₁e₉², e₈²e₃, e₂e₁₀².
pub fn gamma_z_generators() -> Vec<(&'static str, SymplecticMat)> {
    let e = |i| generator(i).unwrap();
    vec![
        ("e1e4", e(1) * e(4)),
        ("e1e6", e(1) * e(6)),
        ("e1e9^2", e(1) * e(9).pow(2)),
        ("e8^2e3", e(8).pow(2) * e(3)),
        ("e2e10^2", e(2) * e(10).pow(2)),
    ]
}

/// A generating set of Sp₂(Z): J and the elementary translations.
pub fn sp4_generators() -> Vec<SymplecticMat> {
    let t = |b: Block| SymplecticMat::from_blocks([[1, 0], [0, 1]], b, [[0, 0], [0, 0]], [[1, 0], [0, 1]]).unwrap();
    vec![SymplecticMat(j4()), t([[1, 0], [0, 0]]), t([[0, 0], [0, 1]]), t([[0, 1], [1, 0]])]
}

/// Random word in e₁..e₁₀ and their inverses with entries bounded by `bound`.
pub fn random_gamma2<R: Rng>(rng: &mut R, bound: i64) -> SymplecticMat {
    let gens = generators();
    loop {
        let len = rng.gen_range(1..=4);
        let mut m = SymplecticMat::identity();
        for _ in 0..len {
            let g = gens[rng.gen_range(0..gens.len())];
            m = m * if rng.gen_bool(0.5) { g } else { g.inverse() };
        }
        if m.max_abs_entry() <= bound && m != SymplecticMat::identity() {
            return m;
        }
    }
}

/// Elementary members of Γ(4,8): translations, their transposes, and
/// block-diagonal elements with A ≡ I mod 4.
pub fn gamma48_basics() -> Vec<SymplecticMat> {
    let id = [[1, 0], [0, 1]];
    let z = [[0, 0], [0, 0]];
    let up = |b: Block| SymplecticMat::from_blocks(id, b, z, id).unwrap();
    let mut out = vec![];
    for b in [[[8, 0], [0, 0]], [[0, 0], [0, 8]], [[0, 4], [4, 0]]] {
        out.push(up(b));
        out.push(up(b).transpose());
    }
    let a = [[1, 4], [0, 1]];
    let d = [[1, 0], [-4, 1]];
    let diag = SymplecticMat::from_blocks(a, z, z, d).unwrap();
    out.push(diag);
    out.push(diag.transpose());
    out
}

/// Random word in the elementary Γ(4,8) members and their inverses.
pub fn random_gamma48<R: Rng>(rng: &mut R, max_len: usize, bound: i64) -> SymplecticMat {
    let basics = gamma48_basics();
    loop {
        let len = rng.gen_range(1..=max_len);
        let mut m = SymplecticMat::identity();
        for _ in 0..len {
            let g = basics[rng.gen_range(0..basics.len())];
            m = m * if rng.gen_bool(0.5) { g } else { g.inverse() };
        }
        if m.max_abs_entry() <= bound && m != SymplecticMat::identity() {
            debug_assert!(m.in_gamma48());
            return m;
        }
    }
}

/// `n` reproducible samples of `random_gamma2`.
pub fn sample_gamma2(seed: u64, n: usize, bound: i64) -> Vec<SymplecticMat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_gamma2(&mut rng, bound)).collect()
}

/// `n` reproducible samples of `random_gamma48`.
pub fn sample_gamma48(seed: u64, n: usize, max_len: usize, bound: i64) -> Vec<SymplecticMat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_gamma48(&mut rng, max_len, bound)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_in_gamma2() {
        for (i, g) in generators().iter().enumerate() {
            assert!(g.is_symplectic(), "e{}", i + 1);
            assert!(g.in_gamma2());
            assert_eq!(*g * g.inverse(), SymplecticMat::identity());
        }
        assert!(generator(0).is_err() && generator(11).is_err());
    }

    #[test]
    fn gamma_z_generators_membership() {
        for (name, g) in gamma_z_generators() {
            assert!(g.is_symplectic() && g.in_gamma2(), "{name}");
            assert!(!g.in_gamma48(), "{name}");
        }
    }

    #[test]
    fn rejects_non_symplectic() {
        assert!(SymplecticMat::new([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]).is_err());
    }

    #[test]
    fn random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_gamma2(&mut rng, 8);
            assert!(m.is_symplectic() && m.in_gamma2() && m.max_abs_entry() <= 8);
            let n = random_gamma48(&mut rng, 3, 64);
            assert!(n.is_symplectic() && n.in_gamma48());
        }
    }
}
