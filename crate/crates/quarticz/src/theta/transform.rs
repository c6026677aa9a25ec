//! The characteristic action of Sp₂(Z), Igusa's phase, and the Γ(2) characters
//! of products of theta constants.

use serde::Serialize;

use crate::arith::GaussInt;
use crate::error::{Error, Result};
use crate::theta::characteristic::Characteristic;
use crate::theta::eval::{theta_eval, theta_gradient, tuple_eval};
use crate::theta::siegel::{cmat_inv, SiegelPoint, C64};
use crate::theta::symplectic::{generator, Block, SymplecticMat};

/// A phase φ ∈ (1/8)Z / Z stored as its numerator mod 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Phase8(pub u8);

impl Phase8 {
    fn from_numerator(k: i64) -> Self {
        Phase8(k.rem_euclid(8) as u8)
    }

    /// exp(2πiφ).
    pub fn exp(self) -> C64 {
        let ang = 2.0 * std::f64::consts::PI * self.0 as f64 / 8.0;
        C64::new(ang.cos(), ang.sin())
    }

    /// exp(4πiφ) = i^k, exact.
    pub fn exp_twice(self) -> GaussInt {
        GaussInt::i_pow(self.0 as i64)
    }
}

fn bt(b: Block) -> Block {
    [[b[0][0], b[1][0]], [b[0][1], b[1][1]]]
}

fn bmul(x: Block, y: Block) -> Block {
    let mut o = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            o[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    o
}

/// Row vector times matrix, then dotted with a row vector.
fn form(u: [i64; 2], m: Block, v: [i64; 2]) -> i64 {
    (0..2).map(|i| (0..2).map(|j| u[i] * m[i][j] * v[j]).sum::<i64>()).sum()
}

/// M·m reduced mod 2 and the phase φ with
/// θ_{M·m}(Mτ) = κ(M) exp(2πiφ) det(Cτ+D)^{1/2} θ_m(τ).
///
/// Uses M·m = mM⁻¹ + (diag(CᵗD), diag(AᵗB)) and
/// φ = −(m′ᵗBDᵗm′ + m″ᵗACᵗm″ − 2m′ᵗBCᵗm″)/8 + (m′ᵗD − m″ᵗC)·diag(AᵗB)/4.
/// Bringing the unreduced characteristic back to {0,1} entries costs the
/// sign (−1)^{m′·n″}, which is folded into the returned phase.
pub fn characteristic_action(mat: &SymplecticMat, m: &Characteristic) -> Result<(Characteristic, Phase8)> {
    if !mat.is_symplectic() {
        return Err(Error::NotSymplectic);
    }
    if m.genus() != 2 {
        return Err(Error::InvalidCharacteristic(format!("{m} is not genus 2")));
    }
    let (a, b, c, d) = (mat.a(), mat.b(), mat.c(), mat.d());
    let v = m.entries();
    let inv = mat.inverse().rows();
    let mut u: Vec<i64> = (0..4).map(|j| (0..4).map(|i| v[i] * inv[i][j]).sum()).collect();
    let cdt = bmul(c, bt(d));
    let abt = bmul(a, bt(b));
    u[0] += cdt[0][0];
    u[1] += cdt[1][1];
    u[2] += abt[0][0];
    u[3] += abt[1][1];

    let mp = [v[0], v[1]];
    let mpp = [v[2], v[3]];
    let q1 = form(mp, bmul(bt(b), d), mp);
    let q2 = form(mpp, bmul(bt(a), c), mpp);
    let q3 = form(mp, bmul(bt(b), c), mpp);
    let dag = [abt[0][0], abt[1][1]];
    let row = |x: [i64; 2], mm: Block| [x[0] * mm[0][0] + x[1] * mm[1][0], x[0] * mm[0][1] + x[1] * mm[1][1]];
    let l1 = row(mp, bt(d));
    let l2 = row(mpp, bt(c));
    let lin = (l1[0] - l2[0]) * dag[0] + (l1[1] - l2[1]) * dag[1];
    let mut num = -(q1 + q2 - 2 * q3) + 2 * lin;

    let r: Vec<i64> = u.iter().map(|x| x.rem_euclid(2)).collect();
    let n2: Vec<i64> = (0..4).map(|k| (u[k] - r[k]) / 2).collect();
    num += 4 * (r[0] * n2[2] + r[1] * n2[3]);
    Ok((Characteristic::from_entries(2, &r), Phase8::from_numerator(num)))
}

/// κ(M)² = (−1)^{tr(D−I)/2} on Γ(2).
pub fn kappa_squared(mat: &SymplecticMat) -> i64 {
    let d = mat.d();
    if ((d[0][0] - 1 + d[1][1] - 1) / 2).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// χ(e_i) of a 2r-tuple, extended from the pair table by adding exponents
/// over all members; the constant in the e₆ column contributes once per pair.
pub fn table1_tuple_char(ms: &[Characteristic], i: usize) -> Result<GaussInt> {
    if !(1..=10).contains(&i) {
        return Err(Error::GeneratorIndex(i));
    }
    let s = |f: &dyn Fn([i64; 4]) -> i64| ms.iter().map(|m| f(m.abcd())).sum::<i64>();
    let sign = |e: i64| GaussInt::from(if e.rem_euclid(2) == 0 { 1 } else { -1 });
    let r = ms.len() as i64 / 2;
    Ok(match i {
        1 => sign(s(&|[_, b, c, _]| b * c)),
        2 => sign(s(&|[a, _, _, d]| a * d)),
        3 => sign(s(&|[a, b, _, _]| a * b)),
        4 => sign(s(&|[_, _, c, d]| c * d)),
        5 => GaussInt::ONE,
        6 => sign(r + s(&|[a, _, c, _]| a * c)),
        7 => GaussInt::i_pow(s(&|[a, _, _, _]| a)),
        8 => GaussInt::i_pow(s(&|[_, b, _, _]| b)),
        // The lower-triangular generators act through i^{−Σc}, i^{−Σd}.
        9 => GaussInt::i_pow(-s(&|[_, _, c, _]| c)),
        _ => GaussInt::i_pow(-s(&|[_, _, _, d]| d)),
    })
}

pub fn table1_char(m1: &Characteristic, m2: &Characteristic, i: usize) -> Result<GaussInt> {
    table1_tuple_char(&[*m1, *m2], i)
}

/// Character of a tuple on a word in the generators, as a product of table values.
pub fn table1_word_char(ms: &[Characteristic], word: &[usize]) -> Result<GaussInt> {
    word.iter().try_fold(GaussInt::ONE, |acc, &i| Ok(acc * table1_tuple_char(ms, i)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct IgusaCheck {
    pub squared_residual: f64,
    pub ratio_residual: f64,
    pub ratio: C64,
    pub predicted: C64,
}

/// Squared transformation law per characteristic, and the weight-r slash ratio
/// of the whole product against the predicted character κ²·Πexp(2πiφ_j).
/// Residuals are relative to max(1, |right side|).
pub fn verify_igusa_transformation(ms: &[Characteristic], mat: &SymplecticMat, tau: &SiegelPoint, tol: f64) -> Result<IgusaCheck> {
    if let Some(m) = ms.iter().find(|m| !m.is_even()) {
        return Err(Error::OddInTuple(m.to_string()));
    }
    if !mat.is_symplectic() {
        return Err(Error::NotSymplectic);
    }
    if !mat.in_gamma2() {
        return Err(Error::NotInGamma2);
    }
    let mt = tau.act(mat)?;
    let j = tau.j(mat);
    let k2 = kappa_squared(mat) as f64;
    let mut sq = 0.0f64;
    let mut phase_num = 0i64;
    for m in ms {
        let (mm, phi) = characteristic_action(mat, m)?;
        let lhs = theta_eval(&mm, &mt, tol)?.powu(2);
        let rhs = theta_eval(m, tau, tol)?.powu(2) * j * k2 * phi.exp_twice().to_complex();
        sq = sq.max((lhs - rhs).norm() / rhs.norm().max(1.0));
        phase_num += phi.0 as i64;
    }
    // For a pair the product character is κ² exp(2πi(φ₁+φ₂)); longer tuples
    // carry κ^{2r}.
    let r = ms.len() as i32 / 2;
    let predicted = C64::new(k2, 0.0).powi(r) * Phase8::from_numerator(phase_num).exp();
    let ratio = slash_ratio(ms, mat, tau, tol)?;
    Ok(IgusaCheck { squared_residual: sq, ratio_residual: (ratio - predicted).norm(), ratio, predicted })
}

/// (Π θ_{m_j})|_r[M] / Π θ_{m_j} at τ, with r = len/2.
pub fn slash_ratio(ms: &[Characteristic], mat: &SymplecticMat, tau: &SiegelPoint, tol: f64) -> Result<C64> {
    let mt = tau.act(mat)?;
    let j = tau.j(mat);
    let r = ms.len() as i32 / 2;
    Ok(tuple_eval(ms, &mt, tol)? / (j.powi(r) * tuple_eval(ms, tau, tol)?))
}

/// The character of a pair on M, measured numerically. Odd members enter
/// through ∇_zθ, which transforms like θ times (Cτ+D); a pair of odd members
/// uses the Jacobian determinant det[∇θ_{m₁}, ∇θ_{m₂}] of weight 2.
pub fn pair_character_numeric(m1: &Characteristic, m2: &Characteristic, mat: &SymplecticMat, tau: &SiegelPoint, tol: f64) -> Result<C64> {
    let mt = tau.act(mat)?;
    let j = tau.j(mat);
    let w = tau.automorphy(mat);
    let winv = cmat_inv(&w);
    let apply = |m: &[[C64; 2]; 2], v: [C64; 2]| [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]];
    match (m1.is_even(), m2.is_even()) {
        (true, true) => slash_ratio(&[*m1, *m2], mat, tau, tol),
        (true, false) | (false, true) => {
            let (e, o) = if m1.is_even() { (m1, m2) } else { (m2, m1) };
            let v_at = |t: &SiegelPoint| -> Result<[C64; 2]> {
                let th = theta_eval(e, t, tol)?;
                let g = theta_gradient(o, t, tol)?;
                Ok([th * g[0], th * g[1]])
            };
            let lhs = apply(&winv, v_at(&mt)?);
            let base = v_at(tau)?;
            let rhs = [base[0] * j, base[1] * j];
            let den = rhs[0].norm_sqr() + rhs[1].norm_sqr();
            Ok((lhs[0] * rhs[0].conj() + lhs[1] * rhs[1].conj()) / den)
        }
        (false, false) => {
            let det = |t: &SiegelPoint| -> Result<C64> {
                let g1 = theta_gradient(m1, t, tol)?;
                let g2 = theta_gradient(m2, t, tol)?;
                Ok(g1[0] * g2[1] - g1[1] * g2[0])
            };
            Ok(det(&mt)? / (j * j * det(tau)?))
        }
    }
}

fn gamma_z_congruences(ms: &[Characteristic], third: &dyn Fn([i64; 4]) -> i64) -> bool {
    let s = |f: &dyn Fn([i64; 4]) -> i64| ms.iter().map(|m| f(m.abcd())).sum::<i64>();
    let bc = s(&|[_, b, c, _]| b * c);
    let cd = s(&|[_, _, c, d]| c * d);
    let sc = s(&|[_, _, c, _]| c);
    let sb = s(&|[_, b, _, _]| b);
    let ad = s(&|[a, _, _, d]| a * d);
    let sd = s(&|[_, _, _, d]| d);
    let ac = s(&|[a, _, c, _]| a * c);
    [bc + cd, bc + sc, sb + s(third), ad + sd, bc + ac - 1].iter().all(|x| x.rem_euclid(2) == 0)
}

/// The five congruences cutting out 2r-tuple products on Γ_Z. The third
/// reads Σb + Σab ≡ 0, the condition e₈²e₃ actually imposes.
pub fn gamma_z_tuple_predicate(ms: &[Characteristic]) -> bool {
    gamma_z_congruences(ms, &|[a, b, _, _]| a * b)
}

/// The congruences with the third read as Σb + Σad ≡ 0.
pub fn gamma_z_tuple_predicate_printed(ms: &[Characteristic]) -> bool {
    gamma_z_congruences(ms, &|[a, _, _, d]| a * d)
}

/// Words in e₁..e₁₀ for the elementary members of Γ(4,8).
pub fn gamma48_words() -> Vec<Vec<usize>> {
    vec![vec![7; 4], vec![8; 4], vec![3; 2], vec![9; 4], vec![10; 4], vec![4; 2], vec![1; 2], vec![2; 2]]
}

/// Whether the product is invariant under Γ(4,8) and the Γ_Z generators,
/// decided from Table 1 characters.
pub fn gamma_z_invariant_by_table(ms: &[Characteristic]) -> Result<bool> {
    let words = gamma48_words().into_iter().chain(gamma_z_generator_words().into_iter().map(|(_, w)| w));
    for w in words {
        if table1_word_char(ms, &w)? != GaussInt::ONE {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Index words of the Γ_Z generators in terms of e₁..e₁₀.
pub fn gamma_z_generator_words() -> Vec<(&'static str, Vec<usize>)> {
    vec![
        ("e1e4", vec![1, 4]),
        ("e1e6", vec![1, 6]),
        ("e1e9^2", vec![1, 9, 9]),
        ("e8^2e3", vec![8, 8, 3]),
        ("e2e10^2", vec![2, 10, 10]),
    ]
}

pub fn word_matrix(word: &[usize]) -> SymplecticMat {
    word.iter().fold(SymplecticMat::identity(), |acc, &i| acc * generator(i).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::characteristic::{all_characteristics, even_characteristics, fz_tuple};
    use crate::theta::siegel::sample_points;
    use crate::theta::symplectic::{gamma_z_generators, sp4_generators};

    #[test]
    fn identity_and_minus_identity() {
        for m in all_characteristics(2) {
            let (mm, phi) = characteristic_action(&SymplecticMat::identity(), &m).unwrap();
            assert_eq!((mm, phi), (m, Phase8(0)));
            let (mm, _) = characteristic_action(&generator(5).unwrap(), &m).unwrap();
            assert_eq!(mm, m);
        }
    }

    #[test]
    fn j_swaps_halves() {
        let j = sp4_generators()[0];
        for m in all_characteristics(2) {
            let [a, b, c, d] = m.abcd();
            let (mm, _) = characteristic_action(&j, &m).unwrap();
            assert_eq!(mm, Characteristic::g2(c as u8, d as u8, a as u8, b as u8));
        }
    }

    #[test]
    fn action_is_a_group_action_mod_2() {
        let gens = sp4_generators();
        for m in all_characteristics(2) {
            for x in &gens {
                for y in &gens {
                    let (ym, _) = characteristic_action(y, &m).unwrap();
                    let (xym, _) = characteristic_action(x, &ym).unwrap();
                    let (direct, _) = characteristic_action(&(*x * *y), &m).unwrap();
                    assert_eq!(xym, direct);
                }
            }
        }
    }

    #[test]
    fn gamma2_fixes_characteristics() {
        for i in 1..=10 {
            for m in all_characteristics(2) {
                assert_eq!(characteristic_action(&generator(i).unwrap(), &m).unwrap().0, m);
            }
        }
    }

    #[test]
    fn table_examples() {
        let pair = [Characteristic::g2(1, 0, 0, 0), Characteristic::g2(1, 1, 0, 0)];
        assert_eq!(table1_char(&pair[0], &pair[1], 5).unwrap(), GaussInt::ONE);
        assert_eq!(table1_char(&pair[0], &pair[1], 7).unwrap(), GaussInt::from(-1));
        assert_eq!(table1_tuple_char(&fz_tuple(), 6).unwrap(), GaussInt::from(-1));
        assert!(table1_char(&pair[0], &pair[1], 11).is_err());
    }

    #[test]
    fn predicate_examples() {
        assert!(gamma_z_tuple_predicate(&fz_tuple()));
        assert!(!gamma_z_tuple_predicate(&[]));
        assert!(!gamma_z_tuple_predicate(&[Characteristic::g2(0, 0, 0, 0); 6]));
    }

    #[test]
    fn fz_character_trivial_on_gamma_z() {
        for (_, w) in gamma_z_generator_words() {
            assert_eq!(table1_word_char(&fz_tuple(), &w).unwrap(), GaussInt::ONE);
        }
        let named: Vec<_> = gamma_z_generators().into_iter().map(|(_, m)| m).collect();
        let from_words: Vec<_> = gamma_z_generator_words().into_iter().map(|(_, w)| word_matrix(&w)).collect();
        assert_eq!(named, from_words);
    }

    #[test]
    fn squared_law_on_generators() {
        let tau = sample_points()[2];
        let evens = even_characteristics(2);
        for i in 1..=10 {
            let chk = verify_igusa_transformation(&evens[..2], &generator(i).unwrap(), &tau, 1e-14).unwrap();
            assert!(chk.squared_residual < 1e-9, "e{i}: {chk:?}");
            assert!(chk.ratio_residual < 1e-9, "e{i}: {chk:?}");
        }
    }
}
