//! Independent oracle for the commutative specialization.
//!
//! When `k` commutes with its derivatives the symbols of `D_k` and its
//! parametrix are 2×2 complex matrices whose entries are Laurent
//! polynomials in `ξ₁, ξ₂, k, δ₁(k), δ₂(k), δ₁δ₁(k), δ₁δ₂(k), δ₂δ₂(k)` times
//! powers of `Q⁻¹ = (ξ₁² + k²ξ₂²)⁻¹`. This module implements that calculus
//! directly (explicit Pauli matrices, chain-rule derivatives), sharing no
//! code with the word-based engine, and is used to cross-check it.

use super::PsidoError;
use crate::algebra::{AlgebraError, Generator, NcSymbol, SigmaBasis};
use crate::arith::{gauss, gauss_real, rat, rat_int, GaussRat, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

const E1: usize = 0;
const E2: usize = 1;
const K: usize = 2;
const K1: usize = 3;
const K11: usize = 5;
const Q: usize = 8;
const NVARS: usize = 9;

/// Exponents `[ξ₁, ξ₂, k, k₁, k₂, k₁₁, k₁₂, k₂₂, Q⁻¹]`.
type Mono = [i64; NVARS];

/// Scalar entry: a finite sum of monomials.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Scalar(BTreeMap<Mono, GaussRat>);

impl Scalar {
    fn add_mono(&mut self, m: Mono, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(m).or_insert_with(GaussRat::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&m);
        }
    }

    fn add(&self, o: &Scalar) -> Scalar {
        let mut r = self.clone();
        for (m, c) in &o.0 {
            r.add_mono(*m, c.clone());
        }
        r
    }

    fn mul(&self, o: &Scalar) -> Scalar {
        let mut r = Scalar::default();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &o.0 {
                let mut m = *ma;
                for i in 0..NVARS {
                    m[i] += mb[i];
                }
                r.add_mono(m, ca * cb);
            }
        }
        r
    }

    fn scale(&self, c: &GaussRat) -> Scalar {
        let mut r = Scalar::default();
        for (m, v) in &self.0 {
            r.add_mono(*m, v * c);
        }
        r
    }

    fn filter_degree(&self, min: i64) -> Scalar {
        Scalar(self.0.iter().filter(|(m, _)| degree(m) >= min).map(|(m, c)| (*m, c.clone())).collect())
    }

    /// `∂/∂ξⱼ`, using `∂ξ₁ Q⁻ᵠ = −2qξ₁Q⁻ᵠ⁻¹` and `∂ξ₂ Q⁻ᵠ = −2qk²ξ₂Q⁻ᵠ⁻¹`.
    fn dxi(&self, j: usize) -> Scalar {
        let e = if j == 1 { E1 } else { E2 };
        let mut r = Scalar::default();
        for (m, c) in &self.0 {
            if m[e] != 0 {
                let mut n = *m;
                n[e] -= 1;
                r.add_mono(n, c * gauss_real(rat_int(m[e])));
            }
            if m[Q] != 0 {
                let mut n = *m;
                n[Q] += 1;
                n[e] += 1;
                if j == 2 {
                    n[K] += 2;
                }
                r.add_mono(n, c * gauss_real(rat_int(-2 * m[Q])));
            }
        }
        r
    }

    /// `δⱼ` by the chain rule: `δⱼ f = ∂ₖf·kⱼ + Σᵢ ∂_{kᵢ}f·kᵢⱼ`.
    fn delta(&self, j: usize) -> Result<Scalar, AlgebraError> {
        let kj = K1 + j - 1;
        let kij = |i: usize| K11 + (i - 1) + (j - 1);
        let mut r = Scalar::default();
        for (m, c) in &self.0 {
            if m[K11..Q].iter().any(|&e| e != 0) {
                return Err(AlgebraError::ThirdDerivative);
            }
            // ∂/∂k of k^a Q⁻ᵠ.
            if m[K] != 0 {
                let mut n = *m;
                n[K] -= 1;
                n[kj] += 1;
                r.add_mono(n, c * gauss_real(rat_int(m[K])));
            }
            if m[Q] != 0 {
                let mut n = *m;
                n[Q] += 1;
                n[K] += 1;
                n[E2] += 2;
                n[kj] += 1;
                r.add_mono(n, c * gauss_real(rat_int(-2 * m[Q])));
            }
            for i in 1..=2 {
                let ki = K1 + i - 1;
                if m[ki] != 0 {
                    let mut n = *m;
                    n[ki] -= 1;
                    n[kij(i)] += 1;
                    r.add_mono(n, c * gauss_real(rat_int(m[ki])));
                }
            }
        }
        Ok(r)
    }

    /// Whether the entry vanishes once `Q⁻¹` is cleared against
    /// `Q = ξ₁² + k²ξ₂²`.
    fn is_zero(&self) -> bool {
        let Some(top) = self.0.keys().map(|m| m[Q]).max() else {
            return true;
        };
        let mut acc: BTreeMap<Mono, GaussRat> = BTreeMap::new();
        for (m, c) in &self.0 {
            let p = (top - m[Q]) as u32;
            let mut binom = BigInt::from(1);
            for r in 0..=p {
                let mut n = *m;
                n[Q] = 0;
                n[E1] += 2 * (p - r) as i64;
                n[E2] += 2 * r as i64;
                n[K] += 2 * r as i64;
                let e = acc.entry(n).or_insert_with(GaussRat::zero);
                *e += c * gauss_real(Rat::from_integer(binom.clone()));
                binom = binom * BigInt::from(p - r) / BigInt::from(r + 1);
            }
        }
        acc.values().all(|c| c.is_zero())
    }
}

fn degree(m: &Mono) -> i64 {
    m[E1] + m[E2] - 2 * m[Q]
}

fn mono(c: GaussRat, exps: &[(usize, i64)]) -> Scalar {
    let mut m = [0i64; NVARS];
    for &(i, e) in exps {
        m[i] += e;
    }
    let mut s = Scalar::default();
    s.add_mono(m, c);
    s
}

/// A 2×2 matrix of scalar entries (row-major).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MatSymbol([Scalar; 4]);

impl MatSymbol {
    fn add(&self, o: &MatSymbol) -> MatSymbol {
        MatSymbol(std::array::from_fn(|i| self.0[i].add(&o.0[i])))
    }

    fn mul(&self, o: &MatSymbol) -> MatSymbol {
        MatSymbol(std::array::from_fn(|idx| {
            let (r, c) = (idx / 2, idx % 2);
            self.0[2 * r].mul(&o.0[c]).add(&self.0[2 * r + 1].mul(&o.0[2 + c]))
        }))
    }

    fn scale(&self, c: &GaussRat) -> MatSymbol {
        MatSymbol(std::array::from_fn(|i| self.0[i].scale(c)))
    }

    fn map<F: Fn(&Scalar) -> Scalar>(&self, f: F) -> MatSymbol {
        MatSymbol(std::array::from_fn(|i| f(&self.0[i])))
    }

    fn try_map<F: Fn(&Scalar) -> Result<Scalar, AlgebraError>>(&self, f: F) -> Result<MatSymbol, AlgebraError> {
        let [a, b, c, d] = &self.0;
        Ok(MatSymbol([f(a)?, f(b)?, f(c)?, f(d)?]))
    }

    fn max_degree(&self) -> Option<i64> {
        self.0.iter().flat_map(|s| s.0.keys().map(degree)).max()
    }

    fn is_zero_now(&self) -> bool {
        self.0.iter().all(|s| s.0.is_empty())
    }

    /// Whether the matrix vanishes modulo the `Q` relation.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    fn part(&self, d: i64) -> MatSymbol {
        self.map(|s| Scalar(s.0.iter().filter(|(m, _)| degree(m) == d).map(|(m, c)| (*m, c.clone())).collect()))
    }

    fn at_least(&self, d: i64) -> MatSymbol {
        self.map(|s| s.filter_degree(d))
    }

    /// `c · σ` for a Pauli basis element.
    fn pauli(sigma: SigmaBasis, entry: &Scalar) -> MatSymbol {
        let z = Scalar::default;
        let i = gauss(rat_int(0), rat_int(1));
        let mi = gauss(rat_int(0), rat_int(-1));
        match sigma {
            SigmaBasis::Id => MatSymbol([entry.clone(), z(), z(), entry.clone()]),
            SigmaBasis::S1 => MatSymbol([z(), entry.clone(), entry.clone(), z()]),
            SigmaBasis::S2 => MatSymbol([z(), entry.scale(&mi), entry.scale(&i), z()]),
            SigmaBasis::S3 => MatSymbol([entry.clone(), z(), z(), entry.scale(&gauss_real(rat_int(-1)))]),
        }
    }
}

/// Symbol product `Σ_α (1/α!) ∂_ξ^α P · δ^α Q` truncated to degrees `≥ cutoff`.
fn compose_matrix(p: &MatSymbol, q: &MatSymbol, cutoff: i64) -> Result<MatSymbol, AlgebraError> {
    let (Some(dp), Some(dq)) = (p.max_degree(), q.max_degree()) else {
        return Ok(MatSymbol::default());
    };
    let mut out = MatSymbol::default();
    let top = dp + dq - cutoff;
    for a1 in 0..=top.max(-1) {
        for a2 in 0..=(top - a1) {
            let a = a1 + a2;
            let mut pa = p.at_least(cutoff + a - dq);
            for _ in 0..a1 {
                pa = pa.map(|s| s.dxi(1));
            }
            for _ in 0..a2 {
                pa = pa.map(|s| s.dxi(2));
            }
            if pa.is_zero_now() {
                continue;
            }
            let mut qa = q.at_least(cutoff + a - dp);
            for _ in 0..a1 {
                qa = qa.try_map(|s| s.delta(1))?;
            }
            for _ in 0..a2 {
                qa = qa.try_map(|s| s.delta(2))?;
            }
            let fact: i64 = (1..=a1).product::<i64>() * (1..=a2).product::<i64>();
            out = out.add(&pa.mul(&qa).at_least(cutoff).scale(&gauss_real(rat(1, fact))));
        }
    }
    Ok(out)
}

fn dirac_matrix() -> MatSymbol {
    let one = gauss_real(rat_int(1));
    MatSymbol::pauli(SigmaBasis::S1, &mono(one.clone(), &[(E1, 1)]))
        .add(&MatSymbol::pauli(SigmaBasis::S2, &mono(one, &[(K, 1), (E2, 1)])))
        .add(&MatSymbol::pauli(SigmaBasis::S2, &mono(gauss_real(rat(1, 2)), &[(K1 + 1, 1)])))
}

/// Commutative parametrix of `D_k` with `depth` homogeneous terms, computed
/// in the explicit matrix calculus.
pub fn oracle_inverse_dirac(depth: u32) -> Result<MatSymbol, PsidoError> {
    let one = gauss_real(rat_int(1));
    let d = dirac_matrix();
    let linv = MatSymbol::pauli(SigmaBasis::S1, &mono(one.clone(), &[(E1, 1), (Q, 1)]))
        .add(&MatSymbol::pauli(SigmaBasis::S2, &mono(one, &[(K, 1), (E2, 1), (Q, 1)])));
    let mut acc = linv.clone();
    for j in 1..depth as i64 {
        let r = compose_matrix(&d, &acc, -j)?.part(-j);
        acc = acc.add(&linv.mul(&r).scale(&gauss_real(rat_int(-1))));
    }
    Ok(acc)
}

/// Whether `D_k ∘ oracle` is the identity up to the given cutoff.
pub fn oracle_identity_holds(oracle: &MatSymbol, cutoff: i64) -> Result<bool, PsidoError> {
    let prod = compose_matrix(&dirac_matrix(), oracle, cutoff)?;
    let id = MatSymbol::pauli(SigmaBasis::Id, &mono(gauss_real(rat_int(1)), &[]));
    Ok(prod.add(&id.scale(&gauss_real(rat_int(-1)))).is_zero())
}

/// Converts a commutant-only engine symbol (after commutative collapse) to
/// the matrix calculus.
pub fn engine_to_matrix(s: &NcSymbol) -> Option<MatSymbol> {
    let mut out = MatSymbol::default();
    for (key, c) in s.iter() {
        let mut m = [0i64; NVARS];
        m[E1] = key.xi.0 as i64;
        m[E2] = key.xi.1 as i64;
        for g in &key.word {
            match g {
                Generator::K(a) => m[K] += a,
                Generator::B0(q) => m[Q] += *q as i64,
                Generator::DK(i) => m[K1 + *i as usize - 1] += 1,
                Generator::DDK(i, j) => m[K11 + (*i as usize - 1) + (*j as usize - 1)] += 1,
                Generator::Coeff(_) => return None,
            }
        }
        let mut e = Scalar::default();
        e.add_mono(m, c.clone());
        out = out.add(&MatSymbol::pauli(key.sigma, &e));
    }
    Some(out)
}

/// Whether the engine's parametrix, specialized to commuting `k`, agrees
/// with the oracle modulo the `Q` relation.
pub fn agrees_with_engine(engine: &NcSymbol, oracle: &MatSymbol) -> bool {
    match engine_to_matrix(&engine.commutative()) {
        Some(m) => m.add(&oracle.scale(&gauss_real(rat_int(-1)))).is_zero(),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psido::{inverse_dirac, DiracVariant};

    #[test]
    fn oracle_is_a_parametrix() {
        let o = oracle_inverse_dirac(3).unwrap();
        assert!(oracle_identity_holds(&o, -2).unwrap());
    }

    #[test]
    fn engine_agrees_with_oracle() {
        let o = oracle_inverse_dirac(3).unwrap();
        let e = inverse_dirac(DiracVariant::Standard, 3).unwrap();
        assert!(agrees_with_engine(&e, &o));
        let wrong = inverse_dirac(DiracVariant::WithoutZeroOrder, 3).unwrap();
        assert!(!agrees_with_engine(&wrong, &o));
    }
}
