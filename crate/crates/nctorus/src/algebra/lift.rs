//! Zero-test modulo the defining relation `b₀·(ξ₁² + k²ξ₂²) = 1`.
//!
//! Words in normal form are not unique representatives: `b₀ξ₁² + b₀k²ξ₂²`
//! equals `1`. The lift sends every `(b₀^m, k^a)` block to the rational
//! function `k_i^a / (ξ₁² + k_i²ξ₂²)^m`, with a separate commuting variable
//! `k_i` per block, since `k` commutes across a block but not across a slot.
//! Terms are grouped into sectors by σ element, algebra word and slot
//! sequence; inside a sector the denominators are cleared and the result is
//! an exact Laurent polynomial, which is zero iff the sector vanishes.
//!
//! In cyclic mode the comparison is made under the trace: the last block is
//! merged into the first and the commutant part is rotated to a
//! representative with the lexicographically smallest slot sequence
//! (averaging over ties), so cyclically equal words compare equal.

use super::sigma::SigmaBasis;
use super::symbol::NcSymbol;
use super::word::{block_form, Word};
use crate::arith::{gauss_real, GaussRat, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Sector of the lift: σ element, algebra word, slot sequence.
pub type SectorKey = (SigmaBasis, Word, Word);

/// Laurent polynomial in `ξ₁, ξ₂, k₀, k₁, …`; exponent vectors are
/// `[e₁, e₂, a₀, a₁, …]`.
pub type Laurent = BTreeMap<Vec<i64>, GaussRat>;

struct Piece {
    coeff: GaussRat,
    xi: (u32, u32),
    blocks: Vec<(u32, i64)>,
}

/// Lifts a symbol to cleared Laurent polynomials per sector. Zero sectors
/// are omitted, so the symbol vanishes iff the map is empty.
pub fn lift(s: &NcSymbol, cyclic: bool) -> BTreeMap<SectorKey, Laurent> {
    let mut sectors: BTreeMap<SectorKey, Vec<Piece>> = BTreeMap::new();
    for (key, c) in s.iter() {
        let mut bf = block_form(&key.word);
        if cyclic && !bf.slots.is_empty() {
            let last = bf.blocks.pop().unwrap();
            bf.blocks[0].0 += last.0;
            bf.blocks[0].1 += last.1;
        }
        let n = bf.slots.len();
        let rotations: Vec<usize> = if cyclic && n > 1 {
            let rot = |r: usize| -> Word { (0..n).map(|i| bf.slots[(r + i) % n].clone()).collect() };
            let min = (0..n).map(rot).min().unwrap();
            (0..n).filter(|&r| rot(r) == min).collect()
        } else {
            vec![0]
        };
        let weight = gauss_real(Rat::new(BigInt::from(1), BigInt::from(rotations.len())));
        for r in rotations {
            let nb = bf.blocks.len();
            let blocks: Vec<(u32, i64)> = if cyclic { (0..nb).map(|i| bf.blocks[(r + i) % nb]).collect() } else { bf.blocks.clone() };
            let slots: Word = if cyclic { (0..n).map(|i| bf.slots[(r + i) % n].clone()).collect() } else { bf.slots.clone() };
            sectors
                .entry((key.sigma, bf.algebra.clone(), slots))
                .or_default()
                .push(Piece { coeff: c * &weight, xi: key.xi, blocks });
        }
    }
    let mut out = BTreeMap::new();
    for (sk, pieces) in sectors {
        let nb = pieces[0].blocks.len();
        let maxm: Vec<u32> = (0..nb).map(|i| pieces.iter().map(|p| p.blocks[i].0).max().unwrap()).collect();
        let mut poly: Laurent = BTreeMap::new();
        for p in &pieces {
            let mut mono = vec![0i64; 2 + nb];
            mono[0] = p.xi.0 as i64;
            mono[1] = p.xi.1 as i64;
            for (i, b) in p.blocks.iter().enumerate() {
                mono[2 + i] = b.1;
            }
            let mut acc: Laurent = BTreeMap::from([(mono, p.coeff.clone())]);
            for (i, (max, block)) in maxm.iter().zip(&p.blocks).enumerate() {
                let e = max - block.0;
                if e > 0 {
                    acc = mul_laurent(&acc, &q_power(i, nb, e));
                }
            }
            for (m, c) in acc {
                let slot = poly.entry(m.clone()).or_insert_with(GaussRat::zero);
                *slot += c;
                if slot.is_zero() {
                    poly.remove(&m);
                }
            }
        }
        if !poly.is_empty() {
            out.insert(sk, poly);
        }
    }
    out
}

/// `(ξ₁² + k_i²ξ₂²)^e` expanded binomially.
fn q_power(i: usize, nb: usize, e: u32) -> Laurent {
    let mut out = BTreeMap::new();
    let mut binom = BigInt::from(1);
    for r in 0..=e {
        let mut m = vec![0i64; 2 + nb];
        m[0] = 2 * (e - r) as i64;
        m[1] = 2 * r as i64;
        m[2 + i] = 2 * r as i64;
        out.insert(m, gauss_real(Rat::from_integer(binom.clone())));
        binom = binom * BigInt::from(e - r) / BigInt::from(r + 1);
    }
    out
}

fn mul_laurent(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out: Laurent = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<i64> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let slot = out.entry(m.clone()).or_insert_with(GaussRat::zero);
            *slot += ca * cb;
            if slot.is_zero() {
                out.remove(&m);
            }
        }
    }
    out
}

/// Whether the symbol vanishes modulo the `b₀` relation (and, in cyclic
/// mode, modulo trace cyclicity of the commutant part).
pub fn is_zero(s: &NcSymbol, cyclic: bool) -> bool {
    lift(s, cyclic).is_empty()
}

/// Whether two symbols are equal modulo the `b₀` relation.
pub fn lift_equal(a: &NcSymbol, b: &NcSymbol, cyclic: bool) -> bool {
    is_zero(&a.sub(b), cyclic)
}

/// Sectors (σ, algebra word, slots) in which `a − b` does not vanish.
pub fn differing_sectors(a: &NcSymbol, b: &NcSymbol, cyclic: bool) -> Vec<SectorKey> {
    lift(&a.sub(b), cyclic).into_keys().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator;
    use crate::arith::rat_int;
    use Generator::*;

    fn mono(xi: (u32, u32), w: &[Generator]) -> NcSymbol {
        NcSymbol::monomial(gauss_real(rat_int(1)), SigmaBasis::Id, xi, w)
    }

    #[test]
    fn b0_relation() {
        let s = mono((2, 0), &[B0(1)]).add(&mono((0, 2), &[B0(1), K(2)]));
        assert!(lift_equal(&s, &NcSymbol::one(), false));
        let t = mono((2, 0), &[B0(2), DK(1), B0(1)]).add(&mono((0, 2), &[B0(2), K(2), DK(1), B0(1)]));
        assert!(lift_equal(&t, &mono((0, 0), &[B0(1), DK(1), B0(1)]), false));
        // k does not pass a slot.
        let u = mono((2, 0), &[B0(1), DK(1), B0(1)]).add(&mono((0, 2), &[B0(1), DK(1), B0(1), K(2)]));
        assert!(!lift_equal(&u, &mono((0, 0), &[DK(1), B0(1)]), false));
    }

    #[test]
    fn cyclic_rotation() {
        let a = mono((0, 0), &[K(1), DK(1), K(2), DK(2)]);
        let b = mono((0, 0), &[K(2), DK(2), K(1), DK(1)]);
        assert!(!lift_equal(&a, &b, false));
        assert!(lift_equal(&a, &b, true));
        let c = mono((0, 0), &[DK(1), K(3), DK(2)]);
        assert!(lift_equal(&a, &c.add(&a).sub(&c), true));
        assert!(!lift_equal(&a, &c, true));
    }
}
