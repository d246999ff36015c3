//! Angular reduction of degree −2 terms to rearranged trace terms, and the
//! slot transposition identity.

use super::integral::{assemble_f, IntegralKey, Normalization};
use super::ResidueError;
use crate::algebra::print::{generator_to_string, monomial_to_string};
use crate::algebra::{block_form, Generator, NcSymbol, NcTerm, SigmaBasis, Word};
use crate::arith::{Rat, RatFun};
use num_traits::Zero;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Which modular slots a residue term carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlotPattern {
    /// `… δᵢ(k) … δⱼ(k)`: two first-derivative slots.
    TwoSlot(u8, u8),
    /// A single `δᵢδⱼ(k)` slot.
    OneSlotSecondDeriv(u8, u8),
    /// A single first-derivative slot `δᵢ(k)`; in this geometry it occurs
    /// next to a differentiated algebra coefficient.
    OneSlotAlgebraDeriv(u8),
    /// No slot.
    Pure,
}

impl fmt::Display for SlotPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlotPattern::TwoSlot(i, j) => write!(f, "TwoSlot({i},{j})"),
            SlotPattern::OneSlotSecondDeriv(i, j) => write!(f, "OneSlotSecondDeriv({i},{j})"),
            SlotPattern::OneSlotAlgebraDeriv(i) => write!(f, "OneSlotAlgebraDeriv({i})"),
            SlotPattern::Pure => write!(f, "Pure"),
        }
    }
}

impl Serialize for SlotPattern {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Algebra word rendered in the linear syntax (`1` for the empty word).
pub fn word_label(w: &[Generator]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(generator_to_string).collect::<Vec<_>>().join(" ")
    }
}

/// One trace contribution: `coeff · τ(uv_word · k^{k_power} F(Δ)(slot) slot)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueTerm {
    #[serde(serialize_with = "ser_word")]
    pub uv_word: Word,
    pub slots: SlotPattern,
    pub key: IntegralKey,
    /// Half the ξ₁ exponent.
    pub alpha: u32,
    #[serde(serialize_with = "ser_rat")]
    pub coeff: Rat,
    pub k_power: i64,
    /// `coeff · F / π`.
    pub value: RatFun,
    /// Whether the slot transposition has been applied.
    pub transposed: bool,
}

fn ser_word<S: Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&word_label(w))
}

fn ser_rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::arith::fmt_rat(r))
}

impl ResidueTerm {
    /// The rearranged word `uv · b₀^m k^a X b₀^n k^b Y · ξ₁^{2α} ξ₂^{2β}`.
    pub fn term_string(&self) -> String {
        let k = &self.key;
        let mut w = self.uv_word.clone();
        let block = |w: &mut Word, m: u32, a: i64| {
            if m > 0 {
                w.push(Generator::B0(m));
            }
            if a != 0 {
                w.push(Generator::K(a));
            }
        };
        block(&mut w, k.m, k.a);
        match self.slots {
            SlotPattern::TwoSlot(i, j) => {
                w.push(Generator::DK(i));
                block(&mut w, k.n, k.b);
                w.push(Generator::DK(j));
            }
            SlotPattern::OneSlotSecondDeriv(i, j) => w.push(Generator::ddk(i, j)),
            SlotPattern::OneSlotAlgebraDeriv(i) => w.push(Generator::DK(i)),
            SlotPattern::Pure => {}
        }
        monomial_to_string(SigmaBasis::Id, (2 * self.alpha, 2 * k.beta), &w)
    }
}

/// Reduces one term of the traced degree −2 symbol.
///
/// Terms with an odd ξ exponent integrate to zero over the circle and give
/// `None`. Otherwise the trailing `(b₀, k)` block is moved to the front
/// (cyclicity of the trace, slot order preserved), the word is matched to
/// `b₀^m k^a X b₀^n k^b Y` or a one-slot/pure pattern, and the integral is
/// assembled.
pub fn angular_reduce(t: &NcTerm, norm: Normalization) -> Result<Option<ResidueTerm>, ResidueError> {
    reduce_cached(t, norm, &mut BTreeMap::new())
}

type FCache = BTreeMap<IntegralKey, (i64, RatFun)>;

fn reduce_cached(t: &NcTerm, norm: Normalization, cache: &mut FCache) -> Result<Option<ResidueTerm>, ResidueError> {
    let d = t.degree();
    if d != -2 {
        return Err(ResidueError::WrongDegree(d));
    }
    if t.sigma != SigmaBasis::Id {
        return Err(ResidueError::NotTraced);
    }
    if !t.coeff.im.is_zero() {
        return Err(ResidueError::ComplexCoefficient);
    }
    if t.xi.0 % 2 == 1 || t.xi.1 % 2 == 1 {
        return Ok(None);
    }
    let (alpha, beta) = (t.xi.0 / 2, t.xi.1 / 2);
    let mut bf = block_form(&t.word);
    if bf.slots.len() > 2 {
        return Err(ResidueError::TooManySlots(bf.slots.len()));
    }
    let last = bf.blocks.pop().unwrap();
    let (m0, a0) = match bf.blocks.first_mut() {
        Some(first) => {
            first.0 += last.0;
            first.1 += last.1;
            *first
        }
        None => last,
    };
    let (slots, key) = match bf.slots.as_slice() {
        [] => (SlotPattern::Pure, IntegralKey::new(m0, 0, beta, a0, 0)),
        [Generator::DDK(i, j)] => (SlotPattern::OneSlotSecondDeriv(*i, *j), IntegralKey::new(m0, 0, beta, a0, 0)),
        [Generator::DK(i)] => (SlotPattern::OneSlotAlgebraDeriv(*i), IntegralKey::new(m0, 0, beta, a0, 0)),
        [Generator::DK(i), Generator::DK(j)] => {
            let (n, b) = bf.blocks[1];
            (SlotPattern::TwoSlot(*i, *j), IntegralKey::new(m0, n, beta, a0, b))
        }
        other => return Err(ResidueError::UnsupportedPattern(word_label(other))),
    };
    if key.m + key.n != alpha + beta + 1 {
        return Err(ResidueError::Homogeneity { key, alpha });
    }
    let (k_power, f) = match cache.get(&key) {
        Some(hit) => hit.clone(),
        None => {
            let v = assemble_f(&key, norm)?;
            cache.insert(key, v.clone());
            v
        }
    };
    Ok(Some(ResidueTerm {
        uv_word: bf.algebra,
        slots,
        key,
        alpha,
        coeff: t.coeff.re.clone(),
        k_power,
        value: f.scale(&t.coeff.re),
        transposed: false,
    }))
}

/// Reduces every identity-component term of degree −2 of a symbol.
pub fn reduce_symbol(s: &NcSymbol, norm: Normalization) -> Result<Vec<ResidueTerm>, ResidueError> {
    let mut out = Vec::new();
    let mut cache = FCache::new();
    for t in s.part(-2).id_component().terms() {
        if let Some(r) = reduce_cached(&t, norm, &mut cache)? {
            out.push(r);
        }
    }
    Ok(out)
}

/// Swaps the two slots of a `TwoSlot(i, j)` term with the identity
/// `τ(k^p A(Δ)(x) y) = τ(k^p [s ↦ s^p A(1/s)](Δ)(y) x)`; other terms are
/// returned unchanged. Applying it twice is the identity.
pub fn transpose_slots(rt: &ResidueTerm) -> ResidueTerm {
    let SlotPattern::TwoSlot(i, j) = rt.slots else {
        return rt.clone();
    };
    let mut out = rt.clone();
    out.slots = SlotPattern::TwoSlot(j, i);
    out.value = &RatFun::s_pow(rt.k_power) * &rt.value.inverse_s();
    out.transposed = !rt.transposed;
    out
}

/// Transposes `TwoSlot(i, j)` with `i > j` into canonical `i ≤ j` order.
pub fn canonicalize(rt: &ResidueTerm) -> ResidueTerm {
    match rt.slots {
        SlotPattern::TwoSlot(i, j) if i > j => transpose_slots(rt),
        _ => rt.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_symbol;
    use crate::arith::{rat, rat_int};

    fn term(src: &str) -> NcTerm {
        parse_symbol(src).unwrap().terms().remove(0)
    }

    #[test]
    fn table_row_one() {
        let t = term("2 u_1 v_1 b_0^3 \\delta_1(k) \\delta_1(k) \\xi_1^2 \\xi_2^2");
        let r = angular_reduce(&t, Normalization::Table).unwrap().unwrap();
        assert_eq!(r.slots, SlotPattern::TwoSlot(1, 1));
        assert_eq!(r.key, IntegralKey::new(3, 0, 1, 0, 0));
        assert_eq!(r.coeff, rat_int(2));
        assert_eq!((r.k_power, r.value.clone()), (-3, RatFun::constant(rat(1, 8))));
        assert_eq!(r.term_string(), "u_1 v_1 b_0^3 \\delta_1(k) \\delta_1(k) \\xi_1^2 \\xi_2^2");
    }

    #[test]
    fn trailing_block_rotates_to_front() {
        let t = term("b_0 \\delta_1(k) b_0 k \\delta_2(k) b_0 k^2 \\xi_1^2 \\xi_2^2");
        let r = angular_reduce(&t, Normalization::Table).unwrap().unwrap();
        assert_eq!(r.key, IntegralKey::new(2, 1, 1, 2, 1));
        assert_eq!(r.slots, SlotPattern::TwoSlot(1, 2));
    }

    #[test]
    fn odd_and_errors() {
        assert!(angular_reduce(&term("b_0^2 \\xi_1 \\xi_2"), Normalization::Table).unwrap().is_none());
        assert!(matches!(angular_reduce(&term("b_0^3 \\xi_2^2"), Normalization::Table), Err(ResidueError::WrongDegree(-4))));
        assert!(angular_reduce(&term("\\sigma^1 b_0"), Normalization::Table).is_err());
        assert!(angular_reduce(&term("b_0 \\delta_1(k) \\delta_1(k) \\delta_1(k) \\xi_1^2"), Normalization::Table).is_err());
    }

    #[test]
    fn transpose_monomial_and_involution() {
        let t = term("b_0^2 \\delta_2(k) b_0 \\delta_1(k) \\xi_1^2 \\xi_2^2");
        let r = angular_reduce(&t, Normalization::Table).unwrap().unwrap();
        let tt = transpose_slots(&r);
        assert_eq!(tt.slots, SlotPattern::TwoSlot(1, 2));
        assert_eq!(transpose_slots(&tt), r);
        let mut mono = r.clone();
        mono.value = RatFun::s_pow(2);
        mono.k_power = -3;
        assert_eq!(transpose_slots(&mono).value, RatFun::s_pow(-5));
        let c = canonicalize(&tt);
        assert_eq!(c, tt);
    }
}
