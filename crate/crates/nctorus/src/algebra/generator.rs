//! Generators of the symbol algebra and their commutation classes.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Commutation class of a generator.
///
/// Commutant generators (`k`, `b₀`, `δᵢ(k)`, `δᵢδⱼ(k)`) live in the commutant
/// copy of the torus algebra and commute with every algebra-class generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GenClass {
    Algebra,
    Commutant,
}

/// An algebra-class coefficient: a named element (`u_1`, `v_2`, `w_1` or a
/// free symbol such as `a`) together with the number of times each derivation
/// has been applied to it. Since `δ₁` and `δ₂` commute, the derivative is
/// determined by the pair of counts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coeff {
    /// Base name: `u`, `v`, `w` for one-form coefficients, any identifier for
    /// free algebra elements.
    pub name: String,
    /// Subscript for one-form coefficients (`1` or `2`); `None` for free elements.
    pub index: Option<u8>,
    /// Number of applications of `δ₁`.
    pub d1: u8,
    /// Number of applications of `δ₂`.
    pub d2: u8,
}

impl Coeff {
    /// Whether any derivation has been applied.
    pub fn is_derived(&self) -> bool {
        self.d1 + self.d2 > 0
    }

    /// The coefficient with one more application of `δⱼ`.
    pub fn derive(&self, j: u8) -> Coeff {
        let mut c = self.clone();
        if j == 1 {
            c.d1 += 1;
        } else {
            c.d2 += 1;
        }
        c
    }
}

/// A single generator of the symbol algebra.
///
/// The variant order fixes the deterministic tie-breaking order used by
/// canonical sorting (kind first, then indices).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// `k^n` for any integer `n` (`k` is strictly positive, hence invertible).
    K(i64),
    /// `b₀^n = (ξ₁² + k²ξ₂²)^{-n}`, `n ≥ 1`.
    B0(u32),
    /// `δᵢ(k)`.
    DK(u8),
    /// `δᵢδⱼ(k)` with `i ≤ j`.
    DDK(u8, u8),
    /// Algebra-class coefficient.
    Coeff(Coeff),
}

impl Generator {
    pub fn class(&self) -> GenClass {
        match self {
            Generator::Coeff(_) => GenClass::Algebra,
            _ => GenClass::Commutant,
        }
    }

    pub fn is_algebra(&self) -> bool {
        self.class() == GenClass::Algebra
    }

    /// Whether this is a `k` or `b₀` power (the generators that commute
    /// with each other and form blocks).
    pub fn is_block_atom(&self) -> bool {
        matches!(self, Generator::K(_) | Generator::B0(_))
    }

    /// Whether this is a slot generator (`δᵢ(k)` or `δᵢδⱼ(k)`).
    pub fn is_slot(&self) -> bool {
        matches!(self, Generator::DK(_) | Generator::DDK(..))
    }

    /// `δᵢδⱼ(k)` with the indices sorted.
    pub fn ddk(i: u8, j: u8) -> Generator {
        Generator::DDK(i.min(j), i.max(j))
    }

    /// One-form coefficient `u_i`.
    pub fn u(i: u8) -> Generator {
        Generator::coeff("u", Some(i))
    }

    /// One-form coefficient `v_i`.
    pub fn v(i: u8) -> Generator {
        Generator::coeff("v", Some(i))
    }

    /// One-form coefficient `w_i`.
    pub fn w(i: u8) -> Generator {
        Generator::coeff("w", Some(i))
    }

    /// Free algebra element with the given name.
    pub fn free(name: &str) -> Generator {
        Generator::coeff(name, None)
    }

    fn coeff(name: &str, index: Option<u8>) -> Generator {
        Generator::Coeff(Coeff { name: name.to_string(), index, d1: 0, d2: 0 })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::algebra::print::generator_to_string(self))
    }
}
