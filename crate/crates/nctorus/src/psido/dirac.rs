//! The Dirac operator `D_k = σ¹δ₁ + σ²(kδ₂ + ½δ₂(k))` and its inverses.

use super::compose::{compose, parametrix};
use super::PsidoError;
use crate::algebra::{Generator, NcSymbol, SigmaBasis};
use crate::arith::{gauss_real, rat, rat_int};

/// Which symbol of `D_k` to build. The truncated variant drops the
/// zero-order term `½σ²δ₂(k)`; it exists only as a negative control
/// for the vanishing theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DiracVariant {
    #[default]
    Standard,
    WithoutZeroOrder,
}

/// `ρ(D_k) = σ¹ξ₁ + σ²kξ₂ + ½σ²δ₂(k)`.
pub fn dirac_symbol() -> NcSymbol {
    dirac_symbol_with(DiracVariant::Standard)
}

/// `ρ(D_k)` for the given variant.
pub fn dirac_symbol_with(variant: DiracVariant) -> NcSymbol {
    let one = gauss_real(rat_int(1));
    let mut d = NcSymbol::monomial(one.clone(), SigmaBasis::S1, (1, 0), &[]);
    d.add_assign(&NcSymbol::monomial(one, SigmaBasis::S2, (0, 1), &[Generator::K(1)]));
    if variant == DiracVariant::Standard {
        d.add_assign(&NcSymbol::monomial(gauss_real(rat(1, 2)), SigmaBasis::S2, (0, 0), &[Generator::DK(2)]));
    }
    d
}

/// `𝔟₋₁ = (σ¹ξ₁ + kσ²ξ₂)b₀`, the inverse of the leading symbol of `D_k`.
pub fn b_minus_1() -> NcSymbol {
    let one = gauss_real(rat_int(1));
    let mut b = NcSymbol::monomial(one.clone(), SigmaBasis::S1, (1, 0), &[Generator::B0(1)]);
    b.add_assign(&NcSymbol::monomial(one, SigmaBasis::S2, (0, 1), &[Generator::B0(1), Generator::K(1)]));
    b
}

/// `ρ(D_k²) = 𝔞₂ + 𝔞₁ + 𝔞₀`.
pub fn dirac_squared(variant: DiracVariant) -> Result<NcSymbol, PsidoError> {
    let d = dirac_symbol_with(variant);
    compose(&d, &d, 0)
}

/// `ρ(D_k⁻¹) = 𝔟₋₁ + 𝔟₋₂ + …` with `depth` homogeneous terms.
pub fn inverse_dirac(variant: DiracVariant, depth: u32) -> Result<NcSymbol, PsidoError> {
    parametrix(&dirac_symbol_with(variant), &b_minus_1(), depth)
}

/// `ρ(D_k⁻²) = 𝔠₋₂ + 𝔠₋₃ + …` with `depth` homogeneous terms.
pub fn inverse_dirac_squared(variant: DiracVariant, depth: u32) -> Result<NcSymbol, PsidoError> {
    let b0 = NcSymbol::monomial(gauss_real(rat_int(1)), SigmaBasis::Id, (0, 0), &[Generator::B0(1)]);
    parametrix(&dirac_squared(variant)?, &b0, depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{homogeneous_part, lift, parse_symbol};

    #[test]
    fn dirac_parts() {
        let d = dirac_symbol();
        assert_eq!(d.part(1), parse_symbol("\\sigma^1 \\xi_1 + \\sigma^2 k \\xi_2").unwrap());
        assert_eq!(d.part(0), parse_symbol("1/2 \\sigma^2 \\delta_2(k)").unwrap());
        assert!(homogeneous_part(&d, -1).is_empty());
    }

    #[test]
    fn dirac_squared_parts() {
        let a = dirac_squared(DiracVariant::Standard).unwrap();
        assert_eq!(a.part(2), parse_symbol("\\xi_1^2 + k^2 \\xi_2^2").unwrap());
        let a1 = parse_symbol("3/2 k \\delta_2(k) \\xi_2 + 1/2 \\delta_2(k) k \\xi_2 + i \\sigma^3 \\delta_1(k) \\xi_2").unwrap();
        assert_eq!(a.part(1), a1);
    }

    #[test]
    fn c_minus_2_is_b0() {
        let c = inverse_dirac_squared(DiracVariant::Standard, 1).unwrap();
        assert_eq!(c, parse_symbol("b_0").unwrap());
    }

    #[test]
    fn parametrix_identity() {
        let d = dirac_symbol();
        let b = inverse_dirac(DiracVariant::Standard, 3).unwrap();
        let prod = compose(&d, &b, -2).unwrap();
        assert!(lift::lift_equal(&prod, &NcSymbol::one(), false));
    }

    #[test]
    fn b_minus_2_matches_display_term_for_term() {
        let golden = parse_symbol(include_str!("../../data/b_minus_2.txt")).unwrap();
        let b = inverse_dirac(DiracVariant::Standard, 2).unwrap();
        assert_eq!(b.part(-2), golden);
    }
}
