//! Symbol composition and the right parametrix recursion.

use super::PsidoError;
use crate::algebra::{lift, NcSymbol};
use crate::arith::{gauss_real, rat_int, Rat};
use num_bigint::BigInt;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Symbol of the operator product `P∘Q`, truncated to degrees `≥ cutoff`:
/// `Σ_α (1/α!) ∂_ξ^α(P) · δ^α(Q)` over two-dimensional multi-indices.
///
/// Only components that can still reach the cutoff are differentiated:
/// a term of `P` of degree `d` contributes at order `|α|` only if
/// `d + maxdeg(Q) − |α| ≥ cutoff`, and symmetrically for `Q`.
pub fn compose(p: &NcSymbol, q: &NcSymbol, cutoff: i64) -> Result<NcSymbol, PsidoError> {
    let (Some(dp), Some(dq)) = (p.max_degree(), q.max_degree()) else {
        return Ok(NcSymbol::zero());
    };
    let mut out = NcSymbol::zero();
    let max_order = dp + dq - cutoff;
    if max_order < 0 {
        return Ok(out);
    }
    let max_order = max_order as u32;
    // Derivatives are built incrementally (δ₁/∂ξ₁ first, then δ₂/∂ξ₂).
    // ∂_ξ lowers the degree by one, so a P-term survives while its current
    // degree plus maxdeg(Q) reaches the cutoff; δ preserves degrees, so a
    // Q-term needs degree ≥ cutoff + |α| − maxdeg(P), and |α| only grows.
    let p_floor = cutoff - dq;
    let mut q_d1 = q.clone();
    let mut p_d1 = p.at_least(p_floor);
    for a1 in 0..=max_order {
        if a1 > 0 {
            p_d1 = p_d1.dxi(1).at_least(p_floor);
            if p_d1.is_zero() {
                break;
            }
            q_d1 = q_d1.at_least(cutoff + a1 as i64 - dp).delta(1)?;
        }
        if q_d1.is_zero() {
            break;
        }
        let mut qa = q_d1.clone();
        let mut pa = p_d1.clone();
        for a2 in 0..=(max_order - a1) {
            let a = (a1 + a2) as i64;
            if a2 > 0 {
                pa = pa.dxi(2).at_least(p_floor);
                if pa.is_zero() {
                    break;
                }
                qa = qa.at_least(cutoff + a - dp).delta(2)?;
            }
            let rhs = qa.at_least(cutoff + a - dp);
            if rhs.is_zero() {
                break;
            }
            let w = Rat::new(BigInt::from(1), factorial(a1) * factorial(a2));
            let prod = pa.mul(&rhs).at_least(cutoff);
            out.add_assign(&prod.scale(&gauss_real(w)));
        }
    }
    Ok(out)
}

/// Right parametrix of `P` from an inverse of its leading symbol.
///
/// Returns `Q = q₀ + q₁ + … + q_{depth−1}` with `q₀ = leading_inverse` and
/// `q_j = −leading_inverse · [P∘(q₀+…+q_{j−1})]_{−j}`, so that `P∘Q = 1`
/// up to terms of degree `< 1 − depth` (identity modulo the `b₀` relation).
pub fn parametrix(p: &NcSymbol, leading_inverse: &NcSymbol, depth: u32) -> Result<NcSymbol, PsidoError> {
    if depth == 0 {
        return Err(PsidoError::BadDepth);
    }
    let order = p.max_degree().ok_or(PsidoError::NotInvertible)?;
    let lead = p.part(order);
    if !lift::lift_equal(&lead.mul(leading_inverse), &NcSymbol::one(), false) {
        return Err(PsidoError::NotInvertible);
    }
    let minus_one = gauss_real(rat_int(-1));
    let mut acc = leading_inverse.clone();
    for j in 1..depth as i64 {
        let r = compose(p, &acc, -j)?.part(-j);
        acc.add_assign(&leading_inverse.mul(&r).scale(&minus_one));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_symbol, Generator::*, SigmaBasis};

    #[test]
    fn compose_example() {
        let xi1 = parse_symbol("\\xi_1").unwrap();
        let k = parse_symbol("k").unwrap();
        assert_eq!(compose(&xi1, &k, -5).unwrap(), parse_symbol("k \\xi_1 + \\delta_1(k)").unwrap());
        let c = compose(&xi1, &k, 1).unwrap();
        assert_eq!(c, parse_symbol("k \\xi_1").unwrap());
    }

    #[test]
    fn compose_second_order_weight() {
        // ξ₁² ∘ k = kξ₁² + 2δ₁(k)ξ₁ + δ₁δ₁(k).
        let p = parse_symbol("\\xi_1^2").unwrap();
        let q = NcSymbol::monomial(gauss_real(rat_int(1)), SigmaBasis::Id, (0, 0), &[K(1)]);
        let c = compose(&p, &q, -10).unwrap();
        assert_eq!(c, parse_symbol("k \\xi_1^2 + 2 \\delta_1(k) \\xi_1 + \\delta_1\\delta_1(k)").unwrap());
    }
}
