//! Grouping of residue terms and exact vanishing verdicts.

use super::reduce::{word_label, ResidueTerm, SlotPattern};
use super::ResidueError;
use crate::algebra::Word;
use crate::arith::RatFun;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// The summed value of all terms sharing `(uv_word, slots, k_power)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSum {
    #[serde(serialize_with = "ser_word")]
    pub uv_word: Word,
    pub slots: SlotPattern,
    pub k_power: i64,
    /// Sum divided by `π`.
    pub sum: RatFun,
    pub terms: usize,
    pub zero: bool,
}

fn ser_word<S: Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&word_label(w))
}

/// Groups terms by `(uv_word, slot pattern, k_power)` and sums the values
/// exactly. Two groups differing only in `k_power` violate homogeneity and
/// are reported as an error.
pub fn group_and_sum(terms: &[ResidueTerm]) -> Result<Vec<GroupSum>, ResidueError> {
    let mut groups: BTreeMap<(Word, SlotPattern, i64), (RatFun, usize)> = BTreeMap::new();
    for t in terms {
        let g = groups.entry((t.uv_word.clone(), t.slots, t.k_power)).or_insert_with(|| (RatFun::zero(), 0));
        g.0 = &g.0 + &t.value;
        g.1 += 1;
    }
    let mut seen: BTreeMap<(Word, SlotPattern), i64> = BTreeMap::new();
    for (w, s, kp) in groups.keys() {
        if let Some(other) = seen.insert((w.clone(), *s), *kp) {
            return Err(ResidueError::MixedKPower { word: word_label(w), slots: s.to_string(), k_powers: (other, *kp) });
        }
    }
    Ok(groups
        .into_iter()
        .map(|((uv_word, slots, k_power), (sum, terms))| GroupSum { zero: sum.is_zero(), uv_word, slots, k_power, sum, terms })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_symbol;
    use crate::residue::{angular_reduce, Normalization};
    use crate::arith::rat;

    fn reduce(src: &str) -> Vec<ResidueTerm> {
        parse_symbol(src)
            .unwrap()
            .terms()
            .iter()
            .filter_map(|t| angular_reduce(t, Normalization::Table).unwrap())
            .collect()
    }

    #[test]
    fn sums_and_verdicts() {
        // Rows 1–2 of the u₁v₁ δ₁δ₁ table: π/8 − π/16 = π/16 at k⁻³.
        let terms = reduce("2 u_1 v_1 b_0^3 \\delta_1(k) \\delta_1(k) \\xi_1^2 \\xi_2^2 - 2 u_1 v_1 b_0^4 \\delta_1(k) \\delta_1(k) \\xi_1^4 \\xi_2^2");
        let g = group_and_sum(&terms).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!((g[0].k_power, g[0].sum.clone(), g[0].zero), (-3, RatFun::constant(rat(1, 16)), false));
        assert!(group_and_sum(&[]).unwrap().is_empty());
    }

    #[test]
    fn second_derivative_group_vanishes() {
        let terms = reduce(
            "12 u_1 v_1 b_0^4 k^3 \\delta_1\\delta_1(k) \\xi_1^2 \\xi_2^4 - 4 u_1 v_1 b_0^3 k^3 \\delta_1\\delta_1(k) \\xi_2^4 \
             - 4 u_1 v_1 b_0^4 k \\delta_1\\delta_1(k) \\xi_1^4 \\xi_2^2 + 2 u_1 v_1 b_0^2 k \\delta_1\\delta_1(k) \\xi_2^2",
        );
        let g = group_and_sum(&terms).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].k_power, -2);
        assert!(g[0].zero);
    }

    #[test]
    fn mixed_k_power_is_an_error() {
        let terms = reduce("b_0 \\xi_1^0 + b_0 k");
        assert!(group_and_sum(&terms).is_err());
    }
}
