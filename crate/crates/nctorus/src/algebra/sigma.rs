//! The Pauli basis `{1, σ¹, σ², σ³}` of 2×2 complex matrices.

use crate::arith::{gauss_i, gauss_one, GaussRat};
use serde::{Deserialize, Serialize};
use std::ops::Neg;

/// One element of the Pauli basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SigmaBasis {
    Id,
    S1,
    S2,
    S3,
}

impl SigmaBasis {
    pub const ALL: [SigmaBasis; 4] = [SigmaBasis::Id, SigmaBasis::S1, SigmaBasis::S2, SigmaBasis::S3];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> Option<SigmaBasis> {
        SigmaBasis::ALL.get(i as usize).copied()
    }

    /// Product `self · other = phase · result`, with `σ¹σ² = iσ³` cyclically
    /// and `σᵢ² = 1`.
    pub fn product(self, other: SigmaBasis) -> (GaussRat, SigmaBasis) {
        use SigmaBasis::*;
        match (self, other) {
            (Id, x) | (x, Id) => (gauss_one(), x),
            (a, b) if a == b => (gauss_one(), Id),
            (a, b) => {
                let c = SigmaBasis::from_index(6 - a.index() - b.index()).unwrap();
                let cyclic = matches!((a, b), (S1, S2) | (S2, S3) | (S3, S1));
                let i = gauss_i();
                (if cyclic { i } else { i.neg() }, c)
            }
        }
    }

    /// Matrix trace: 2 for the identity, 0 otherwise.
    pub fn trace(self) -> i64 {
        if self == SigmaBasis::Id {
            2
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gauss_zero;

    #[test]
    fn pauli_table() {
        use SigmaBasis::*;
        assert_eq!(S1.product(S2), (gauss_i(), S3));
        assert_eq!(S2.product(S1), (gauss_zero() - gauss_i(), S3));
        assert_eq!(S3.product(S1), (gauss_i(), S2));
        assert_eq!(S2.product(S2), (gauss_one(), Id));
    }

    #[test]
    fn associativity() {
        for a in SigmaBasis::ALL {
            for b in SigmaBasis::ALL {
                for c in SigmaBasis::ALL {
                    let (p1, ab) = a.product(b);
                    let (p2, l) = ab.product(c);
                    let (q1, bc) = b.product(c);
                    let (q2, r) = a.product(bc);
                    assert_eq!(l, r);
                    assert_eq!(p1 * p2, q1 * q2);
                }
            }
        }
    }
}
