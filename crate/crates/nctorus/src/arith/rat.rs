//! Arbitrary-precision rationals, backed by `num_rational::BigRational`.

use super::ArithError;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::str::FromStr;

/// Exact rational number with a reduced numerator and positive denominator.
pub type Rat = num_rational::BigRational;

/// Builds `n/d`; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` (optionally signed).
pub fn parse_rat(s: &str) -> Result<Rat, ArithError> {
    let t = s.trim();
    let bad = || ArithError::Parse { what: "rational", input: s.to_string() };
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q == BigInt::from(0) {
            return Err(bad());
        }
        Ok(Rat::new(p, q))
    } else {
        Ok(Rat::from_integer(BigInt::from_str(t).map_err(|_| bad())?))
    }
}

/// Formats as `p` or `p/q`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `|r|` formatted, used by printers that emit the sign separately.
pub(crate) fn fmt_rat_abs(r: &Rat) -> String {
    fmt_rat(&r.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_reduction() {
        assert_eq!(rat(2, -4), rat(-1, 2));
        assert_eq!(fmt_rat(&rat(6, 3)), "2");
        assert_eq!(fmt_rat(&rat(-3, 6)), "-1/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "3/8", "-15/4"] {
            assert_eq!(fmt_rat(&parse_rat(s).unwrap()), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
