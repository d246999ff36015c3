//! Rational functions in `s` over ℚ in canonical reduced form.

use super::poly::Poly;
use super::rat::{fmt_rat, parse_rat, Rat};
use super::ArithError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `num(s)/den(s)` with `gcd(num, den) = 1` and `den` monic; zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Builds and canonicalizes `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let g = Poly::gcd(&num, &den);
        let n = num.div_rem(&g).0;
        let d = den.div_rem(&g).0;
        let lc = Rat::one() / d.leading();
        Ok(RatFun { num: n.scale(&lc), den: d.scale(&lc) })
    }

    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFun::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFun { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    /// The variable `s`.
    pub fn s() -> Self {
        RatFun::from_poly(Poly::s())
    }

    /// `s^n` for any integer `n`.
    pub fn s_pow(n: i64) -> Self {
        if n >= 0 {
            RatFun::from_poly(Poly::monomial(Rat::one(), n as usize))
        } else {
            RatFun { num: Poly::one(), den: Poly::monomial(Rat::one(), (-n) as usize) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether this is a constant, returning it.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.degree() == Some(0) && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeffs().first().cloned().unwrap_or_else(Rat::zero))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFun) -> Result<Self, ArithError> {
        if o.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        RatFun::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn pow(&self, n: u32) -> Self {
        RatFun { num: self.num.pow(n), den: self.den.pow(n) }
    }

    /// `F(1/s)`.
    pub fn inverse_s(&self) -> Self {
        if self.is_zero() {
            return RatFun::zero();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let (n, d) = if dd >= dn {
            (self.num.reversed().shift(dd - dn), self.den.reversed())
        } else {
            (self.num.reversed(), self.den.reversed().shift(dn - dd))
        };
        RatFun::new(n, d).expect("reversal of a nonzero denominator is nonzero")
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, s: &Rat) -> Result<Rat, ArithError> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return Err(ArithError::Pole(fmt_rat(s)));
        }
        Ok(self.num.eval(s) / d)
    }

    pub fn eval_f64(&self, s: f64) -> f64 {
        self.num.eval_f64(s) / self.den.eval_f64(s)
    }

    /// Numerator and denominator rescaled to coprime integer coefficients
    /// with a positive leading denominator coefficient.
    pub fn integer_parts(&self) -> (Poly, Poly) {
        if self.is_zero() {
            return (Poly::zero(), Poly::one());
        }
        let (nn, nk) = self.num.integer_content();
        let (dn, dk) = self.den.integer_content();
        let k = nk / dk;
        let num = Poly::new(nn.into_iter().map(|c| Rat::from_integer(c * k.numer())).collect());
        let den = Poly::new(dn.into_iter().map(|c| Rat::from_integer(c * k.denom())).collect());
        (num, den)
    }

    /// Integer-coefficient display `p(s)/q(s)` with a positive leading
    /// coefficient in the denominator, e.g. `(3*s + 1)/(16*s^3 + 48*s^2 + 48*s + 16)`.
    pub fn to_expr(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (num, den) = self.integer_parts();
        let ns = num.to_expr();
        if den == Poly::one() {
            return ns;
        }
        let wrap = |p: &Poly, s: String| if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 { format!("({s})") } else { s };
        format!("{}/{}", wrap(&num, ns), wrap(&den, den.to_expr()))
    }

    /// Parses a dense serialized form produced by [`RatFun::to_dense`].
    pub fn from_dense(num: &[String], den: &[String]) -> Result<Self, ArithError> {
        let p = |v: &[String]| -> Result<Poly, ArithError> { Ok(Poly::new(v.iter().map(|c| parse_rat(c)).collect::<Result<_, _>>()?)) };
        RatFun::new(p(num)?, p(den)?)
    }

    /// Ascending coefficient strings of numerator and denominator.
    pub fn to_dense(&self) -> (Vec<String>, Vec<String>) {
        let f = |p: &Poly| p.coeffs().iter().map(fmt_rat).collect();
        (f(&self.num), f(&self.den))
    }
}

/// JSON representation: `{"expr": ..., "num": [...], "den": [...]}`.
#[derive(Serialize, Deserialize)]
struct RatFunJson {
    expr: String,
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for RatFun {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let (num, den) = self.to_dense();
        RatFunJson { expr: self.to_expr(), num, den }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let j = RatFunJson::deserialize(de)?;
        RatFun::from_dense(&j.num, &j.den).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFun::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        RatFun::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        RatFun::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, o: RatFun) -> RatFun {
        &self + &o
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, o: RatFun) -> RatFun {
        &self * &o
    }
}

impl From<i64> for RatFun {
    fn from(n: i64) -> Self {
        RatFun::constant(Rat::from_integer(BigInt::from(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn poly(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| rat_int(x)).collect())
    }

    #[test]
    fn canonical_form() {
        let f = RatFun::new(poly(&[2, 2]), poly(&[2, 4, 2])).unwrap();
        assert_eq!(f.num(), &poly(&[1]));
        assert_eq!(f.den(), &poly(&[1, 1]));
        assert_eq!(RatFun::new(Poly::zero(), poly(&[3])).unwrap(), RatFun::zero());
    }

    #[test]
    fn inverse_s_is_involution() {
        let f = RatFun::new(poly(&[1, 3]), poly(&[1, 3, 3, 1])).unwrap();
        assert_eq!(f.inverse_s().inverse_s(), f);
        let g = RatFun::s_pow(-3);
        assert_eq!(g.inverse_s(), RatFun::s_pow(3));
    }

    #[test]
    fn arithmetic_and_eval() {
        let s = RatFun::s();
        let one = RatFun::one();
        let f = one.div(&(&s + &one)).unwrap();
        let g = &f + &f;
        assert_eq!(g.eval(&rat_int(1)).unwrap(), rat_int(1));
        assert!(f.eval(&rat_int(-1)).is_err());
        assert!((g.eval_f64(3.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn display_uses_integer_coefficients() {
        let f = RatFun::new(poly(&[1, 3]), poly(&[1, 3, 3, 1])).unwrap().scale(&rat(1, 16));
        assert_eq!(f.to_expr(), "(3*s + 1)/(16*s^3 + 48*s^2 + 48*s + 16)");
        assert_eq!(RatFun::constant(rat(-1, 2)).to_expr(), "-1/2");
    }

    #[test]
    fn json_round_trip() {
        let f = RatFun::new(poly(&[1, 3]), poly(&[1, 3, 3, 1])).unwrap();
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<RatFun>(&j).unwrap(), f);
    }
}
