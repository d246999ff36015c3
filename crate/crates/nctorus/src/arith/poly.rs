//! Dense univariate polynomials over ℚ in the variable `s`.

use super::rat::{fmt_rat, Rat};
use num_integer::Integer;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c·s^n`.
    pub fn monomial(c: Rat, n: usize) -> Self {
        let mut v = vec![Rat::zero(); n + 1];
        v[n] = c;
        Poly::new(v)
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Lowest power of `s` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `s^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); n];
        v.extend(self.coeffs.iter().cloned());
        Poly::new(v)
    }

    /// Divides by `s^n`; the caller guarantees divisibility.
    pub fn unshift(&self, n: usize) -> Self {
        Poly::new(self.coeffs.iter().skip(n).cloned().collect())
    }

    /// Coefficients in reverse order: `s^deg · p(1/s)`.
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + rat_to_f64(c))
    }

    /// Euclidean division `self = q·d + r`; panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&(Rat::one() / self.leading()))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.div_rem(&y).1;
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Primitive integer coefficients `c` and the scale `k` with `self = k·c`.
    /// The content `k` is positive.
    pub fn integer_content(&self) -> (Vec<BigInt>, Rat) {
        if self.is_zero() {
            return (Vec::new(), Rat::one());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let ints: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
        (ints, Rat::new(g, lcm))
    }

    /// Human-readable form such as `3*s^2 - s + 1/2`.
    pub fn to_expr(&self) -> String {
        self.render(|i| match i {
            1 => "s".into(),
            _ => format!("s^{i}"),
        }, "*")
    }

    /// LaTeX form such as `3 s^{2} - s + 1` (intended for integer coefficients).
    pub fn to_latex(&self) -> String {
        self.render(|i| match i {
            1 => "s".into(),
            _ => format!("s^{{{i}}}"),
        }, " ")
    }

    fn render(&self, var: impl Fn(usize) -> String, times: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = if i == 0 { String::new() } else { var(i) };
            if mono.is_empty() {
                out.push_str(&fmt_rat(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}{}{}", fmt_rat(&a), times, mono));
            }
        }
        out
    }
}

pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rat::zero();
        Poly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| rat_int(x)).collect())
    }

    #[test]
    fn division_identity() {
        let a = p(&[1, 3, 3, 1]);
        let d = p(&[1, 1]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q, p(&[1, 2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[1, 1]) * &p(&[2, 0, 1]);
        let b = &p(&[2, 2]) * &p(&[3]);
        assert_eq!(Poly::gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn integer_content() {
        let q = Poly::new(vec![rat(1, 2), rat(3, 4)]);
        let (ints, k) = q.integer_content();
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(3)]);
        assert_eq!(k, rat(1, 4));
    }

    #[test]
    fn expr() {
        assert_eq!(p(&[1, -1, 3]).to_expr(), "3*s^2 - s + 1");
    }
}
