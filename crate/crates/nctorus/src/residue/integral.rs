//! The integrals `J(β, m, n; s) = ∫₀^∞ u^{2β} (1+u²)^{−m} (1+s²u²)^{−n} du`
//! in closed form, and the assembled values `F(s; m, n, β, a, b)`.

use super::ResidueError;
use crate::arith::{rat, rat_int, Poly, Rat, RatFun};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Exponents of one rearranged trace term
/// `b₀^m k^a δᵢ(k) b₀^n k^b δⱼ(k) ξ₁^{2α} ξ₂^{2β}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntegralKey {
    pub m: u32,
    pub n: u32,
    pub beta: u32,
    pub a: i64,
    pub b: i64,
}

impl IntegralKey {
    pub fn new(m: u32, n: u32, beta: u32, a: i64, b: i64) -> Self {
        IntegralKey { m, n, beta, a, b }
    }

    /// Power of `k` carried by `F`: `a + b − 2β − 1`.
    pub fn k_power(&self) -> i64 {
        self.a + self.b - 2 * self.beta as i64 - 1
    }
}

/// Global normalization of `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `N = 1`: the convention of the published tables.
    #[default]
    Table,
    /// `N = 4`: the full angular integral `∫_{S¹} dφ`.
    Raw,
}

impl Normalization {
    pub fn factor(self) -> i64 {
        match self {
            Normalization::Table => 1,
            Normalization::Raw => 4,
        }
    }
}

/// `(2i−3)!!/(2i−2)!! / 2`, so that `∫₀^∞ (1+u²)^{−i} du = π · base(i)`.
fn base_over_pi(i: u32) -> Rat {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(2);
    let mut t = 2 * i as i64 - 3;
    while t > 1 {
        num *= t;
        t -= 2;
    }
    let mut t = 2 * i as i64 - 2;
    while t > 1 {
        den *= t;
        t -= 2;
    }
    Rat::new(num, den)
}

/// First `count` Taylor coefficients at `y = 0` of `pre · (y−1)^β / (c + d·y)^e`.
fn series(pre: &RatFun, beta: u32, c: &RatFun, d: &RatFun, e: u32, count: usize) -> Vec<RatFun> {
    // (y − 1)^β expanded.
    let num = Poly::new(vec![rat_int(-1), rat_int(1)]).pow(beta);
    // (c + d y)^{−e} = c^{−e} Σ_r C(e+r−1, r) (−d/c)^r y^r.
    let cinv = c.inv().expect("the expansion point is not a pole");
    let ratio = -&(d * &cinv);
    let lead = cinv.pow(e);
    let mut inv = Vec::with_capacity(count);
    let mut binom = BigInt::from(1);
    let mut pow = RatFun::one();
    for r in 0..count {
        inv.push(&(&lead * &pow) * &RatFun::constant(Rat::from_integer(binom.clone())));
        pow = &pow * &ratio;
        binom = binom * BigInt::from(e as usize + r) / BigInt::from(r + 1);
    }
    (0..count)
        .map(|r| {
            let mut acc = RatFun::zero();
            for (i, cf) in num.coeffs().iter().enumerate().take(r + 1) {
                acc = &acc + &inv[r - i].scale(cf);
            }
            pre * &acc
        })
        .collect()
}

/// `J(β, m, n; s) / π` as an exact rational function of `s`.
///
/// The integrand is decomposed into partial fractions in `x = u²` over
/// `ℚ(s)`, treating the poles `x = −1` and `x = −1/s²` as distinct, and each
/// term is integrated with `∫₀^∞ (1+u²)^{−i} du = (π/2)(2i−3)!!/(2i−2)!!`
/// (and `1/s` times that for `(1+s²u²)^{−j}`).
pub fn closed_form_j(beta: u32, m: u32, n: u32) -> Result<RatFun, ResidueError> {
    if 2 * beta + 1 >= 2 * (m + n) {
        return Err(ResidueError::Divergent { beta, m, n });
    }
    let s = RatFun::s();
    let s2 = &s * &s;
    let one = RatFun::one();
    let mut total = RatFun::zero();
    if m > 0 {
        // Around y = 1 + x: (y−1)^β / (y^m (1 − s² + s² y)^n).
        let c = &one - &s2;
        let coeffs = if n == 0 {
            series(&one, beta, &one, &RatFun::zero(), 0, m as usize)
        } else {
            series(&one, beta, &c, &s2, n, m as usize)
        };
        for (r, a) in coeffs.iter().enumerate() {
            let i = m - r as u32;
            total = &total + &a.scale(&base_over_pi(i));
        }
    }
    if n > 0 {
        // Around z = 1 + s²x: s^{2m−2β} (z−1)^β / (z^n (s² − 1 + z)^m).
        let pre = RatFun::s_pow(2 * m as i64 - 2 * beta as i64);
        let c = &s2 - &one;
        let coeffs = if m == 0 {
            series(&pre, beta, &one, &RatFun::zero(), 0, n as usize)
        } else {
            series(&pre, beta, &c, &one, m, n as usize)
        };
        let sinv = RatFun::s_pow(-1);
        for (r, b) in coeffs.iter().enumerate() {
            let j = n - r as u32;
            total = &total + &(&b.scale(&base_over_pi(j)) * &sinv);
        }
    }
    Ok(total)
}

/// `F(s; m, n, β, a, b) = N · k^{a+b−2β−1} · s^b · J(β, m, n; s)`; returns
/// the `k` power and the value divided by `π`.
pub fn assemble_f(key: &IntegralKey, norm: Normalization) -> Result<(i64, RatFun), ResidueError> {
    let j = closed_form_j(key.beta, key.m, key.n)?;
    let value = (&j * &RatFun::s_pow(key.b)).scale(&rat_int(norm.factor()));
    Ok((key.k_power(), value))
}

/// `J(β, m, 0)/π` by the Beta function, an independent closed form used to
/// check normalizations: `Γ(β+½)Γ(m−β−½) / (2Γ(m)π)`.
pub fn beta_formula_j(beta: u32, m: u32) -> Result<Rat, ResidueError> {
    if 2 * beta + 1 >= 2 * m {
        return Err(ResidueError::Divergent { beta, m, n: 0 });
    }
    // Γ(k+½)/√π = (2k−1)!!/2^k.
    let half_gamma = |k: u32| -> Rat {
        let mut r = rat_int(1);
        for t in 0..k {
            r *= rat(2 * t as i64 + 1, 2);
        }
        r
    };
    let gamma_m: BigInt = (1..m).fold(BigInt::from(1), |acc, t| acc * BigInt::from(t));
    Ok(half_gamma(beta) * half_gamma(m - beta - 1) / Rat::from_integer(gamma_m) / rat_int(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        let p = |c: &[i64]| Poly::new(c.iter().map(|&x| rat_int(x)).collect());
        RatFun::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(closed_form_j(0, 1, 0).unwrap(), RatFun::constant(rat(1, 2)));
        // π/(2s(s+1))
        assert_eq!(closed_form_j(1, 1, 1).unwrap(), rf(&[1], &[0, 2, 2]));
        // π(3s+1)/(16(s+1)³)
        assert_eq!(closed_form_j(1, 3, 1).unwrap(), rf(&[1, 3], &[16, 48, 48, 16]));
        assert_eq!(closed_form_j(1, 3, 0).unwrap(), RatFun::constant(rat(1, 16)));
        assert_eq!(closed_form_j(2, 4, 0).unwrap(), RatFun::constant(rat(1, 32)));
        assert!(closed_form_j(1, 1, 0).is_err());
    }

    #[test]
    fn pure_second_pole() {
        // m = 0: ∫ u^{2β}(1+s²u²)^{−n} = s^{−2β−1} J(β, n, 0).
        let j = closed_form_j(1, 0, 3).unwrap();
        assert_eq!(j, RatFun::s_pow(-3).scale(&rat(1, 16)));
    }

    #[test]
    fn merged_pole_identity() {
        for (beta, m, n) in [(0, 1, 1), (1, 3, 1), (2, 2, 2), (3, 1, 4), (0, 0, 2)] {
            let j = closed_form_j(beta, m, n).unwrap();
            let merged = closed_form_j(beta, m + n, 0).unwrap();
            assert_eq!(j.eval(&rat_int(1)).unwrap(), merged.as_constant().unwrap());
        }
    }

    #[test]
    fn beta_formula_agrees() {
        for m in 1..7 {
            for beta in 0..m {
                let j = closed_form_j(beta, m, 0).unwrap();
                assert_eq!(j.as_constant().unwrap(), beta_formula_j(beta, m).unwrap());
            }
        }
    }

    #[test]
    fn table_examples() {
        let (kp, v) = assemble_f(&IntegralKey::new(3, 0, 1, 0, 0), Normalization::Table).unwrap();
        assert_eq!((kp, v), (-3, RatFun::constant(rat(1, 16))));
        let (kp, v) = assemble_f(&IntegralKey::new(4, 1, 3, 6, 0), Normalization::Table).unwrap();
        assert_eq!(kp, -1);
        assert_eq!(v, rf(&[5, 4, 1], &[32, 128, 192, 128, 32]));
    }
}
