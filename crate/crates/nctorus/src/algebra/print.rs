//! Pretty-printer to the LaTeX-like linear syntax.
//!
//! One term per line: `± coeff \sigma^N <algebra> <commutant> \xi_1^e \xi_2^e`,
//! e.g. `- 3/2 \sigma^1 b_0^2 k \delta_1(k) b_0 \xi_1^2 \xi_2^2`. A unit
//! coefficient is omitted, `\sigma^0` (the identity) is not written, the
//! imaginary unit is the token `i` and a complex coefficient is written
//! `(p + q i)`.

use super::generator::{Coeff, Generator};
use super::sigma::SigmaBasis;
use super::symbol::{NcSymbol, NcTerm};
use crate::arith::{fmt_rat, GaussRat};
use num_traits::{One, Signed, Zero};

fn exponent(base: &str, n: i64) -> String {
    match n {
        1 => base.to_string(),
        0..=9 => format!("{base}^{n}"),
        _ => format!("{base}^{{{n}}}"),
    }
}

/// Linear-syntax form of an algebra coefficient, e.g. `\delta_1(v_2)`.
pub fn coeff_to_string(c: &Coeff) -> String {
    let base = match c.index {
        Some(i) => format!("{}_{}", c.name, i),
        None => format!("\\mathsf{{{}}}", c.name),
    };
    if !c.is_derived() {
        return base;
    }
    let ds: String = std::iter::repeat_n("\\delta_1", c.d1 as usize)
        .chain(std::iter::repeat_n("\\delta_2", c.d2 as usize))
        .collect();
    format!("{ds}({base})")
}

/// Linear-syntax form of one generator.
pub fn generator_to_string(g: &Generator) -> String {
    match g {
        Generator::K(n) => exponent("k", *n),
        Generator::B0(m) => exponent("b_0", *m as i64),
        Generator::DK(i) => format!("\\delta_{i}(k)"),
        Generator::DDK(i, j) => format!("\\delta_{i}\\delta_{j}(k)"),
        Generator::Coeff(c) => coeff_to_string(c),
    }
}

/// Splits a coefficient into a sign and its unsigned display ("" for 1).
fn signed_coeff(c: &GaussRat) -> (bool, String) {
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        let a = c.re.abs();
        (neg, if a.is_one() { String::new() } else { fmt_rat(&a) })
    } else if c.re.is_zero() {
        let neg = c.im.is_negative();
        let a = c.im.abs();
        (neg, if a.is_one() { "i".into() } else { format!("{} i", fmt_rat(&a)) })
    } else {
        let sign = if c.im.is_negative() { '-' } else { '+' };
        let im = c.im.abs();
        let im = if im.is_one() { "i".to_string() } else { format!("{} i", fmt_rat(&im)) };
        (false, format!("({} {} {})", fmt_rat(&c.re), sign, im))
    }
}

/// Body of a term without its coefficient: σ, word and ξ factors.
pub fn monomial_to_string(sigma: SigmaBasis, xi: (u32, u32), word: &[Generator]) -> String {
    let mut parts: Vec<String> = Vec::new();
    if sigma != SigmaBasis::Id {
        parts.push(format!("\\sigma^{}", sigma.index()));
    }
    parts.extend(word.iter().map(generator_to_string));
    if xi.0 > 0 {
        parts.push(exponent("\\xi_1", xi.0 as i64));
    }
    if xi.1 > 0 {
        parts.push(exponent("\\xi_2", xi.1 as i64));
    }
    parts.join(" ")
}

/// One term; with `leading_sign` the sign is always written (`+ ` or `- `).
pub fn term_to_string(t: &NcTerm, leading_sign: bool) -> String {
    let (neg, mag) = signed_coeff(&t.coeff);
    let body = monomial_to_string(t.sigma, t.xi, &t.word);
    let mut parts = Vec::new();
    if leading_sign {
        parts.push(if neg { "-" } else { "+" }.to_string());
    } else if neg {
        parts.push("-".into());
    }
    if !mag.is_empty() {
        parts.push(mag);
    }
    if !body.is_empty() {
        parts.push(body);
    } else if parts.last().is_none_or(|p| p == "+" || p == "-") {
        parts.push("1".into());
    }
    parts.join(" ")
}

/// A symbol, one signed term per line in canonical order; `0` if empty.
pub fn symbol_to_string(s: &NcSymbol) -> String {
    if s.is_zero() {
        return "0".into();
    }
    s.terms().iter().map(|t| term_to_string(t, true)).collect::<Vec<_>>().join("\n")
}
