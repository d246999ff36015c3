//! Parser for the linear syntax produced by [`super::print`].
//!
//! Input is a sum of signed terms, possibly spread over lines; `#` starts a
//! comment line. Within a term the factors are multiplied left to right, so
//! arbitrary written orders (for instance `k b_0` instead of the canonical
//! `b_0 k`) are accepted and normalized.

use super::generator::{Coeff, Generator};
use super::sigma::SigmaBasis;
use super::symbol::{term_multiply, NcSymbol, NcTerm};
use super::AlgebraError;
use crate::arith::{gauss, gauss_i, gauss_real, parse_rat, rat_int, GaussRat};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Sign(bool),
    Group(String),
    Atom(String),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, AlgebraError> {
    let mut toks = Vec::new();
    for line in src.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c == '+' || c == '-' {
                toks.push(Tok::Sign(c == '-'));
                i += 1;
            } else if c == '(' {
                let close = chars[i..].iter().position(|&x| x == ')').ok_or_else(|| perr(line, "unclosed '('"))?;
                toks.push(Tok::Group(chars[i + 1..i + close].iter().collect()));
                i += close + 1;
            } else {
                // An atom runs to the next whitespace at parenthesis depth 0.
                let mut depth = 0i32;
                let start = i;
                while i < chars.len() {
                    match chars[i] {
                        '(' => depth += 1,
                        ')' => depth -= 1,
                        ch if ch.is_whitespace() && depth == 0 => break,
                        _ => {}
                    }
                    i += 1;
                }
                toks.push(Tok::Atom(chars[start..i].iter().collect()));
            }
        }
    }
    Ok(toks)
}

fn perr(input: &str, msg: &str) -> AlgebraError {
    AlgebraError::Parse { input: input.to_string(), message: msg.to_string() }
}

/// Parses `p + q i` inside a parenthesized coefficient.
fn parse_complex(g: &str) -> Result<GaussRat, AlgebraError> {
    let s: String = g.split_whitespace().collect::<Vec<_>>().join("");
    let body = s.strip_suffix('i').ok_or_else(|| perr(g, "complex coefficient must end in 'i'"))?;
    let split = body[1..].rfind(['+', '-']).map(|p| p + 1).ok_or_else(|| perr(g, "expected 'p + q i'"))?;
    let re = parse_rat(&body[..split]).map_err(|_| perr(g, "bad real part"))?;
    let im_s = &body[split..];
    let im = match im_s {
        "+" => rat_int(1),
        "-" => rat_int(-1),
        _ => parse_rat(im_s.trim_start_matches('+')).map_err(|_| perr(g, "bad imaginary part"))?,
    };
    Ok(gauss(re, im))
}

/// Splits `base^e`, `base^{e}` into base and exponent (1 if absent).
fn split_exp(atom: &str) -> Result<(&str, i64), AlgebraError> {
    match atom.rfind('^') {
        Some(p) if !atom[p..].contains(')') => {
            let e = atom[p + 1..].trim_start_matches('{').trim_end_matches('}');
            let n = e.parse::<i64>().map_err(|_| perr(atom, "bad exponent"))?;
            Ok((&atom[..p], n))
        }
        _ => Ok((atom, 1)),
    }
}

fn index(s: &str, atom: &str) -> Result<u8, AlgebraError> {
    match s {
        "1" => Ok(1),
        "2" => Ok(2),
        _ => Err(perr(atom, "index must be 1 or 2")),
    }
}

fn parse_coeff_base(s: &str, atom: &str) -> Result<Coeff, AlgebraError> {
    if let Some(name) = s.strip_prefix("\\mathsf{").and_then(|r| r.strip_suffix('}')) {
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(perr(atom, "bad free element name"));
        }
        return Ok(Coeff { name: name.to_string(), index: None, d1: 0, d2: 0 });
    }
    match s.split_once('_') {
        Some((n @ ("u" | "v" | "w"), i)) => Ok(Coeff { name: n.to_string(), index: Some(index(i, atom)?), d1: 0, d2: 0 }),
        _ => Err(perr(atom, "unknown algebra element")),
    }
}

/// Parses one factor atom into a term.
fn parse_atom(atom: &str) -> Result<NcTerm, AlgebraError> {
    let one = gauss_real(rat_int(1));
    let unit = |sigma, xi, w: Vec<Generator>| NcTerm::new(one.clone(), sigma, xi, &w);
    if let Some(rest) = atom.strip_prefix("\\delta_") {
        // \delta_i...(x) with an optional trailing power.
        let (body, power) = split_exp(atom)?;
        let _ = rest;
        let open = body.find('(').ok_or_else(|| perr(atom, "expected '('"))?;
        let inner = body[open + 1..].strip_suffix(')').ok_or_else(|| perr(atom, "expected ')'"))?;
        let mut ds = Vec::new();
        for d in body[..open].split("\\delta_").skip(1) {
            ds.push(index(d, atom)?);
        }
        let g = if inner == "k" {
            match ds.as_slice() {
                [i] => Generator::DK(*i),
                [i, j] => Generator::ddk(*i, *j),
                _ => return Err(perr(atom, "only first and second derivatives of k are supported")),
            }
        } else {
            let mut c = parse_coeff_base(inner, atom)?;
            for d in ds {
                c = c.derive(d);
            }
            Generator::Coeff(c)
        };
        if power < 1 {
            return Err(perr(atom, "exponent must be positive"));
        }
        return Ok(unit(SigmaBasis::Id, (0, 0), vec![g; power as usize]));
    }
    let (base, e) = split_exp(atom)?;
    let nonneg = |e: i64| -> Result<u32, AlgebraError> { u32::try_from(e).map_err(|_| perr(atom, "exponent must be nonnegative")) };
    match base {
        "k" => Ok(unit(SigmaBasis::Id, (0, 0), vec![Generator::K(e)])),
        "b_0" => Ok(unit(SigmaBasis::Id, (0, 0), vec![Generator::B0(nonneg(e)?)])),
        "\\xi_1" => Ok(unit(SigmaBasis::Id, (nonneg(e)?, 0), vec![])),
        "\\xi_2" => Ok(unit(SigmaBasis::Id, (0, nonneg(e)?), vec![])),
        "\\sigma" => {
            let s = u8::try_from(e).ok().and_then(SigmaBasis::from_index).ok_or_else(|| perr(atom, "sigma index must be 0..3"))?;
            Ok(unit(s, (0, 0), vec![]))
        }
        "i" if e == 1 => Ok(NcTerm::new(gauss_i(), SigmaBasis::Id, (0, 0), &[])),
        _ => {
            if let Ok(r) = parse_rat(atom) {
                return Ok(NcTerm::new(gauss_real(r), SigmaBasis::Id, (0, 0), &[]));
            }
            let c = parse_coeff_base(base, atom)?;
            let p = nonneg(e)?;
            Ok(unit(SigmaBasis::Id, (0, 0), vec![Generator::Coeff(c); p as usize]))
        }
    }
}

/// Parses a symbol written in the linear syntax.
pub fn parse_symbol(src: &str) -> Result<NcSymbol, AlgebraError> {
    let toks = tokenize(src)?;
    if toks == [Tok::Atom("0".into())] {
        return Ok(NcSymbol::zero());
    }
    let mut terms = Vec::new();
    let mut cur: Option<NcTerm> = None;
    let mut sign_pending: Option<bool> = None;
    let finish = |cur: &mut Option<NcTerm>, terms: &mut Vec<NcTerm>| {
        if let Some(t) = cur.take() {
            terms.push(t);
        }
    };
    for tok in toks {
        let factor = match tok {
            Tok::Sign(neg) => {
                finish(&mut cur, &mut terms);
                if sign_pending.is_some() {
                    return Err(perr(src, "two consecutive signs"));
                }
                sign_pending = Some(neg);
                continue;
            }
            Tok::Group(g) => NcTerm::new(parse_complex(&g)?, SigmaBasis::Id, (0, 0), &[]),
            Tok::Atom(a) => parse_atom(&a)?,
        };
        let base = match cur.take() {
            Some(t) => t,
            None => {
                let neg = sign_pending.take().unwrap_or(false);
                NcTerm::new(gauss_real(rat_int(if neg { -1 } else { 1 })), SigmaBasis::Id, (0, 0), &[])
            }
        };
        cur = Some(term_multiply(&base, &factor));
    }
    if sign_pending.is_some() {
        return Err(perr(src, "dangling sign"));
    }
    finish(&mut cur, &mut terms);
    if terms.is_empty() {
        return Err(perr(src, "empty input"));
    }
    Ok(NcSymbol::from_terms(terms))
}

/// Parses a file of terms in written order and returns each term separately
/// (without merging), as used for golden displays.
pub fn parse_terms(src: &str) -> Result<Vec<NcTerm>, AlgebraError> {
    let mut out = Vec::new();
    for line in src.lines() {
        let l = line.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        out.extend(parse_symbol(l)?.terms());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use Generator::*;

    #[test]
    fn parse_examples() {
        let s = parse_symbol("- 3/2 \\sigma^1 k b_0 \\delta_2(k) b_0 \\xi_1 \\xi_2").unwrap();
        let t = &s.terms()[0];
        assert_eq!(t.coeff, gauss_real(rat(-3, 2)));
        assert_eq!(t.sigma, SigmaBasis::S1);
        assert_eq!(t.word, vec![B0(1), K(1), DK(2), B0(1)]);
        assert_eq!(t.xi, (1, 1));
        let s = parse_symbol("\\sigma^1 \\xi_1 + k \\sigma^2 \\xi_2 + 1/2 \\sigma^2 \\delta_2(k)").unwrap();
        assert_eq!(s.len(), 3);
        let c = parse_symbol("(1/2 - 3 i) \\delta_1\\delta_2(v_1) u_2 \\mathsf{a} k^{-12}").unwrap();
        let t = &c.terms()[0];
        assert_eq!(t.coeff, gauss(rat(1, 2), rat_int(-3)));
        assert_eq!(t.word.last(), Some(&K(-12)));
        assert_eq!(parse_symbol("0").unwrap(), NcSymbol::zero());
        assert_eq!(parse_symbol("- i \\sigma^3").unwrap().terms()[0].coeff, gauss(rat_int(0), rat_int(-1)));
    }

    #[test]
    fn round_trip() {
        let src = "(1/2 - 3 i) \\delta_1\\delta_2(v_1) u_2 \\mathsf{a} b_0^2 k^{-12} \\delta_1\\delta_2(k) \\xi_2^{11}\n- \\sigma^3\n+ 2 i \\sigma^2 b_0 \\delta_1(k) \\xi_1";
        let s = parse_symbol(src).unwrap();
        let printed = s.to_string();
        assert_eq!(parse_symbol(&printed).unwrap(), s);
        assert_eq!(parse_symbol(&printed).unwrap().to_string(), printed);
    }

    #[test]
    fn errors() {
        for bad in ["\\delta_3(k)", "+", "x_1", "\\delta_1\\delta_1\\delta_1(k)", "(1 + 2)"] {
            assert!(parse_symbol(bad).is_err(), "{bad}");
        }
    }
}
