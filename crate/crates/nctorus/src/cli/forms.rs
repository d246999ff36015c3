//! Parsing of one-form specifications given on the command line.

use crate::psido::OneForm;

/// Parses `sigma1`, `ksigma2`, `free:a:b` or a bare name such as `u`
/// (the fully symbolic form `u_1 σ¹ + u_2 kσ²`).
pub fn parse_form(spec: &str) -> Result<OneForm, String> {
    let s = spec.trim();
    match s {
        "sigma1" => return Ok(OneForm::sigma1()),
        "ksigma2" => return Ok(OneForm::k_sigma2()),
        _ => {}
    }
    let ident = |x: &str| !x.is_empty() && x.chars().all(|c| c.is_ascii_alphanumeric()) && x.starts_with(|c: char| c.is_ascii_alphabetic());
    if let Some(rest) = s.strip_prefix("free:") {
        if let Some((a, b)) = rest.split_once(':') {
            if ident(a) && ident(b) {
                return Ok(OneForm::free(a, b));
            }
        }
        return Err(format!("bad one-form {spec:?}: expected free:<name>:<name>"));
    }
    if ident(s) {
        return Ok(OneForm::symbolic(s));
    }
    Err(format!("bad one-form {spec:?}: expected a name, sigma1, ksigma2 or free:a:b"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(parse_form("sigma1").unwrap(), OneForm::sigma1());
        assert_eq!(parse_form("free:a:b").unwrap(), OneForm::free("a", "b"));
        assert_eq!(parse_form("u").unwrap(), OneForm::symbolic("u"));
        assert!(parse_form("free:a").is_err());
        assert!(parse_form("1x").is_err());
    }
}
