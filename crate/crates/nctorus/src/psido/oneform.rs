//! One-forms `u = u₁σ¹ + u₂kσ²` and the operator `u{D_k, v}`.

use super::compose::compose;
use super::dirac::{dirac_symbol_with, DiracVariant};
use super::PsidoError;
use crate::algebra::{print::generator_to_string, Generator, NcSymbol, SigmaBasis, Word};
use crate::arith::{gauss_real, rat_int};
use serde::Serialize;

/// A one-form `c1·σ¹ + c2·kσ²` with algebra-class coefficient words.
///
/// The factor `k` of the second component is attached structurally and is
/// not part of `c2`. `None` means a zero coefficient; an empty word is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneForm {
    pub c1: Option<Word>,
    pub c2: Option<Word>,
}

impl OneForm {
    pub fn new(c1: Option<Word>, c2: Option<Word>) -> Self {
        OneForm { c1, c2 }
    }

    /// Fully symbolic one-form `x₁σ¹ + x₂kσ²` for `name ∈ {u, v, w}`.
    pub fn symbolic(name: &str) -> Self {
        let g = |i| match name {
            "u" => Generator::u(i),
            "v" => Generator::v(i),
            "w" => Generator::w(i),
            other => Generator::free(&format!("{other}{i}")),
        };
        OneForm::new(Some(vec![g(1)]), Some(vec![g(2)]))
    }

    /// One-form with free algebra coefficients `aσ¹ + bkσ²`.
    pub fn free(a: &str, b: &str) -> Self {
        OneForm::new(Some(vec![Generator::free(a)]), Some(vec![Generator::free(b)]))
    }

    /// `σ¹`.
    pub fn sigma1() -> Self {
        OneForm::new(Some(Vec::new()), None)
    }

    /// `kσ²`.
    pub fn k_sigma2() -> Self {
        OneForm::new(None, Some(Vec::new()))
    }

    /// The degree-0 matrix symbol of the one-form.
    pub fn to_symbol(&self) -> NcSymbol {
        let one = gauss_real(rat_int(1));
        let mut s = NcSymbol::zero();
        if let Some(c1) = &self.c1 {
            s.add_assign(&NcSymbol::monomial(one.clone(), SigmaBasis::S1, (0, 0), c1));
        }
        if let Some(c2) = &self.c2 {
            let mut w = c2.clone();
            w.push(Generator::K(1));
            s.add_assign(&NcSymbol::monomial(one, SigmaBasis::S2, (0, 0), &w));
        }
        s
    }

    /// Human-readable description, e.g. `u_1 σ¹ + u_2 kσ²`.
    pub fn describe(&self) -> String {
        let w = |c: &Word| if c.is_empty() { "1".to_string() } else { c.iter().map(generator_to_string).collect::<Vec<_>>().join(" ") };
        let mut parts = Vec::new();
        if let Some(c1) = &self.c1 {
            parts.push(format!("{} σ¹", w(c1)));
        }
        if let Some(c2) = &self.c2 {
            parts.push(format!("{} kσ²", w(c2)));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Product of degree-0 matrix symbols in the σ-algebra. If every factor is
/// off-diagonal (σ¹/σ² only) and their number is odd, the product must again
/// be off-diagonal; this is checked.
pub fn one_form_product(forms: &[NcSymbol]) -> Result<NcSymbol, PsidoError> {
    let (first, rest) = forms.split_first().ok_or(PsidoError::EmptyProduct)?;
    let prod = rest.iter().fold(first.clone(), |acc, f| acc.mul(f));
    let off_diagonal = |s: &NcSymbol| s.iter().all(|(k, _)| matches!(k.sigma, SigmaBasis::S1 | SigmaBasis::S2));
    if forms.len() % 2 == 1 && forms.iter().all(off_diagonal) && !off_diagonal(&prod) {
        return Err(PsidoError::NotOffDiagonal);
    }
    Ok(prod)
}

/// Full symbol (degrees 1 and 0) of `u{D_k, v} = u(D_k v + v D_k)`,
/// composed from first principles.
pub fn anticommutator_with_dirac(u: &OneForm, v: &OneForm) -> Result<NcSymbol, PsidoError> {
    anticommutator_with_dirac_for(u, v, DiracVariant::Standard)
}

/// [`anticommutator_with_dirac`] for a chosen Dirac variant.
pub fn anticommutator_with_dirac_for(u: &OneForm, v: &OneForm, variant: DiracVariant) -> Result<NcSymbol, PsidoError> {
    let d = dirac_symbol_with(variant);
    let vs = v.to_symbol();
    let anti = compose(&d, &vs, 0)?.add(&compose(&vs, &d, 0)?);
    compose(&u.to_symbol(), &anti, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_symbol;

    #[test]
    fn products() {
        let s1 = OneForm::sigma1().to_symbol();
        assert_eq!(one_form_product(&[s1.clone(), s1.clone()]).unwrap(), NcSymbol::one());
        let p = one_form_product(&[s1.clone(), OneForm::k_sigma2().to_symbol()]).unwrap();
        assert_eq!(p, parse_symbol("i \\sigma^3 k").unwrap());
        assert_eq!(one_form_product(&[s1.clone(), s1.clone(), s1.clone()]).unwrap(), s1);
        assert!(one_form_product(&[]).is_err());
    }

    #[test]
    fn anticommutator_parts() {
        let s = anticommutator_with_dirac(&OneForm::symbolic("u"), &OneForm::symbolic("v")).unwrap();
        let rho1 = parse_symbol(
            "2 \\xi_2 u_1 v_2 k^2 \\sigma^1 + 2 \\xi_1 u_2 v_1 k \\sigma^2 + 2 \\xi_1 u_1 v_1 \\sigma^1 + 2 \\xi_2 u_2 v_2 k^3 \\sigma^2",
        )
        .unwrap();
        assert_eq!(s.part(1), rho1);
        let has = s.part(0).iter().any(|(k, c)| {
            k.sigma == SigmaBasis::S2 && k.word == vec![Generator::u(1), Generator::v(2), Generator::DK(1)] && *c == gauss_real(rat_int(1))
        });
        assert!(has, "{}", s.part(0));
        let t = anticommutator_with_dirac(&OneForm::sigma1(), &OneForm::sigma1()).unwrap();
        assert_eq!(t.part(1), parse_symbol("2 \\sigma^1 \\xi_1").unwrap());
    }
}
