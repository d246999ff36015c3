//! The six first-derivative-pair tables and their emission as Markdown,
//! LaTeX longtables and JSON.

use super::integral::IntegralKey;
use super::reduce::{word_label, ResidueTerm, SlotPattern};
use crate::algebra::{Generator, Word};
use crate::arith::{fmt_rat, Rat, RatFun};
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// Which sector a table collects: `u_i v_j` with slots `δ_p(k) … δ_q(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSpec {
    pub id: &'static str,
    pub uv: Word,
    pub slots: SlotPattern,
}

impl TableSpec {
    fn new(id: &'static str, i: u8, j: u8, p: u8, q: u8) -> Self {
        TableSpec { id, uv: vec![Generator::u(i), Generator::v(j)], slots: SlotPattern::TwoSlot(p, q) }
    }

    pub fn title(&self) -> String {
        let SlotPattern::TwoSlot(p, q) = self.slots else { unreachable!() };
        format!("Terms at {} of the form b_0^m k^a \\delta_{p}(k) b_0^n k^b \\delta_{q}(k)", word_label(&self.uv))
    }
}

/// The six tables of the Einstein functional, in order.
pub fn six_tables() -> Vec<TableSpec> {
    vec![
        TableSpec::new("u1v1_d1d1", 1, 1, 1, 1),
        TableSpec::new("u1v1_d2d2", 1, 1, 2, 2),
        TableSpec::new("u1v2_d1d2", 1, 2, 1, 2),
        TableSpec::new("u2v1_d1d2", 2, 1, 1, 2),
        TableSpec::new("u2v2_d1d1", 2, 2, 1, 1),
        TableSpec::new("u2v2_d2d2", 2, 2, 2, 2),
    ]
}

/// One row: `C × F(s, m, n, β, a, b)` and its value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub no: usize,
    pub term: String,
    #[serde(serialize_with = "ser_rat")]
    pub coeff: Rat,
    pub key: IntegralKey,
    /// Whether the row entered the table through the slot transposition.
    pub transposed: bool,
    pub k_power: i64,
    /// `C · F / π`.
    pub result: RatFun,
}

fn ser_rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rat(r))
}

/// A regenerated table with its exact sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub id: String,
    pub title: String,
    pub uv_word: String,
    pub slots: SlotPattern,
    pub rows: Vec<TableRow>,
    /// Sum of the results divided by `π` (at the common `k` power).
    pub sum: RatFun,
    pub zero: bool,
}

/// Collects the rows of one table from canonicalized residue terms. Terms
/// with equal `(m, n, β, a, b)` (and transposition flag) are merged by
/// summing coefficients; rows whose coefficient cancels are dropped.
pub fn build_table(spec: &TableSpec, terms: &[ResidueTerm]) -> Table {
    // Per merged row: coefficient, value, k power, term string, α.
    type Merged = (Rat, RatFun, i64, String, u32);
    let mut merged: BTreeMap<(bool, IntegralKey), Merged> = BTreeMap::new();
    for t in terms.iter().filter(|t| t.uv_word == spec.uv && t.slots == spec.slots) {
        let e = merged
            .entry((t.transposed, t.key))
            .or_insert_with(|| (Rat::zero(), RatFun::zero(), t.k_power, t.term_string(), t.alpha));
        e.0 += &t.coeff;
        e.1 = &e.1 + &t.value;
    }
    let mut rows = Vec::new();
    let mut sum = RatFun::zero();
    for ((transposed, key), (coeff, result, k_power, term, _)) in merged {
        if coeff.is_zero() && result.is_zero() {
            continue;
        }
        sum = &sum + &result;
        rows.push(TableRow { no: rows.len() + 1, term, coeff, key, transposed, k_power, result });
    }
    Table {
        id: spec.id.to_string(),
        title: spec.title(),
        uv_word: word_label(&spec.uv),
        slots: spec.slots,
        rows,
        zero: sum.is_zero(),
        sum,
    }
}

/// `π·value·k^p` as plain text, e.g. `pi * (3*s + 1)/(8*s + 8) * k^-3`.
pub fn pi_value_text(value: &RatFun, k_power: i64) -> String {
    if value.is_zero() {
        return "0".into();
    }
    format!("pi * {} * k^{}", value.to_expr(), k_power)
}

/// `π·value·k^p` as a LaTeX fraction.
pub fn pi_value_latex(value: &RatFun, k_power: i64) -> String {
    if value.is_zero() {
        return "0".into();
    }
    let (num, den) = value.integer_parts();
    let (neg, num) = if num.leading().is_negative() { (true, -&num) } else { (false, num) };
    let nterms = num.coeffs().iter().filter(|c| !c.is_zero()).count();
    let numer = if num.degree() == Some(0) && num.leading().is_one() {
        "\\pi".to_string()
    } else if nterms == 1 {
        format!("{}\\pi", num.to_latex())
    } else {
        format!("\\pi\\left({}\\right)", num.to_latex())
    };
    let mut den_parts = Vec::new();
    if !(den.degree() == Some(0) && den.leading().is_one()) {
        let dterms = den.coeffs().iter().filter(|c| !c.is_zero()).count();
        den_parts.push(if dterms > 1 { format!("\\left({}\\right)", den.to_latex()) } else { den.to_latex() });
    }
    let mut numer = numer;
    match k_power {
        0 => {}
        p if p > 0 => numer = format!("{numer} k{}", if p == 1 { String::new() } else { format!("^{{{p}}}") }),
        p => den_parts.insert(0, if p == -1 { "k".into() } else { format!("k^{{{}}}", -p) }),
    }
    let sign = if neg { "-" } else { "" };
    if den_parts.is_empty() {
        format!("{sign}{numer}")
    } else {
        format!("{sign}\\frac{{{numer}}}{{{}}}", den_parts.join(" "))
    }
}

fn coeff_latex(c: &Rat) -> String {
    if c.is_one() {
        String::new()
    } else if *c == -Rat::one() {
        "-".into()
    } else if c.denom().is_one() {
        c.numer().to_string()
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    }
}

fn key_args(r: &TableRow) -> String {
    let k = &r.key;
    format!("{},{},{},{},{}", k.m, k.n, k.beta, k.a, k.b)
}

/// Markdown rendering of the tables.
pub fn tables_markdown(tables: &[Table]) -> String {
    let mut out = String::new();
    for t in tables {
        out.push_str(&format!("### {} — {}\n\n", t.id, t.title));
        out.push_str("| No. | Terms | C × F(s,m,n,β,a,b) | Result |\n|---:|---|---|---|\n");
        for r in &t.rows {
            let f = if r.transposed { "F^T" } else { "F" };
            out.push_str(&format!(
                "| {} | `{}` | {} × {}(s,{}) | {} |\n",
                r.no,
                r.term,
                fmt_rat(&r.coeff),
                f,
                key_args(r),
                pi_value_text(&r.result, r.k_power)
            ));
        }
        let kp = t.rows.first().map_or(0, |r| r.k_power);
        out.push_str(&format!("\n**Sum:** {} ({})\n\n", pi_value_text(&t.sum, kp), if t.zero { "vanishes" } else { "NONZERO" }));
    }
    out
}

/// LaTeX longtable rendering with columns No. / Terms / C×F / Result.
pub fn tables_latex(tables: &[Table]) -> String {
    let mut out = String::new();
    for t in tables {
        out.push_str("\\begin{longtable}{|c|c|c|c|}\n");
        out.push_str(&format!("\\caption{{{}}}\\label{{{}}}\\\\\n\\hline\n", t.title.replace('_', "\\_"), t.id));
        out.push_str("No. & Terms & $C\\times F(s,m,n,\\beta,a,b)$ & Result \\\\\n\\hline\n\\endhead\n");
        for r in &t.rows {
            let f = if r.transposed { "F^{T}" } else { "F" };
            out.push_str(&format!(
                "{} & ${}$ & \\parbox{{5cm}}{{\\centering ${}\\,{}(s,{})$}} & \\parbox{{5cm}}{{\\centering ${}$}} \\\\\n\\hline\n",
                r.no,
                r.term,
                coeff_latex(&r.coeff),
                f,
                key_args(r),
                pi_value_latex(&r.result, r.k_power)
            ));
        }
        out.push_str("\\end{longtable}\n\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int, Poly};

    #[test]
    fn latex_values() {
        let v = RatFun::constant(rat(1, 8));
        assert_eq!(pi_value_latex(&v, -3), "\\frac{\\pi}{k^{3} 8}");
        let p = |c: &[i64]| Poly::new(c.iter().map(|&x| rat_int(x)).collect());
        let w = RatFun::new(p(&[-1, -3]), p(&[8, 24, 24, 8])).unwrap();
        assert_eq!(pi_value_latex(&w, -3), "-\\frac{\\pi\\left(3 s + 1\\right)}{k^{3} \\left(8 s^{3} + 24 s^{2} + 24 s + 8\\right)}");
        assert_eq!(pi_value_text(&v, -3), "pi * 1/8 * k^-3");
    }
}
