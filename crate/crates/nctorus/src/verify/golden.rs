//! Stored reference data: the published table rows and symbol displays.

use crate::arith::{parse_rat, Poly, Rat, RatFun};
use crate::residue::IntegralKey;

/// The published `𝔟₋₂`, one term per line.
pub const B_MINUS_2: &str = include_str!("../../data/b_minus_2.txt");
/// The published even-ξ slot sectors of the degree −2 Einstein symbol.
pub const PUBLISHED_SYMBOL: &str = include_str!("../../data/published_symbol.txt");
/// The published table rows (tab separated).
pub const TABLES_TSV: &str = include_str!("../../data/tables_golden.tsv");

/// One published table row: `coeff × F(s, m, n, β, a, b) = π·value·k^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub table: String,
    pub no: usize,
    pub coeff: Rat,
    pub key: IntegralKey,
    pub k_power: i64,
    pub value: RatFun,
}

fn poly(field: &str) -> Result<Poly, String> {
    Ok(Poly::new(field.split_whitespace().map(|c| parse_rat(c).map_err(|e| e.to_string())).collect::<Result<_, _>>()?))
}

/// Parses the golden TSV: `table no coeff m n beta a b k_power num den`,
/// where `num` and `den` are ascending coefficient lists of `value`.
pub fn parse_golden(src: &str) -> Result<Vec<GoldenRow>, String> {
    let mut rows = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        let bad = |what: &str| format!("line {}: bad {what}", ln + 1);
        if f.len() != 11 {
            return Err(bad("field count"));
        }
        let int = |i: usize| f[i].trim().parse::<i64>().map_err(|_| bad("integer"));
        let uint = |i: usize| f[i].trim().parse::<u32>().map_err(|_| bad("integer"));
        rows.push(GoldenRow {
            table: f[0].to_string(),
            no: int(1)? as usize,
            coeff: parse_rat(f[2]).map_err(|_| bad("coefficient"))?,
            key: IntegralKey::new(uint(3)?, uint(4)?, uint(5)?, int(6)?, int(7)?),
            k_power: int(8)?,
            value: RatFun::new(poly(f[9])?, poly(f[10])?).map_err(|e| e.to_string())?,
        });
    }
    Ok(rows)
}

/// The stored golden rows (the data file is part of the crate).
pub fn golden_rows() -> Vec<GoldenRow> {
    parse_golden(TABLES_TSV).expect("shipped golden table data parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn golden_table_shape() {
        let rows = golden_rows();
        let count = |t: &str| rows.iter().filter(|r| r.table == t).count();
        assert_eq!((count("u1v1_d1d1"), count("u1v1_d2d2"), count("u2v2_d1d1")), (32, 31, 29));
        assert_eq!(rows[0].value, RatFun::constant(rat(1, 8)));
        assert!(parse_golden("x\t1").is_err());
    }
}
