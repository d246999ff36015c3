//! Golden tests against the stored published displays and tables.

use nctorus::algebra::lift::lift_equal;
use nctorus::algebra::{parse_symbol, Generator};
use nctorus::arith::{rat, RatFun};
use nctorus::functionals::{einstein_symbol, Options};
use nctorus::psido::{inverse_dirac, DiracVariant, OneForm};
use nctorus::residue::{build_table, canonicalize, reduce_symbol, six_tables, Normalization};
use nctorus::verify::golden_rows;

const B_MINUS_2: &str = include_str!("../data/b_minus_2.txt");
const PUBLISHED: &str = include_str!("../data/published_symbol.txt");

#[test]
fn b_minus_2_term_for_term() {
    let b = inverse_dirac(DiracVariant::Standard, 2).unwrap();
    assert_eq!(b.part(-2), parse_symbol(B_MINUS_2).unwrap());
}

#[test]
fn published_symbol_reproduces_published_tables() {
    let published = parse_symbol(PUBLISHED).unwrap();
    let terms: Vec<_> = reduce_symbol(&published, Normalization::Table).unwrap().iter().map(canonicalize).collect();
    let golden = golden_rows();
    for spec in six_tables() {
        let table = build_table(&spec, &terms);
        assert!(table.zero, "{} does not vanish", spec.id);
        let want: Vec<_> = golden.iter().filter(|r| r.table == spec.id).collect();
        if want.is_empty() {
            continue;
        }
        assert_eq!(table.rows.len(), want.len(), "{}", spec.id);
        for row in &table.rows {
            assert!(
                want.iter().any(|g| g.key == row.key && g.coeff == row.coeff && g.value == row.result && g.k_power == row.k_power),
                "{} row {} ({:?}) not published",
                spec.id,
                row.no,
                row.key
            );
        }
    }
}

#[test]
fn engine_symbol_matches_published_symbol_under_the_trace() {
    let e = einstein_symbol(&OneForm::symbolic("u"), &OneForm::symbolic("v"), &Options::default()).unwrap();
    let sectors = e
        .id_component()
        .even_xi()
        .filter(|k, _| k.word.iter().any(Generator::is_slot) && !k.word.iter().any(|g| matches!(g, Generator::Coeff(c) if c.is_derived())));
    assert!(lift_equal(&sectors, &parse_symbol(PUBLISHED).unwrap(), true));
}

#[test]
fn first_published_row() {
    let row = &golden_rows()[0];
    assert_eq!((row.table.as_str(), row.no, row.k_power), ("u1v1_d1d1", 1, -3));
    assert_eq!(row.value, RatFun::constant(rat(1, 8)));
}
