//! Wodzicki residue of degree −2 symbols: angular reduction, the
//! rearrangement integrals `F(s; m, n, β, a, b)` in closed form, slot
//! transposition, grouping with exact verdicts, and table emission.

mod group;
mod integral;
mod quadrature;
mod reduce;
mod tables;

pub use group::{group_and_sum, GroupSum};
pub use integral::{assemble_f, beta_formula_j, closed_form_j, IntegralKey, Normalization};
pub use quadrature::quadrature_oracle;
pub use reduce::{angular_reduce, canonicalize, reduce_symbol, transpose_slots, word_label, ResidueTerm, SlotPattern};
pub use tables::{build_table, pi_value_latex, pi_value_text, six_tables, tables_latex, tables_markdown, Table, TableRow, TableSpec};

use thiserror::Error;

/// Errors raised by the residue engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("residue terms must have degree -2, found {0}")]
    WrongDegree(i64),
    #[error("residue terms must be traced (identity sigma component)")]
    NotTraced,
    #[error("traced coefficient is not real")]
    ComplexCoefficient,
    #[error("{0} modular slots in one word; at most two are supported")]
    TooManySlots(usize),
    #[error("unsupported slot pattern {0}")]
    UnsupportedPattern(String),
    #[error("homogeneity violated: {key:?} with alpha = {alpha}")]
    Homogeneity { key: IntegralKey, alpha: u32 },
    #[error("divergent integral for (beta, m, n) = ({beta}, {m}, {n})")]
    Divergent { beta: u32, m: u32, n: u32 },
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("group {word} / {slots} mixes k powers {k_powers:?}")]
    MixedKPower { word: String, slots: String, k_powers: (i64, i64) },
}
