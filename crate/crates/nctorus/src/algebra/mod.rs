//! The graded noncommutative algebra of symbols: generators, the Pauli
//! basis, canonical words, terms and symbols with the derivations `δⱼ` and
//! `∂_{ξⱼ}`, a printer/parser for the linear syntax, and an exact zero-test
//! modulo the `b₀` relation.

mod generator;
pub mod lift;
pub mod parse;
pub mod print;
mod sigma;
mod symbol;
mod word;

pub use generator::{Coeff, GenClass, Generator};
pub use parse::{parse_symbol, parse_terms};
pub use sigma::SigmaBasis;
pub use symbol::{homogeneous_part, term_multiply, NcSymbol, NcTerm, TermKey};
pub use word::{b0_power, block_form, commutative_normalize, word_normalize, BlockForm, Word};

use thiserror::Error;

/// Errors raised by the symbol algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("third derivatives of k are outside the supported model")]
    ThirdDerivative,
    #[error("cannot parse {input:?}: {message}")]
    Parse { input: String, message: String },
}
