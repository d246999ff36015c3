//! Pseudodifferential calculus on the symbol algebra: composition,
//! parametrices, the Dirac operator `D_k`, one-forms and `u{D_k, v}`.

pub mod commutative;
mod compose;
mod dirac;
mod oneform;

pub use compose::{compose, parametrix};
pub use dirac::{b_minus_1, dirac_squared, dirac_symbol, dirac_symbol_with, inverse_dirac, inverse_dirac_squared, DiracVariant};
pub use oneform::{anticommutator_with_dirac, anticommutator_with_dirac_for, one_form_product, OneForm};

use crate::algebra::AlgebraError;
use thiserror::Error;

/// Errors raised by the pseudodifferential layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PsidoError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the leading symbol times the proposed inverse is not the identity")]
    NotInvertible,
    #[error("empty product of one-forms")]
    EmptyProduct,
    #[error("an odd product of one-forms acquired an identity or sigma^3 component")]
    NotOffDiagonal,
    #[error("parametrix depth must be at least 1")]
    BadDepth,
}
