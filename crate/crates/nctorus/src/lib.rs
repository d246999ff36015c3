//! Exact symbolic engine for the asymmetric noncommutative two-torus.

pub mod arith;
pub mod algebra;
pub mod psido;
pub mod residue;
pub mod functionals;
pub mod verify;
pub mod cli;
