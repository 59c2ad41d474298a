//! Exact linear algebra over the rationals and the integers.
//!
//! Everything here is dense and arbitrary precision. Matrices are small
//! (a few dozen columns), so the algorithms favour determinism and
//! canonical output over speed.

mod elim;
mod error;
mod lattice;
mod lp;
mod mat;

pub use elim::{rank, rank_int, solve_linear};
pub use error::LaError;
pub use lattice::{
    hnf, in_lattice, integer_kernel, saturate, snf, solve_integral, sublattice_index, Index,
    SnfResult,
};
pub use lp::{lp_solve, Cmp, LpProblem, LpResult, LpStatus, Sense};
pub use mat::{int, rat, IntMat, IntVec, Rat, RatMat, RatVec};
