//! Exact rational linear algebra and the linear-programming kernel on
//! which every geometric decision in this crate rests.

mod linalg;
mod lp;

pub use linalg::{barycenter, nullspace, rank_of, rref, span_basis, Matrix, Rref, Vector};
pub use lp::{lineality_space, lp_solve, strict_feasible, LinRow, LinearSystem, LpOutcome};
