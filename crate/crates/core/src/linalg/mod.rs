//! Exact linear algebra over `Z/m` and `F_q`, and a Hermitian eigensolver
//! for the complex irrep engine.

mod complex;
mod fq;
mod zmod;

pub use complex::{eigensplit_hermitian, eigensplit_hermitian_with_gap, CMatrix, EigenCluster, C64};
pub use fq::{nullspace_fq, FiniteField, MatrixFq, FIELD_SIZE_CAP};
pub(crate) use fq::poly_eval;
pub use zmod::{howell_form, solve_mod_m, MatrixModM, ModSolution};
