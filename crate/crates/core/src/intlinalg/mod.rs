//! Exact integer linear algebra: Smith normal form and cokernels of integer
//! matrices. No floating point is used anywhere.

mod cokernel;
mod matrix;
mod snf;

pub use cokernel::{cokernel, cokernel_from_snf, Cokernel};
pub use matrix::{IntMatrix, Matrix};
pub use snf::{smith_normal_form, smith_normal_form_i64, Overflow, SnfResult, SnfScalar};
