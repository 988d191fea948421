//! The arc model of the n-cluster category of type A∞.
//!
//! Indecomposable objects are n-admissible arcs `(t, u)` of the ∞-gon. This
//! crate implements the functors acting on them, the AR quiver, (n+2)-angulation
//! checks on finite windows, and exact Grothendieck group presentations built
//! from AR-induced (n+3)-angle relations, reduced with an integer Smith normal
//! form.
//!
//! ```
//! use ncluster::arc_model::CategoryParams;
//! use ncluster::k0::verify_theorem;
//!
//! let report = verify_theorem(CategoryParams::new(3).unwrap(), 20).unwrap();
//! assert!(report.passed);
//! assert_eq!(report.summary, "free_rank=1, torsion=[], classes alternate");
//! ```

pub mod angulation;
pub mod ar_quiver;
pub mod arc_model;
pub mod cli;
pub mod exec;
pub mod intlinalg;
pub mod json;
pub mod k0;
pub mod render;

pub use arc_model::{Arc, CategoryParams, Window};
pub use exec::Execution;
