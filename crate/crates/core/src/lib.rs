//! Exact computer algebra for the quantum 3-sphere `O(S^3_pq)`, its
//! `O(U(1))`-coaction and the principal fibration over `O(S^2_pq)`, together
//! with a truncated-operator numeric oracle.
//!
//! The symbolic layer works over [`ParamScalar`], the field of rational
//! functions in the deformation parameters `p` and `q`. Elements of
//! `O(S^3_pq)` are stored in the basis `a_mu (1-aa*)^m (1-bb*)^n b_nu` with
//! `m n = 0` (see [`BasisMonomial`]).

pub mod chern;
pub mod disc;
mod error;
pub mod galois;
pub mod gluing;
pub mod hopf;
pub mod numrep;
pub mod s3core;
pub mod sample;
pub mod scalars;

pub use error::{AlgebraError, ParseError};
pub use s3core::{AlgElement, BasisMonomial, FreeWord, Generator};
pub use scalars::{qbinomial, Param, ParamScalar};
