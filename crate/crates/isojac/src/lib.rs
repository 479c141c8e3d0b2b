//! Exact-arithmetic constructions of pairs of geometrically non-isomorphic
//! curves with isomorphic unpolarized Jacobians, and machine-checkable
//! certificates for them: Igusa-invariant distinctness, Galois conditions,
//! finite-field Frobenius data, and absolute-simplicity verdicts.

pub mod algebra;
pub mod cert;
pub mod cli;
pub mod curves;
pub mod error;
pub mod families;
pub mod ffverify;
pub mod genus3;
pub mod igusa;
pub mod reproduce;
pub mod richelot;
pub mod surface;

pub use error::{AlgebraError, CurveError};
