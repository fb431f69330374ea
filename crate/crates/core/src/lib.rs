//! Exact modular data and fusion rings for affine vertex algebras at
//! integer and admissible levels, and for rational principal W-algebras.
//!
//! All S-matrix data lives in cyclotomic fields ([`CycloNum`]) and every
//! identity is checked by exact equality.

#![allow(clippy::needless_range_loop)]

pub mod admissible;
pub mod cache;
pub mod coset;
pub mod cyclo;
pub mod error;
pub mod liealg;
pub mod linalg;
pub mod report;
pub mod walg;
pub mod wzw;

pub use admissible::AdmissibleLevel;
pub use cyclo::CycloNum;
pub use error::{Error, Result};
pub use liealg::{build_root_system, Family, Limits, RootSystem, Weight};
pub use report::{Check, Report};
pub use walg::{WLabel, WLevel};
pub use wzw::FusionTable;
