//! One-sided bounds for Hecke eigenvalues of GL(2) cuspidal representations.
//!
//! * [`repring`]: Clebsch–Gordan algebra of symmetric powers and character evaluation.
//! * [`poles`]: pole orders at s = 1 of Rankin–Selberg and standard L-functions.
//! * [`bounds`]: the Hölder/min-max arguments turning pole orders into constants.
//! * [`dirichlet`]: truncated Dirichlet sums and density diagnostics over datasets.
//! * [`datasource`]: elliptic-curve, Ramanujan τ and Sato–Tate datasets, CSV I/O.
//! * [`cli`]: the `hecke` command line front end.

pub mod assumption;
pub mod bounds;
pub mod cli;
pub mod datasource;
pub mod dirichlet;
pub mod error;
pub mod poles;
pub mod repring;

pub use assumption::{RepType, TypeAssumption};
pub use error::{Error, Result};
