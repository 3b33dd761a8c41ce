//! Exact-arithmetic toolkit for screening semisimple Lie algebra
//! representations for the weak-Berger property.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootsys`]: simple root systems in rational ambient coordinates;
//! - [`repweights`]: highest-weight modules, Freudenthal multiplicities,
//!   Weyl dimensions, duality and orthogonal/symplectic type;
//! - [`screens`]: the combinatorial weight-set predicates with replayable witnesses;
//! - [`bruteforce`]: explicit matrix representations and the exact solve for
//!   the space of cyclic maps `E → g`;
//! - [`classify`]: the sweeps over candidate representations and the final report.

pub mod bruteforce;
pub mod classify;
pub mod error;
pub mod linalg;
pub mod repweights;
pub mod rootsys;
pub mod screens;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, coroot_pairing, Family, RootSystem, WeightVector};
