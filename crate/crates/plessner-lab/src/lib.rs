//! Numerics for the boundary behaviour of holomorphic functions on the unit
//! disc and harmonic functions on the upper halfplane.
//!
//! The crate computes weighted arc lengths of level-curve preimages inside
//! truncated Stolz regions, spherical and Dirichlet energy integrals, and the
//! co-area identity tying the two together, and it classifies boundary points
//! by divergence profiles of truncated level-set functionals. Everything is
//! deterministic: identical inputs produce bit-identical outputs at any worker
//! count.

pub mod config;
pub mod corpus;
pub mod dichotomy;
pub mod error;
pub mod geometry;
pub mod levelset;
pub mod parallel;
pub mod quadrature;
pub mod rng;
pub mod runner;

pub use error::{Error, Result};
