//! Exact q-series arithmetic and mechanical re-verification of partition
//! rank inequalities modulo 10.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`]: truncated Laurent series over the rationals.
//! * [`qproducts`]: Pochhammer symbols, `J_b`, `J_{a,b}`, `L_{a,b}` and
//!   bilateral theta sums.
//! * [`partitions`]: the independent oracle. Partitions are enumerated (or
//!   counted by dynamic programming) and their Dyson and M₂ ranks tabulated
//!   without using any q-series identity.
//! * [`lambert`]: bilateral Lambert-type sums, their split into unilateral
//!   pieces, solution counting and the closed-form coefficient bounds.
//! * [`proofcheck`]: per-inequality pipelines that rebuild every
//!   computational step and compare against the oracle.
//! * [`cli`]: the `qrank` command line front end and its JSON report format.

pub mod cli;
pub mod error;
pub mod lambert;
pub mod partitions;
pub mod proofcheck;
pub mod qproducts;
pub mod series;
mod target;

pub use error::{Error, Result};
pub use series::{Mismatch, Series};
pub use target::{Identity, Inequality, RankDifference, RankKind, Target};
