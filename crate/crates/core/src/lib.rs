//! Torus quotients of Schubert varieties in Grassmannians and flag varieties.

// matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod action;
pub mod cli;
pub mod error;
pub mod flag;
pub mod invariants;
pub mod lattice;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod report;
pub mod schubert;
pub mod strat;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
