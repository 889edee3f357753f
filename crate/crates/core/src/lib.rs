//! Exact arithmetic in the algebra of one-sided inverses `S_n`, the algebra of
//! polynomial integro-differential operators `I_1` and the Jacobian algebra
//! `A_1`, together with decidable regularity tests, localization maps and
//! bounded Ore-condition checks.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod intdiff;
pub mod jacobian;
pub mod linalg;
pub mod onesided;
pub mod orekit;
pub mod s1reg;

pub use error::{Error, Result};
