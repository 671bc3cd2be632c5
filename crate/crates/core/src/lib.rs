//! Exact machine verification of supercongruences for sums of `s_k(x)^2`,
//! the Rodriguez-Villegas-Mortenson congruences they rest on, the binomial
//! identities used along the way, and the integer-valuedness of
//! `(1/n) sum ε^k (2k+1) d_k(x)^m s_k(x)^m`.
//!
//! All arithmetic is over exact rationals; congruences modulo `p^k` are
//! decided by `p`-adic valuation of the difference.

pub mod arith;
pub mod check;
pub mod congruences;
pub mod error;
pub mod identities;
pub mod integrality;
pub mod poly;
pub mod report;
pub mod sequences;
pub mod sweep;

pub use arith::{PAdicContext, Rat, Valuation};
pub use check::{CheckResult, Param, Status, Witness};
pub use error::{Error, Result};
pub use report::{Format, RunReport, Summary};
