//! Exact orthogonal polynomial systems and their differential operator
//! representations.
//!
//! Everything here works over exact fields ([`Rational`] and
//! [`GaussianRational`]); there is no floating point in this crate. The crate
//! is `no_std` and only needs `alloc`.
//!
//! - [`field`]: exact scalars and binomial coefficients.
//! - [`poly`]: dense univariate polynomials, Taylor shifts.
//! - [`diffop`]: operators `Σ p_k(x)/k! D^k`, extraction from images, and
//!   exponential-form coefficient sequences.
//! - [`opsfam`]: three-term recurrences, Hermite and Laguerre families,
//!   the positive-definiteness check.
//! - [`classify`]: decides whether a constant-coefficient operator induces an
//!   orthogonal system and recovers its parameters.
//! - [`laguerreop`]: the closed-form operator for the standard Laguerre
//!   transform.
//! - [`rootcheck`]: Sturm sequences, real-root counting and interlacing.
#![no_std]

extern crate alloc;

pub mod classify;
pub mod diffop;
mod error;
pub mod field;
pub mod laguerreop;
pub mod opsfam;
pub mod poly;
pub mod rootcheck;

pub use crate::classify::{ClassifyResult, NotOpsReason};
pub use crate::diffop::{DiffOp, ExpOpParams, GammaSeq};
pub use crate::error::{Error, Result};
pub use crate::field::{binom, gen_binom, Field, GaussianRational, Rational};
pub use crate::opsfam::{GeneralTtr, MonicTtr, TtrSpec};
pub use crate::poly::Poly;
pub use crate::rootcheck::RootReport;

/// Outcome of an identity check over a finite range of indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// The identity held at every checked index.
    Holds,
    /// First index at which the identity failed.
    FailsAt(usize),
}

impl Check {
    pub fn holds(self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(self) -> Option<usize> {
        match self {
            Check::Holds => None,
            Check::FailsAt(n) => Some(n),
        }
    }
}
