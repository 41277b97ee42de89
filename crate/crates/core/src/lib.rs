//! Invariant distances and metrics on the generalized Neil parabolas
//! `A_{m,n} = {(z, w) in D^2 : z^m = w^n}`, with closed forms and independent
//! numerical oracles to check them against.

// `!(x > 0.0)` is used on purpose to reject NaN along with nonpositive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closed_forms;
pub mod cross;
pub mod disc;
pub mod error;
pub mod parabola;
pub mod schur;
pub mod verify;

pub use closed_forms::{Branch, BranchedValue};
pub use disc::DiscPoint;
pub use error::{Error, Result};
pub use parabola::{ParabolaParams, ParabolaPoint, Tangent};
