//! Counting procedures over finite sets with indiscernibility, and the
//! rough-set measures built on top of them.
//!
//! The crate is organised around an [`space::ApproximationSpace`]: a finite
//! ordered universe together with a binary relation read as weak
//! indiscernibility. On top of that sit
//!
//! * [`counting`] — the four dialectical counting procedures (IPC, HPC,
//!   HPPC, IPPC) producing token sequences along a counting order,
//! * [`granules`] — recovery of granules and definite sets from count data,
//! * [`measures`] — positive regions, dependency and consistency degrees and
//!   their granular (vector-valued) refinements, all in exact rationals,
//! * [`countability`] — IPPC/HPPC countability decisions and order-fraction
//!   indices, exact by enumeration or estimated by seeded sampling,
//! * [`cipca`] — the quotient of all permutations by IPC-signature equality
//!   with its partial composition operation.
//!
//! Everything is exact: measures are `Ratio<i64>`, counts are integer
//! tokens, and all operations are pure functions over immutable inputs.
//!
//! The crate is `no_std` (with `alloc`); file formats and the CLI live in
//! the companion `roughcount-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cipca;
pub mod countability;
pub mod counting;
pub mod error;
pub mod fixtures;
pub mod granules;
pub mod measures;
pub mod perm;
pub mod space;

pub use error::{Error, Result};


/// Exact rational used by every measure in the crate.
pub type Rational = num_rational::Ratio<i64>;
