//! Exact computational kernel for tropical curves and their Hodge-theoretic
//! invariants.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point anywhere. The crate is `no_std` (with `alloc`) so the
//! algorithmic core stays free of IO concerns; serialization, schemas and
//! the command line live in the companion `tropcycle-cli` crate.
//!
//! Module map:
//!
//! * [`arith`] — rationals and the min-plus semiring scalar type.
//! * [`poly`] — tropical polynomials, Newton polytopes, corner-locus
//!   hypersurfaces, valuations of Puiseux points, Newton polygons.
//! * [`complex`] — weighted rational polyhedral complexes: balancing,
//!   divisors of tropical regular functions, fan-structure checks.
//! * [`curve`] — metric graphs: divisors, piecewise-linear functions,
//!   linear equivalence, cellular Hodge numbers, balanced maps.
//! * [`jacobian`] — cycle bases, period matrices, Abel–Jacobi maps,
//!   the monodromy pairing.
//! * [`vhs`] — families of metric graphs over rational cones: the Hodge
//!   bundle, Gauss–Manin derivatives, normal functions and their
//!   infinitesimal invariants, Künneth projector calculus.
//! * [`taut`] — exact power series and the FZ-relation machinery.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod arith;
pub mod complex;
pub mod curve;
pub mod jacobian;
pub mod poly;
pub mod taut;
pub mod vhs;

pub use arith::{Rat, TropNum};
