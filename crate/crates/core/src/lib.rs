//! Steinitz numbers, the fg-sets they describe, and maximal subrings of
//! absolutely algebraic fields, with a brute-force finite ring oracle to check
//! the predictions against.
//!
//! Start with [`FieldDescriptor`]: a characteristic plus a
//! [`SupernaturalNumber`] naming a subfield of the algebraic closure of `F_p`.

pub mod affine;
pub mod cli;
pub mod error;
pub mod fgset;
pub mod field;
pub mod finring;
pub mod primes;
pub mod suites;
pub mod supernat;
pub mod syntax;

pub use affine::{AffineDescriptor, BaseField, Generator, Verdict};
pub use error::{Error, Result};
pub use fgset::{ExtendedCount, FgSet, PrimeSet};
pub use field::{ChainReport, Embedding, FieldDescriptor};
pub use finring::{ElementSet, FiniteRing, RingBounds};
pub use supernat::{Exponent, SupernaturalNumber, Universe};
