//! Exact algebraic analysis of the "one n-cycle, then random transpositions"
//! shuffle on a deck of n cards, together with the representation theory it
//! rests on.
//!
//! * [`exactmath`] -- arbitrary-precision integers and rationals, binomials,
//!   Stirling set numbers, Bell numbers.
//! * [`partitions`] -- integer partitions as both irreducible-representation
//!   labels and cycle types: enumeration, conjugation, hook-length
//!   dimensions, hook classification, class sizes.
//! * [`characters`] -- exact symmetric-group characters: the
//!   Murnaghan-Nakayama rim-hook recursion, full cached character tables,
//!   the Frobenius transposition closed form, the n-cycle hook rule.
//! * [`tensor`] -- multiplicities of irreducibles in tensor powers of the
//!   defining and standard representations, closed form and independent
//!   character-inner-product oracle side by side.
//! * [`mixing`] -- the chain's exact law on conjugacy classes by Fourier
//!   inversion, total variation against the parity-matched uniform coset,
//!   spectral upper bounds, the derangement lower bound, and fixed-point
//!   moments (exact and Poisson).
//! * [`simulate`] -- seeded, reproducible Monte Carlo for statistical
//!   cross-checks and for deck sizes past the exact ceiling.
//!
//! Everything except the two documented reporting boundaries (closed-form
//! asymptotics and the final square root of a spectral bound) is exact
//! rational arithmetic, so equality assertions in the test suites are
//! bit-exact, not tolerance-based.

pub mod characters;
pub mod error;
pub mod exactmath;
pub mod mixing;
pub mod partitions;
pub mod simulate;
pub mod tensor;

pub use error::Error;
