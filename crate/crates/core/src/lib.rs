//! Exact computation of correlation tables as Molien sequences.
//!
//! Finite subgroups of `U(n)` — rotation point groups and their double
//! groups in particular — split the degree-`n` levels of an isotropic
//! oscillator into irreducible pieces. The multiplicities (`f`-numbers)
//! form correlation tables whose columns are coefficient sequences of
//! Molien generating functions. This crate evaluates those generating
//! functions exactly over cyclotomic fields and independently verifies
//! every entry with brute-force projector traces and a closed-form
//! rotational character formula.
//!
//! Module map:
//!
//! * [`algebra`] — cyclotomic scalars, matrices, polynomials, rational
//!   functions, truncated series;
//! * [`groups`] — group closure, conjugacy classes, character tables,
//!   the curated catalog, double-cover verification and numeric lifting;
//! * [`molien`] — Molien series, single- and multi-graded correlation
//!   tables, the analytic `SO(3) ⊃ D_inf` table;
//! * [`oracle`] — explicit symmetric powers, projectors, trace identities
//!   and the rotational character cross-check;
//! * [`basis`] — the labeled oscillator eigenbasis for the binary
//!   triangular-dihedral group, with covariance checks;
//! * [`oeis`] — offline matching of table columns against an OEIS
//!   `stripped` snapshot;
//! * [`verify`] — the combined verification report used by the CLI.

pub mod algebra;
pub mod basis;
pub mod error;
pub mod groups;
pub mod halfint;
pub mod molien;
pub mod oeis;
pub mod oracle;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use scalar::Scalar;

/// Concrete instantiations of the generic algebra at the exact field.
pub type Cyclo = algebra::Cyclotomic;
/// Matrix over the exact cyclotomic field.
pub type CycloMatrix = algebra::Matrix<Cyclo>;
/// Polynomial over the exact cyclotomic field.
pub type CycloPoly = algebra::Polynomial<Cyclo>;
/// Rational function over the exact cyclotomic field.
pub type CycloRatFun = algebra::RationalFunction<Cyclo>;
/// Power series over the exact cyclotomic field.
pub type CycloSeries = algebra::PowerSeries<Cyclo>;

/// Floating-point shadow types for numeric cross-checks.
pub type ShadowMatrix = algebra::Matrix<num_complex::Complex64>;
/// Floating-point shadow of a polynomial.
pub type ShadowPoly = algebra::Polynomial<num_complex::Complex64>;
