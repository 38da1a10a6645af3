//! p-adic L-invariants attached to biquadratic CM configurations.
//!
//! The crate computes Iwasawa logarithms of global units and p-units, the
//! Kubota–Leopoldt series and its derivative at trivial zeros, q-expansions of
//! theta series of class group characters together with their Hecke action, and
//! exact models of truncated local Hecke rings built as fiber products.

pub mod cli;
pub mod fields;
pub mod lfunctions;
pub mod linvariants;
pub mod localalg;
pub mod padic;
pub mod thetaforms;
