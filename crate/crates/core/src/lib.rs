//! Finite-alphabet information-theoretic bounds.
//!
//! This crate computes exact list-decoding error probabilities and the
//! divergence-based lower bounds on them, plus Campbell-style bounds on
//! uniquely-decodable source codes, over finite probability mass functions.
//!
//! The pieces:
//!
//! - [`prob`] — pmf / joint-pmf / kernel containers with validation,
//!   marginalization, conditioning, and the MAP error probability.
//! - [`divergence`] — f-divergences (KL, total variation, chi-squared,
//!   `E_gamma`), binary KL, Shannon / Rényi / conditional entropies.
//! - [`majorization`] — majorization tests, constructive doubly-stochastic
//!   witnesses, and the extremal clustering pmf with its exhaustive oracle.
//! - [`list_decoding`] — fixed- and variable-size list rules, exact error
//!   probabilities, and every lower bound: the generalized Fano inequality
//!   for f-divergences, its binary-KL form, the curvature-refined form, the
//!   variable-list entropy bound, and the `E_gamma` bound with its equality
//!   certificate.
//! - [`source_coding`] — Kraft sums, D-ary Huffman, tilted code lengths,
//!   cumulant generating functions of codeword lengths, and the clustering
//!   gap report.
//! - [`sampling`] / [`fuzz`] — seeded random-instance generators and the
//!   deterministic invariant-checking campaign built on them.
//! - [`fileio`] — JSON schemas for pmfs, joints, rules, cluster maps and
//!   code specs (rational entries accepted as `[num, den]` pairs).
//!
//! All internal logarithms are natural; unit conversion (bits, base-D)
//! happens at presentation boundaries only.

#![forbid(unsafe_code)]

pub mod divergence;
mod error;
mod ext;
pub mod fileio;
pub mod fuzz;
pub mod list_decoding;
pub mod majorization;
pub mod prob;
pub mod sampling;
pub mod source_coding;
pub mod worked_example;

pub use error::{Error, Result};
pub use ext::ExtReal;

/// Default tolerance for accepting a raw mass vector as a pmf.
pub const DEFAULT_PMF_TOLERANCE: f64 = 1e-9;
