//! A built-in 5x2 reference instance with exact rational masses.
//!
//! The joint pmf below has closed-form conditional entropy
//! `H(X|Y) = 5/2 - (1/4) log2(3)` bits, a variable-size list rule whose
//! error probability is exactly 1/4, and an `E_gamma` lower bound that is
//! tight at `gamma = 5/4`. The CLI `example` subcommand and the acceptance
//! suite both evaluate every bound on it and compare against the reference
//! values here.

use crate::list_decoding::VariableListRule;
use crate::prob::JointPMF;

/// The reference joint pmf over `X = {0..4}`, `Y = {0, 1}`.
pub fn joint() -> JointPMF {
    let mass = vec![
        vec![1.0 / 8.0, 1.0 / 24.0],
        vec![1.0 / 8.0, 1.0 / 24.0],
        vec![1.0 / 8.0, 1.0 / 24.0],
        vec![1.0 / 16.0, 3.0 / 16.0],
        vec![1.0 / 16.0, 3.0 / 16.0],
    ];
    JointPMF::new(
        (0..5).map(|i| i.to_string()).collect(),
        (0..2).map(|i| i.to_string()).collect(),
        mass,
    )
    .expect("reference joint is valid")
}

/// The reference list rule: `L(0) = {0,1,2}`, `L(1) = {3,4}`.
pub fn rule() -> VariableListRule {
    VariableListRule::new(vec![vec![0, 1, 2], vec![3, 4]], 5).expect("reference rule is valid")
}

/// `H(X|Y)` of [`joint`] in bits: `5/2 - (1/4) log2(3)`.
pub fn conditional_entropy_bits() -> f64 {
    2.5 - 0.25 * 3.0_f64.log2()
}

/// Exact list decoding error probability of [`rule`] on [`joint`].
pub const ERROR_PROB: f64 = 0.25;

/// The `gamma` at which the `E_gamma` lower bound meets [`ERROR_PROB`].
pub const TIGHT_GAMMA: f64 = 1.25;

/// Two-level conditional heights certified by the equality check.
pub const ALPHA: [f64; 2] = [0.25, 0.375];

/// Variable-list entropy bound (general form), rounded reference value.
pub const AK_GENERAL: f64 = 0.1206;

/// Variable-list entropy bound using only the maximum list size `N = 3`.
pub const AK_MAXLIST: f64 = 0.0939;
