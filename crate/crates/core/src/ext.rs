use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

use serde::{Serialize, Serializer};

/// A real number extended with `+inf`.
///
/// KL-type divergences genuinely reach `+inf` on zero-mass mismatches, so
/// infinity is a first-class value here and propagates through sums and
/// comparisons instead of turning into NaN arithmetic downstream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinite,
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal::Finite(0.0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtReal::Infinite)
    }

    /// The finite value, or `f64::INFINITY`.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtReal::Finite(x) => x,
            ExtReal::Infinite => f64::INFINITY,
        }
    }

    /// The finite value, or `None`.
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(x) => Some(x),
            ExtReal::Infinite => None,
        }
    }

    /// `self >= other - tol`, with `+inf >= +inf` holding.
    pub fn ge_within(self, other: ExtReal, tol: f64) -> bool {
        match (self, other) {
            (ExtReal::Infinite, _) => true,
            (ExtReal::Finite(_), ExtReal::Infinite) => false,
            (ExtReal::Finite(a), ExtReal::Finite(b)) => a >= b - tol,
        }
    }

    /// `self <= other + tol`.
    pub fn le_within(self, other: ExtReal, tol: f64) -> bool {
        other.ge_within(self, tol)
    }

    /// Multiply by a non-negative finite scalar; `0 * inf` is `0` here,
    /// matching the `0 * f(0/0)` convention of f-divergence sums.
    pub fn scale(self, c: f64) -> ExtReal {
        debug_assert!(c >= 0.0 && c.is_finite());
        match self {
            _ if c == 0.0 => ExtReal::Finite(0.0),
            ExtReal::Finite(x) => ExtReal::Finite(c * x),
            ExtReal::Infinite => ExtReal::Infinite,
        }
    }
}

impl From<f64> for ExtReal {
    fn from(x: f64) -> Self {
        if x.is_infinite() && x > 0.0 {
            ExtReal::Infinite
        } else {
            ExtReal::Finite(x)
        }
    }
}

impl Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: ExtReal) -> ExtReal {
        match (self, rhs) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a + b),
            _ => ExtReal::Infinite,
        }
    }
}

impl AddAssign for ExtReal {
    fn add_assign(&mut self, rhs: ExtReal) {
        *self = *self + rhs;
    }
}

impl Sum for ExtReal {
    fn sum<I: Iterator<Item = ExtReal>>(iter: I) -> ExtReal {
        iter.fold(ExtReal::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(x) => write!(f, "{x}"),
            ExtReal::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtReal::Finite(x) => serializer.serialize_f64(*x),
            ExtReal::Infinite => serializer.serialize_str("inf"),
        }
    }
}
