//! Probability containers: pmfs, joint pmfs, and row-stochastic kernels.
//!
//! Everything here is immutable after construction and every operation is a
//! pure function, so values can be shared freely across threads. Raw inputs
//! are validated once (non-negativity, unit total mass within a tolerance,
//! observable columns) and renormalized, so downstream code never re-checks.

use crate::{Error, Result, DEFAULT_PMF_TOLERANCE};

/// A finite probability mass function over labeled atoms.
///
/// Invariants: every mass is `>= 0`, the total is within the construction
/// tolerance of 1 (then renormalized), labels are distinct and non-empty.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector {
    labels: Vec<String>,
    mass: Vec<f64>,
}

impl ProbVector {
    /// Validate and renormalize a raw mass vector with the default tolerance.
    pub fn new(labels: Vec<String>, mass: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(labels, mass, DEFAULT_PMF_TOLERANCE)
    }

    /// Validate and renormalize a raw mass vector.
    ///
    /// Accepts the vector when `|sum - 1| <= tol`, then divides by the sum so
    /// later totals are exact to machine precision. Zeros are preserved.
    pub fn with_tolerance(labels: Vec<String>, mass: Vec<f64>, tol: f64) -> Result<Self> {
        validate_labels(&labels)?;
        if labels.len() != mass.len() {
            return Err(Error::invalid_argument(format!(
                "{} labels but {} mass entries",
                labels.len(),
                mass.len()
            )));
        }
        if mass.is_empty() {
            return Err(Error::invalid_pmf("empty mass vector"));
        }
        for (i, &m) in mass.iter().enumerate() {
            if !m.is_finite() || m < 0.0 {
                return Err(Error::invalid_pmf(format!("mass[{i}] = {m}")));
            }
        }
        let sum: f64 = mass.iter().sum();
        if (sum - 1.0).abs() > tol {
            return Err(Error::invalid_pmf(format!(
                "total mass {sum} deviates from 1 by more than {tol}"
            )));
        }
        let mass = mass.into_iter().map(|m| m / sum).collect();
        Ok(ProbVector { labels, mass })
    }

    /// Validate a raw mass vector with auto-generated index labels `"0".."n-1"`.
    pub fn from_masses(mass: Vec<f64>, tol: f64) -> Result<Self> {
        let labels = index_labels(mass.len());
        Self::with_tolerance(labels, mass, tol)
    }

    /// Internal constructor that keeps the given masses verbatim.
    ///
    /// Used where entries must be carried through exactly (e.g. the extremal
    /// clustering pmf preserves the top entries of its source bit-for-bit).
    /// Still checks the pmf invariants.
    pub(crate) fn from_normalized(labels: Vec<String>, mass: Vec<f64>) -> Result<Self> {
        validate_labels(&labels)?;
        if labels.len() != mass.len() || mass.is_empty() {
            return Err(Error::invalid_pmf("label/mass shape mismatch"));
        }
        let sum: f64 = mass.iter().sum();
        if mass.iter().any(|&m| !m.is_finite() || m < 0.0) || (sum - 1.0).abs() > 1e-9 {
            return Err(Error::invalid_pmf("not a normalized mass vector"));
        }
        Ok(ProbVector { labels, mass })
    }

    /// The equiprobable pmf on `m` atoms, each with mass exactly `1/m`.
    pub fn uniform(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid_argument("uniform pmf needs at least one atom"));
        }
        Ok(ProbVector {
            labels: index_labels(m),
            mass: vec![1.0 / m as f64; m],
        })
    }

    /// The equiprobable pmf over the given labels.
    pub fn uniform_over(labels: Vec<String>) -> Result<Self> {
        validate_labels(&labels)?;
        if labels.is_empty() {
            return Err(Error::invalid_argument("uniform pmf needs at least one atom"));
        }
        let m = labels.len();
        Ok(ProbVector {
            labels,
            mass: vec![1.0 / m as f64; m],
        })
    }

    pub fn len(&self) -> usize {
        self.mass.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn masses(&self) -> &[f64] {
        &self.mass
    }

    pub fn mass_of(&self, i: usize) -> f64 {
        self.mass[i]
    }

    /// Masses sorted in non-increasing order.
    pub fn sorted_masses(&self) -> Vec<f64> {
        let mut s = self.mass.clone();
        s.sort_by(|a, b| b.total_cmp(a));
        s
    }

    pub fn same_atoms(&self, other: &ProbVector) -> bool {
        self.labels == other.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn validate_labels(labels: &[String]) -> Result<()> {
    for (i, a) in labels.iter().enumerate() {
        for b in labels.iter().skip(i + 1) {
            if a == b {
                return Err(Error::invalid_argument(format!("duplicate label {a:?}")));
            }
        }
    }
    Ok(())
}

/// A joint pmf over `X x Y`, stored row-major with one row per x-symbol.
///
/// Every column must carry positive mass: a y-symbol that can never be
/// observed has no conditional pmf, and nothing downstream wants one.
#[derive(Debug, Clone, PartialEq)]
pub struct JointPMF {
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    mass: Vec<Vec<f64>>,
}

impl JointPMF {
    pub fn new(x_labels: Vec<String>, y_labels: Vec<String>, mass: Vec<Vec<f64>>) -> Result<Self> {
        Self::with_tolerance(x_labels, y_labels, mass, DEFAULT_PMF_TOLERANCE)
    }

    pub fn with_tolerance(
        x_labels: Vec<String>,
        y_labels: Vec<String>,
        mass: Vec<Vec<f64>>,
        tol: f64,
    ) -> Result<Self> {
        validate_labels(&x_labels)?;
        validate_labels(&y_labels)?;
        let (m, ny) = (x_labels.len(), y_labels.len());
        if m == 0 || ny == 0 {
            return Err(Error::invalid_pmf("empty alphabet"));
        }
        if mass.len() != m || mass.iter().any(|row| row.len() != ny) {
            return Err(Error::invalid_argument(format!(
                "mass matrix must be {m} x {ny}"
            )));
        }
        let mut total = 0.0;
        for row in &mass {
            for &v in row {
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::invalid_pmf(format!("joint mass {v}")));
                }
                total += v;
            }
        }
        if (total - 1.0).abs() > tol {
            return Err(Error::invalid_pmf(format!(
                "total joint mass {total} deviates from 1 by more than {tol}"
            )));
        }
        for j in 0..ny {
            let col: f64 = mass.iter().map(|row| row[j]).sum();
            if col <= 0.0 {
                return Err(Error::invalid_pmf(format!(
                    "output symbol {:?} has zero mass",
                    y_labels[j]
                )));
            }
        }
        let mass = mass
            .into_iter()
            .map(|row| row.into_iter().map(|v| v / total).collect())
            .collect();
        Ok(JointPMF {
            x_labels,
            y_labels,
            mass,
        })
    }

    /// Number of x-symbols (the alphabet size `M`).
    pub fn num_x(&self) -> usize {
        self.x_labels.len()
    }

    pub fn num_y(&self) -> usize {
        self.y_labels.len()
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y_labels
    }

    pub fn mass(&self, x: usize, y: usize) -> f64 {
        self.mass[x][y]
    }

    /// Marginal pmf of Y (column sums).
    pub fn marginal_y(&self) -> ProbVector {
        let mass = (0..self.num_y())
            .map(|j| self.mass.iter().map(|row| row[j]).sum())
            .collect();
        ProbVector {
            labels: self.y_labels.clone(),
            mass,
        }
    }

    /// Marginal pmf of X (row sums).
    pub fn marginal_x(&self) -> ProbVector {
        let mass = self.mass.iter().map(|row| row.iter().sum()).collect();
        ProbVector {
            labels: self.x_labels.clone(),
            mass,
        }
    }

    /// Conditional pmf of X given `Y = y_labels[j]`.
    pub fn conditional_x_given(&self, j: usize) -> ProbVector {
        let py: f64 = self.mass.iter().map(|row| row[j]).sum();
        let mass = self.mass.iter().map(|row| row[j] / py).collect();
        ProbVector {
            labels: self.x_labels.clone(),
            mass,
        }
    }
}

/// A row-stochastic mapping: one pmf over a shared output alphabet per input
/// symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    input_labels: Vec<String>,
    rows: Vec<ProbVector>,
}

impl Kernel {
    pub fn new(input_labels: Vec<String>, rows: Vec<ProbVector>) -> Result<Self> {
        validate_labels(&input_labels)?;
        if input_labels.len() != rows.len() || rows.is_empty() {
            return Err(Error::invalid_argument("one row pmf per input symbol"));
        }
        for r in &rows[1..] {
            if !r.same_atoms(&rows[0]) {
                return Err(Error::invalid_argument(
                    "kernel rows must share one output alphabet",
                ));
            }
        }
        Ok(Kernel { input_labels, rows })
    }

    /// Build from a raw row-stochastic matrix; each row is validated as a pmf.
    pub fn from_matrix(
        input_labels: Vec<String>,
        output_labels: Vec<String>,
        matrix: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let rows = matrix
            .into_iter()
            .map(|row| ProbVector::new(output_labels.clone(), row))
            .collect::<Result<Vec<_>>>()?;
        Self::new(input_labels, rows)
    }

    pub fn num_inputs(&self) -> usize {
        self.rows.len()
    }

    pub fn input_labels(&self) -> &[String] {
        &self.input_labels
    }

    pub fn output_labels(&self) -> &[String] {
        self.rows[0].labels()
    }

    pub fn row(&self, i: usize) -> &ProbVector {
        &self.rows[i]
    }
}

/// Split a joint pmf into its marginals and the reverse conditional kernel
/// `y -> P(X | Y = y)`.
pub fn decompose(joint: &JointPMF) -> (ProbVector, ProbVector, Kernel) {
    let px = joint.marginal_x();
    let py = joint.marginal_y();
    let rows = (0..joint.num_y())
        .map(|j| joint.conditional_x_given(j))
        .collect();
    let kernel = Kernel {
        input_labels: joint.y_labels.clone(),
        rows,
    };
    (px, py, kernel)
}

/// Push a pmf through a row-stochastic kernel: `out = p * K`.
pub fn push_forward(p: &ProbVector, kernel: &Kernel) -> Result<ProbVector> {
    if p.labels() != kernel.input_labels() {
        return Err(Error::invalid_argument(
            "pmf atoms do not match kernel input alphabet",
        ));
    }
    let n_out = kernel.output_labels().len();
    let mut mass = vec![0.0; n_out];
    for (i, &pi) in p.masses().iter().enumerate() {
        for (j, &kij) in kernel.row(i).masses().iter().enumerate() {
            mass[j] += pi * kij;
        }
    }
    Ok(ProbVector {
        labels: kernel.output_labels().to_vec(),
        mass,
    })
}

/// Minimum error probability of guessing X from Y using a single output:
/// `1 - sum_y max_x P_XY(x, y)`, achieved by the maximum-posterior rule.
pub fn map_error(joint: &JointPMF) -> f64 {
    let covered: f64 = (0..joint.num_y())
        .map(|j| {
            (0..joint.num_x())
                .map(|i| joint.mass(i, j))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .sum();
    1.0 - covered
}
