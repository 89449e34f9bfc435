//! f-divergences and entropies over finite pmfs.
//!
//! An f-divergence is `D_f(P || Q) = sum_x Q(x) f(P(x)/Q(x))` for convex `f`
//! with `f(1) = 0`, with the usual boundary conventions:
//!
//! - `P(x) = Q(x) = 0` contributes 0,
//! - `Q(x) = 0 < P(x)` contributes `P(x) * lim_{t->inf} f(t)/t`,
//! - `P(x) = 0 < Q(x)` contributes `Q(x) * lim_{t->0} f(t)`.
//!
//! The built-in generators are KL (`t ln t`), total variation (`|t-1|/2`),
//! chi-squared (`(t-1)^2`), and `E_gamma` (`max(t - gamma, 0)`). Each knows
//! its boundary limits and, where one exists in closed form, the infimum of
//! `f''` over an interval — the curvature floor consumed by the refined
//! list-decoding bound. All results are in nats.

use crate::prob::{JointPMF, ProbVector};
use crate::{Error, ExtReal, Result};

/// Tolerance for `f(1) = 0` and the midpoint convexity scan.
const GENERATOR_TOL: f64 = 1e-12;

/// A convex generator `f : (0, inf) -> R` with `f(1) = 0`.
pub struct FGenerator {
    name: String,
    eval: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    f_at_zero: ExtReal,
    slope_at_infinity: ExtReal,
    curvature_floor: Option<Box<dyn Fn(f64, f64) -> f64 + Send + Sync>>,
}

impl std::fmt::Debug for FGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FGenerator")
            .field("name", &self.name)
            .field("f_at_zero", &self.f_at_zero)
            .field("slope_at_infinity", &self.slope_at_infinity)
            .field("has_curvature_floor", &self.curvature_floor.is_some())
            .finish()
    }
}

impl FGenerator {
    /// Relative entropy generator `t ln t`.
    pub fn kl() -> Self {
        FGenerator {
            name: "kl".into(),
            eval: Box::new(|t| t * t.ln()),
            f_at_zero: ExtReal::Finite(0.0),
            slope_at_infinity: ExtReal::Infinite,
            // f'' = 1/t is decreasing, so the infimum over [a, b] is 1/b.
            curvature_floor: Some(Box::new(|_a, b| 1.0 / b)),
        }
    }

    /// Total variation generator `|t - 1| / 2`.
    pub fn tv() -> Self {
        FGenerator {
            name: "tv".into(),
            eval: Box::new(|t| 0.5 * (t - 1.0).abs()),
            f_at_zero: ExtReal::Finite(0.5),
            slope_at_infinity: ExtReal::Finite(0.5),
            curvature_floor: Some(Box::new(|_a, _b| 0.0)),
        }
    }

    /// Chi-squared generator `(t - 1)^2`.
    pub fn chi2() -> Self {
        FGenerator {
            name: "chi2".into(),
            eval: Box::new(|t| (t - 1.0) * (t - 1.0)),
            f_at_zero: ExtReal::Finite(1.0),
            slope_at_infinity: ExtReal::Infinite,
            curvature_floor: Some(Box::new(|_a, _b| 2.0)),
        }
    }

    /// `E_gamma` generator `max(t - gamma, 0)`, `gamma >= 1`.
    pub fn e_gamma(gamma: f64) -> Result<Self> {
        if !(gamma >= 1.0) {
            return Err(Error::invalid_argument(format!(
                "e_gamma generator needs gamma >= 1, got {gamma}"
            )));
        }
        Ok(FGenerator {
            name: format!("egamma:{gamma}"),
            eval: Box::new(move |t| (t - gamma).max(0.0)),
            f_at_zero: ExtReal::Finite(0.0),
            slope_at_infinity: ExtReal::Finite(1.0),
            curvature_floor: Some(Box::new(|_a, _b| 0.0)),
        })
    }

    /// A user-supplied generator, checked for `f(1) = 0` and midpoint
    /// convexity on a logarithmic grid over `[1e-6, 1e6]` before acceptance.
    /// Without a closed-form curvature floor the refined bound refuses to
    /// run rather than estimate one numerically.
    pub fn custom(
        name: impl Into<String>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f_at_zero: ExtReal,
        slope_at_infinity: ExtReal,
        curvature_floor: Option<Box<dyn Fn(f64, f64) -> f64 + Send + Sync>>,
    ) -> Result<Self> {
        let g = FGenerator {
            name: name.into(),
            eval: Box::new(eval),
            f_at_zero,
            slope_at_infinity,
            curvature_floor,
        };
        g.check_shape()?;
        Ok(g)
    }

    /// Parse a registry name: `kl`, `tv`, `chi2`, or `egamma:<gamma>`.
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "kl" => Ok(Self::kl()),
            "tv" => Ok(Self::tv()),
            "chi2" => Ok(Self::chi2()),
            _ => {
                if let Some(g) = name.strip_prefix("egamma:") {
                    let gamma: f64 = g
                        .parse()
                        .map_err(|_| Error::invalid_argument(format!("bad gamma in {name:?}")))?;
                    Self::e_gamma(gamma)
                } else {
                    Err(Error::invalid_argument(format!(
                        "unknown generator {name:?} (expected kl | tv | chi2 | egamma:<gamma>)"
                    )))
                }
            }
        }
    }

    /// The four built-in generators used by fuzz campaigns.
    pub fn registry() -> Vec<FGenerator> {
        vec![
            Self::kl(),
            Self::tv(),
            Self::chi2(),
            Self::e_gamma(1.5).expect("1.5 >= 1"),
        ]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Evaluate `f(t)` for `t > 0`.
    pub fn eval(&self, t: f64) -> f64 {
        debug_assert!(t > 0.0);
        (self.eval)(t)
    }

    /// Evaluate with the boundary convention at `t = 0`.
    pub fn eval_ext(&self, t: f64) -> ExtReal {
        if t == 0.0 {
            self.f_at_zero
        } else {
            ExtReal::Finite(self.eval(t))
        }
    }

    pub fn f_at_zero(&self) -> ExtReal {
        self.f_at_zero
    }

    pub fn slope_at_infinity(&self) -> ExtReal {
        self.slope_at_infinity
    }

    /// Infimum of `f''` over `[a, b] ∩ (0, inf)`, when known in closed form.
    pub fn curvature_floor(&self, a: f64, b: f64) -> Option<f64> {
        self.curvature_floor.as_ref().map(|f| f(a.max(0.0), b))
    }

    fn check_shape(&self) -> Result<()> {
        let one = self.eval(1.0);
        if one.abs() > GENERATOR_TOL {
            return Err(Error::invalid_argument(format!(
                "generator {:?} has f(1) = {one}, expected 0",
                self.name
            )));
        }
        // Midpoint convexity over all pairs of a log-spaced grid.
        let grid: Vec<f64> = (0..=48)
            .map(|i| 10f64.powf(-6.0 + 12.0 * i as f64 / 48.0))
            .collect();
        for (i, &a) in grid.iter().enumerate() {
            for &b in grid.iter().skip(i + 1) {
                let mid = self.eval(0.5 * (a + b));
                let chord = 0.5 * (self.eval(a) + self.eval(b));
                if mid > chord + GENERATOR_TOL + 1e-12 * chord.abs() {
                    return Err(Error::invalid_argument(format!(
                        "generator {:?} fails midpoint convexity at ({a}, {b})",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `D_f(P || Q)` over a shared atom set. May be `+inf`.
pub fn f_divergence(p: &ProbVector, q: &ProbVector, f: &FGenerator) -> Result<ExtReal> {
    if !p.same_atoms(q) {
        return Err(Error::invalid_argument(
            "f_divergence needs pmfs over the same atoms",
        ));
    }
    let mut total = ExtReal::ZERO;
    for (&pi, &qi) in p.masses().iter().zip(q.masses()) {
        total += f_term(pi, qi, f);
        if total.is_infinite() {
            return Ok(ExtReal::Infinite);
        }
    }
    Ok(total)
}

fn f_term(p: f64, q: f64, f: &FGenerator) -> ExtReal {
    if q == 0.0 {
        if p == 0.0 {
            ExtReal::ZERO
        } else {
            f.slope_at_infinity().scale(p)
        }
    } else if p == 0.0 {
        f.f_at_zero().scale(q)
    } else {
        ExtReal::Finite(q * f.eval(p / q))
    }
}

/// `E_gamma(P || Q) = sum_x max(P(x) - gamma Q(x), 0)` for `gamma >= 1`.
///
/// Computed directly from its definition; it coincides with
/// [`f_divergence`] under the `egamma` generator.
pub fn e_gamma(p: &ProbVector, q: &ProbVector, gamma: f64) -> Result<f64> {
    if !(gamma >= 1.0) {
        return Err(Error::invalid_argument(format!(
            "e_gamma needs gamma >= 1, got {gamma}"
        )));
    }
    if !p.same_atoms(q) {
        return Err(Error::invalid_argument(
            "e_gamma needs pmfs over the same atoms",
        ));
    }
    Ok(p.masses()
        .iter()
        .zip(q.masses())
        .map(|(&pi, &qi)| (pi - gamma * qi).max(0.0))
        .sum())
}

/// Binary relative entropy `d(p || q)` in nats, continuously extended.
pub fn binary_kl(p: f64, q: f64) -> Result<ExtReal> {
    check_unit_interval("p", p)?;
    check_unit_interval("q", q)?;
    let mut total = 0.0;
    for (a, b) in [(p, q), (1.0 - p, 1.0 - q)] {
        if a == 0.0 {
            continue;
        }
        if b == 0.0 {
            return Ok(ExtReal::Infinite);
        }
        total += a * (a / b).ln();
    }
    Ok(ExtReal::Finite(total))
}

/// Binary entropy `h(p)` in nats, with `0 ln 0 = 0`.
pub fn binary_entropy(p: f64) -> Result<f64> {
    check_unit_interval("p", p)?;
    let mut h = 0.0;
    for a in [p, 1.0 - p] {
        if a > 0.0 {
            h -= a * a.ln();
        }
    }
    Ok(h)
}

fn check_unit_interval(name: &str, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::invalid_argument(format!("{name} = {v} outside [0, 1]")));
    }
    Ok(())
}

/// Shannon entropy in nats.
pub fn shannon_entropy(p: &ProbVector) -> f64 {
    p.masses()
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln())
        .sum()
}

/// Rényi entropy `H_alpha` in nats; `alpha = 1` is Shannon entropy.
pub fn renyi_entropy(p: &ProbVector, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::invalid_argument(format!(
            "renyi_entropy needs alpha > 0, got {alpha}"
        )));
    }
    if alpha == 1.0 {
        return Ok(shannon_entropy(p));
    }
    let s: f64 = p
        .masses()
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x.powf(alpha))
        .sum();
    Ok(s.ln() / (1.0 - alpha))
}

/// Conditional entropy `H(X|Y)` of a joint pmf, in nats.
pub fn conditional_entropy(joint: &JointPMF) -> f64 {
    let py = joint.marginal_y();
    (0..joint.num_y())
        .map(|j| py.mass_of(j) * shannon_entropy(&joint.conditional_x_given(j)))
        .sum()
}

/// `E[ D_f(P_{X|Y}(.|Y) || U_M) ]`: the average divergence between the
/// posterior and the equiprobable pmf on the x-alphabet.
pub fn expected_div_to_uniform(joint: &JointPMF, f: &FGenerator) -> ExtReal {
    let m = joint.num_x();
    let uniform = ProbVector::uniform_over(joint.x_labels().to_vec()).expect("non-empty alphabet");
    let py = joint.marginal_y();
    let mut total = ExtReal::ZERO;
    for j in 0..joint.num_y() {
        let cond = joint.conditional_x_given(j);
        debug_assert_eq!(cond.len(), m);
        let d = f_divergence(&cond, &uniform, f).expect("shared atoms by construction");
        total += d.scale(py.mass_of(j));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worked_example;
    use std::f64::consts::LN_2;

    fn pmf(mass: &[f64]) -> ProbVector {
        ProbVector::from_masses(mass.to_vec(), 1e-9).unwrap()
    }

    #[test]
    fn registry_generators_vanish_at_one() {
        for f in FGenerator::registry() {
            assert!(f.eval(1.0).abs() < 1e-12, "{}", f.name());
        }
    }

    #[test]
    fn generator_parsing() {
        assert_eq!(FGenerator::from_name("kl").unwrap().name(), "kl");
        assert_eq!(FGenerator::from_name("egamma:1.5").unwrap().name(), "egamma:1.5");
        assert!(FGenerator::from_name("egamma:0.5").is_err());
        assert!(FGenerator::from_name("hellinger").is_err());
    }

    #[test]
    fn custom_generator_convexity_gate() {
        // Concave: rejected.
        let bad = FGenerator::custom(
            "sqrt-gap",
            |t| t.sqrt() - 1.0,
            ExtReal::Finite(-1.0),
            ExtReal::Finite(0.0),
            None,
        );
        assert!(bad.is_err());
        // Convex squared-distance: accepted.
        let ok = FGenerator::custom(
            "chi2-again",
            |t| (t - 1.0) * (t - 1.0),
            ExtReal::Finite(1.0),
            ExtReal::Infinite,
            None,
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn divergence_is_zero_on_equal_pmfs() {
        let p = pmf(&[0.2, 0.5, 0.3]);
        for f in FGenerator::registry() {
            let d = f_divergence(&p, &p, &f).unwrap().finite().unwrap();
            assert!(d.abs() < 1e-12, "{}: {d}", f.name());
        }
    }

    #[test]
    fn chi2_point_mass_vs_fair_coin() {
        let p = pmf(&[1.0, 0.0]);
        let q = pmf(&[0.5, 0.5]);
        let d = f_divergence(&p, &q, &FGenerator::chi2()).unwrap();
        assert!((d.finite().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kl_to_uniform_is_log_m_minus_entropy() {
        let p = pmf(&[0.05, 0.3, 0.15, 0.5]);
        let u = ProbVector::uniform_over(p.labels().to_vec()).unwrap();
        let d = f_divergence(&p, &u, &FGenerator::kl()).unwrap().finite().unwrap();
        let expect = 4.0_f64.ln() - shannon_entropy(&p);
        assert!((d - expect).abs() < 1e-12);
    }

    #[test]
    fn kl_infinite_on_support_mismatch() {
        let p = pmf(&[0.5, 0.5, 0.0]);
        let q = pmf(&[1.0, 0.0, 0.0]);
        assert!(f_divergence(&p, &q, &FGenerator::kl()).unwrap().is_infinite());
        // Other direction is finite: terms with p = 0 use f(0) = 0.
        assert!(f_divergence(&q, &p, &FGenerator::kl()).unwrap().is_finite());
    }

    #[test]
    fn e_gamma_matches_generator_and_tv() {
        let p = pmf(&[0.1, 0.6, 0.3]);
        let q = pmf(&[0.3, 0.3, 0.4]);
        for gamma in [1.0, 1.5, 2.5] {
            let direct = e_gamma(&p, &q, gamma).unwrap();
            let via_f = f_divergence(&p, &q, &FGenerator::e_gamma(gamma).unwrap())
                .unwrap()
                .finite()
                .unwrap();
            assert!((direct - via_f).abs() < 1e-14);
        }
        // E_1 is total variation.
        let tv: f64 = p
            .masses()
            .iter()
            .zip(q.masses())
            .map(|(a, b)| 0.5 * (a - b).abs())
            .sum();
        assert!((e_gamma(&p, &q, 1.0).unwrap() - tv).abs() < 1e-14);
        // P <= gamma Q everywhere kills every term.
        assert_eq!(e_gamma(&q, &q, 2.0).unwrap(), 0.0);
        assert!(e_gamma(&p, &q, 0.5).is_err());
    }

    #[test]
    fn binary_kl_values() {
        for q in [0.0, 0.3, 1.0] {
            assert_eq!(binary_kl(q, q).unwrap().finite().unwrap(), 0.0);
        }
        let d = binary_kl(0.25, 0.75).unwrap().finite().unwrap();
        assert!((d - 0.5 * 3.0_f64.ln()).abs() < 1e-12);
        assert!(binary_kl(0.5, 0.0).unwrap().is_infinite());
        assert!(binary_kl(0.5, 1.0).unwrap().is_infinite());
        assert!(binary_kl(-0.1, 0.5).is_err());
        assert!(binary_kl(0.5, 1.2).is_err());
    }

    #[test]
    fn binary_entropy_peak() {
        assert!((binary_entropy(0.5).unwrap() - LN_2).abs() < 1e-15);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
    }

    #[test]
    fn renyi_of_uniform_is_log_n() {
        for n in [1usize, 2, 7] {
            let u = ProbVector::uniform(n).unwrap();
            for alpha in [0.25, 0.5, 1.0, 2.0, 4.0] {
                let h = renyi_entropy(&u, alpha).unwrap();
                assert!((h - (n as f64).ln()).abs() < 1e-12, "n={n} alpha={alpha}");
            }
        }
    }

    #[test]
    fn renyi_half_on_skewed_pmf() {
        let p = pmf(&[0.5, 0.25, 0.25]);
        let h = renyi_entropy(&p, 0.5).unwrap();
        let s: f64 = p.masses().iter().map(|x| x.sqrt()).sum();
        assert!((h - 2.0 * s.ln()).abs() < 1e-12);
        assert!((h - 1.0695999934791407).abs() < 1e-12);
    }

    #[test]
    fn renyi_continuous_near_one() {
        let p = pmf(&[0.4, 0.35, 0.2, 0.05]);
        let h1 = renyi_entropy(&p, 1.0).unwrap();
        for alpha in [1.0 - 1e-6, 1.0 + 1e-6] {
            let h = renyi_entropy(&p, alpha).unwrap();
            assert!((h - h1).abs() < 1e-5, "alpha={alpha}");
        }
        assert!(renyi_entropy(&p, 0.0).is_err());
        assert!(renyi_entropy(&p, -1.0).is_err());
    }

    #[test]
    fn conditional_entropy_worked_example() {
        let j = worked_example::joint();
        let h_bits = conditional_entropy(&j) / LN_2;
        assert!((h_bits - worked_example::conditional_entropy_bits()).abs() < 1e-12);
        assert!((h_bits - 2.1038).abs() < 5e-4);
    }

    #[test]
    fn conditional_entropy_extremes() {
        // Independent: H(X|Y) = H(X).
        let px = pmf(&[0.2, 0.8]);
        let mass = px
            .masses()
            .iter()
            .map(|&a| vec![a * 0.5, a * 0.5])
            .collect();
        let j = JointPMF::new(
            px.labels().to_vec(),
            vec!["0".into(), "1".into()],
            mass,
        )
        .unwrap();
        assert!((conditional_entropy(&j) - shannon_entropy(&px)).abs() < 1e-12);

        // Deterministic X = g(Y): zero.
        let j = JointPMF::new(
            vec!["a".into(), "b".into()],
            vec!["0".into(), "1".into()],
            vec![vec![0.3, 0.0], vec![0.0, 0.7]],
        )
        .unwrap();
        assert!(conditional_entropy(&j).abs() < 1e-15);
    }

    #[test]
    fn expected_div_to_uniform_kl_identity() {
        let j = worked_example::joint();
        let lhs = expected_div_to_uniform(&j, &FGenerator::kl())
            .finite()
            .unwrap();
        let expect = 5.0_f64.ln() - conditional_entropy(&j);
        assert!((lhs - expect).abs() < 1e-12);
        assert!((lhs - 0.1512230332012645).abs() < 1e-12);
    }

    #[test]
    fn expected_div_vanishes_on_uniform_conditionals() {
        // X uniform independent of Y: every conditional is uniform.
        let m = 3;
        let mass = vec![vec![1.0 / 6.0; 2]; m];
        let j = JointPMF::new(
            (0..m).map(|i| i.to_string()).collect(),
            vec!["0".into(), "1".into()],
            mass,
        )
        .unwrap();
        for f in FGenerator::registry() {
            let d = expected_div_to_uniform(&j, &f).finite().unwrap();
            assert!(d.abs() < 1e-12, "{}", f.name());
        }
    }
}
