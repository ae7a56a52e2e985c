//! Uncertainty inequality reports.
//!
//! For algebra elements `W₁`, `W₂` and a nonzero `f`, the representation-
//! theoretic inequality reads (in the convention stored here, with the
//! factor 2 on the product side)
//!
//! ```text
//! |⟨π([W₁, W₂]) f, f⟩| ≤ 2 ‖π(W₁) f‖ ‖π(W₂) f‖.
//! ```
//!
//! Specializing to `(X, Y₂)` and `(X, Y₁)` gives the two circle inequalities
//! whose combination is the Breitenberger bound
//!
//! ```text
//! |⟨S f, f⟩|² ≤ 4 ‖f‖² ‖T f‖².
//! ```
//!
//! Every evaluation is returned as an [`UpReport`] carrying both sides, the
//! slack, and a degeneracy flag for the `0 ≤ 0` case.

use serde::{Deserialize, Serialize};

use crate::circle::{apply_s, apply_s1, apply_s2, apply_t, inner, CircleFunction};
use crate::error::{Error, Result};
use crate::group::AlgebraElement;
use crate::rep::{derived, RepConfig};

/// Guard for relative slack when both sides vanish.
const EPS_DENOM: f64 = 1e-300;

/// One evaluated uncertainty inequality: `lhs ≤ rhs` up to roundoff.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UpReport {
    /// Which inequality and which pair produced the report.
    pub label: String,
    /// Pairing side (nonnegative).
    pub lhs: f64,
    /// Product side (nonnegative).
    pub rhs: f64,
    /// `rhs - lhs`; at least `-1e-12·max(1, rhs)` for a valid evaluation.
    pub slack: f64,
    /// `slack / max(rhs, ε)`.
    pub relative_slack: f64,
    /// True when `lhs = rhs = 0` (equality of the degenerate kind).
    pub degenerate: bool,
}

impl UpReport {
    fn new(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let slack = rhs - lhs;
        UpReport {
            label: label.into(),
            lhs,
            rhs,
            slack,
            relative_slack: slack / rhs.max(EPS_DENOM),
            degenerate: lhs == 0.0 && rhs == 0.0,
        }
    }

    /// Replace the label, keeping the numbers.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

fn require_nonzero(f: &CircleFunction) -> Result<()> {
    if f.norm_sq() == 0.0 {
        return Err(Error::ZeroFunction);
    }
    Ok(())
}

fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
    let scale = a.abs().max(b.abs()).max(1.0);
    assert!(
        (a - b).abs() <= tol * scale,
        "{what}: {a} vs {b} (tolerance {tol})"
    );
}

/// The general inequality for an arbitrary ordered pair `(W₁, W₂)`:
/// `lhs = |⟨π([W₁,W₂]) f, f⟩|`, `rhs = 2 ‖π(W₁) f‖ ‖π(W₂) f‖`.
///
/// Evaluated in the default representation (`a = 1`). Fails on the zero
/// function.
pub fn up_general(
    f: &CircleFunction,
    w1: &AlgebraElement,
    w2: &AlgebraElement,
) -> Result<UpReport> {
    require_nonzero(f)?;
    let cfg = RepConfig::default();
    let lhs = inner(&derived(&cfg, &w1.bracket(w2), f), f).norm();
    let rhs = 2.0 * derived(&cfg, w1, f).norm() * derived(&cfg, w2, f).norm();
    Ok(UpReport::new(format!("general[{w1}, {w2}]"), lhs, rhs))
}

/// The two circle specializations:
///
/// * `rauhut1`: `|⟨π(Y₁) f, f⟩| = |⟨π([X,Y₂]) f, f⟩| ≤ 2 ‖π(X) f‖ ‖π(Y₂) f‖`
/// * `rauhut2`: `|⟨π(Y₂) f, f⟩| = |⟨π([X,Y₁]) f, f⟩| ≤ 2 ‖π(X) f‖ ‖π(Y₁) f‖`
///
/// Each left side is computed both through the bracket and directly through
/// the basis pairing; the two routes must agree to `1e-13` (the sign is
/// absorbed by the absolute value).
pub fn rauhut_pair(f: &CircleFunction) -> Result<(UpReport, UpReport)> {
    require_nonzero(f)?;
    let cfg = RepConfig::default();

    let report1 = up_general(f, &AlgebraElement::X, &AlgebraElement::Y2)?;
    let direct1 = inner(&derived(&cfg, &AlgebraElement::Y1, f), f).norm();
    assert_close(report1.lhs, direct1, 1e-13, "rauhut1 pairing identity");

    let report2 = up_general(f, &AlgebraElement::X, &AlgebraElement::Y1)?;
    let direct2 = inner(&derived(&cfg, &AlgebraElement::Y2, f), f).norm();
    assert_close(report2.lhs, direct2, 1e-13, "rauhut2 pairing identity");

    Ok((
        UpReport::new("rauhut1", direct1, report1.rhs),
        UpReport::new("rauhut2", direct2, report2.rhs),
    ))
}

/// The combined circle inequality: `lhs = |⟨Sf, f⟩|²`, `rhs = 4‖f‖²‖Tf‖²`.
///
/// The derivation chain is re-verified on every call:
/// `|⟨Sf,f⟩|² = ⟨S₁f,f⟩² + ⟨S₂f,f⟩²` (both pairings real), and
/// `lhs ≤ 4‖Tf‖²(‖S₁f‖² + ‖S₂f‖²) = rhs` through `‖S₁f‖² + ‖S₂f‖² = ‖f‖²`.
pub fn breitenberger(f: &CircleFunction) -> Result<UpReport> {
    require_nonzero(f)?;
    let norm_sq = f.norm_sq();
    let t_norm_sq = apply_t(f).norm_sq();
    let lhs = inner(&apply_s(f), f).norm_sqr();
    let rhs = 4.0 * norm_sq * t_norm_sq;

    // |⟨Sf,f⟩|² decomposes into the two real pairings.
    let p1 = inner(&apply_s1(f), f);
    let p2 = inner(&apply_s2(f), f);
    let scale = norm_sq.max(1.0);
    assert!(p1.im.abs() <= 1e-14 * scale, "⟨S₁f,f⟩ not real: {p1}");
    assert!(p2.im.abs() <= 1e-14 * scale, "⟨S₂f,f⟩ not real: {p2}");
    assert_close(
        lhs,
        p1.re * p1.re + p2.re * p2.re,
        1e-13,
        "pairing decomposition",
    );

    // Chain through the two specialized inequalities.
    let s1_sq = apply_s1(f).norm_sq();
    let s2_sq = apply_s2(f).norm_sq();
    let mid = 4.0 * t_norm_sq * (s1_sq + s2_sq);
    assert!(
        lhs <= mid + 1e-12 * mid.max(1.0),
        "pairing exceeds the specialized bound: {lhs} vs {mid}"
    );
    assert_close(mid, rhs, 1e-13, "shift isometry link");

    Ok(UpReport::new("breitenberger", lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{quad_inner, random_function, synthesize, GridSamples};
    use crate::group::GroupElement;
    use crate::rep::act;
    use approx::assert_relative_eq;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::TAU;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one_plus_mode() -> CircleFunction {
        &CircleFunction::constant(c(1.0, 0.0)) + &CircleFunction::basis(1)
    }

    fn slack_ok(report: &UpReport) {
        assert!(
            report.slack >= -1e-12 * report.rhs.max(1.0),
            "{}: slack {} with rhs {}",
            report.label,
            report.slack,
            report.rhs
        );
    }

    #[test]
    fn general_on_constant_is_degenerate() {
        let one = CircleFunction::constant(c(1.0, 0.0));
        let r = up_general(&one, &AlgebraElement::X, &AlgebraElement::Y1).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert_eq!(r.rhs, 0.0);
        assert_eq!(r.slack, 0.0);
        assert!(r.degenerate);
        assert_eq!(r.relative_slack, 0.0);
    }

    #[test]
    fn general_on_two_modes_validated_by_quadrature() {
        // f = 1 + e^{iθ}, pair (X, Y₂): lhs = |⟨i cos θ f, f⟩| = 1.
        let f = one_plus_mode();
        let r = up_general(&f, &AlgebraElement::X, &AlgebraElement::Y2).unwrap();
        assert_relative_eq!(r.lhs, 1.0, max_relative = 1e-13);
        slack_ok(&r);

        // Quadrature route for both sides on a fine grid.
        let m = 64;
        let f_grid = synthesize(&f, m).unwrap();
        let icosf = GridSamples::from_fn(m, |theta| c(0.0, theta.cos()) * f.eval(theta));
        let lhs_quad = quad_inner(&icosf, &f_grid).unwrap().norm();
        assert_relative_eq!(r.lhs, lhs_quad, max_relative = 1e-13);

        let fprime = GridSamples::from_fn(m, |theta| {
            // f' of 1 + e^{iθ} is i e^{iθ}
            c(0.0, 1.0) * Complex64::from_polar(1.0, theta)
        });
        let isinf = GridSamples::from_fn(m, |theta| c(0.0, theta.sin()) * f.eval(theta));
        let rhs_quad = 2.0
            * quad_inner(&fprime, &fprime).unwrap().re.sqrt()
            * quad_inner(&isinf, &isinf).unwrap().re.sqrt();
        assert_relative_eq!(r.rhs, rhs_quad, max_relative = 1e-13);
    }

    #[test]
    fn general_on_commuting_pair() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let f = random_function(5, &mut rng);
        let r = up_general(&f, &AlgebraElement::Y1, &AlgebraElement::Y2).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert!(r.rhs >= 0.0);
        slack_ok(&r);
    }

    #[test]
    fn general_rejects_zero_function() {
        let zero = CircleFunction::constant(c(0.0, 0.0));
        assert!(matches!(
            up_general(&zero, &AlgebraElement::X, &AlgebraElement::Y1),
            Err(Error::ZeroFunction)
        ));
    }

    #[test]
    fn rauhut_on_constant() {
        let one = CircleFunction::constant(c(1.0, 0.0));
        let (r1, r2) = rauhut_pair(&one).unwrap();
        assert_eq!(r1.lhs, 0.0);
        assert_eq!(r2.lhs, 0.0);
        slack_ok(&r1);
        slack_ok(&r2);
    }

    #[test]
    fn rauhut_on_two_modes_validated_by_quadrature() {
        let f = one_plus_mode();
        let (r1, r2) = rauhut_pair(&f).unwrap();
        assert_relative_eq!(r1.lhs, 1.0, max_relative = 1e-13);
        slack_ok(&r1);
        slack_ok(&r2);

        // rhs₁ = 2 ‖f'‖ ‖sin θ f‖ by quadrature.
        let m = 64;
        let fprime =
            GridSamples::from_fn(m, |theta| c(0.0, 1.0) * Complex64::from_polar(1.0, theta));
        let sinf = GridSamples::from_fn(m, |theta| f.eval(theta) * theta.sin());
        let rhs_quad = 2.0
            * quad_inner(&fprime, &fprime).unwrap().re.sqrt()
            * quad_inner(&sinf, &sinf).unwrap().re.sqrt();
        assert_relative_eq!(r1.rhs, rhs_quad, max_relative = 1e-13);
    }

    #[test]
    fn rauhut_on_pure_mode() {
        // A single mode annihilates every shift pairing; rhs = 2·5·‖S_j f‖.
        let f = CircleFunction::basis(5);
        let (r1, r2) = rauhut_pair(&f).unwrap();
        assert_eq!(r1.lhs, 0.0);
        assert_eq!(r2.lhs, 0.0);
        let expected = 2.0 * 5.0 * apply_s2(&f).norm();
        assert_relative_eq!(r1.rhs, expected, max_relative = 1e-14);
        let expected2 = 2.0 * 5.0 * apply_s1(&f).norm();
        assert_relative_eq!(r2.rhs, expected2, max_relative = 1e-14);
    }

    #[test]
    fn breitenberger_worked_value() {
        // f = 1 + e^{iθ}: ⟨Sf,f⟩ = -1, ‖f‖² = 2, ‖Tf‖² = 1 → (lhs, rhs) = (1, 8).
        let f = one_plus_mode();
        let r = breitenberger(&f).unwrap();
        assert_relative_eq!(r.lhs, 1.0, max_relative = 1e-13);
        assert_relative_eq!(r.rhs, 8.0, max_relative = 1e-13);
        slack_ok(&r);
    }

    #[test]
    fn breitenberger_pure_mode() {
        for n in [1i64, -2, 4] {
            let f = CircleFunction::basis(n);
            let r = breitenberger(&f).unwrap();
            assert_eq!(r.lhs, 0.0);
            assert_relative_eq!(r.rhs, 4.0 * (n * n) as f64, max_relative = 1e-15);
            assert_relative_eq!(r.slack, 4.0 * (n * n) as f64, max_relative = 1e-15);
        }
    }

    #[test]
    fn breitenberger_constant_is_degenerate_equality() {
        let one = CircleFunction::constant(c(2.0, 0.0));
        let r = breitenberger(&one).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert_eq!(r.rhs, 0.0);
        assert!(r.degenerate);
    }

    #[test]
    fn inequality_suite_on_random_functions() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let basis = [AlgebraElement::X, AlgebraElement::Y1, AlgebraElement::Y2];
        for _ in 0..100 {
            let n = rng.random_range(1..=16);
            let f = random_function(n, &mut rng);
            slack_ok(&breitenberger(&f).unwrap());
            let (r1, r2) = rauhut_pair(&f).unwrap();
            slack_ok(&r1);
            slack_ok(&r2);
            for (i, w1) in basis.iter().enumerate() {
                for (j, w2) in basis.iter().enumerate() {
                    if i != j {
                        slack_ok(&up_general(&f, w1, w2).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn report_scales_quartically() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let f = random_function(6, &mut rng);
        let base = breitenberger(&f).unwrap();
        for lambda in [2.0, 1e-3, 1e3] {
            let scaled = breitenberger(&(&f * lambda)).unwrap();
            let quartic = lambda.powi(4);
            assert_relative_eq!(scaled.lhs, base.lhs * quartic, max_relative = 1e-12);
            assert_relative_eq!(scaled.rhs, base.rhs * quartic, max_relative = 1e-12);
            assert_relative_eq!(
                scaled.relative_slack,
                base.relative_slack,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn report_is_rotation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let f = random_function(5, &mut rng);
        let base = breitenberger(&f).unwrap();
        for r in [0.3, TAU / 3.0, -1.7] {
            let rotated = act(
                &RepConfig::default(),
                &GroupElement::new(r, c(0.0, 0.0)),
                &f,
            );
            let report = breitenberger(&rotated).unwrap();
            assert_relative_eq!(report.lhs, base.lhs, max_relative = 1e-12);
            assert_relative_eq!(report.rhs, base.rhs, max_relative = 1e-12);
        }
    }

    #[test]
    fn report_json_wire_form() {
        let r = breitenberger(&one_plus_mode()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        for key in [
            "label",
            "lhs",
            "rhs",
            "slack",
            "relative_slack",
            "degenerate",
        ] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
    }
}
