//! Numerical exploration of how sharp the combined circle inequality is:
//! maximize
//!
//! ```text
//! ρ(f) = |⟨Sf, f⟩|² / (4 ‖f‖² ‖Tf‖²)
//!      = |Σ_n c_n c̄_{n+1}|² / (4 · Σ|c_n|² · Σ n²|c_n|²)
//! ```
//!
//! over a fixed symmetric band. The inequality bounds ρ by 1; the constant
//! function is a 0/0 equality, so the search keeps `‖Tf‖ ≥ min_t_norm · ‖f‖`
//! (a floor that makes the problem well posed and the boundary value exactly
//! computable for the three-mode family).
//!
//! The ascent runs on the unit sphere of coefficient space with an analytic
//! gradient, backtracking Armijo line search, and, when the derivative floor
//! is binding, projection of the gradient onto the constraint face.

use std::io;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::circle::{random_on_band, CircleFunction};
use crate::error::{Error, Result};

const ARMIJO_C1: f64 = 1e-4;
const MAX_HALVINGS: usize = 40;
const START_ATTEMPTS: usize = 100;

/// The ratio `ρ(f) = |⟨Sf,f⟩|² / (4‖f‖²‖Tf‖²)` for any band, in closed
/// Parseval form (`⟨Sf,f⟩ = -Σ c_n c̄_{n+1}`; the sign vanishes under the
/// modulus).
///
/// NaN when both numerator and denominator vanish (the constant direction).
pub fn ratio(f: &CircleFunction) -> f64 {
    let mut shift = Complex64::new(0.0, 0.0);
    let mut norm_sq = 0.0;
    let mut t_norm_sq = 0.0;
    for (n, c) in f.modes() {
        shift += c * f.coeff(n + 1).conj();
        norm_sq += c.norm_sqr();
        t_norm_sq += (n * n) as f64 * c.norm_sqr();
    }
    shift.norm_sqr() / (4.0 * norm_sq * t_norm_sq)
}

/// The constrained maximization problem on the band `[-n, n]`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default)]
pub struct OptProblem {
    /// Band half-width `n ≥ 1`; coefficients live on `[-n, n]`.
    pub band_halfwidth: u32,
    /// Floor on `‖Tf‖` after normalization to the unit sphere.
    pub min_t_norm: f64,
    /// Iteration budget.
    pub max_iters: usize,
    /// Stop when the projected gradient norm drops below this.
    pub tol: f64,
    /// Seed for the feasible random start.
    pub seed: u64,
}

impl Default for OptProblem {
    fn default() -> Self {
        OptProblem {
            band_halfwidth: 1,
            min_t_norm: 0.3,
            max_iters: 10_000,
            tol: 1e-10,
            seed: 0,
        }
    }
}

/// One accepted step (or the starting state, with `step = 0`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IterRecord {
    /// Number of accepted steps so far.
    pub iter: usize,
    /// Objective value at this iterate.
    pub objective: f64,
    /// Projected gradient norm at the point the step left from.
    pub grad_norm: f64,
    /// Accepted step length (0 for the starting record).
    pub step: f64,
    /// Whether the derivative floor was binding at the iterate.
    pub constraint_active: bool,
}

/// History of one maximization run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OptTrace {
    /// The starting record followed by one record per accepted step.
    pub iterations: Vec<IterRecord>,
    /// The final iterate as a circle function on `[-n, n]`.
    #[serde(rename = "final")]
    pub final_function: CircleFunction,
    /// Objective at the final iterate.
    pub final_ratio: f64,
    /// Projected gradient norm at the final iterate.
    pub final_grad_norm: f64,
    /// True when the gradient-norm tolerance was reached.
    pub converged: bool,
}

impl OptTrace {
    /// Write the trace as CSV with columns `iter,objective,grad_norm,step`.
    pub fn write_csv<W: io::Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        wtr.write_record(["iter", "objective", "grad_norm", "step"])?;
        for rec in &self.iterations {
            wtr.serialize((rec.iter, rec.objective, rec.grad_norm, rec.step))?;
        }
        wtr.flush()?;
        Ok(())
    }
}

fn re_dot(u: &[Complex64], v: &[Complex64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| (a * b.conj()).re).sum()
}

impl OptProblem {
    /// Check the structural invariants (`n ≥ 1`, positive floor/tolerance).
    pub fn validate(&self) -> Result<()> {
        if self.band_halfwidth < 1 {
            return Err(Error::InvalidParameter(
                "band_halfwidth must be at least 1".into(),
            ));
        }
        if self.min_t_norm.is_nan() || self.min_t_norm <= 0.0 {
            return Err(Error::InvalidParameter(
                "min_t_norm must be positive".into(),
            ));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidParameter("tol must be positive".into()));
        }
        Ok(())
    }

    fn width(&self) -> usize {
        2 * self.band_halfwidth as usize + 1
    }

    fn mode(&self, i: usize) -> i64 {
        i as i64 - self.band_halfwidth as i64
    }

    /// Wrap a coefficient vector as a function on the problem band.
    pub fn function(&self, c: &[Complex64]) -> CircleFunction {
        CircleFunction::new(-(self.band_halfwidth as i64), c.to_vec())
    }

    fn check_coeffs(&self, c: &[Complex64]) -> Result<()> {
        if c.len() != self.width() {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients on [-{n}, {n}], got {}",
                self.width(),
                c.len(),
                n = self.band_halfwidth
            )));
        }
        Ok(())
    }

    fn norm_sq_parts(&self, c: &[Complex64]) -> (f64, f64) {
        let mut b = 0.0;
        let mut d = 0.0;
        for (i, ci) in c.iter().enumerate() {
            let w = self.mode(i) as f64;
            b += ci.norm_sqr();
            d += w * w * ci.norm_sqr();
        }
        (b, d)
    }

    fn check_floor(&self, c: &[Complex64]) -> Result<(f64, f64)> {
        let (b, d) = self.norm_sq_parts(c);
        if b == 0.0 {
            return Err(Error::ZeroFunction);
        }
        let got = (d / b).sqrt();
        if got < self.min_t_norm {
            return Err(Error::BelowDerivativeFloor {
                got,
                floor: self.min_t_norm,
            });
        }
        Ok((b, d))
    }

    /// Objective `ρ` on the problem band; rejects coefficient vectors whose
    /// normalized derivative norm sits below the floor.
    pub fn objective(&self, c: &[Complex64]) -> Result<f64> {
        self.check_coeffs(c)?;
        self.check_floor(c)?;
        Ok(ratio(&self.function(c)))
    }

    /// Real-linear gradient of `ρ`, encoded as the complex vector `G` with
    /// `(∂ρ/∂Re c_m, ∂ρ/∂Im c_m) = (Re G_m, Im G_m)`.
    ///
    /// Since `ρ` is scale invariant the gradient is orthogonal to `c` in the
    /// real inner product and scales as `1/λ` under `c ↦ λc`.
    pub fn gradient(&self, c: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_coeffs(c)?;
        self.check_floor(c)?;
        Ok(self.gradient_unchecked(c))
    }

    fn gradient_unchecked(&self, c: &[Complex64]) -> Vec<Complex64> {
        let len = c.len();
        let at = |i: i64| -> Complex64 {
            if i < 0 || i >= len as i64 {
                Complex64::new(0.0, 0.0)
            } else {
                c[i as usize]
            }
        };
        let mut shift = Complex64::new(0.0, 0.0);
        for i in 0..len.saturating_sub(1) {
            shift += c[i] * c[i + 1].conj();
        }
        let (b, d) = self.norm_sq_parts(c);
        let numer = shift.norm_sqr();
        let denom = 4.0 * b * d;
        (0..len)
            .map(|m| {
                let w = self.mode(m) as f64;
                let d_numer = shift.conj() * at(m as i64 - 1) + shift * at(m as i64 + 1);
                let d_denom = 4.0 * (d + b * w * w) * c[m];
                2.0 * (d_numer * denom - d_denom * numer) / (denom * denom)
            })
            .collect()
    }

    /// Project the gradient onto the feasible directions at a unit-sphere
    /// point: always tangent to the sphere, and tangent to the face
    /// `‖Tc‖ = min_t_norm` when the floor is binding and the raw direction
    /// points below it.
    fn project_gradient(&self, c: &[Complex64]) -> (Vec<Complex64>, f64, bool) {
        let g = self.gradient_unchecked(c);
        let gc = re_dot(&g, c);
        let mut gp: Vec<Complex64> = g.iter().zip(c).map(|(gi, ci)| gi - ci * gc).collect();

        let (_, d) = self.norm_sq_parts(c);
        let floor_sq = self.min_t_norm * self.min_t_norm;
        let active = d <= floor_sq * (1.0 + 1e-8);
        if active {
            // Sphere-tangent component of the face normal Σ n²|c_n|².
            let d_vec: Vec<Complex64> = c
                .iter()
                .enumerate()
                .map(|(i, ci)| {
                    let w = self.mode(i) as f64;
                    ci * (w * w)
                })
                .collect();
            let dc = re_dot(&d_vec, c);
            let dt: Vec<Complex64> = d_vec.iter().zip(c).map(|(di, ci)| di - ci * dc).collect();
            let dt_sq = re_dot(&dt, &dt);
            if dt_sq > 0.0 {
                let along = re_dot(&gp, &dt);
                if along < 0.0 {
                    for (gpi, dti) in gp.iter_mut().zip(&dt) {
                        *gpi -= dti * (along / dt_sq);
                    }
                }
            }
        }
        let gnorm = re_dot(&gp, &gp).sqrt();
        (gp, gnorm, active)
    }

    /// Map a raw step back to the feasible set: normalize to the unit sphere
    /// and, if the derivative mass fell below the floor, rescale the center
    /// mode against the rest so the iterate lands exactly on the face.
    fn retract(&self, v: &[Complex64]) -> Option<Vec<Complex64>> {
        let norm = re_dot(v, v).sqrt();
        if norm == 0.0 {
            return None;
        }
        let mut unit: Vec<Complex64> = v.iter().map(|x| x / norm).collect();
        let (_, d) = self.norm_sq_parts(&unit);
        let floor_sq = self.min_t_norm * self.min_t_norm;
        if d >= floor_sq {
            return Some(unit);
        }
        let center = self.band_halfwidth as usize;
        let p = unit[center].norm_sqr();
        let rest: f64 = unit
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != center)
            .map(|(_, x)| x.norm_sqr())
            .sum();
        if d == 0.0 || p == 0.0 {
            return None;
        }
        let beta_sq = floor_sq / d;
        if beta_sq * rest > 1.0 {
            return None;
        }
        let alpha = ((1.0 - beta_sq * rest) / p).sqrt();
        let beta = beta_sq.sqrt();
        for (i, x) in unit.iter_mut().enumerate() {
            *x *= if i == center { alpha } else { beta };
        }
        Some(unit)
    }

    /// Projected gradient ascent with backtracking line search.
    ///
    /// Terminates when the projected gradient norm drops below `tol`, after
    /// `max_iters` accepted steps, or when no step of length `2^-40` or more
    /// still gains; the objective sequence is non-decreasing and every
    /// iterate stays feasible.
    pub fn maximize(&self) -> Result<OptTrace> {
        self.validate()?;
        let floor_sq = self.min_t_norm * self.min_t_norm;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);

        let mut current: Option<Vec<Complex64>> = None;
        for _ in 0..START_ATTEMPTS {
            let f = random_on_band(
                -(self.band_halfwidth as i64),
                self.band_halfwidth as i64,
                &mut rng,
            );
            let coeffs = f.coeffs().to_vec();
            let norm = re_dot(&coeffs, &coeffs).sqrt();
            if norm == 0.0 {
                continue;
            }
            let unit: Vec<Complex64> = coeffs.iter().map(|x| x / norm).collect();
            let (_, d) = self.norm_sq_parts(&unit);
            if d >= floor_sq {
                current = Some(unit);
                break;
            }
        }
        let mut c = current.ok_or(Error::InfeasibleStart(START_ATTEMPTS))?;

        let mut objective = ratio(&self.function(&c));
        let (_, gnorm0, active0) = self.project_gradient(&c);
        let mut iterations = vec![IterRecord {
            iter: 0,
            objective,
            grad_norm: gnorm0,
            step: 0.0,
            constraint_active: active0,
        }];
        let mut final_grad_norm = gnorm0;
        let mut converged = gnorm0 < self.tol;

        let mut accepted = 0usize;
        while accepted < self.max_iters && !converged {
            let (gp, gnorm, active) = self.project_gradient(&c);
            final_grad_norm = gnorm;
            if gnorm < self.tol {
                converged = true;
                break;
            }

            // A gain below one ulp of the objective is roundoff, not progress.
            let noise_floor = f64::EPSILON * objective.abs();
            let mut step = 1.0;
            let mut taken = None;
            for _ in 0..=MAX_HALVINGS {
                let raw: Vec<Complex64> =
                    c.iter().zip(&gp).map(|(ci, gi)| ci + gi * step).collect();
                if let Some(candidate) = self.retract(&raw) {
                    let value = ratio(&self.function(&candidate));
                    let gain = value - objective;
                    if gain >= ARMIJO_C1 * step * gnorm * gnorm && gain > noise_floor {
                        taken = Some((candidate, value, step));
                        break;
                    }
                }
                step *= 0.5;
            }

            match taken {
                Some((candidate, value, step)) => {
                    c = candidate;
                    objective = value;
                    accepted += 1;
                    iterations.push(IterRecord {
                        iter: accepted,
                        objective,
                        grad_norm: gnorm,
                        step,
                        constraint_active: active,
                    });
                }
                // No step at any scale still gains: the iterate is stationary
                // to machine precision.
                None => break,
            }
        }

        Ok(OptTrace {
            iterations,
            final_function: self.function(&c),
            final_ratio: objective,
            final_grad_norm,
            converged,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{apply_s, apply_t, inner, quad_inner, synthesize};
    use crate::uncertainty::breitenberger;
    use approx::assert_relative_eq;
    use rand::Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn three_mode(t: f64) -> Vec<Complex64> {
        vec![c(t, 0.0), c(1.0, 0.0), c(t, 0.0)]
    }

    /// Boundary value of the (t, 1, t) family when `‖Tf‖/‖f‖ = m`:
    /// `t² = m²/(2(1-m²))` and `ρ = 1/(2(1+2t²)) = (1-m²)/2`.
    fn boundary_ratio(m: f64) -> f64 {
        let t_sq = m * m / (2.0 * (1.0 - m * m));
        let family = 1.0 / (2.0 * (1.0 + 2.0 * t_sq));
        let closed = (1.0 - m * m) / 2.0;
        assert_relative_eq!(family, closed, max_relative = 1e-14);
        closed
    }

    #[test]
    fn objective_of_symmetric_family() {
        // ρ(t, 1, t) = 1/(2(1+2t²)); at t = 1/2 this is 1/3.
        let p = OptProblem::default();
        for t in [0.25, 0.5, 1.0, 2.0] {
            let expected = 1.0 / (2.0 * (1.0 + 2.0 * t * t));
            assert_relative_eq!(
                p.objective(&three_mode(t)).unwrap(),
                expected,
                max_relative = 1e-14
            );
        }
        assert_relative_eq!(
            p.objective(&three_mode(0.5)).unwrap(),
            1.0 / 3.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn objective_matches_quadrature_oracle() {
        let p = OptProblem::default();
        let coeffs = three_mode(0.5);
        let f = p.function(&coeffs);
        let m = 32;
        let f_grid = synthesize(&f, m).unwrap();
        let sf_grid = synthesize(&apply_s(&f), m).unwrap();
        let tf_grid = synthesize(&apply_t(&f), m).unwrap();
        let lhs = quad_inner(&sf_grid, &f_grid).unwrap().norm_sqr();
        let rhs = 4.0
            * quad_inner(&f_grid, &f_grid).unwrap().re
            * quad_inner(&tf_grid, &tf_grid).unwrap().re;
        assert_relative_eq!(
            p.objective(&coeffs).unwrap(),
            lhs / rhs,
            max_relative = 1e-12
        );
    }

    #[test]
    fn objective_of_pure_mode_is_zero() {
        let p = OptProblem {
            band_halfwidth: 3,
            ..OptProblem::default()
        };
        let mut coeffs = vec![c(0.0, 0.0); 7];
        coeffs[5] = c(1.0, 0.0); // e^{2iθ}
        assert_eq!(p.objective(&coeffs).unwrap(), 0.0);
    }

    #[test]
    fn two_mode_ratio_on_asymmetric_band() {
        // c = (1, 1) on [0, 1]: ρ = 1/(4·2·1) = 1/8.
        let f = CircleFunction::new(0, vec![c(1.0, 0.0), c(1.0, 0.0)]);
        assert_relative_eq!(ratio(&f), 0.125, max_relative = 1e-15);
        let m = 16;
        let f_grid = synthesize(&f, m).unwrap();
        let sf_grid = synthesize(&apply_s(&f), m).unwrap();
        let tf_grid = synthesize(&apply_t(&f), m).unwrap();
        let quad = quad_inner(&sf_grid, &f_grid).unwrap().norm_sqr()
            / (4.0
                * quad_inner(&f_grid, &f_grid).unwrap().re
                * quad_inner(&tf_grid, &tf_grid).unwrap().re);
        assert_relative_eq!(ratio(&f), quad, max_relative = 1e-13);
    }

    #[test]
    fn objective_enforces_derivative_floor() {
        let p = OptProblem::default();
        // t small: ‖Tc‖/‖c‖ = √(2t²/(1+2t²)) drops below 0.3.
        let err = p.objective(&three_mode(0.1)).unwrap_err();
        assert!(matches!(err, Error::BelowDerivativeFloor { .. }));
    }

    #[test]
    fn gradient_matches_central_differences() {
        let p = OptProblem {
            band_halfwidth: 2,
            ..OptProblem::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let h = 1e-6;
        let mut checked = 0;
        while checked < 20 {
            let f = random_on_band(-2, 2, &mut rng);
            let coeffs = f.coeffs().to_vec();
            if p.objective(&coeffs).is_err() {
                continue;
            }
            let grad = p.gradient(&coeffs).unwrap();
            let mut fd = vec![c(0.0, 0.0); coeffs.len()];
            for m in 0..coeffs.len() {
                for part in 0..2 {
                    let mut plus = coeffs.clone();
                    let mut minus = coeffs.clone();
                    let delta = if part == 0 { c(h, 0.0) } else { c(0.0, h) };
                    plus[m] += delta;
                    minus[m] -= delta;
                    let diff = (ratio(&p.function(&plus)) - ratio(&p.function(&minus))) / (2.0 * h);
                    fd[m] += if part == 0 {
                        c(diff, 0.0)
                    } else {
                        c(0.0, diff)
                    };
                }
            }
            let err_sq: f64 = grad.iter().zip(&fd).map(|(a, b)| (a - b).norm_sqr()).sum();
            let scale: f64 = grad.iter().map(|g| g.norm_sqr()).sum();
            assert!(
                err_sq.sqrt() <= 1e-6 * scale.sqrt(),
                "gradient defect {} vs scale {}",
                err_sq.sqrt(),
                scale.sqrt()
            );
            checked += 1;
        }
    }

    #[test]
    fn gradient_is_orthogonal_to_the_ray() {
        // Degree-0 homogeneity: the directional derivative along c vanishes,
        // and the gradient at λc is the gradient at c divided by λ.
        let p = OptProblem {
            band_halfwidth: 2,
            ..OptProblem::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let f = random_on_band(-2, 2, &mut rng);
        let coeffs = f.coeffs().to_vec();
        let grad = p.gradient(&coeffs).unwrap();
        assert!(re_dot(&grad, &coeffs).abs() <= 1e-10);

        let lambda = 3.0;
        let scaled: Vec<Complex64> = coeffs.iter().map(|x| x * lambda).collect();
        let grad_scaled = p.gradient(&scaled).unwrap();
        for (a, b) in grad.iter().zip(&grad_scaled) {
            assert!((a / lambda - b).norm() <= 1e-12 * a.norm().max(1e-12));
        }
    }

    #[test]
    fn objective_is_scale_invariant() {
        let p = OptProblem {
            band_halfwidth: 2,
            ..OptProblem::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let coeffs = random_on_band(-2, 2, &mut rng).coeffs().to_vec();
        let base = ratio(&p.function(&coeffs));
        for lambda in [2.0, 1e-3, 1e3] {
            let scaled: Vec<Complex64> = coeffs.iter().map(|x| x * lambda).collect();
            assert_relative_eq!(ratio(&p.function(&scaled)), base, max_relative = 1e-12);
        }
    }

    #[test]
    fn maximize_reaches_the_boundary_value() {
        let p = OptProblem {
            seed: 7,
            ..OptProblem::default()
        };
        let expected = boundary_ratio(p.min_t_norm);
        let trace = p.maximize().unwrap();
        assert!(
            trace.final_ratio >= 0.40,
            "final ratio {}",
            trace.final_ratio
        );
        assert!(
            (trace.final_ratio - expected).abs() <= 1e-6,
            "final ratio {} vs boundary value {expected}",
            trace.final_ratio
        );
        // Stationarity on the constraint face.
        assert!(
            trace.final_grad_norm <= 1e-6,
            "projected gradient {}",
            trace.final_grad_norm
        );
    }

    #[test]
    fn maximize_respects_the_bound_and_slack() {
        let p = OptProblem {
            seed: 3,
            ..OptProblem::default()
        };
        let trace = p.maximize().unwrap();
        for rec in &trace.iterations {
            assert!(rec.objective <= 1.0 + 1e-10);
        }
        assert!(trace.final_ratio <= 1.0 + 1e-10);
        let report = breitenberger(&trace.final_function).unwrap();
        assert!(report.slack >= -1e-12 * report.rhs.max(1.0));
    }

    #[test]
    fn maximize_is_monotone_across_seeds() {
        for seed in 0..10 {
            let p = OptProblem {
                seed,
                ..OptProblem::default()
            };
            let trace = p.maximize().unwrap();
            for pair in trace.iterations.windows(2) {
                assert!(
                    pair[1].objective >= pair[0].objective,
                    "seed {seed}: objective decreased"
                );
            }
        }
    }

    #[test]
    fn maximize_rejects_infeasible_floor() {
        // On the unit sphere ‖Tf‖ ≤ n, so a floor of 100 is unreachable.
        let p = OptProblem {
            min_t_norm: 100.0,
            ..OptProblem::default()
        };
        assert!(matches!(
            p.maximize(),
            Err(Error::InfeasibleStart(START_ATTEMPTS))
        ));
    }

    #[test]
    fn maximize_is_deterministic() {
        let p = OptProblem {
            seed: 11,
            ..OptProblem::default()
        };
        let a = serde_json::to_string(&p.maximize().unwrap()).unwrap();
        let b = serde_json::to_string(&p.maximize().unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn wider_band_still_feasible_and_bounded() {
        let p = OptProblem {
            band_halfwidth: 4,
            seed: 5,
            max_iters: 2_000,
            ..OptProblem::default()
        };
        let trace = p.maximize().unwrap();
        assert!(trace.final_ratio <= 1.0 + 1e-10);
        assert!(trace.final_ratio >= 0.40);
        let report = breitenberger(&trace.final_function).unwrap();
        assert!(report.slack >= -1e-12 * report.rhs.max(1.0));
        let _ = inner(&trace.final_function, &trace.final_function);
    }

    #[test]
    fn trace_csv_has_fixed_columns() {
        let p = OptProblem {
            max_iters: 5,
            ..OptProblem::default()
        };
        let trace = p.maximize().unwrap();
        let mut buf = Vec::new();
        trace.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("iter,objective,grad_norm,step\n"));
        assert_eq!(text.lines().count(), trace.iterations.len() + 1);
    }

    #[test]
    fn problem_json_round_trip_with_defaults() {
        let p: OptProblem = serde_json::from_str(r#"{"band_halfwidth": 2, "seed": 9}"#).unwrap();
        assert_eq!(p.band_halfwidth, 2);
        assert_eq!(p.seed, 9);
        assert_eq!(p.min_t_norm, 0.3);
        assert_eq!(p.max_iters, 10_000);
    }

    #[test]
    fn validate_rejects_bad_problems() {
        assert!(OptProblem {
            band_halfwidth: 0,
            ..OptProblem::default()
        }
        .validate()
        .is_err());
        assert!(OptProblem {
            min_t_norm: 0.0,
            ..OptProblem::default()
        }
        .validate()
        .is_err());
    }

    #[test]
    fn floor_error_reports_values() {
        let p = OptProblem::default();
        match p.objective(&three_mode(0.05)) {
            Err(Error::BelowDerivativeFloor { got, floor }) => {
                assert!(got < floor);
                assert_eq!(floor, 0.3);
            }
            other => panic!("expected floor error, got {other:?}"),
        }
    }

    #[test]
    fn random_start_is_reproducible() {
        let p = OptProblem {
            seed: 42,
            max_iters: 0,
            ..OptProblem::default()
        };
        let a = p.maximize().unwrap();
        let b = p.maximize().unwrap();
        assert_eq!(a.final_function, b.final_function);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let _: f64 = rng.random_range(0.0..1.0);
    }
}
