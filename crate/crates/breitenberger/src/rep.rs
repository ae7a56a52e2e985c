//! The unitary representation of the motion group on band-limited circle
//! functions, its derived (infinitesimal) action, and the finite-difference
//! generator used to validate the derived action.
//!
//! A group element `(r, z)` acts by
//!
//! ```text
//! π_a(r, z) f(s) = e^{i(z, s a)} f(e^{-ir} s),     (x, y) = Re(x ȳ)
//! ```
//!
//! Spectrally the rotation twists each coefficient by `e^{-inr}`, and the
//! phase factor `e^{i Re(ζ s̄)}` with `ζ = z · conj(a)` acts as convolution
//! with the Fourier coefficients of `θ ↦ e^{iρ cos(θ - α)}`, `ζ = ρ e^{iα}`.
//! Those multiplier coefficients are `i^k J_k(ρ) e^{-ikα}`, but they are
//! obtained here by oversampled analysis of the sampled phase function
//! rather than from a Bessel routine: one code path, spectrally exact.

use num_complex::Complex64;

use crate::circle::{analyze, CircleFunction, GridSamples};
use crate::error::{Error, Result};
use crate::group::{AlgebraElement, GroupElement};

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Configuration of the representation `π_a`.
///
/// `a` defaults to 1; everything downstream depends on `z` and `a` only
/// through `ζ = z · conj(a)`.
#[derive(Debug, Clone, Copy)]
pub struct RepConfig {
    a: Complex64,
    bandwidth_margin: Option<usize>,
}

impl Default for RepConfig {
    fn default() -> Self {
        RepConfig {
            a: Complex64::new(1.0, 0.0),
            bandwidth_margin: None,
        }
    }
}

impl RepConfig {
    /// Representation with parameter `a`; fails for `a = 0`.
    pub fn new(a: Complex64) -> Result<Self> {
        if a == C_ZERO {
            return Err(Error::InvalidParameter(
                "representation parameter a must be nonzero".into(),
            ));
        }
        Ok(RepConfig {
            a,
            bandwidth_margin: None,
        })
    }

    /// Fix the number of extra modes retained by [`act`] instead of the
    /// default `⌈|ζ|⌉ + 24`.
    pub fn with_margin(mut self, margin: usize) -> Self {
        self.bandwidth_margin = Some(margin);
        self
    }

    /// The representation parameter.
    pub fn a(&self) -> Complex64 {
        self.a
    }

    fn margin_for(&self, zeta: Complex64) -> usize {
        self.bandwidth_margin
            .unwrap_or(zeta.norm().ceil() as usize + 24)
    }
}

/// Apply the group action `π_a(g)` to a band-limited function.
///
/// Rotation is applied to the coefficients first, then the phase factor as a
/// multiplier convolution; the output band is the input band enlarged by the
/// configured margin on both sides (unchanged for a pure rotation, where the
/// multiplier is trivial). The action is unitary up to the superexponentially
/// small multiplier truncation.
pub fn act(cfg: &RepConfig, g: &GroupElement, f: &CircleFunction) -> CircleFunction {
    let zeta = g.z * cfg.a.conj();
    let rotated = CircleFunction::from_modes(f.n_min(), f.n_max(), |n| {
        f.coeff(n) * Complex64::from_polar(1.0, -(n as f64) * g.r)
    });
    if zeta == C_ZERO {
        return rotated;
    }
    let margin = cfg.margin_for(zeta) as i64;
    // Every output mode p needs multiplier entries m_{p-q} for q in the
    // input band, so the multiplier window is margin + width - 1 wide.
    let reach = margin + f.len() as i64 - 1;
    let multiplier = multiplier_coeffs(zeta, -reach, reach);
    CircleFunction::from_modes(f.n_min() - margin, f.n_max() + margin, |p| {
        rotated
            .modes()
            .map(|(q, cq)| multiplier.coeff(p - q) * cq)
            .sum()
    })
}

/// Fourier coefficients of the phase factor `θ ↦ e^{iρ cos(θ - α)}` with
/// `ζ = ρ e^{iα}`, on the requested window.
///
/// Computed by sampling on a grid of `4(width + ⌈ρ⌉ + 16)` points and
/// analyzing; the coefficients decay superexponentially for `|k| ≫ ρ`, so
/// the aliasing error is negligible at every tolerance used in this crate.
pub fn multiplier_coeffs(zeta: Complex64, n_min: i64, n_max: i64) -> CircleFunction {
    assert!(n_max >= n_min, "empty multiplier window");
    let rho = zeta.norm();
    let alpha = zeta.arg();
    let width = (n_max - n_min + 1) as usize;
    let m = 4 * (width + rho.ceil() as usize + 16);
    let samples = GridSamples::from_fn(m, |theta| {
        Complex64::from_polar(1.0, rho * (theta - alpha).cos())
    });
    analyze(&samples, n_min, n_max).expect("oversampled grid resolves the window")
}

/// The derived action `π(W) f = -r f' + i (ζ₁ cos θ + ζ₂ sin θ) f` with
/// `ζ = ζ₁ + iζ₂ = z · conj(a)`, realized on coefficients:
///
/// ```text
/// out_n = -i r n c_n + (i ζ₁/2)(c_{n-1} + c_{n+1}) + (ζ₂/2)(c_{n-1} - c_{n+1})
/// ```
///
/// Linear in `W`. On the basis: `π(X)f = -f'`, `π(Y₁)f = i cos θ f`,
/// `π(Y₂)f = i sin θ f`, and the circle operators are recovered exactly as
/// `T = i π(X)`, `S₁ = i π(Y₁)`, `S₂ = i π(Y₂)`.
pub fn derived(cfg: &RepConfig, w: &AlgebraElement, f: &CircleFunction) -> CircleFunction {
    let zeta = w.z * cfg.a.conj();
    let grow = if zeta == C_ZERO { 0 } else { 1 };
    CircleFunction::from_modes(f.n_min() - grow, f.n_max() + grow, |n| {
        let rotation = Complex64::new(0.0, -w.r * n as f64) * f.coeff(n);
        let lower = f.coeff(n - 1);
        let upper = f.coeff(n + 1);
        let cos_part = Complex64::new(0.0, 0.5 * zeta.re) * (lower + upper);
        let sin_part = (lower - upper) * (0.5 * zeta.im);
        rotation + cos_part + sin_part
    })
}

/// One-sided difference quotient of the orbit:
/// `(π(exp tW) f - f) / t`.
///
/// Converges to [`derived`] with error `O(t)` as `t → 0`; fails for `t = 0`.
pub fn fd_generator(
    cfg: &RepConfig,
    w: &AlgebraElement,
    f: &CircleFunction,
    t: f64,
) -> Result<CircleFunction> {
    if t == 0.0 {
        return Err(Error::ZeroStep);
    }
    let moved = act(cfg, &w.exp(t), f);
    Ok(&(&moved - f) * (1.0 / t))
}

/// Least-squares slope of `log ‖fd_generator - derived‖` against `log t`
/// over the supplied steps; near 1 when the difference quotient converges at
/// first order.
///
/// Returns NaN when fewer than two steps produce a nonzero defect.
pub fn fd_convergence_order(
    cfg: &RepConfig,
    w: &AlgebraElement,
    f: &CircleFunction,
    steps: &[f64],
) -> f64 {
    let points: Vec<(f64, f64)> = steps
        .iter()
        .filter_map(|&t| {
            let fd = fd_generator(cfg, w, f, t).ok()?;
            let err = (&fd - &derived(cfg, w, f)).norm();
            (err > 0.0).then(|| (t.abs().ln(), err.ln()))
        })
        .collect();
    if points.len() < 2 {
        return f64::NAN;
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let var: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    cov / var
}
