//! Band-limited spectral model of L²(T).
//!
//! A function on the unit circle is stored as a contiguous window of Fourier
//! coefficients: `coeffs[k]` is the coefficient of `e^{i(n_min+k)θ}`. The
//! inner product is normalized as `⟨f,g⟩ = (1/2π)∫ f ḡ dθ`, which makes the
//! exponentials `e^{inθ}` an orthonormal basis and every identity in this
//! crate coefficient-exact.
//!
//! The module provides the concrete circle operators
//!
//! * `T f = -i f'`            (coefficient action `c_n ↦ n c_n`),
//! * `S₁ f = -cos θ · f`      (symmetric three-point stencil),
//! * `S₂ f = -sin θ · f`      (antisymmetric three-point stencil),
//! * `S f = -e^{iθ} f`        (index shift, `S = S₁ + i S₂`),
//!
//! together with uniform-grid sampling and the trapezoid quadrature rule,
//! which is spectrally exact for band-limited integrands and serves as the
//! independent oracle for every spectral formula.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A function on the circle represented by a contiguous window of Fourier
/// coefficients.
///
/// Multiplication operators grow the window instead of truncating it, so
/// exact identities such as `‖Sf‖ = ‖f‖` survive in floating point.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "CircleFunctionJson", into = "CircleFunctionJson")]
pub struct CircleFunction {
    n_min: i64,
    coeffs: Vec<Complex64>,
}

/// Wire form: `{"n_min": int, "coeffs": [[re, im], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct CircleFunctionJson {
    n_min: i64,
    coeffs: Vec<[f64; 2]>,
}

impl TryFrom<CircleFunctionJson> for CircleFunction {
    type Error = Error;

    fn try_from(j: CircleFunctionJson) -> Result<Self> {
        if j.coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "coeffs: must contain at least one coefficient".into(),
            ));
        }
        Ok(CircleFunction::new(
            j.n_min,
            j.coeffs
                .iter()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect(),
        ))
    }
}

impl From<CircleFunction> for CircleFunctionJson {
    fn from(f: CircleFunction) -> Self {
        CircleFunctionJson {
            n_min: f.n_min,
            coeffs: f.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl CircleFunction {
    /// Build a function from its lowest index and coefficient window.
    ///
    /// Panics if `coeffs` is empty; the band must contain at least one mode.
    pub fn new(n_min: i64, coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "coefficient window must be non-empty");
        CircleFunction { n_min, coeffs }
    }

    /// The constant function with value `c`.
    pub fn constant(c: Complex64) -> Self {
        CircleFunction::new(0, vec![c])
    }

    /// The basis exponential `e^{inθ}`.
    pub fn basis(n: i64) -> Self {
        CircleFunction::new(n, vec![Complex64::new(1.0, 0.0)])
    }

    /// Build a function over `[n_min, n_max]` from a per-mode rule.
    pub fn from_modes(n_min: i64, n_max: i64, rule: impl FnMut(i64) -> Complex64) -> Self {
        assert!(n_max >= n_min, "empty band");
        CircleFunction::new(n_min, (n_min..=n_max).map(rule).collect())
    }

    /// Lowest Fourier index of the window.
    pub fn n_min(&self) -> i64 {
        self.n_min
    }

    /// Highest Fourier index of the window.
    pub fn n_max(&self) -> i64 {
        self.n_min + self.coeffs.len() as i64 - 1
    }

    /// Number of stored coefficients (the window width).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Always false; the window is non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coefficient of `e^{inθ}`; zero outside the stored window.
    pub fn coeff(&self, n: i64) -> Complex64 {
        if n < self.n_min || n > self.n_max() {
            ZERO
        } else {
            self.coeffs[(n - self.n_min) as usize]
        }
    }

    /// Stored coefficients, lowest index first.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Iterate over `(n, c_n)` pairs of the stored window.
    pub fn modes(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, &c)| (self.n_min + k as i64, c))
    }

    /// Squared norm `Σ |c_n|²` (Parseval under the normalized inner product).
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Norm `‖f‖`.
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Re-window onto `[n_min, n_max]`, padding with zeros.
    ///
    /// Panics if the target window would drop a stored coefficient; bands are
    /// never truncated silently.
    pub fn zero_pad(&self, n_min: i64, n_max: i64) -> Self {
        assert!(
            n_min <= self.n_min && n_max >= self.n_max(),
            "zero_pad would truncate the band"
        );
        CircleFunction::from_modes(n_min, n_max, |n| self.coeff(n))
    }

    /// Pointwise evaluation `f(e^{iθ}) = Σ c_n e^{inθ}`.
    pub fn eval(&self, theta: f64) -> Complex64 {
        self.modes()
            .map(|(n, c)| c * Complex64::from_polar(1.0, n as f64 * theta))
            .sum()
    }
}

/// Equality compares coefficients after zero-padding to the union band.
impl PartialEq for CircleFunction {
    fn eq(&self, other: &Self) -> bool {
        let lo = self.n_min.min(other.n_min);
        let hi = self.n_max().max(other.n_max());
        (lo..=hi).all(|n| self.coeff(n) == other.coeff(n))
    }
}

impl Add for &CircleFunction {
    type Output = CircleFunction;

    fn add(self, rhs: &CircleFunction) -> CircleFunction {
        let lo = self.n_min.min(rhs.n_min);
        let hi = self.n_max().max(rhs.n_max());
        CircleFunction::from_modes(lo, hi, |n| self.coeff(n) + rhs.coeff(n))
    }
}

impl Sub for &CircleFunction {
    type Output = CircleFunction;

    fn sub(self, rhs: &CircleFunction) -> CircleFunction {
        let lo = self.n_min.min(rhs.n_min);
        let hi = self.n_max().max(rhs.n_max());
        CircleFunction::from_modes(lo, hi, |n| self.coeff(n) - rhs.coeff(n))
    }
}

impl Mul<Complex64> for &CircleFunction {
    type Output = CircleFunction;

    fn mul(self, rhs: Complex64) -> CircleFunction {
        CircleFunction::new(self.n_min, self.coeffs.iter().map(|&c| c * rhs).collect())
    }
}

impl Mul<f64> for &CircleFunction {
    type Output = CircleFunction;

    fn mul(self, rhs: f64) -> CircleFunction {
        CircleFunction::new(self.n_min, self.coeffs.iter().map(|&c| c * rhs).collect())
    }
}

impl Neg for &CircleFunction {
    type Output = CircleFunction;

    fn neg(self) -> CircleFunction {
        CircleFunction::new(self.n_min, self.coeffs.iter().map(|&c| -c).collect())
    }
}

/// Samples of a circle function on the uniform grid `θ_j = 2πj/M`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSamples {
    values: Vec<Complex64>,
}

impl GridSamples {
    /// Wrap raw samples; `values[j]` is the value at `θ_j = 2πj/len`.
    pub fn new(values: Vec<Complex64>) -> Self {
        assert!(!values.is_empty(), "sample grid must be non-empty");
        GridSamples { values }
    }

    /// Sample a closure at the `m` uniform grid angles.
    pub fn from_fn(m: usize, mut f: impl FnMut(f64) -> Complex64) -> Self {
        assert!(m > 0, "sample grid must be non-empty");
        GridSamples {
            values: (0..m).map(|j| f(TAU * j as f64 / m as f64)).collect(),
        }
    }

    /// Grid size `M`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; grids are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The raw sample values.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// Normalized inner product `⟨f,g⟩ = Σ_n c_n(f) · conj(c_n(g))`.
///
/// Bands are aligned by zero-padding, so only the overlap contributes. The
/// product is conjugate-linear in the second slot and `inner(f,f)` is real
/// and nonnegative.
pub fn inner(f: &CircleFunction, g: &CircleFunction) -> Complex64 {
    let lo = f.n_min().max(g.n_min());
    let hi = f.n_max().min(g.n_max());
    let mut acc = ZERO;
    let mut n = lo;
    while n <= hi {
        acc += f.coeff(n) * g.coeff(n).conj();
        n += 1;
    }
    acc
}

/// Trapezoid quadrature of `(1/2π)∫ f ḡ dθ` on a uniform grid:
/// `(1/M) Σ_j F_j · conj(G_j)`.
///
/// Exact for band-limited integrands once the grid resolves the product
/// band; used throughout as the independent oracle for coefficient formulas.
pub fn quad_inner(f: &GridSamples, g: &GridSamples) -> Result<Complex64> {
    if f.len() != g.len() {
        return Err(Error::GridSizeMismatch {
            left: f.len(),
            right: g.len(),
        });
    }
    let m = f.len() as f64;
    let sum: Complex64 = f
        .values()
        .iter()
        .zip(g.values())
        .map(|(a, b)| a * b.conj())
        .sum();
    Ok(sum / m)
}

/// Evaluate `f` on the uniform grid of `m` points.
///
/// Requires `m ≥ len(f)` so that the synthesis/analysis round trip is exact.
pub fn synthesize(f: &CircleFunction, m: usize) -> Result<GridSamples> {
    if m < f.len() {
        return Err(Error::GridTooSmall {
            need: f.len(),
            got: m,
        });
    }
    Ok(GridSamples::from_fn(m, |theta| f.eval(theta)))
}

/// Recover Fourier coefficients on `[n_min, n_max]` from grid samples:
/// `c_n = (1/M) Σ_j F_j e^{-inθ_j}`.
///
/// Requires `M ≥ n_max - n_min + 1` so the requested modes are distinct on
/// the grid; exact (up to roundoff) whenever the sampled function is
/// band-limited to a window of at most `M` modes containing the request.
pub fn analyze(samples: &GridSamples, n_min: i64, n_max: i64) -> Result<CircleFunction> {
    if n_max < n_min {
        return Err(Error::InvalidParameter(format!(
            "analysis band [{n_min}, {n_max}] is empty"
        )));
    }
    let width = (n_max - n_min + 1) as usize;
    let m = samples.len();
    if m < width {
        return Err(Error::GridTooSmall {
            need: width,
            got: m,
        });
    }
    let mf = m as f64;
    Ok(CircleFunction::from_modes(n_min, n_max, |n| {
        let sum: Complex64 = samples
            .values()
            .iter()
            .enumerate()
            .map(|(j, &v)| v * Complex64::from_polar(1.0, -(n as f64) * TAU * j as f64 / mf))
            .sum();
        sum / mf
    }))
}

/// The frequency operator `T f = -i f'`, acting as `c_n ↦ n c_n`.
///
/// The band is unchanged and `⟨Tf,g⟩ = ⟨f,Tg⟩` holds exactly at the
/// coefficient level (real eigenvalues).
pub fn apply_t(f: &CircleFunction) -> CircleFunction {
    CircleFunction::from_modes(f.n_min(), f.n_max(), |n| f.coeff(n) * n as f64)
}

/// The position operator `S₁ f = -cos θ · f`:
/// output coefficient `c_n ↦ -(c_{n-1} + c_{n+1})/2`.
///
/// The band grows by exactly one index on each side; nothing is truncated.
pub fn apply_s1(f: &CircleFunction) -> CircleFunction {
    CircleFunction::from_modes(f.n_min() - 1, f.n_max() + 1, |n| {
        (f.coeff(n - 1) + f.coeff(n + 1)) * -0.5
    })
}

/// The position operator `S₂ f = -sin θ · f`:
/// output coefficient `c_n ↦ -(c_{n-1} - c_{n+1})/(2i)`.
///
/// The band grows by exactly one index on each side; nothing is truncated.
pub fn apply_s2(f: &CircleFunction) -> CircleFunction {
    // -(a - b)/(2i) = (a - b)·(i/2)
    CircleFunction::from_modes(f.n_min() - 1, f.n_max() + 1, |n| {
        (f.coeff(n - 1) - f.coeff(n + 1)) * Complex64::new(0.0, 0.5)
    })
}

/// The unitary shift `S f = -e^{iθ} f = (S₁ + iS₂) f`:
/// output coefficient `c_n ↦ -c_{n-1}`.
///
/// The band shifts up by exactly one index; `‖Sf‖ = ‖f‖`.
pub fn apply_s(f: &CircleFunction) -> CircleFunction {
    CircleFunction::from_modes(f.n_min() + 1, f.n_max() + 1, |n| -f.coeff(n - 1))
}

/// Test-function families used by the verification suites and the CLI.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `exp(λ cos θ)`, the periodic analogue of a Gaussian; `λ > 0`.
    VonMises { lambda: f64 },
    /// Dirichlet kernel: `c_n = 1` on `[-k, k]`.
    Dirichlet { k: u32 },
    /// Gaussian profile in mode space centered at `center` with width `sigma`.
    ShiftedPacket { center: i64, sigma: f64 },
    /// Independent standard complex Gaussian coefficients on `[-n, n]`.
    Random { n: u32, seed: u64 },
}

/// Construct a member of one of the named test-function families.
pub fn make_family(kind: &Family) -> Result<CircleFunction> {
    match *kind {
        Family::VonMises { lambda } => von_mises(lambda),
        Family::Dirichlet { k } => Ok(CircleFunction::from_modes(-(k as i64), k as i64, |_| {
            Complex64::new(1.0, 0.0)
        })),
        Family::ShiftedPacket { center, sigma } => shifted_packet(center, sigma),
        Family::Random { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(random_function(n, &mut rng))
        }
    }
}

/// Independent standard complex Gaussian coefficients on the band `[-n, n]`,
/// drawn from the supplied generator.
pub fn random_function(n: u32, rng: &mut impl Rng) -> CircleFunction {
    random_on_band(-(n as i64), n as i64, rng)
}

/// Standard complex Gaussian coefficients on an arbitrary band.
pub fn random_on_band(n_min: i64, n_max: i64, rng: &mut impl Rng) -> CircleFunction {
    CircleFunction::from_modes(n_min, n_max, |_| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    })
}

fn von_mises(lambda: f64) -> Result<CircleFunction> {
    if lambda.is_nan() || lambda <= 0.0 || !lambda.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "von_mises lambda must be positive and finite, got {lambda}"
        )));
    }
    let m = 8 * lambda.ceil() as usize + 64;
    let samples =
        GridSamples::from_fn(m, |theta| Complex64::new((lambda * theta.cos()).exp(), 0.0));
    let k0 = ((m - 1) / 2) as i64;
    let full = analyze(&samples, -k0, k0)?;
    let max = full
        .coeffs()
        .iter()
        .map(|c| c.norm())
        .fold(0.0_f64, f64::max);
    let threshold = 1e-16 * max;
    // Scan outward from the center; stop at the first index where both
    // sides of the (even) spectrum drop below the relative threshold.
    let mut k = k0;
    for n in 1..=k0 {
        if full.coeff(n).norm() < threshold && full.coeff(-n).norm() < threshold {
            k = n - 1;
            break;
        }
    }
    Ok(CircleFunction::from_modes(-k, k, |n| full.coeff(n)))
}

fn shifted_packet(center: i64, sigma: f64) -> Result<CircleFunction> {
    if sigma.is_nan() || sigma <= 0.0 || !sigma.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "shifted_packet sigma must be positive and finite, got {sigma}"
        )));
    }
    // exp(-(n-center)²/(2σ²)) falls below 1e-16 beyond |n-center| = σ√(32 ln 10).
    let reach = (sigma * (32.0 * std::f64::consts::LN_10).sqrt()).ceil() as i64;
    Ok(CircleFunction::from_modes(
        center - reach,
        center + reach,
        |n| {
            let d = (n - center) as f64;
            Complex64::new((-d * d / (2.0 * sigma * sigma)).exp(), 0.0)
        },
    ))
}
