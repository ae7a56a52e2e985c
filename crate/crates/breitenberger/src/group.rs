//! The planar Euclidean motion group and its Lie algebra.
//!
//! A group element `(r, z)` is the rigid motion `w ↦ e^{ir} w + z`, embedded
//! as the complex 2×2 matrix
//!
//! ```text
//! (r, z) = | e^{ir}  z |
//!          |   0     1 |
//! ```
//!
//! An algebra element `(r, z)` is the matrix `(ir, z; 0, 0)`. The
//! distinguished basis is `X = (1, 0)`, `Y₁ = (0, 1)`, `Y₂ = (0, i)`, with
//! commutators `[X, Y₁] = Y₂` and `[X, Y₂] = -Y₁`.
//!
//! [`Mat2`] carries the embedding plus a scaling-and-squaring series
//! exponential; the closed-form [`AlgebraElement::exp`] is checked against
//! that series as an independent oracle.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The real pairing `(x, y) = Re(x · conj(y))` on ℂ viewed as ℝ².
///
/// Symmetric and bilinear over the reals, with `pair(x, x) = |x|²`.
pub fn pair(x: Complex64, y: Complex64) -> f64 {
    (x * y.conj()).re
}

/// A rigid motion of the plane: rotation angle `r` (kept unreduced in ℝ)
/// and translation `z`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(from = "GroupElementJson", into = "GroupElementJson")]
pub struct GroupElement {
    /// Rotation angle in radians, stored as given (not reduced mod 2π).
    pub r: f64,
    /// Translation component.
    pub z: Complex64,
}

/// Wire form: `{"r": float, "z": [re, im]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct GroupElementJson {
    r: f64,
    z: [f64; 2],
}

impl From<GroupElementJson> for GroupElement {
    fn from(j: GroupElementJson) -> Self {
        GroupElement::new(j.r, Complex64::new(j.z[0], j.z[1]))
    }
}

impl From<GroupElement> for GroupElementJson {
    fn from(g: GroupElement) -> Self {
        GroupElementJson {
            r: g.r,
            z: [g.z.re, g.z.im],
        }
    }
}

impl GroupElement {
    /// Build `(r, z)`.
    pub const fn new(r: f64, z: Complex64) -> Self {
        GroupElement { r, z }
    }

    /// The identity motion `(0, 0)`.
    pub const fn identity() -> Self {
        GroupElement::new(0.0, C_ZERO)
    }

    /// Group law `(r₁, z₁)(r₂, z₂) = (r₁ + r₂, z₁ + e^{ir₁} z₂)`,
    /// matching the 2×2 matrix product of the embeddings.
    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        GroupElement::new(
            self.r + other.r,
            self.z + Complex64::from_polar(1.0, self.r) * other.z,
        )
    }

    /// Group inverse `(-r, -e^{-ir} z)`.
    pub fn inverse(&self) -> GroupElement {
        GroupElement::new(-self.r, -(Complex64::from_polar(1.0, -self.r) * self.z))
    }

    /// The matrix `(e^{ir}, z; 0, 1)`.
    pub fn embed(&self) -> Mat2 {
        Mat2::new(Complex64::from_polar(1.0, self.r), self.z, C_ZERO, C_ONE)
    }
}

/// Equality compares the embedded rotation `e^{ir}` and the translation,
/// so lifts differing by an exact multiple of 2π in floating point agree.
impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        Complex64::from_polar(1.0, self.r) == Complex64::from_polar(1.0, other.r)
            && self.z == other.z
    }
}

impl std::ops::Mul for GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.multiply(&rhs)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.z)
    }
}

/// An element `(r, z)` of the Lie algebra, representing the matrix
/// `(ir, z; 0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "AlgebraElementJson", into = "AlgebraElementJson")]
pub struct AlgebraElement {
    /// Coefficient of the rotation generator.
    pub r: f64,
    /// Translation direction.
    pub z: Complex64,
}

/// Wire form: `{"type": "algebra", "r": float, "z": [re, im]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct AlgebraElementJson {
    #[serde(rename = "type")]
    tag: AlgebraTag,
    r: f64,
    z: [f64; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
enum AlgebraTag {
    #[serde(rename = "algebra")]
    Algebra,
}

impl From<AlgebraElementJson> for AlgebraElement {
    fn from(j: AlgebraElementJson) -> Self {
        AlgebraElement::new(j.r, Complex64::new(j.z[0], j.z[1]))
    }
}

impl From<AlgebraElement> for AlgebraElementJson {
    fn from(w: AlgebraElement) -> Self {
        AlgebraElementJson {
            tag: AlgebraTag::Algebra,
            r: w.r,
            z: [w.z.re, w.z.im],
        }
    }
}

impl AlgebraElement {
    /// Generator of rotations.
    pub const X: AlgebraElement = AlgebraElement { r: 1.0, z: C_ZERO };
    /// Generator of translations along the real axis.
    pub const Y1: AlgebraElement = AlgebraElement { r: 0.0, z: C_ONE };
    /// Generator of translations along the imaginary axis.
    pub const Y2: AlgebraElement = AlgebraElement {
        r: 0.0,
        z: Complex64::new(0.0, 1.0),
    };

    /// Build `(r, z)`.
    pub const fn new(r: f64, z: Complex64) -> Self {
        AlgebraElement { r, z }
    }

    /// The zero element.
    pub const fn zero() -> Self {
        AlgebraElement::new(0.0, C_ZERO)
    }

    /// Lie bracket: the matrix commutator of the embeddings, mapped back:
    /// `[(r₁, z₁), (r₂, z₂)] = (0, i r₁ z₂ - i r₂ z₁)`.
    pub fn bracket(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(
            0.0,
            Complex64::new(0.0, 1.0) * (self.r * other.z - other.r * self.z),
        )
    }

    /// Exponential of `t · (r, z)` in closed form:
    /// `(t r, z (e^{irt} - 1)/(ir))` for `r ≠ 0` and `(0, t z)` at `r = 0`.
    ///
    /// Near `r = 0` the factor `(e^{irt} - 1)/(ir)` cancels catastrophically,
    /// so `|r| < 1e-12` switches to its three-term Taylor expansion.
    pub fn exp(&self, t: f64) -> GroupElement {
        let rt = self.r * t;
        let z = if self.r.abs() < 1e-12 {
            // (e^{irt} - 1)/(ir) = t (1 + (irt)/2 + (irt)²/6 + ...)
            let w = Complex64::new(0.0, rt);
            self.z * t * (C_ONE + w / 2.0 + w * w / 6.0)
        } else {
            self.z * (Complex64::new(0.0, rt).exp() - C_ONE) / Complex64::new(0.0, self.r)
        };
        GroupElement::new(rt, z)
    }

    /// The matrix `(ir, z; 0, 0)`; linear in `(r, z)`.
    pub fn embed(&self) -> Mat2 {
        Mat2::new(Complex64::new(0.0, self.r), self.z, C_ZERO, C_ZERO)
    }

    /// Euclidean size of the component vector, for test tolerances.
    pub fn abs_max(&self) -> f64 {
        self.r.abs().max(self.z.norm())
    }
}

impl std::ops::Add for AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.r + rhs.r, self.z + rhs.z)
    }
}

impl std::ops::Sub for AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.r - rhs.r, self.z - rhs.z)
    }
}

impl std::ops::Neg for AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        AlgebraElement::new(-self.r, -self.z)
    }
}

impl std::ops::Mul<f64> for AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, rhs: f64) -> AlgebraElement {
        AlgebraElement::new(self.r * rhs, self.z * rhs)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.z)
    }
}

/// A complex 2×2 matrix, row major: the embedding target for both the group
/// and its algebra, and the carrier of the series-exponential oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    entries: [[Complex64; 2]; 2],
}

impl Mat2 {
    /// Build from entries `(a, b; c, d)`.
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2 {
            entries: [[a, b], [c, d]],
        }
    }

    /// The identity matrix.
    pub const fn identity() -> Self {
        Mat2::new(C_ONE, C_ZERO, C_ZERO, C_ONE)
    }

    /// Entry at `(row, col)`.
    pub fn at(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    /// Matrix product.
    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let mut out = [[C_ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.entries[i][0] * other.entries[0][j]
                    + self.entries[i][1] * other.entries[1][j];
            }
        }
        Mat2 { entries: out }
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Mat2) -> Mat2 {
        let mut out = [[C_ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.entries[i][j] + other.entries[i][j];
            }
        }
        Mat2 { entries: out }
    }

    /// Entrywise scaling.
    pub fn scale(&self, s: f64) -> Mat2 {
        let mut out = self.entries;
        for row in &mut out {
            for cell in row.iter_mut() {
                *cell *= s;
            }
        }
        Mat2 { entries: out }
    }

    /// Matrix commutator `AB - BA`.
    pub fn commutator(&self, other: &Mat2) -> Mat2 {
        self.mul(other).add(&other.mul(self).scale(-1.0))
    }

    /// Largest entry modulus; the norm used for scaling decisions and
    /// for comparing matrices in tests.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry modulus of the difference.
    pub fn distance(&self, other: &Mat2) -> f64 {
        self.add(&other.scale(-1.0)).max_abs()
    }

    /// Matrix exponential by a 20-term Taylor series with scaling and
    /// squaring, `s = max(0, ⌈log₂ ‖A‖⌉)`.
    ///
    /// Fully independent of the closed-form group exponential; used as the
    /// oracle in the group checks.
    pub fn expm(&self) -> Mat2 {
        let norm = self.max_abs();
        let s = if norm > 0.0 {
            norm.log2().ceil().max(0.0) as u32
        } else {
            0
        };
        let scaled = self.scale(0.5f64.powi(s as i32));
        let mut term = Mat2::identity();
        let mut sum = Mat2::identity();
        for k in 1..=20 {
            term = term.mul(&scaled).scale(1.0 / k as f64);
            sum = sum.add(&term);
        }
        for _ in 0..s {
            sum = sum.mul(&sum);
        }
        sum
    }
}
