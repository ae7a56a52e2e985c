//! Numerical realization of the circle uncertainty principle obtained from
//! the planar Euclidean motion group.
//!
//! The pieces fit together like this:
//!
//! * [`group`] — the motion group SE(2) as pairs `(r, z)` with its 2×2
//!   matrix embedding, the Lie algebra with basis `X`, `Y₁`, `Y₂`, bracket,
//!   and closed-form exponential (plus a series-exponential oracle).
//! * [`circle`] — band-limited functions on the circle, the normalized
//!   inner product, trapezoid quadrature as an independent oracle, and the
//!   operators `T = -i d/dθ`, `S₁ = -cos θ ·`, `S₂ = -sin θ ·`,
//!   `S = -e^{iθ} ·`.
//! * [`rep`] — the unitary action `π(r,z)f(s) = e^{i(z,s)} f(e^{-ir}s)` in
//!   coefficient space, its derived action `π(W)`, and a finite-difference
//!   generator for validating the derived operators.
//! * [`uncertainty`] — slack reports for
//!   `|⟨π([W₁,W₂])f,f⟩| ≤ 2‖π(W₁)f‖‖π(W₂)f‖`, its two circle
//!   specializations, and the combined bound `|⟨Sf,f⟩|² ≤ 4‖f‖²‖Tf‖²`.
//! * [`extremal`] — projected gradient ascent maximizing
//!   `|⟨Sf,f⟩|²/(4‖f‖²‖Tf‖²)` on a fixed band.
//! * [`cli`] — the `verify` / `group-check` / `maximize` / `report`
//!   commands behind the `breitenberger` binary.
//!
//! Start with the runnable examples (`cargo run --example uncertainty_reports`
//! and friends); each one exercises a single capability end to end.
//!
//! All types are immutable values and all operations are pure, so everything
//! here can be used concurrently without synchronization.

pub mod circle;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod group;
pub mod rep;
pub mod uncertainty;

pub use circle::{CircleFunction, Family, GridSamples};
pub use error::{Error, Result};
pub use extremal::{OptProblem, OptTrace};
pub use group::{AlgebraElement, GroupElement, Mat2};
pub use rep::RepConfig;
pub use uncertainty::UpReport;
