//! The band-limited spectral model: coefficients, sampling, quadrature, and
//! the circle operators T, S₁, S₂, S.
//!
//! Everything spectral in this crate is cross-checked against the trapezoid
//! rule on uniform grids, which integrates band-limited functions exactly;
//! this example shows that oracle in action.
//!
//! ```bash
//! cargo run --example spectral_model
//! ```

use breitenberger::circle::{
    analyze, apply_s, apply_s1, apply_s2, apply_t, inner, quad_inner, synthesize, CircleFunction,
};
use num_complex::Complex64;

fn main() {
    let c = Complex64::new;

    // f = 1 + e^{iθ} + (1/2) e^{2iθ} on the band [0, 2].
    let f = CircleFunction::new(0, vec![c(1.0, 0.0), c(1.0, 0.0), c(0.5, 0.0)]);
    println!(
        "f on band [{}, {}], norm^2 = {}",
        f.n_min(),
        f.n_max(),
        f.norm_sq()
    );

    println!("\n# synthesis / analysis round trip on 16 points");
    let grid = synthesize(&f, 16).unwrap();
    let samples: Vec<String> = grid.values()[..4]
        .iter()
        .map(|v| format!("{v:.4}"))
        .collect();
    println!("first samples: {}", samples.join(", "));
    let back = analyze(&grid, f.n_min(), f.n_max()).unwrap();
    println!("round-trip defect: {:.3e}", (&back - &f).norm());

    println!("\n# Parseval: coefficient inner product vs trapezoid rule");
    let spectral = inner(&f, &f);
    let quadrature = quad_inner(&grid, &grid).unwrap();
    println!("sum of |c_n|^2        = {spectral:.15}");
    println!("(1/2pi) int |f|^2 dθ  = {quadrature:.15}");

    println!("\n# the four circle operators");
    let tf = apply_t(&f);
    println!(
        "T f  (c_n -> n c_n):      band [{}, {}]",
        tf.n_min(),
        tf.n_max()
    );
    let s1f = apply_s1(&f);
    println!(
        "S1 f (-cos θ · f):        band [{}, {}]",
        s1f.n_min(),
        s1f.n_max()
    );
    let s2f = apply_s2(&f);
    println!(
        "S2 f (-sin θ · f):        band [{}, {}]",
        s2f.n_min(),
        s2f.n_max()
    );
    let sf = apply_s(&f);
    println!(
        "S f  (-e^(iθ) · f):       band [{}, {}]",
        sf.n_min(),
        sf.n_max()
    );

    println!("\n# the identities behind the combined inequality");
    println!("|S f|^2          = {:.15}", sf.norm_sq());
    println!("|S1 f|^2+|S2 f|^2 = {:.15}", s1f.norm_sq() + s2f.norm_sq());
    println!("|f|^2            = {:.15}", f.norm_sq());
    let p1 = inner(&s1f, &f);
    let p2 = inner(&s2f, &f);
    let pairing = inner(&sf, &f);
    println!("<S1 f, f> = {p1:.15} (real)");
    println!("<S2 f, f> = {p2:.15} (real)");
    println!(
        "|<S f, f>|^2 = {:.15} vs sum of squares {:.15}",
        pairing.norm_sqr(),
        p1.re * p1.re + p2.re * p2.re
    );
}
