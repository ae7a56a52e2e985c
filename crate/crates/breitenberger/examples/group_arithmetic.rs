//! Arithmetic in the planar motion group and its Lie algebra.
//!
//! Multiplies and inverts group elements, evaluates the closed-form
//! exponential against the series oracle on the matrix embedding, and prints
//! the commutator table of the distinguished basis.
//!
//! ```bash
//! cargo run --example group_arithmetic
//! ```

use breitenberger::{AlgebraElement, GroupElement, Mat2};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

fn main() {
    let c = Complex64::new;

    println!("# group law and inverse");
    let quarter_turn = GroupElement::new(FRAC_PI_2, c(0.0, 0.0));
    let shift = GroupElement::new(0.0, c(1.0, 0.0));
    let composed = quarter_turn.multiply(&shift);
    println!(
        "(pi/2, 0) * (0, 1)      = ({:.6}, {:.6})",
        composed.r, composed.z
    );
    let cancel = composed.multiply(&composed.inverse());
    println!(
        "g * g^-1 distance from e = {:.3e}",
        cancel.embed().distance(&Mat2::identity())
    );

    println!("\n# commutator table");
    use AlgebraElement as A;
    for (label, value, reference) in [
        ("[X, Y1]", A::X.bracket(&A::Y1), A::Y2),
        ("[X, Y2]", A::X.bracket(&A::Y2), -A::Y1),
        ("[Y1, Y2]", A::Y1.bracket(&A::Y2), A::zero()),
    ] {
        println!(
            "{label} = {value}   (defect {:.1e})",
            (value - reference).abs_max()
        );
    }

    println!("\n# one-parameter subgroups");
    for (name, w) in [("X", A::X), ("Y1", A::Y1), ("Y2", A::Y2)] {
        let g = w.exp(0.8);
        println!("exp(0.8 {name}) = ({:.6}, {:.6})", g.r, g.z);
    }
    // A mixed element: exp((1,1), pi) lands at (pi, 2i).
    let mixed = AlgebraElement::new(1.0, c(1.0, 0.0));
    let g = mixed.exp(PI);
    println!("exp(pi (1,1)) = ({:.6}, {:.6})", g.r, g.z);

    println!("\n# closed form vs series exponential on the embedding");
    let mut worst = 0.0f64;
    for k in 0..20 {
        let t = -3.0 + 0.3 * k as f64;
        let w = AlgebraElement::new(1.3, c(-0.7, 0.4));
        let defect = w.exp(t).embed().distance(&w.embed().scale(t).expm());
        worst = worst.max(defect);
    }
    println!("worst defect over t in [-3, 3]: {worst:.3e}");
}
