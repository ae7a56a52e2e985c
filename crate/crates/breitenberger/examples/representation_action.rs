//! The unitary action of the motion group on band-limited circle functions.
//!
//! Shows the rotation twist on single modes, the phase-factor multiplier
//! coefficients (whose moduli are Bessel values), and the preservation of
//! the norm under random group elements.
//!
//! ```bash
//! cargo run --example representation_action
//! ```

use breitenberger::circle::{random_function, CircleFunction};
use breitenberger::rep::{act, multiplier_coeffs, RepConfig};
use breitenberger::GroupElement;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let c = Complex64::new;
    let cfg = RepConfig::default();

    println!("# rotation twists each mode by e^(-inr)");
    let r = 1.2;
    for n in [-2i64, 0, 3] {
        let out = act(
            &cfg,
            &GroupElement::new(r, c(0.0, 0.0)),
            &CircleFunction::basis(n),
        );
        println!("mode {n:+}: coefficient -> {:.6}", out.coeff(n));
    }

    println!("\n# phase multiplier for z = 1 (moduli are |J_k(1)|)");
    let m = multiplier_coeffs(c(1.0, 0.0), -6, 6);
    for (k, coeff) in m.modes() {
        println!(
            "k = {k:+}: {:+.12} {:+.12}i   |m_k| = {:.3e}",
            coeff.re,
            coeff.im,
            coeff.norm()
        );
    }

    println!("\n# translation acting on the constant function");
    let one = CircleFunction::constant(c(1.0, 0.0));
    let moved = act(&cfg, &GroupElement::new(0.0, c(1.0, 0.0)), &one);
    println!(
        "band [{}, {}], norm {:.12} (input norm 1)",
        moved.n_min(),
        moved.n_max(),
        moved.norm()
    );

    println!("\n# unitarity on random elements and functions");
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for _ in 0..25 {
        let g = GroupElement::new(
            rng.random_range(-3.0..3.0),
            c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
        );
        let f = random_function(rng.random_range(1..=12), &mut rng);
        let defect = (act(&cfg, &g, &f).norm() - f.norm()).abs() / f.norm();
        worst = worst.max(defect);
    }
    println!("worst relative norm defect over 25 draws: {worst:.3e}");

    println!("\n# homomorphism: act(g1, act(g2, f)) vs act(g1 g2, f)");
    let g1 = GroupElement::new(0.7, c(0.9, -0.3));
    let g2 = GroupElement::new(-1.1, c(-0.2, 1.4));
    let f = random_function(6, &mut rng);
    let composite = act(&cfg, &g1, &act(&cfg, &g2, &f));
    let direct = act(&cfg, &g1.multiply(&g2), &f);
    println!(
        "defect {:.3e} on bands [{}, {}] / [{}, {}]",
        (&composite - &direct).norm(),
        composite.n_min(),
        composite.n_max(),
        direct.n_min(),
        direct.n_max()
    );
}
