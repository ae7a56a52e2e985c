//! The derived (infinitesimal) action and its finite-difference validation.
//!
//! The generators act as -f', i cos θ f, and i sin θ f; the circle operators
//! are T = iπ(X), S₁ = iπ(Y₁), S₂ = iπ(Y₂). The difference quotient
//! (π(exp tW)f - f)/t converges to the derived action at first order, and
//! the measured slope of the error against t confirms it.
//!
//! ```bash
//! cargo run --example derived_operators
//! ```

use breitenberger::circle::{apply_s1, apply_s2, apply_t, random_function, CircleFunction};
use breitenberger::group::AlgebraElement;
use breitenberger::rep::{derived, fd_convergence_order, fd_generator, RepConfig};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let c = Complex64::new;
    let cfg = RepConfig::default();
    let one = CircleFunction::constant(c(1.0, 0.0));

    println!("# derived action on the constant function");
    for (name, w) in [
        ("X", AlgebraElement::X),
        ("Y1", AlgebraElement::Y1),
        ("Y2", AlgebraElement::Y2),
    ] {
        let out = derived(&cfg, &w, &one);
        let coeffs: Vec<String> = out
            .modes()
            .map(|(n, v)| format!("c_{n} = {v:.3}"))
            .collect();
        println!("pi({name}) 1 : {}", coeffs.join(", "));
    }

    println!("\n# circle operators recovered as i * derived action");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = random_function(5, &mut rng);
    let i = c(0.0, 1.0);
    for (name, op, w) in [
        ("T ", apply_t(&f), AlgebraElement::X),
        ("S1", apply_s1(&f), AlgebraElement::Y1),
        ("S2", apply_s2(&f), AlgebraElement::Y2),
    ] {
        let defect = (&op - &(&derived(&cfg, &w, &f) * i)).norm();
        println!("{name} = i pi(.)  defect {defect:.1e}");
    }

    println!("\n# forward-difference error against step size");
    println!("{:>10} {:>14} {:>14} {:>14}", "t", "X", "Y1", "Y2");
    for t in [1e-1, 1e-2, 1e-3, 1e-4] {
        let mut row = format!("{t:>10.0e}");
        for w in [AlgebraElement::X, AlgebraElement::Y1, AlgebraElement::Y2] {
            let fd = fd_generator(&cfg, &w, &f, t).unwrap();
            let err = (&fd - &derived(&cfg, &w, &f)).norm();
            row.push_str(&format!(" {err:>14.6e}"));
        }
        println!("{row}");
    }

    println!("\n# measured convergence orders (expect 1.0)");
    let steps = [1e-2, 1e-3, 1e-4];
    for (name, w) in [
        ("X", AlgebraElement::X),
        ("Y1", AlgebraElement::Y1),
        ("Y2", AlgebraElement::Y2),
    ] {
        let slope = fd_convergence_order(&cfg, &w, &f, &steps);
        println!("{name}: {slope:.4}");
    }
}
