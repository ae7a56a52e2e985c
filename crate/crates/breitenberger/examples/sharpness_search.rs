//! Searching for near-extremal functions of the combined inequality.
//!
//! On the band [-1, 1] with the derivative floor m the constrained maximum
//! of ρ(f) = |⟨Sf,f⟩|²/(4‖f‖²‖Tf‖²) is (1 - m²)/2, reached by the
//! (t, 1, t) family at the feasibility boundary. The search recovers it and
//! the trace shows the monotone ascent.
//!
//! ```bash
//! cargo run --example sharpness_search
//! ```

use breitenberger::extremal::OptProblem;
use breitenberger::uncertainty::breitenberger as combined_report;

fn main() {
    let problem = OptProblem {
        band_halfwidth: 1,
        min_t_norm: 0.3,
        seed: 7,
        ..OptProblem::default()
    };
    let m = problem.min_t_norm;
    println!(
        "band [-1, 1], floor m = {m}: closed-form boundary value (1 - m^2)/2 = {:.9}",
        (1.0 - m * m) / 2.0
    );

    let trace = problem.maximize().unwrap();
    println!(
        "\n{:>6} {:>16} {:>12} {:>10}",
        "iter", "objective", "grad norm", "step"
    );
    let stride = (trace.iterations.len() / 12).max(1);
    for rec in trace.iterations.iter().step_by(stride) {
        println!(
            "{:>6} {:>16.12} {:>12.3e} {:>10.3e}",
            rec.iter, rec.objective, rec.grad_norm, rec.step
        );
    }
    let last = trace.iterations.last().unwrap();
    println!(
        "{:>6} {:>16.12} {:>12.3e} {:>10.3e}",
        last.iter, last.objective, last.grad_norm, last.step
    );

    println!(
        "\nfinal ratio {:.12} after {} accepted steps (converged: {})",
        trace.final_ratio,
        trace.iterations.len() - 1,
        trace.converged
    );
    println!("final coefficients on [-1, 1]:");
    for (n, c) in trace.final_function.modes() {
        println!("  c_{n:+} = {c:.9}");
    }

    let report = combined_report(&trace.final_function).unwrap();
    println!(
        "combined inequality at the final iterate: lhs {:.9e}, rhs {:.9e}, slack {:.3e}",
        report.lhs, report.rhs, report.slack
    );

    // The same search on a wider band: the floor still pins the maximum.
    for n in [2, 4] {
        let wide = OptProblem {
            band_halfwidth: n,
            seed: 11,
            max_iters: 5_000,
            ..OptProblem::default()
        };
        let trace = wide.maximize().unwrap();
        println!(
            "band [-{n}, {n}]: final ratio {:.9} ({} steps)",
            trace.final_ratio,
            trace.iterations.len() - 1
        );
    }
}
