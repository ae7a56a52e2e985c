//! Evaluating the uncertainty inequalities on concrete functions.
//!
//! Prints lhs/rhs/slack for the combined inequality
//! |⟨Sf,f⟩|² ≤ 4‖f‖²‖Tf‖², the two specializations it is derived from, and
//! the general inequality over every ordered basis pair.
//!
//! ```bash
//! cargo run --example uncertainty_reports
//! ```

use breitenberger::circle::{make_family, CircleFunction, Family};
use breitenberger::cli::standard_reports;
use breitenberger::uncertainty::breitenberger as combined_report;
use num_complex::Complex64;

fn main() {
    let c = Complex64::new;

    // The hand-checkable two-mode function: (lhs, rhs) = (1, 8).
    let two_modes = &CircleFunction::constant(c(1.0, 0.0)) + &CircleFunction::basis(1);
    let report = combined_report(&two_modes).unwrap();
    println!("# f = 1 + e^(i theta)");
    println!(
        "combined inequality: lhs = {:.12}, rhs = {:.12}, slack = {:.12}",
        report.lhs, report.rhs, report.slack
    );

    let functions: Vec<(&str, CircleFunction)> = vec![
        (
            "constant (degenerate)",
            make_family(&Family::Dirichlet { k: 0 }).unwrap(),
        ),
        (
            "dirichlet k = 3",
            make_family(&Family::Dirichlet { k: 3 }).unwrap(),
        ),
        (
            "von Mises lambda = 2",
            make_family(&Family::VonMises { lambda: 2.0 }).unwrap(),
        ),
        (
            "packet at mode 5, sigma = 1.5",
            make_family(&Family::ShiftedPacket {
                center: 5,
                sigma: 1.5,
            })
            .unwrap(),
        ),
        (
            "random band [-8, 8]",
            make_family(&Family::Random { n: 8, seed: 13 }).unwrap(),
        ),
    ];

    for (name, f) in &functions {
        println!("\n# {name}  (band [{}, {}])", f.n_min(), f.n_max());
        println!(
            "{:<16} {:>14} {:>14} {:>12} {:>11}",
            "inequality", "lhs", "rhs", "slack", "rel. slack"
        );
        for report in standard_reports(f).unwrap() {
            println!(
                "{:<16} {:>14.6e} {:>14.6e} {:>12.4e} {:>11.4}{}",
                report.label,
                report.lhs,
                report.rhs,
                report.slack,
                report.relative_slack,
                if report.degenerate {
                    "  (degenerate)"
                } else {
                    ""
                }
            );
        }
    }
}
