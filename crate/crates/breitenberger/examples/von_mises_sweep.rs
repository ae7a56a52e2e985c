//! Sweep of the von Mises concentration: how the relative slack of the
//! combined inequality trends as the function concentrates.
//!
//! The family e^{λ cos θ} is extremal for the first specialized inequality:
//! its position and frequency operators produce parallel vectors, so the
//! `rauhut1` rows of a full verify run carry zero slack at every λ.
//!
//! Emits a plot-ready CSV on stdout (the same columns the `verify` command
//! writes to disk).
//!
//! ```bash
//! cargo run --example von_mises_sweep > sweep.csv
//! ```

use breitenberger::circle::{make_family, Family};
use breitenberger::uncertainty::breitenberger as combined_report;

fn main() {
    println!("lambda,band_halfwidth,lhs,rhs,slack,relative_slack");
    for lambda in [0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0] {
        let f = make_family(&Family::VonMises { lambda }).unwrap();
        let report = combined_report(&f).unwrap();
        println!(
            "{lambda},{},{},{},{},{}",
            f.n_max(),
            report.lhs,
            report.rhs,
            report.slack,
            report.relative_slack
        );
    }
}
