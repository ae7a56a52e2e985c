//! Command-line front end: verification suites, group checks, optimization
//! runs, and report merging, all driven by JSON inputs and emitting JSON/CSV.
//!
//! Exit codes: `0` success, `1` configuration/I-O/parse errors, `2` a check
//! or inequality violated its tolerance, `3` infeasible optimization start.
//! Human-readable messages go to stderr; stdout stays silent unless
//! `verbose` is set.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::circle::{make_family, random_function, CircleFunction, Family};
use crate::error::{Error, Result};
use crate::extremal::OptProblem;
use crate::group::{AlgebraElement, GroupElement, Mat2};
use crate::rep::{act, derived, fd_convergence_order, RepConfig};
use crate::uncertainty::{breitenberger, rauhut_pair, up_general, UpReport};

/// Which command to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Evaluate the inequality suite on configured functions.
    Verify,
    /// Run the group/representation property suites.
    GroupCheck,
    /// Run the sharpness optimizer.
    Maximize,
    /// Merge verify outputs into one summary CSV.
    Report,
}

/// Parsed run configuration, independent of the flag parser.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Subcommand.
    pub command: Command,
    /// Input JSON paths (functions, problems, or prior outputs).
    pub inputs: Vec<PathBuf>,
    /// Output stem; commands write `<stem>.json` / `<stem>.csv`.
    pub output: Option<PathBuf>,
    /// Tolerance override (slack bound, check tolerances, optimizer stop).
    pub tol: Option<f64>,
    /// RNG seed for random draws.
    pub seed: u64,
    /// Function family name for `verify`.
    pub family: Option<String>,
    /// Family or problem parameters.
    pub params: Vec<f64>,
    /// Print progress to stdout.
    pub verbose: bool,
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if let Some(tol) = self.tol {
            if tol.is_nan() || tol <= 0.0 {
                return Err(Error::Config(format!("tol must be positive, got {tol}")));
            }
        }
        if let Some(out) = &self.output {
            for input in &self.inputs {
                if input == out {
                    return Err(Error::Config(format!(
                        "input and output paths must be distinct: {}",
                        out.display()
                    )));
                }
            }
        }
        Ok(())
    }

    fn output_stem(&self) -> Result<&Path> {
        self.output
            .as_deref()
            .ok_or_else(|| Error::Config("--output is required for this command".into()))
    }
}

/// Dispatch a configuration and map errors to the exit-code contract.
pub fn run(cfg: &RunConfig) -> i32 {
    let outcome = cfg.validate().and_then(|()| match cfg.command {
        Command::Verify => cmd_verify(cfg),
        Command::GroupCheck => cmd_group_check(cfg),
        Command::Maximize => cmd_maximize(cfg),
        Command::Report => cmd_report(cfg),
    });
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::InfeasibleStart(_) => 3,
                _ => 1,
            }
        }
    }
}

/// One inequality evaluation on one function, flattened for JSON and CSV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyRow {
    /// Family name (or input file stem).
    pub family: String,
    /// Family parameter (x-axis of the plot-ready output).
    pub param: f64,
    /// Index of the function within its family sweep.
    pub index: usize,
    /// Inequality label.
    pub label: String,
    /// Pairing side.
    pub lhs: f64,
    /// Product side.
    pub rhs: f64,
    /// `rhs - lhs`.
    pub slack: f64,
    /// `slack / max(rhs, ε)` (y-axis of the plot-ready output).
    pub relative_slack: f64,
    /// True when `lhs = rhs = 0`.
    pub degenerate: bool,
}

impl VerifyRow {
    fn new(family: &str, param: f64, index: usize, report: UpReport) -> Self {
        VerifyRow {
            family: family.to_string(),
            param,
            index,
            label: report.label,
            lhs: report.lhs,
            rhs: report.rhs,
            slack: report.slack,
            relative_slack: report.relative_slack,
            degenerate: report.degenerate,
        }
    }
}

/// The nine standard reports for one function: the combined inequality, the
/// two specializations, and the six ordered basis pairs.
pub fn standard_reports(f: &CircleFunction) -> Result<Vec<UpReport>> {
    let mut reports = vec![breitenberger(f)?];
    let (r1, r2) = rauhut_pair(f)?;
    reports.push(r1);
    reports.push(r2);
    let basis = [
        ("X", AlgebraElement::X),
        ("Y1", AlgebraElement::Y1),
        ("Y2", AlgebraElement::Y2),
    ];
    for (name1, w1) in &basis {
        for (name2, w2) in &basis {
            if name1 != name2 {
                reports
                    .push(up_general(f, w1, w2)?.with_label(format!("general({name1},{name2})")));
            }
        }
    }
    Ok(reports)
}

fn family_functions(cfg: &RunConfig) -> Result<Vec<(String, f64, usize, CircleFunction)>> {
    let name = cfg.family.as_deref().unwrap();
    let params = &cfg.params;
    let need = |ok: bool, what: &str| -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("--params: {what}")))
        }
    };
    let as_count = |p: f64, what: &str| -> Result<u32> {
        if p >= 0.0 && p.fract() == 0.0 && p <= u32::MAX as f64 {
            Ok(p as u32)
        } else {
            Err(Error::Config(format!(
                "--params: {what} must be a nonnegative integer, got {p}"
            )))
        }
    };
    let mut out = Vec::new();
    match name {
        "dirichlet" => {
            need(
                !params.is_empty(),
                "dirichlet needs at least one window size",
            )?;
            for (index, &p) in params.iter().enumerate() {
                let k = as_count(p, "dirichlet window size")?;
                out.push((
                    name.to_string(),
                    p,
                    index,
                    make_family(&Family::Dirichlet { k })?,
                ));
            }
        }
        "von_mises" => {
            need(
                !params.is_empty(),
                "von_mises needs at least one concentration",
            )?;
            for (index, &lambda) in params.iter().enumerate() {
                out.push((
                    name.to_string(),
                    lambda,
                    index,
                    make_family(&Family::VonMises { lambda })?,
                ));
            }
        }
        "shifted_packet" => {
            need(
                !params.is_empty() && params.len().is_multiple_of(2),
                "shifted_packet needs (center, sigma) pairs",
            )?;
            for (index, pair) in params.chunks(2).enumerate() {
                let center = pair[0];
                if center.fract() != 0.0 {
                    return Err(Error::Config(format!(
                        "--params: packet center must be an integer, got {center}"
                    )));
                }
                out.push((
                    name.to_string(),
                    center,
                    index,
                    make_family(&Family::ShiftedPacket {
                        center: center as i64,
                        sigma: pair[1],
                    })?,
                ));
            }
        }
        "random" => {
            need(
                !params.is_empty() && params.len() <= 2,
                "random needs a band half-width and an optional count",
            )?;
            let n = as_count(params[0], "band half-width")?;
            let count = if params.len() == 2 {
                as_count(params[1], "count")?.max(1)
            } else {
                1
            };
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for index in 0..count as usize {
                out.push((
                    name.to_string(),
                    params[0],
                    index,
                    random_function(n, &mut rng),
                ));
            }
        }
        other => {
            return Err(Error::Config(format!(
                "unknown family {other:?}; expected dirichlet | von_mises | shifted_packet | random"
            )))
        }
    }
    Ok(out)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let file = File::open(path)
        .map_err(|e| Error::Config(format!("cannot open {}: {e}", path.display())))?;
    serde_json::from_reader(BufReader::new(file))
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn input_functions(path: &Path) -> Result<Vec<(String, f64, usize, CircleFunction)>> {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    // A file holds either a single function or an array of functions.
    let functions: Vec<CircleFunction> = match read_json::<Vec<CircleFunction>>(path) {
        Ok(list) => list,
        Err(_) => vec![read_json::<CircleFunction>(path)?],
    };
    Ok(functions
        .into_iter()
        .enumerate()
        .map(|(index, f)| (stem.clone(), index as f64, index, f))
        .collect())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    let mut writer = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut writer, value)?;
    writer.write_all(b"\n")?;
    writer.flush()?;
    Ok(())
}

fn csv_writer(path: &Path) -> Result<csv::Writer<BufWriter<File>>> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    Ok(csv::Writer::from_writer(BufWriter::new(File::create(
        path,
    )?)))
}

fn write_verify_csv(path: &Path, rows: &[VerifyRow]) -> Result<()> {
    let mut wtr = csv_writer(path)?;
    for row in rows {
        wtr.serialize(row)?;
    }
    wtr.flush()?;
    Ok(())
}

/// `verify`: run the nine standard reports over every configured function;
/// write `<stem>.json` and `<stem>.csv`; exit 2 if any slack falls below
/// `-tol·max(1, rhs)`.
pub fn cmd_verify(cfg: &RunConfig) -> Result<i32> {
    let stem = cfg.output_stem()?.to_path_buf();
    let tol = cfg.tol.unwrap_or(1e-12);

    let mut functions = Vec::new();
    for path in &cfg.inputs {
        functions.extend(input_functions(path)?);
    }
    if cfg.family.is_some() {
        functions.extend(family_functions(cfg)?);
    }
    if functions.is_empty() {
        return Err(Error::Config(
            "verify needs --family or at least one --input file".into(),
        ));
    }

    let mut rows = Vec::new();
    let mut violations = 0usize;
    for (family, param, index, f) in &functions {
        for report in standard_reports(f)? {
            if report.slack < -tol * report.rhs.max(1.0) {
                violations += 1;
                eprintln!(
                    "violation: {family}[{index}] {}: slack {} (rhs {})",
                    report.label, report.slack, report.rhs
                );
            }
            rows.push(VerifyRow::new(family, *param, *index, report));
        }
    }

    write_json(&stem.with_extension("json"), &rows)?;
    write_verify_csv(&stem.with_extension("csv"), &rows)?;
    if cfg.verbose {
        println!(
            "verify: {} functions, {} reports, {} violations",
            functions.len(),
            rows.len(),
            violations
        );
    }
    Ok(if violations == 0 { 0 } else { 2 })
}

/// One row of the group-check CSV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRow {
    /// Check name.
    pub check: String,
    /// Worst observed error.
    pub max_error: f64,
    /// Tolerance the error is held against.
    pub tolerance: f64,
    /// `max_error <= tolerance`.
    pub pass: bool,
}

fn random_group_in(rng: &mut ChaCha8Rng, z_max: f64) -> GroupElement {
    let half = z_max * std::f64::consts::FRAC_1_SQRT_2;
    GroupElement::new(
        rng.random_range(-3.0..3.0),
        Complex64::new(rng.random_range(-half..half), rng.random_range(-half..half)),
    )
}

fn random_algebra_in(rng: &mut ChaCha8Rng) -> AlgebraElement {
    AlgebraElement::new(
        rng.random_range(-2.0..2.0),
        Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
    )
}

fn group_checks(seed: u64) -> Vec<(String, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rep = RepConfig::default();
    let mut checks: Vec<(String, f64, f64)> = Vec::new();
    let mut push = |name: &str, err: f64, tol: f64| checks.push((name.into(), err, tol));

    // Commutator table on the integer basis: exactly zero.
    {
        use AlgebraElement as A;
        let err = (A::X.bracket(&A::Y1) - A::Y2)
            .abs_max()
            .max((A::X.bracket(&A::Y2) + A::Y1).abs_max())
            .max(A::Y1.bracket(&A::Y2).abs_max());
        push("bracket_table", err, 0.0);
    }

    // Basis exponentials against their closed matrix forms: exact.
    {
        use AlgebraElement as A;
        let mut err = 0.0f64;
        for t in [-2.0, -0.5, 0.0, 1.0, 2.5] {
            let gx = A::X.exp(t);
            err = err.max((gx.r - t).abs()).max(gx.z.norm());
            let gy1 = A::Y1.exp(t);
            err = err
                .max(gy1.r.abs())
                .max((gy1.z - Complex64::new(t, 0.0)).norm());
            let gy2 = A::Y2.exp(t);
            err = err
                .max(gy2.r.abs())
                .max((gy2.z - Complex64::new(0.0, t)).norm());
        }
        push("exp_basis_forms", err, 0.0);
    }

    // General exponential against the series oracle on the embedding.
    {
        let mut err = 0.0f64;
        for _ in 0..100 {
            let w = random_algebra_in(&mut rng);
            let t = rng.random_range(-3.0..3.0);
            err = err.max(w.exp(t).embed().distance(&w.embed().scale(t).expm()));
        }
        push("exp_vs_series", err, 1e-12);
    }

    // Group axioms through the matrix embedding.
    {
        let mut assoc = 0.0f64;
        let mut inverse = 0.0f64;
        let mut one_param = 0.0f64;
        for _ in 0..100 {
            let g1 = random_group_in(&mut rng, 3.0);
            let g2 = random_group_in(&mut rng, 3.0);
            let g3 = random_group_in(&mut rng, 3.0);
            assoc = assoc.max(
                g1.multiply(&g2)
                    .multiply(&g3)
                    .embed()
                    .distance(&g1.multiply(&g2.multiply(&g3)).embed()),
            );
            inverse = inverse.max(
                g1.multiply(&g1.inverse())
                    .embed()
                    .distance(&Mat2::identity()),
            );
            let w = random_algebra_in(&mut rng);
            let (s, t) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
            one_param = one_param.max(
                w.exp(s)
                    .multiply(&w.exp(t))
                    .embed()
                    .distance(&w.exp(s + t).embed()),
            );
        }
        push("associativity", assoc, 1e-13);
        push("inverse", inverse, 1e-14);
        push("one_parameter", one_param, 1e-13);
    }

    // Bracket against the matrix commutator.
    {
        let mut err = 0.0f64;
        for _ in 0..100 {
            let w1 = random_algebra_in(&mut rng);
            let w2 = random_algebra_in(&mut rng);
            err = err.max(
                w1.bracket(&w2)
                    .embed()
                    .distance(&w1.embed().commutator(&w2.embed())),
            );
        }
        push("embed_bracket", err, 1e-14);
    }

    // Representation: unitarity and the homomorphism property.
    {
        let mut unitarity = 0.0f64;
        for _ in 0..50 {
            let g = random_group_in(&mut rng, 4.0);
            let f = random_function(rng.random_range(1..=16), &mut rng);
            unitarity = unitarity.max((act(&rep, &g, &f).norm() - f.norm()).abs() / f.norm());
        }
        push("unitarity", unitarity, 1e-10);

        let mut homomorphism = 0.0f64;
        for _ in 0..50 {
            let g1 = random_group_in(&mut rng, 3.0);
            let g2 = random_group_in(&mut rng, 3.0);
            let f = random_function(rng.random_range(1..=16), &mut rng);
            let composite = act(&rep, &g1, &act(&rep, &g2, &f));
            let direct = act(&rep, &g1.multiply(&g2), &f);
            homomorphism = homomorphism.max((&composite - &direct).norm() / f.norm());
        }
        push("homomorphism", homomorphism, 1e-9);
    }

    // Derived representation: commutator identity and linearity.
    {
        use AlgebraElement as A;
        let mut commutator = 0.0f64;
        let mut linearity = 0.0f64;
        for _ in 0..20 {
            let f = random_function(rng.random_range(1..=12), &mut rng);
            let d = |w: &A, g: &CircleFunction| derived(&rep, w, g);
            let lhs1 = &d(&A::X, &d(&A::Y1, &f)) - &d(&A::Y1, &d(&A::X, &f));
            commutator = commutator.max((&lhs1 - &d(&A::Y2, &f)).norm() / f.norm());
            let lhs2 = &d(&A::X, &d(&A::Y2, &f)) - &d(&A::Y2, &d(&A::X, &f));
            commutator = commutator.max((&lhs2 + &d(&A::Y1, &f)).norm() / f.norm());

            let w1 = random_algebra_in(&mut rng);
            let w2 = random_algebra_in(&mut rng);
            let (alpha, beta) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
            let combined = d(&(w1 * alpha + w2 * beta), &f);
            let split = &(&d(&w1, &f) * alpha) + &(&d(&w2, &f) * beta);
            linearity = linearity.max((&combined - &split).norm() / f.norm());
        }
        push("derived_commutator", commutator, 1e-12);
        push("derived_linearity", linearity, 1e-13);
    }

    // Finite-difference generator converges at first order.
    {
        use AlgebraElement as A;
        let f = random_function(4, &mut rng);
        let steps = [1e-2, 1e-3, 1e-4];
        for (name, w) in [
            ("fd_order_x", A::X),
            ("fd_order_y1", A::Y1),
            ("fd_order_y2", A::Y2),
        ] {
            let slope = fd_convergence_order(&rep, &w, &f, &steps);
            push(name, (slope - 1.0).abs(), 0.1);
        }
    }

    checks
}

/// `group-check`: run the group/representation property suites, write the
/// per-check CSV, exit 2 if any check exceeds its tolerance.
pub fn cmd_group_check(cfg: &RunConfig) -> Result<i32> {
    let stem = cfg.output_stem()?.to_path_buf();
    let rows: Vec<CheckRow> = group_checks(cfg.seed)
        .into_iter()
        .map(|(check, max_error, default_tol)| {
            let tolerance = cfg.tol.unwrap_or(default_tol);
            CheckRow {
                check,
                max_error,
                tolerance,
                pass: max_error <= tolerance,
            }
        })
        .collect();

    let mut wtr = csv_writer(&stem.with_extension("csv"))?;
    for row in &rows {
        wtr.serialize(row)?;
    }
    wtr.flush()?;
    drop(wtr);

    let failures = rows.iter().filter(|r| !r.pass).count();
    for row in rows.iter().filter(|r| !r.pass) {
        eprintln!(
            "check failed: {} (max error {} > tolerance {})",
            row.check, row.max_error, row.tolerance
        );
    }
    if cfg.verbose {
        println!("group-check: {} checks, {} failures", rows.len(), failures);
    }
    Ok(if failures == 0 { 0 } else { 2 })
}

/// `maximize`: run the sharpness search, write the trace as JSON and CSV.
///
/// The problem comes from an `--input` JSON file when given, otherwise from
/// `--params n[,min_t_norm]` plus `--seed`/`--tol`.
pub fn cmd_maximize(cfg: &RunConfig) -> Result<i32> {
    let stem = cfg.output_stem()?.to_path_buf();
    let problem = if let Some(path) = cfg.inputs.first() {
        read_json::<OptProblem>(path)?
    } else {
        let mut p = OptProblem {
            seed: cfg.seed,
            ..OptProblem::default()
        };
        if let Some(tol) = cfg.tol {
            p.tol = tol;
        }
        if !cfg.params.is_empty() {
            if cfg.params.len() > 2 || cfg.params[0].fract() != 0.0 || cfg.params[0] < 1.0 {
                return Err(Error::Config(
                    "--params for maximize: band half-width (integer ≥ 1) and optional min_t_norm"
                        .into(),
                ));
            }
            p.band_halfwidth = cfg.params[0] as u32;
            if cfg.params.len() == 2 {
                p.min_t_norm = cfg.params[1];
            }
        }
        p
    };
    problem.validate()?;

    let trace = problem.maximize()?;
    write_json(&stem.with_extension("json"), &trace)?;
    let mut file = BufWriter::new(File::create(stem.with_extension("csv"))?);
    trace.write_csv(&mut file)?;
    file.flush()?;
    if cfg.verbose {
        println!(
            "maximize: {} steps, final ratio {}, converged {}",
            trace.iterations.len() - 1,
            trace.final_ratio,
            trace.converged
        );
    }
    Ok(0)
}

/// `report`: merge verify JSON outputs into one summary CSV sorted by
/// (family, inequality label), with the family parameter as the x column and
/// the relative slack as the y column.
pub fn cmd_report(cfg: &RunConfig) -> Result<i32> {
    let stem = cfg.output_stem()?.to_path_buf();
    if cfg.inputs.is_empty() {
        return Err(Error::Config(
            "report needs at least one --input file".into(),
        ));
    }
    let mut rows = Vec::new();
    for path in &cfg.inputs {
        rows.extend(read_json::<Vec<VerifyRow>>(path)?);
    }
    rows.sort_by(|a, b| {
        (&a.family, &a.label)
            .cmp(&(&b.family, &b.label))
            .then(a.param.total_cmp(&b.param))
            .then(a.index.cmp(&b.index))
    });
    write_verify_csv(&stem.with_extension("csv"), &rows)?;
    if cfg.verbose {
        println!(
            "report: {} rows from {} inputs",
            rows.len(),
            cfg.inputs.len()
        );
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config(command: Command, dir: &Path, stem: &str) -> RunConfig {
        RunConfig {
            command,
            inputs: vec![],
            output: Some(dir.join(stem)),
            tol: None,
            seed: 0,
            family: None,
            params: vec![],
            verbose: false,
        }
    }

    #[test]
    fn verify_dirichlet_zero_passes() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = base_config(Command::Verify, dir.path(), "dirichlet");
        cfg.family = Some("dirichlet".into());
        cfg.params = vec![0.0];
        assert_eq!(run(&cfg), 0);
        let rows: Vec<VerifyRow> =
            serde_json::from_reader(File::open(dir.path().join("dirichlet.json")).unwrap())
                .unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows
            .iter()
            .all(|r| r.degenerate || r.lhs == 0.0 || r.slack >= 0.0));
    }

    #[test]
    fn verify_random_sweep_row_count() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = base_config(Command::Verify, dir.path(), "random");
        cfg.family = Some("random".into());
        cfg.params = vec![16.0, 100.0];
        cfg.seed = 1;
        assert_eq!(run(&cfg), 0);
        let rows: Vec<VerifyRow> =
            serde_json::from_reader(File::open(dir.path().join("random.json")).unwrap()).unwrap();
        assert_eq!(rows.len(), 100 * 9);
    }

    #[test]
    fn verify_rejects_empty_coeffs_with_field_name() {
        let dir = tempfile::tempdir().unwrap();
        let input = dir.path().join("bad.json");
        std::fs::write(&input, r#"{"n_min": 0, "coeffs": []}"#).unwrap();
        let mut cfg = base_config(Command::Verify, dir.path(), "out");
        cfg.inputs = vec![input];
        assert_eq!(run(&cfg), 1);
    }

    #[test]
    fn verify_without_functions_is_a_config_error() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = base_config(Command::Verify, dir.path(), "out");
        assert_eq!(run(&cfg), 1);
    }

    #[test]
    fn group_check_default_passes_and_reports_exact_rows() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = base_config(Command::GroupCheck, dir.path(), "checks");
        assert_eq!(run(&cfg), 0);
        let text = std::fs::read_to_string(dir.path().join("checks.csv")).unwrap();
        let bracket_row = text
            .lines()
            .find(|l| l.starts_with("bracket_table"))
            .unwrap();
        assert!(bracket_row.contains("0.0,0.0,true"), "row: {bracket_row}");
        for name in ["fd_order_x", "fd_order_y1", "fd_order_y2"] {
            assert!(text.contains(name));
        }
    }

    #[test]
    fn group_check_unachievable_tolerance_fails() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = base_config(Command::GroupCheck, dir.path(), "checks");
        cfg.tol = Some(1e-30);
        assert_eq!(run(&cfg), 2);
    }

    #[test]
    fn maximize_default_band_reaches_boundary() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = base_config(Command::Maximize, dir.path(), "opt");
        cfg.params = vec![1.0];
        assert_eq!(run(&cfg), 0);
        let csv = std::fs::read_to_string(dir.path().join("opt.csv")).unwrap();
        let last = csv.lines().last().unwrap();
        let ratio: f64 = last.split(',').nth(1).unwrap().parse().unwrap();
        assert!(ratio >= 0.40, "final ratio {ratio}");
    }

    #[test]
    fn maximize_infeasible_floor_exits_3() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = base_config(Command::Maximize, dir.path(), "opt");
        cfg.params = vec![1.0, 100.0];
        assert_eq!(run(&cfg), 3);
    }

    #[test]
    fn maximize_same_seed_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg1 = base_config(Command::Maximize, dir.path(), "a");
        cfg1.seed = 9;
        let mut cfg2 = base_config(Command::Maximize, dir.path(), "b");
        cfg2.seed = 9;
        assert_eq!(run(&cfg1), 0);
        assert_eq!(run(&cfg2), 0);
        let a = std::fs::read(dir.path().join("a.csv")).unwrap();
        let b = std::fs::read(dir.path().join("b.csv")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn report_merges_and_counts_rows() {
        let dir = tempfile::tempdir().unwrap();
        for (stem, family, params) in [
            ("one", "dirichlet", vec![0.0, 1.0]),
            ("two", "von_mises", vec![0.5, 1.0, 2.0]),
        ] {
            let mut cfg = base_config(Command::Verify, dir.path(), stem);
            cfg.family = Some(family.into());
            cfg.params = params;
            assert_eq!(run(&cfg), 0);
        }
        let mut cfg = base_config(Command::Report, dir.path(), "summary");
        cfg.inputs = vec![dir.path().join("one.json"), dir.path().join("two.json")];
        assert_eq!(run(&cfg), 0);
        let text = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
        // Header plus (2 + 3 functions) × 9 reports.
        assert_eq!(text.lines().count(), 1 + (2 + 3) * 9);
        // Sorted by family then label.
        let families: Vec<&str> = text
            .lines()
            .skip(1)
            .map(|l| l.split(',').next().unwrap())
            .collect();
        let mut sorted = families.clone();
        sorted.sort();
        assert_eq!(families, sorted);
    }

    #[test]
    fn report_with_no_inputs_exits_1() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = base_config(Command::Report, dir.path(), "summary");
        assert_eq!(run(&cfg), 1);
    }

    #[test]
    fn distinct_path_invariant() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("same.json");
        std::fs::write(&path, "[]").unwrap();
        let mut cfg = base_config(Command::Report, dir.path(), "same.json");
        cfg.inputs = vec![path];
        assert_eq!(run(&cfg), 1);
    }
}
