//! Command-line front end for the `cauchy-beta` library.
//!
//! Exit codes: 0 success, 1 failed verification or unconverged fit,
//! 2 usage and domain errors, 3 quadrature non-convergence in `eval` and
//! `tabulate`.

mod args;
pub mod format;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;

use cauchy_beta::rational::nearest_rational;
use cauchy_beta::verify::verify_family;
use cauchy_beta::{
    add1_coefficient, fit_quotient, pendant_closed, pendant_integral, Error, Family, FamilySpec, FitProblem,
    QuadConfig, QuotientClass,
};
use clap::Parser;

use crate::args::{Cli, Command, Method};
use crate::format::sig17;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NONCONVERGENCE: u8 = 3;

/// A command failure: exit code plus a one-line diagnostic.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    /// Maps a library error, sending numerical failures to `numeric_code`.
    fn from_error(e: Error, numeric_code: u8) -> Self {
        let code = if e.is_usage() { EXIT_USAGE } else { numeric_code };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval {
            family,
            args,
            method,
            tol,
        } => cmd_eval(&family, &args, method, tol, out),
        Command::Tabulate {
            family,
            ranges,
            method,
            tol,
            out: path,
        } => cmd_tabulate(&family, &ranges, method, tol, path.as_deref(), out),
        Command::Verify {
            family,
            arity,
            samples,
            seed,
            tol,
        } => cmd_verify(&family, arity, samples, seed, tol, out),
        Command::Coeff { k } => cmd_coeff(k, out),
        Command::Fit {
            target,
            class,
            grid,
            iters,
            tol,
            damping,
            out: path,
        } => cmd_fit(&target, &class, &grid, iters, tol, damping, path.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn parse_family(name: &str) -> Result<Family, Failure> {
    name.parse().map_err(|e: Error| Failure::usage(e.to_string()))
}

fn parse_real(s: &str, what: &str) -> Result<f64, Failure> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Failure::usage(format!("{what}: '{s}' is not a finite number")))
}

fn quad_config(tol: Option<f64>) -> Result<QuadConfig, Failure> {
    let config = match tol {
        Some(t) => QuadConfig::default().with_rel_tol(t),
        None => QuadConfig::default(),
    };
    config.validate().map_err(|e| Failure::usage(e.to_string()))?;
    Ok(config)
}

fn evaluate(spec: FamilySpec, point: &[f64], method: Method, config: &QuadConfig) -> Result<f64, Error> {
    match method {
        Method::Closed => pendant_closed(spec, point),
        Method::Quad => pendant_integral(spec, point, config).map(|r| r.value),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_FAIL,
        message: format!("write failed: {e}"),
    }
}

fn cmd_eval(family: &str, args: &str, method: Method, tol: Option<f64>, out: &mut dyn Write) -> CmdResult {
    let family = parse_family(family)?;
    let point = args
        .split(',')
        .map(|s| parse_real(s, "--args"))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = FamilySpec::new(family, point.len()).map_err(|e| Failure::usage(e.to_string()))?;
    let config = quad_config(tol)?;
    let value = evaluate(spec, &point, method, &config).map_err(|e| Failure::from_error(e, EXIT_NONCONVERGENCE))?;
    writeln!(out, "{}", sig17(value)).map_err(io_failure)?;
    Ok(EXIT_OK)
}

/// Lattice values of one axis from `NAME=START:STOP:STEP`.
fn parse_range(spec: &str) -> Result<Vec<f64>, Failure> {
    let body = spec.split_once('=').map_or(spec, |(_, b)| b);
    let parts: Vec<&str> = body.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(Failure::usage(format!("range '{spec}' must be NAME=START:STOP:STEP")));
    };
    let (start, stop, step) = (
        parse_real(start, "range")?,
        parse_real(stop, "range")?,
        parse_real(step, "range")?,
    );
    if step <= 0.0 {
        return Err(Failure::usage(format!("range '{spec}': step must be positive")));
    }
    if start >= stop {
        return Err(Failure::usage(format!("range '{spec}': start must be below stop")));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

fn cmd_tabulate(
    family: &str,
    ranges: &[String],
    method: Method,
    tol: Option<f64>,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let family = parse_family(family)?;
    let axes = ranges.iter().map(|r| parse_range(r)).collect::<Result<Vec<_>, _>>()?;
    let spec = FamilySpec::new(family, axes.len()).map_err(|e| Failure::usage(e.to_string()))?;
    if method == Method::Closed && !family.has_closed_form(spec.arity) {
        return Err(Failure::usage(format!(
            "{family} has no closed form for {} variables; use --method integral",
            spec.arity
        )));
    }
    let domain = family.domain();
    for (i, axis) in axes.iter().enumerate() {
        if let Some(&bad) = axis.iter().find(|&&x| !domain.contains(x)) {
            return Err(Failure::usage(format!(
                "axis {} value {} is outside the domain: must be > {}",
                i + 1,
                sig17(bad),
                domain.lower_open_bound.unwrap_or(f64::NEG_INFINITY)
            )));
        }
    }
    let config = quad_config(tol)?;

    let mut csv = String::new();
    let header: Vec<String> = (1..=axes.len()).map(|i| format!("x{i}")).collect();
    csv.push_str(&header.join(","));
    csv.push_str(",value\n");

    let mut idx = vec![0usize; axes.len()];
    let mut point = vec![0.0; axes.len()];
    'rows: loop {
        for (k, &i) in idx.iter().enumerate() {
            point[k] = axes[k][i];
        }
        let value = evaluate(spec, &point, method, &config).map_err(|e| Failure::from_error(e, EXIT_NONCONVERGENCE))?;
        for &x in &point {
            csv.push_str(&sig17(x));
            csv.push(',');
        }
        csv.push_str(&sig17(value));
        csv.push('\n');

        // Row-major, last axis fastest.
        let mut k = axes.len();
        loop {
            if k == 0 {
                break 'rows;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < axes[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }

    match path {
        Some(path) => write_atomically(path, csv.as_bytes()).map_err(io_failure)?,
        None => out.write_all(csv.as_bytes()).map_err(io_failure)?,
    }
    Ok(EXIT_OK)
}

/// Writes to a sibling temporary file and renames it over `path`.
fn write_atomically(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let tmp = path.with_file_name(format!(".{name}.partial"));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)
}

fn cmd_verify(family: &str, arity: usize, samples: usize, seed: u64, tol: f64, out: &mut dyn Write) -> CmdResult {
    let family = parse_family(family)?;
    let spec = FamilySpec::new(family, arity).map_err(|e| Failure::usage(e.to_string()))?;
    if samples == 0 {
        return Err(Failure::usage("--samples must be at least 1"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Failure::usage("--tol must be positive"));
    }
    if !family.has_closed_form(arity) {
        return Err(Failure::usage(format!(
            "{family} has no closed form for {arity} variables"
        )));
    }
    let report =
        verify_family(spec, samples, seed, &QuadConfig::default()).map_err(|e| Failure::from_error(e, EXIT_FAIL))?;

    let mut text = String::new();
    for (i, s) in report.samples.iter().enumerate() {
        let point: Vec<String> = s.point.iter().map(|&x| sig17(x)).collect();
        text.push_str(&format!(
            "sample {i}: point=({}) closed={} integral={} deviation={}\n",
            point.join(","),
            sig17(s.closed),
            sig17(s.integral),
            sig17(s.deviation)
        ));
    }
    let pass = report.max_deviation <= tol;
    text.push_str(&format!(
        "family={family} arity={arity} samples={samples} seed={seed} max_deviation={} tol={} {}\n",
        sig17(report.max_deviation),
        sig17(tol),
        if pass { "PASS" } else { "FAIL" }
    ));
    out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(if pass { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_coeff(k: i64, out: &mut dyn Write) -> CmdResult {
    let k = usize::try_from(k).map_err(|_| Failure::usage(format!("k = {k} must be in 2..=6")))?;
    let c = add1_coefficient(k).map_err(|e| Failure::from_error(e, EXIT_FAIL))?;
    let hint = match nearest_rational(c, 1000) {
        Some((p, q)) => format!("{p}/{q}"),
        None => "none".into(),
    };
    writeln!(out, "{} (hint: {hint})", sig17(c)).map_err(io_failure)?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_fit(
    target: &str,
    class: &str,
    grid: &str,
    iters: usize,
    tol: f64,
    damping: f64,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let family = parse_family(target)?;
    let class: QuotientClass = class.parse().map_err(|e: Error| Failure::usage(e.to_string()))?;
    let parts: Vec<&str> = grid.split(':').collect();
    let [lo, hi, n] = parts[..] else {
        return Err(Failure::usage(format!("grid '{grid}' must be LO:HI:N")));
    };
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| Failure::usage(format!("grid size '{n}' is not a count")))?;
    let spec = FamilySpec::new(family, 2).map_err(|e| Failure::usage(e.to_string()))?;
    let mut problem = FitProblem::new(spec, class, parse_real(lo, "grid")?, parse_real(hi, "grid")?, n);
    problem.max_iters = iters;
    problem.tol = tol;
    problem.damping_init = damping;

    let report = fit_quotient(&problem).map_err(|e| Failure::from_error(e, EXIT_FAIL))?;
    let mut json = report.to_json();
    json.push('\n');
    match path {
        Some(path) => write_atomically(path, json.as_bytes()).map_err(io_failure)?,
        None => out.write_all(json.as_bytes()).map_err(io_failure)?,
    }
    Ok(if report.converged { EXIT_OK } else { EXIT_FAIL })
}
