//! Cauchy-quotient membership, explored numerically.
//!
//! A pendant `P` belongs to a quotient class when some positive `f` satisfies
//! e.g. `P(x, y) = f(x) f(y) / f(x + y)` for all admissible `x, y`. For the
//! Euler Beta function `f = Γ` is such a solution. For the other pendants the
//! question is open, so [`fit_quotient`] searches for the best discrete `f`
//! in the least-squares sense and reports how small the residual gets.
//!
//! The unknowns are `u = log f` on a lattice: the problem's grid plus the
//! lattice nodes needed to interpolate `u` linearly at every combined
//! argument `x + y` (or `x·y`, on a geometric lattice). Each class has a
//! one-parameter family of `f` leaving its quotient unchanged; it is removed
//! by pinning `u` at one grid node.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{euler_beta_closed, euler_beta_integral, PositiveReal};
use crate::pendants::{pendant_closed, FamilySpec};
use crate::quadrature::QuadConfig;
use crate::sampling::QuasiRandom;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuotientClass {
    /// `f(x) f(y) / f(x + y)`
    ExpQuotient,
    /// `f(x) f(y) / f(x y)`
    MultQuotient,
    /// `(f(x) + f(y)) / f(x + y)`
    AddQuotient,
    /// `(f(x) + f(y)) / f(x y)`
    LogQuotient,
}

impl QuotientClass {
    pub const ALL: [QuotientClass; 4] = [
        QuotientClass::ExpQuotient,
        QuotientClass::MultQuotient,
        QuotientClass::AddQuotient,
        QuotientClass::LogQuotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QuotientClass::ExpQuotient => "exp",
            QuotientClass::MultQuotient => "mult",
            QuotientClass::AddQuotient => "add",
            QuotientClass::LogQuotient => "log",
        }
    }

    /// The argument at which the denominator is evaluated.
    pub fn combine(self, x: f64, y: f64) -> f64 {
        if self.multiplicative_argument() {
            x * y
        } else {
            x + y
        }
    }

    fn multiplicative_argument(self) -> bool {
        matches!(self, QuotientClass::MultQuotient | QuotientClass::LogQuotient)
    }

    fn product_numerator(self) -> bool {
        matches!(self, QuotientClass::ExpQuotient | QuotientClass::MultQuotient)
    }

    /// Quotient value from `f(x)`, `f(y)` and `f(combined)`.
    pub fn apply(self, fx: f64, fy: f64, fc: f64) -> f64 {
        if self.product_numerator() {
            fx * fy / fc
        } else {
            (fx + fy) / fc
        }
    }
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QuotientClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QuotientClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown quotient class '{s}'")))
    }
}

/// `target(x, y) - quotient(f; x, y)`; zero exactly where the quotient
/// equation holds.
pub fn quotient_residual<F>(target: FamilySpec, quotient: QuotientClass, f: F, x: f64, y: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let value = pendant_closed(target, &[x, y])?;
    let c = quotient.combine(x, y);
    if !c.is_finite() {
        return Err(Error::InvalidInput(format!("combined argument {c} is not finite")));
    }
    let (fx, fy, fc) = (f(x), f(y), f(c));
    for (arg, v) in [(x, fx), (y, fy), (c, fc)] {
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!("f({arg}) = {v} is not finite")));
        }
        if quotient.product_numerator() && v <= 0.0 {
            return Err(Error::InvalidInput(format!("f({arg}) = {v} must be positive")));
        }
    }
    if fc == 0.0 {
        return Err(Error::InvalidInput(format!("f({c}) = 0 in the denominator")));
    }
    Ok(value - quotient.apply(fx, fy, fc))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitProblem {
    pub target: FamilySpec,
    pub quotient: QuotientClass,
    pub grid_lo: f64,
    pub grid_hi: f64,
    pub grid_n: usize,
    pub max_iters: usize,
    pub tol: f64,
    pub damping_init: f64,
}

impl FitProblem {
    pub fn new(target: FamilySpec, quotient: QuotientClass, grid_lo: f64, grid_hi: f64, grid_n: usize) -> Self {
        FitProblem {
            target,
            quotient,
            grid_lo,
            grid_hi,
            grid_n,
            max_iters: 500,
            tol: 1e-12,
            damping_init: 1e-3,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.target.arity != 2 {
            return Err(Error::Arity {
                family: self.target.family.name().into(),
                arity: self.target.arity,
                reason: "quotient fits take two-variable targets".into(),
            });
        }
        if self.grid_n < 8 {
            return Err(Error::InvalidInput(format!(
                "grid needs at least 8 nodes, got {}",
                self.grid_n
            )));
        }
        if !(self.grid_lo.is_finite() && self.grid_hi.is_finite() && self.grid_hi > self.grid_lo) {
            return Err(Error::InvalidInput(format!(
                "grid range {}..{} must be finite and increasing",
                self.grid_lo, self.grid_hi
            )));
        }
        self.target.family.domain().check(&[self.grid_lo])?;
        if self.quotient.multiplicative_argument() && self.grid_lo <= 0.0 {
            return Err(Error::domain("grid_lo", self.grid_lo, 0.0));
        }
        let positive = |v: f64| v > 0.0;
        if self.max_iters == 0 || !positive(self.tol) || !positive(self.damping_init) {
            return Err(Error::InvalidInput(
                "max_iters, tol and damping_init must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Grid nodes: arithmetic for additive combination, geometric for
    /// multiplicative combination.
    pub fn grid(&self) -> Vec<f64> {
        Lattice::new(self).grid()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    /// Coordinates of the lattice nodes carrying unknowns, ascending.
    pub nodes: Vec<f64>,
    pub logf_values: Vec<f64>,
    pub rms_residual: f64,
    pub max_residual: f64,
    pub iterations: usize,
    pub converged: bool,
    pub gauge: String,
    /// Objective `½ Σ r²` before the first step and after every accepted step.
    pub objective_trace: Vec<f64>,
}

impl FitReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("FitReport is always serializable")
    }
}

/// Uniform lattice in `x` (arithmetic) or in `log x` (geometric), anchored at
/// the grid's first node.
#[derive(Debug, Clone, Copy)]
struct Lattice {
    lo: f64,
    hi: f64,
    n: usize,
    geometric: bool,
    step: f64,
}

const SNAP: f64 = 1e-9;

impl Lattice {
    fn new(p: &FitProblem) -> Self {
        let geometric = p.quotient.multiplicative_argument();
        let span = if geometric {
            (p.grid_hi / p.grid_lo).ln()
        } else {
            p.grid_hi - p.grid_lo
        };
        Lattice {
            lo: p.grid_lo,
            hi: p.grid_hi,
            n: p.grid_n,
            geometric,
            step: span / (p.n_minus_one()),
        }
    }

    fn coord(&self, m: i64) -> f64 {
        if m == (self.n - 1) as i64 {
            return self.hi;
        }
        if self.geometric {
            self.lo * (m as f64 * self.step).exp()
        } else {
            self.lo + m as f64 * self.step
        }
    }

    fn grid(&self) -> Vec<f64> {
        (0..self.n as i64).map(|m| self.coord(m)).collect()
    }

    /// Interpolation stencil `[(index, weight)]` for `u` at `x`.
    fn stencil(&self, x: f64) -> Vec<(i64, f64)> {
        let s = if self.geometric {
            (x / self.lo).ln() / self.step
        } else {
            (x - self.lo) / self.step
        };
        let mut m = s.floor();
        let mut theta = s - m;
        if theta > 1.0 - SNAP {
            m += 1.0;
            theta = 0.0;
        }
        let m = m as i64;
        if theta < SNAP {
            vec![(m, 1.0)]
        } else {
            vec![(m, 1.0 - theta), (m + 1, theta)]
        }
    }
}

impl FitProblem {
    fn n_minus_one(&self) -> f64 {
        (self.grid_n - 1) as f64
    }
}

struct Equation {
    target: f64,
    x: usize,
    y: usize,
    combined: Vec<(usize, f64)>,
}

/// Fits `log f` for the problem's pendant. A report whose `converged` flag
/// is down is still returned; it is the caller's call whether that is fatal.
pub fn fit_quotient(problem: &FitProblem) -> Result<FitReport> {
    problem.validate()?;
    let spec = problem.target;
    fit_quotient_with(problem, |x, y| pendant_closed(spec, &[x, y]))
}

/// [`fit_quotient`] against an arbitrary target function; `problem.target`
/// is only used for validation.
pub fn fit_quotient_with<T>(problem: &FitProblem, target: T) -> Result<FitReport>
where
    T: Fn(f64, f64) -> Result<f64>,
{
    problem.validate()?;
    let lattice = Lattice::new(problem);
    let grid = lattice.grid();
    let n = grid.len();

    // Assemble equations over unordered grid pairs, collecting the lattice
    // indices they touch.
    let mut raw = Vec::new();
    let mut used: BTreeMap<i64, usize> = (0..n as i64).map(|m| (m, 0)).collect();
    for i in 0..n {
        for j in i..n {
            let c = problem.quotient.combine(grid[i], grid[j]);
            let value = target(grid[i], grid[j])?;
            if !value.is_finite() || !c.is_finite() {
                continue;
            }
            let st = lattice.stencil(c);
            for &(m, _) in &st {
                used.insert(m, 0);
            }
            raw.push((value, i, j, st));
        }
    }
    if raw.len() < problem.grid_n {
        return Err(Error::DegenerateProblem(format!(
            "{} admissible pairs for {} grid nodes",
            raw.len(),
            problem.grid_n
        )));
    }
    for (col, slot) in used.values_mut().enumerate() {
        *slot = col;
    }
    let cols = used.len();
    if raw.len() < cols - 1 {
        return Err(Error::DegenerateProblem(format!(
            "{} equations for {} unknowns",
            raw.len(),
            cols - 1
        )));
    }
    let equations: Vec<Equation> = raw
        .into_iter()
        .map(|(value, i, j, st)| Equation {
            target: value,
            x: used[&(i as i64)],
            y: used[&(j as i64)],
            combined: st.into_iter().map(|(m, w)| (used[&m], w)).collect(),
        })
        .collect();
    let nodes: Vec<f64> = used.keys().map(|&m| lattice.coord(m)).collect();

    let (pin_grid_index, gauge_dir) = gauge_pin(problem.quotient, &grid);
    let pin = used[&(pin_grid_index as i64)];
    let gauge = format!(
        "log f pinned to 0 at x = {} (grid node {}); removes f -> {} f",
        grid[pin_grid_index], pin_grid_index, gauge_dir
    );

    let free: Vec<usize> = (0..cols).filter(|&c| c != pin).collect();
    let mut u = vec![0.0; cols];
    let quotient = problem.quotient;

    let residuals = |u: &[f64]| -> Vec<f64> { equations.iter().map(|e| e.target - model(quotient, e, u)).collect() };
    let objective = |r: &[f64]| 0.5 * r.iter().map(|v| v * v).sum::<f64>();

    let mut r = residuals(&u);
    let mut obj = objective(&r);
    let mut trace = vec![obj];
    let mut damping = problem.damping_init;
    let mut converged = false;
    let mut iterations = 0;

    let mut normal: Option<(DMatrix<f64>, DVector<f64>, f64)> = None;

    // Every trial step, accepted or rejected, is one iteration.
    while iterations < problem.max_iters {
        if obj == 0.0 {
            converged = true;
            break;
        }
        iterations += 1;
        let (jtj, grad, scale) = normal.get_or_insert_with(|| {
            let jac = jacobian(quotient, &equations, &u, &free);
            let jt = jac.transpose();
            let jtj = &jt * &jac;
            let grad = &jt * DVector::from_column_slice(&r);
            let scale = jtj.diagonal().max().max(f64::MIN_POSITIVE);
            (jtj, grad, scale)
        });
        if damping > 1e20 * *scale {
            // No damping level reduces the objective: a stationary point.
            converged = true;
            break;
        }

        let mut a = jtj.clone();
        let lambda = damping.max(1e-14 * *scale);
        for k in 0..a.nrows() {
            a[(k, k)] += lambda;
        }
        let Some(chol) = a.cholesky() else {
            damping *= 2.0;
            continue;
        };
        let step = chol.solve(&(-&*grad));
        let u_size = u.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        if step.amax() <= 1e-15 * u_size {
            converged = true;
            break;
        }
        let mut trial = u.clone();
        for (k, &c) in free.iter().enumerate() {
            trial[c] += step[k];
        }
        let r_trial = residuals(&trial);
        let obj_trial = objective(&r_trial);
        if obj_trial.is_finite() && obj_trial < obj {
            let relative_decrease = (obj - obj_trial) / obj;
            u = trial;
            r = r_trial;
            obj = obj_trial;
            trace.push(obj);
            damping *= 0.5;
            normal = None;
            if relative_decrease < problem.tol {
                converged = true;
                break;
            }
        } else {
            damping *= 2.0;
        }
    }

    let m = r.len() as f64;
    let rms_residual = (r.iter().map(|v| v * v).sum::<f64>() / m).sqrt();
    let max_residual = r.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    Ok(FitReport {
        nodes,
        logf_values: u,
        rms_residual,
        max_residual,
        iterations,
        converged,
        gauge,
        objective_trace: trace,
    })
}

/// Grid node to pin and a description of the gauge family it removes.
fn gauge_pin(quotient: QuotientClass, grid: &[f64]) -> (usize, &'static str) {
    let last = grid.len() - 1;
    match quotient {
        // f -> e^(a x) f leaves f(x)f(y)/f(x+y) unchanged; pin where x ≠ 0.
        QuotientClass::ExpQuotient => (if grid[0] != 0.0 { 0 } else { last }, "e^(a x)"),
        // f -> x^a f; pin where log x ≠ 0.
        QuotientClass::MultQuotient => (if grid[0] != 1.0 { 0 } else { last }, "x^a"),
        QuotientClass::AddQuotient | QuotientClass::LogQuotient => (0, "c"),
    }
}

fn interp(e: &Equation, u: &[f64]) -> f64 {
    e.combined.iter().map(|&(c, w)| w * u[c]).sum()
}

fn model(q: QuotientClass, e: &Equation, u: &[f64]) -> f64 {
    let uc = interp(e, u);
    if q.product_numerator() {
        (u[e.x] + u[e.y] - uc).exp()
    } else {
        (u[e.x] - uc).exp() + (u[e.y] - uc).exp()
    }
}

/// Jacobian of the residuals `target - model` with respect to the free unknowns.
fn jacobian(q: QuotientClass, equations: &[Equation], u: &[f64], free: &[usize]) -> DMatrix<f64> {
    let mut col_of = vec![usize::MAX; u.len()];
    for (k, &c) in free.iter().enumerate() {
        col_of[c] = k;
    }
    let mut jac = DMatrix::zeros(equations.len(), free.len());
    for (row, e) in equations.iter().enumerate() {
        let uc = interp(e, u);
        let (dx, dy, value) = if q.product_numerator() {
            let v = (u[e.x] + u[e.y] - uc).exp();
            (v, v, v)
        } else {
            let a = (u[e.x] - uc).exp();
            let b = (u[e.y] - uc).exp();
            (a, b, a + b)
        };
        let mut add = |c: usize, d: f64| {
            if col_of[c] != usize::MAX {
                jac[(row, col_of[c])] -= d;
            }
        };
        add(e.x, dx);
        add(e.y, dy);
        for &(c, w) in &e.combined {
            add(c, -value * w);
        }
    }
    jac
}

/// Largest relative gap between the Euler Beta integral and
/// `Γ(x)Γ(y)/Γ(x+y)` over `samples` seeded pairs in `[0.5, 10]²`.
pub fn verify_euler_identity(samples: usize, seed: u64) -> Result<f64> {
    if samples == 0 {
        return Err(Error::InvalidInput("at least one sample is required".into()));
    }
    let mut q = QuasiRandom::new(2, seed);
    let pairs: Vec<(f64, f64)> = (0..samples)
        .map(|_| {
            let p = q.next_in(0.5, 10.0);
            (p[0], p[1])
        })
        .collect();
    verify_euler_identity_at(&pairs)
}

/// [`verify_euler_identity`] at explicit pairs.
pub fn verify_euler_identity_at(pairs: &[(f64, f64)]) -> Result<f64> {
    if pairs.is_empty() {
        return Err(Error::InvalidInput("at least one sample is required".into()));
    }
    let config = QuadConfig::default();
    let mut worst = 0.0f64;
    for &(x, y) in pairs {
        let (x, y) = (PositiveReal::new(x)?, PositiveReal::new(y)?);
        let closed = euler_beta_closed(x, y);
        let integral = euler_beta_integral(x, y, &config)?.value;
        worst = worst.max((integral - closed).abs() / closed);
    }
    Ok(worst)
}
