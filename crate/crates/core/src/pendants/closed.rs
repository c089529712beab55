use std::sync::OnceLock;

use super::{Family, FamilySpec, MAX_ARITY};
use crate::error::{Error, Result};
use crate::gamma::{euler_beta_closed, PositiveReal};
use crate::quadrature::{integrate_cube, QuadConfig};

/// Below this |log ratio| the factor `(e^u - 1)/u` is taken from its series.
const DIAGONAL_SWITCH: f64 = 1e-6;

/// `r / ln(1 + r)`, the logarithmic mean of `1` and `1 + r`.
fn unit_log_mean(r: f64) -> f64 {
    let u = r.ln_1p();
    if u.abs() < DIAGONAL_SWITCH {
        1.0 + u / 2.0 + u * u / 6.0
    } else {
        r / u
    }
}

fn check(family: Family, point: &[f64]) -> Result<()> {
    FamilySpec::new(family, point.len())?.check_point(point)
}

/// Multiplicative Beta function: the logarithmic mean of `x - 1` and `y - 1`.
pub fn mult_beta_closed(x: f64, y: f64) -> Result<f64> {
    check(Family::Mult, &[x, y])?;
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    let base = lo - 1.0;
    Ok(base * unit_log_mean((hi - lo) / base))
}

/// Multiplicative Beta function of `k` variables, `2 ≤ k ≤ 6`.
///
/// The last coordinate is the pivot: the result is `(x_k - 1)` times the
/// product over `i < k` of `(x_i - x_k) / ((x_k - 1) log((x_i - 1)/(x_k - 1)))`,
/// each factor taking its limit 1 on the diagonal.
pub fn mult_beta_k_closed(xs: &[f64]) -> Result<f64> {
    check(Family::Mult, xs)?;
    if let [x, y] = *xs {
        return mult_beta_closed(x, y);
    }
    let (&pivot, rest) = xs.split_last().unwrap();
    let base = pivot - 1.0;
    Ok(rest.iter().map(|&x| unit_log_mean((x - pivot) / base)).product::<f64>() * base)
}

static ADD1_COEFFICIENTS: [OnceLock<Result<f64>>; MAX_ARITY + 1] = [const { OnceLock::new() }; MAX_ARITY + 1];

/// The constant `c_k = ∫_{[0,1]^{k-1}} t₁⋯t_{k-1} (1 - Σtᵢ) dt` of the
/// first-kind additive pendant, computed by cubature on first use.
pub fn add1_coefficient(k: usize) -> Result<f64> {
    if !(2..=MAX_ARITY).contains(&k) {
        return Err(Error::Arity {
            family: Family::Add1.name().into(),
            arity: k,
            reason: format!("coefficient defined for 2..={MAX_ARITY}"),
        });
    }
    ADD1_COEFFICIENTS[k]
        .get_or_init(|| {
            let f = |t: &[f64]| t.iter().product::<f64>() * (1.0 - t.iter().sum::<f64>());
            integrate_cube(f, k - 1, &QuadConfig::default()).map(|r| r.value)
        })
        .clone()
}

/// First-kind additive pendant `c_k ∏(xᵢ - 1)`.
pub fn add1_beta(xs: &[f64]) -> Result<f64> {
    check(Family::Add1, xs)?;
    let c = add1_coefficient(xs.len())?;
    Ok(c * xs.iter().map(|x| x - 1.0).product::<f64>())
}

/// Second-kind additive pendant, the arithmetic mean of `x - 1` and `y - 1`.
pub fn add2_beta(x: f64, y: f64) -> Result<f64> {
    check(Family::Add2, &[x, y])?;
    Ok(0.5 * (x + y) - 1.0)
}

pub fn log1_beta(x: f64, y: f64) -> Result<f64> {
    check(Family::Log1, &[x, y])?;
    Ok((x - 1.0).ln() * (y - 1.0).ln() / 6.0)
}

/// Arithmetic mean of `log(x - 1)` and `log(y - 1)`.
pub fn log2_beta(x: f64, y: f64) -> Result<f64> {
    check(Family::Log2, &[x, y])?;
    Ok(0.5 * ((x - 1.0).ln() + (y - 1.0).ln()))
}

/// Pendant of the sine addition law, `sin(x + y) / 2`.
pub fn sine_add_beta(x: f64, y: f64) -> Result<f64> {
    check(Family::SineAdd, &[x, y])?;
    Ok(0.5 * (x + y).sin())
}

/// Closed form of any pendant. Add2, Log1 and Log2 with more than two
/// variables have no closed form and are rejected with [`Error::Arity`].
pub fn pendant_closed(spec: FamilySpec, point: &[f64]) -> Result<f64> {
    spec.check_point(point)?;
    if !spec.family.has_closed_form(spec.arity) {
        return Err(Error::Arity {
            family: spec.family.name().into(),
            arity: spec.arity,
            reason: "no closed form; use the integral".into(),
        });
    }
    match spec.family {
        Family::EulerExp => Ok(euler_beta_closed(
            PositiveReal::new(point[0])?,
            PositiveReal::new(point[1])?,
        )),
        Family::Mult => mult_beta_k_closed(point),
        Family::Add1 => add1_beta(point),
        Family::Add2 => add2_beta(point[0], point[1]),
        Family::Log1 => log1_beta(point[0], point[1]),
        Family::Log2 => log2_beta(point[0], point[1]),
        Family::SineAdd => sine_add_beta(point[0], point[1]),
    }
}
