use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const MIN_GAUSS_ORDER: usize = 2;
pub const MAX_GAUSS_ORDER: usize = 64;

static RULES: [OnceLock<Vec<(f64, f64)>>; MAX_GAUSS_ORDER + 1] = [const { OnceLock::new() }; MAX_GAUSS_ORDER + 1];

/// Gauss-Legendre rule with `order` points mapped to `[0, 1]`, as
/// `(node, weight)` pairs sorted by node. Weights sum to one.
pub fn gauss_nodes(order: usize) -> Result<&'static [(f64, f64)]> {
    if !(MIN_GAUSS_ORDER..=MAX_GAUSS_ORDER).contains(&order) {
        return Err(Error::InvalidOrder(order));
    }
    Ok(rule(order))
}

/// Like [`gauss_nodes`] but also accepts the one-point midpoint rule; used for
/// the coarsest cubature level.
pub(crate) fn rule(order: usize) -> &'static [(f64, f64)] {
    assert!((1..=MAX_GAUSS_ORDER).contains(&order));
    RULES[order].get_or_init(|| compute_rule(order))
}

fn compute_rule(n: usize) -> Vec<(f64, f64)> {
    if n == 1 {
        return vec![(0.5, 1.0)];
    }
    let nf = n as f64;
    let mut lower = Vec::with_capacity(n / 2);
    // Roots are solved in the angle θ (x = cos θ) so that nodes near t = 0
    // keep full relative precision via t = sin²(θ/2).
    for i in 1..=n / 2 {
        let mut theta = PI * (i as f64 - 0.25) / (nf + 0.5);
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_theta(n, theta);
            deriv = d;
            let step = p / d;
            theta += step;
            if step.abs() <= 1e-17 * theta.max(1.0) {
                break;
            }
        }
        let (_, d) = legendre_theta(n, theta);
        if d.is_finite() {
            deriv = d;
        }
        let half = (0.5 * theta).sin();
        lower.push((half * half, 1.0 / (deriv * deriv)));
    }
    let mut nodes = lower.clone();
    if n % 2 == 1 {
        let (_, d) = legendre_theta(n, 0.5 * PI);
        nodes.push((0.5, 1.0 / (d * d)));
    }
    nodes.extend(lower.iter().rev().map(|&(t, w)| (1.0 - t, w)));
    nodes
}

/// Returns `(P_n(cos θ), sin θ · P_n'(cos θ))`.
fn legendre_theta(n: usize, theta: f64) -> (f64, f64) {
    let x = theta.cos();
    let s = theta.sin();
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    let d = n as f64 * (p_prev - x * p) / s;
    (p, d)
}
