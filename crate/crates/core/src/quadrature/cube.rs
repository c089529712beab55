use rayon::prelude::*;

use super::gauss::rule;
use super::{QuadConfig, QuadResult};
use crate::error::{Error, Result};

pub const MAX_CUBE_DIM: usize = 6;

/// Points per level above which the outermost axis is evaluated in parallel.
const PARALLEL_THRESHOLD: usize = 1 << 14;

/// Integrates `f` over `[0, 1]^dim` with a tensor-product Gauss-Legendre rule.
///
/// The finest level uses `config.cubature_order` points per axis; each of the
/// `config.cubature_refinements` coarser levels halves the order. The error
/// estimate is the gap between the two finest levels, widened to the largest
/// gap in the ladder when the gaps are not shrinking, and never below the
/// accumulated rounding level.
///
/// The result is bit-identical whatever the thread count: the outer axis is
/// summed slice by slice in index order.
pub fn integrate_cube<F>(f: F, dim: usize, config: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    if dim == 0 {
        return Err(Error::InvalidInput("cubature dimension must be at least 1".into()));
    }
    if dim > MAX_CUBE_DIM {
        return Err(Error::DimensionTooLarge(dim));
    }
    config.validate()?;

    let mut orders = vec![config.cubature_order];
    for _ in 0..config.cubature_refinements {
        let next = *orders.last().unwrap() / 2;
        if next == 0 {
            break;
        }
        orders.push(next);
    }

    let mut levels = Vec::with_capacity(orders.len());
    let mut evaluations = 0usize;
    for &order in &orders {
        let level = tensor_sum(&f, dim, rule(order))?;
        evaluations += order.pow(dim as u32);
        levels.push(level);
    }

    let gaps: Vec<f64> = levels.windows(2).map(|w| (w[0].0 - w[1].0).abs()).collect();
    let mut estimate = gaps[0];
    if gaps.len() > 1 && gaps[0] > gaps[1] {
        estimate = gaps.iter().copied().fold(0.0, f64::max);
    }
    let (value, abs_sum) = levels[0];
    estimate = estimate.max(50.0 * f64::EPSILON * abs_sum);

    Ok(QuadResult {
        value,
        abs_error_estimate: estimate,
        evaluations,
    })
}

/// Returns `(Σ w f, Σ w |f|)` over the full tensor grid.
fn tensor_sum<F>(f: &F, dim: usize, nodes: &[(f64, f64)]) -> Result<(f64, f64)>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    let n = nodes.len();
    let slice = |i0: usize| slice_sum(f, dim, nodes, i0);
    let slices: Vec<Result<(f64, f64)>> = if n.pow(dim as u32) >= PARALLEL_THRESHOLD {
        (0..n).into_par_iter().map(slice).collect()
    } else {
        (0..n).map(slice).collect()
    };
    let mut sum = 0.0;
    let mut abs = 0.0;
    for s in slices {
        let (v, a) = s?;
        sum += v;
        abs += a;
    }
    Ok((sum, abs))
}

fn slice_sum<F>(f: &F, dim: usize, nodes: &[(f64, f64)], i0: usize) -> Result<(f64, f64)>
where
    F: Fn(&[f64]) -> f64,
{
    let n = nodes.len();
    let mut idx = [0usize; MAX_CUBE_DIM];
    let mut point = [0.0; MAX_CUBE_DIM];
    idx[0] = i0;
    for (p, &i) in point.iter_mut().zip(&idx).take(dim) {
        *p = nodes[i].0;
    }

    let mut sum = 0.0;
    let mut abs = 0.0;
    loop {
        let v = f(&point[..dim]);
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!(
                "integrand is not finite at {:?}",
                &point[..dim]
            )));
        }
        let w: f64 = idx[..dim].iter().map(|&i| nodes[i].1).product();
        sum += w * v;
        abs += w * v.abs();

        // Odometer over axes 1..dim, last axis fastest.
        let mut axis = dim;
        loop {
            if axis == 1 {
                return Ok((sum, abs));
            }
            axis -= 1;
            idx[axis] += 1;
            if idx[axis] < n {
                point[axis] = nodes[idx[axis]].0;
                break;
            }
            idx[axis] = 0;
            point[axis] = nodes[0].0;
        }
    }
}
