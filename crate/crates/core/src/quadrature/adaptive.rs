use std::f64::consts::FRAC_1_SQRT_2;

use super::{QuadConfig, QuadResult};
use crate::error::{Error, Result};

// 10-point Gauss / 21-point Kronrod pair (QUADPACK qk21) on [-1, 1].
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

const POINTS_PER_RULE: usize = 21;

/// Integrates `f` over `[0, 1]`.
///
/// Power-type endpoint singularities `t^a`, `(1-t)^b` with `a, b > -1` are
/// allowed; `f` is only ever sampled strictly inside the interval.
pub fn integrate_1d<F>(f: F, config: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    integrate_1d_dual(|t, _| f(t), config)
}

/// Same as [`integrate_1d`], but `f` receives both `t` and `1 - t`, each
/// computed without cancellation near its own endpoint.
pub fn integrate_1d_dual<F>(f: F, config: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64, f64) -> f64,
{
    config.validate()?;

    // t = u² on [0, 1/2] and 1 - t = v² on [1/2, 1]; dt = 2u du.
    let eval = |side: Side, u: f64| -> f64 {
        let sq = u * u;
        let rest = (1.0 - u) * (1.0 + u);
        let (t, s) = match side {
            Side::Lower => (sq, rest),
            Side::Upper => (rest, sq),
        };
        2.0 * u * f(t, s)
    };

    let mut segments = Vec::with_capacity(config.max_subdivisions + 2);
    for side in [Side::Lower, Side::Upper] {
        segments.push(Segment::new(side, 0.0, FRAC_1_SQRT_2, |u| eval(side, u))?);
    }
    let mut subdivisions = 0usize;

    loop {
        let value: f64 = segments.iter().map(|s| s.value).sum();
        let error: f64 = segments.iter().map(|s| s.error).sum();
        let target = config.abs_tol.max(config.rel_tol * value.abs());
        if error <= target {
            return Ok(QuadResult {
                value,
                abs_error_estimate: error,
                evaluations: segments.len() * POINTS_PER_RULE,
            });
        }

        let worst =
            segments
                .iter()
                .enumerate()
                .filter(|(_, s)| s.splittable())
                .fold(None::<(usize, f64)>, |best, (i, s)| match best {
                    Some((_, e)) if e >= s.error => best,
                    _ => Some((i, s.error)),
                });
        let Some((idx, _)) = worst.filter(|_| subdivisions < config.max_subdivisions) else {
            return Err(Error::NonConvergence {
                subdivisions,
                estimate: error,
                target,
            });
        };

        let seg = segments[idx];
        let mid = 0.5 * (seg.a + seg.b);
        let side = seg.side;
        let left = Segment::new(side, seg.a, mid, |u| eval(side, u))?;
        let right = Segment::new(side, mid, seg.b, |u| eval(side, u))?;
        segments.splice(idx..=idx, [left, right]);
        subdivisions += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    side: Side,
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl Segment {
    fn new(side: Side, a: f64, b: f64, g: impl Fn(f64) -> f64) -> Result<Self> {
        let (value, error) = kronrod21(&g, a, b)?;
        Ok(Segment {
            side,
            a,
            b,
            value,
            error,
        })
    }

    fn splittable(&self) -> bool {
        let mid = 0.5 * (self.a + self.b);
        mid > self.a && mid < self.b && (self.b - self.a) > 1e3 * f64::EPSILON * self.b.abs()
    }
}

fn kronrod21(g: &impl Fn(f64) -> f64, a: f64, b: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let sample = |x: f64| -> Result<f64> {
        let v = g(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::InvalidInput(format!("integrand is not finite near node {x:e}")))
        }
    };

    let fc = sample(center)?;
    let mut res_g = 0.0;
    let mut res_k = fc * WGK[10];
    let mut res_abs = res_k.abs();
    let mut f1 = [0.0; 10];
    let mut f2 = [0.0; 10];
    for j in 0..10 {
        let x = half * XGK[j];
        let lo = sample(center - x)?;
        let hi = sample(center + x)?;
        f1[j] = lo;
        f2[j] = hi;
        if j % 2 == 1 {
            res_g += WG[j / 2] * (lo + hi);
        }
        res_k += WGK[j] * (lo + hi);
        res_abs += WGK[j] * (lo.abs() + hi.abs());
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((f1[j] - mean).abs() + (f2[j] - mean).abs());
    }

    let value = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok((value, err))
}
