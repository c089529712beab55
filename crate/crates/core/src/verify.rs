//! Closed form against defining integral on seeded quasi-random samples.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pendants::{pendant_closed, pendant_integral, Family, FamilySpec};
use crate::quadrature::QuadConfig;
use crate::sampling::QuasiRandom;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleCheck {
    pub point: Vec<f64>,
    pub closed: f64,
    pub integral: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub spec: FamilySpec,
    pub samples: Vec<SampleCheck>,
    pub max_deviation: f64,
}

/// Sampling box `[lo, hi]` used per coordinate for each family.
pub fn sample_box(family: Family) -> (f64, f64) {
    match family {
        Family::EulerExp => (0.5, 10.0),
        Family::Mult => (1.1, 20.0),
        Family::Add1 | Family::Add2 => (-5.0, 5.0),
        Family::Log1 | Family::Log2 => (1.1, 50.0),
        Family::SineAdd => (-PI, PI),
    }
}

/// Deviation between the two evaluations: relative for the Euler Beta
/// function (always positive), relative with a unit floor otherwise.
pub fn deviation(family: Family, closed: f64, integral: f64) -> f64 {
    let scale = match family {
        Family::EulerExp => closed.abs(),
        _ => closed.abs().max(1.0),
    };
    (closed - integral).abs() / scale
}

/// Compares closed form and integral at the given points.
pub fn verify_points(spec: FamilySpec, points: &[Vec<f64>], config: &QuadConfig) -> Result<VerifyReport> {
    let mut samples = Vec::with_capacity(points.len());
    for p in points {
        let closed = pendant_closed(spec, p)?;
        let integral = pendant_integral(spec, p, config)?.value;
        samples.push(SampleCheck {
            point: p.clone(),
            closed,
            integral,
            deviation: deviation(spec.family, closed, integral),
        });
    }
    let max_deviation = samples.iter().map(|s| s.deviation).fold(0.0, f64::max);
    Ok(VerifyReport {
        spec,
        samples,
        max_deviation,
    })
}

/// Compares closed form and integral on `samples` seeded points drawn from
/// the family's [`sample_box`].
pub fn verify_family(spec: FamilySpec, samples: usize, seed: u64, config: &QuadConfig) -> Result<VerifyReport> {
    if samples == 0 {
        return Err(Error::InvalidInput("at least one sample is required".into()));
    }
    let (lo, hi) = sample_box(spec.family);
    let mut q = QuasiRandom::new(spec.arity, seed);
    let points: Vec<Vec<f64>> = (0..samples).map(|_| q.next_in(lo, hi)).collect();
    verify_points(spec, &points, config)
}
