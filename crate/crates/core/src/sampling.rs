//! Seeded low-discrepancy points.
//!
//! Additive-recurrence (Kronecker) sequence `frac(offset + n·α)` where `α`
//! holds the powers `1/φ_d, 1/φ_d², …` of the generalised golden ratio `φ_d`
//! (the positive root of `x^{d+1} = x + 1`). The seed only picks the offset,
//! so every seed gives an equally well spread sequence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct QuasiRandom {
    offset: Vec<f64>,
    alpha: Vec<f64>,
    index: u64,
}

impl QuasiRandom {
    pub fn new(dim: usize, seed: u64) -> Self {
        assert!(dim >= 1);
        let phi = generalized_golden_ratio(dim);
        let alpha = (1..=dim).map(|j| phi.powi(-(j as i32))).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let offset = (0..dim).map(|_| rng.gen::<f64>()).collect();
        QuasiRandom {
            offset,
            alpha,
            index: 1,
        }
    }

    /// Next point of the unit cube, every coordinate strictly inside (0, 1).
    pub fn next_unit(&mut self) -> Vec<f64> {
        let n = self.index as f64;
        self.index += 1;
        self.offset
            .iter()
            .zip(&self.alpha)
            .map(|(o, a)| {
                let u = (o + n * a).fract();
                if u > 0.0 {
                    u
                } else {
                    0.5
                }
            })
            .collect()
    }

    /// Next point of the box `[lo, hi]^dim`.
    pub fn next_in(&mut self, lo: f64, hi: f64) -> Vec<f64> {
        self.next_unit().into_iter().map(|u| lo + (hi - lo) * u).collect()
    }
}

fn generalized_golden_ratio(dim: usize) -> f64 {
    let d = dim as i32;
    let mut x = 1.5f64;
    for _ in 0..64 {
        let f = x.powi(d + 1) - x - 1.0;
        let df = (d + 1) as f64 * x.powi(d) - 1.0;
        x -= f / df;
    }
    x
}
