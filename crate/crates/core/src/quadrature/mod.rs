//! Numerical integration on the unit interval and the unit hypercube.
//!
//! [`integrate_1d`] is a globally adaptive Gauss-Kronrod scheme that first
//! maps each half of `[0, 1]` with a square-root substitution, so integrable
//! power singularities at either endpoint become mild or vanish.
//! [`integrate_cube`] is a tensor-product Gauss-Legendre rule whose error
//! estimate comes from comparing refinement levels.

mod adaptive;
mod cube;
mod gauss;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use adaptive::{integrate_1d, integrate_1d_dual};
pub use cube::{integrate_cube, MAX_CUBE_DIM};
pub use gauss::{gauss_nodes, MAX_GAUSS_ORDER, MIN_GAUSS_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Upper bound on interval bisections in [`integrate_1d`].
    pub max_subdivisions: usize,
    /// Gauss points per axis of the finest cubature level.
    pub cubature_order: usize,
    /// Number of coarser levels (order halved each time) evaluated below the
    /// finest one for the cubature error estimate.
    pub cubature_refinements: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 200,
            cubature_order: 32,
            cubature_refinements: 3,
        }
    }
}

impl QuadConfig {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidInput(format!("quadrature config: {what}")));
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return bad("rel_tol must be positive");
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return bad("abs_tol must be positive");
        }
        if self.max_subdivisions < 1 {
            return bad("max_subdivisions must be at least 1");
        }
        if !(MIN_GAUSS_ORDER..=MAX_GAUSS_ORDER).contains(&self.cubature_order) {
            return Err(Error::InvalidOrder(self.cubature_order));
        }
        if self.cubature_refinements < 1 {
            return bad("cubature_refinements must be at least 1");
        }
        Ok(())
    }
}
