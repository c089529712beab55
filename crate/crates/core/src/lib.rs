//! Beta-type simplex integrals: closed forms, quadrature and quotient fitting.
//!
//! Every pendant is available two ways: through its defining integral over
//! the unit interval (or unit cube, for more than two variables) and through
//! its closed form. The [`quotient_fit`] module explores whether a pendant
//! can be written as a Cauchy quotient of some positive function.

pub mod error;
pub mod gamma;
pub mod pendants;
pub mod quadrature;
pub mod quotient_fit;
pub mod rational;
pub mod sampling;
pub mod verify;

pub use error::{Error, Result};
pub use gamma::{euler_beta_closed, euler_beta_integral, log_gamma, PositiveReal};
pub use pendants::{
    add1_beta, add1_coefficient, add2_beta, log1_beta, log2_beta, mult_beta_closed, mult_beta_k_closed, pendant_closed,
    pendant_integral, sine_add_beta, DomainConstraint, Family, FamilySpec, MAX_ARITY,
};
pub use quadrature::{gauss_nodes, integrate_1d, integrate_cube, QuadConfig, QuadResult};
pub use quotient_fit::{fit_quotient, quotient_residual, verify_euler_identity, FitProblem, FitReport, QuotientClass};
