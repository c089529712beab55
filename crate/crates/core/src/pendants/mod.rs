//! Beta-like families built on Cauchy functional equations.
//!
//! Each family pairs a "dual" parameterised solution of one Cauchy-type
//! functional equation (exponents or weights `t` and `1 - t`) and averages it
//! over the unit interval. With more than two variables the weights become
//! `t₁, …, t_{k-1}, 1 - Σtᵢ` over the unit cube `[0, 1]^{k-1}`.
//!
//! | family   | integrand (two variables)               | closed form               |
//! |----------|-----------------------------------------|---------------------------|
//! | EulerExp | `t^(x-1) (1-t)^(y-1)`                   | `Γ(x)Γ(y)/Γ(x+y)`         |
//! | Mult     | `(x-1)^t (y-1)^(1-t)`                   | log mean of `x-1`, `y-1`  |
//! | Add1     | `t(x-1) · (1-t)(y-1)`                   | `(x-1)(y-1)/6`            |
//! | Add2     | `t(x-1) + (1-t)(y-1)`                   | `(x+y)/2 - 1`             |
//! | Log1     | `t log(x-1) · (1-t) log(y-1)`           | `log(x-1) log(y-1)/6`     |
//! | Log2     | `t log(x-1) + (1-t) log(y-1)`           | `(log(x-1)+log(y-1))/2`   |
//! | SineAdd  | `t sin x cos y + (1-t) sin y cos x`     | `sin(x+y)/2`              |

mod closed;
mod integral;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use closed::{
    add1_beta, add1_coefficient, add2_beta, log1_beta, log2_beta, mult_beta_closed, mult_beta_k_closed, pendant_closed,
    sine_add_beta,
};
pub use integral::pendant_integral;

/// Largest supported number of variables; the cube integral then has
/// dimension five.
pub const MAX_ARITY: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    EulerExp,
    Mult,
    Add1,
    Add2,
    Log1,
    Log2,
    SineAdd,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::EulerExp,
        Family::Mult,
        Family::Add1,
        Family::Add2,
        Family::Log1,
        Family::Log2,
        Family::SineAdd,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Family::EulerExp => "euler",
            Family::Mult => "mult",
            Family::Add1 => "add1",
            Family::Add2 => "add2",
            Family::Log1 => "log1",
            Family::Log2 => "log2",
            Family::SineAdd => "sine",
        }
    }

    pub fn domain(self) -> DomainConstraint {
        let lower_open_bound = match self {
            Family::EulerExp => Some(0.0),
            Family::Mult | Family::Log1 | Family::Log2 => Some(1.0),
            Family::Add1 | Family::Add2 | Family::SineAdd => None,
        };
        DomainConstraint { lower_open_bound }
    }

    pub fn max_arity(self) -> usize {
        match self {
            Family::EulerExp | Family::SineAdd => 2,
            _ => MAX_ARITY,
        }
    }

    /// Whether a closed form is implemented for `arity` variables.
    pub fn has_closed_form(self, arity: usize) -> bool {
        match self {
            Family::Mult | Family::Add1 => (2..=MAX_ARITY).contains(&arity),
            _ => arity == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family '{s}'")))
    }
}

/// A pendant family together with its number of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub arity: usize,
}

impl FamilySpec {
    pub fn new(family: Family, arity: usize) -> Result<Self> {
        if arity < 2 || arity > family.max_arity() {
            return Err(Error::Arity {
                family: family.name().into(),
                arity,
                reason: format!("supported range is 2..={}", family.max_arity()),
            });
        }
        Ok(FamilySpec { family, arity })
    }

    pub fn pair(family: Family) -> Self {
        FamilySpec { family, arity: 2 }
    }

    /// Checks arity and domain of `point` against this spec.
    pub fn check_point(&self, point: &[f64]) -> Result<()> {
        if point.len() != self.arity {
            return Err(Error::Arity {
                family: self.family.name().into(),
                arity: point.len(),
                reason: format!("expected {} coordinates", self.arity),
            });
        }
        self.family.domain().check(point)
    }
}

/// Open lower bound applied to every coordinate, if the family has one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DomainConstraint {
    pub lower_open_bound: Option<f64>,
}

impl DomainConstraint {
    pub fn contains(&self, x: f64) -> bool {
        x.is_finite() && self.lower_open_bound.is_none_or(|b| x > b)
    }

    pub fn check(&self, point: &[f64]) -> Result<()> {
        for (i, &x) in point.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::InvalidInput(format!("x{} = {x} is not finite", i + 1)));
            }
            if let Some(b) = self.lower_open_bound {
                if x <= b {
                    return Err(Error::domain(format!("x{}", i + 1), x, b));
                }
            }
        }
        Ok(())
    }
}
