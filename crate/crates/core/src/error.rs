use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A coordinate lies on or below a family's open lower bound.
    #[error("{name} = {value} is outside the domain: must be > {bound}")]
    Domain { name: String, value: f64, bound: f64 },

    #[error("arity {arity} not supported for {family}: {reason}")]
    Arity {
        family: String,
        arity: usize,
        reason: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no convergence after {subdivisions} subdivisions (estimate {estimate:e}, target {target:e})")]
    NonConvergence {
        subdivisions: usize,
        estimate: f64,
        target: f64,
    },

    #[error("cubature dimension {0} exceeds the supported maximum of 6")]
    DimensionTooLarge(usize),

    #[error("Gauss rule order {0} outside the supported range 2..=64")]
    InvalidOrder(usize),

    #[error("degenerate fit problem: {0}")]
    DegenerateProblem(String),
}

impl Error {
    pub(crate) fn domain(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Error::Domain {
            name: name.into(),
            value,
            bound,
        }
    }

    /// True for errors caused by the caller's arguments rather than by the
    /// numerics (domain, arity, malformed input).
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. }
                | Error::Arity { .. }
                | Error::InvalidInput(_)
                | Error::DimensionTooLarge(_)
                | Error::InvalidOrder(_)
                | Error::DegenerateProblem(_)
        )
    }
}
