//! Squared large-scale fading `f(d) = theta * d^(-alpha)`, in the general
//! power-law form and in the concrete three-slope instantiation.
//!
//! The three-slope model uses exponents 0 / 2 / 3.5 inside `d0`, between
//! `d0` and `d1`, and beyond `d1`, with the scale chosen so that the gain
//! is continuous at both breakpoints. Inside `d0` the gain is a constant
//! plateau `d1^(-1.5) * d0^(-2)`, so `f` is bounded everywhere; there is
//! no singularity at zero distance.

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathlossError {
    NegativeDistance,
    SingularAtZeroDistance,
}

impl fmt::Display for PathlossError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathlossError::NegativeDistance => write!(f, "negative distance"),
            PathlossError::SingularAtZeroDistance => write!(f, "singular at zero distance"),
        }
    }
}

/// Breakpoints of the three-slope model: near-field boundary `d0` and
/// far-field boundary `d1`, with `0 < d0 < d1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeSlopeParams {
    pub d0: f64,
    pub d1: f64,
}

impl ThreeSlopeParams {
    pub fn new(d0: f64, d1: f64) -> Self {
        assert!(d0 > 0.0 && d0 < d1, "require 0 < d0 < d1");
        ThreeSlopeParams { d0, d1 }
    }

    /// d0 = 10 m, d1 = 50 m.
    pub fn default_urban() -> Self {
        ThreeSlopeParams::new(10.0, 50.0)
    }

    /// The constant near-field gain `d1^(-1.5) * d0^(-2)`.
    pub fn plateau(&self) -> f64 {
        libm::pow(self.d1, -1.5) / (self.d0 * self.d0)
    }
}

/// Single power-law gain `theta * d^(-alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawParams {
    pub theta: f64,
    pub alpha: f64,
}

impl PowerLawParams {
    pub fn new(theta: f64, alpha: f64) -> Self {
        assert!(theta > 0.0, "theta must be positive");
        assert!(alpha >= 0.0, "alpha must be non-negative");
        PowerLawParams { theta, alpha }
    }
}

/// Three-slope squared large-scale fading at distance `d`.
pub fn gain_squared(d: f64, params: &ThreeSlopeParams) -> Result<f64, PathlossError> {
    if d < 0.0 {
        return Err(PathlossError::NegativeDistance);
    }
    Ok(gain_squared_unchecked(d, params))
}

/// As [`gain_squared`] without the sign check; hot path for the inner
/// loops, where distances come from [`crate::geometry::distance`] and are
/// non-negative by construction.
#[inline]
pub fn gain_squared_unchecked(d: f64, params: &ThreeSlopeParams) -> f64 {
    if d > params.d1 {
        libm::pow(d, -3.5)
    } else if d > params.d0 {
        libm::pow(params.d1, -1.5) / (d * d)
    } else {
        params.plateau()
    }
}

/// General power-law gain `theta * d^(-alpha)`.
pub fn gain_squared_powerlaw(d: f64, params: &PowerLawParams) -> Result<f64, PathlossError> {
    if d < 0.0 {
        return Err(PathlossError::NegativeDistance);
    }
    if d == 0.0 {
        if params.alpha > 0.0 {
            return Err(PathlossError::SingularAtZeroDistance);
        }
        return Ok(params.theta);
    }
    Ok(params.theta * libm::pow(d, -params.alpha))
}
