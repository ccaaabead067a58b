use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Full parameter tuple of the market.
///
/// `d = alpha * m` holds exactly by construction: only `alpha` and `m` are
/// stored and [`MarketParams::d`] derives the density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarketParams {
    /// Number of hard-to-match types (`>= 1`).
    pub p: usize,
    /// Arrival share of each hard type; easy share is `1 - p*lambda`.
    pub lambda: f64,
    /// Poisson arrival rate (agents per unit time).
    pub m: f64,
    /// Compatibility probability of an admissible pair.
    pub alpha: f64,
    /// Default end time for simulations and integrations.
    pub horizon: f64,
}

impl MarketParams {
    pub fn from_alpha(p: usize, lambda: f64, m: f64, alpha: f64, horizon: f64) -> Self {
        Self { p, lambda, m, alpha, horizon }
    }

    /// Build from the density `d`; stores `alpha = d / m`.
    pub fn from_density(p: usize, lambda: f64, m: f64, d: f64, horizon: f64) -> Self {
        Self { p, lambda, m, alpha: d / m, horizon }
    }

    /// Network density `d = alpha * m`.
    pub fn d(&self) -> f64 {
        self.alpha * self.m
    }

    /// Arrival share of the easy type, `1 - p*lambda`.
    pub fn easy_share(&self) -> f64 {
        1.0 - self.p as f64 * self.lambda
    }

    /// Arrival rate of type `k` (agents per unit time).
    pub fn arrival_rate(&self, k: usize) -> f64 {
        if k == 0 {
            self.easy_share() * self.m
        } else {
            self.lambda * self.m
        }
    }

    /// Check every invariant, returning the params unchanged on success.
    ///
    /// Reports the first violated constraint: `p >= 1`, `0 < lambda` and
    /// `p*lambda < 1`, `m >= 1`, `alpha` in `(0,1)`, `horizon > 0`.
    pub fn validate(&self) -> Result<Self> {
        if self.p == 0 {
            return Err(Error::InvalidTypeCount { p: self.p });
        }
        if !(self.lambda > 0.0) || !(self.p as f64 * self.lambda < 1.0) {
            return Err(Error::LambdaOutOfRange { lambda: self.lambda, p: self.p });
        }
        if !(self.m >= 1.0) {
            return Err(Error::ArrivalRateTooSmall { m: self.m });
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::AlphaOutOfRange { alpha: self.alpha });
        }
        if !(self.horizon > 0.0) {
            return Err(Error::HorizonNonPositive { horizon: self.horizon });
        }
        Ok(*self)
    }
}

/// Free-function form of [`MarketParams::validate`].
pub fn validate_params(params: MarketParams) -> Result<MarketParams> {
    params.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_scale_params_are_valid() {
        // m=8000, lambda=0.2, d=10 => alpha=0.00125
        let p = MarketParams::from_density(2, 0.2, 8000.0, 10.0, 20.0);
        assert!(p.validate().is_ok());
        assert!((p.alpha - 0.00125).abs() < 1e-18);
        assert_eq!(p.d(), p.alpha * p.m);
    }

    #[test]
    fn lambda_boundary_rejected() {
        // p*lambda = 1 violates lambda < 1/p
        let p = MarketParams::from_density(2, 0.5, 8000.0, 10.0, 20.0);
        assert_eq!(
            p.validate(),
            Err(Error::LambdaOutOfRange { lambda: 0.5, p: 2 })
        );
    }

    #[test]
    fn degenerate_alpha_rejected() {
        let p = MarketParams::from_alpha(2, 0.2, 8000.0, 0.0, 20.0);
        assert_eq!(p.validate(), Err(Error::AlphaOutOfRange { alpha: 0.0 }));
        let p = MarketParams::from_alpha(2, 0.2, 8000.0, 1.0, 20.0);
        assert_eq!(p.validate(), Err(Error::AlphaOutOfRange { alpha: 1.0 }));
    }

    #[test]
    fn other_constraints_rejected() {
        assert!(MarketParams::from_density(0, 0.2, 8000.0, 10.0, 20.0).validate().is_err());
        assert!(MarketParams::from_density(2, 0.2, 0.5, 0.1, 20.0).validate().is_err());
        assert!(MarketParams::from_density(2, 0.2, 8000.0, 10.0, 0.0).validate().is_err());
        assert!(MarketParams::from_density(2, -0.1, 8000.0, 10.0, 20.0).validate().is_err());
    }
}
