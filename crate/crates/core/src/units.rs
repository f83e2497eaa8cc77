//! Physical constants and the nondimensional unit convention.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The three dimensional constants of the model. All computations run in
/// whatever units these fields express; the default choice
/// `hbar = m = G = 1` is the internal convention, and the accessors below
/// map internal results back to physical scales.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    /// Reduced Planck constant.
    pub hbar: f64,
    /// Fermion mass.
    pub mass: f64,
    /// Gravitational constant.
    pub grav: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum UnitError {
    #[error("unit system fields must be strictly positive, got hbar={hbar}, m={mass}, G={grav}")]
    NonPositive { hbar: f64, mass: f64, grav: f64 },
}

impl UnitSystem {
    pub fn new(hbar: f64, mass: f64, grav: f64) -> Result<Self, UnitError> {
        if !(hbar > 0.0 && mass > 0.0 && grav > 0.0) {
            return Err(UnitError::NonPositive { hbar, mass, grav });
        }
        Ok(Self { hbar, mass, grav })
    }

    /// The nondimensional convention `hbar = m = G = 1`.
    pub fn internal() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
            grav: 1.0,
        }
    }

    /// Gravitational coupling `kappa = 8 pi G m`. Derived, never stored.
    pub fn kappa(&self) -> f64 {
        8.0 * std::f64::consts::PI * self.grav * self.mass
    }

    /// Speed of light associated with a relativistic parameter `eps = 1/c`.
    pub fn speed_of_light(&self, eps: f64) -> f64 {
        1.0 / eps
    }

    /// Length scale of the bound state, `hbar^2 / (G m^3)`.
    pub fn length_scale(&self) -> f64 {
        self.hbar * self.hbar / (self.grav * self.mass.powi(3))
    }

    /// Energy scale of the bound state, `G^2 m^5 / hbar^2`.
    pub fn energy_scale(&self) -> f64 {
        self.grav * self.grav * self.mass.powi(5) / (self.hbar * self.hbar)
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::internal()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive() {
        assert!(UnitSystem::new(1.0, 0.0, 1.0).is_err());
        assert!(UnitSystem::new(-1.0, 1.0, 1.0).is_err());
        assert!(UnitSystem::new(1.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn kappa_is_derived() {
        let u = UnitSystem::new(2.0, 3.0, 0.5).unwrap();
        assert_eq!(u.kappa(), 8.0 * std::f64::consts::PI * 0.5 * 3.0);
    }
}
