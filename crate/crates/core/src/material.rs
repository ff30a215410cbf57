//! Material constants, film geometry and the conversion of physical inputs
//! into the dimensionless variables used everywhere else.
//!
//! Units are CGS-Gaussian: lengths in cm, velocities in cm/s, angular
//! frequencies in rad/s.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Speed of light in vacuum, cm/s.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e10;

/// Centimetres per nanometre.
pub const CM_PER_NM: f64 = 1e-7;

/// Plasma frequency of sodium, rad/s.
pub const SODIUM_PLASMA_FREQUENCY: f64 = 6.5e15;

/// Fermi velocity of sodium, cm/s.
pub const SODIUM_FERMI_VELOCITY: f64 = 8.52e7;

/// Electron-gas parameters of a metal.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialParams {
    plasma_frequency: f64,
    fermi_velocity: f64,
    label: String,
}

impl MaterialParams {
    pub fn new(label: impl Into<String>, plasma_frequency: f64, fermi_velocity: f64) -> Result<Self> {
        if !(plasma_frequency.is_finite() && plasma_frequency > 0.0) {
            return Err(Error::InvalidParameter {
                name: "plasma_frequency",
                value: plasma_frequency,
                reason: "must be positive and finite",
            });
        }
        if !(fermi_velocity.is_finite() && fermi_velocity > 0.0) {
            return Err(Error::InvalidParameter {
                name: "fermi_velocity",
                value: fermi_velocity,
                reason: "must be positive and finite",
            });
        }
        if fermi_velocity >= SPEED_OF_LIGHT {
            return Err(Error::InvalidParameter {
                name: "fermi_velocity",
                value: fermi_velocity,
                reason: "must be below the speed of light",
            });
        }
        Ok(Self {
            plasma_frequency,
            fermi_velocity,
            label: label.into(),
        })
    }

    /// Sodium: ω_p = 6.5·10¹⁵ s⁻¹, v_F = 8.52·10⁷ cm/s.
    pub fn sodium() -> Self {
        Self {
            plasma_frequency: SODIUM_PLASMA_FREQUENCY,
            fermi_velocity: SODIUM_FERMI_VELOCITY,
            label: "sodium".to_owned(),
        }
    }

    /// Plasma frequency ω_p in rad/s.
    pub fn plasma_frequency(&self) -> f64 {
        self.plasma_frequency
    }

    /// Fermi velocity v_F in cm/s.
    pub fn fermi_velocity(&self) -> f64 {
        self.fermi_velocity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Infrared skin depth δ₀ = c/ω_p in cm.
    pub fn skin_depth(&self) -> f64 {
        skin_depth(self)
    }

    /// Wave number of light at the plasma frequency, ω_p/c in 1/cm.
    pub fn plasma_wave_number(&self) -> f64 {
        self.plasma_frequency / SPEED_OF_LIGHT
    }
}

impl Default for MaterialParams {
    fn default() -> Self {
        Self::sodium()
    }
}

/// Infrared skin depth δ₀ = c/ω_p in cm.
pub fn skin_depth(mat: &MaterialParams) -> f64 {
    SPEED_OF_LIGHT / mat.plasma_frequency
}

/// Geometry and scattering parameters of the film.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilmConfig {
    thickness: f64,
    specularity: f64,
    collision_rate: f64,
}

impl FilmConfig {
    /// `thickness` in cm, `specularity` in [0, 1], `collision_rate` ν in rad/s.
    pub fn new(thickness: f64, specularity: f64, collision_rate: f64) -> Result<Self> {
        if !(thickness.is_finite() && thickness > 0.0) {
            return Err(Error::InvalidParameter {
                name: "thickness",
                value: thickness,
                reason: "must be positive and finite",
            });
        }
        if !(0.0..=1.0).contains(&specularity) {
            return Err(Error::InvalidParameter {
                name: "specularity",
                value: specularity,
                reason: "must lie in [0, 1]",
            });
        }
        if !(collision_rate.is_finite() && collision_rate >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "collision_rate",
                value: collision_rate,
                reason: "must be non-negative and finite",
            });
        }
        Ok(Self {
            thickness,
            specularity,
            collision_rate,
        })
    }

    /// Builds a film from a thickness in nm and a collision rate given as ε = ν/ω_p.
    pub fn from_nm(mat: &MaterialParams, thickness_nm: f64, specularity: f64, eps: f64) -> Result<Self> {
        if !(eps.is_finite() && eps >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "eps",
                value: eps,
                reason: "must be non-negative and finite",
            });
        }
        Self::new(thickness_nm * CM_PER_NM, specularity, eps * mat.plasma_frequency)
    }

    /// Film thickness d in cm.
    pub fn thickness(&self) -> f64 {
        self.thickness
    }

    pub fn thickness_nm(&self) -> f64 {
        self.thickness / CM_PER_NM
    }

    /// d₀ = d/2.
    pub fn half_thickness(&self) -> f64 {
        0.5 * self.thickness
    }

    /// Specularity coefficient p.
    pub fn specularity(&self) -> f64 {
        self.specularity
    }

    /// Electron collision rate ν in rad/s.
    pub fn collision_rate(&self) -> f64 {
        self.collision_rate
    }

    pub fn with_specularity(self, specularity: f64) -> Result<Self> {
        Self::new(self.thickness, specularity, self.collision_rate)
    }

    /// ε = ν/ω_p.
    pub fn eps(&self, mat: &MaterialParams) -> f64 {
        self.collision_rate / mat.plasma_frequency
    }
}

/// A nondimensional evaluation point: Ω = ω/ω_p, ε = ν/ω_p and the
/// complexified thickness-to-mean-free-path ratio w̃ = (d·ω_p/v_F)(ε − iΩ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessPoint {
    pub omega: f64,
    pub eps: f64,
    pub w: Complex64,
}

impl DimensionlessPoint {
    /// Point at Ω = `omega_ratio` for the given material and film.
    pub fn at_ratio(mat: &MaterialParams, film: &FilmConfig, omega_ratio: f64) -> Result<Self> {
        if !(omega_ratio.is_finite() && omega_ratio > 0.0) {
            return Err(Error::InvalidParameter {
                name: "omega",
                value: omega_ratio,
                reason: "frequency must be positive",
            });
        }
        let eps = film.eps(mat);
        let scale = film.thickness * mat.plasma_frequency / mat.fermi_velocity;
        Ok(Self {
            omega: omega_ratio,
            eps,
            w: Complex64::new(scale * eps, -scale * omega_ratio),
        })
    }

    /// Angular frequency ω = Ω·ω_p in rad/s.
    pub fn angular_frequency(&self, mat: &MaterialParams) -> f64 {
        self.omega * mat.plasma_frequency
    }
}

/// Converts an angular frequency `omega` (rad/s) into a [`DimensionlessPoint`].
pub fn make_dimensionless(mat: &MaterialParams, film: &FilmConfig, omega: f64) -> Result<DimensionlessPoint> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidParameter {
            name: "omega",
            value: omega,
            reason: "frequency must be positive",
        });
    }
    DimensionlessPoint::at_ratio(mat, film, omega / mat.plasma_frequency)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn sodium_at_plasma_frequency() {
        let mat = MaterialParams::sodium();
        let film = FilmConfig::from_nm(&mat, 10.0, 1.0, 0.0).unwrap();
        let pt = make_dimensionless(&mat, &film, mat.plasma_frequency()).unwrap();
        assert_eq!(pt.omega, 1.0);
        assert_eq!(pt.eps, 0.0);
        assert_eq!(pt.w.re, 0.0);
        // 1e-6 cm * 6.5e15 / 8.52e7
        let expected = -1e-6 * 6.5e15 / 8.52e7;
        assert!(rel(pt.w.im, expected) < 1e-14);
        assert!((pt.w.im + 76.29).abs() < 0.01);
    }

    #[test]
    fn unit_ratios() {
        let mat = MaterialParams::new("x", 3.0e15, 1.0e8).unwrap();
        let film = FilmConfig::new(2e-7, 0.4, mat.plasma_frequency()).unwrap();
        let pt = make_dimensionless(&mat, &film, mat.plasma_frequency()).unwrap();
        assert_eq!(pt.omega, 1.0);
        assert_eq!(pt.eps, 1.0);
    }

    #[test]
    fn w_ratio_is_eps_over_omega() {
        let mat = MaterialParams::sodium();
        let film = FilmConfig::from_nm(&mat, 10.0, 1.0, 0.1).unwrap();
        let pt = make_dimensionless(&mat, &film, 0.5 * mat.plasma_frequency()).unwrap();
        assert!(rel(pt.w.re / pt.w.im.abs(), 0.2) < 1e-12);
    }

    #[test]
    fn skin_depth_values() {
        let na = MaterialParams::sodium();
        assert!(rel(skin_depth(&na), 2.99792458e10 / 6.5e15) < 1e-15);
        assert!(na.skin_depth() > 1e-6 && na.skin_depth() < 1e-5);

        let unit = MaterialParams::new("unit", SPEED_OF_LIGHT, 1.0).unwrap();
        assert_eq!(unit.skin_depth(), 1.0);

        let doubled = MaterialParams::new("2x", 2.0 * SODIUM_PLASMA_FREQUENCY, SODIUM_FERMI_VELOCITY).unwrap();
        assert!(rel(doubled.skin_depth(), 0.5 * na.skin_depth()) < 1e-15);
    }

    #[test]
    fn low_frequency_w_is_d_over_l() {
        let mat = MaterialParams::sodium();
        let nu = 1e13;
        let film = FilmConfig::new(5e-7, 0.0, nu).unwrap();
        let pt = make_dimensionless(&mat, &film, 1e-3).unwrap();
        let mean_free_path = mat.fermi_velocity() / nu;
        assert!(rel(pt.w.re, 5e-7 / mean_free_path) < 1e-12);
        assert!(pt.w.im.abs() < 1e-12 * pt.w.re);
    }

    #[test]
    fn rejects_bad_inputs() {
        let mat = MaterialParams::sodium();
        let film = FilmConfig::from_nm(&mat, 10.0, 1.0, 0.0).unwrap();
        assert!(make_dimensionless(&mat, &film, 0.0).is_err());
        assert!(make_dimensionless(&mat, &film, -1.0).is_err());
        assert!(MaterialParams::new("x", -1.0, 1.0).is_err());
        assert!(MaterialParams::new("x", 1.0, 0.0).is_err());
        assert!(MaterialParams::new("x", 1.0, 3e10).is_err());
        assert!(FilmConfig::new(0.0, 0.5, 0.0).is_err());
        assert!(FilmConfig::new(1e-7, 1.5, 0.0).is_err());
        assert!(FilmConfig::new(1e-7, -0.1, 0.0).is_err());
        assert!(FilmConfig::new(1e-7, 0.5, -1.0).is_err());
    }

    #[test]
    fn half_thickness() {
        let film = FilmConfig::new(4e-7, 1.0, 0.0).unwrap();
        assert_eq!(film.half_thickness(), 2e-7);
        assert!(rel(film.thickness_nm(), 4.0) < 1e-14);
    }
}
