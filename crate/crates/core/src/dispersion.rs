//! Surface impedance of the film in the antisymmetric field configuration
//! and the complex wave number k(Ω) of the surface plasmon.
//!
//! With D(Ω) = 1 − φ(w̃)/(Ω(Ω + iε)) the dispersion law reads
//!
//! ```text
//! k² = (ω_p Ω / c)² + 4 / (d² D²)
//! ```
//!
//! For specular reflection (φ ≡ 1) this reduces to the closed form
//! `k = (ω_p/c) Ω sqrt(1 + c²(Ω+iε)² / ((ω_p d₀)² (Ω²−1+iεΩ)²))`, d₀ = d/2.

use num_complex::Complex64;

use crate::conductivity::sigma_ratio;
use crate::error::{Error, Result};
use crate::material::{DimensionlessPoint, FilmConfig, MaterialParams, SPEED_OF_LIGHT};

/// |D| or |Ω² − 1 + iεΩ| below this is treated as the plasma resonance.
pub const RESONANCE_GUARD: f64 = 1e-12;

/// Complex surface-plasmon wave number with its exterior damping parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexWaveNumber {
    /// k in 1/cm, on the branch Re k ≥ 0.
    pub k: Complex64,
    /// α = sqrt(k² − ω²/c²) in 1/cm, Re α ≥ 0.
    pub alpha: Complex64,
    /// Im k < Re k.
    pub exists_as_surface_wave: bool,
}

impl ComplexWaveNumber {
    fn new(k: Complex64, omega: f64) -> Self {
        Self {
            k,
            alpha: damping_alpha(k, omega),
            exists_as_surface_wave: k.im < k.re,
        }
    }

    /// Z = Re k / Im k.
    pub fn quality_ratio(&self) -> f64 {
        self.k.re / self.k.im
    }
}

/// Surface impedance Z⁽²⁾ = E_z/H_y at the lower face (dimensionless, Gaussian units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpedanceValue {
    pub z2: Complex64,
    /// The bracket 1 + i4πσ_d/ω = D(Ω).
    pub denominator: Complex64,
}

/// Square root on the branch Re ≥ 0, with Re = 0 resolved toward Im ≥ 0.
pub fn branch_sqrt(z: Complex64) -> Complex64 {
    let r = z.sqrt();
    if r.re < 0.0 || (r.re == 0.0 && r.im < 0.0) {
        -r
    } else {
        r
    }
}

/// Damping parameter α = sqrt(k² − ω²/c²) of the exterior fields, Re α ≥ 0.
pub fn damping_alpha(k: Complex64, omega: f64) -> Complex64 {
    let k0 = omega / SPEED_OF_LIGHT;
    // (k - k0)(k + k0) keeps precision near the light line
    branch_sqrt((k - k0) * (k + k0))
}

/// D(Ω) = 1 + i4πσ_d/ω = 1 − φ(w̃)/(Ω(Ω + iε)).
pub fn film_denominator(point: &DimensionlessPoint, p: f64, tol: f64) -> Result<Complex64> {
    if !(point.omega.is_finite() && point.omega > 0.0) {
        return Err(Error::InvalidParameter {
            name: "omega",
            value: point.omega,
            reason: "frequency must be positive",
        });
    }
    let phi = sigma_ratio(point, p, tol)?;
    let omega = point.omega;
    let d = Complex64::new(1.0, 0.0) - phi / (omega * Complex64::new(omega, point.eps));
    if d.norm() < RESONANCE_GUARD {
        return Err(Error::ResonanceSingularity {
            omega,
            magnitude: d.norm(),
        });
    }
    Ok(d)
}

/// Z⁽²⁾ = −2ic / (ωd (1 + i4πσ_d/ω)).
pub fn impedance_antisymmetric(
    point: &DimensionlessPoint,
    film: &FilmConfig,
    mat: &MaterialParams,
    tol: f64,
) -> Result<ImpedanceValue> {
    let denominator = film_denominator(point, film.specularity(), tol)?;
    let omega = point.angular_frequency(mat);
    let z2 = Complex64::new(0.0, -2.0 * SPEED_OF_LIGHT) / (omega * film.thickness() * denominator);
    Ok(ImpedanceValue { z2, denominator })
}

/// k(Ω) for arbitrary specularity, with φ(w̃) from the conductivity series.
pub fn k_general(
    point: &DimensionlessPoint,
    film: &FilmConfig,
    mat: &MaterialParams,
    tol: f64,
) -> Result<ComplexWaveNumber> {
    let denominator = film_denominator(point, film.specularity(), tol)?;
    let k0 = mat.plasma_wave_number() * point.omega;
    let film_term = 2.0 / (film.thickness() * denominator);
    let k = branch_sqrt(film_term * film_term + k0 * k0);
    Ok(ComplexWaveNumber::new(k, point.angular_frequency(mat)))
}

/// k(Ω) in closed form for specular reflection; no quadrature involved.
pub fn k_specular_closed_form(
    point: &DimensionlessPoint,
    film: &FilmConfig,
    mat: &MaterialParams,
) -> Result<ComplexWaveNumber> {
    let omega = point.omega;
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidParameter {
            name: "omega",
            value: omega,
            reason: "frequency must be positive",
        });
    }
    let eps = point.eps;
    let resonance = Complex64::new(omega * omega - 1.0, eps * omega);
    if resonance.norm() < RESONANCE_GUARD {
        return Err(Error::ResonanceSingularity {
            omega,
            magnitude: resonance.norm(),
        });
    }
    let scale = SPEED_OF_LIGHT / (mat.plasma_frequency() * film.half_thickness());
    let ratio = Complex64::new(omega, eps) / resonance * scale;
    let k = branch_sqrt(ratio * ratio + 1.0) * (mat.plasma_wave_number() * omega);
    Ok(ComplexWaveNumber::new(k, point.angular_frequency(mat)))
}

/// Relative residual of the dispersive equation
/// `2c/(ωd·D) + sqrt(c²k² − ω²)/ω = 0`.
///
/// Squaring the equation to solve for k loses the sign of the square root,
/// so the residual is taken on whichever root branch the equation selects.
pub fn dispersion_residual(
    k: Complex64,
    point: &DimensionlessPoint,
    film: &FilmConfig,
    mat: &MaterialParams,
    tol: f64,
) -> Result<f64> {
    let denominator = film_denominator(point, film.specularity(), tol)?;
    let omega = point.angular_frequency(mat);
    let lhs = 2.0 * SPEED_OF_LIGHT / (omega * film.thickness() * denominator);
    let root = damping_alpha(k, omega) * SPEED_OF_LIGHT / omega;
    let residual = (lhs + root).norm().min((lhs - root).norm());
    Ok(residual / lhs.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conductivity::DEFAULT_TOL;

    fn setup(d_nm: f64, p: f64, eps: f64, omega: f64) -> (MaterialParams, FilmConfig, DimensionlessPoint) {
        let mat = MaterialParams::sodium();
        let film = FilmConfig::from_nm(&mat, d_nm, p, eps).unwrap();
        let pt = DimensionlessPoint::at_ratio(&mat, &film, omega).unwrap();
        (mat, film, pt)
    }

    #[test]
    fn resonance_is_reported() {
        let (mat, film, pt) = setup(10.0, 1.0, 0.0, 1.0);
        assert!(matches!(
            impedance_antisymmetric(&pt, &film, &mat, DEFAULT_TOL),
            Err(Error::ResonanceSingularity { .. })
        ));
        assert!(matches!(
            k_general(&pt, &film, &mat, DEFAULT_TOL),
            Err(Error::ResonanceSingularity { .. })
        ));
        assert!(matches!(
            k_specular_closed_form(&pt, &film, &mat),
            Err(Error::ResonanceSingularity { .. })
        ));
    }

    #[test]
    fn specular_denominator_structure() {
        let (_, _, pt) = setup(7.0, 1.0, 0.03, 0.6);
        let d = film_denominator(&pt, 1.0, DEFAULT_TOL).unwrap();
        let (o, e) = (pt.omega, pt.eps);
        let expected = Complex64::new(o * o - 1.0, e * o) / (o * Complex64::new(o, e));
        assert!((d - expected).norm() < 1e-15);
    }

    #[test]
    fn high_frequency_impedance() {
        let (mat, film, pt) = setup(10.0, 1.0, 1e-3, 1e4);
        let z = impedance_antisymmetric(&pt, &film, &mat, DEFAULT_TOL).unwrap();
        let omega = pt.angular_frequency(&mat);
        let bare = Complex64::new(0.0, -2.0 * SPEED_OF_LIGHT / (omega * film.thickness()));
        assert!((z.denominator - 1.0).norm() < 1e-7);
        assert!((z.z2 - bare).norm() < 1e-7 * bare.norm());
    }

    #[test]
    fn impedance_matches_exterior_form() {
        // Z⁽²⁾ = iαc/ω on the branch where the equation holds
        let (mat, film, pt) = setup(5.0, 0.3, 0.05, 0.4);
        let z = impedance_antisymmetric(&pt, &film, &mat, DEFAULT_TOL).unwrap();
        let k = k_general(&pt, &film, &mat, DEFAULT_TOL).unwrap();
        let omega = pt.angular_frequency(&mat);
        let ext = Complex64::new(0.0, 1.0) * k.alpha * SPEED_OF_LIGHT / omega;
        let err = (z.z2 - ext).norm().min((z.z2 + ext).norm());
        assert!(err < 1e-10 * z.z2.norm());
    }

    #[test]
    fn general_matches_closed_form_for_specular() {
        let (mat, film, pt) = setup(10.0, 1.0, 1e-5, 0.5);
        let a = k_general(&pt, &film, &mat, DEFAULT_TOL).unwrap();
        let b = k_specular_closed_form(&pt, &film, &mat).unwrap();
        assert!((a.k - b.k).norm() < 1e-8 * b.k.norm());
    }

    #[test]
    fn collisionless_specular_is_undamped() {
        let (mat, film, pt) = setup(10.0, 1.0, 0.0, 0.5);
        let k = k_general(&pt, &film, &mat, DEFAULT_TOL).unwrap();
        assert_eq!(k.k.im, 0.0);
        let d0 = film.half_thickness();
        let o = pt.omega;
        let expected = mat.plasma_wave_number()
            * o
            * (1.0 + (SPEED_OF_LIGHT / (mat.plasma_frequency() * d0)).powi(2) / (o - 1.0 / o).powi(2)).sqrt();
        assert!((k.k.re - expected).abs() < 1e-13 * expected);
    }

    #[test]
    fn low_frequency_collisionless_limit() {
        let (mat, film, pt) = setup(10.0, 1.0, 0.0, 1e-4);
        let k = k_specular_closed_form(&pt, &film, &mat).unwrap();
        let o = pt.omega;
        let scale = SPEED_OF_LIGHT * o / (mat.plasma_frequency() * film.half_thickness());
        let limit = mat.plasma_wave_number() * o * (1.0 + scale * scale).sqrt();
        assert!((k.k.re - limit).abs() < 1e-7 * limit);
    }

    #[test]
    fn thick_film_approaches_light_line() {
        let (mat, film, pt) = setup(1e4, 1.0, 1e-5, 0.5);
        let k = k_general(&pt, &film, &mat, DEFAULT_TOL).unwrap();
        let light = mat.plasma_wave_number() * 0.5;
        assert!((k.k - light).norm() < 1e-3 * light);
    }

    #[test]
    fn alpha_cases() {
        let omega = 3e15;
        let k0 = omega / SPEED_OF_LIGHT;
        assert_eq!(damping_alpha(Complex64::new(k0, 0.0), omega), Complex64::new(0.0, 0.0));
        let a = damping_alpha(Complex64::new(2.0 * k0, 0.0), omega);
        assert!(a.re > 0.0 && a.im == 0.0);
        assert!((a.re - 3f64.sqrt() * k0).abs() < 1e-12 * k0);
        let below = damping_alpha(Complex64::new(0.5 * k0, 0.0), omega);
        assert!(below.re >= 0.0 && below.im > 0.0);
    }

    #[test]
    fn branch_convention() {
        assert_eq!(branch_sqrt(Complex64::new(-4.0, -0.0)), Complex64::new(0.0, 2.0));
        assert_eq!(branch_sqrt(Complex64::new(-4.0, 0.0)), Complex64::new(0.0, 2.0));
        let r = branch_sqrt(Complex64::new(-1.0, -1e-3));
        assert!(r.re > 0.0 && r.im < 0.0);
    }

    #[test]
    fn residual_vanishes() {
        let (mat, film, pt) = setup(3.0, 0.2, 0.1, 0.7);
        let k = k_general(&pt, &film, &mat, DEFAULT_TOL).unwrap();
        let r = dispersion_residual(k.k, &pt, &film, &mat, DEFAULT_TOL).unwrap();
        assert!(r < 1e-12, "{r}");
    }

    #[test]
    fn im_k_can_be_negative_above_resonance() {
        let (mat, film, pt) = setup(10.0, 0.5, 1e-3, 1.2);
        let k = k_general(&pt, &film, &mat, DEFAULT_TOL).unwrap();
        assert!(k.k.re > 0.0);
        assert!(k.k.im < 0.0, "{}", k.k);
    }
}
