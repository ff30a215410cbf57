//! Dispersion of surface plasma waves in thin metallic films.
//!
//! The film is thinner than the infrared skin depth, the surface fields are
//! antisymmetric in the magnetic field, and conduction electrons scatter off
//! the film faces with specularity `p` (0 = diffuse, 1 = mirror-like). The
//! crate evaluates
//!
//! - the thickness-averaged conductivity factor φ(w̃) ([`conductivity`]),
//! - the surface impedance and complex wave number k(Ω) ([`dispersion`]),
//! - the critical frequencies bounding the propagation band ([`critical`]),
//! - parameter sweeps, table reproductions and CSV output ([`sweep`]).
//!
//! ```
//! use film_plasmon::{k_general, DimensionlessPoint, FilmConfig, MaterialParams};
//!
//! let sodium = MaterialParams::sodium();
//! let film = FilmConfig::from_nm(&sodium, 10.0, 1.0, 1e-5).unwrap();
//! let point = DimensionlessPoint::at_ratio(&sodium, &film, 0.5).unwrap();
//! let k = k_general(&point, &film, &sodium, 1e-10).unwrap();
//! assert!(k.k.re > k.k.im);
//! ```

pub mod conductivity;
pub mod critical;
pub mod dispersion;
pub mod error;
pub mod material;
pub mod sweep;

pub use conductivity::{phi_factor, phi_factor_quadrature, sigma_ratio, ConductivityFactor, DEFAULT_TOL};
pub use critical::{existence_predicate, find_critical_band, CriticalBand, ScanOptions};
pub use dispersion::{
    damping_alpha, impedance_antisymmetric, k_general, k_specular_closed_form, ComplexWaveNumber, ImpedanceValue,
};
pub use error::{Error, Result};
pub use material::{make_dimensionless, skin_depth, DimensionlessPoint, FilmConfig, MaterialParams};
pub use num_complex::Complex64;
