//! Critical frequencies Ω₀ < Ω₁ at which Im k(Ω) = Re k(Ω). Between them
//! the surface wave propagates (Im k < Re k); outside it is overdamped.

use rayon::prelude::*;

use crate::conductivity::DEFAULT_TOL;
use crate::dispersion::{k_general, ComplexWaveNumber};
use crate::error::{Error, Result};
use crate::material::{DimensionlessPoint, FilmConfig, MaterialParams};

/// Relative jump of k across a bracket above which a sign change of
/// Im k − Re k is a branch-cut discontinuity of the square root rather
/// than a crossing.
const JUMP_THRESHOLD: f64 = 1e-3;

/// Existence band of the surface plasma wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalBand {
    /// Lower edge; `Some(0.0)` when the band already starts at the low end of the scan.
    pub omega0: Option<f64>,
    /// Upper edge, when the band closes before the end of the scan.
    pub omega1: Option<f64>,
    pub band_nonempty: bool,
}

impl CriticalBand {
    pub fn empty() -> Self {
        Self {
            omega0: None,
            omega1: None,
            band_nonempty: false,
        }
    }

    pub fn contains(&self, omega: f64) -> bool {
        match (self.band_nonempty, self.omega0, self.omega1) {
            (true, Some(lo), Some(hi)) => omega > lo && omega < hi,
            (true, Some(lo), None) => omega > lo,
            _ => false,
        }
    }
}

/// Scan and refinement settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub omega_min: f64,
    pub omega_max: f64,
    /// Number of uniform grid nodes in the coarse scan (≥ 64).
    pub grid_n: usize,
    /// Bisection stops once the bracket is narrower than this.
    pub tol: f64,
    /// Relative tolerance passed to the conductivity factor.
    pub phi_tol: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            omega_min: 1e-3,
            omega_max: 1.0 - 1e-3,
            grid_n: 2048,
            tol: 1e-10,
            phi_tol: DEFAULT_TOL,
        }
    }
}

impl ScanOptions {
    fn validate(&self, film: &FilmConfig, mat: &MaterialParams) -> Result<()> {
        if self.grid_n < 64 {
            return Err(Error::InvalidParameter {
                name: "grid_n",
                value: self.grid_n as f64,
                reason: "must be at least 64",
            });
        }
        if !(self.tol > 0.0 && self.phi_tol > 0.0) {
            return Err(Error::InvalidParameter {
                name: "tol",
                value: self.tol.min(self.phi_tol),
                reason: "must be positive",
            });
        }
        if !(self.omega_min > 0.0 && self.omega_max > self.omega_min && self.omega_max.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "omega_max",
                value: self.omega_max,
                reason: "scan range must satisfy 0 < omega_min < omega_max",
            });
        }
        if film.eps(mat) <= 0.0 && film.specularity() < 1.0 {
            return Err(Error::InvalidParameter {
                name: "eps",
                value: 0.0,
                reason: "collisionless scan requires specular reflection",
            });
        }
        Ok(())
    }
}

/// A sign change of g = Im k − Re k found by the scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub omega: f64,
    /// `true` if Im k − Re k goes from positive to negative with growing Ω (band opens).
    pub opens_band: bool,
}

fn wave_number(film: &FilmConfig, mat: &MaterialParams, omega: f64, phi_tol: f64) -> Result<ComplexWaveNumber> {
    let pt = DimensionlessPoint::at_ratio(mat, film, omega)?;
    k_general(&pt, film, mat, phi_tol)
}

fn gap(k: &ComplexWaveNumber) -> f64 {
    k.k.im - k.k.re
}

/// All genuine crossings of Im k = Re k on the scan range, in increasing Ω,
/// plus whether the band is already open at the first valid grid node.
pub fn find_crossings(film: &FilmConfig, mat: &MaterialParams, opts: &ScanOptions) -> Result<(bool, Vec<Crossing>)> {
    opts.validate(film, mat)?;
    let n = opts.grid_n;
    let step = (opts.omega_max - opts.omega_min) / (n - 1) as f64;
    let nodes: Vec<f64> = (0..n).map(|i| opts.omega_min + step * i as f64).collect();
    let samples: Vec<Option<ComplexWaveNumber>> = nodes
        .par_iter()
        .map(|&o| wave_number(film, mat, o, opts.phi_tol).ok())
        .collect();

    let valid: Vec<(f64, ComplexWaveNumber)> = nodes
        .iter()
        .zip(&samples)
        .filter_map(|(&o, k)| k.map(|k| (o, k)))
        .collect();
    let Some(&(_, first)) = valid.first() else {
        return Ok((false, Vec::new()));
    };
    let starts_inside = gap(&first) < 0.0;

    let mut crossings = Vec::new();
    let mut i = 0;
    while i + 1 < valid.len() {
        let (oa, ka) = valid[i];
        let (ob, kb) = valid[i + 1];
        let (ga, gb) = (gap(&ka), gap(&kb));
        if ga == 0.0 && i > 0 {
            // exact zero on a node: bracket with its neighbours
            let (op, kp) = valid[i - 1];
            let gp = gap(&kp);
            if gp.signum() != gb.signum() && gb != 0.0 {
                if let Some(c) = refine(film, mat, opts, op, gp, ob, gb)? {
                    crossings.push(c);
                }
            }
        } else if ga != 0.0 && gb != 0.0 && ga.signum() != gb.signum() {
            if let Some(c) = refine(film, mat, opts, oa, ga, ob, gb)? {
                crossings.push(c);
            }
        }
        i += 1;
    }
    crossings.dedup_by(|a, b| (a.omega - b.omega).abs() <= 2.0 * opts.tol);
    Ok((starts_inside, crossings))
}

/// Bisects a sign change of g on [lo, hi]. Returns `None` when the bracket
/// collapses onto a discontinuity of k instead of a zero of g.
fn refine(
    film: &FilmConfig,
    mat: &MaterialParams,
    opts: &ScanOptions,
    mut lo: f64,
    mut g_lo: f64,
    mut hi: f64,
    g_hi: f64,
) -> Result<Option<Crossing>> {
    let opens_band = g_lo > 0.0;
    let mut k_lo = wave_number(film, mat, lo, opts.phi_tol)?;
    let mut k_hi = wave_number(film, mat, hi, opts.phi_tol)?;
    debug_assert!(g_hi.signum() != g_lo.signum());
    while hi - lo > opts.tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let k_mid = wave_number(film, mat, mid, opts.phi_tol)?;
        let g_mid = gap(&k_mid);
        if g_mid == 0.0 {
            return Ok(Some(Crossing { omega: mid, opens_band }));
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
            k_lo = k_mid;
        } else {
            hi = mid;
            k_hi = k_mid;
        }
    }
    let jump = (k_hi.k - k_lo.k).norm() / k_hi.k.norm().max(k_lo.k.norm());
    if jump > JUMP_THRESHOLD {
        return Ok(None);
    }
    Ok(Some(Crossing {
        omega: 0.5 * (lo + hi),
        opens_band,
    }))
}

/// Locates the existence band (Ω₀, Ω₁) of the surface wave for `film`.
///
/// The collision rate and specularity are taken from `film`. Ω₀ is reported
/// as exactly 0 when Im k < Re k already holds at the low end of the scan.
pub fn find_critical_band(film: &FilmConfig, mat: &MaterialParams, opts: &ScanOptions) -> Result<CriticalBand> {
    let (starts_inside, crossings) = find_crossings(film, mat, opts)?;
    let mut edges: Vec<f64> = Vec::with_capacity(crossings.len() + 1);
    if starts_inside {
        edges.push(0.0);
    }
    edges.extend(crossings.iter().map(|c| c.omega));
    match edges.as_slice() {
        [] => Ok(CriticalBand::empty()),
        [lo] => Ok(CriticalBand {
            omega0: Some(*lo),
            omega1: None,
            band_nonempty: true,
        }),
        [lo, hi] => Ok(CriticalBand {
            omega0: Some(*lo),
            omega1: Some(*hi),
            band_nonempty: true,
        }),
        _ => Err(Error::AmbiguousBand {
            crossings: crossings.iter().map(|c| c.omega).collect(),
        }),
    }
}

/// Whether the surface wave exists (Im k < Re k) at the point.
pub fn existence_predicate(
    point: &DimensionlessPoint,
    film: &FilmConfig,
    mat: &MaterialParams,
    tol: f64,
) -> Result<bool> {
    k_general(point, film, mat, tol).map(|k| k.exists_as_surface_wave)
}
