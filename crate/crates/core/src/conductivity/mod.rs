//! Thickness-averaged film conductivity with specular–diffuse boundary
//! scattering.
//!
//! The factor
//!
//! ```text
//! φ(w) = 1 − (3/2w)(1−p) ∫₁^∞ (t⁻³ − t⁻⁵) (1 − e^{−wt}) / (1 − p e^{−wt}) dt
//! ```
//!
//! multiplies the bulk Drude conductivity σ₀/(1 − iωτ); `w` is the film
//! thickness over the (complexified) mean free path. The production path
//! expands `1/(1 − p e^{−wt})` geometrically and integrates each term in
//! closed form with exponential integrals, which stays well behaved when `w`
//! is nearly imaginary and the integrand oscillates. An adaptive
//! Gauss–Kronrod evaluation of the same integral is kept as an independent
//! second backend.

pub mod expint;
pub mod quadrature;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::material::DimensionlessPoint;

use self::expint::{expint_en, expint_en_reduced};

/// Default relative tolerance on φ.
pub const DEFAULT_TOL: f64 = 1e-10;

const MAX_SERIES_TERMS: usize = 200_000;
const MAX_QUAD_INTERVALS: usize = 4_000;

/// φ(w̃) together with the argument it was evaluated at and an error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConductivityFactor {
    pub phi: Complex64,
    pub w_used: Complex64,
    pub quad_error_estimate: f64,
}

impl ConductivityFactor {
    /// Φ(w) = w/φ(w), the form that enters σ_d = (w/Φ)·σ₀.
    pub fn big_phi(&self) -> Complex64 {
        self.w_used / self.phi
    }
}

fn validate(w: Complex64, p: f64, tol: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter {
            name: "specularity",
            value: p,
            reason: "must lie in [0, 1]",
        });
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            reason: "must be positive",
        });
    }
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "w",
            value: w.norm(),
            reason: "must be finite",
        });
    }
    if p < 1.0 && w.re <= 0.0 {
        return Err(Error::NonConvergentIntegral { w, p });
    }
    Ok(())
}

fn specular(w: Complex64) -> ConductivityFactor {
    ConductivityFactor {
        phi: Complex64::new(1.0, 0.0),
        w_used: w,
        quad_error_estimate: 0.0,
    }
}

/// J(a) = ∫₁^∞ (t⁻³ − t⁻⁵) e^{−at} dt = E₃(a) − E₅(a).
fn kernel_moment(a: Complex64) -> Result<Complex64> {
    match (expint_en(3, a), expint_en(5, a)) {
        (Some(e3), Some(e5)) => Ok(e3 - e5),
        _ => Err(Error::NonConvergentIntegral { w: a, p: 0.0 }),
    }
}

/// Δ(a) = 1/4 − J(a) = ∫₁^∞ (t⁻³ − t⁻⁵)(1 − e^{−at}) dt, without cancellation for small |a|.
fn kernel_deficit(a: Complex64) -> Result<Complex64> {
    match (expint_en_reduced(3, a), expint_en_reduced(5, a)) {
        (Some(r3), Some(r5)) => Ok(r5 - r3),
        _ => Err(Error::NonConvergentIntegral { w: a, p: 0.0 }),
    }
}

/// Arguments up to this modulus use the deficit form Δ = 1/4 − J.
const DEFICIT_RADIUS: f64 = 2.0;

/// Evaluates φ(w) for specularity `p` to relative accuracy `tol`.
///
/// With `S = ∫₁^∞ (t⁻³ − t⁻⁵)(1 − e^{−wt})/(1 − p e^{−wt}) dt`, expanding
/// `1/(1 − p e^{−wt})` geometrically and summing by parts gives, for any `M ≥ 0`,
///
/// ```text
/// S = (1−p) Σ_{n≤M} p^{n−1} Δ(nw) + p^M/4 − (1−p) Σ_{n>M} p^{n−1} J(nw)
/// ```
///
/// with `J(a) = E₃(a) − E₅(a)` and `Δ = 1/4 − J`. Terms with `|nw|` small use
/// Δ, the rest J. Since `|J(a)| ≤ min(1/4, 2/|a|)·e^{−Re a}`, the remainder
/// after `N` terms is bounded by `min(1/4, 2/((N+1)|w|))·(p e^{−Re w})^N`.
pub fn phi_factor(w: Complex64, p: f64, tol: f64) -> Result<ConductivityFactor> {
    validate(w, p, tol)?;
    if p == 1.0 {
        return Ok(specular(w));
    }
    let scale = 1.5 * (1.0 - p) / w;
    let ratio = p * (-w.re).exp();
    let w_abs = w.norm();

    let mut deficit_sum = Complex64::new(0.0, 0.0);
    let mut moment_sum = Complex64::new(0.0, 0.0);
    // p^M for the last deficit term M
    let mut deficit_weight = 1.0;
    let mut magnitude = 0.0;
    let mut weight = 1.0; // p^{n-1}
    let mut n = 1usize;
    loop {
        let arg = w * n as f64;
        if arg.norm() <= DEFICIT_RADIUS && moment_sum == Complex64::new(0.0, 0.0) {
            let term = kernel_deficit(arg)? * weight;
            deficit_sum += term;
            deficit_weight = weight * p;
            magnitude += (1.0 - p) * term.norm();
        } else {
            let term = kernel_moment(arg)? * weight;
            moment_sum += term;
            magnitude += (1.0 - p) * term.norm();
        }

        let s = deficit_sum * (1.0 - p) + 0.25 * deficit_weight - moment_sum * (1.0 - p);
        let phi = Complex64::new(1.0, 0.0) - scale * s;
        let next_bound = (0.25_f64).min(2.0 / ((n + 1) as f64 * w_abs));
        let truncation = scale.norm() * next_bound * ratio.powi(n as i32);
        let rounding = 4.0 * f64::EPSILON * (1.0 + scale.norm() * (magnitude + 0.25 * deficit_weight));
        let error = truncation + rounding;
        let target = tol * phi.norm();

        if truncation <= 0.5 * target || ratio == 0.0 {
            if error > target {
                return Err(Error::Accuracy {
                    best: phi,
                    error_estimate: error,
                    tol,
                });
            }
            return Ok(ConductivityFactor {
                phi,
                w_used: w,
                quad_error_estimate: error / phi.norm(),
            });
        }
        if n >= MAX_SERIES_TERMS {
            return Err(Error::Accuracy {
                best: phi,
                error_estimate: error,
                tol,
            });
        }
        weight *= p;
        n += 1;
    }
}

/// Evaluates φ(w) by adaptive Gauss–Kronrod quadrature of the defining
/// integral, after mapping `t = 1/u` onto `u ∈ (0, 1]`.
///
/// Independent of [`phi_factor`]; intended for cross-checks and for
/// arguments where the integrand is not oscillatory.
pub fn phi_factor_quadrature(w: Complex64, p: f64, tol: f64) -> Result<ConductivityFactor> {
    validate(w, p, tol)?;
    if p == 1.0 {
        return Ok(specular(w));
    }
    let integrand = |u: f64| {
        if u <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let decay = (-w / u).exp();
        let ratio = (Complex64::new(1.0, 0.0) - decay) / (Complex64::new(1.0, 0.0) - decay * p);
        ratio * (u - u * u * u)
    };
    let scale = (1.5 * (1.0 - p) / w).norm();
    // |φ| is bounded below by roughly min(1, |w|)/4 on the physical domain; refine
    // against the running value rather than guessing.
    let mut rel = tol;
    for _ in 0..4 {
        let res = quadrature::integrate(integrand, 0.0, 1.0, 0.0, rel, MAX_QUAD_INTERVALS);
        let phi = Complex64::new(1.0, 0.0) - res.value * (1.5 * (1.0 - p) / w);
        let error = scale * res.error;
        if error <= tol * phi.norm() {
            return Ok(ConductivityFactor {
                phi,
                w_used: w,
                quad_error_estimate: error / phi.norm(),
            });
        }
        if !res.converged || rel < 1e-15 {
            return Err(Error::Accuracy {
                best: phi,
                error_estimate: error,
                tol,
            });
        }
        rel *= 0.5 * tol * phi.norm() / error;
        rel = rel.max(1e-15);
    }
    let res = quadrature::integrate(integrand, 0.0, 1.0, 0.0, rel, MAX_QUAD_INTERVALS);
    Err(Error::Accuracy {
        best: Complex64::new(1.0, 0.0) - res.value * (1.5 * (1.0 - p) / w),
        error_estimate: scale * res.error,
        tol,
    })
}

/// Ratio of the film-averaged conductivity to the complexified bulk Drude
/// conductivity σ₀/(1 − iωτ), i.e. φ(w̃) at the point's complex `w`.
pub fn sigma_ratio(point: &DimensionlessPoint, p: f64, tol: f64) -> Result<Complex64> {
    phi_factor(point.w, p, tol).map(|f| f.phi)
}
