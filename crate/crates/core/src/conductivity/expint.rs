//! Generalized exponential integrals E_n(z) = ∫₁^∞ e^{−zt} t^{−n} dt for
//! complex z in the closed right half-plane.

use num_complex::Complex64;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_ITER: usize = 20_000;
const TINY: f64 = 1e-300;

/// Below this modulus the power series is used, above it the continued fraction.
const SERIES_RADIUS: f64 = 2.0;

/// E_n(z) for integer `n >= 1` and `Re z >= 0`, z ≠ 0 when n = 1.
///
/// Returns `None` if the argument lies outside that domain or the expansion
/// fails to converge.
pub fn expint_en(n: u32, z: Complex64) -> Option<Complex64> {
    if n == 0 || z.re < 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        return None;
    }
    if z == Complex64::new(0.0, 0.0) {
        return (n > 1).then(|| Complex64::new(1.0 / f64::from(n - 1), 0.0));
    }
    if z.re > 745.0 {
        // e^{-z} underflows; E_n(z) < e^{-Re z}/Re z.
        return Some(Complex64::new(0.0, 0.0));
    }
    if z.norm() <= SERIES_RADIUS {
        series(n, z)
    } else {
        continued_fraction(n, z)
    }
}

/// E_n(z) − 1/(n−1) for `n >= 2`, accurate in absolute terms for small |z|
/// where subtracting the leading constant from E_n(z) would cancel.
pub fn expint_en_reduced(n: u32, z: Complex64) -> Option<Complex64> {
    if n < 2 || z.re < 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        return None;
    }
    if z == Complex64::new(0.0, 0.0) {
        return Some(Complex64::new(0.0, 0.0));
    }
    let lead = 1.0 / f64::from(n - 1);
    if z.norm() <= SERIES_RADIUS {
        series_from(n, z, 1)
    } else {
        expint_en(n, z).map(|e| e - lead)
    }
}

fn digamma_int(n: u32) -> f64 {
    -EULER_GAMMA + (1..n).map(|m| 1.0 / f64::from(m)).sum::<f64>()
}

fn series(n: u32, z: Complex64) -> Option<Complex64> {
    series_from(n, z, 0)
}

/// Power series of E_n(z) with the polynomial terms of order below `first` dropped.
fn series_from(n: u32, z: Complex64, first: usize) -> Option<Complex64> {
    let nm1 = (n - 1) as usize;
    let minus_z = -z;
    let mut sum = Complex64::new(0.0, 0.0);
    // (−z)^k / k!
    let mut power = Complex64::new(1.0, 0.0);
    let mut log_term = None;
    for k in 0..MAX_ITER {
        if k > 0 {
            power = power * minus_z / k as f64;
        }
        if k == nm1 {
            log_term = Some(power * (digamma_int(n) - z.ln()));
            continue;
        }
        if k < first {
            continue;
        }
        let term = power / (k as f64 - nm1 as f64);
        sum += term;
        if k > nm1 && term.norm() <= f64::EPSILON * 0.25 * sum.norm().max(TINY) {
            return log_term.map(|l| l - sum);
        }
    }
    None
}

fn continued_fraction(n: u32, z: Complex64) -> Option<Complex64> {
    let nf = f64::from(n);
    let mut b = z + nf;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        let an = -fi * (nf - 1.0 + fi);
        b += 2.0;
        d = an * d + b;
        if d.norm() < TINY {
            d = Complex64::new(TINY, 0.0);
        }
        c = b + an / c;
        if c.norm() < TINY {
            c = Complex64::new(TINY, 0.0);
        }
        d = d.inv();
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() <= f64::EPSILON {
            return Some(h * (-z).exp());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        // E_1(1) = 0.21938393439552027...
        let e1 = expint_en(1, Complex64::new(1.0, 0.0)).unwrap();
        assert!((e1.re - 0.219_383_934_395_520_27).abs() < 1e-15);
        // E_n(0) = 1/(n-1)
        assert_eq!(expint_en(3, Complex64::new(0.0, 0.0)).unwrap().re, 0.5);
        assert_eq!(expint_en(5, Complex64::new(0.0, 0.0)).unwrap().re, 0.25);
        assert!(expint_en(1, Complex64::new(0.0, 0.0)).is_none());
        assert!(expint_en(3, Complex64::new(-1.0, 0.0)).is_none());
    }

    #[test]
    fn recurrence_holds() {
        // n E_{n+1}(z) = e^{-z} - z E_n(z)
        for &z in &[
            Complex64::new(0.4, -0.3),
            Complex64::new(1.9, 0.1),
            Complex64::new(2.1, -0.2),
            Complex64::new(0.01, -30.0),
        ] {
            for n in 1..6u32 {
                let lhs = expint_en(n + 1, z).unwrap() * f64::from(n);
                let rhs = (-z).exp() - z * expint_en(n, z).unwrap();
                assert!((lhs - rhs).norm() < 1e-13 * rhs.norm().max(1e-3), "n={n} z={z}");
            }
        }
    }

    #[test]
    fn reduced_form() {
        for &z in &[Complex64::new(1e-7, -3e-6), Complex64::new(0.5, 0.5), Complex64::new(3.0, -1.0)] {
            for n in [3, 5] {
                let full = expint_en(n, z).unwrap();
                let red = expint_en_reduced(n, z).unwrap();
                assert!((full - 1.0 / f64::from(n - 1) - red).norm() < 1e-15);
            }
        }
        // E_3(z) − 1/2 ≈ −z for tiny z
        let z = Complex64::new(1e-9, 0.0);
        let red = expint_en_reduced(3, z).unwrap();
        assert!((red.re + 1e-9).abs() < 1e-16);
    }

    #[test]
    fn methods_agree_at_switch_radius() {
        for angle in [-1.5_f64, -0.7, 0.0, 0.9, 1.5] {
            let z = Complex64::from_polar(SERIES_RADIUS, angle);
            for n in [1, 3, 5] {
                let a = series(n, z).unwrap();
                let b = continued_fraction(n, z).unwrap();
                assert!((a - b).norm() < 1e-13 * b.norm(), "n={n} z={z}");
            }
        }
    }
}
