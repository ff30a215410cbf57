//! Evaluate the conductivity reduction factor φ(w) with both backends
//! (exponential-integral series and adaptive quadrature) and compare them.
//!
//! Run with `cargo run --example conductivity_factor`.

use film_plasmon::{phi_factor, phi_factor_quadrature, Complex64, DEFAULT_TOL};

fn main() -> film_plasmon::Result<()> {
    let samples = [
        Complex64::new(0.01, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, -2.0),
        Complex64::new(0.05, -0.7),
        Complex64::new(20.0, -5.0),
    ];

    println!("{:>18} {:>5} {:>24} {:>24} {:>10}", "w", "p", "phi (series)", "phi (quadrature)", "|diff|");
    for &w in &samples {
        for &p in &[0.0, 0.5, 0.9] {
            let series = phi_factor(w, p, DEFAULT_TOL)?;
            let quad = phi_factor_quadrature(w, p, DEFAULT_TOL)?;
            println!(
                "{:>18} {:>5.2} {:>24} {:>24} {:>10.2e}",
                format!("{:.2}{:+.2}i", w.re, w.im),
                p,
                format!("{:.10}{:+.10}i", series.phi.re, series.phi.im),
                format!("{:.10}{:+.10}i", quad.phi.re, quad.phi.im),
                (series.phi - quad.phi).norm()
            );
        }
    }

    // Specular reflection restores the bulk (Drude) conductivity exactly.
    let specular = phi_factor(Complex64::new(0.3, -1.0), 1.0, DEFAULT_TOL)?;
    println!("\np = 1 gives phi = {}", specular.phi);
    Ok(())
}
