//! Surface-plasmon dispersion k(Ω) of a 10 nm sodium film with specular
//! surfaces and almost no collisions, together with the ratio
//! Z = Re k / Im k (propagation length over wavelength, up to 2π) and the
//! relative difference between the general and closed-form wave numbers.
//!
//! Run with `cargo run --example dispersion_curve`.

use film_plasmon::{k_general, k_specular_closed_form, DimensionlessPoint, FilmConfig, MaterialParams, DEFAULT_TOL};

fn main() -> film_plasmon::Result<()> {
    let mat = MaterialParams::sodium();
    let film = FilmConfig::from_nm(&mat, 10.0, 1.0, 1e-5)?;
    let k_light = mat.plasma_wave_number();

    println!("{:>6} {:>14} {:>14} {:>12} {:>12}", "Omega", "Re k / k_p", "Im k / k_p", "Z = Re/Im", "rel. diff");
    for i in 1..=20 {
        let omega = 0.05 * i as f64 - 0.01;
        let point = DimensionlessPoint::at_ratio(&mat, &film, omega)?;
        let k = k_general(&point, &film, &mat, DEFAULT_TOL)?;
        let closed = k_specular_closed_form(&point, &film, &mat)?;
        let rel = (k.k - closed.k).norm() / closed.k.norm();
        println!(
            "{:>6.2} {:>14.6e} {:>14.6e} {:>12.4e} {:>12.1e}",
            omega,
            k.k.re / k_light,
            k.k.im / k_light,
            k.quality_ratio(),
            rel
        );
    }
    Ok(())
}
