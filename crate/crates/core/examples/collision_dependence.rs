//! Effect of the collision rate ε = ν/ω_p on damping: Im k grows with ε,
//! and the surface-wave condition Im k < Re k eventually fails.
//!
//! Run with `cargo run --example collision_dependence`.

use film_plasmon::{k_general, DimensionlessPoint, FilmConfig, MaterialParams, DEFAULT_TOL};

fn main() -> film_plasmon::Result<()> {
    let mat = MaterialParams::sodium();
    let k_p = mat.plasma_wave_number();
    let omega = 0.3;

    println!("d = 10 nm, p = 1, Omega = {omega}");
    println!("{:>8} {:>14} {:>14} {:>8}", "eps", "Re k / k_p", "Im k / k_p", "surface");
    for eps in [1e-5, 1e-4, 1e-3, 1e-2, 0.1, 0.2, 0.3, 0.5] {
        let film = FilmConfig::from_nm(&mat, 10.0, 1.0, eps)?;
        let point = DimensionlessPoint::at_ratio(&mat, &film, omega)?;
        let k = k_general(&point, &film, &mat, DEFAULT_TOL)?;
        println!(
            "{:>8.0e} {:>14.6e} {:>14.6e} {:>8}",
            eps,
            k.k.re / k_p,
            k.k.im / k_p,
            k.exists_as_surface_wave
        );
    }
    Ok(())
}
