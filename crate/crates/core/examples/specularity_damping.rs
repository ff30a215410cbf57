//! Diffuse electron scattering at the surfaces adds damping: Im k decreases
//! from p = 0 (diffuse) to p = 1 (specular) below the plasma resonance.
//! Above the plasma frequency the mode is leaky and Im k turns negative.
//!
//! Run with `cargo run --example specularity_damping`.

use film_plasmon::{k_general, DimensionlessPoint, FilmConfig, MaterialParams, DEFAULT_TOL};

fn main() -> film_plasmon::Result<()> {
    let mat = MaterialParams::sodium();
    let k_p = mat.plasma_wave_number();
    let eps = 1e-3;
    let specularities = [0.0, 0.5, 1.0];

    print!("{:>6}", "Omega");
    for p in specularities {
        print!(" {:>16}", format!("Im k/k_p (p={p})"));
    }
    println!();
    for omega in [0.2, 0.4, 0.6, 0.8, 0.9, 1.1, 1.3] {
        print!("{omega:>6.2}");
        for p in specularities {
            let film = FilmConfig::from_nm(&mat, 10.0, p, eps)?;
            let point = DimensionlessPoint::at_ratio(&mat, &film, omega)?;
            let k = k_general(&point, &film, &mat, DEFAULT_TOL)?;
            print!(" {:>16.6e}", k.k.im / k_p);
        }
        println!();
    }
    Ok(())
}
