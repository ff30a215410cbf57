//! How film thickness shapes the dispersion: thinner films carry larger
//! wave numbers at the same frequency. Compares d = 5, 10 and 20 nm for
//! specular and diffuse surfaces.
//!
//! Run with `cargo run --example thickness_dependence`.

use film_plasmon::{k_general, DimensionlessPoint, FilmConfig, MaterialParams, DEFAULT_TOL};

fn main() -> film_plasmon::Result<()> {
    let mat = MaterialParams::sodium();
    let k_p = mat.plasma_wave_number();
    let thicknesses = [5.0, 10.0, 20.0];

    for &p in &[1.0, 0.0] {
        println!("p = {p}");
        print!("{:>6}", "Omega");
        for d in thicknesses {
            print!(" {:>22}", format!("k/k_p (d = {d} nm)"));
        }
        println!();
        for i in 1..=9 {
            let omega = 0.1 * i as f64;
            print!("{omega:>6.2}");
            for d in thicknesses {
                let film = FilmConfig::from_nm(&mat, d, p, 1e-3)?;
                let point = DimensionlessPoint::at_ratio(&mat, &film, omega)?;
                let k = k_general(&point, &film, &mat, DEFAULT_TOL)?.k / k_p;
                print!(" {:>22}", format!("{:.4e}{:+.3e}i", k.re, k.im));
            }
            println!();
        }
        println!();
    }
    Ok(())
}
