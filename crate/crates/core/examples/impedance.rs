//! Surface impedance of the antisymmetric film mode and the film
//! denominator D(Ω), which carries the non-local conductivity.
//!
//! Run with `cargo run --example impedance`.

use film_plasmon::{impedance_antisymmetric, DimensionlessPoint, FilmConfig, MaterialParams, DEFAULT_TOL};

fn main() -> film_plasmon::Result<()> {
    let mat = MaterialParams::sodium();
    println!("skin depth c/omega_p = {:.4e} cm", mat.skin_depth());
    for p in [1.0, 0.0] {
        let film = FilmConfig::from_nm(&mat, 10.0, p, 1e-2)?;
        println!("\nd = 10 nm, p = {p}, eps = 1e-2");
        println!("{:>6} {:>30} {:>30}", "Omega", "D(Omega)", "Z2");
        for omega in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let point = DimensionlessPoint::at_ratio(&mat, &film, omega)?;
            let z = impedance_antisymmetric(&point, &film, &mat, DEFAULT_TOL)?;
            println!(
                "{:>6.2} {:>30} {:>30}",
                omega,
                format!("{:.6e}{:+.6e}i", z.denominator.re, z.denominator.im),
                format!("{:.6e}{:+.6e}i", z.z2.re, z.z2.im)
            );
        }
    }
    Ok(())
}
