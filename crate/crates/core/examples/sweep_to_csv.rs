//! Run a small parameter sweep programmatically, write it as CSV and read
//! it back. Pass a path to keep the file; otherwise it goes to stdout.
//!
//! Run with `cargo run --example sweep_to_csv -- sweep.csv`.

use std::path::PathBuf;

use film_plasmon::sweep::{self, SweepSpec};

fn main() -> film_plasmon::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from);
    let spec = SweepSpec {
        d_nm: vec![5.0, 10.0],
        p: vec![0.0, 1.0],
        eps: vec![1e-3],
        omega_min: 0.1,
        omega_max: 0.9,
        omega_steps: 9,
        out: out.clone(),
        ..SweepSpec::default()
    };
    spec.validate()?;

    let rows = sweep::run_dispersion_sweep(&spec)?;
    sweep::write_dispersion_csv(sweep::open_output(out.as_deref())?, &spec, &rows)?;

    if let Some(path) = out {
        let back = sweep::read_dispersion_csv(std::fs::File::open(&path)?)?;
        let surface = back.iter().filter(|r| r.exists == Some(true)).count();
        eprintln!("wrote {} rows to {}; {} are bound surface waves", back.len(), path.display(), surface);
    }
    Ok(())
}
