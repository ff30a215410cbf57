//! Lower critical frequency Ω₀ versus film thickness for specular
//! surfaces and ε = 0.1, checked against the reference values.
//!
//! Run with `cargo run --release --example critical_table1`.

use film_plasmon::sweep::{self, SweepSpec, TABLE1_REFERENCE};

fn main() -> film_plasmon::Result<()> {
    let spec = SweepSpec::table1();
    let rows = sweep::run_table(&spec)?;
    println!("{:>6} {:>10} {:>10} {:>10}", "d_nm", "Omega0", "reference", "Omega1");
    for (row, &(d, reference)) in rows.iter().zip(TABLE1_REFERENCE.iter()) {
        let band = row.band.expect("table rows are computed");
        println!(
            "{:>6.1} {:>10} {:>10.3} {:>10}",
            d,
            band.omega0.map_or("-".to_string(), |w| format!("{w:.4}")),
            reference,
            band.omega1.map_or("-".to_string(), |w| format!("{w:.4}"))
        );
    }
    Ok(())
}
