//! Critical band [Ω₀, Ω₁] of a 10 nm specular film as the collision rate
//! grows, compared with the reference values.
//!
//! Run with `cargo run --release --example critical_table2`.

use film_plasmon::sweep::{self, SweepMode, SweepSpec};

fn main() -> film_plasmon::Result<()> {
    let spec = SweepSpec::table2();
    let rows = sweep::run_table(&spec)?;
    print!("{}", sweep::format_table(SweepMode::Table2, &rows));
    Ok(())
}
