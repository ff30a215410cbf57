//! Command-line driver for dispersion sweeps and critical-frequency tables.
//!
//! Exit codes: 0 success, 2 invalid arguments, 3 numerical failure, 4 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use film_plasmon::critical::ScanOptions;
use film_plasmon::sweep::{self, SweepMode, SweepSpec};
use film_plasmon::{Error, MaterialParams, DEFAULT_TOL};

const EXIT_SPEC: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "plasmon-sweep", version, about = "Surface plasmon dispersion in thin metal films")]
#[command(group(ArgGroup::new("collisions").args(["eps", "nu_ratio"])))]
struct Args {
    /// dispersion | critical | table1 | table2 | zratio
    #[arg(long, default_value = "dispersion")]
    mode: String,

    /// Film thicknesses in nm (comma separated).
    #[arg(long = "d-nm", value_delimiter = ',', default_value = "10")]
    d_nm: Vec<f64>,

    /// Specularity coefficients (comma separated).
    #[arg(long, value_delimiter = ',', default_value = "1")]
    p: Vec<f64>,

    /// Collision rates ε = ν/ω_p (comma separated).
    #[arg(long, value_delimiter = ',')]
    eps: Option<Vec<f64>>,

    /// Same as --eps: ν given as a multiple of ω_p.
    #[arg(long = "nu-ratio", value_delimiter = ',')]
    nu_ratio: Option<Vec<f64>>,

    #[arg(long = "omega-min", default_value_t = 0.01)]
    omega_min: f64,

    #[arg(long = "omega-max", default_value_t = 1.0)]
    omega_max: f64,

    #[arg(long = "omega-steps", default_value_t = 100)]
    omega_steps: usize,

    /// sodium | custom (custom requires --omega-p and --v-f)
    #[arg(long, default_value = "sodium")]
    material: String,

    /// Plasma frequency in rad/s.
    #[arg(long = "omega-p")]
    omega_p: Option<f64>,

    /// Fermi velocity in cm/s.
    #[arg(long = "v-f")]
    v_f: Option<f64>,

    /// Output CSV path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Relative tolerance of the conductivity factor.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Coarse-scan grid size for critical frequencies.
    #[arg(long = "grid-n", default_value_t = 2048)]
    grid_n: usize,

    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    threads: usize,

    /// Append ω in rad/s to dispersion output.
    #[arg(long = "omega-rad")]
    omega_rad: bool,
}

fn material(args: &Args) -> Result<MaterialParams, Error> {
    match args.material.as_str() {
        "sodium" => {
            let mut mat = MaterialParams::sodium();
            if args.omega_p.is_some() || args.v_f.is_some() {
                mat = MaterialParams::new(
                    "sodium",
                    args.omega_p.unwrap_or(mat.plasma_frequency()),
                    args.v_f.unwrap_or(mat.fermi_velocity()),
                )?;
            }
            Ok(mat)
        }
        "custom" => match (args.omega_p, args.v_f) {
            (Some(wp), Some(vf)) => MaterialParams::new("custom", wp, vf),
            _ => Err(Error::Format("custom material needs --omega-p and --v-f".to_owned())),
        },
        other => Err(Error::Format(format!("unknown material '{other}'"))),
    }
}

fn build_spec(args: Args) -> Result<SweepSpec, Error> {
    let mode: SweepMode = args.mode.parse()?;
    let material = material(&args)?;
    let eps = args
        .eps
        .clone()
        .or_else(|| args.nu_ratio.clone())
        .unwrap_or_else(|| vec![1e-5]);
    let spec = SweepSpec {
        mode,
        material,
        d_nm: args.d_nm,
        p: args.p,
        eps,
        omega_min: args.omega_min,
        omega_max: args.omega_max,
        omega_steps: args.omega_steps,
        out: args.out,
        tol: args.tol,
        scan: ScanOptions {
            grid_n: args.grid_n,
            ..ScanOptions::default()
        },
        threads: args.threads,
        omega_rad_column: args.omega_rad,
    }
    .normalized();
    spec.validate()?;
    Ok(spec)
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Io(_) | Error::Csv(_) => EXIT_IO,
        e if e.is_numerical() => EXIT_NUMERICAL,
        _ => EXIT_SPEC,
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let spec = match build_spec(args) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("plasmon-sweep: {e}");
            return ExitCode::from(EXIT_SPEC);
        }
    };
    let result = sweep::open_output(spec.out.as_deref()).and_then(|out| sweep::run(&spec, out));
    match result {
        Ok(summary) => {
            if let Some(report) = summary.report {
                eprint!("{report}");
            }
            if summary.failed_rows > 0 {
                eprintln!("plasmon-sweep: {} of {} rows flagged", summary.failed_rows, summary.rows);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("plasmon-sweep: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
