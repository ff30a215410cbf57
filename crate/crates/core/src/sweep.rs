//! Parameter sweeps over frequency, thickness, specularity and collision
//! rate, table reproductions, and their CSV serialization.
//!
//! Every CSV starts with `#`-prefixed metadata lines (tool version,
//! material, echo of the sweep settings) followed by a single header line.
//! Floating-point fields carry 17 significant digits so that parsing the
//! file gives back bit-identical values.

use std::fmt::{self, Write as _};
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::conductivity::DEFAULT_TOL;
use crate::critical::{find_critical_band, CriticalBand, ScanOptions};
use crate::dispersion::k_general;
use crate::error::{Error, Result};
use crate::material::{DimensionlessPoint, FilmConfig, MaterialParams};
use crate::Complex64;

/// Published critical frequencies Ω₀ for ε = 0.1, p = 1, by thickness in nm.
pub const TABLE1_REFERENCE: [(f64, f64); 9] = [
    (1.0, 0.101),
    (2.0, 0.100),
    (3.0, 0.097),
    (4.0, 0.092),
    (5.0, 0.086),
    (6.0, 0.078),
    (7.0, 0.067),
    (8.0, 0.051),
    (9.0, 0.023),
];

/// Published (Ω₀, Ω₁) for ε = 0.1, p = 0.1, by thickness in nm.
pub const TABLE2_REFERENCE: [(f64, f64, f64); 10] = [
    (1.0, 0.168, 0.904),
    (2.0, 0.130, 0.924),
    (3.0, 0.116, 0.929),
    (4.0, 0.107, 0.932),
    (5.0, 0.098, 0.934),
    (6.0, 0.089, 0.935),
    (7.0, 0.077, 0.935),
    (8.0, 0.063, 0.936),
    (9.0, 0.041, 0.936),
    (10.0, 0.000, 0.937),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// k(Ω) on a frequency grid for every parameter tuple.
    Dispersion,
    /// Critical band for every parameter tuple.
    Critical,
    /// Ω₀ for ε = 0.1, p = 1, d = 1..9 nm.
    Table1,
    /// (Ω₀, Ω₁) for ε = 0.1, p = 0.1, d = 1..10 nm.
    Table2,
    /// Re k / Im k on a frequency grid.
    ZRatio,
}

impl SweepMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepMode::Dispersion => "dispersion",
            SweepMode::Critical => "critical",
            SweepMode::Table1 => "table1",
            SweepMode::Table2 => "table2",
            SweepMode::ZRatio => "zratio",
        }
    }
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dispersion" => Ok(SweepMode::Dispersion),
            "critical" => Ok(SweepMode::Critical),
            "table1" => Ok(SweepMode::Table1),
            "table2" => Ok(SweepMode::Table2),
            "zratio" => Ok(SweepMode::ZRatio),
            other => Err(Error::Format(format!("unknown sweep mode '{other}'"))),
        }
    }
}

/// Everything needed to reproduce one run.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub mode: SweepMode,
    pub material: MaterialParams,
    pub d_nm: Vec<f64>,
    pub p: Vec<f64>,
    /// Collision rates as ε = ν/ω_p.
    pub eps: Vec<f64>,
    pub omega_min: f64,
    pub omega_max: f64,
    pub omega_steps: usize,
    pub out: Option<PathBuf>,
    /// Relative tolerance of the conductivity factor.
    pub tol: f64,
    pub scan: ScanOptions,
    /// Worker threads; 0 uses the global pool, 1 runs sequentially.
    pub threads: usize,
    /// Append ω in rad/s as the last column of dispersion output.
    pub omega_rad_column: bool,
}

impl Default for SweepSpec {
    /// d = 10 nm, ε = 10⁻⁵, p = 1, Ω = 0.01 … 1.00 in steps of 0.01.
    fn default() -> Self {
        Self {
            mode: SweepMode::Dispersion,
            material: MaterialParams::sodium(),
            d_nm: vec![10.0],
            p: vec![1.0],
            eps: vec![1e-5],
            omega_min: 0.01,
            omega_max: 1.0,
            omega_steps: 100,
            out: None,
            tol: DEFAULT_TOL,
            scan: ScanOptions::default(),
            threads: 0,
            omega_rad_column: false,
        }
    }
}

impl SweepSpec {
    /// Settings of the first critical-frequency table (specular films).
    pub fn table1() -> Self {
        Self {
            mode: SweepMode::Table1,
            d_nm: TABLE1_REFERENCE.iter().map(|r| r.0).collect(),
            p: vec![1.0],
            eps: vec![0.1],
            ..Self::default()
        }
    }

    /// Settings of the second critical-frequency table (p = 0.1).
    pub fn table2() -> Self {
        Self {
            mode: SweepMode::Table2,
            d_nm: TABLE2_REFERENCE.iter().map(|r| r.0).collect(),
            p: vec![0.1],
            eps: vec![0.1],
            ..Self::default()
        }
    }

    /// Applies the fixed table parameters for table modes.
    pub fn normalized(mut self) -> Self {
        let fixed = match self.mode {
            SweepMode::Table1 => Self::table1(),
            SweepMode::Table2 => Self::table2(),
            _ => return self,
        };
        self.d_nm = fixed.d_nm;
        self.p = fixed.p;
        self.eps = fixed.eps;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if matches!(self.mode, SweepMode::Dispersion | SweepMode::ZRatio) {
            if !(self.omega_min > 0.0 && self.omega_min <= 2.0) {
                return Err(Error::InvalidParameter {
                    name: "omega_min",
                    value: self.omega_min,
                    reason: "must lie in (0, 2]",
                });
            }
            if !(self.omega_max >= self.omega_min && self.omega_max <= 2.0) {
                return Err(Error::InvalidParameter {
                    name: "omega_max",
                    value: self.omega_max,
                    reason: "must lie in [omega_min, 2]",
                });
            }
            if self.omega_steps < 2 {
                return Err(Error::InvalidParameter {
                    name: "omega_steps",
                    value: self.omega_steps as f64,
                    reason: "must be at least 2",
                });
            }
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidParameter {
                name: "tol",
                value: self.tol,
                reason: "must be positive",
            });
        }
        for (name, list) in [("d_nm", &self.d_nm), ("p", &self.p), ("eps", &self.eps)] {
            if list.is_empty() {
                return Err(Error::InvalidParameter {
                    name,
                    value: f64::NAN,
                    reason: "parameter list is empty",
                });
            }
        }
        for (d, p, eps) in self.tuples() {
            FilmConfig::from_nm(&self.material, d, p, eps)?;
        }
        Ok(())
    }

    /// Uniform Ω grid with both ends included.
    pub fn omega_grid(&self) -> Vec<f64> {
        let n = self.omega_steps;
        let step = (self.omega_max - self.omega_min) / (n - 1) as f64;
        (0..n)
            .map(|i| if i + 1 == n { self.omega_max } else { self.omega_min + step * i as f64 })
            .collect()
    }

    /// (d_nm, p, ε) in grid order: thickness outermost, then p, then ε.
    pub fn tuples(&self) -> Vec<(f64, f64, f64)> {
        let mut out = Vec::with_capacity(self.d_nm.len() * self.p.len() * self.eps.len());
        for &d in &self.d_nm {
            for &p in &self.p {
                for &e in &self.eps {
                    out.push((d, p, e));
                }
            }
        }
        out
    }

    /// One-line summary used in CSV metadata.
    pub fn echo(&self) -> String {
        let list = |v: &[f64]| v.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(",");
        let mut s = format!(
            "mode={} d_nm={} p={} eps={} tol={:e}",
            self.mode,
            list(&self.d_nm),
            list(&self.p),
            list(&self.eps),
            self.tol
        );
        match self.mode {
            SweepMode::Dispersion | SweepMode::ZRatio => {
                let _ = write!(
                    s,
                    " omega_min={} omega_max={} omega_steps={}",
                    self.omega_min, self.omega_max, self.omega_steps
                );
            }
            _ => {
                let _ = write!(
                    s,
                    " scan=[{},{}] grid_n={} bisect_tol={:e}",
                    self.scan.omega_min, self.scan.omega_max, self.scan.grid_n, self.scan.tol
                );
            }
        }
        s
    }

    fn scan_options(&self) -> ScanOptions {
        ScanOptions {
            phi_tol: self.tol,
            ..self.scan
        }
    }

    fn in_pool<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        if self.threads == 0 {
            return Ok(job());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::Format(format!("cannot start worker pool: {e}")))?;
        Ok(pool.install(job))
    }
}

/// One evaluated point of a dispersion sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub omega: f64,
    pub eps: f64,
    pub d_nm: f64,
    pub p: f64,
    pub k: Option<Complex64>,
    pub alpha: Option<Complex64>,
    pub exists: Option<bool>,
    /// Error code of a failed evaluation; such rows carry no k.
    pub error: Option<String>,
}

impl SweepRow {
    pub fn is_error(&self) -> bool {
        self.error.is_some()
    }

    /// Z = Re k / Im k.
    pub fn z_ratio(&self) -> Option<f64> {
        self.k.map(|k| k.re / k.im)
    }
}

/// Evaluates k at a single grid point, turning failures into a flagged row.
pub fn evaluate_row(material: &MaterialParams, d_nm: f64, p: f64, eps: f64, omega: f64, tol: f64) -> SweepRow {
    let result = FilmConfig::from_nm(material, d_nm, p, eps).and_then(|film| {
        let pt = DimensionlessPoint::at_ratio(material, &film, omega)?;
        k_general(&pt, &film, material, tol)
    });
    let mut row = SweepRow {
        omega,
        eps,
        d_nm,
        p,
        k: None,
        alpha: None,
        exists: None,
        error: None,
    };
    match result {
        Ok(k) => {
            row.k = Some(k.k);
            row.alpha = Some(k.alpha);
            row.exists = Some(k.exists_as_surface_wave);
        }
        Err(e) => row.error = Some(e.code().to_owned()),
    }
    row
}

/// One row per (d, p, ε, Ω) in grid order. Evaluation failures become
/// flagged rows and never abort the sweep.
pub fn run_dispersion_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let grid = spec.omega_grid();
    let tasks: Vec<(f64, f64, f64, f64)> = spec
        .tuples()
        .into_iter()
        .flat_map(|(d, p, e)| grid.iter().map(move |&o| (d, p, e, o)))
        .collect();
    let eval = |&(d, p, e, o): &(f64, f64, f64, f64)| evaluate_row(&spec.material, d, p, e, o, spec.tol);
    if spec.threads == 1 {
        return Ok(tasks.iter().map(eval).collect());
    }
    spec.in_pool(|| tasks.par_iter().map(eval).collect())
}

/// Critical band of one parameter tuple.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalRow {
    pub d_nm: f64,
    pub p: f64,
    pub eps: f64,
    pub band: Option<CriticalBand>,
    pub error: Option<String>,
}

fn critical_for(spec: &SweepSpec, d: f64, p: f64, e: f64) -> Result<CriticalBand> {
    let film = FilmConfig::from_nm(&spec.material, d, p, e)?;
    find_critical_band(&film, &spec.material, &spec.scan_options())
}

/// Critical band for every tuple; failures are recorded per row.
pub fn run_critical_sweep(spec: &SweepSpec) -> Result<Vec<CriticalRow>> {
    spec.validate()?;
    let rows = spec
        .tuples()
        .into_iter()
        .map(|(d, p, e)| match critical_for(spec, d, p, e) {
            Ok(band) => CriticalRow {
                d_nm: d,
                p,
                eps: e,
                band: Some(band),
                error: None,
            },
            Err(err) => CriticalRow {
                d_nm: d,
                p,
                eps: e,
                band: None,
                error: Some(err.code().to_owned()),
            },
        })
        .collect();
    Ok(rows)
}

/// Reproduces one of the critical-frequency tables; any failure aborts.
pub fn run_table(spec: &SweepSpec) -> Result<Vec<CriticalRow>> {
    if !matches!(spec.mode, SweepMode::Table1 | SweepMode::Table2) {
        return Err(Error::Format(format!("mode '{}' is not a table mode", spec.mode)));
    }
    let spec = spec.clone().normalized();
    spec.validate()?;
    spec.tuples()
        .into_iter()
        .map(|(d, p, e)| {
            critical_for(&spec, d, p, e).map(|band| CriticalRow {
                d_nm: d,
                p,
                eps: e,
                band: Some(band),
                error: None,
            })
        })
        .collect()
}

fn reference_for(mode: SweepMode, d_nm: f64) -> Option<(f64, Option<f64>)> {
    match mode {
        SweepMode::Table1 => TABLE1_REFERENCE
            .iter()
            .find(|r| r.0 == d_nm)
            .map(|r| (r.1, None)),
        SweepMode::Table2 => TABLE2_REFERENCE
            .iter()
            .find(|r| r.0 == d_nm)
            .map(|r| (r.1, Some(r.2))),
        _ => None,
    }
}

fn fmt3(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_owned(), |v| format!("{v:.3}"))
}

/// Human-readable table with three decimals, next to the published values.
pub fn format_table(mode: SweepMode, rows: &[CriticalRow]) -> String {
    let mut out = String::new();
    let two = mode != SweepMode::Table1;
    if two {
        let _ = writeln!(out, "{:>6}  {:>7}  {:>7}  {:>9}  {:>9}", "d, nm", "Omega0", "Omega1", "ref Om0", "ref Om1");
    } else {
        let _ = writeln!(out, "{:>6}  {:>7}  {:>9}", "d, nm", "Omega0", "ref Om0");
    }
    for row in rows {
        let (o0, o1) = row.band.map_or((None, None), |b| (b.omega0, b.omega1));
        let reference = reference_for(mode, row.d_nm);
        if two {
            let _ = writeln!(
                out,
                "{:>6}  {:>7}  {:>7}  {:>9}  {:>9}",
                row.d_nm,
                fmt3(o0),
                fmt3(o1),
                fmt3(reference.map(|r| r.0)),
                fmt3(reference.and_then(|r| r.1)),
            );
        } else {
            let _ = writeln!(
                out,
                "{:>6}  {:>7}  {:>9}",
                row.d_nm,
                fmt3(o0),
                fmt3(reference.map(|r| r.0))
            );
        }
    }
    out
}

// ---------------------------------------------------------------------------
// CSV

pub const DISPERSION_HEADER: [&str; 10] = [
    "omega", "eps", "d_nm", "p", "re_k", "im_k", "re_alpha", "im_alpha", "exists", "error",
];

pub const CRITICAL_HEADER: [&str; 7] = ["d_nm", "p", "eps", "omega0", "omega1", "band_nonempty", "error"];

pub const ZRATIO_HEADER: [&str; 6] = ["omega", "eps", "d_nm", "p", "z_ratio", "error"];

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn write_metadata<W: Write>(out: &mut W, spec: &SweepSpec) -> io::Result<()> {
    writeln!(out, "# {} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"))?;
    writeln!(
        out,
        "# material: {} omega_p={:e} rad/s v_F={:e} cm/s",
        spec.material.label(),
        spec.material.plasma_frequency(),
        spec.material.fermi_velocity()
    )?;
    writeln!(out, "# spec: {}", spec.echo())
}

pub fn write_dispersion_csv<W: Write>(out: W, spec: &SweepSpec, rows: &[SweepRow]) -> Result<()> {
    let mut out = out;
    write_metadata(&mut out, spec)?;
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = DISPERSION_HEADER.to_vec();
    if spec.omega_rad_column {
        header.push("omega_rad_s");
    }
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![
            num(r.omega),
            num(r.eps),
            num(r.d_nm),
            num(r.p),
            opt_num(r.k.map(|k| k.re)),
            opt_num(r.k.map(|k| k.im)),
            opt_num(r.alpha.map(|a| a.re)),
            opt_num(r.alpha.map(|a| a.im)),
            r.exists.map(|e| e.to_string()).unwrap_or_default(),
            r.error.clone().unwrap_or_default(),
        ];
        if spec.omega_rad_column {
            rec.push(num(r.omega * spec.material.plasma_frequency()));
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_critical_csv<W: Write>(out: W, spec: &SweepSpec, rows: &[CriticalRow]) -> Result<()> {
    let mut out = out;
    write_metadata(&mut out, spec)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CRITICAL_HEADER)?;
    for r in rows {
        let (o0, o1, nonempty) = match r.band {
            Some(b) => (b.omega0, b.omega1, Some(b.band_nonempty)),
            None => (None, None, None),
        };
        w.write_record([
            num(r.d_nm),
            num(r.p),
            num(r.eps),
            opt_num(o0),
            opt_num(o1),
            nonempty.map(|b| b.to_string()).unwrap_or_default(),
            r.error.clone().unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_zratio_csv<W: Write>(out: W, spec: &SweepSpec, rows: &[SweepRow]) -> Result<()> {
    let mut out = out;
    write_metadata(&mut out, spec)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(ZRATIO_HEADER)?;
    for r in rows {
        w.write_record([
            num(r.omega),
            num(r.eps),
            num(r.d_nm),
            num(r.p),
            opt_num(r.z_ratio()),
            r.error.clone().unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn parse_f64(field: &str) -> Result<f64> {
    field
        .parse()
        .map_err(|_| Error::Format(format!("not a number: '{field}'")))
}

fn parse_opt_f64(field: &str) -> Result<Option<f64>> {
    if field.is_empty() {
        Ok(None)
    } else {
        parse_f64(field).map(Some)
    }
}

fn parse_opt_bool(field: &str) -> Result<Option<bool>> {
    match field {
        "" => Ok(None),
        "true" => Ok(Some(true)),
        "false" => Ok(Some(false)),
        other => Err(Error::Format(format!("not a boolean: '{other}'"))),
    }
}

fn opt_complex(re: Option<f64>, im: Option<f64>) -> Result<Option<Complex64>> {
    match (re, im) {
        (Some(re), Some(im)) => Ok(Some(Complex64::new(re, im))),
        (None, None) => Ok(None),
        _ => Err(Error::Format("complex value with a missing component".to_owned())),
    }
}

/// Parses dispersion-sweep CSV back into rows; metadata lines are skipped
/// and a trailing `omega_rad_s` column is ignored.
pub fn read_dispersion_csv<R: Read>(input: R) -> Result<Vec<SweepRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .flexible(false)
        .from_reader(input);
    let header = reader.headers()?.clone();
    if header.len() < DISPERSION_HEADER.len() || header.iter().zip(DISPERSION_HEADER).any(|(a, b)| a != b) {
        return Err(Error::Format(format!("unexpected header: {header:?}")));
    }
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        let f = |i: usize| rec.get(i).unwrap_or("");
        let error = f(9);
        rows.push(SweepRow {
            omega: parse_f64(f(0))?,
            eps: parse_f64(f(1))?,
            d_nm: parse_f64(f(2))?,
            p: parse_f64(f(3))?,
            k: opt_complex(parse_opt_f64(f(4))?, parse_opt_f64(f(5))?)?,
            alpha: opt_complex(parse_opt_f64(f(6))?, parse_opt_f64(f(7))?)?,
            exists: parse_opt_bool(f(8))?,
            error: (!error.is_empty()).then(|| error.to_owned()),
        });
    }
    Ok(rows)
}

/// Opens the output target before any computation so that an unwritable
/// path fails fast. `None` means standard output.
pub fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => Ok(Box::new(BufWriter::new(File::create(p)?))),
        None => Ok(Box::new(io::stdout().lock())),
    }
}

/// Outcome of [`run`]: the human-readable report (tables only) and the
/// number of rows flagged as failed.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunSummary {
    pub report: Option<String>,
    pub rows: usize,
    pub failed_rows: usize,
}

/// Runs `spec` and writes its CSV to `out`.
pub fn run<W: Write>(spec: &SweepSpec, out: W) -> Result<RunSummary> {
    match spec.mode {
        SweepMode::Dispersion | SweepMode::ZRatio => {
            let rows = run_dispersion_sweep(spec)?;
            if spec.mode == SweepMode::Dispersion {
                write_dispersion_csv(out, spec, &rows)?;
            } else {
                write_zratio_csv(out, spec, &rows)?;
            }
            Ok(RunSummary {
                report: None,
                rows: rows.len(),
                failed_rows: rows.iter().filter(|r| r.is_error()).count(),
            })
        }
        SweepMode::Critical => {
            let rows = spec.in_pool(|| run_critical_sweep(spec))??;
            write_critical_csv(out, spec, &rows)?;
            Ok(RunSummary {
                report: None,
                rows: rows.len(),
                failed_rows: rows.iter().filter(|r| r.error.is_some()).count(),
            })
        }
        SweepMode::Table1 | SweepMode::Table2 => {
            let spec = spec.clone().normalized();
            let rows = spec.in_pool(|| run_table(&spec))??;
            write_critical_csv(out, &spec, &rows)?;
            Ok(RunSummary {
                report: Some(format_table(spec.mode, &rows)),
                rows: rows.len(),
                failed_rows: 0,
            })
        }
    }
}
