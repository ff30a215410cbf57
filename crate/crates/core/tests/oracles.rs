//! Independent reference values for the special functions and the
//! conductivity factor: arbitrary-precision (mpmath, 30 digits) values frozen
//! below, and a brute-force Simpson quadrature that shares no code with the
//! library.

// Nodes and reference values are kept at full published precision.
#![allow(clippy::excessive_precision)]

use film_plasmon::conductivity::expint::expint_en;
use film_plasmon::conductivity::{phi_factor, phi_factor_quadrature};
use film_plasmon::{k_general, k_specular_closed_form, Complex64, DimensionlessPoint, FilmConfig, MaterialParams};

// (n, Re z, Im z, Re E_n(z), Im E_n(z)), mpmath.expint at 30 digits.
const EXPINT_REFERENCE: &[(u32, f64, f64, f64, f64)] = &[
    (1, 0.3, 0.0, 0.90567665167584674, 0.0),
    (1, 1.5, 0.0, 0.10001958240663265, 0.0),
    (1, 2.5, 0.0, 0.024914917870269735, 0.0),
    (1, 10.0, 0.0, 4.1569689296853243e-6, 0.0),
    (1, 0.05, -3.0, -0.11720284562626111, -0.26178246077337959),
    (1, 0.7, -7.6, -0.056308736715133856, 0.028277330976454493),
    (1, 0.0001, -76.3, -0.010169884070945052, 0.0082596750226233202),
    (1, 0.5, 1.2, -0.1500362485644718, -0.29530090551173078),
    (1, 2.0, -0.5, 0.037011661013361031, 0.030486216573797427),
    (3, 0.3, 0.0, 0.30004182656401436, 0.0),
    (3, 1.5, 0.0, 0.056739490170354276, 0.0),
    (3, 2.5, 0.0, 0.016295369376668827, 0.0),
    (3, 10.0, 0.0, 3.548762553084382e-6, 0.0),
    (3, 0.05, -3.0, -0.16066957001395194, -0.15352790252886587),
    (3, 0.7, -7.6, -0.044935932227971623, 0.036072701456259848),
    (3, 0.0001, -76.3, -0.0099402571581384672, 0.0085140108957398938),
    (3, 0.5, 1.2, -0.017788785842216472, -0.18751393350645386),
    (3, 2.0, -0.5, 0.024278340920910118, 0.017400370677812887),
    (5, 0.3, 0.0, 0.16893441335261663, 0.0),
    (5, 1.5, 0.0, 0.038529924425495155, 0.0),
    (5, 2.5, 0.0, 0.011907379826344131, 0.0),
    (5, 10.0, 0.0, 3.0897289142536863e-6, 0.0),
    (5, 0.05, -3.0, -0.14843257545656959, -0.083296763953482456),
    (5, 0.7, -7.6, -0.034058812084334409, 0.038833938712794597),
    (5, 0.0001, -76.3, -0.0096985220582243127, 0.0087552271377886075),
    (5, 0.5, 1.2, 0.0097721464182667934, -0.12293483098431701),
    (5, 2.0, -0.5, 0.017680900738087649, 0.011746820128859699),
];

// (Re w, Im w, p, Re φ, Im φ), mpmath.quad of the defining integral at 25 digits.
const PHI_REFERENCE: &[(f64, f64, f64, f64, f64)] = &[
    (1.0, 0.0, 0.0, 0.68385659460405961, 0.0),
    (0.1, 0.0, 0.0, 0.20913258501997449, 0.0),
    (10.0, 0.0, 0.0, 0.96250006885504582, 0.0),
    (1.0, 0.0, 0.3, 0.76844338937515002, 0.0),
    (0.1, 0.0, 0.7, 0.50106150907755011, 0.0),
    (0.01, 0.0, 0.0, 0.037759245619376999, 0.0),
    (0.763, -3.815, 0.1, 0.98970495726328129, -0.082138781854088057),
    (0.2, -1.0, 0.5, 0.92154153170711381, -0.19259115230406205),
    (3.0, 2.0, 0.9, 0.9913380446276446, 0.0057699929993599088),
];

/// φ by composite Simpson on u ∈ [0, 1] (t = 1/u) with one Richardson step.
fn phi_simpson(w: Complex64, p: f64, intervals: usize) -> Complex64 {
    let f = |u: f64| -> Complex64 {
        if u == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let e = (-w / u).exp();
        (1.0 - e) / (1.0 - p * e) * (u - u.powi(3))
    };
    let simpson = |n: usize| -> Complex64 {
        let h = 1.0 / n as f64;
        let mut acc = f(0.0) + f(1.0);
        for i in 1..n {
            let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += f(i as f64 * h) * weight;
        }
        acc * (h / 3.0)
    };
    let coarse = simpson(intervals);
    let fine = simpson(2 * intervals);
    let integral = (fine * 16.0 - coarse) / 15.0;
    1.0 - integral * (1.5 * (1.0 - p)) / w
}

#[test]
fn expint_matches_arbitrary_precision() {
    for &(n, re, im, ere, eim) in EXPINT_REFERENCE {
        let got = expint_en(n, Complex64::new(re, im)).unwrap();
        let want = Complex64::new(ere, eim);
        let err = (got - want).norm() / want.norm();
        assert!(err < 1e-13, "E_{n}({re}{im:+}i): {got} vs {want} (rel {err:e})");
    }
}

#[test]
fn phi_series_matches_arbitrary_precision() {
    for &(re, im, p, pre, pim) in PHI_REFERENCE {
        let w = Complex64::new(re, im);
        let want = Complex64::new(pre, pim);
        let got = phi_factor(w, p, 1e-12).unwrap().phi;
        let err = (got - want).norm() / want.norm();
        assert!(err < 1e-11, "phi({w}, {p}): {got} vs {want} (rel {err:e})");
    }
}

#[test]
fn phi_quadrature_backend_matches_arbitrary_precision() {
    for &(re, im, p, pre, pim) in PHI_REFERENCE {
        let w = Complex64::new(re, im);
        let want = Complex64::new(pre, pim);
        let got = phi_factor_quadrature(w, p, 1e-11).unwrap().phi;
        let err = (got - want).norm() / want.norm();
        assert!(err < 1e-10, "phi({w}, {p}): {got} vs {want} (rel {err:e})");
    }
}

#[test]
fn phi_pinned_regression_value() {
    // w = 1, p = 0; agreed on by series, adaptive quadrature and the Simpson oracle.
    const PHI_W1_P0: f64 = 0.683_856_594_604_059_6;
    let w = Complex64::new(1.0, 0.0);
    let series = phi_factor(w, 0.0, 1e-12).unwrap().phi;
    let simpson = phi_simpson(w, 0.0, 1 << 14);
    assert!((series.re - PHI_W1_P0).abs() < 1e-13);
    assert!((simpson.re - PHI_W1_P0).abs() < 1e-8 * PHI_W1_P0);
}

#[test]
fn phi_matches_brute_force_simpson() {
    for &w in &[0.1, 1.0, 10.0] {
        for &p in &[0.0, 0.3, 0.7] {
            let w = Complex64::new(w, 0.0);
            let oracle = phi_simpson(w, p, 1 << 14);
            let series = phi_factor(w, p, 1e-12).unwrap().phi;
            let quad = phi_factor_quadrature(w, p, 1e-12).unwrap().phi;
            assert!((series - oracle).norm() < 1e-8 * oracle.norm(), "series w={w} p={p}");
            assert!((quad - oracle).norm() < 1e-8 * oracle.norm(), "quadrature w={w} p={p}");
        }
    }
}

#[test]
fn phi_complex_argument_against_simpson() {
    // moderately oscillatory integrand, still resolvable by brute force
    for &(w, p) in &[(Complex64::new(0.5, -4.0), 0.2), (Complex64::new(0.763, -6.9), 0.1)] {
        let oracle = phi_simpson(w, p, 1 << 16);
        let series = phi_factor(w, p, 1e-12).unwrap().phi;
        assert!((series - oracle).norm() < 1e-8 * oracle.norm(), "w={w} p={p}: {series} vs {oracle}");
    }
}

#[test]
fn large_w_asymptote() {
    for &w in &[50.0, 100.0, 500.0] {
        for &p in &[0.0, 0.3, 0.7] {
            let asym = 1.0 - 3.0 * (1.0 - p) / (8.0 * w);
            let got = phi_factor(Complex64::new(w, 0.0), p, 1e-10).unwrap().phi.re;
            assert!((got - asym).abs() < 0.01 * asym);
        }
    }
}

#[test]
fn thin_film_leading_order() {
    // φ ≈ (3w/4) ln(1/w) as w → 0 for diffuse scattering
    let mut last_ratio = f64::NAN;
    for k in 2..6 {
        let w = 10f64.powi(-k);
        let phi = phi_factor(Complex64::new(w, 0.0), 0.0, 1e-10).unwrap().phi.re;
        let lead = 0.75 * w * (1.0 / w).ln();
        let ratio = phi / lead;
        assert!(ratio > 1.0 && ratio < 1.3, "w={w}: ratio {ratio}");
        if !last_ratio.is_nan() {
            assert!(ratio < last_ratio, "ratio should approach 1");
        }
        last_ratio = ratio;
    }
}

#[test]
fn closed_form_is_the_specular_general_path() {
    let mat = MaterialParams::sodium();
    let film = FilmConfig::from_nm(&mat, 10.0, 1.0, 1e-5).unwrap();
    let pt = DimensionlessPoint::at_ratio(&mat, &film, 0.5).unwrap();
    let general = k_general(&pt, &film, &mat, 1e-10).unwrap().k;
    let closed = k_specular_closed_form(&pt, &film, &mat).unwrap().k;
    assert!((general - closed).norm() < 1e-8 * closed.norm());
}

#[test]
fn fig1_quality_ratios() {
    let mat = MaterialParams::sodium();
    let film = FilmConfig::from_nm(&mat, 10.0, 1.0, 1e-5).unwrap();
    for (omega, z) in [(0.1, 2.1e4), (0.5, 3.8e4)] {
        let pt = DimensionlessPoint::at_ratio(&mat, &film, omega).unwrap();
        let k = k_specular_closed_form(&pt, &film, &mat).unwrap();
        let ratio = k.quality_ratio();
        assert!((ratio - z).abs() < 0.1 * z, "Z({omega}) = {ratio}");
    }
}
