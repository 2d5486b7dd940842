//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Tolerances are fixed here and are not
//! tuned to the results.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use optomech_core::composite::{
    amplitude_closed, amplitude_series_auto, diffusion_composite, diffusion_from_intensities,
    force_composite, loglog_slope, max_friction_at, scan_friction, FrictionMaximum, SeriesOptions, SystemSpec,
};
use optomech_core::limits::{
    hamiltonian_friction, mmc_force, mmc_temperature, resonator_friction, resonator_temperature, resonance_half_width,
    resonance_phase, CavityParams, CouplingDefinition,
};
use optomech_core::scatterer::{refltrans_of, static_matrix, Polarizability};
use optomech_core::search::logspace;
use optomech_core::singlebs::{diffusion_from_amplitudes, diffusion_single, force_single, DriveFields};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const I: Complex64 = Complex64::new(0.0, 1.0);

// Criterion tolerances.
const SERIES_TOL: f64 = 1e-9;
const UNITARY_TOL: f64 = 1e-12;
const MOLASSES_TOL: f64 = 1e-2;
const CUBIC_RATIO: (f64, f64) = (500.0, 2000.0);
const FIG4A_SMALL_TOL: f64 = 0.02;
const FIG4A_LARGE_TOL: f64 = 0.02;
const SLOPE_SMALL: (f64, f64) = (2.0, 0.1);
const SLOPE_LARGE: (f64, f64) = (6.0, 0.2);
const PLATEAU_TOL: f64 = 0.25;
const TEMP_SLOPE: (f64, f64) = (-2.0, 0.1);
const RESONATOR_TEMP_TOL: f64 = 0.10;
const CROSS_THEORY_TOL: f64 = 1e-6;
const FD_STEP: f64 = 1e-8;
const FD_TOL: f64 = 1e-6;
const DIFFUSION_TOL: f64 = 1e-10;
const FIG3_TOL: f64 = 1e-3;

const FIG_K0L: f64 = 100.0;

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: &str, passed: bool, summary: String) {
        if !passed {
            self.failures += 1;
        }
        println!("{} [{id}] {summary}", if passed { "PASS" } else { "FAIL" });
    }
}

fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

fn log_uniform(rng: &mut StdRng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

/// Position uniform in (0, π].
fn position(rng: &mut StdRng) -> f64 {
    PI - rng.gen_range(0.0..PI)
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

/// Series against closed form. The eps part reaches ~1e11 near the sharpest
/// resonances, so the 1e-9 bound is applied per part relative to
/// max(1, |closed part|); in the ε = 10⁻⁶ case the compared quantity is the
/// amplitude evaluated at that velocity.
fn criterion_1(report: &mut Report) {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5e1e5);
    let specs: Vec<(SystemSpec, f64)> = (0..1000)
        .map(|i| {
            let zeta = log_uniform(&mut rng, 1e-3, 1e2);
            let eps = if i % 2 == 0 { 0.0 } else { 1e-6 };
            (SystemSpec::perfect_mirror(zeta, 200.0 * PI, position(&mut rng)), eps)
        })
        .collect();
    let opts = SeriesOptions { tolerance: 1e-13, max_terms: 5_000_000 };
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let chunk = specs.len().div_ceil(threads);
    let results: Vec<(f64, bool)> = std::thread::scope(|s| {
        let handles: Vec<_> = specs
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|(spec, eps)| {
                            let closed = amplitude_closed(spec).expect("closed form");
                            let series = amplitude_series_auto(spec, opts).expect("series");
                            let a = series.amplitude;
                            let val_err = (a.val - closed.val).norm() / closed.val.norm().max(1.0);
                            let eps_err = (a.eps - closed.eps).norm() / closed.eps.norm().max(1.0);
                            let at_v = (a.eval(*eps) - closed.eval(*eps)).norm() / closed.eval(*eps).norm().max(1.0);
                            (val_err.max(eps_err).max(at_v), series.converged)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker")).collect()
    });
    let worst = results.iter().map(|r| r.0).fold(0.0, f64::max);
    let all_converged = results.iter().all(|r| r.1);
    let elapsed = start.elapsed();
    report.line(
        "1",
        worst <= SERIES_TOL && all_converged && within(elapsed, 10.0),
        format!(
            "series vs closed form: worst relative error {worst:.2e} (tol {SERIES_TOL:.0e}), tails converged {all_converged}, {:.2}s",
            elapsed.as_secs_f64()
        ),
    );
}

fn criterion_2(report: &mut Report) {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(2);
    let mut det_err = 0.0f64;
    let mut flux_err = 0.0f64;
    for _ in 0..1000 {
        let z = Complex64::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        det_err = det_err.max((static_matrix(z).det().val - 1.0).norm());

        let zr = Complex64::new(log_uniform(&mut rng, 1e-3, 1e3), 0.0);
        let rt = refltrans_of(zr);
        let b = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let a = rt.r * b + rt.t * c;
        let d = rt.r * c + rt.t * b;
        flux_err = flux_err.max(rel(a.norm_sqr() + d.norm_sqr(), b.norm_sqr() + c.norm_sqr()));
    }
    let elapsed = start.elapsed();
    report.line(
        "2",
        det_err <= UNITARY_TOL && flux_err <= UNITARY_TOL && within(elapsed, 1.0),
        format!(
            "det M0 = 1: worst {det_err:.2e}; lossless flux: worst {flux_err:.2e} (tol {UNITARY_TOL:.0e}), {:.3}s",
            elapsed.as_secs_f64()
        ),
    );
}

fn criterion_3(report: &mut Report) {
    let start = Instant::now();
    // Two-level atom, red detuned by one linewidth, |ζ| ≈ 7e-4.
    let p = Polarizability::two_level_atom(1e-3, 1e-3, 1e-3);
    let zr = p.response(1.0);
    assert!(zr.zeta.norm() <= 1e-3);
    let n = 64;
    let averaged: f64 = (0..n)
        .map(|j| {
            let k0x = (j as f64 + 0.5) * PI / n as f64;
            force_single(&p, &DriveFields::standing_wave(Complex64::new(1.0, 0.0), k0x, 1.0)).eps.re
        })
        .sum::<f64>()
        / n as f64;
    // F = −4ħk₀²|B₀|² Im(∂ζ/∂ω) v, with ∂ζ/∂ω = (ω∂ζ/∂ω)/ω at ω = k₀ = 1.
    let expected = -4.0 * zr.omega_dzeta.im;
    let force_err = rel(averaged, expected);

    // Diffusion profile at |ζ| ≈ 1.4e-5, small enough that the O(|ζ|²) floor
    // stays below 1% at the positions nearest the nodes.
    let pd = Polarizability::two_level_atom(1.0, 1.0, 2e-5);
    let zeta = pd.response(1.0).zeta;
    let diff_err = (0..32)
        .map(|j| {
            let k0x = (j as f64 + 0.5) * PI / 32.0;
            let d = diffusion_single(zeta, &DriveFields::standing_wave(Complex64::new(1.0, 0.0), k0x, 1.0));
            rel(d, 8.0 * zeta.im * k0x.sin().powi(2))
        })
        .fold(0.0, f64::max);
    let elapsed = start.elapsed();
    report.line(
        "3",
        force_err <= MOLASSES_TOL && diff_err <= MOLASSES_TOL && within(elapsed, 5.0),
        format!(
            "molasses friction rel. error {force_err:.2e}, diffusion sin^2 profile worst {diff_err:.2e} (tol {MOLASSES_TOL:.0e}), {:.3}s",
            elapsed.as_secs_f64()
        ),
    );
}

/// Largest residual against the small-ζ force over 16 positions, static and velocity parts.
fn small_zeta_residual(zeta: f64) -> (f64, f64) {
    let mut worst = (0.0f64, 0.0f64);
    for j in 0..16 {
        let k0x = (j as f64 + 0.5) * PI / 16.0;
        let exact = force_composite(&SystemSpec::perfect_mirror(zeta, FIG_K0L, k0x)).unwrap();
        let approx = mmc_force(zeta, k0x, FIG_K0L, 1.0);
        worst.0 = worst.0.max((exact.force0 - approx.val.re).abs());
        worst.1 = worst.1.max((exact.beta + approx.eps.re).abs());
    }
    worst
}

/// The residual is compared in sup norm over the 16 positions: pointwise
/// ratios are meaningless where the cubic coefficient itself crosses zero.
fn criterion_4(report: &mut Report) {
    let (f2, b2) = small_zeta_residual(1e-2);
    let (f3, b3) = small_zeta_residual(1e-3);
    let (rf, rb) = (f2 / f3, b2 / b3);
    let ok = |r: f64| (CUBIC_RATIO.0..=CUBIC_RATIO.1).contains(&r);
    report.line(
        "4",
        ok(rf) && ok(rb),
        format!(
            "small-zeta residual ratio 1e-2/1e-3: force {rf:.1}, friction {rb:.1} (want [{}, {}])",
            CUBIC_RATIO.0, CUBIC_RATIO.1
        ),
    );
}

fn figure_grid() -> Vec<FrictionMaximum> {
    let template = SystemSpec::perfect_mirror(1.0, FIG_K0L, PI / 2.0);
    logspace(1e-2, 1e2, 25)
        .into_iter()
        .map(|z| max_friction_at(z, &template).unwrap())
        .collect()
}

fn criterion_5(report: &mut Report, grid: &[FrictionMaximum], elapsed: Duration) {
    let first = grid.first().unwrap();
    let last = grid.last().unwrap();
    let small_ok = (first.k0x - 7.0 * PI / 8.0).abs() <= FIG4A_SMALL_TOL;
    let large_ok = last.k0x >= PI - FIG4A_LARGE_TOL;
    let drops: Vec<String> = grid
        .windows(2)
        .filter(|w| w[1].k0x < w[0].k0x)
        .map(|w| format!("{:.3}->{:.3} at zeta {:.3}", w[0].k0x * 8.0 / PI, w[1].k0x * 8.0 / PI, w[1].zeta))
        .collect();
    let monotone = drops.is_empty();
    report.line(
        "5",
        small_ok && large_ok && monotone && within(elapsed, 30.0),
        format!(
            "max-friction position: {:.4}*pi/8 at zeta=1e-2, {:.4}*pi/8 at zeta=1e2; monotone {monotone}{}; {:.2}s",
            first.k0x * 8.0 / PI,
            last.k0x * 8.0 / PI,
            if monotone { String::new() } else { format!(" (decreases, in units of pi/8: {})", drops.join(", ")) },
            elapsed.as_secs_f64()
        ),
    );
}

fn criterion_6(report: &mut Report) {
    let template = SystemSpec::perfect_mirror(1.0, FIG_K0L, PI / 2.0);
    let beta = |z: f64| max_friction_at(z, &template).unwrap().beta;
    let s_small = loglog_slope(1e-3, beta(1e-3), 1e-2, beta(1e-2));
    let s_large = loglog_slope(10.0, beta(10.0), 100.0, beta(100.0));
    report.line(
        "6",
        (s_small - SLOPE_SMALL.0).abs() <= SLOPE_SMALL.1 && (s_large - SLOPE_LARGE.0).abs() <= SLOPE_LARGE.1,
        format!("max-friction slopes: {s_small:.4} on [1e-3, 1e-2], {s_large:.4} on [10, 100]"),
    );
}

fn criterion_7(report: &mut Report, grid: &[FrictionMaximum]) {
    let temp = |m: &FrictionMaximum| m.temperature.unwrap();
    let plateau_err = grid
        .iter()
        .filter(|m| m.zeta <= 0.05)
        .map(|m| rel(temp(m), mmc_temperature(1.0, FIG_K0L - m.k0x)))
        .fold(0.0, f64::max);
    let large: Vec<&FrictionMaximum> = grid.iter().filter(|m| m.zeta >= 10.0 * (1.0 - 1e-12)).collect();
    let (a, b) = (large.first().unwrap(), large.last().unwrap());
    let slope = loglog_slope(a.zeta, temp(a), b.zeta, temp(b));
    let asym_ratios: Vec<f64> = large.iter().map(|m| temp(m) / resonator_temperature(m.zeta, FIG_K0L)).collect();
    let asym_err = asym_ratios.iter().map(|r| (r - 1.0).abs()).fold(0.0, f64::max);
    let plateau_ok = plateau_err <= PLATEAU_TOL;
    let slope_ok = (slope - TEMP_SLOPE.0).abs() <= TEMP_SLOPE.1;
    let asym_ok = asym_err <= RESONATOR_TEMP_TOL;
    report.line(
        "7",
        plateau_ok && slope_ok && asym_ok,
        format!(
            "temperature: plateau vs 1/(4 k0(L-x*)) worst {plateau_err:.3} (tol {PLATEAU_TOL}); slope {slope:.4}; \
             T/(1/(8 zeta^2 k0L)) on [10, 100] in [{:.4}, {:.4}] (tol {RESONATOR_TEMP_TOL})",
            asym_ratios.iter().cloned().fold(f64::INFINITY, f64::min),
            asym_ratios.iter().cloned().fold(0.0, f64::max)
        ),
    );
}

fn cross_theory_error(def: CouplingDefinition) -> f64 {
    let length = 100.0;
    let mut worst = 0.0f64;
    for &zeta in &[10.0, 30.0, 100.0] {
        let (p0, w) = (resonance_phase(zeta), resonance_half_width(zeta));
        for j in -10..=10 {
            let phi = p0 + 0.3 * j as f64 * w;
            let cav = CavityParams::from_scattering(zeta, phi, 1.0, length, 1.0, def);
            let h = hamiltonian_friction(&cav, 0.0);
            // The closed-form coefficient must also equal −2G Re(a0* a1).
            let from_fields = -2.0 * cav.g * (h.a0.conj() * h.a1).re;
            worst = worst
                .max(rel(h.coefficient, resonator_friction(zeta, phi, 1.0, length, 1.0)))
                .max(if j == 0 { 0.0 } else { rel(h.coefficient, from_fields) });
        }
    }
    worst
}

fn criterion_8(report: &mut Report) {
    let freq = cross_theory_error(CouplingDefinition::AngularFrequencyOverLength);
    let list = cross_theory_error(CouplingDefinition::SquaredList);
    let passing: Vec<&str> = [("G = omega_c/L", freq), ("G = c^2 k0^2/L^2", list)]
        .iter()
        .filter(|(_, e)| *e <= CROSS_THEORY_TOL)
        .map(|(n, _)| *n)
        .collect();
    report.line(
        "8",
        passing.len() == 1,
        format!(
            "cavity model vs resonator friction: G = omega_c/L worst {freq:.2e}, G = c^2 k0^2/L^2 worst {list:.2e}; \
             agreeing definition: {}",
            passing.join(", ")
        ),
    );
}

/// Outgoing fields of a moving single scatterer at finite ε, written from the
/// rational expressions for A and D directly in complex arithmetic.
fn single_force_at(zeta: Complex64, w: Complex64, b: Complex64, c: Complex64, e: f64) -> f64 {
    let den = 1.0 - I * (zeta + e * w);
    let off = 2.0 * zeta - w;
    let a = (I * (zeta - e * off) * b + c) / den;
    let d = ((1.0 - 2.0 * I * e * w) * b + I * (zeta + e * off) * c) / den;
    a.norm_sqr() + b.norm_sqr() - c.norm_sqr() - d.norm_sqr()
}

/// Composite force at finite ε from the multiple-reflection sum with the
/// Doppler phases kept as exponentials and the scatterer factors `(1 ± 2ε)`
/// unexpanded.
fn composite_force_at(spec: &SystemSpec, e: f64) -> f64 {
    let zeta = spec.zeta;
    let r = spec.r_fixed;
    let (m11, m12, m21, m22) = (1.0 + I * zeta, I * zeta * (1.0 - 2.0 * e), -I * zeta * (1.0 + 2.0 * e), 1.0 - I * zeta);
    let ratio = -r * m21 / m22;
    let p = Complex64::from_polar(1.0, -2.0 * spec.k0x);
    let k0d = spec.k0d();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    for n in 1..=4000u32 {
        pow *= ratio * p;
        let nf = n as f64;
        sum += pow * Complex64::from_polar(1.0, 2.0 * nf * (nf - 1.0) * k0d * e);
        if pow.norm() < 1e-20 {
            break;
        }
    }
    let a = m12 / m22 + (m12 / m22 - m11 / m21) * sum;
    let cp = (1.0 - I * zeta) * a - I * zeta * (1.0 - 2.0 * e);
    let dp = I * zeta * (1.0 + 2.0 * e) * a + (1.0 + I * zeta);
    spec.flux * (a.norm_sqr() + 1.0 - cp.norm_sqr() - dp.norm_sqr())
}

fn criterion_9(report: &mut Report) {
    let mut rng = StdRng::seed_from_u64(9);
    let fd = |f: &dyn Fn(f64) -> f64| (f(FD_STEP) - f(-FD_STEP)) / (2.0 * FD_STEP);
    let mut single_err = 0.0f64;
    for i in 0..100 {
        let p = if i % 2 == 0 {
            Polarizability::two_level_atom(rng.gen_range(0.5..2.0), rng.gen_range(-3.0..3.0), rng.gen_range(0.01..1.0))
        } else {
            Polarizability::constant(Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.0..1.0)))
        };
        let drive = DriveFields::new(
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            1.0,
        );
        let zr = p.response(1.0);
        let jet = force_single(&p, &drive).eps.re;
        let num = fd(&|e| single_force_at(zr.zeta, zr.omega_dzeta, drive.b0, drive.c0, e));
        single_err = single_err.max((jet - num).abs() / (1.0 + jet.abs()));
    }
    let mut composite_err = 0.0f64;
    for _ in 0..100 {
        let spec = SystemSpec {
            zeta: Complex64::new(rng.gen_range(0.05..1.0), rng.gen_range(0.0..0.3)),
            r_fixed: Complex64::from_polar(rng.gen_range(0.5..1.0), rng.gen_range(0.0..2.0 * PI)),
            k0_l: 2.0 * PI,
            k0x: position(&mut rng),
            flux: 1.0,
        };
        let jet = force_composite(&spec).unwrap().beta;
        let num = -fd(&|e| composite_force_at(&spec, e));
        composite_err = composite_err.max((jet - num).abs() / (1.0 + jet.abs()));
    }
    report.line(
        "9",
        single_err <= FD_TOL && composite_err <= FD_TOL,
        format!(
            "finite-difference oracle (h = {FD_STEP:.0e}): single worst {single_err:.2e}, composite worst {composite_err:.2e} (tol {FD_TOL:.0e})"
        ),
    );
}

fn criterion_10(report: &mut Report) {
    let mut rng = StdRng::seed_from_u64(10);
    let mut single_err = 0.0f64;
    let mut composite_err = 0.0f64;
    let mut negative = 0usize;
    for _ in 0..1000 {
        let zeta = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.0..2.0));
        let drive = DriveFields::new(
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            1.0,
        );
        let a = diffusion_from_amplitudes(zeta, &drive);
        let b = diffusion_single(zeta, &drive);
        negative += (a < 0.0 || b < 0.0) as usize;
        single_err = single_err.max(rel(a, b));

        let spec = SystemSpec::perfect_mirror(log_uniform(&mut rng, 1e-3, 1e2), FIG_K0L, position(&mut rng));
        let c = diffusion_composite(&spec).unwrap();
        let d = diffusion_from_intensities(&spec).unwrap();
        negative += (c < 0.0 || d < 0.0) as usize;
        composite_err = composite_err.max(rel(c, d));
    }
    report.line(
        "10",
        negative == 0 && single_err <= DIFFUSION_TOL && composite_err <= DIFFUSION_TOL,
        format!(
            "diffusion: {negative} negative values; single forms worst {single_err:.2e}, composite forms worst {composite_err:.2e} (tol {DIFFUSION_TOL:.0e})"
        ),
    );
}

/// Interior sign changes and local extrema of the friction on (0, π),
/// located by bisection and golden section from a fine grid.
fn friction_features(zeta: f64) -> (Vec<f64>, Vec<f64>) {
    let spec = SystemSpec::perfect_mirror(zeta, FIG_K0L, PI / 2.0);
    let n = 20_000;
    let grid: Vec<f64> = (1..n).map(|j| j as f64 * PI / n as f64).collect();
    let samples = scan_friction(&spec, &grid).unwrap();
    let beta = |x: f64| force_composite(&spec.at(x)).unwrap().beta;
    let mut zeros = Vec::new();
    let mut extrema = Vec::new();
    for w in samples.windows(2) {
        if w[0].beta.signum() != w[1].beta.signum() {
            let (mut lo, mut hi) = (w[0].k0x, w[1].k0x);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if beta(mid).signum() == w[0].beta.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            zeros.push(0.5 * (lo + hi));
        }
    }
    for w in samples.windows(3) {
        let rising = w[1].beta > w[0].beta;
        if rising == (w[2].beta > w[1].beta) {
            continue;
        }
        let sign = if rising { 1.0 } else { -1.0 };
        let (x, _) = optomech_core::search::golden_section_max(|x| sign * beta(x), w[0].k0x, w[2].k0x, 1e-12);
        extrema.push(x);
    }
    (zeros, extrema)
}

fn fig3_regression(report: &mut Report) {
    // Reference features from an independent evaluation of the same closed form.
    let reference: [(f64, &[f64], &[f64]); 4] = [
        (0.01, &[0.7878015592, 1.5807959935, 2.3587097455], &[0.38865658, 1.18828006, 1.97364385, 2.7449862]),
        (0.1, &[0.8318481659, 1.6704649793, 2.4041396331], &[0.3650098, 1.30097485, 2.07734779, 2.73170061]),
        (0.3, &[0.9252588634, 1.8622531213, 2.5009113109], &[0.29565394, 1.56196163, 2.27430665, 2.72789116]),
        (1.0, &[1.1529562018, 2.3561944902, 2.7487643896], &[0.13571185, 2.21907732, 2.67476213, 2.82282837]),
    ];
    let mut worst = 0.0f64;
    let mut count_ok = true;
    for (zeta, zeros_ref, ext_ref) in reference {
        let (zeros, extrema) = friction_features(zeta);
        if zeros.len() != zeros_ref.len() || extrema.len() != ext_ref.len() {
            count_ok = false;
            println!("  zeta {zeta}: zeros {zeros:?}, extrema {extrema:?}");
            continue;
        }
        for (a, b) in zeros.iter().zip(zeros_ref).chain(extrema.iter().zip(ext_ref)) {
            worst = worst.max((a - b).abs());
        }
    }
    report.line(
        "fig3",
        count_ok && worst <= FIG3_TOL,
        format!("friction shape: feature counts match {count_ok}, worst position shift {worst:.2e} (tol {FIG3_TOL:.0e})"),
    );
}

fn main() -> ExitCode {
    // Under `cargo test`, libtest-style filter arguments may be passed; a
    // `--list` request gets an empty listing.
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut report = Report { failures: 0 };
    criterion_1(&mut report);
    criterion_2(&mut report);
    criterion_3(&mut report);
    criterion_4(&mut report);
    let start = Instant::now();
    let grid = figure_grid();
    let grid_time = start.elapsed();
    criterion_5(&mut report, &grid, grid_time);
    criterion_6(&mut report);
    criterion_7(&mut report, &grid);
    criterion_8(&mut report);
    criterion_9(&mut report);
    criterion_10(&mut report);
    fig3_regression(&mut report);
    println!("{} criteria failed", report.failures);
    if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
