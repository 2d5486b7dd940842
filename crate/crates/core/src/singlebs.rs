//! A single moving beamsplitter between two counter-propagating monochromatic
//! drives: radiation force to first order in `v/c`, the optical-molasses
//! limit, and the quantum-noise momentum diffusion at rest.
//!
//! Units: `ħ = c = 1`. Amplitudes are photo-current amplitudes, so `|B₀|²` is
//! a photon flux. Forces come out in `ħk·flux`, friction coefficients in
//! `ħk·flux/c`, diffusion in `(ħk)²·flux`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::jet::Jet1;
use crate::scatterer::{moving_matrix, refltrans_of, Polarizability, ZetaResponse};

/// The two input drives at the scatterer position.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveFields {
    /// Right-propagating input incident from the left.
    pub b0: Complex64,
    /// Left-propagating input incident from the right.
    pub c0: Complex64,
    /// Pump wavenumber; with `c = 1` also the angular frequency.
    pub k: f64,
}

impl DriveFields {
    pub fn new(b0: Complex64, c0: Complex64, k: f64) -> Self {
        DriveFields { b0, c0, k }
    }

    /// Equal counter-propagating beams forming a standing wave, with phases
    /// referenced to `x = 0`: `B = b₀ e^{ik₀x}`, `C = b₀ e^{−ik₀x}`.
    pub fn standing_wave(b0: Complex64, k0x: f64, k: f64) -> Self {
        let phase = Complex64::from_polar(1.0, k0x);
        DriveFields { b0: b0 * phase, c0: b0 * phase.conj(), k }
    }
}

/// Static force, friction, diffusion and temperature at one configuration.
///
/// Force is `F = force0 − beta·v`; `beta > 0` is cooling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MechanicalResponse {
    pub force0: f64,
    pub beta: f64,
    pub diffusion: Option<f64>,
    pub temperature: Option<f64>,
}

impl MechanicalResponse {
    /// Splits a linearized force into `force0` and `beta = −∂F/∂v`.
    pub fn from_force(force: Jet1) -> Self {
        MechanicalResponse { force0: force.val.re, beta: -force.eps.re, diffusion: None, temperature: None }
    }

    /// Attaches a diffusion coefficient and, for positive friction, the
    /// equilibrium temperature `k_B T = D / (2β)`.
    pub fn with_diffusion(mut self, diffusion: f64) -> Self {
        self.diffusion = Some(diffusion);
        self.temperature = equilibrium_temperature(diffusion, self.beta);
        self
    }
}

/// `k_B T = D/(2β)`, defined only for `β > 0`.
pub fn equilibrium_temperature(diffusion: f64, beta: f64) -> Option<f64> {
    (beta > 0.0).then(|| diffusion / (2.0 * beta))
}

/// Outgoing amplitudes `(A, D)` of the moving scatterer, obtained by solving
/// `(C, D) = M̂ (A, B)` for the unknown outputs with `B = B₀`, `C = C₀`.
pub fn outgoing_amplitudes(p: &Polarizability, drive: &DriveFields) -> (Jet1, Jet1) {
    let m = moving_matrix(p, drive.k);
    let b = Jet1::constant(drive.b0);
    let c = Jet1::constant(drive.c0);
    let a = (c - m.m12 * b) / m.m11;
    let d = m.m21 * a + m.m22 * b;
    (a, d)
}

/// Radiation force `F = ħk (|A|² + |B|² − |C|² − |D|²)` on the moving
/// scatterer, linearized in `v/c`.
pub fn force_single(p: &Polarizability, drive: &DriveFields) -> Jet1 {
    let (a, d) = outgoing_amplitudes(p, drive);
    let b = Jet1::constant(drive.b0).norm_sqr();
    let c = Jet1::constant(drive.c0).norm_sqr();
    (a.norm_sqr() + b - c - d.norm_sqr()).scale(drive.k)
}

/// The same force written out in closed form, grouped by drive combination:
/// flux imbalance, total-flux damping, `Im B₀C₀*` and `Re B₀C₀*` terms.
///
/// The `Im B₀C₀*` velocity term enters with the sign `−ε ω Im(ζ* ∂ζ/∂ω)`,
/// which is what the stress-tensor evaluation of [`force_single`] produces.
pub fn force_single_closed_form(p: &Polarizability, drive: &DriveFields) -> Jet1 {
    let ZetaResponse { zeta, omega_dzeta: w } = p.response(drive.k);
    let eps = Jet1::EPSILON;
    let b2 = drive.b0.norm_sqr();
    let c2 = drive.c0.norm_sqr();
    let cross = drive.b0 * drive.c0.conj();
    let d_abs2 = 2.0 * (zeta.conj() * w).re;
    let d_im = w.im;
    let z2 = zeta.norm_sqr();

    let denom = (Jet1::ONE - Jet1::new(Complex64::i() * zeta, Complex64::i() * w)).norm_sqr();
    let prefactor = Jet1::real(2.0 * drive.k, 0.0) / denom;

    let imbalance = (Jet1::real(zeta.im + z2, 0.0) + eps * (0.5 * d_abs2)) * (b2 - c2);
    let damping = eps * (-(d_im - 0.5 * d_abs2 + 2.0 * z2) * (b2 + c2));
    let im_term = (eps * (-(zeta.conj() * w).im) - Jet1::real(zeta.re, 0.0)) * (2.0 * cross.im);
    let re_term = eps * (2.0 * (2.0 * zeta.im - d_im + 0.5 * d_abs2) * cross.re);
    prefactor * (imbalance + damping + im_term + re_term)
}

/// Friction coefficient of Doppler cooling in a standing wave averaged over
/// position, `β = 4ħk₀² |B₀|² Im(∂ζ/∂ω)`, to lowest order in ζ.
///
/// `flux` is `|B₀|²` of each of the two beams; `k0` is also the pump angular
/// frequency (`c = 1`).
pub fn molasses_friction(p: &Polarizability, flux: f64, k0: f64) -> f64 {
    let w = p.response(k0).omega_dzeta;
    // ∂ζ/∂ω = w/ω with ω = k0.
    4.0 * k0 * k0 * flux * (w / k0).im
}

/// Diffusion of a scatterer at rest from the closed form in ζ,
/// `(ħk)² [2 Im ζ |B − C|² + 4|ζ|² (|B|² + |C|²)] / |1 − iζ|²`.
pub fn diffusion_single(zeta: Complex64, drive: &DriveFields) -> f64 {
    let denom = (Complex64::new(1.0, 0.0) - Complex64::i() * zeta).norm_sqr();
    let (b, c) = (drive.b0, drive.c0);
    let k2 = drive.k * drive.k;
    k2 * (2.0 * zeta.im * (b - c).norm_sqr() + 4.0 * zeta.norm_sqr() * (b.norm_sqr() + c.norm_sqr()))
        / denom
}

/// Diffusion of a scatterer at rest from the output amplitudes,
/// `(ħk)² (|A|² + |B|² + |C|² + |D|² + 2Re{𝔯A*B − 𝔱A*C} + 2Re{𝔯D*C − 𝔱D*B})`,
/// with `A = 𝔯B + 𝔱C` and `D = 𝔯C + 𝔱B`.
pub fn diffusion_from_amplitudes(zeta: Complex64, drive: &DriveFields) -> f64 {
    let rt = refltrans_of(zeta);
    let (r, t) = (rt.r, rt.t);
    let (b, c) = (drive.b0, drive.c0);
    let a = r * b + t * c;
    let d = r * c + t * b;
    let sum = a.norm_sqr() + b.norm_sqr() + c.norm_sqr() + d.norm_sqr()
        + 2.0 * (r * a.conj() * b - t * a.conj() * c).re
        + 2.0 * (r * d.conj() * c - t * d.conj() * b).re;
    drive.k * drive.k * sum
}

/// Whether the amplitude form and the closed form of the diffusion agree to
/// `1e-10` relative.
pub fn diffusion_equivalence_check(zeta: Complex64, drive: &DriveFields) -> bool {
    let a = diffusion_from_amplitudes(zeta, drive);
    let b = diffusion_single(zeta, drive);
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= 1e-10 * scale || scale == 0.0
}

/// Force, friction, diffusion and temperature of a scatterer in a given drive.
pub fn response_single(p: &Polarizability, drive: &DriveFields) -> MechanicalResponse {
    let zeta = p.response(drive.k).zeta;
    MechanicalResponse::from_force(force_single(p, drive)).with_diffusion(diffusion_single(zeta, drive))
}
