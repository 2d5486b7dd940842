//! Closed-form asymptotics used as independent references for the composite
//! system: the weak scatterer in front of a perfect mirror, the strong
//! scatterer forming a resonator, and the standard cavity radiation-pressure
//! model.
//!
//! Temperatures are in `ħck₀`, lengths in `1/k₀` unless a wavenumber is passed.
//! The resonator phase φ is the mirror position `k₀x` reduced mod π, the
//! convention under which the resonator field below equals the composite
//! intracavity field `ℂ′` at rest.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::jet::Jet1;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Weak-scatterer force to second order in ζ, perfect mirror, `k₀ = 1`:
///
/// ```text
/// F = 4𝔹( ζ sin 2k₀x − 2ζ² sin²k₀x (4cos²k₀x − 1)
///         − ζ²ε [4 sin²2k₀x − 4k₀(L−x) sin 4k₀x] )
/// ```
pub fn mmc_force(zeta: f64, k0x: f64, k0_l: f64, flux: f64) -> Jet1 {
    let (s1, c1) = k0x.sin_cos();
    let s2 = (2.0 * k0x).sin();
    let val = zeta * s2 - 2.0 * zeta * zeta * s1 * s1 * (4.0 * c1 * c1 - 1.0);
    let eps = -zeta * zeta * (4.0 * s2 * s2 - 4.0 * (k0_l - k0x) * (4.0 * k0x).sin());
    Jet1::real(4.0 * flux * val, 4.0 * flux * eps)
}

/// Weak-scatterer reflected amplitude to first order in ζ, perfect mirror:
/// `−p + ζ(i − 2ip + ip²) + ζε[−2i + 2ip² − 4k₀(L−x)p²]`, `p = e^{−2ik₀x}`.
pub fn mmc_amplitude(zeta: f64, k0x: f64, k0_l: f64) -> Jet1 {
    let p = Complex64::from_polar(1.0, -2.0 * k0x);
    let p2 = p * p;
    let val = -p + zeta * (I - 2.0 * I * p + I * p2);
    let eps = zeta * (-2.0 * I + 2.0 * I * p2 - 4.0 * (k0_l - k0x) * p2);
    Jet1::new(val, eps)
}

/// Weak-scatterer diffusion at rest, `8ζ²𝔹` in `(ħk₀)²`.
pub fn mmc_diffusion(zeta: f64, flux: f64) -> f64 {
    8.0 * zeta * zeta * flux
}

/// `k_BT = ħ/(2τ)` with the round-trip delay `τ = 2(L − x)/c`, expressed in `ħck₀`.
pub fn mmc_temperature(k0: f64, l_minus_x: f64) -> f64 {
    1.0 / (4.0 * k0 * l_minus_x)
}

/// Half-width `1/(4ζ²)` of the resonator line in φ.
pub fn resonance_half_width(zeta: f64) -> f64 {
    1.0 / (4.0 * zeta * zeta)
}

/// Phase φ₀ of the resonator maximum, the root of `tan 2φ₀ = −1/ζ` that
/// maximizes `|ℂ′₀|²`. For `ζ > 0` this is `π − atan(1/ζ)/2 ∈ (3π/4, π)`.
pub fn resonance_phase(zeta: f64) -> f64 {
    PI - 0.5 * (1.0 / zeta).atan()
}

/// The resonator field at rest, exact and in Lorentzian approximation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntracavityField {
    /// `−e^{−2iφ}/(1 − iζ + iζe^{−2iφ})`.
    pub exact: Complex64,
    /// `−e^{−2iφ}/{2i(1 − iζ)[(φ − φ₀) − i/(4ζ²)]}`.
    pub lorentzian: Complex64,
    pub phi0: f64,
}

pub fn resonator_intracavity(zeta: f64, phi: f64) -> IntracavityField {
    let phi0 = resonance_phase(zeta);
    let e = Complex64::from_polar(1.0, -2.0 * phi);
    let one = Complex64::new(1.0, 0.0);
    let exact = -e / (one - I * zeta + I * zeta * e);
    let detune = Complex64::new(phi - phi0, -resonance_half_width(zeta));
    let lorentzian = -e / (2.0 * I * (one - I * zeta) * detune);
    IntracavityField { exact, lorentzian, phi0 }
}

/// Velocity coefficient `F₁/v` of the resonator force,
/// `−½ k₀² L (φ−φ₀) 𝔹 / {ζ⁴[(1/4ζ²)² + (φ−φ₀)²]³}`; negative means cooling.
/// `length` is the scatterer-mirror distance.
pub fn resonator_friction(zeta: f64, phi: f64, k0: f64, length: f64, flux: f64) -> f64 {
    let u = phi - resonance_phase(zeta);
    let w = resonance_half_width(zeta);
    let z4 = zeta.powi(4);
    -0.5 * k0 * k0 * length * u * flux / (z4 * (w * w + u * u).powi(3))
}

/// Resonator diffusion, as `4|ℂ′₀|⁴𝔹` with the exact field and in Lorentzian
/// form `𝔹/{4ζ⁴[(1/4ζ²)² + (φ−φ₀)²]²}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResonatorDiffusion {
    pub from_field: f64,
    pub lorentzian: f64,
}

pub fn resonator_diffusion(zeta: f64, phi: f64, flux: f64) -> ResonatorDiffusion {
    let field = resonator_intracavity(zeta, phi);
    let c2 = field.exact.norm_sqr();
    let u = phi - field.phi0;
    let w = resonance_half_width(zeta);
    ResonatorDiffusion {
        from_field: 4.0 * c2 * c2 * flux,
        lorentzian: flux / (4.0 * zeta.powi(4) * (w * w + u * u).powi(2)),
    }
}

/// Minimum resonator temperature `ħc/(8ζ²L) = ħκ/2`, reached at
/// `4ζ²(φ − φ₀) = 1`; in `ħck₀` for `k0_l = k₀L`.
pub fn resonator_temperature(zeta: f64, k0_l: f64) -> f64 {
    1.0 / (8.0 * zeta * zeta * k0_l)
}

/// Resonator temperature `D/(2β)` from the Lorentzian diffusion and friction
/// at a given phase; `None` where the friction heats.
pub fn resonator_temperature_at(zeta: f64, phi: f64, k0_l: f64) -> Option<f64> {
    let beta = -resonator_friction(zeta, phi, 1.0, k0_l, 1.0);
    let d = resonator_diffusion(zeta, phi, 1.0).lorentzian;
    (beta > 0.0).then(|| d / (2.0 * beta))
}

/// How the cavity coupling `G` is read off the scattering parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CouplingDefinition {
    /// `G = ω_c/L = ck₀/L`, the frequency pull per unit displacement.
    AngularFrequencyOverLength,
    /// `G = c²k₀²/L²`, which is `G²`
    /// under the other definition.
    SquaredList,
}

/// Single-mode cavity with radiation-pressure coupling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CavityParams {
    /// Field decay rate κ.
    pub kappa: f64,
    /// Pump detuning `Δ_C = ω − ω_c`.
    pub delta_c: f64,
    /// Drive amplitude, `η²/(2κ) = 𝔹`.
    pub eta: f64,
    /// Coupling `G` (frequency per length).
    pub g: f64,
}

impl CavityParams {
    /// Maps the resonator description onto the cavity model:
    /// `κ = c/(4Lζ²)`, `Δ_C = −c(φ − φ₀)/L`, `η² = 2κ𝔹`, and `G` per `coupling`.
    pub fn from_scattering(
        zeta: f64,
        phi: f64,
        k0: f64,
        length: f64,
        flux: f64,
        coupling: CouplingDefinition,
    ) -> Self {
        let kappa = 1.0 / (4.0 * length * zeta * zeta);
        let delta_c = -(phi - resonance_phase(zeta)) / length;
        let g = match coupling {
            CouplingDefinition::AngularFrequencyOverLength => k0 / length,
            CouplingDefinition::SquaredList => k0 * k0 / (length * length),
        };
        CavityParams { kappa, delta_c, eta: (2.0 * kappa * flux).sqrt(), g }
    }
}

/// Adiabatic cavity field and its velocity response.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianFriction {
    /// `F₁/v = 4η²G²κΔ/(Δ² + κ²)³` with `Δ = Δ_C − Gx`, in `ħ` units.
    pub coefficient: f64,
    /// `a⁽⁰⁾ = η/(−iΔ + κ)`.
    pub a0: Complex64,
    /// `a⁽¹⁾ = iηG/(−iΔ + κ)³`.
    pub a1: Complex64,
}

pub fn hamiltonian_friction(p: &CavityParams, x: f64) -> HamiltonianFriction {
    let delta = p.delta_c - p.g * x;
    let den = Complex64::new(p.kappa, -delta);
    let a0 = p.eta / den;
    let a1 = I * p.eta * p.g / (den * den * den);
    let coefficient =
        4.0 * p.eta * p.eta * p.g * p.g * p.kappa * delta / (delta * delta + p.kappa * p.kappa).powi(3);
    HamiltonianFriction { coefficient, a0, a1 }
}
