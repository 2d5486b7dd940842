//! A mobile scatterer ζ in front of a fixed mirror 𝔯, driven from the left by
//! a monochromatic beam of flux 𝔹.
//!
//! The reflected amplitude 𝒜 (relative to the input) is available both as the
//! multiple-reflection series and in closed form. Everything downstream (ℂ, 𝔻,
//! force, friction, diffusion, temperature) is built from 𝒜.
//!
//! Positions are phases `k₀x`; `k₀L` is the reference phase, and the mirror
//! distance enters only through the secular ε-term `k₀d = k₀(L − x)`. The
//! oscillating phase is always `e^{−2ik₀x}`, i.e. `k₀L` is treated as a
//! multiple of 2π in the trigonometric factors whatever value is supplied.
//! Units as in [`crate::singlebs`], with `k₀ = 1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::jet::Jet1;
use crate::scatterer::{moving_matrix, Polarizability};
use crate::search::{argmax, golden_section_max};
use crate::singlebs::{equilibrium_temperature, MechanicalResponse};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Composite configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemSpec {
    /// Polarizability of the mobile scatterer (frequency independent).
    pub zeta: Complex64,
    /// Amplitude reflectivity of the fixed mirror.
    pub r_fixed: Complex64,
    /// Reference phase `k₀L`.
    pub k0_l: f64,
    /// Scatterer position `k₀x`.
    pub k0x: f64,
    /// Input photon flux 𝔹.
    pub flux: f64,
}

impl SystemSpec {
    /// Real scatterer in front of a perfect mirror (`𝔯 = −1`), unit flux.
    pub fn perfect_mirror(zeta: f64, k0_l: f64, k0x: f64) -> Self {
        SystemSpec {
            zeta: Complex64::new(zeta, 0.0),
            r_fixed: Complex64::new(-1.0, 0.0),
            k0_l,
            k0x,
            flux: 1.0,
        }
    }

    pub fn at(self, k0x: f64) -> Self {
        SystemSpec { k0x, ..self }
    }

    pub fn with_zeta(self, zeta: f64) -> Self {
        SystemSpec { zeta: Complex64::new(zeta, 0.0), ..self }
    }

    /// Scatterer-mirror phase `k₀d = k₀(L − x)`.
    pub fn k0d(&self) -> f64 {
        self.k0_l - self.k0x
    }

    /// Checks `|𝔯| ≤ 1`, `d > 0`, a non-negative flux and finite inputs.
    pub fn validate(&self) -> Result<()> {
        let finite = self.zeta.is_finite()
            && self.r_fixed.is_finite()
            && self.k0_l.is_finite()
            && self.k0x.is_finite()
            && self.flux.is_finite();
        if !finite {
            return Err(Error::InvalidParameter("non-finite system parameter".into()));
        }
        if self.r_fixed.norm() > 1.0 + 1e-12 {
            return Err(Error::InvalidParameter(format!("|r_fixed| = {} > 1", self.r_fixed.norm())));
        }
        if self.k0d() <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "scatterer must sit before the mirror: k0L = {} <= k0x = {}",
                self.k0_l, self.k0x
            )));
        }
        if self.flux < 0.0 {
            return Err(Error::InvalidParameter(format!("negative flux {}", self.flux)));
        }
        Ok(())
    }

    /// True when `k₀L` is a positive multiple of 2π, the case in which the
    /// secular term uses the geometric distance exactly.
    pub fn reference_aligned(&self) -> bool {
        let n = (self.k0_l / (2.0 * PI)).round();
        n >= 1.0 && (self.k0_l - 2.0 * PI * n).abs() <= 1e-9 * self.k0_l.abs().max(1.0)
    }

    /// Modulus of the round-trip factor `𝔯ζ/(1 − iζ)`; the series converges below 1.
    pub fn round_trip_ratio(&self) -> f64 {
        (self.r_fixed * self.zeta / (1.0 - I * self.zeta)).norm()
    }

    /// `1 − iζ − 𝔯iζe^{−2ik₀x}`, whose zeros are the cavity poles.
    pub fn resonance_denominator(&self) -> Complex64 {
        1.0 - I * self.zeta - self.r_fixed * I * self.zeta * mirror_phase(self.k0x)
    }

    /// Whether the closed-form diffusion applies: `𝔯 = −1` and real ζ.
    pub fn diffusion_regime(&self) -> bool {
        self.r_fixed == Complex64::new(-1.0, 0.0) && self.zeta.im == 0.0
    }
}

/// `e^{−2ik₀x}`.
fn mirror_phase(k0x: f64) -> Complex64 {
    Complex64::from_polar(1.0, -2.0 * k0x)
}

/// Reflected amplitude in closed form, valid for any ζ and 𝔯.
///
/// ```text
/// 𝒜 = 1/(1−iζ) { iζ + 𝔯p/Den
///                − 2iεζ [1 − 𝔯²p²/Den² − 2ik₀d 𝔯²(1−iζ)p²/Den³] }
/// p = e^{−2ik₀x},  Den = 1 − iζ − 𝔯iζp
/// ```
pub fn amplitude_closed(spec: &SystemSpec) -> Result<Jet1> {
    let zeta = spec.zeta;
    let r = spec.r_fixed;
    let p = mirror_phase(spec.k0x);
    let t_inv = 1.0 - I * zeta;
    let den = spec.resonance_denominator();
    if den == Complex64::new(0.0, 0.0) || t_inv == Complex64::new(0.0, 0.0) {
        return Err(Error::SingularDenominator { k0x: spec.k0x });
    }
    let rp2 = r * r * p * p;
    let val = (I * zeta + r * p / den) / t_inv;
    let bracket = 1.0 - rp2 / (den * den) - 2.0 * I * spec.k0d() * rp2 * t_inv / (den * den * den);
    let eps = -2.0 * I * zeta * bracket / t_inv;
    let a = Jet1::new(val, eps);
    if !a.is_finite() {
        return Err(Error::SingularDenominator { k0x: spec.k0x });
    }
    Ok(a)
}

/// Result of summing the multiple-reflection series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesSum {
    pub amplitude: Jet1,
    /// Number of round-trip terms summed.
    pub terms: usize,
    /// Rigorous bound on the omitted tail of the val part.
    pub tail_bound_val: f64,
    /// Rigorous bound on the omitted tail of the eps part.
    pub tail_bound_eps: f64,
    /// Whether the tail bounds met the requested tolerance.
    pub converged: bool,
}

/// Stopping rule for [`amplitude_series_auto`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesOptions {
    /// Stop once both tail bounds fall below `tolerance·max(1, |partial|)`.
    pub tolerance: f64,
    pub max_terms: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions { tolerance: 1e-12, max_terms: 10_000 }
    }
}

/// Complex double-double, just enough for a compensated running sum.
#[derive(Clone, Copy)]
struct Dd {
    re: TwoFloat,
    im: TwoFloat,
}

impl Dd {
    const ZERO: Dd = Dd { re: TwoFloat::from_f64(0.0), im: TwoFloat::from_f64(0.0) };

    fn from_c(z: Complex64) -> Self {
        Dd { re: TwoFloat::from(z.re), im: TwoFloat::from(z.im) }
    }

    fn to_c(self) -> Complex64 {
        Complex64::new(f64::from(self.re), f64::from(self.im))
    }

    fn add(self, o: Dd) -> Dd {
        Dd { re: self.re + o.re, im: self.im + o.im }
    }

    fn mul(self, o: Dd) -> Dd {
        Dd { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }

    fn scale(self, s: f64) -> Dd {
        Dd { re: self.re * s, im: self.im * s }
    }
}

/// Series pieces shared by the fixed-length and adaptive summations.
///
/// With `M_a` the scatterer's right-to-left matrix, the series reads
/// `𝒜 = M₁₂/M₂₂ + c Σ_{n≥1} q^{n−1} pⁿ [1 + 2in(n−1)k₀d ε]`,
/// `q = −𝔯M₂₁/M₂₂`, `c = 𝔯 det M_a / M₂₂²`. Writing the prefactor this way
/// avoids the `1/M₂₁` that would blow up at ζ = 0.
///
/// Since `(q^{n−1}).eps = (n−1)(q₁/q₀) q₀^{n−1}`, only the value powers
/// `w_n = q₀^{n−1}pⁿ` are iterated, and the eps part of the sum is
/// `(q₁/q₀) Σ(n−1)w_n + 2ik₀d Σ n(n−1)w_n`.
struct SeriesSetup {
    lead: Jet1,
    c: Jet1,
    q: Jet1,
    p: Complex64,
    k0d: f64,
}

impl SeriesSetup {
    fn new(spec: &SystemSpec) -> Result<Self> {
        let ratio = spec.round_trip_ratio();
        if !(ratio < 1.0) {
            return Err(Error::NonConvergent { ratio });
        }
        let ma = moving_matrix(&Polarizability::constant(spec.zeta), 1.0).unit_det_inverse();
        let inv22 = ma.m22.inv()?;
        let lead = ma.m12 * inv22;
        let q = -(ma.m21 * inv22 * spec.r_fixed);
        let c = ma.det() * inv22 * inv22 * spec.r_fixed;
        Ok(SeriesSetup { lead, c, q, p: mirror_phase(spec.k0x), k0d: spec.k0d() })
    }

    /// Tail bounds after `n` terms, from `|w_m| ≤ ρ^{m}` and
    /// `|∂w_m/∂ε| ≤ m ρ^{m−1}|q₁|` with `w_m = q^m`.
    fn tail(&self, n: usize) -> (f64, f64) {
        let rho = self.q.val.norm();
        let q1 = self.q.eps.norm();
        let nf = n as f64;
        let one_m = 1.0 - rho;
        let rho_n = rho.powf(nf);
        let rho_nm1 = if n == 0 { 0.0 } else { rho.powf(nf - 1.0) };
        // Σ_{m≥N} ρ^m, Σ_{m≥N} m ρ^{m−1}, Σ_{m≥N} m(m+1) ρ^m.
        let s0 = rho_n / one_m;
        let s1 = nf * rho_nm1 / one_m + rho_n / (one_m * one_m);
        let s2 = nf * (nf + 1.0) * rho_n / one_m
            + 2.0 * (nf + 1.0) * rho_n * rho / (one_m * one_m)
            + 2.0 * rho_n * rho * rho / (one_m * one_m * one_m);
        let tv = self.c.val.norm() * s0;
        let te = self.c.eps.norm() * s0 + self.c.val.norm() * (q1 * s1 + 2.0 * self.k0d * s2);
        (tv, te)
    }

    /// Assembles `𝒜` from `Σw_n`, `Σ(n−1)w_n` and `Σn(n−1)w_n`.
    fn finish(&self, sums: &[Dd; 3]) -> Jet1 {
        let [s0, s1, s2] = sums.map(Dd::to_c);
        let log_ratio = if self.q.val == Complex64::new(0.0, 0.0) {
            Complex64::new(0.0, 0.0)
        } else {
            self.q.eps / self.q.val
        };
        let eps = log_ratio * s1 + 2.0 * I * self.k0d * s2;
        self.lead + self.c * Jet1::new(s0, eps)
    }
}

/// Sums the series in double-double precision, stopping after `max_terms`
/// terms or, when `tolerance` is given, once the tail bounds are below it.
///
/// Far from resonance the eps part is a small remainder of terms up to
/// ~10¹⁶ times larger, so both the powers and the sums are carried in
/// double-double; the integer weights are exact.
fn sum_series(setup: &SeriesSetup, max_terms: usize, tolerance: Option<f64>) -> SeriesSum {
    const CHECK_EVERY: usize = 256;
    let z = Dd::from_c(setup.q.val).mul(Dd::from_c(setup.p));
    let mut w = Dd::from_c(setup.p);
    let mut sums = [Dd::ZERO; 3];
    let mut n = 0usize;
    let converged_at = |sums: &[Dd; 3], n: usize, tol: f64| {
        let partial = setup.finish(sums);
        let (tv, te) = setup.tail(n);
        let ok = tv <= tol * partial.val.norm().max(1.0) && te <= tol * partial.eps.norm().max(1.0);
        (partial, tv, te, ok)
    };
    while n < max_terms {
        n += 1;
        let m = (n - 1) as f64;
        sums[0] = sums[0].add(w);
        sums[1] = sums[1].add(w.scale(m));
        sums[2] = sums[2].add(w.scale(m * n as f64));
        w = w.mul(z);
        if let Some(tol) = tolerance {
            if n % CHECK_EVERY == 0 {
                let (amplitude, tv, te, ok) = converged_at(&sums, n, tol);
                if ok {
                    return SeriesSum { amplitude, terms: n, tail_bound_val: tv, tail_bound_eps: te, converged: true };
                }
            }
        }
    }
    let (amplitude, tv, te, ok) = converged_at(&sums, n, tolerance.unwrap_or(f64::INFINITY));
    SeriesSum { amplitude, terms: n, tail_bound_val: tv, tail_bound_eps: te, converged: ok }
}

/// First `n_terms` round trips of the multiple-reflection series, with the
/// tail bounds of what was left out.
pub fn amplitude_series(spec: &SystemSpec, n_terms: usize) -> Result<SeriesSum> {
    if n_terms == 0 {
        return Err(Error::InvalidParameter("n_terms must be at least 1".into()));
    }
    let setup = SeriesSetup::new(spec)?;
    Ok(sum_series(&setup, n_terms, None))
}

/// Multiple-reflection series summed until the tail bounds meet
/// `options.tolerance` relative to the partial sum, or `options.max_terms`.
pub fn amplitude_series_auto(spec: &SystemSpec, options: SeriesOptions) -> Result<SeriesSum> {
    if options.max_terms == 0 {
        return Err(Error::InvalidParameter("max_terms must be at least 1".into()));
    }
    let setup = SeriesSetup::new(spec)?;
    Ok(sum_series(&setup, options.max_terms, Some(options.tolerance)))
}

/// Reflected amplitude plus the fields and intensities on both sides of the
/// mobile scatterer, all per unit input flux.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompositeAmplitudes {
    /// 𝒜, reflected amplitude.
    pub a: Jet1,
    /// ℂ′, amplitude leaving the scatterer towards the mirror.
    pub cp: Jet1,
    /// 𝔻′, amplitude arriving at the scatterer from the mirror.
    pub dp: Jet1,
    /// 𝔸 = |𝒜|².
    pub big_a: Jet1,
    /// ℂ = |ℂ′|².
    pub big_c: Jet1,
    /// 𝔻 = |𝔻′|².
    pub big_d: Jet1,
}

/// Intensities from the expanded expressions
///
/// ```text
/// ℂ = |1−iζ|²𝔸 + |ζ|²(1−4ε) + 2Re{iζ*(1−iζ)(1−2ε)𝒜}
/// 𝔻 = |ζ|²(1+4ε)𝔸 + |1+iζ|² + 2Re{iζ(1−iζ*)(1+2ε)𝒜}
/// ```
///
/// The amplitudes ℂ′, 𝔻′ are the scatterer matrix applied to `(𝒜, 1)`.
pub fn intensities(spec: &SystemSpec, a: Jet1) -> CompositeAmplitudes {
    let zeta = spec.zeta;
    let z2 = zeta.norm_sqr();
    let big_a = a.norm_sqr();
    let minus = Jet1::one_plus(-2.0);
    let plus = Jet1::one_plus(2.0);
    let cross_c = (a * minus * (I * zeta.conj() * (1.0 - I * zeta))).re().scale(2.0);
    let cross_d = (a * plus * (I * zeta * (1.0 - I * zeta.conj()))).re().scale(2.0);
    let big_c = big_a * (1.0 - I * zeta).norm_sqr() + Jet1::real(z2, -4.0 * z2) + cross_c;
    let big_d = big_a * Jet1::real(z2, 4.0 * z2) + Jet1::from((1.0 + I * zeta).norm_sqr()) + cross_d;
    let cp = a * (1.0 - I * zeta) - minus * (I * zeta);
    let dp = a * plus * (I * zeta) + Jet1::from(1.0 + I * zeta);
    CompositeAmplitudes { a, cp, dp, big_a, big_c, big_d }
}

/// Closed-form amplitude and intensities in one call.
pub fn amplitudes(spec: &SystemSpec) -> Result<CompositeAmplitudes> {
    let a = amplitude_closed(spec)?;
    Ok(intensities(spec, a))
}

/// Linearized force `𝔹(𝔸 + 1 − ℂ − 𝔻)` in units of `ħk₀`.
pub fn force_jet(spec: &SystemSpec) -> Result<Jet1> {
    let amps = amplitudes(spec)?;
    Ok((amps.big_a + Jet1::ONE - amps.big_c - amps.big_d) * spec.flux)
}

/// Static force and friction coefficient of the mobile scatterer.
pub fn force_composite(spec: &SystemSpec) -> Result<MechanicalResponse> {
    Ok(MechanicalResponse::from_force(force_jet(spec)?))
}

/// The expanded force expression
/// `−2𝔹([|ζ|²(1+2ε) + Im ζ]𝔸 + |ζ|²(1−2ε) − Im ζ + 2Re{iζ(1−iζ)𝒜})`.
///
/// Agrees with [`force_jet`] for real ζ only; for absorbing scatterers the
/// cross terms of ℂ and 𝔻 no longer combine into `iζ(1 − iζ)`.
pub fn force_composite_explicit(spec: &SystemSpec) -> Result<Jet1> {
    let zeta = spec.zeta;
    let z2 = zeta.norm_sqr();
    let a = amplitude_closed(spec)?;
    let big_a = a.norm_sqr();
    let f = big_a * Jet1::real(z2 + zeta.im, 2.0 * z2)
        + Jet1::real(z2 - zeta.im, -2.0 * z2)
        + (a * (I * zeta * (1.0 - I * zeta))).re().scale(2.0);
    Ok(f * (-2.0 * spec.flux))
}

fn require_diffusion_regime(spec: &SystemSpec) -> Result<()> {
    if spec.diffusion_regime() {
        Ok(())
    } else {
        Err(Error::UnsupportedRegime(
            "composite diffusion needs r_fixed = -1 and a real zeta".into(),
        ))
    }
}

/// Momentum diffusion at rest, `D = 4𝔹(1 − 1/|1 − iζ + iζe^{−2ik₀x}|²)²`,
/// in `ħ²k₀²` per unit time.
pub fn diffusion_composite(spec: &SystemSpec) -> Result<f64> {
    require_diffusion_regime(spec)?;
    let den2 = spec.resonance_denominator().norm_sqr();
    let g = 1.0 - 1.0 / den2;
    Ok(4.0 * spec.flux * g * g)
}

/// The same diffusion via `𝔹(𝔸 + 1 − ℂ − 𝔻)²` at rest. The proportionality
/// to the squared static force holds only in the `𝔯 = −1`, real-ζ regime.
pub fn diffusion_from_intensities(spec: &SystemSpec) -> Result<f64> {
    require_diffusion_regime(spec)?;
    let amps = amplitudes(spec)?;
    let f = (amps.big_a + Jet1::ONE - amps.big_c - amps.big_d).val.re;
    Ok(spec.flux * f * f)
}

/// Force, friction and, where defined, diffusion and temperature.
pub fn response_composite(spec: &SystemSpec) -> Result<MechanicalResponse> {
    let resp = force_composite(spec)?;
    if spec.diffusion_regime() {
        Ok(resp.with_diffusion(diffusion_composite(spec)?))
    } else {
        Ok(resp)
    }
}

/// One row of a friction scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrictionSample {
    pub k0x: f64,
    pub force0: f64,
    pub beta: f64,
}

/// Force and friction over a grid of positions.
pub fn scan_friction(spec: &SystemSpec, grid: &[f64]) -> Result<Vec<FrictionSample>> {
    grid.iter()
        .map(|&k0x| {
            let r = force_composite(&spec.at(k0x))?;
            Ok(FrictionSample { k0x, force0: r.force0, beta: r.beta })
        })
        .collect()
}

/// Grid resolution of the maximum-friction search on `(0, π]`.
pub const MAX_SEARCH_GRID: usize = 2048;
/// Golden-section stopping width in `k₀x`.
pub const MAX_SEARCH_TOL: f64 = 1e-10;
/// Half-width of the refinement window around the cavity resonance, in resonance half-widths.
const RESONANCE_WINDOW: f64 = 40.0;

/// Position of the cavity resonance in `(0, π]` and its half-width in `k₀x`,
/// when the resonance is sharp enough to slip between coarse grid points.
fn resonance_window(spec: &SystemSpec) -> Option<(f64, f64)> {
    let a = 1.0 - I * spec.zeta;
    let b = spec.r_fixed * I * spec.zeta;
    let (ma, mb) = (a.norm(), b.norm());
    if mb == 0.0 || !(ma > mb) {
        return None;
    }
    // |a − b e^{−iθ}| is smallest at θ = arg b − arg a, θ = 2k₀x.
    let theta = b.arg() - a.arg();
    let center = wrap_position(0.5 * theta);
    let half_width = (ma - mb) / (2.0 * (ma * mb).sqrt());
    Some((center, half_width))
}

/// Maps a phase into the canonical window `(0, π]`.
fn wrap_position(k0x: f64) -> f64 {
    let w = k0x.rem_euclid(PI);
    if w == 0.0 {
        PI
    } else {
        w
    }
}

/// Position and value of the largest friction in `k₀x ∈ (0, π]`.
///
/// A uniform grid of [`MAX_SEARCH_GRID`] points, densified around a narrow
/// cavity resonance, picks the best sample (ties to smaller `k₀x`); golden
/// section then refines within the neighbouring samples to [`MAX_SEARCH_TOL`].
pub fn locate_max_friction(spec: &SystemSpec) -> Result<(f64, f64)> {
    spec.validate()?;
    let beta = |k0x: f64| force_composite(&spec.at(k0x)).map(|r| r.beta).unwrap_or(f64::NAN);

    let step = PI / MAX_SEARCH_GRID as f64;
    let mut xs: Vec<f64> = (1..=MAX_SEARCH_GRID).map(|j| j as f64 * step).collect();
    if let Some((center, hw)) = resonance_window(spec) {
        if hw < 4.0 * step {
            let span = RESONANCE_WINDOW * hw;
            let n = MAX_SEARCH_GRID;
            xs.extend((0..=n).map(|j| wrap_position(center - span + 2.0 * span * j as f64 / n as f64)));
        }
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let values: Vec<f64> = xs.iter().map(|&x| beta(x)).collect();
    let best = argmax(&values).ok_or(Error::NoCoolingPoint)?;

    let lo = if best == 0 { 0.0 } else { xs[best - 1] };
    let hi = if best + 1 == xs.len() { PI } else { xs[best + 1] };
    let (x_ref, b_ref) = golden_section_max(beta, lo, hi, MAX_SEARCH_TOL);
    if b_ref > values[best] {
        Ok((x_ref, b_ref))
    } else {
        Ok((xs[best], values[best]))
    }
}

/// The friction maximum for one scatterer strength, with its diffusion and
/// temperature where those are defined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrictionMaximum {
    pub zeta: f64,
    pub k0x: f64,
    pub beta: f64,
    pub diffusion: Option<f64>,
    pub temperature: Option<f64>,
}

/// Locates the friction maximum and evaluates `k_BT = D/(2β)` there.
pub fn temperature_at_max_friction(spec: &SystemSpec) -> Result<FrictionMaximum> {
    require_diffusion_regime(spec)?;
    if !(spec.zeta.re > 0.0) {
        return Err(Error::InvalidParameter("zeta must be positive".into()));
    }
    let (k0x, beta) = locate_max_friction(spec)?;
    if !(beta > 0.0) {
        return Err(Error::NoCoolingPoint);
    }
    let diffusion = diffusion_composite(&spec.at(k0x))?;
    Ok(FrictionMaximum {
        zeta: spec.zeta.re,
        k0x,
        beta,
        diffusion: Some(diffusion),
        temperature: equilibrium_temperature(diffusion, beta),
    })
}

/// Friction maximum for each ζ of a real, positive grid; other parameters
/// come from `template`.
pub fn scan_max_friction_vs_zeta(zetas: &[f64], template: &SystemSpec) -> Result<Vec<FrictionMaximum>> {
    zetas.iter().map(|&z| max_friction_at(z, template)).collect()
}

/// Single-ζ worker of [`scan_max_friction_vs_zeta`], exposed for parallel callers.
pub fn max_friction_at(zeta: f64, template: &SystemSpec) -> Result<FrictionMaximum> {
    if !(zeta > 0.0) {
        return Err(Error::InvalidParameter(format!("zeta grid must be positive, got {zeta}")));
    }
    let spec = template.with_zeta(zeta);
    if spec.diffusion_regime() {
        return temperature_at_max_friction(&spec);
    }
    let (k0x, beta) = locate_max_friction(&spec)?;
    Ok(FrictionMaximum { zeta, k0x, beta, diffusion: None, temperature: None })
}

/// Slope of `log y` against `log x` between two points.
pub fn loglog_slope(x0: f64, y0: f64, x1: f64, y1: f64) -> f64 {
    (y1 / y0).ln() / (x1 / x0).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spec(zeta: Complex64, r: Complex64, k0x: f64) -> SystemSpec {
        SystemSpec { zeta, r_fixed: r, k0_l: 200.0 * PI, k0x, flux: 1.0 }
    }

    #[test]
    fn bare_mirror_reflects_with_position_phase() {
        let s = spec(c(0.0, 0.0), c(-1.0, 0.0), 0.7);
        let a = amplitude_closed(&s).unwrap();
        assert!((a.val - (-mirror_phase(0.7))).norm() < 1e-15);
        assert_eq!(a.eps, c(0.0, 0.0));
        let series = amplitude_series(&s, 5).unwrap();
        assert!((series.amplitude.val - a.val).norm() < 1e-15);
    }

    #[test]
    fn no_mirror_gives_bare_scatterer_reflectivity() {
        let zeta = c(0.4, 0.1);
        let s = spec(zeta, c(0.0, 0.0), 1.1);
        let expected = I * zeta / (1.0 - I * zeta);
        let a = amplitude_closed(&s).unwrap();
        assert!((a.val - expected).norm() < 1e-15);
        let series = amplitude_series(&s, 3).unwrap();
        assert!((series.amplitude.val - expected).norm() < 1e-15);
    }

    #[test]
    fn series_matches_closed_form_at_reference_case() {
        let s = spec(c(0.3, 0.0), c(-1.0, 0.0), 2.0);
        let closed = amplitude_closed(&s).unwrap();
        let series = amplitude_series(&s, 200).unwrap();
        assert!(series.amplitude.max_abs_diff(closed) < 1e-10, "{:?} vs {closed:?}", series.amplitude);
        assert!(series.tail_bound_eps < 1e-10);
    }

    #[test]
    fn series_rejects_divergent_round_trip() {
        let s = spec(c(0.0, -2.0), c(-1.0, 0.0), 1.0);
        assert!(matches!(amplitude_series(&s, 10), Err(Error::NonConvergent { .. })));
        assert!(amplitude_series(&spec(c(0.1, 0.0), c(-1.0, 0.0), 1.0), 0).is_err());
    }

    #[test]
    fn tail_bound_is_honest() {
        let s = spec(c(1.5, 0.2), c(-0.9, 0.1), 0.4);
        let closed = amplitude_closed(&s).unwrap();
        for n in [5, 20, 60] {
            let part = amplitude_series(&s, n).unwrap();
            assert!((part.amplitude.val - closed.val).norm() <= part.tail_bound_val * (1.0 + 1e-9) + 1e-13);
            assert!((part.amplitude.eps - closed.eps).norm() <= part.tail_bound_eps * (1.0 + 1e-9) + 1e-10);
        }
    }

    #[test]
    fn auto_series_stops_on_tolerance() {
        let s = spec(c(2.0, 0.0), c(-1.0, 0.0), 2.9);
        let sum = amplitude_series_auto(&s, SeriesOptions::default()).unwrap();
        assert!(sum.converged);
        assert!(sum.terms < 10_000);
        let closed = amplitude_closed(&s).unwrap();
        assert!((sum.amplitude.eps - closed.eps).norm() <= 1e-9 * closed.eps.norm().max(1.0));
    }

    #[test]
    fn lossless_mirror_reflects_everything_at_rest() {
        for &k0x in &[0.1, 1.0, 2.5, 3.0] {
            let amps = amplitudes(&spec(c(0.8, 0.0), c(-1.0, 0.0), k0x)).unwrap();
            assert!((amps.big_a.val.re - 1.0).abs() < 1e-12);
            assert!((amps.big_c.val.re - amps.big_d.val.re).abs() < 1e-12);
        }
    }

    #[test]
    fn intensities_match_field_amplitudes() {
        let s = spec(c(0.7, 0.3), c(-0.8, 0.2), 1.3);
        let amps = amplitudes(&s).unwrap();
        assert!(amps.big_c.max_abs_diff(amps.cp.norm_sqr()) < 1e-12);
        assert!(amps.big_d.max_abs_diff(amps.dp.norm_sqr()) < 1e-12);
    }

    #[test]
    fn transparent_scatterer_passes_fields() {
        let s = spec(c(0.0, 0.0), c(-0.5, 0.0), 0.9);
        let amps = amplitudes(&s).unwrap();
        assert!(amps.big_c.max_abs_diff(amps.big_a) < 1e-15);
        assert!(amps.big_d.max_abs_diff(Jet1::ONE) < 1e-15);
        let f = force_composite(&s).unwrap();
        assert_eq!((f.force0, f.beta), (0.0, 0.0));
    }

    #[test]
    fn explicit_force_agrees_for_real_zeta() {
        let s = spec(c(1.2, 0.0), c(-0.7, 0.3), 0.8);
        let a = force_jet(&s).unwrap();
        let b = force_composite_explicit(&s).unwrap();
        assert!(a.max_abs_diff(b) < 1e-10 * a.eps.norm().max(1.0));
    }

    #[test]
    fn diffusion_forms_agree_and_guard_regime() {
        let s = spec(c(0.6, 0.0), c(-1.0, 0.0), 2.2);
        let d1 = diffusion_composite(&s).unwrap();
        let d2 = diffusion_from_intensities(&s).unwrap();
        assert!((d1 - d2).abs() <= 1e-10 * d1.max(1e-300));
        assert!(matches!(
            diffusion_composite(&spec(c(0.6, 0.1), c(-1.0, 0.0), 2.2)),
            Err(Error::UnsupportedRegime(_))
        ));
        assert!(diffusion_composite(&spec(c(0.6, 0.0), c(-0.9, 0.0), 2.2)).is_err());
    }

    #[test]
    fn max_friction_small_zeta_near_seven_eighths() {
        let s = SystemSpec::perfect_mirror(0.01, 100.0, 1.0);
        let m = temperature_at_max_friction(&s).unwrap();
        assert!((m.k0x - 7.0 * PI / 8.0).abs() < 0.05, "k0x* = {}", m.k0x);
        assert!(m.beta > 0.0);
        assert!(m.temperature.unwrap() > 0.0);
    }

    #[test]
    fn max_friction_resolves_narrow_resonance() {
        let s = SystemSpec::perfect_mirror(50.0, 100.0, 1.0);
        let (x, b) = locate_max_friction(&s).unwrap();
        assert!(x > 0.99 * PI && x <= PI);
        // Refinement must not be beaten by a nearby probe.
        for dx in [-1e-6, 1e-6] {
            let probe = force_composite(&s.at(x + dx)).unwrap().beta;
            assert!(probe <= b * (1.0 + 1e-12));
        }
    }

    #[test]
    fn wrap_keeps_canonical_window() {
        assert_eq!(wrap_position(0.0), PI);
        assert!((wrap_position(-0.1) - (PI - 0.1)).abs() < 1e-15);
        assert!((wrap_position(PI + 0.2) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn validation() {
        let mut s = SystemSpec::perfect_mirror(0.1, 100.0, 1.0);
        assert!(s.validate().is_ok());
        assert!(!s.reference_aligned());
        s.k0_l = 200.0 * PI;
        assert!(s.reference_aligned());
        s.r_fixed = c(1.1, 0.0);
        assert!(s.validate().is_err());
        assert!(SystemSpec::perfect_mirror(0.1, 1.0, 2.0).validate().is_err());
    }

    #[test]
    fn slope_helper() {
        assert!((loglog_slope(1.0, 1.0, 10.0, 100.0) - 2.0).abs() < 1e-15);
    }
}
