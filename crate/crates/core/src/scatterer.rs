//! Point scatterers: polarizability models and their 2×2 transfer matrices.
//!
//! A transfer matrix maps the field amplitudes on the left of the scatterer,
//! `(A, B)` (left- and right-propagating), to those on the right, `(C, D)`.
//! For a scatterer moving with velocity `v`, the off-diagonal entries couple
//! plane waves whose wavenumbers differ by a Doppler shift of `±2kv/c`. That
//! shift is kept as an integer tag on the entry rather than as an operator:
//! once field amplitudes are integrated over `k` the shift drops out, and only
//! the multiple-reflection series needs to know about it.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::jet::Jet1;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Dimensionless scattering strength ζ of a point scatterer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Polarizability {
    /// Frequency-independent ζ.
    Constant { zeta: Complex64 },
    /// Unsaturated two-level atom,
    /// `ζ = (σ_A / 2S) · Γ / (ω_A − ω − iΓ)`.
    ///
    /// `detuning` is `ω_A − ω` at the frequency the model is evaluated at, so
    /// red detuning (pump below the transition) is positive.
    TwoLevelAtom {
        /// Half-width Γ of the transition.
        gamma: f64,
        detuning: f64,
        /// σ_A / (2S).
        cross_section_ratio: f64,
    },
}

impl Polarizability {
    pub fn constant(zeta: Complex64) -> Self {
        Polarizability::Constant { zeta }
    }

    pub fn real(zeta: f64) -> Self {
        Polarizability::Constant { zeta: Complex64::new(zeta, 0.0) }
    }

    pub fn two_level_atom(gamma: f64, detuning: f64, cross_section_ratio: f64) -> Self {
        Polarizability::TwoLevelAtom { gamma, detuning, cross_section_ratio }
    }

    /// ζ and `ω ∂ζ/∂ω` at angular frequency `omega`.
    pub fn response(&self, omega: f64) -> ZetaResponse {
        match *self {
            Polarizability::Constant { zeta } => {
                ZetaResponse { zeta, omega_dzeta: Complex64::new(0.0, 0.0) }
            }
            Polarizability::TwoLevelAtom { gamma, detuning, cross_section_ratio } => {
                let denom = Complex64::new(detuning, -gamma);
                let zeta = cross_section_ratio * gamma / denom;
                // d/dω (Δ − iΓ)⁻¹ = +(Δ − iΓ)⁻² since Δ = ω_A − ω.
                let omega_dzeta = cross_section_ratio * gamma * omega / (denom * denom);
                ZetaResponse { zeta, omega_dzeta }
            }
        }
    }
}

/// ζ together with its logarithmic frequency derivative `ω ∂ζ/∂ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaResponse {
    pub zeta: Complex64,
    pub omega_dzeta: Complex64,
}

/// Returns `(ζ, ω ∂ζ/∂ω)` for a polarizability model at frequency `omega`.
pub fn zeta_of(p: &Polarizability, omega: f64) -> (Complex64, Complex64) {
    let r = p.response(omega);
    (r.zeta, r.omega_dzeta)
}

/// Amplitude reflectivity 𝔯 and transmissivity 𝔱 of a beamsplitter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReflTrans {
    pub r: Complex64,
    pub t: Complex64,
}

/// `𝔱 = 1/(1 − iζ)`, `𝔯 = iζ/(1 − iζ)`.
///
/// For `|ζ| → ∞` the closed forms are evaluated in the `1/ζ` form so the
/// perfect-mirror limit `(𝔯, 𝔱) → (−1, 0)` is reached without overflow.
pub fn refltrans_of(zeta: Complex64) -> ReflTrans {
    if zeta.norm() > 1.0 {
        let inv = zeta.inv();
        let denom = inv - I;
        ReflTrans { r: I / denom, t: inv / denom }
    } else {
        let t = (Complex64::new(1.0, 0.0) - I * zeta).inv();
        ReflTrans { r: I * zeta * t, t }
    }
}

impl ReflTrans {
    /// Static transfer matrix in reflectivity form, `(1/𝔱)[[1, −𝔯], [𝔯, 𝔱² − 𝔯²]]`.
    pub fn transfer_matrix(&self) -> TransferMatrix {
        let inv_t = self.t.inv();
        TransferMatrix::from_static([
            [inv_t, -self.r * inv_t],
            [self.r * inv_t, (self.t * self.t - self.r * self.r) * inv_t],
        ])
    }

    /// Fraction of the incident power removed from the two modes, `1 − |𝔯|² − |𝔱|²`.
    pub fn loss(&self) -> f64 {
        1.0 - self.r.norm_sqr() - self.t.norm_sqr()
    }
}

/// 2×2 transfer matrix with first-order velocity terms.
///
/// `shift12` / `shift21` count the Doppler shift, in units of `kv/c`, carried
/// by the off-diagonal entries: `+2` means the entry acts as `P̂₊₂ᵥ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    pub m11: Jet1,
    pub m12: Jet1,
    pub m21: Jet1,
    pub m22: Jet1,
    pub shift12: i32,
    pub shift21: i32,
}

impl TransferMatrix {
    pub fn identity() -> Self {
        TransferMatrix::from_static([
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        ])
    }

    fn from_static(m: [[Complex64; 2]; 2]) -> Self {
        TransferMatrix {
            m11: m[0][0].into(),
            m12: m[0][1].into(),
            m21: m[1][0].into(),
            m22: m[1][1].into(),
            shift12: 0,
            shift21: 0,
        }
    }

    pub fn det(&self) -> Jet1 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Maps integrated amplitudes `(A, B)` to `(C, D)`. The Doppler tags do
    /// not enter: a shift in `k` leaves the integral over `k` unchanged.
    pub fn apply(&self, a: Jet1, b: Jet1) -> (Jet1, Jet1) {
        (self.m11 * a + self.m12 * b, self.m21 * a + self.m22 * b)
    }

    /// Right-to-left map. Assumes a unit determinant to first order, which
    /// holds for every scatterer matrix built in this module.
    pub fn unit_det_inverse(&self) -> TransferMatrix {
        TransferMatrix {
            m11: self.m22,
            m12: -self.m12,
            m21: -self.m21,
            m22: self.m11,
            shift12: self.shift12,
            shift21: self.shift21,
        }
    }

    pub fn is_static(&self) -> bool {
        [self.m11, self.m12, self.m21, self.m22].iter().all(|m| m.eps == Complex64::new(0.0, 0.0))
    }
}

/// `M₀ = [[1 − iζ, −iζ], [iζ, 1 + iζ]]` for a scatterer at rest.
pub fn static_matrix(zeta: Complex64) -> TransferMatrix {
    let one = Complex64::new(1.0, 0.0);
    TransferMatrix::from_static([[one - I * zeta, -I * zeta], [I * zeta, one + I * zeta]])
}

/// Transfer matrix of a scatterer moving at `v = εc`, to first order in ε.
///
/// With `w = ω ∂ζ/∂ω`:
///
/// ```text
/// m11 = 1 − iζ − iεw
/// m12 = −iζ [1 − ε(2 − w/ζ)] P̂₊₂ᵥ
/// m21 =  iζ [1 + ε(2 − w/ζ)] P̂₋₂ᵥ
/// m22 = 1 + iζ − iεw
/// ```
///
/// The off-diagonal ε coefficients are written as `∓i(2ζ − w)` so that
/// `ζ = 0` needs no special case.
pub fn moving_matrix(p: &Polarizability, omega: f64) -> TransferMatrix {
    let ZetaResponse { zeta, omega_dzeta: w } = p.response(omega);
    let one = Complex64::new(1.0, 0.0);
    let off_eps = I * (2.0 * zeta - w);
    TransferMatrix {
        m11: Jet1::new(one - I * zeta, -I * w),
        m12: Jet1::new(-I * zeta, off_eps),
        m21: Jet1::new(I * zeta, off_eps),
        m22: Jet1::new(one + I * zeta, -I * w),
        shift12: 2,
        shift21: -2,
    }
}

/// The moving-frame matrix built as the Lorentz sandwich `L̂(−v) M₀ L̂(v)`.
///
/// `L̂(v) = diag((1 + ε) P̂₋ᵥ, (1 − ε) P̂ᵥ)`. Conjugating the k-dependent ζ by
/// a shift operator `P̂ₛᵥ` evaluates it at `k(1 + sε)`, i.e. adds `s ε w`.
/// This is an independent construction of [`moving_matrix`].
pub fn lorentz_sandwich(p: &Polarizability, omega: f64) -> TransferMatrix {
    let ZetaResponse { zeta, omega_dzeta: w } = p.response(omega);
    // Left factor L̂(−v): weights (1 − ε), (1 + ε); shifts +1, −1.
    let left = [(Jet1::one_plus(-1.0), 1), (Jet1::one_plus(1.0), -1)];
    // Right factor L̂(v): weights (1 + ε), (1 − ε); shifts −1, +1.
    let right = [(Jet1::one_plus(1.0), -1), (Jet1::one_plus(-1.0), 1)];

    let entry = |i: usize, j: usize| -> (Jet1, i32) {
        let (lw, ls) = left[i];
        let (rw, rs) = right[j];
        let shifted_zeta = Jet1::new(zeta, ls as f64 * w);
        let one = Jet1::ONE;
        let iz = shifted_zeta * I;
        let m0 = match (i, j) {
            (0, 0) => one - iz,
            (0, 1) => -iz,
            (1, 0) => iz,
            _ => one + iz,
        };
        (lw * m0 * rw, ls + rs)
    };
    let (m11, s11) = entry(0, 0);
    let (m12, shift12) = entry(0, 1);
    let (m21, shift21) = entry(1, 0);
    let (m22, s22) = entry(1, 1);
    debug_assert_eq!((s11, s22), (0, 0));
    TransferMatrix { m11, m12, m21, m22, shift12, shift21 }
}
