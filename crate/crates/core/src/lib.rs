//! One-dimensional transfer-matrix optomechanics.
//!
//! Point scatterers characterised by a polarizability ζ couple counter-
//! propagating plane waves. A scatterer moving at `v = εc` is described by a
//! transfer matrix linear in ε, from which the radiation force, its velocity
//! dependence (friction), the quantum-noise momentum diffusion and the
//! resulting equilibrium temperature follow.
//!
//! Units: `ħ = c = 1`, `k₀ = 1`. Forces are in `ħk₀·flux`, friction
//! coefficients `β = −∂F/∂ε`, diffusion in `(ħk₀)²·flux`, temperatures in `ħck₀`.

// `!(x > 0.0)` is used on purpose so NaN inputs fail validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod checks;
pub mod composite;
pub mod error;
pub mod jet;
pub mod limits;
pub mod scatterer;
pub mod search;
pub mod singlebs;

pub use composite::{
    amplitude_closed, amplitude_series, amplitude_series_auto, amplitudes, diffusion_composite,
    force_composite, intensities, locate_max_friction, scan_friction, scan_max_friction_vs_zeta,
    temperature_at_max_friction, CompositeAmplitudes, FrictionMaximum, FrictionSample, SeriesOptions,
    SeriesSum, SystemSpec,
};
pub use error::{Error, Result};
pub use jet::{Jet1, VelocityScalar};
pub use limits::{CavityParams, CouplingDefinition};
pub use scatterer::{
    lorentz_sandwich, moving_matrix, refltrans_of, static_matrix, zeta_of, Polarizability, ReflTrans,
    TransferMatrix,
};
pub use singlebs::{force_single, response_single, DriveFields, MechanicalResponse};
pub use num_complex::Complex64;

/// Crate version, stamped into emitted data files.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
