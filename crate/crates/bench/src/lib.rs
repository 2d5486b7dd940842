//! Benchmark fixtures shared by the criterion targets.

use optomech_core::SystemSpec;

/// Reference-aligned perfect-mirror configuration used across benches.
pub fn reference_spec(zeta: f64) -> SystemSpec {
    SystemSpec::perfect_mirror(zeta, 200.0 * std::f64::consts::PI, 2.0)
}
