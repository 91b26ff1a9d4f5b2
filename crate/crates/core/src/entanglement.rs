//! Entanglement of two-qubit pure states.

use serde::Serialize;

use crate::quantum::{density_from_state, partial_trace, purity, DensityMatrix, StateVector};
use crate::{Error, Result};

/// Concurrence above which a pure state counts as entangled.
pub const ENTANGLEMENT_THRESHOLD: f64 = 1e-10;

/// Entrywise tolerance for `ρ² = ρ`.
pub const IDEMPOTENCE_TOLERANCE: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntanglementReport {
    pub concurrence: f64,
    /// Descending; squares sum to 1.
    pub schmidt_coefficients: [f64; 2],
    pub is_entangled: bool,
    pub reduced_purity_q1: f64,
    pub reduced_purity_q2: f64,
}

/// Concurrence `2|ad − bc|`, closed-form Schmidt coefficients of the
/// amplitude matrix `[[a, b], [c, d]]`, and reduced purities of both qubits.
pub fn analyze_pure_state(s: &StateVector) -> Result<EntanglementReport> {
    if s.num_qubits() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: s.num_qubits(),
        });
    }
    let [a, b, c, d] = [0, 1, 2, 3].map(|i| s.amplitude(i));
    let det = (a * d - b * c).norm();
    let concurrence = (2.0 * det).min(1.0);

    // Singular values σ of a 2×2 matrix M satisfy
    // σ² = (‖M‖²_F ± √(‖M‖⁴_F − 4|det M|²)) / 2.
    let frobenius = a.norm_sqr() + b.norm_sqr() + c.norm_sqr() + d.norm_sqr();
    let disc = (frobenius * frobenius - 4.0 * det * det).max(0.0).sqrt();
    let large = ((frobenius + disc) / 2.0).max(0.0).sqrt();
    let small = ((frobenius - disc) / 2.0).max(0.0).sqrt();

    let rho = density_from_state(s);
    Ok(EntanglementReport {
        concurrence,
        schmidt_coefficients: [large, small],
        is_entangled: concurrence > ENTANGLEMENT_THRESHOLD,
        reduced_purity_q1: purity(&partial_trace(&rho, 1)?),
        reduced_purity_q2: purity(&partial_trace(&rho, 2)?),
    })
}

/// `ρ² = ρ` entrywise, i.e. `ρ` is a pure-state projector.
pub fn is_idempotent(rho: &DensityMatrix) -> bool {
    rho.square().approx_eq(rho.matrix(), IDEMPOTENCE_TOLERANCE)
}
