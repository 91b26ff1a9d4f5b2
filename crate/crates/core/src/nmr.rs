//! Coherence-order bookkeeping and NMR observability of two-spin states.
//!
//! Spin-up (bit 0) carries `m = +1/2`. The coherence order of the element
//! `|i⟩⟨j|` is `M(i) − M(j)` with `M` the total magnetic quantum number,
//! which for bit strings reduces to `popcount(j) − popcount(i)`. Only
//! single-quantum (`|p| = 1`) coherences produce a spectral line.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algorithms::run_even_odd;
use crate::oracles::{classify, enumerate_functions, Parity};
use crate::quantum::{density_from_state, partial_trace, ComplexMatrix, DensityMatrix};
use crate::{Error, Result};

/// Weight above which single-quantum coherence is taken to be present.
pub const OBSERVABLE_THRESHOLD: f64 = 1e-10;

/// Feature values of the two parity families must differ by more than this
/// for a threshold to count as separating them.
pub const SEPARATION_MARGIN: f64 = 1e-10;

pub const MAX_ORDER: i32 = 2;

/// `order(i, j)` for a two-spin basis.
pub fn coherence_order(i: usize, j: usize) -> i32 {
    j.count_ones() as i32 - i.count_ones() as i32
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoherenceDecomposition {
    /// One component for every order in `−2..=2`, each zero outside its order.
    pub orders: BTreeMap<i32, ComplexMatrix>,
}

impl CoherenceDecomposition {
    pub fn component(&self, order: i32) -> &ComplexMatrix {
        &self.orders[&order]
    }

    pub fn resum(&self) -> ComplexMatrix {
        let dim = self.orders.values().next().map_or(0, ComplexMatrix::dim);
        self.orders
            .values()
            .fold(ComplexMatrix::zeros(dim), |acc, c| &acc + c)
    }

    /// `Σ |entries|` of the order-`p` component, optionally skipping the diagonal.
    pub fn weight(&self, order: i32, include_diagonal: bool) -> f64 {
        let c = self.component(order);
        let mut total = 0.0;
        for i in 0..c.dim() {
            for j in 0..c.dim() {
                if include_diagonal || i != j {
                    total += c[(i, j)].norm();
                }
            }
        }
        total
    }
}

fn require_two_spins(rho: &DensityMatrix) -> Result<()> {
    if rho.num_qubits() == 2 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: 2,
            found: rho.num_qubits(),
        })
    }
}

pub fn decompose_coherences(rho: &DensityMatrix) -> Result<CoherenceDecomposition> {
    require_two_spins(rho)?;
    let dim = rho.dim();
    let mut orders: BTreeMap<i32, ComplexMatrix> = (-MAX_ORDER..=MAX_ORDER)
        .map(|p| (p, ComplexMatrix::zeros(dim)))
        .collect();
    for i in 0..dim {
        for j in 0..dim {
            let p = coherence_order(i, j);
            orders.get_mut(&p).expect("order within ±2")[(i, j)] = rho.entry(i, j);
        }
    }
    Ok(CoherenceDecomposition { orders })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ObservabilityReport {
    pub observable_line: bool,
    /// `Σ |ρᵢⱼ|` over elements with `|order| = 1`.
    pub single_quantum_weight: f64,
    /// `Σ |ρᵢⱼ|` over off-diagonal elements with order 0.
    pub zero_quantum_weight: f64,
    pub transverse_magnetization_q1: f64,
    pub transverse_magnetization_q2: f64,
}

/// Magnitude of the off-diagonal element of the reduced state of `qubit`.
/// The identity part of the reduced state sits on the diagonal only, so it
/// never contributes.
pub fn transverse_magnetization(rho: &DensityMatrix, qubit: usize) -> Result<f64> {
    Ok(partial_trace(rho, qubit)?.entry(0, 1).norm())
}

pub fn observability(rho: &DensityMatrix) -> Result<ObservabilityReport> {
    let decomposition = decompose_coherences(rho)?;
    let single_quantum_weight = decomposition.weight(1, true) + decomposition.weight(-1, true);
    Ok(ObservabilityReport {
        observable_line: single_quantum_weight > OBSERVABLE_THRESHOLD,
        single_quantum_weight,
        zero_quantum_weight: decomposition.weight(0, false),
        transverse_magnetization_q1: transverse_magnetization(rho, 1)?,
        transverse_magnetization_q2: transverse_magnetization(rho, 2)?,
    })
}

/// `(parity, ρ_final)` for each of the 16 functions.
pub fn final_density_matrices() -> Vec<(Parity, DensityMatrix)> {
    enumerate_functions()
        .into_iter()
        .map(|f| {
            (
                classify(f).parity,
                density_from_state(&run_even_odd(f).final_state),
            )
        })
        .collect()
}

/// Whether `feature(ρ_final) > threshold` holds exactly for the even functions.
pub fn threshold_classifies<F>(feature: F, threshold: f64) -> bool
where
    F: Fn(&DensityMatrix) -> f64,
{
    final_density_matrices()
        .iter()
        .all(|(parity, rho)| (feature(rho) > threshold) == (*parity == Parity::Even))
}

/// Whether some threshold on `feature` (in either direction) separates the
/// even finals from the odd finals.
pub fn any_threshold_separates<F>(feature: F) -> bool
where
    F: Fn(&DensityMatrix) -> f64,
{
    let mut even = (f64::INFINITY, f64::NEG_INFINITY);
    let mut odd = (f64::INFINITY, f64::NEG_INFINITY);
    for (parity, rho) in final_density_matrices() {
        let v = feature(&rho);
        let range = if parity == Parity::Even {
            &mut even
        } else {
            &mut odd
        };
        range.0 = range.0.min(v);
        range.1 = range.1.max(v);
    }
    even.1 + SEPARATION_MARGIN < odd.0 || odd.1 + SEPARATION_MARGIN < even.0
}

/// True when the spectral observable of spin 1 alone (its transverse
/// magnetization) cannot tell even functions from odd ones.
pub fn spin1_indistinguishability_check() -> bool {
    !any_threshold_separates(|rho| {
        transverse_magnetization(rho, 1).expect("final states have two qubits")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{StateVector, TOLERANCE};

    fn rho(amps: &[f64]) -> DensityMatrix {
        density_from_state(&StateVector::from_real_unnormalized(2, amps).unwrap())
    }

    #[test]
    fn order_convention() {
        assert_eq!(coherence_order(0b00, 0b01), 1);
        assert_eq!(coherence_order(0b01, 0b10), 0);
        assert_eq!(coherence_order(0b00, 0b11), 2);
        assert_eq!(coherence_order(0b11, 0b00), -2);
    }

    #[test]
    fn even_state_has_single_quantum_coherence() {
        for sign in [1.0, -1.0] {
            let d = decompose_coherences(&rho(&[sign, 1.0, 0.0, 0.0])).unwrap();
            assert!(d.weight(1, true) > 0.4 && d.weight(-1, true) > 0.4);
            assert_eq!(d.weight(0, false), 0.0);
            assert_eq!(d.weight(2, true) + d.weight(-2, true), 0.0);
        }
    }

    #[test]
    fn odd_state_has_only_zero_quantum_coherence() {
        let d = decompose_coherences(&rho(&[0.0, 1.0, -1.0, 0.0])).unwrap();
        assert_eq!(d.weight(1, true) + d.weight(-1, true), 0.0);
        assert!((d.weight(0, false) - 1.0).abs() < TOLERANCE);
    }

    #[test]
    fn maximally_mixed_is_all_diagonal() {
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        let d = decompose_coherences(&mixed).unwrap();
        assert!((d.weight(0, true) - 1.0).abs() < TOLERANCE);
        assert_eq!(d.weight(0, false), 0.0);
        for p in [-2, -1, 1, 2] {
            assert_eq!(d.weight(p, true), 0.0);
        }
    }

    #[test]
    fn components_resum_and_mirror() {
        let r = rho(&[0.3, -0.5, 0.7, 0.2]);
        let d = decompose_coherences(&r).unwrap();
        assert!(d.resum().approx_eq(r.matrix(), TOLERANCE));
        for p in 1..=2 {
            assert!(d
                .component(p)
                .approx_eq(&d.component(-p).adjoint(), TOLERANCE));
        }
    }

    #[test]
    fn rejects_single_spin() {
        let one = DensityMatrix::maximally_mixed(1).unwrap();
        assert!(decompose_coherences(&one).is_err());
        assert!(observability(&one).is_err());
    }

    #[test]
    fn observability_examples() {
        let even = observability(&rho(&[1.0, 1.0, 0.0, 0.0])).unwrap();
        assert!(even.observable_line);
        assert!((even.transverse_magnetization_q2 - 0.5).abs() < TOLERANCE);

        let odd = observability(&rho(&[0.0, 1.0, 1.0, 0.0])).unwrap();
        assert!(!odd.observable_line);
        assert!(odd.transverse_magnetization_q2.abs() < TOLERANCE);
        assert!(odd.transverse_magnetization_q1.abs() < TOLERANCE);
        assert!((odd.zero_quantum_weight - 1.0).abs() < TOLERANCE);
    }

    #[test]
    fn spin_one_cannot_classify() {
        assert!(spin1_indistinguishability_check());
    }

    #[test]
    fn spin_two_threshold_classifies() {
        let q2 = |r: &DensityMatrix| transverse_magnetization(r, 2).unwrap();
        assert!(threshold_classifies(q2, 0.25));
        assert!(any_threshold_separates(q2));
    }

    #[test]
    fn feature_ignoring_both_spins_cannot_separate() {
        assert!(!any_threshold_separates(|_| 0.0));
        assert!(!threshold_classifies(|_| 0.0, 0.25));
    }
}
