use std::f64::consts::SQRT_2;

use super::CountingOracle;
use crate::oracles::{Parity, TruthTable};
use crate::quantum::{apply, gates, StateVector, UnitaryOperator};
use crate::{Error, Result};

/// Labels of the entries of [`AlgorithmResult::per_step_states`].
pub const STEP_LABELS: [&str; 6] = ["init", "H12", "Uf", "H2", "Uf", "H12"];

/// Amplitude magnitude above which a basis component counts as occupied.
const READOUT_THRESHOLD: f64 = 0.5;

#[derive(Debug, Clone)]
pub struct AlgorithmResult {
    pub function: TruthTable,
    pub final_state: StateVector,
    pub verdict: Parity,
    pub oracle_calls: usize,
    /// `|00⟩` followed by the state after each of the five gates.
    pub per_step_states: Vec<StateVector>,
}

/// `H¹⁻² U_f H² U_f H¹⁻²` acting on `|00⟩`.
///
/// The single-qubit Hadamard is a parameter so that a corrupted gate can be
/// fed through the same pipeline.
#[derive(Debug, Clone)]
pub struct EvenOddCircuit {
    both: UnitaryOperator,
    second: UnitaryOperator,
}

impl Default for EvenOddCircuit {
    fn default() -> Self {
        Self {
            both: gates::hadamard_both(),
            second: gates::hadamard_second(),
        }
    }
}

impl EvenOddCircuit {
    pub fn with_hadamard(hadamard: &UnitaryOperator) -> Result<Self> {
        if hadamard.num_qubits() != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: hadamard.num_qubits(),
            });
        }
        Ok(Self {
            both: hadamard.tensor(hadamard)?,
            second: gates::on_qubit(hadamard, 2),
        })
    }

    pub fn run(&self, f: TruthTable) -> Result<AlgorithmResult> {
        let mut oracle = CountingOracle::new(f);
        let mut steps = Vec::with_capacity(STEP_LABELS.len());
        let init = StateVector::from_bits("00")?;
        let s1 = apply(&self.both, &init)?;
        let s2 = oracle.call(&s1);
        let s3 = apply(&self.second, &s2)?;
        let s4 = oracle.call(&s3);
        let s5 = apply(&self.both, &s4)?;
        steps.extend([init, s1, s2, s3, s4, s5.clone()]);

        Ok(AlgorithmResult {
            function: f,
            verdict: read_verdict(&s5)?,
            final_state: s5,
            oracle_calls: oracle.calls(),
            per_step_states: steps,
        })
    }
}

/// Even iff `|00⟩` is occupied, odd iff `|10⟩` is; exactly one must be.
fn read_verdict(state: &StateVector) -> Result<Parity> {
    let amp_00 = state.amplitude(0b00).norm();
    let amp_10 = state.amplitude(0b10).norm();
    match (amp_00 > READOUT_THRESHOLD, amp_10 > READOUT_THRESHOLD) {
        (true, false) => Ok(Parity::Even),
        (false, true) => Ok(Parity::Odd),
        _ => Err(Error::AmbiguousReadout { amp_00, amp_10 }),
    }
}

pub fn run_even_odd(f: TruthTable) -> AlgorithmResult {
    EvenOddCircuit::default()
        .run(f)
        .expect("the exact Hadamard always yields a definite readout")
}

/// Real amplitudes of the final state written out directly from the truth
/// table: with `p = (−1)^{f(00)⊕f(01)}` and `q = (−1)^{f(10)⊕f(11)}` they are
/// `((p + q), 2, (p − q), 0) / 2√2`.
pub fn closed_form_final_amplitudes(f: TruthTable) -> [f64; 4] {
    let p = f.phase(0b00) * f.phase(0b01);
    let q = f.phase(0b10) * f.phase(0b11);
    let norm = 2.0 * SQRT_2;
    [(p + q) / norm, 2.0 / norm, (p - q) / norm, 0.0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{classify, enumerate_functions};
    use crate::quantum::{Complex, TOLERANCE};

    fn tt(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    #[test]
    fn constant_zero_function() {
        let r = run_even_odd(tt("0000"));
        let expected = StateVector::from_real_unnormalized(2, &[1.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(r.final_state.approx_eq(&expected, TOLERANCE));
        assert_eq!(r.verdict, Parity::Even);
        assert_eq!(r.oracle_calls, 2);
        assert_eq!(r.per_step_states.len(), 6);
    }

    #[test]
    fn single_one_function_is_odd() {
        let r = run_even_odd(tt("1000"));
        assert_eq!(r.verdict, Parity::Odd);
        let plus = StateVector::from_real_unnormalized(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let minus = StateVector::from_real_unnormalized(2, &[0.0, 1.0, -1.0, 0.0]).unwrap();
        assert!(
            r.final_state.equivalent(&plus, TOLERANCE)
                || r.final_state.equivalent(&minus, TOLERANCE)
        );
    }

    #[test]
    fn verdict_matches_parity_for_all_sixteen() {
        for f in enumerate_functions() {
            let r = run_even_odd(f);
            assert_eq!(r.verdict, classify(f).parity, "{f}");
            assert_eq!(r.oracle_calls, 2);
            assert_eq!(r.final_state, *r.per_step_states.last().unwrap());
            for s in &r.per_step_states {
                assert!((s.norm_sqr() - 1.0).abs() < TOLERANCE);
            }
        }
    }

    #[test]
    fn final_amplitudes_follow_closed_form() {
        for f in enumerate_functions() {
            let r = run_even_odd(f);
            for (a, e) in r
                .final_state
                .amplitudes()
                .iter()
                .zip(closed_form_final_amplitudes(f))
            {
                assert!((a - Complex::new(e, 0.0)).norm() < TOLERANCE, "{f}");
            }
        }
    }

    #[test]
    fn intermediate_states_for_identity_oracle() {
        let r = run_even_odd(tt("0000"));
        for a in r.per_step_states[1].amplitudes() {
            assert!((a - Complex::new(0.5, 0.0)).norm() < TOLERANCE);
        }
        // H² on the uniform state leaves (|00⟩ + |10⟩)/√2
        let expected = StateVector::from_real_unnormalized(2, &[1.0, 0.0, 1.0, 0.0]).unwrap();
        assert!(r.per_step_states[3].approx_eq(&expected, TOLERANCE));
    }

    #[test]
    fn ambiguous_readout_is_reported() {
        // X in place of H routes |00⟩ to |01⟩, leaving |00⟩ and |10⟩ empty.
        let circuit = EvenOddCircuit::with_hadamard(&gates::pauli_x()).unwrap();
        for f in enumerate_functions() {
            assert!(matches!(
                circuit.run(f),
                Err(Error::AmbiguousReadout { .. })
            ));
        }
        assert!(EvenOddCircuit::with_hadamard(&gates::hadamard_both()).is_err());
    }

    #[test]
    fn sign_flipped_hadamard_inverts_every_verdict() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let flipped = UnitaryOperator::new(
            1,
            crate::quantum::ComplexMatrix::from_real_rows(&[&[r, r], &[-r, r]]).unwrap(),
        )
        .unwrap();
        let circuit = EvenOddCircuit::with_hadamard(&flipped).unwrap();
        for f in enumerate_functions() {
            assert_ne!(circuit.run(f).unwrap().verdict, classify(f).parity, "{f}");
        }
    }
}
