//! Circuits built from the phase oracle, and the classical query baseline.

mod deutsch_jozsa;
mod even_odd;
mod queries;

pub use deutsch_jozsa::{deutsch_jozsa_2bit, run_deutsch_jozsa_2bit, DjRun, DjVerdict};
pub use even_odd::{
    closed_form_final_amplitudes, run_even_odd, AlgorithmResult, EvenOddCircuit, STEP_LABELS,
};
pub use queries::{classical_min_queries, dj_promise_functions, parity_query_complexity};

use crate::oracles::{build_oracle, TruthTable};
use crate::quantum::{apply, StateVector, UnitaryOperator};

/// Phase oracle that records every invocation.
#[derive(Debug, Clone)]
pub struct CountingOracle {
    unitary: UnitaryOperator,
    calls: usize,
}

impl CountingOracle {
    pub fn new(f: TruthTable) -> Self {
        Self {
            unitary: build_oracle(f),
            calls: 0,
        }
    }

    pub fn call(&mut self, state: &StateVector) -> StateVector {
        self.calls += 1;
        apply(&self.unitary, state).expect("oracle and register are both two qubits")
    }

    pub fn calls(&self) -> usize {
        self.calls
    }
}
