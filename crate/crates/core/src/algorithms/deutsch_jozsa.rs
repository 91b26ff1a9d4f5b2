use std::fmt;

use serde::{Serialize, Serializer};

use super::CountingOracle;
use crate::oracles::{classify, TruthTable};
use crate::quantum::{apply, gates, StateVector, TOLERANCE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DjVerdict {
    Constant,
    Balanced,
    /// Outside the constant/balanced promise (classes `[1,3]` and `[3,1]`).
    Neither,
}

impl fmt::Display for DjVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DjVerdict::Constant => "Constant",
            DjVerdict::Balanced => "Balanced",
            DjVerdict::Neither => "------",
        })
    }
}

impl Serialize for DjVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone)]
pub struct DjRun {
    pub final_state: StateVector,
    pub verdict: DjVerdict,
    pub oracle_calls: usize,
}

/// `H¹⁻² U_f H¹⁻² |00⟩` with a single oracle call and no ancilla.
pub fn deutsch_jozsa_2bit(f: TruthTable) -> DjRun {
    let both = gates::hadamard_both();
    let mut oracle = CountingOracle::new(f);
    let init = StateVector::from_bits("00").expect("valid label");
    let s = apply(&both, &init).expect("two-qubit gate on two-qubit state");
    let s = oracle.call(&s);
    let final_state = apply(&both, &s).expect("two-qubit gate on two-qubit state");

    let amp_00 = final_state.amplitude(0).norm();
    let verdict = if final_state.equivalent(&init, TOLERANCE) {
        DjVerdict::Constant
    } else if amp_00 <= TOLERANCE && classify(f).ones == 2 {
        DjVerdict::Balanced
    } else {
        DjVerdict::Neither
    };
    DjRun {
        final_state,
        verdict,
        oracle_calls: oracle.calls(),
    }
}

pub fn run_deutsch_jozsa_2bit(f: TruthTable) -> DjVerdict {
    deutsch_jozsa_2bit(f).verdict
}
