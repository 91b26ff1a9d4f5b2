use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite complex component")]
    NonFinite,

    #[error("expected {expected} entries, found {found}")]
    InvalidLength { expected: usize, found: usize },

    #[error("number of qubits must be between 1 and {max}, got {found}")]
    QubitCount { max: usize, found: usize },

    #[error("dimension mismatch: expected {expected} qubits, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("state is not normalized (norm² = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("operator is not unitary (max |U†U - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("matrix is not Hermitian (max asymmetry {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("density matrix trace is {trace}, expected 1")]
    NotUnitTrace { trace: f64 },

    #[error("qubit index {qubit} out of range for a {num_qubits}-qubit system")]
    InvalidQubit { qubit: usize, num_qubits: usize },

    #[error("operator is not a diagonal ±1 phase oracle")]
    NotPhaseOracle,

    #[error("{0}")]
    InvalidTruthTable(String),

    #[error("readout is ambiguous: |a00| = {amp_00}, |a10| = {amp_10}")]
    AmbiguousReadout { amp_00: f64, amp_10: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
