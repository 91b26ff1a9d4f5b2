//! Dense complex linear algebra for small multi-qubit systems.
//!
//! Basis index `i` of an `n`-qubit register encodes the bit string
//! `x1 x2 ... xn` with qubit 1 as the most significant bit, so the two-qubit
//! order is `|00⟩, |01⟩, |10⟩, |11⟩`.

mod density;
pub mod gates;
mod matrix;
mod operator;
mod state;

pub use density::{partial_trace, purity, DensityMatrix};
pub use matrix::ComplexMatrix;
pub use operator::{apply, tensor_product, UnitaryOperator};
pub use state::{density_from_state, overlap, StateVector};

pub use num_complex::Complex64 as Complex;

/// Entrywise equality tolerance for amplitudes and matrix entries.
pub const TOLERANCE: f64 = 1e-12;

/// Lower bound accepted for eigenvalues of a positive semidefinite matrix.
pub const EIGENVALUE_TOLERANCE: f64 = 1e-10;

/// Hard cap on register size; dense operators grow as 4ⁿ.
pub const MAX_QUBITS: usize = 12;

pub(crate) fn check_qubit_count(num_qubits: usize) -> crate::Result<usize> {
    if num_qubits == 0 || num_qubits > MAX_QUBITS {
        return Err(crate::Error::QubitCount {
            max: MAX_QUBITS,
            found: num_qubits,
        });
    }
    Ok(1 << num_qubits)
}

pub(crate) fn check_finite(values: &[Complex]) -> crate::Result<()> {
    if values.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(crate::Error::NonFinite)
    }
}

/// `Complex::new` that refuses NaN and infinite components.
pub fn complex(re: f64, im: f64) -> crate::Result<Complex> {
    let z = Complex::new(re, im);
    check_finite(&[z])?;
    Ok(z)
}
