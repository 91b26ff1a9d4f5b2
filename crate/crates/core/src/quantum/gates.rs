//! Fixed one- and two-qubit gates.

use std::f64::consts::FRAC_1_SQRT_2;

use super::{tensor_product, Complex, ComplexMatrix, UnitaryOperator};

/// `H = (1/√2)[[1, 1], [1, −1]]`, self-inverse.
pub fn hadamard() -> UnitaryOperator {
    let m = ComplexMatrix::from_real_rows(&[
        &[FRAC_1_SQRT_2, FRAC_1_SQRT_2],
        &[FRAC_1_SQRT_2, -FRAC_1_SQRT_2],
    ])
    .expect("2x2 rows");
    UnitaryOperator::from_parts_unchecked(1, m)
}

pub fn identity() -> UnitaryOperator {
    UnitaryOperator::from_parts_unchecked(1, ComplexMatrix::identity(2))
}

pub fn pauli_x() -> UnitaryOperator {
    let m = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).expect("2x2 rows");
    UnitaryOperator::from_parts_unchecked(1, m)
}

pub fn pauli_z() -> UnitaryOperator {
    let m = ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]).expect("2x2 rows");
    UnitaryOperator::from_parts_unchecked(1, m)
}

/// General single-qubit rotation
/// `[[cos θ/2, −e^{iλ} sin θ/2], [e^{iφ} sin θ/2, e^{i(φ+λ)} cos θ/2]]`.
pub fn rotation(theta: f64, phi: f64, lambda: f64) -> UnitaryOperator {
    let (s, c) = (theta / 2.0).sin_cos();
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 0)] = Complex::new(c, 0.0);
    m[(0, 1)] = -Complex::from_polar(s, lambda);
    m[(1, 0)] = Complex::from_polar(s, phi);
    m[(1, 1)] = Complex::from_polar(c, phi + lambda);
    UnitaryOperator::from_parts_unchecked(1, m)
}

/// Two-qubit operator acting as `h` on one of the qubits (1 or 2).
pub fn on_qubit(gate: &UnitaryOperator, qubit: usize) -> UnitaryOperator {
    assert_eq!(gate.num_qubits(), 1, "single-qubit gate expected");
    let tensor = match qubit {
        1 => tensor_product(gate, &identity()),
        2 => tensor_product(&identity(), gate),
        _ => panic!("qubit must be 1 or 2, got {qubit}"),
    };
    tensor.expect("two qubits is within the cap")
}

/// `H¹ = H ⊗ I`.
pub fn hadamard_first() -> UnitaryOperator {
    on_qubit(&hadamard(), 1)
}

/// `H² = I ⊗ H`.
pub fn hadamard_second() -> UnitaryOperator {
    on_qubit(&hadamard(), 2)
}

/// `H¹⁻² = H ⊗ H`.
pub fn hadamard_both() -> UnitaryOperator {
    tensor_product(&hadamard(), &hadamard()).expect("two qubits is within the cap")
}
