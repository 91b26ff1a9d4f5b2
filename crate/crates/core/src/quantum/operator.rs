use super::{check_finite, check_qubit_count, ComplexMatrix, StateVector, TOLERANCE};
use crate::{Error, Result};

/// Unitary operator on an `n`-qubit register.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryOperator {
    num_qubits: usize,
    matrix: ComplexMatrix,
}

impl UnitaryOperator {
    /// Validates dimension `2^num_qubits` and `U†U = I` within [`TOLERANCE`].
    pub fn new(num_qubits: usize, matrix: ComplexMatrix) -> Result<Self> {
        let dim = check_qubit_count(num_qubits)?;
        if matrix.dim() != dim {
            return Err(Error::InvalidLength {
                expected: dim * dim,
                found: matrix.dim() * matrix.dim(),
            });
        }
        check_finite(matrix.as_slice())?;
        let op = Self { num_qubits, matrix };
        let deviation = op.unitarity_deviation();
        if deviation > TOLERANCE {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(op)
    }

    pub(crate) fn from_parts_unchecked(num_qubits: usize, matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(matrix.dim(), 1 << num_qubits);
        Self { num_qubits, matrix }
    }

    pub fn identity(num_qubits: usize) -> Result<Self> {
        let dim = check_qubit_count(num_qubits)?;
        Ok(Self::from_parts_unchecked(
            num_qubits,
            ComplexMatrix::identity(dim),
        ))
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// `max |(U†U − I)ᵢⱼ|`.
    pub fn unitarity_deviation(&self) -> f64 {
        let product = &self.matrix.adjoint() * &self.matrix;
        product.max_abs_diff(&ComplexMatrix::identity(self.dim()))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_parts_unchecked(self.num_qubits, self.matrix.adjoint())
    }

    /// Matrix product `self · other`, i.e. `other` acts first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                found: other.num_qubits,
            });
        }
        Ok(Self::from_parts_unchecked(
            self.num_qubits,
            &self.matrix * &other.matrix,
        ))
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        tensor_product(self, other)
    }
}

/// Kronecker product `a ⊗ b`; `a` acts on the leading (more significant) qubits.
pub fn tensor_product(a: &UnitaryOperator, b: &UnitaryOperator) -> Result<UnitaryOperator> {
    let num_qubits = a.num_qubits + b.num_qubits;
    check_qubit_count(num_qubits)?;
    Ok(UnitaryOperator::from_parts_unchecked(
        num_qubits,
        a.matrix.kron(&b.matrix),
    ))
}

/// Matrix-vector product `u · s`.
pub fn apply(u: &UnitaryOperator, s: &StateVector) -> Result<StateVector> {
    if u.num_qubits != s.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: u.num_qubits,
            found: s.num_qubits(),
        });
    }
    Ok(StateVector::from_parts_unchecked(
        s.num_qubits(),
        u.matrix.mul_vec(s.amplitudes()),
    ))
}
