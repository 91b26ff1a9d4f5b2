use nalgebra::{DMatrix, SymmetricEigen};

use super::{
    check_finite, check_qubit_count, Complex, ComplexMatrix, EIGENVALUE_TOLERANCE, TOLERANCE,
};
use crate::{Error, Result};

/// Hermitian, unit-trace operator on an `n`-qubit register.
///
/// Positive semidefiniteness is not checked on construction; call
/// [`DensityMatrix::is_positive_semidefinite`] when it matters.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    num_qubits: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(num_qubits: usize, matrix: ComplexMatrix) -> Result<Self> {
        let dim = check_qubit_count(num_qubits)?;
        if matrix.dim() != dim {
            return Err(Error::InvalidLength {
                expected: dim * dim,
                found: matrix.dim() * matrix.dim(),
            });
        }
        check_finite(matrix.as_slice())?;
        let deviation = matrix.hermitian_deviation();
        if deviation > TOLERANCE {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = matrix.trace();
        if (trace - Complex::new(1.0, 0.0)).norm() > TOLERANCE {
            return Err(Error::NotUnitTrace { trace: trace.re });
        }
        Ok(Self { num_qubits, matrix })
    }

    pub(crate) fn from_parts_unchecked(num_qubits: usize, matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(matrix.dim(), 1 << num_qubits);
        Self { num_qubits, matrix }
    }

    /// Real diagonal populations; must sum to 1.
    pub fn from_populations(num_qubits: usize, populations: &[f64]) -> Result<Self> {
        let diag: Vec<_> = populations.iter().map(|&p| Complex::new(p, 0.0)).collect();
        Self::new(num_qubits, ComplexMatrix::from_diagonal(&diag))
    }

    /// `I / 2ⁿ`.
    pub fn maximally_mixed(num_qubits: usize) -> Result<Self> {
        let dim = check_qubit_count(num_qubits)?;
        let p = 1.0 / dim as f64;
        Ok(Self::from_parts_unchecked(
            num_qubits,
            ComplexMatrix::identity(dim).scale(Complex::new(p, 0.0)),
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

    pub fn entry(&self, i: usize, j: usize) -> Complex {
        self.matrix[(i, j)]
    }

    pub fn trace(&self) -> Complex {
        self.matrix.trace()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.dim();
        let m = DMatrix::from_fn(n, n, |i, j| self.matrix[(i, j)]);
        let mut values: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
        values.sort_by(f64::total_cmp);
        values
    }

    /// All eigenvalues `≥ −1e-10`.
    pub fn is_positive_semidefinite(&self) -> bool {
        self.eigenvalues()
            .iter()
            .all(|&v| v >= -EIGENVALUE_TOLERANCE)
    }

    /// `ρ²` as a raw matrix (not generally a density matrix).
    pub fn square(&self) -> ComplexMatrix {
        &self.matrix * &self.matrix
    }
}

/// Reduced state of qubit `keep_qubit` (1-based), tracing out every other qubit.
pub fn partial_trace(rho: &DensityMatrix, keep_qubit: usize) -> Result<DensityMatrix> {
    let n = rho.num_qubits;
    if keep_qubit == 0 || keep_qubit > n {
        return Err(Error::InvalidQubit {
            qubit: keep_qubit,
            num_qubits: n,
        });
    }
    let shift = n - keep_qubit;
    let mut reduced = ComplexMatrix::zeros(2);
    for i in 0..rho.dim() {
        for j in 0..rho.dim() {
            // Only pairs that agree on every traced-out bit contribute.
            if (i ^ j) & !(1 << shift) != 0 {
                continue;
            }
            reduced[((i >> shift) & 1, (j >> shift) & 1)] += rho.matrix[(i, j)];
        }
    }
    Ok(DensityMatrix::from_parts_unchecked(1, reduced))
}

/// `Tr(ρ²)`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    let n = rho.dim();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            total += (rho.matrix[(i, j)] * rho.matrix[(j, i)]).re;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{density_from_state, StateVector};

    fn even_rho(sign: f64) -> DensityMatrix {
        density_from_state(&StateVector::from_real_unnormalized(2, &[sign, 1.0, 0.0, 0.0]).unwrap())
    }

    fn odd_rho(sign: f64) -> DensityMatrix {
        density_from_state(&StateVector::from_real_unnormalized(2, &[0.0, 1.0, sign, 0.0]).unwrap())
    }

    #[test]
    fn new_validates_hermitian_and_trace() {
        let mut m = ComplexMatrix::identity(2).scale(Complex::new(0.5, 0.0));
        m[(0, 1)] = Complex::new(0.1, 0.0);
        assert!(matches!(
            DensityMatrix::new(1, m),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            DensityMatrix::new(1, ComplexMatrix::identity(2)),
            Err(Error::NotUnitTrace { .. })
        ));
    }

    #[test]
    fn reduced_second_spin_of_even_and_odd() {
        for sign in [1.0, -1.0] {
            let r = partial_trace(&even_rho(sign), 2).unwrap();
            let expected =
                ComplexMatrix::from_real_rows(&[&[0.5, 0.5 * sign], &[0.5 * sign, 0.5]]).unwrap();
            assert!(r.matrix().approx_eq(&expected, TOLERANCE));

            let r = partial_trace(&odd_rho(sign), 2).unwrap();
            assert!(r.matrix().approx_eq(
                DensityMatrix::maximally_mixed(1).unwrap().matrix(),
                TOLERANCE
            ));
        }
    }

    #[test]
    fn reduced_first_spin_of_product_state() {
        let rho = density_from_state(&StateVector::from_bits("01").unwrap());
        let r = partial_trace(&rho, 1).unwrap();
        assert!(r.matrix().approx_eq(
            DensityMatrix::from_populations(1, &[1.0, 0.0])
                .unwrap()
                .matrix(),
            TOLERANCE
        ));
        let r = partial_trace(&rho, 2).unwrap();
        assert!(r.matrix().approx_eq(
            DensityMatrix::from_populations(1, &[0.0, 1.0])
                .unwrap()
                .matrix(),
            TOLERANCE
        ));
    }

    #[test]
    fn partial_trace_rejects_bad_index() {
        let rho = even_rho(1.0);
        for q in [0, 3] {
            assert_eq!(
                partial_trace(&rho, q),
                Err(Error::InvalidQubit {
                    qubit: q,
                    num_qubits: 2
                })
            );
        }
    }

    #[test]
    fn partial_trace_three_qubits_middle() {
        // |010⟩ keeps qubit 2 in |1⟩
        let rho = density_from_state(&StateVector::from_bits("010").unwrap());
        let r = partial_trace(&rho, 2).unwrap();
        assert!((r.entry(1, 1).re - 1.0).abs() < TOLERANCE);
    }

    #[test]
    fn purity_examples() {
        assert!((purity(&DensityMatrix::maximally_mixed(1).unwrap()) - 0.5).abs() < TOLERANCE);
        assert!(
            (purity(&DensityMatrix::from_populations(1, &[1.0, 0.0]).unwrap()) - 1.0).abs()
                < TOLERANCE
        );
        let reduced = partial_trace(&even_rho(1.0), 2).unwrap();
        assert!((purity(&reduced) - 1.0).abs() < TOLERANCE);
        assert!((purity(&DensityMatrix::maximally_mixed(2).unwrap()) - 0.25).abs() < TOLERANCE);
    }

    #[test]
    fn eigenvalues_of_projector_and_mixture() {
        let ev = even_rho(-1.0).eigenvalues();
        assert!((ev[3] - 1.0).abs() < 1e-10);
        assert!(ev[..3].iter().all(|v| v.abs() < 1e-10));
        assert!(even_rho(1.0).is_positive_semidefinite());

        let mut m =
            ComplexMatrix::from_diagonal(&[Complex::new(1.5, 0.0), Complex::new(-0.5, 0.0)]);
        m[(0, 1)] = Complex::new(0.0, 0.0);
        let not_psd = DensityMatrix::new(1, m).unwrap();
        assert!(!not_psd.is_positive_semidefinite());
    }

    #[test]
    fn projector_is_idempotent() {
        let rho = odd_rho(-1.0);
        assert!(rho.square().approx_eq(rho.matrix(), 1e-11));
    }
}
