use std::fmt;

use super::{check_finite, check_qubit_count, Complex, ComplexMatrix, DensityMatrix, TOLERANCE};
use crate::{Error, Result};

/// Normalized pure state of an `n`-qubit register.
#[derive(Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex>,
}

impl StateVector {
    /// Validates length `2^num_qubits`, finiteness, and `Σ|aᵢ|² = 1` within
    /// [`TOLERANCE`].
    pub fn new(num_qubits: usize, amplitudes: Vec<Complex>) -> Result<Self> {
        let dim = check_qubit_count(num_qubits)?;
        if amplitudes.len() != dim {
            return Err(Error::InvalidLength {
                expected: dim,
                found: amplitudes.len(),
            });
        }
        check_finite(&amplitudes)?;
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > TOLERANCE {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Real amplitudes, scaled to unit norm first.
    pub fn from_real_unnormalized(num_qubits: usize, amplitudes: &[f64]) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a * a).sum::<f64>().sqrt();
        Self::new(
            num_qubits,
            amplitudes
                .iter()
                .map(|&a| Complex::new(a / norm, 0.0))
                .collect(),
        )
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        let dim = check_qubit_count(num_qubits)?;
        if index >= dim {
            return Err(Error::InvalidLength {
                expected: dim,
                found: index + 1,
            });
        }
        let mut amplitudes = vec![Complex::new(0.0, 0.0); dim];
        amplitudes[index] = Complex::new(1.0, 0.0);
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Basis state from a bit string such as `"01"`.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let index = usize::from_str_radix(bits, 2)
            .map_err(|_| Error::InvalidTruthTable(format!("invalid basis label {bits:?}")))?;
        Self::basis(bits.len(), index)
    }

    /// Skips the normalization check; callers must guarantee it (e.g. the
    /// output of a unitary acting on a valid state).
    pub(crate) fn from_parts_unchecked(num_qubits: usize, amplitudes: Vec<Complex>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << num_qubits);
        Self {
            num_qubits,
            amplitudes,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Equality up to global phase: `|⟨self|other⟩| = 1` within `tol`.
    pub fn equivalent(&self, other: &Self, tol: f64) -> bool {
        match overlap(self, other) {
            Ok(z) => (z.norm() - 1.0).abs() <= tol,
            Err(_) => false,
        }
    }

    /// Strict entrywise equality within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.num_qubits == other.num_qubits
            && self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .all(|(a, b)| (a - b).norm() <= tol)
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateVector[")?;
        for (i, a) in self.amplitudes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:+.6}{:+.6}i", a.re, a.im)?;
        }
        write!(f, "]")
    }
}

/// Inner product `⟨a|b⟩`, conjugate-linear in `a`.
pub fn overlap(a: &StateVector, b: &StateVector) -> Result<Complex> {
    if a.num_qubits != b.num_qubits {
        return Err(Error::DimensionMismatch {
            expected: a.num_qubits,
            found: b.num_qubits,
        });
    }
    Ok(a.amplitudes
        .iter()
        .zip(&b.amplitudes)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Projector `|s⟩⟨s|`.
pub fn density_from_state(s: &StateVector) -> DensityMatrix {
    let dim = s.dim();
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] = s.amplitudes[i] * s.amplitudes[j].conj();
        }
    }
    DensityMatrix::from_parts_unchecked(s.num_qubits, m)
}
