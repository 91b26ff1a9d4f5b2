//! Two-bit Boolean functions, their phase oracles, and structural classification.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::quantum::{Complex, ComplexMatrix, UnitaryOperator, TOLERANCE};
use crate::{Error, Result};

/// Outputs `(f(00), f(01), f(10), f(11))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    outputs: [bool; 4],
}

impl TruthTable {
    pub const fn new(outputs: [bool; 4]) -> Self {
        Self { outputs }
    }

    /// From the 4-bit index `f(00) f(01) f(10) f(11)`, `f(00)` most significant.
    pub fn from_index(index: u8) -> Result<Self> {
        if index > 0b1111 {
            return Err(Error::InvalidTruthTable(format!(
                "truth table index {index} exceeds 15"
            )));
        }
        Ok(Self::new(std::array::from_fn(|i| {
            index >> (3 - i) & 1 == 1
        })))
    }

    pub fn index(&self) -> u8 {
        self.outputs
            .iter()
            .fold(0, |acc, &bit| (acc << 1) | u8::from(bit))
    }

    pub fn outputs(&self) -> [bool; 4] {
        self.outputs
    }

    /// `f(x)` for the input whose basis index is `x` (`x1` most significant).
    pub fn eval(&self, x: usize) -> bool {
        self.outputs[x]
    }

    pub fn ones(&self) -> u8 {
        self.outputs.iter().filter(|&&b| b).count() as u8
    }

    /// `(−1)^f(x)`.
    pub fn phase(&self, x: usize) -> f64 {
        if self.outputs[x] {
            -1.0
        } else {
            1.0
        }
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.outputs {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({self})")
    }
}

impl FromStr for TruthTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.chars().count() != 4 {
            return Err(Error::InvalidTruthTable(
                "truth table must be 4 bits".to_string(),
            ));
        }
        let mut outputs = [false; 4];
        for (slot, c) in outputs.iter_mut().zip(s.chars()) {
            *slot = match c {
                '0' => false,
                '1' => true,
                _ => {
                    return Err(Error::InvalidTruthTable(format!(
                        "truth table must contain only 0 and 1, found {c:?}"
                    )))
                }
            };
        }
        Ok(Self::new(outputs))
    }
}

impl Serialize for TruthTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "Even",
            Parity::Odd => "Odd",
        })
    }
}

/// Class `[ones, zeros]` together with its parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FunctionClass {
    pub ones: u8,
    pub zeros: u8,
    pub parity: Parity,
}

impl FunctionClass {
    pub fn from_ones(ones: u8) -> Self {
        assert!(ones <= 4, "a two-bit function has at most 4 ones");
        Self {
            ones,
            zeros: 4 - ones,
            parity: if ones.is_multiple_of(2) {
                Parity::Even
            } else {
                Parity::Odd
            },
        }
    }

    /// All five classes in order `[0,4]`, `[1,3]`, ..., `[4,0]`.
    pub fn all() -> [Self; 5] {
        std::array::from_fn(|i| Self::from_ones(i as u8))
    }
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.ones, self.zeros)
    }
}

/// Whether the oracle factors as a tensor product of single-qubit operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OracleNature {
    Separable,
    Entangling,
}

impl fmt::Display for OracleNature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleNature::Separable => "Separable",
            OracleNature::Entangling => "Entangling",
        })
    }
}

/// Diagonal phase oracle `U_f |x⟩ = (−1)^f(x) |x⟩`.
pub fn build_oracle(f: TruthTable) -> UnitaryOperator {
    let diagonal: Vec<_> = (0..4).map(|x| Complex::new(f.phase(x), 0.0)).collect();
    UnitaryOperator::new(2, ComplexMatrix::from_diagonal(&diagonal))
        .expect("±1 diagonal is unitary")
}

pub fn classify(f: TruthTable) -> FunctionClass {
    FunctionClass::from_ones(f.ones())
}

/// Decides whether a two-qubit phase oracle equals `A ⊗ B`.
///
/// The operator is realigned so that `R[(i₁j₁),(i₂j₂)] = U[(i₁i₂),(j₁j₂)]`;
/// `U = A ⊗ B` exactly when `R = vec(A) vec(B)ᵀ` has rank one, i.e. every
/// 2×2 minor of `R` vanishes. Input is restricted to the diagonal ±1 family.
pub fn is_separable_oracle(u: &UnitaryOperator) -> Result<bool> {
    if u.num_qubits() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: u.num_qubits(),
        });
    }
    let m = u.matrix();
    let is_phase_oracle = m.is_diagonal(TOLERANCE)
        && m.diagonal()
            .iter()
            .all(|d| d.im.abs() <= TOLERANCE && (d.re.abs() - 1.0).abs() <= TOLERANCE);
    if !is_phase_oracle {
        return Err(Error::NotPhaseOracle);
    }

    let mut realigned = ComplexMatrix::zeros(4);
    for i1 in 0..2 {
        for j1 in 0..2 {
            for i2 in 0..2 {
                for j2 in 0..2 {
                    realigned[(2 * i1 + j1, 2 * i2 + j2)] = m[(2 * i1 + i2, 2 * j1 + j2)];
                }
            }
        }
    }

    for r1 in 0..4 {
        for r2 in r1 + 1..4 {
            for c1 in 0..4 {
                for c2 in c1 + 1..4 {
                    let minor = realigned[(r1, c1)] * realigned[(r2, c2)]
                        - realigned[(r1, c2)] * realigned[(r2, c1)];
                    if minor.norm() > TOLERANCE {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

pub fn oracle_nature(f: TruthTable) -> OracleNature {
    match is_separable_oracle(&build_oracle(f)) {
        Ok(true) => OracleNature::Separable,
        Ok(false) => OracleNature::Entangling,
        Err(e) => unreachable!("phase oracle construction is always valid: {e}"),
    }
}

/// All 16 tables in ascending binary order of `f(00) f(01) f(10) f(11)`.
pub fn enumerate_functions() -> Vec<TruthTable> {
    (0..16u8)
        .map(|i| TruthTable::from_index(i).expect("index < 16"))
        .collect()
}
