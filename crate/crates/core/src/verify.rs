//! Exhaustive invariant suite behind `qparity verify`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algorithms::{
    closed_form_final_amplitudes, parity_query_complexity, run_deutsch_jozsa_2bit, AlgorithmResult,
    DjVerdict, EvenOddCircuit,
};
use crate::entanglement::{analyze_pure_state, is_idempotent};
use crate::nmr::{decompose_coherences, observability, spin1_indistinguishability_check};
use crate::oracles::{
    build_oracle, classify, enumerate_functions, is_separable_oracle, FunctionClass, Parity,
    TruthTable,
};
use crate::quantum::{
    density_from_state, gates, overlap, partial_trace, purity, Complex, ComplexMatrix,
    DensityMatrix, StateVector, UnitaryOperator, TOLERANCE,
};

/// Tolerance for concurrence and purity relations, which pass through a
/// square root.
pub const ENTANGLEMENT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub tolerance: f64,
    /// Single-qubit gate used wherever the circuit calls for a Hadamard.
    pub hadamard: UnitaryOperator,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tolerance: TOLERANCE,
            hadamard: gates::hadamard(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// One `expected ... actual ...` line per failure.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub functions_verified: usize,
    pub functions_total: usize,
    pub quantum_oracle_calls: usize,
    pub classical_min_queries: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn summary(&self) -> String {
        format!(
            "{}/{} functions verified, classical_min_queries={}",
            self.functions_verified, self.functions_total, self.classical_min_queries
        )
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {}",
                if check.passed { "PASS" } else { "FAIL" },
                check.name
            );
            for failure in &check.failures {
                let _ = writeln!(out, "       {failure}");
            }
        }
        let _ = writeln!(out, "{}", self.summary());
        out
    }
}

struct Check {
    name: &'static str,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) -> bool {
        if !ok {
            self.failures.push(detail());
        }
        ok
    }

    fn close(
        &mut self,
        label: impl std::fmt::Display,
        expected: f64,
        actual: f64,
        tol: f64,
    ) -> bool {
        self.expect((expected - actual).abs() <= tol, || {
            format!("{label}: expected {expected}, actual {actual}")
        })
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name.to_string(),
            passed: self.failures.is_empty(),
            failures: self.failures,
        }
    }
}

fn real_state(amps: [f64; 4]) -> StateVector {
    StateVector::new(2, amps.iter().map(|&a| Complex::new(a, 0.0)).collect())
        .expect("normalized by construction")
}

/// `(±|00⟩ + |01⟩)/√2` for even, `(±|10⟩ + |01⟩)/√2` for odd, where the sign
/// is `(−1)^{f(00)⊕f(01)}`.
pub fn expected_final_state(f: TruthTable) -> StateVector {
    let sign = f.phase(0b00) * f.phase(0b01);
    let r = FRAC_1_SQRT_2;
    match classify(f).parity {
        Parity::Even => real_state([sign * r, r, 0.0, 0.0]),
        Parity::Odd => real_state([0.0, r, sign * r, 0.0]),
    }
}

fn expected_dj(class: FunctionClass) -> DjVerdict {
    match class.ones {
        0 | 4 => DjVerdict::Constant,
        2 => DjVerdict::Balanced,
        _ => DjVerdict::Neither,
    }
}

fn check_gates(config: &VerifyConfig) -> CheckOutcome {
    let mut check = Check::new("gate unitarity");
    let tol = config.tolerance;
    let h = &config.hadamard;
    let mut ops: Vec<(String, UnitaryOperator)> = vec![
        ("H".into(), h.clone()),
        ("H1".into(), gates::on_qubit(h, 1)),
        ("H2".into(), gates::on_qubit(h, 2)),
    ];
    if let Ok(both) = h.tensor(h) {
        ops.push(("H12".into(), both));
    }
    for f in enumerate_functions() {
        ops.push((format!("U_{f}"), build_oracle(f)));
    }
    for (name, op) in ops {
        check.close(
            format!("{name} |U†U - I|"),
            0.0,
            op.unitarity_deviation(),
            tol,
        );
    }
    check.finish()
}

fn check_table() -> CheckOutcome {
    let mut check = Check::new("class table (counts, parity, separability, DJ)");
    let all = enumerate_functions();
    let expected_counts = [1usize, 4, 6, 4, 1];
    for (class, expected) in FunctionClass::all().iter().zip(expected_counts) {
        let count = all.iter().filter(|f| classify(**f) == *class).count();
        check.expect(count == expected, || {
            format!("{class} count: expected {expected}, actual {count}")
        });
    }
    for f in all {
        let class = classify(f);
        let separable = is_separable_oracle(&build_oracle(f)).ok();
        let want = class.parity == Parity::Even;
        check.expect(separable == Some(want), || {
            format!("{f} separable: expected {want}, actual {separable:?}")
        });
        let dj = run_deutsch_jozsa_2bit(f);
        let want = expected_dj(class);
        check.expect(dj == want, || {
            format!("{f} DJ: expected {want}, actual {dj}")
        });
    }
    check.finish()
}

/// Every per-function invariant for one truth table.
fn check_function(f: TruthTable, run: &AlgorithmResult, tol: f64, check: &mut Check) -> bool {
    let parity = classify(f).parity;
    let mut ok = true;

    ok &= check.expect(run.verdict == parity, || {
        format!("{f} verdict: expected {parity}, actual {}", run.verdict)
    });
    ok &= check.expect(run.oracle_calls == 2, || {
        format!("{f} oracle calls: expected 2, actual {}", run.oracle_calls)
    });
    for (i, s) in run.per_step_states.iter().enumerate() {
        ok &= check.close(
            format_args!("{f} norm² at step {i}"),
            1.0,
            s.norm_sqr(),
            tol,
        );
    }

    let closed = closed_form_final_amplitudes(f);
    for (i, (a, e)) in run.final_state.amplitudes().iter().zip(closed).enumerate() {
        ok &= check.expect((a - Complex::new(e, 0.0)).norm() <= tol, || {
            format!("{f} amplitude {i:02b}: expected {e}, actual {a}")
        });
    }
    let expected = expected_final_state(f);
    ok &= check.expect(run.final_state.equivalent(&expected, tol), || {
        format!(
            "{f} final state: expected {expected:?}, actual {:?}",
            run.final_state
        )
    });

    let report = match analyze_pure_state(&run.final_state) {
        Ok(r) => r,
        Err(e) => {
            check
                .failures
                .push(format!("{f} entanglement analysis failed: {e}"));
            return false;
        }
    };
    let want_c = if parity == Parity::Odd { 1.0 } else { 0.0 };
    ok &= check.close(
        format_args!("{f} concurrence"),
        want_c,
        report.concurrence,
        ENTANGLEMENT_TOLERANCE,
    );
    ok &= check.expect(report.is_entangled == (parity == Parity::Odd), || {
        format!(
            "{f} entangled: expected {}, actual {}",
            parity == Parity::Odd,
            report.is_entangled
        )
    });
    ok &= check.close(
        format_args!("{f} purity vs 1 - C²/2"),
        1.0 - report.concurrence.powi(2) / 2.0,
        report.reduced_purity_q2,
        ENTANGLEMENT_TOLERANCE,
    );

    let rho = density_from_state(&run.final_state);
    ok &= check.expect(
        is_idempotent(&rho) && rho.is_positive_semidefinite(),
        || format!("{f} final density matrix is not a pure-state projector"),
    );
    if let Ok(obs) = observability(&rho) {
        let even = parity == Parity::Even;
        ok &= check.expect(obs.observable_line == even, || {
            format!(
                "{f} observable line: expected {even}, actual {}",
                obs.observable_line
            )
        });
        let want = if even { 0.5 } else { 0.0 };
        ok &= check.close(
            format_args!("{f} spin-2 transverse magnetization"),
            want,
            obs.transverse_magnetization_q2,
            tol,
        );
    }
    if let Ok(d) = decompose_coherences(&rho) {
        ok &= check.expect(d.resum().approx_eq(rho.matrix(), tol), || {
            format!("{f} coherence components do not re-sum to ρ")
        });
        for p in 1..=2 {
            ok &= check.expect(
                d.component(p).approx_eq(&d.component(-p).adjoint(), tol),
                || format!("{f} coherence order +{p} is not the adjoint of order -{p}"),
            );
        }
    }
    ok
}

fn check_reduced_states(tol: f64) -> CheckOutcome {
    let mut check = Check::new("reduced density matrices of spin 2");
    for sign in [1.0, -1.0] {
        let r = FRAC_1_SQRT_2;
        let even = density_from_state(&real_state([sign * r, r, 0.0, 0.0]));
        let odd = density_from_state(&real_state([0.0, r, sign * r, 0.0]));
        let even2 = partial_trace(&even, 2).expect("two qubits");
        let odd2 = partial_trace(&odd, 2).expect("two qubits");
        let want_even =
            ComplexMatrix::from_real_rows(&[&[0.5, 0.5 * sign], &[0.5 * sign, 0.5]]).expect("2x2");
        let want_odd = DensityMatrix::maximally_mixed(1).expect("one qubit");
        check.expect(even2.matrix().approx_eq(&want_even, tol), || {
            format!(
                "even reduced state: expected {want_even:?}, actual {:?}",
                even2.matrix()
            )
        });
        check.expect(odd2.matrix().approx_eq(want_odd.matrix(), tol), || {
            format!(
                "odd reduced state: expected I/2, actual {:?}",
                odd2.matrix()
            )
        });
        check.close("odd reduced purity", 0.5, purity(&odd2), tol);
        check.expect(!is_idempotent(&odd2), || {
            "odd reduced state is idempotent".into()
        });
        check.expect(is_idempotent(&even2), || {
            "even reduced state is not idempotent".into()
        });
    }
    check.finish()
}

fn check_overlaps(runs: &[(TruthTable, AlgorithmResult)], tol: f64) -> CheckOutcome {
    let mut check = Check::new("even/odd finals are non-orthogonal");
    let evens = runs
        .iter()
        .filter(|(f, _)| classify(*f).parity == Parity::Even);
    for (fe, re) in evens {
        for (fo, ro) in runs
            .iter()
            .filter(|(f, _)| classify(*f).parity == Parity::Odd)
        {
            if let Ok(z) = overlap(&re.final_state, &ro.final_state) {
                check.close(format_args!("|<{fe}|{fo}>|"), 0.5, z.norm(), tol);
            }
        }
    }
    check.finish()
}

pub fn run_verification(config: &VerifyConfig) -> VerifyReport {
    let tol = config.tolerance;
    let mut checks = vec![check_gates(config), check_table()];

    let mut per_function = Check::new("per-function circuit, entanglement, and NMR invariants");
    let mut runs = Vec::new();
    let mut verified = 0;
    match EvenOddCircuit::with_hadamard(&config.hadamard) {
        Ok(circuit) => {
            for f in enumerate_functions() {
                match circuit.run(f) {
                    Ok(run) => {
                        if check_function(f, &run, tol, &mut per_function) {
                            verified += 1;
                        }
                        runs.push((f, run));
                    }
                    Err(e) => per_function.failures.push(format!("{f} run failed: {e}")),
                }
            }
        }
        Err(e) => per_function
            .failures
            .push(format!("circuit construction failed: {e}")),
    }
    checks.push(per_function.finish());
    checks.push(check_overlaps(&runs, tol));
    checks.push(check_reduced_states(tol));

    let classical = parity_query_complexity();
    let mut separation = Check::new("quantum/classical query separation");
    let quantum_calls = runs.iter().map(|(_, r)| r.oracle_calls).max().unwrap_or(0);
    separation.expect(classical == 4, || {
        format!("classical queries: expected 4, actual {classical}")
    });
    separation.expect(quantum_calls == 2 && quantum_calls < classical, || {
        format!("quantum oracle calls: expected 2 < {classical}, actual {quantum_calls}")
    });
    checks.push(separation.finish());

    let mut spin1 = Check::new("spin 1 alone cannot distinguish even from odd");
    spin1.expect(spin1_indistinguishability_check(), || {
        "a threshold on spin-1 transverse magnetization separates the classes".into()
    });
    checks.push(spin1.finish());

    VerifyReport {
        passed: checks.iter().all(|c| c.passed),
        functions_verified: verified,
        functions_total: 16,
        quantum_oracle_calls: quantum_calls,
        classical_min_queries: classical,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pristine_suite_passes() {
        let report = run_verification(&VerifyConfig::default());
        for c in &report.checks {
            assert!(c.passed, "{}: {:?}", c.name, c.failures);
        }
        assert_eq!(
            report.summary(),
            "16/16 functions verified, classical_min_queries=4"
        );
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn flipped_hadamard_sign_fails() {
        // H with the sign moved from the lower-right to the lower-left entry
        let r = FRAC_1_SQRT_2;
        let flipped = UnitaryOperator::new(
            1,
            ComplexMatrix::from_real_rows(&[&[r, r], &[-r, r]]).unwrap(),
        )
        .unwrap();
        let report = run_verification(&VerifyConfig {
            tolerance: TOLERANCE,
            hadamard: flipped,
        });
        assert!(!report.passed);
        assert_eq!(report.exit_code(), 1);
        assert!(report.functions_verified < 16);
        assert!(report.render_text().contains("FAIL"));
    }
}
