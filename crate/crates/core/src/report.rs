//! Per-function classification records and the class table.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algorithms::{run_deutsch_jozsa_2bit, run_even_odd, DjVerdict, STEP_LABELS};
use crate::entanglement::{analyze_pure_state, EntanglementReport};
use crate::json::state_pairs;
use crate::nmr::{observability, ObservabilityReport};
use crate::oracles::{
    classify, enumerate_functions, oracle_nature, FunctionClass, OracleNature, Parity, TruthTable,
};
use crate::quantum::{density_from_state, StateVector};

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub function: TruthTable,
    pub class: String,
    pub ones: u8,
    pub zeros: u8,
    pub parity: Parity,
    pub oracle: OracleNature,
    pub dj: DjVerdict,
    pub verdict: Parity,
    pub oracle_calls: usize,
    pub final_state: Vec<[f64; 2]>,
    pub entanglement: EntanglementReport,
    pub observability: ObservabilityReport,
}

impl ClassificationReport {
    pub fn new(f: TruthTable) -> Self {
        let class = classify(f);
        let run = run_even_odd(f);
        let rho = density_from_state(&run.final_state);
        Self {
            function: f,
            class: class.to_string(),
            ones: class.ones,
            zeros: class.zeros,
            parity: class.parity,
            oracle: oracle_nature(f),
            dj: run_deutsch_jozsa_2bit(f),
            verdict: run.verdict,
            oracle_calls: run.oracle_calls,
            final_state: state_pairs(&run.final_state),
            entanglement: analyze_pure_state(&run.final_state).expect("final state has two qubits"),
            observability: observability(&rho).expect("final state has two qubits"),
        }
    }

    pub fn render_text(&self) -> String {
        let e = &self.entanglement;
        let o = &self.observability;
        let mut out = String::new();
        let rows: [(&str, String); 15] = [
            ("function", self.function.to_string()),
            ("class", self.class.clone()),
            ("parity", self.parity.to_string()),
            ("oracle", self.oracle.to_string()),
            ("dj", self.dj.to_string()),
            ("verdict", self.verdict.to_string()),
            ("oracle_calls", self.oracle_calls.to_string()),
            ("final_state", format_pairs(&self.final_state)),
            ("concurrence", fmt_real(e.concurrence)),
            (
                "schmidt",
                format!(
                    "{} {}",
                    fmt_real(e.schmidt_coefficients[0]),
                    fmt_real(e.schmidt_coefficients[1])
                ),
            ),
            ("entangled", e.is_entangled.to_string()),
            (
                "reduced_purity",
                format!(
                    "q1={} q2={}",
                    fmt_real(e.reduced_purity_q1),
                    fmt_real(e.reduced_purity_q2)
                ),
            ),
            ("observable_line", o.observable_line.to_string()),
            (
                "coherence",
                format!(
                    "single_quantum={} zero_quantum={}",
                    fmt_real(o.single_quantum_weight),
                    fmt_real(o.zero_quantum_weight)
                ),
            ),
            (
                "transverse",
                format!(
                    "q1={} q2={}",
                    fmt_real(o.transverse_magnetization_q1),
                    fmt_real(o.transverse_magnetization_q2)
                ),
            ),
        ];
        for (key, value) in rows {
            let _ = writeln!(out, "{key:<16}{value}");
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceStep {
    pub label: &'static str,
    pub amplitudes: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub function: TruthTable,
    pub verdict: Parity,
    pub oracle_calls: usize,
    pub final_state: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStep>>,
}

impl RunReport {
    pub fn new(f: TruthTable, trace: bool) -> Self {
        let run = run_even_odd(f);
        let steps = trace.then(|| {
            STEP_LABELS
                .iter()
                .zip(&run.per_step_states)
                .map(|(&label, s)| TraceStep {
                    label,
                    amplitudes: state_pairs(s),
                })
                .collect()
        });
        Self {
            function: f,
            verdict: run.verdict,
            oracle_calls: run.oracle_calls,
            final_state: state_pairs(&run.final_state),
            trace: steps,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "function      {}", self.function);
        let _ = writeln!(out, "verdict       {}", self.verdict);
        let _ = writeln!(out, "oracle_calls  {}", self.oracle_calls);
        let _ = writeln!(out, "final_state   {}", format_pairs(&self.final_state));
        if let Some(steps) = &self.trace {
            let _ = writeln!(out, "trace");
            for (i, step) in steps.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  {i} {:<5} {}",
                    step.label,
                    format_pairs(&step.amplitudes)
                );
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DjReport {
    pub function: TruthTable,
    pub class: String,
    pub verdict: DjVerdict,
    pub oracle_calls: usize,
    pub final_state: Vec<[f64; 2]>,
}

impl DjReport {
    pub fn new(f: TruthTable) -> Self {
        let run = crate::algorithms::deutsch_jozsa_2bit(f);
        Self {
            function: f,
            class: classify(f).to_string(),
            verdict: run.verdict,
            oracle_calls: run.oracle_calls,
            final_state: state_pairs(&run.final_state),
        }
    }

    pub fn render_text(&self) -> String {
        format!(
            "function      {}\nclass         {}\ndj            {}\noracle_calls  {}\nfinal_state   {}\n",
            self.function,
            self.class,
            self.verdict,
            self.oracle_calls,
            format_pairs(&self.final_state)
        )
    }
}

/// One row of the class table. A column holds `None` if the members of the
/// class disagree on it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassRow {
    pub class: String,
    pub number: usize,
    pub nature: Option<Parity>,
    pub oracle: Option<OracleNature>,
    pub dj: Option<DjVerdict>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FunctionTable {
    pub classes: Vec<ClassRow>,
    pub functions: Vec<ClassificationReport>,
}

fn common<T: PartialEq + Copy>(mut values: impl Iterator<Item = T>) -> Option<T> {
    let first = values.next()?;
    values.all(|v| v == first).then_some(first)
}

impl FunctionTable {
    pub fn build() -> Self {
        let functions: Vec<_> = enumerate_functions()
            .into_iter()
            .map(ClassificationReport::new)
            .collect();
        let classes = FunctionClass::all()
            .iter()
            .map(|class| {
                let members: Vec<_> = functions.iter().filter(|r| r.ones == class.ones).collect();
                ClassRow {
                    class: class.to_string(),
                    number: members.len(),
                    nature: common(members.iter().map(|r| r.parity)),
                    oracle: common(members.iter().map(|r| r.oracle)),
                    dj: common(members.iter().map(|r| r.dj)),
                }
            })
            .collect();
        Self { classes, functions }
    }

    pub fn render_text(&self) -> String {
        fn cell<T: ToString>(v: Option<T>) -> String {
            v.map_or_else(|| "mixed".to_string(), |v| v.to_string())
        }
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<7}{:<8}{:<8}{:<12}DJ Class",
            "Class", "Number", "Nature", "U_f"
        );
        for row in &self.classes {
            let _ = writeln!(
                out,
                "{:<7}{:<8}{:<8}{:<12}{}",
                row.class,
                row.number,
                cell(row.nature),
                cell(row.oracle),
                cell(row.dj)
            );
        }
        out
    }
}

pub fn fmt_real(x: f64) -> String {
    let x = crate::json::round_float(x);
    format!("{x:.6}")
}

fn format_pairs(pairs: &[[f64; 2]]) -> String {
    pairs
        .iter()
        .map(|[re, im]| {
            let (re, im) = (crate::json::round_float(*re), crate::json::round_float(*im));
            format!("{re:+.6}{im:+.6}i")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Ket-notation rendering with basis labels, e.g. `+0.707107|00⟩ +0.707107|01⟩`.
pub fn format_ket(s: &StateVector) -> String {
    let n = s.num_qubits();
    s.amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > crate::json::CHOP)
        .map(|(i, a)| {
            let label = format!("{i:0n$b}");
            if a.im.abs() > crate::json::CHOP {
                format!("({:+.6}{:+.6}i)|{label}⟩", a.re, a.im)
            } else {
                format!("{:+.6}|{label}⟩", a.re)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_report_for_single_one() {
        let r = ClassificationReport::new("0001".parse().unwrap());
        assert_eq!(r.class, "[1,3]");
        assert_eq!(r.parity, Parity::Odd);
        assert_eq!(r.oracle, OracleNature::Entangling);
        assert_eq!(r.dj, DjVerdict::Neither);
        assert_eq!(r.oracle_calls, 2);
        assert!(r.entanglement.is_entangled);
        assert!(!r.observability.observable_line);
    }

    #[test]
    fn classify_report_for_constant_zero() {
        let r = ClassificationReport::new("0000".parse().unwrap());
        assert_eq!(r.class, "[0,4]");
        assert_eq!(r.parity, Parity::Even);
        assert_eq!(r.oracle, OracleNature::Separable);
        assert_eq!(r.dj, DjVerdict::Constant);
        let text = r.render_text();
        assert!(text.contains("Separable"));
        assert!(text.contains("Constant"));
    }

    #[test]
    fn table_rows() {
        let t = FunctionTable::build();
        assert_eq!(t.classes.len(), 5);
        assert_eq!(t.functions.len(), 16);
        let counts: Vec<_> = t.classes.iter().map(|r| r.number).collect();
        assert_eq!(counts, vec![1, 4, 6, 4, 1]);
        let text = t.render_text();
        let row = text.lines().find(|l| l.starts_with("[2,2]")).unwrap();
        let cols: Vec<_> = row.split_whitespace().collect();
        assert_eq!(cols[1..].join(" "), "6 Even Separable Balanced");
    }

    #[test]
    fn run_report_trace_has_six_labelled_steps() {
        let r = RunReport::new("0110".parse().unwrap(), true);
        let steps = r.trace.as_ref().unwrap();
        let labels: Vec<_> = steps.iter().map(|s| s.label).collect();
        assert_eq!(labels, STEP_LABELS);
        assert!(RunReport::new("0110".parse().unwrap(), false)
            .trace
            .is_none());
    }

    #[test]
    fn ket_rendering() {
        let s = StateVector::from_real_unnormalized(2, &[-1.0, 1.0, 0.0, 0.0]).unwrap();
        assert_eq!(format_ket(&s), "-0.707107|00⟩ +0.707107|01⟩");
    }
}
