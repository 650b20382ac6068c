//! JSON and CSV renderings of reports, findings, survey rows and curves.
//!
//! Exact values are written as canonical strings next to 17-digit floats;
//! comparisons between runs should use the strings.

use std::fmt::Write as _;

use pairwalk_core::algebra::{AlgebraicNumber, HamiltonianKind};
use pairwalk_core::survey::{Finding, FindingKind, GraphScan, ScanConfig, SurveyRow};
use pairwalk_core::transfer::{CospectralityCertificate, ExactTime, QuantumState, TransferReport, Verdict};
use pairwalk_core::Graph;
use serde_json::{json, Value};

use crate::graph6;

pub fn number_json(x: &AlgebraicNumber) -> Value {
    json!({ "exact": x.exact_string(), "approx": x.approx() })
}

pub fn time_json(t: &ExactTime) -> Value {
    json!({ "exact": t.exact_string(), "approx": t.approx() })
}

pub fn state_json(s: &QuantumState) -> Value {
    json!({ "form": s.form.name(), "a": s.a, "b": s.b })
}

pub fn certificate_json(c: &CospectralityCertificate) -> Value {
    json!({
        "lambda_plus": c.lambda_plus.iter().map(number_json).collect::<Vec<_>>(),
        "lambda_minus": c.lambda_minus.iter().map(number_json).collect::<Vec<_>>(),
        "strongly_cospectral": c.strongly_cospectral,
    })
}

/// One object per analysed state.
pub fn report_json(g: &Graph, kind: HamiltonianKind, r: &TransferReport) -> Value {
    let (verdict, partner, time, period) = match &r.verdict {
        Verdict::Fixed => ("fixed", Value::Null, Value::Null, Value::Null),
        Verdict::Pst { partner, time } => ("pst", state_json(partner), time_json(time), time_json(&time.doubled())),
        Verdict::PeriodicOnly { period } => ("periodic", Value::Null, Value::Null, time_json(period)),
        Verdict::NonPeriodic => ("nonperiodic", Value::Null, Value::Null, Value::Null),
    };
    json!({
        "graph": graph6::encode(g),
        "hamiltonian": kind.name(),
        "state": state_json(&r.state),
        "min_poly": r.min_poly.to_string(),
        "support": r.support.iter().map(number_json).collect::<Vec<_>>(),
        "verdict": verdict,
        "partner": partner,
        "time": time,
        "period": period,
        "mixed_field": r.mixed_field,
        "certificate": r.certificate.as_ref().map(certificate_json),
    })
}

pub fn finding_json(f: &Finding) -> Value {
    match &f.kind {
        FindingKind::Fixed => json!({ "state": state_json(&f.state), "kind": "fixed" }),
        FindingKind::Periodic { period, mixed } => json!({
            "state": state_json(&f.state),
            "kind": "periodic",
            "period": time_json(period),
            "mixed_field": mixed,
        }),
        FindingKind::Pst { partner, time } => json!({
            "state": state_json(&f.state),
            "kind": "pst",
            "partner": state_json(partner),
            "time": time_json(time),
        }),
    }
}

/// One JSON line per scanned graph.
pub fn scan_jsonl(scan: &GraphScan) -> String {
    json!({
        "graph": graph6::encode(&scan.graph),
        "n": scan.graph.order(),
        "findings": scan.findings.iter().map(finding_json).collect::<Vec<_>>(),
    })
    .to_string()
}

pub const SURVEY_HEADER: &str = "n,hamiltonian,form,convention,total_graphs,graphs_with_pst,graphs_with_periodic_state";

pub fn survey_csv_line(cfg: &ScanConfig, row: &SurveyRow) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        row.n,
        cfg.hamiltonian.name(),
        cfg.form.name(),
        cfg.convention.name(),
        row.total_graphs,
        row.graphs_with_pst,
        row.graphs_with_periodic_state
    )
}

/// Header plus one line per row, newline-terminated.
pub fn survey_csv(cfg: &ScanConfig, rows: &[SurveyRow]) -> String {
    let mut out = String::from(SURVEY_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&survey_csv_line(cfg, r));
        out.push('\n');
    }
    out
}

/// `t,fidelity` with 17 significant digits.
pub fn curve_csv(points: &[(f64, f64)]) -> String {
    let mut out = String::from("t,fidelity\n");
    for (t, f) in points {
        writeln!(out, "{t:.16e},{f:.16e}").expect("writing to a String");
    }
    out
}
