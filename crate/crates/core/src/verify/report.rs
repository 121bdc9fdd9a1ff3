use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

use crate::graph::ToeplitzParams;

use super::spec::{Check, SweepSpec};

/// Bumped whenever a record's fields change.
pub const REPORT_SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub params: ToeplitzParams,
    pub check: Check,
    pub theorem_verdict: Value,
    pub oracle_verdict: Value,
    pub witness: Value,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub params: ToeplitzParams,
    pub check: Check,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounts {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub spec: SweepSpec,
    /// Cells where every applicable check ran.
    pub cells_evaluated: usize,
    /// Cells where at least one check was skipped.
    pub cells_skipped: usize,
    pub discrepancies: Vec<Discrepancy>,
    pub skipped: Vec<Skip>,
    pub counts: BTreeMap<Check, CheckCounts>,
    /// Summed per-check time across worker threads.
    pub timing: BTreeMap<Check, Duration>,
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn total_cells(&self) -> usize {
        self.cells_evaluated + self.cells_skipped
    }

    /// Line-delimited JSON records: a header, one per discrepancy, one per
    /// skipped check, a summary, and a timing record when asked. Keys are
    /// sorted, so identical sweeps produce identical bytes without timing.
    pub fn json_lines(&self, include_timing: bool) -> Vec<String> {
        let mut out = Vec::new();
        let mut emit = |v: Value| out.push(v.to_string());
        emit(json!({
            "record": "sweep",
            "schema_version": REPORT_SCHEMA_VERSION,
            "name": self.spec.name,
            "region": self.spec.region,
            "checks": self.spec.checks,
        }));
        for d in &self.discrepancies {
            emit(json!({
                "record": "discrepancy",
                "sweep": self.spec.name,
                "params": d.params,
                "check": d.check,
                "theorem_verdict": d.theorem_verdict,
                "oracle_verdict": d.oracle_verdict,
                "witness": d.witness,
                "detail": d.detail,
            }));
        }
        for s in &self.skipped {
            emit(json!({
                "record": "skipped",
                "sweep": self.spec.name,
                "params": s.params,
                "check": s.check,
                "reason": s.reason,
            }));
        }
        emit(self.summary());
        if include_timing {
            let per_check: BTreeMap<&str, f64> = self
                .timing
                .iter()
                .map(|(c, d)| (c.name(), d.as_secs_f64()))
                .collect();
            emit(json!({
                "record": "timing",
                "sweep": self.spec.name,
                "wall_seconds": self.wall_time.as_secs_f64(),
                "check_seconds": per_check,
            }));
        }
        out
    }

    pub fn summary(&self) -> Value {
        let counts: BTreeMap<&str, CheckCounts> =
            self.counts.iter().map(|(c, n)| (c.name(), *n)).collect();
        json!({
            "record": "summary",
            "sweep": self.spec.name,
            "cells_evaluated": self.cells_evaluated,
            "cells_skipped": self.cells_skipped,
            "discrepancies": self.discrepancies.len(),
            "checks": counts,
        })
    }
}
