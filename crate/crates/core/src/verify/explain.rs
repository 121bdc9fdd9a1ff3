use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::{Graph, ToeplitzParams};
use crate::oracle::Oracle;
use crate::theorems::{classify_claw_free_traced, classify_line_graph_traced, Trace};

/// The dispatch trace for one property, with the verdict and an independent
/// oracle confirmation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyExplanation {
    pub trace: Trace,
    /// The verdict, or the reason there is none.
    pub verdict: Value,
    pub description: Option<String>,
    /// `{"agrees": bool, ...}`, or `{"skipped": reason}` beyond the oracle bound.
    pub oracle_confirmation: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Explanation {
    pub params: ToeplitzParams,
    pub claw_free: PropertyExplanation,
    pub line_graph: PropertyExplanation,
}

pub fn explain(p: &ToeplitzParams, oracle: &Oracle) -> Result<Explanation> {
    let g = Graph::toeplitz(p);

    let mut trace = Trace::default();
    let claw_free = match classify_claw_free_traced(p, oracle, &mut trace) {
        Ok(verdict) => {
            let confirmation = match oracle.first_claw(&g) {
                Ok(claw) => json!({
                    "agrees": claw.is_none() == verdict.claw_free,
                    "claw_free": claw.is_none(),
                    "witness": claw.map(|c| c.to_string()),
                }),
                Err(e) if e.is_bound_exceeded() => json!({"skipped": e.to_string()}),
                Err(e) => return Err(e),
            };
            PropertyExplanation {
                trace,
                description: Some(verdict.describe(p)),
                verdict: serde_json::to_value(&verdict).expect("verdicts serialize"),
                oracle_confirmation: confirmation,
            }
        }
        Err(e) if e.is_bound_exceeded() => PropertyExplanation {
            trace,
            description: None,
            verdict: json!({"undecided": e.to_string()}),
            oracle_confirmation: json!({"skipped": e.to_string()}),
        },
        Err(e) => return Err(e),
    };

    let mut trace = Trace::default();
    let line_graph = match classify_line_graph_traced(p, oracle, &mut trace) {
        Ok(verdict) => {
            let confirmation = match oracle.is_line_graph(&g) {
                Ok(cert) => json!({
                    "agrees": cert.is_some() == verdict.is_line,
                    "is_line": cert.is_some(),
                }),
                Err(e) if e.is_bound_exceeded() => json!({"skipped": e.to_string()}),
                Err(e) => return Err(e),
            };
            PropertyExplanation {
                trace,
                description: None,
                verdict: json!({
                    "is_line": verdict.is_line,
                    "rule": verdict.rule.name(),
                    "component_multiset": verdict.component_multiset,
                }),
                oracle_confirmation: confirmation,
            }
        }
        Err(e) if e.is_bound_exceeded() => PropertyExplanation {
            trace,
            description: None,
            verdict: json!({"undecided": e.to_string()}),
            oracle_confirmation: json!({"skipped": e.to_string()}),
        },
        Err(e) => return Err(e),
    };

    Ok(Explanation {
        params: p.clone(),
        claw_free,
        line_graph,
    })
}
