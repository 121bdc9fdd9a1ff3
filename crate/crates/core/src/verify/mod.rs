//! Exhaustive sweeps that cross-check the closed-form rules against the
//! oracles over boxes of parameters.

mod checks;
mod explain;
mod report;
mod spec;
mod suite;

pub use checks::{Mismatch, Outcome, HOLE_SEARCH_MAX_ORDER};
pub use explain::{explain, Explanation, PropertyExplanation};
pub use report::{CheckCounts, Discrepancy, Skip, SweepReport, REPORT_SCHEMA_VERSION};
pub use spec::{
    fibonacci_cell, Check, OffsetFamily, OrderForm, OrderRule, Region, RelativeBound, SweepSpec,
    FIBONACCI,
};
pub use suite::{acceptance_suite, sweep_oracle_limits};

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::ToeplitzParams;
use crate::oracle::Oracle;

use checks::Cell;

struct CellResult {
    params: ToeplitzParams,
    outcomes: Vec<(Check, Outcome, Duration)>,
}

/// Evaluates every check on every cell, in parallel, and reports in
/// `(k, offsets, n)` order.
pub fn run_sweep(spec: &SweepSpec, oracle: &Oracle) -> Result<SweepReport> {
    run_sweep_with(spec, oracle, |_, _, outcome| outcome)
}

/// Like [`run_sweep`], but every outcome passes through `adjust` before it is
/// tallied. Used to exercise the failure path of callers.
pub fn run_sweep_with<F>(spec: &SweepSpec, oracle: &Oracle, adjust: F) -> Result<SweepReport>
where
    F: Fn(&ToeplitzParams, Check, Outcome) -> Outcome + Sync,
{
    spec.validate()?;
    let started = Instant::now();
    let cells = spec.cells();
    let results: Vec<CellResult> = cells
        .into_par_iter()
        .map(|params| {
            let cell = Cell::new(&params, oracle);
            let mut outcomes = Vec::with_capacity(spec.checks.len());
            for &check in &spec.checks {
                let t0 = Instant::now();
                let outcome = adjust(&params, check, cell.run(check)?);
                outcomes.push((check, outcome, t0.elapsed()));
            }
            drop(cell);
            Ok(CellResult { params, outcomes })
        })
        .collect::<Result<_>>()?;

    let mut report = SweepReport {
        spec: spec.clone(),
        cells_evaluated: 0,
        cells_skipped: 0,
        discrepancies: Vec::new(),
        skipped: Vec::new(),
        counts: spec
            .checks
            .iter()
            .map(|&c| (c, CheckCounts::default()))
            .collect(),
        timing: spec.checks.iter().map(|&c| (c, Duration::ZERO)).collect(),
        wall_time: Duration::ZERO,
    };
    for result in results {
        let mut any_skipped = false;
        for (check, outcome, elapsed) in result.outcomes {
            *report.timing.get_mut(&check).expect("check is in spec") += elapsed;
            let counts = report.counts.get_mut(&check).expect("check is in spec");
            match outcome {
                Outcome::NotApplicable => counts.not_applicable += 1,
                Outcome::Pass => counts.passed += 1,
                Outcome::Skipped(reason) => {
                    counts.skipped += 1;
                    any_skipped = true;
                    report.skipped.push(Skip {
                        params: result.params.clone(),
                        check,
                        reason,
                    });
                }
                Outcome::Fail(m) => {
                    counts.failed += 1;
                    report.discrepancies.push(Discrepancy {
                        params: result.params.clone(),
                        check,
                        theorem_verdict: m.theorem_verdict,
                        oracle_verdict: m.oracle_verdict,
                        witness: m.witness,
                        detail: m.detail,
                    });
                }
            }
        }
        if any_skipped {
            report.cells_skipped += 1;
        } else {
            report.cells_evaluated += 1;
        }
    }
    report.wall_time = started.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean_and_ordered() {
        let spec = SweepSpec {
            name: "pairs".into(),
            region: Some(Region {
                k_min: 2,
                k_max: 2,
                offsets: OffsetFamily::All { max_offset: 6 },
                order: OrderRule {
                    max: 20,
                    relative: Some(RelativeBound::SumOfLastTwo { factor: 2 }),
                    form: OrderForm::Range,
                },
            }),
            checks: [Check::Claw, Check::Chordal, Check::Cycles].into(),
        };
        let report = run_sweep(&spec, &Oracle::new(sweep_oracle_limits())).unwrap();
        assert!(report.is_clean(), "{:?}", report.discrepancies);
        assert_eq!(report.total_cells(), spec.cells().len());
        let a = report.json_lines(false);
        let b = run_sweep(&spec, &Oracle::new(sweep_oracle_limits()))
            .unwrap()
            .json_lines(false);
        assert_eq!(a, b);
    }

    #[test]
    fn bound_exceeded_cells_are_recorded() {
        use crate::oracle::OracleLimits;
        let spec = SweepSpec {
            name: "tight".into(),
            region: Some(Region {
                k_min: 1,
                k_max: 1,
                offsets: OffsetFamily::All { max_offset: 1 },
                order: OrderRule {
                    max: 12,
                    relative: None,
                    form: OrderForm::Range,
                },
            }),
            checks: [Check::Claw].into(),
        };
        let oracle = Oracle::new(OracleLimits {
            max_order: 10,
            ..OracleLimits::default()
        });
        let report = run_sweep(&spec, &oracle).unwrap();
        assert_eq!(report.cells_skipped, 2);
        assert_eq!(report.cells_evaluated, 9);
        assert_eq!(report.skipped[0].params.n(), 11);
    }
}
