use std::collections::BTreeSet;
use std::fmt::Write;
use std::io::{self, Write as _};

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use toeplitz_core::oracle::{Chordality, OracleLimits};
use toeplitz_core::theorems::{
    classify_claw_free, classify_line_graph, cycle_decomposition, decompose_cocoonery,
    decompose_gcd, is_cocoonery, ComponentReport,
};
use toeplitz_core::verify::{
    acceptance_suite, run_sweep_with, sweep_oracle_limits, Check, Mismatch, OffsetFamily,
    OrderForm, OrderRule, Outcome, Region, RelativeBound, SweepSpec,
};
use toeplitz_core::{Error, Graph, Oracle, ToeplitzParams};

use crate::{Output, EXIT_BOUND, EXIT_DISCREPANCY};

fn oracle() -> Oracle {
    Oracle::new(OracleLimits::from_env())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs an oracle query, turning size-bound refusals into `{"skipped": ...}`.
fn bounded<T>(r: Result<T, Error>, f: impl FnOnce(T) -> Value) -> Result<Value, Error> {
    match r {
        Ok(v) => Ok(f(v)),
        Err(e) if e.is_bound_exceeded() => Ok(json!({"skipped": e.to_string()})),
        Err(e) => Err(e),
    }
}

pub fn classify(p: &ToeplitzParams, witness: bool, all: bool) -> Result<Output, Error> {
    let oracle = oracle();
    let mut human = format!("{p}\n");
    let mut code = 0;

    let mut claw = classify_claw_free(p, &oracle)?;
    if witness {
        claw.attach_witness(p, &oracle)?;
    }
    writeln!(
        human,
        "  claw-free:  {} [{}] {}",
        yes_no(claw.claw_free),
        claw.rule,
        claw.describe(p)
    )
    .unwrap();
    if let Some(w) = claw.witness {
        writeln!(human, "  claw:       {w}").unwrap();
    }
    let claw_json = json!({
        "claw_free": claw.claw_free,
        "rule": claw.rule.name(),
        "certificate": claw.certificate,
        "description": claw.describe(p),
        "witness": claw.witness.map(|w| w.to_string()),
    });

    let line_json = match classify_line_graph(p, &oracle) {
        Ok(v) => {
            writeln!(
                human,
                "  line graph: {} [{}] {}",
                yes_no(v.is_line),
                v.rule,
                v.describe(p)
            )
            .unwrap();
            if let Some(ms) = &v.component_multiset {
                let parts: Vec<String> = ms
                    .iter()
                    .map(|(kind, count)| format!("{kind} x{count}"))
                    .collect();
                writeln!(human, "  components: {}", parts.join(", ")).unwrap();
            }
            json!({
                "is_line": v.is_line,
                "rule": v.rule.name(),
                "description": v.describe(p),
                "component_multiset": v.component_multiset,
                "root": v.root.map(|r| json!({"order": r.order, "edges": r.edges})),
            })
        }
        Err(e) if e.is_bound_exceeded() => {
            writeln!(human, "  line graph: undecided ({e})").unwrap();
            code = EXIT_BOUND;
            json!({"undecided": e.to_string()})
        }
        Err(e) => return Err(e),
    };

    let mut result = json!({"claw_free": claw_json, "line_graph": line_json});
    if all {
        let g = Graph::toeplitz(p);
        let chordal = bounded(oracle.is_chordal(&g), |c| match c {
            Chordality::Chordal { .. } => json!({"chordal": true}),
            Chordality::NotChordal { hole } => json!({"chordal": false, "hole": hole.cycle}),
        })?;
        let interval = bounded(oracle.is_interval(&g), |b| json!(b))?;
        let clique_number = bounded(oracle.clique_number(&g), |w| json!(w))?;
        writeln!(
            human,
            "  chordal:    {}",
            render(&chordal["chordal"], &chordal)
        )
        .unwrap();
        writeln!(human, "  interval:   {}", render(&interval, &interval)).unwrap();
        writeln!(
            human,
            "  clique number: {}",
            render(&clique_number, &clique_number)
        )
        .unwrap();
        result["chordal"] = chordal;
        result["interval"] = interval;
        result["clique_number"] = clique_number;
    }
    Ok(Output {
        result,
        human,
        code,
    })
}

fn render(value: &Value, whole: &Value) -> String {
    match value {
        Value::Bool(b) => yes_no(*b).to_string(),
        Value::Number(n) => n.to_string(),
        _ => format!(
            "skipped ({})",
            whole["skipped"].as_str().unwrap_or("bound exceeded")
        ),
    }
}

fn report_json(kind: &str, report: &ComponentReport) -> Value {
    let components: Vec<Value> = report
        .components
        .iter()
        .map(|c| {
            json!({
                "vertices": c.vertices,
                "target": c.target.to_string(),
                "target_order": c.target.order,
                "target_offsets": c.target.offsets,
                "bijection": c.bijection,
            })
        })
        .collect();
    json!({"decomposition": kind, "component_count": report.component_count, "components": components})
}

pub fn components(p: &ToeplitzParams) -> Result<Output, Error> {
    let (kind, report) = if is_cocoonery(p).is_some() {
        ("cocoonery", decompose_cocoonery(p)?)
    } else {
        ("gcd", decompose_gcd(p))
    };
    let mut result = report_json(kind, &report);
    let mut human = format!(
        "{p}: {} components ({kind} decomposition)\n",
        report.component_count
    );
    for c in &report.components {
        let vs: Vec<String> = c.vertices.iter().map(ToString::to_string).collect();
        writeln!(human, "  {{{}}} ~ {}", vs.join(","), c.target).unwrap();
    }
    if let Ok(cycles) = cycle_decomposition(p) {
        writeln!(
            human,
            "  {} disjoint cycles of length {}",
            cycles.cycles, cycles.length
        )
        .unwrap();
        result["cycles"] = json!(cycles);
    }
    Ok(Output {
        result,
        human,
        code: 0,
    })
}

pub fn explain(p: &ToeplitzParams) -> Result<Output, Error> {
    let e = toeplitz_core::verify::explain(p, &oracle())?;
    let mut human = format!("{p}\n");
    for (title, part) in [("claw-free", &e.claw_free), ("line graph", &e.line_graph)] {
        writeln!(human, "{title}:").unwrap();
        for step in &part.trace.steps {
            writeln!(
                human,
                "  [{}] {}: {}",
                if step.holds { "applies" } else { "skip   " },
                step.rule,
                step.premise
            )
            .unwrap();
        }
        writeln!(human, "  verdict: {}", part.verdict).unwrap();
        if let Some(d) = &part.description {
            writeln!(human, "  reason: {d}").unwrap();
        }
        writeln!(human, "  oracle: {}", part.oracle_confirmation).unwrap();
    }
    Ok(Output {
        result: serde_json::to_value(&e).expect("explanations serialize"),
        human,
        code: 0,
    })
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    All,
    Cocooneries,
    Mutations,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum NForm {
    Range,
    SumBoundary,
    BeyondSum,
    MinimalOrder,
    NearDouble,
}

#[derive(Args)]
pub struct SweepArgs {
    /// Run a named suite instead of a single box.
    #[arg(long, value_parser = ["acceptance"], conflicts_with_all = ["k", "check"])]
    suite: Option<String>,
    /// Offset count, either `3` or an inclusive range `2..4`.
    #[arg(long)]
    k: Option<String>,
    /// Largest offset (or step, for cocoonery and mutation families).
    #[arg(long, default_value_t = 10)]
    t_max: usize,
    #[arg(long, value_enum, default_value = "all")]
    family: Family,
    /// Largest order.
    #[arg(long, default_value_t = 30)]
    n_max: usize,
    /// Also cap n at this multiple of t_{k-1} + t_k.
    #[arg(long)]
    n_sum_factor: Option<usize>,
    #[arg(long, value_enum, default_value = "range")]
    n_form: NForm,
    /// A check to run; repeat for several.
    #[arg(long = "check")]
    check: Vec<String>,
    /// Add per-check timing records.
    #[arg(long)]
    timing: bool,
    /// Report every passing check on this graph (`N:T1,T2,...`) as a
    /// discrepancy. Exists to exercise the failure path.
    #[arg(long, hide = true, value_name = "N:OFFSETS")]
    inject_fault: Option<String>,
}

impl SweepArgs {
    pub fn echo(&self) -> Value {
        match &self.suite {
            Some(s) => json!({"suite": s}),
            None => json!({
                "k": self.k,
                "t_max": self.t_max,
                "n_max": self.n_max,
                "n_sum_factor": self.n_sum_factor,
                "checks": self.check,
            }),
        }
    }

    fn specs(&self) -> Result<Vec<SweepSpec>, Error> {
        if self.suite.is_some() {
            return Ok(acceptance_suite());
        }
        let checks: BTreeSet<Check> = self
            .check
            .iter()
            .map(|c| c.parse())
            .collect::<Result<_, _>>()?;
        let region = match &self.k {
            None if checks == BTreeSet::from([Check::Fibonacci]) => None,
            None => {
                return Err(Error::InvalidSweep(
                    "--k is required unless --suite is given".into(),
                ))
            }
            Some(k) => {
                let (k_min, k_max) = parse_k(k)?;
                Some(Region {
                    k_min,
                    k_max,
                    offsets: match self.family {
                        Family::All => OffsetFamily::All {
                            max_offset: self.t_max,
                        },
                        Family::Cocooneries => OffsetFamily::Cocooneries {
                            max_step: self.t_max,
                        },
                        Family::Mutations => OffsetFamily::Mutations {
                            max_step: self.t_max,
                        },
                    },
                    order: OrderRule {
                        max: self.n_max,
                        relative: self
                            .n_sum_factor
                            .map(|factor| RelativeBound::SumOfLastTwo { factor }),
                        form: match self.n_form {
                            NForm::Range => OrderForm::Range,
                            NForm::SumBoundary => OrderForm::SumBoundary,
                            NForm::BeyondSum => OrderForm::BeyondSum,
                            NForm::MinimalOrder => OrderForm::MinimalOrder,
                            NForm::NearDouble => OrderForm::NearDouble,
                        },
                    },
                })
            }
        };
        let spec = SweepSpec {
            name: "custom".into(),
            region,
            checks,
        };
        spec.validate()?;
        Ok(vec![spec])
    }
}

fn parse_cell(s: &str) -> Result<ToeplitzParams, Error> {
    let bad = || Error::InvalidSweep(format!("expected N:T1,T2,..., got {s:?}"));
    let (n, offsets) = s.split_once(':').ok_or_else(bad)?;
    let n = n.trim().parse().map_err(|_| bad())?;
    let offsets = offsets
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect::<Result<Vec<usize>, _>>()?;
    ToeplitzParams::new(n, offsets)
}

fn parse_k(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::InvalidSweep(format!("--k expects N or A..B, got {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ))
        }
        None => {
            let k = s.trim().parse().map_err(|_| bad())?;
            Ok((k, k))
        }
    }
}

/// Streams each sweep's records as it finishes. In JSON mode the records
/// go out as line-delimited JSON and the envelope follows.
pub fn sweep(args: &SweepArgs, json_mode: bool) -> Result<Output, Error> {
    let specs = args.specs()?;
    let faulty = args.inject_fault.as_deref().map(parse_cell).transpose()?;
    let oracle = Oracle::new(sweep_oracle_limits());
    let mut summaries = Vec::new();
    let mut human = String::new();
    let mut discrepancies = 0;
    let stdout = io::stdout();
    for spec in &specs {
        let report = run_sweep_with(spec, &oracle, |p, _, outcome| match outcome {
            Outcome::Pass if faulty.as_ref() == Some(p) => Outcome::Fail(Mismatch {
                theorem_verdict: Value::Null,
                oracle_verdict: Value::Null,
                witness: Value::Null,
                detail: "injected fault".into(),
            }),
            other => other,
        })?;
        discrepancies += report.discrepancies.len();
        if json_mode {
            let mut out = stdout.lock();
            for line in report.json_lines(args.timing) {
                let _ = writeln!(out, "{line}");
            }
        } else {
            let mut out = stdout.lock();
            let _ = writeln!(
                out,
                "{:<24} {:>6} cells  {:>3} discrepancies  {:>3} skipped{}",
                spec.name,
                report.total_cells(),
                report.discrepancies.len(),
                report.skipped.len(),
                if args.timing {
                    format!("  {:.2}s", report.wall_time.as_secs_f64())
                } else {
                    String::new()
                }
            );
            for d in &report.discrepancies {
                let _ = writeln!(
                    out,
                    "  {} {}: {} (rules {}, oracle {})",
                    d.check, d.params, d.detail, d.theorem_verdict, d.oracle_verdict
                );
            }
        }
        summaries.push(report.summary());
    }
    if !json_mode {
        writeln!(
            human,
            "{}",
            if discrepancies == 0 {
                "all checks agree".to_string()
            } else {
                format!("{discrepancies} discrepancies")
            }
        )
        .unwrap();
    }
    Ok(Output {
        result: json!({"sweeps": summaries, "discrepancies": discrepancies, "clean": discrepancies == 0}),
        human,
        code: if discrepancies == 0 {
            0
        } else {
            EXIT_DISCREPANCY
        },
    })
}
