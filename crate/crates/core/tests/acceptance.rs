//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Time limits are wall-clock and fixed here.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use toeplitz_core::theorems::{classify_line_graph, near_double_family, ComponentKind};
use toeplitz_core::verify::{
    acceptance_suite, run_sweep, sweep_oracle_limits, Check, SweepReport, SweepSpec,
};
use toeplitz_core::{Oracle, ToeplitzParams};

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    sweeps: &'static [&'static str],
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        title: "Fibonacci cells",
        limit: Duration::from_secs(1),
        sweeps: &["fibonacci"],
    },
    Criterion {
        id: 2,
        title: "two-offset characterization",
        limit: Duration::from_secs(10),
        sweeps: &["pairs"],
    },
    Criterion {
        id: 3,
        title: "three-offset characterization and minimal order",
        limit: Duration::from_secs(60),
        sweeps: &["triples", "triples-minimal-order"],
    },
    Criterion {
        id: 4,
        title: "three-offset catalogue at n = 2 t_3 - i",
        limit: Duration::from_secs(30),
        sweeps: &["catalogue"],
    },
    Criterion {
        id: 5,
        title: "five-way equivalence past the top sum",
        limit: Duration::from_secs(120),
        sweeps: &["equivalence"],
    },
    Criterion {
        id: 6,
        title: "top-sum boundary and mutations",
        limit: Duration::from_secs(30),
        sweeps: &["sum-boundary", "mutations"],
    },
    Criterion {
        id: 7,
        title: "decomposition certificates",
        limit: Duration::from_secs(30),
        sweeps: &["cocoonery-components", "gcd-components"],
    },
    Criterion {
        id: 8,
        title: "line-graph classification",
        limit: Duration::from_secs(60),
        sweeps: &["line-pairs", "line-larger", "line-paths"],
    },
    Criterion {
        id: 9,
        title: "oracle self-consistency",
        limit: Duration::from_secs(60),
        sweeps: &["oracle-consistency"],
    },
];

fn params(n: usize, offsets: &[usize]) -> ToeplitzParams {
    ToeplitzParams::new(n, offsets.to_vec()).unwrap()
}

/// Criterion-specific extras beyond zero discrepancies.
fn extra(id: u32, reports: &[&SweepReport], oracle: &Oracle) -> Result<(), String> {
    match id {
        1 => {
            let counts = reports[0].counts[&Check::Fibonacci];
            if counts.passed != 8 {
                return Err(format!(
                    "expected 8 Fibonacci cells to pass, got {counts:?}"
                ));
            }
        }
        4 => {
            // The oracle's claw-free set in the catalogue region, compared as sets.
            let spec = &reports[0].spec;
            let oracle_set: BTreeSet<String> = spec
                .cells()
                .iter()
                .filter(|p| {
                    oracle
                        .is_claw_free(&toeplitz_core::Graph::toeplitz(p))
                        .unwrap()
                })
                .map(ToString::to_string)
                .collect();
            let family_set: BTreeSet<String> = spec
                .cells()
                .iter()
                .filter(|p| near_double_family(p).is_some())
                .map(ToString::to_string)
                .collect();
            if oracle_set != family_set {
                let missing: Vec<_> = family_set.symmetric_difference(&oracle_set).collect();
                return Err(format!(
                    "claw-free set differs from the families: {missing:?}"
                ));
            }
            for s in [
                "T_7<2,4,5>",
                "T_6<1,2,4>",
                "T_5<1,2,4>",
                "T_6<2,3,4>",
                "T_5<2,3,4>",
                "T_9<3,5,6>",
            ] {
                if !oracle_set.contains(s) {
                    return Err(format!("{s} missing from the claw-free set"));
                }
            }
        }
        8 => {
            let v = classify_line_graph(&params(10, &[3, 6]), oracle).map_err(|e| e.to_string())?;
            let expected = vec![(ComponentKind::K3, 2), (ComponentKind::Diamond, 1)];
            if !v.is_line || v.component_multiset.as_ref() != Some(&expected) {
                return Err(format!("T_10<3,6> gave {:?}", v.component_multiset));
            }
            let v =
                classify_line_graph(&params(20, &[2, 4, 6]), oracle).map_err(|e| e.to_string())?;
            if v.is_line {
                return Err("T_20<2,4,6> classified as a line graph".into());
            }
        }
        _ => {}
    }
    Ok(())
}

fn run_all(suite: &[SweepSpec], oracle: &Oracle) -> Vec<(SweepReport, Duration)> {
    suite
        .iter()
        .map(|spec| {
            let t0 = Instant::now();
            let report = run_sweep(spec, oracle).expect("sweep specs are valid");
            (report, t0.elapsed())
        })
        .collect()
}

fn main() -> ExitCode {
    let oracle = Oracle::new(sweep_oracle_limits());
    let suite = acceptance_suite();
    let first = run_all(&suite, &oracle);
    let mut failures = 0;

    for c in &CRITERIA {
        let chosen: Vec<&(SweepReport, Duration)> = first
            .iter()
            .filter(|(r, _)| c.sweeps.contains(&r.spec.name.as_str()))
            .collect();
        assert_eq!(
            chosen.len(),
            c.sweeps.len(),
            "criterion {} names unknown sweeps",
            c.id
        );
        let reports: Vec<&SweepReport> = chosen.iter().map(|(r, _)| r).collect();
        let t_extra = Instant::now();
        let extra_result = extra(c.id, &reports, &oracle);
        let elapsed: Duration =
            chosen.iter().map(|(_, d)| *d).sum::<Duration>() + t_extra.elapsed();
        let cells: usize = reports.iter().map(|r| r.total_cells()).sum();
        let discrepancies: usize = reports.iter().map(|r| r.discrepancies.len()).sum();
        let skipped: usize = reports.iter().map(|r| r.skipped.len()).sum();

        let mut problems = Vec::new();
        if discrepancies > 0 {
            problems.push(format!("{discrepancies} discrepancies"));
            for r in &reports {
                for line in r
                    .json_lines(false)
                    .iter()
                    .filter(|l| l.contains("\"discrepancy\""))
                    .take(5)
                {
                    eprintln!("  {line}");
                }
            }
        }
        if skipped > 0 {
            problems.push(format!("{skipped} skipped checks"));
        }
        if elapsed >= c.limit {
            problems.push(format!(
                "took {:.2}s, limit {}s",
                elapsed.as_secs_f64(),
                c.limit.as_secs()
            ));
        }
        if let Err(e) = extra_result {
            problems.push(e);
        }
        let status = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2}: {} ({cells} cells, {discrepancies} discrepancies, {:.2}s < {}s){}",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            if problems.is_empty() { String::new() } else { format!(" -- {}", problems.join("; ")) }
        );
        if !problems.is_empty() {
            failures += 1;
        }
    }

    // Criterion 10: a second full run gives byte-identical machine output.
    let render = |runs: &[(SweepReport, Duration)]| -> Vec<String> {
        runs.iter().flat_map(|(r, _)| r.json_lines(false)).collect()
    };
    let second = run_all(&suite, &oracle);
    let (a, b) = (render(&first), render(&second));
    let identical = a == b;
    println!(
        "{} criterion 10: deterministic sweep output ({} records, identical = {identical})",
        if identical { "PASS" } else { "FAIL" },
        a.len()
    );
    if !identical {
        failures += 1;
    }

    if failures == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
