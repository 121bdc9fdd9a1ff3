use std::cell::OnceCell;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Claw, Graph, ToeplitzParams};
use crate::oracle::{close_under_reflection, Chordality, ClawSearch, Oracle};
use crate::theorems::{
    classify_claw_free, classify_line_graph, cycle_decomposition, decompose_cocoonery,
    decompose_gcd, is_cocoonery, is_mutation, just_above_last, multiset, near_double_family,
    ClawFreeVerdict, ComponentKind,
};

use super::spec::{Check, FIBONACCI};

/// Largest order at which chordality is also confirmed by searching for
/// holes of every length.
pub const HOLE_SEARCH_MAX_ORDER: usize = 12;

/// Result of one check on one cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    NotApplicable,
    Pass,
    Skipped(String),
    Fail(Mismatch),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub theorem_verdict: Value,
    pub oracle_verdict: Value,
    pub witness: Value,
    pub detail: String,
}

impl Mismatch {
    fn new(theorem: Value, oracle: Value, detail: impl Into<String>) -> Self {
        Mismatch {
            theorem_verdict: theorem,
            oracle_verdict: oracle,
            witness: Value::Null,
            detail: detail.into(),
        }
    }

    fn with_witness(mut self, witness: Option<Claw>) -> Self {
        self.witness = witness.map_or(Value::Null, |c| json!(c.to_string()));
        self
    }
}

/// Oracle and theorem results for one cell, computed at most once each.
pub(crate) struct Cell<'a> {
    pub p: &'a ToeplitzParams,
    pub oracle: &'a Oracle,
    graph: OnceCell<Graph>,
    first_claw: OnceCell<Result<Option<Claw>>>,
    chordal: OnceCell<Result<Chordality>>,
    interval: OnceCell<Result<Option<Vec<Vec<usize>>>>>,
    clique_number: OnceCell<Result<usize>>,
    claw_verdict: OnceCell<Result<ClawFreeVerdict>>,
}

/// Bound-exceeded errors become skips; anything else is a real error.
macro_rules! need {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) if e.is_bound_exceeded() => return Ok(Outcome::Skipped(e.to_string())),
            Err(e) => return Err(e),
        }
    };
}

impl<'a> Cell<'a> {
    pub fn new(p: &'a ToeplitzParams, oracle: &'a Oracle) -> Self {
        Cell {
            p,
            oracle,
            graph: OnceCell::new(),
            first_claw: OnceCell::new(),
            chordal: OnceCell::new(),
            interval: OnceCell::new(),
            clique_number: OnceCell::new(),
            claw_verdict: OnceCell::new(),
        }
    }

    fn graph(&self) -> &Graph {
        self.graph.get_or_init(|| Graph::toeplitz(self.p))
    }

    fn first_claw(&self) -> Result<Option<Claw>> {
        self.first_claw
            .get_or_init(|| self.oracle.first_claw(self.graph()))
            .clone()
    }

    fn oracle_claw_free(&self) -> Result<bool> {
        Ok(self.first_claw()?.is_none())
    }

    fn chordal(&self) -> Result<Chordality> {
        self.chordal
            .get_or_init(|| self.oracle.is_chordal(self.graph()))
            .clone()
    }

    fn interval(&self) -> Result<Option<Vec<Vec<usize>>>> {
        self.interval
            .get_or_init(|| self.oracle.interval_clique_order(self.graph()))
            .clone()
    }

    fn clique_number(&self) -> Result<usize> {
        self.clique_number
            .get_or_init(|| self.oracle.clique_number(self.graph()))
            .clone()
    }

    fn claw_verdict(&self) -> Result<ClawFreeVerdict> {
        self.claw_verdict
            .get_or_init(|| classify_claw_free(self.p, self.oracle))
            .clone()
    }

    pub fn run(&self, check: Check) -> Result<Outcome> {
        match check {
            Check::Claw => self.claw(),
            Check::Chordal => self.chordal_check(),
            Check::Interval => self.interval_check(),
            Check::Clique => self.clique(),
            Check::Components => self.components(),
            Check::Cycles => self.cycles(),
            Check::Line => self.line(),
            Check::Catalogue => self.catalogue(),
            Check::MinimalOrder => self.minimal_order(),
            Check::Equivalence => self.equivalence(),
            Check::Mutation => self.mutation(),
            Check::Fibonacci => self.fibonacci(),
            Check::Reflection => self.reflection(),
        }
    }

    fn claw(&self) -> Result<Outcome> {
        let verdict = need!(self.claw_verdict());
        let witness = need!(self.first_claw());
        let oracle_free = witness.is_none();
        let theorem = json!({"claw_free": verdict.claw_free, "rule": verdict.rule.name()});
        if verdict.claw_free != oracle_free {
            return Ok(Outcome::Fail(
                Mismatch::new(
                    theorem,
                    json!({"claw_free": oracle_free}),
                    verdict.describe(self.p),
                )
                .with_witness(witness),
            ));
        }
        if let Some(w) = verdict.witness {
            if !w.is_valid_in(self.graph()) {
                return Ok(Outcome::Fail(
                    Mismatch::new(
                        theorem,
                        json!({"claw_free": oracle_free}),
                        "attached witness is not a claw",
                    )
                    .with_witness(Some(w)),
                ));
            }
        }
        Ok(Outcome::Pass)
    }

    fn chordal_check(&self) -> Result<Outcome> {
        let g = self.graph();
        let chordality = need!(self.chordal());
        let chordal = chordality.is_chordal();
        let certificate_ok = match &chordality {
            Chordality::Chordal { elimination_order } => {
                is_perfect_elimination(g, elimination_order)
            }
            Chordality::NotChordal { hole } => hole.is_valid_in(g),
        };
        if !certificate_ok {
            return Ok(Outcome::Fail(Mismatch::new(
                Value::Null,
                json!({"chordal": chordal}),
                "chordality certificate does not verify",
            )));
        }
        if g.order() <= HOLE_SEARCH_MAX_ORDER {
            let mut hole = None;
            for length in 4..=g.order() {
                if let Some(h) = need!(self.oracle.find_hole(g, length)) {
                    hole = Some(h);
                    break;
                }
            }
            if hole.is_none() != chordal {
                return Ok(Outcome::Fail(Mismatch::new(
                    json!({"hole_free": hole.is_none()}),
                    json!({"chordal": chordal}),
                    format!(
                        "elimination ordering and hole search disagree{}",
                        hole.map(|h| format!(" (hole {:?})", h.cycle))
                            .unwrap_or_default()
                    ),
                )));
            }
        }
        Ok(Outcome::Pass)
    }

    fn interval_check(&self) -> Result<Outcome> {
        let order = need!(self.interval());
        let chordal = need!(self.chordal()).is_chordal();
        let Some(order) = order else {
            return Ok(Outcome::Pass);
        };
        if !chordal {
            return Ok(Outcome::Fail(Mismatch::new(
                Value::Null,
                json!({"interval": true, "chordal": false}),
                "interval graph reported as not chordal",
            )));
        }
        if !is_consecutive(self.graph(), &order) {
            return Ok(Outcome::Fail(Mismatch::new(
                Value::Null,
                json!({"interval": true}),
                "clique ordering is not consecutive",
            )));
        }
        Ok(Outcome::Pass)
    }

    fn clique(&self) -> Result<Outcome> {
        let p = self.p;
        let applies = is_cocoonery(p).is_some() && p.top_sum().is_none_or(|s| p.n() >= s);
        if !applies {
            return Ok(Outcome::NotApplicable);
        }
        let omega = need!(self.clique_number());
        if omega != p.k() + 1 {
            return Ok(Outcome::Fail(Mismatch::new(
                json!({"clique_number": p.k() + 1}),
                json!({"clique_number": omega}),
                "cocoonery clique number differs from k + 1",
            )));
        }
        Ok(Outcome::Pass)
    }

    fn components(&self) -> Result<Outcome> {
        let g = self.graph();
        let mut reports = vec![("gcd", decompose_gcd(self.p))];
        if is_cocoonery(self.p).is_some() {
            reports.push(("cocoonery", decompose_cocoonery(self.p)?));
        }
        for (kind, report) in reports {
            let failures = report.certify(g)?;
            if !failures.is_empty() {
                return Ok(Outcome::Fail(Mismatch::new(
                    json!({"decomposition": kind, "components": report.component_count}),
                    json!({"failures": failures}),
                    format!("{kind} decomposition certificate failed"),
                )));
            }
        }
        Ok(Outcome::Pass)
    }

    fn cycles(&self) -> Result<Outcome> {
        let decomposition = match cycle_decomposition(self.p) {
            Ok(d) => d,
            Err(Error::PremiseNotMet(_)) => return Ok(Outcome::NotApplicable),
            Err(e) => return Err(e),
        };
        let g = self.graph();
        let components = g.components();
        let regular = (1..=g.order()).all(|v| g.degree(v) == Ok(2));
        let lengths: Vec<usize> = components.iter().map(Vec::len).collect();
        if !regular
            || components.len() != decomposition.cycles
            || lengths.iter().any(|&l| l != decomposition.length)
        {
            return Ok(Outcome::Fail(Mismatch::new(
                json!(decomposition),
                json!({"two_regular": regular, "component_lengths": lengths}),
                "components are not the predicted cycles",
            )));
        }
        Ok(Outcome::Pass)
    }

    fn line(&self) -> Result<Outcome> {
        let g = self.graph();
        let verdict = need!(classify_line_graph(self.p, self.oracle));
        let certificate = need!(self.oracle.is_line_graph(g));
        let theorem = json!({
            "is_line": verdict.is_line,
            "rule": verdict.rule.name(),
            "component_multiset": verdict.component_multiset,
        });
        let oracle_json = |extra: Value| {
            let mut v = json!({"is_line": certificate.is_some()});
            if let (Value::Object(a), Value::Object(b)) = (&mut v, extra) {
                a.extend(b);
            }
            v
        };
        if verdict.is_line != certificate.is_some() {
            return Ok(Outcome::Fail(Mismatch::new(
                theorem,
                oracle_json(json!({})),
                "line-graph verdicts differ",
            )));
        }
        if let Some(expected) = &verdict.component_multiset {
            let kinds: Option<Vec<ComponentKind>> = g
                .components()
                .iter()
                .map(|c| g.induced(c).ok().and_then(|h| ComponentKind::identify(&h)))
                .collect();
            let observed = kinds.map(multiset);
            if observed.as_ref() != Some(expected) {
                return Ok(Outcome::Fail(Mismatch::new(
                    theorem,
                    oracle_json(json!({"component_multiset": observed})),
                    "component multisets differ",
                )));
            }
        }
        if let Some(root) = &verdict.root {
            if !root.round_trip(g)? {
                return Ok(Outcome::Fail(Mismatch::new(
                    theorem,
                    oracle_json(json!({})),
                    "line graph of the predicted root is not the input",
                )));
            }
        }
        if let Some(cert) = &certificate {
            if !cert.root.round_trip(g)? {
                return Ok(Outcome::Fail(Mismatch::new(
                    theorem,
                    oracle_json(json!({})),
                    "line graph of the oracle root is not the input",
                )));
            }
        }
        Ok(Outcome::Pass)
    }

    fn catalogue(&self) -> Result<Outcome> {
        if crate::theorems::near_double_gap(self.p).is_none() {
            return Ok(Outcome::NotApplicable);
        }
        let family = near_double_family(self.p);
        self.agree_on_claw_freeness(family.is_some(), json!({"family": family}))
    }

    fn minimal_order(&self) -> Result<Outcome> {
        let Some(expected) = just_above_last(self.p) else {
            return Ok(Outcome::NotApplicable);
        };
        self.agree_on_claw_freeness(expected, json!({"criterion": expected}))
    }

    /// The expected value, the dispatcher and the oracle must all agree.
    fn agree_on_claw_freeness(&self, expected: bool, basis: Value) -> Result<Outcome> {
        let verdict = need!(self.claw_verdict());
        let witness = need!(self.first_claw());
        let oracle_free = witness.is_none();
        if expected != oracle_free || verdict.claw_free != oracle_free {
            let mut theorem = json!({"expected": expected, "classified": verdict.claw_free, "rule": verdict.rule.name()});
            if let (Value::Object(a), Value::Object(b)) = (&mut theorem, basis) {
                a.extend(b);
            }
            return Ok(Outcome::Fail(
                Mismatch::new(
                    theorem,
                    json!({"claw_free": oracle_free}),
                    "claw-freeness differs from the catalogue",
                )
                .with_witness(witness),
            ));
        }
        Ok(Outcome::Pass)
    }

    fn equivalence(&self) -> Result<Outcome> {
        let p = self.p;
        let Some(top) = p.top_sum() else {
            return Ok(Outcome::NotApplicable);
        };
        if p.n() <= top {
            return Ok(Outcome::NotApplicable);
        }
        let cocoonery = is_cocoonery(p).is_some();
        let claw_free = need!(self.oracle_claw_free());
        let chordal = need!(self.chordal()).is_chordal();
        let interval = need!(self.interval()).is_some();
        let omega = need!(self.clique_number());
        let values = [cocoonery, claw_free, chordal, interval, omega == p.k() + 1];
        if values.iter().any(|&v| v != cocoonery) {
            return Ok(Outcome::Fail(
                Mismatch::new(
                    json!({"cocoonery": cocoonery}),
                    json!({
                        "claw_free": claw_free,
                        "chordal": chordal,
                        "interval": interval,
                        "clique_number": omega,
                    }),
                    "properties past the top sum do not coincide",
                )
                .with_witness(self.first_claw().ok().flatten()),
            ));
        }
        Ok(Outcome::Pass)
    }

    fn mutation(&self) -> Result<Outcome> {
        let p = self.p;
        let cocoonery = is_cocoonery(p).is_some();
        let mutation = is_mutation(p);
        let at_boundary = p.k() >= 4 && p.top_sum() == Some(p.n());
        let small_mutation = mutation.is_some_and(|m| p.n() <= 2 * m.terms * m.step);
        if !at_boundary && !small_mutation {
            return Ok(Outcome::NotApplicable);
        }
        let claw_free = need!(self.oracle_claw_free());
        let expected = if at_boundary {
            cocoonery || mutation.is_some()
        } else {
            true
        };
        if claw_free != expected || (small_mutation && !claw_free) {
            return Ok(Outcome::Fail(
                Mismatch::new(
                    json!({"cocoonery": cocoonery, "mutation": mutation, "claw_free": expected}),
                    json!({"claw_free": claw_free}),
                    if at_boundary {
                        "at the top sum, claw-free differs from cocoonery-or-mutation"
                    } else {
                        "mutation within 2kt has a claw"
                    },
                )
                .with_witness(self.first_claw().ok().flatten()),
            ));
        }
        Ok(Outcome::Pass)
    }

    fn fibonacci(&self) -> Result<Outcome> {
        let p = self.p;
        let j = p.k();
        let is_cell =
            j <= FIBONACCI.len() && p.offsets() == &FIBONACCI[..j] && p.n() == FIBONACCI[j - 1] + 1;
        if !is_cell {
            return Ok(Outcome::NotApplicable);
        }
        let expected = j <= 5;
        let verdict = need!(self.claw_verdict());
        let witness = need!(self.first_claw());
        let expected_witness = (j == 6).then(|| Claw::new(3, [1, 5, 11]));
        let witness_ok = expected_witness.is_none() || witness == expected_witness;
        if verdict.claw_free != expected || witness.is_none() != expected || !witness_ok {
            return Ok(Outcome::Fail(
                Mismatch::new(
                    json!({"claw_free": verdict.claw_free, "expected": expected, "rule": verdict.rule.name()}),
                    json!({"claw_free": witness.is_none()}),
                    "Fibonacci cell verdict differs",
                )
                .with_witness(witness),
            ));
        }
        Ok(Outcome::Pass)
    }

    fn reflection(&self) -> Result<Outcome> {
        let g = self.graph();
        let full = need!(self.oracle.enumerate_claws(g, usize::MAX));
        let upward = need!(self
            .oracle
            .enumerate_claws_with(g, usize::MAX, ClawSearch::Upward));
        let closed = close_under_reflection(&upward, g.order());
        let all_valid = full.iter().chain(&upward).all(|c| c.is_valid_in(g));
        let all_upward = upward.iter().all(Claw::is_upward);
        if closed != full || !all_valid || !all_upward {
            return Ok(Outcome::Fail(Mismatch::new(
                json!({"reduced_closed": closed.len(), "upward_only": all_upward}),
                json!({"full": full.len(), "all_valid": all_valid}),
                "reflection closure of the upward search differs from the full search",
            )));
        }
        Ok(Outcome::Pass)
    }
}

/// Every vertex's later neighbors in `order` form a clique.
pub(crate) fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let n = g.order();
    let mut position = vec![usize::MAX; n + 1];
    for (i, &v) in order.iter().enumerate() {
        if v == 0 || v > n || position[v] != usize::MAX {
            return false;
        }
        position[v] = i;
    }
    if order.len() != n {
        return false;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g
            .neighbors_unchecked(v)
            .into_iter()
            .filter(|&u| position[u] > position[v])
            .collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.adjacent(a, b)))
    })
}

/// The cliques cover every edge and each vertex's cliques are consecutive.
pub(crate) fn is_consecutive(g: &Graph, order: &[Vec<usize>]) -> bool {
    let mut first = vec![usize::MAX; g.order() + 1];
    let mut last = vec![0usize; g.order() + 1];
    let mut count = vec![0usize; g.order() + 1];
    for (i, clique) in order.iter().enumerate() {
        for &v in clique {
            first[v] = first[v].min(i);
            last[v] = i;
            count[v] += 1;
        }
    }
    let runs_ok = (1..=g.order()).all(|v| count[v] == 0 || last[v] - first[v] + 1 == count[v]);
    let cliques_ok = order.iter().all(|c| {
        c.iter()
            .enumerate()
            .all(|(i, &a)| c[i + 1..].iter().all(|&b| g.adjacent(a, b)))
    });
    let covered = g
        .edges()
        .iter()
        .all(|&(a, b)| order.iter().any(|c| c.contains(&a) && c.contains(&b)));
    runs_ok && cliques_ok && covered
}
