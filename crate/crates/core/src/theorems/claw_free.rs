use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Claw, Graph, ToeplitzParams};
use crate::oracle::Oracle;

use super::offsets::{
    is_cocoonery, is_mutation, refute_by_offset_conditions, Progression, Refutation,
};
use super::trace::Trace;

/// Which rule settled a claw-freeness question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClawRule {
    K1Paths,
    Cocoonery,
    K2Characterization,
    K3Characterization,
    BeyondSumNotCocoonery,
    SumBoundaryK4,
    NecessaryConditionFailed,
    OracleFallback,
}

impl ClawRule {
    pub fn name(self) -> &'static str {
        match self {
            ClawRule::K1Paths => "K1Paths",
            ClawRule::Cocoonery => "Cocoonery",
            ClawRule::K2Characterization => "K2Characterization",
            ClawRule::K3Characterization => "K3Characterization",
            ClawRule::BeyondSumNotCocoonery => "BeyondSumNotCocoonery",
            ClawRule::SumBoundaryK4 => "SumBoundaryK4",
            ClawRule::NecessaryConditionFailed => "NecessaryConditionFailed",
            ClawRule::OracleFallback => "OracleFallback",
        }
    }
}

impl fmt::Display for ClawRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The clause behind a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClawReason {
    /// One offset: a disjoint union of paths.
    PathUnion,
    Cocoonery(Progression),
    /// Two offsets and `n <= t_1 + t_2`.
    PairWithinSum,
    /// Two offsets with `t_2 = 2 t_1`.
    PairDoubled,
    /// Two offsets, `n > t_1 + t_2`, `t_2 != 2 t_1`.
    PairNoClause,
    /// Three offsets with `n > t_2 + t_3`.
    TripleBeyondSum,
    /// `t_1 + t_2 = t_3`.
    TripleSumOfSmaller,
    /// `t_2 = 2 t_1` and either `t_3 = 4 t_1` or `2n <= t_2 + 2 t_3`.
    TripleDoubled {
        fourfold: bool,
    },
    /// `t_3 = 2 t_1`, `n <= 2 t_2` and `2n <= 3 t_3`.
    TripleLastDoubled,
    /// `n <= t_2 + t_3` but no clause applies.
    TripleNoClause,
    /// At least four offsets and `n > t_{k-1} + t_k`, not a cocoonery.
    BeyondSum,
    Mutation(Progression),
    NotMutation,
    Refuted(Refutation),
    /// Decided by exhaustive claw search.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClawFreeVerdict {
    pub claw_free: bool,
    pub rule: ClawRule,
    pub witness: Option<Claw>,
    pub certificate: ClawReason,
}

impl ClawFreeVerdict {
    fn decided(claw_free: bool, rule: ClawRule, certificate: ClawReason) -> Self {
        ClawFreeVerdict {
            claw_free,
            rule,
            witness: None,
            certificate,
        }
    }

    /// Looks up the lexicographically first claw when the verdict is negative
    /// and none is attached yet.
    pub fn attach_witness(&mut self, p: &ToeplitzParams, oracle: &Oracle) -> Result<()> {
        if !self.claw_free && self.witness.is_none() {
            self.witness = oracle.first_claw(&Graph::toeplitz(p))?;
        }
        Ok(())
    }

    /// A one-line explanation of the deciding clause.
    pub fn describe(&self, p: &ToeplitzParams) -> String {
        let t = p.offsets();
        let n = p.n();
        match self.certificate {
            ClawReason::PathUnion => "a single offset gives a disjoint union of paths".into(),
            ClawReason::Cocoonery(c) => format!(
                "offsets are the first {} multiples of {}; such graphs are always claw-free",
                c.terms, c.step
            ),
            ClawReason::PairWithinSum => {
                format!("two offsets with n = {n} <= t_1 + t_2 = {}", t[0] + t[1])
            }
            ClawReason::PairDoubled => "two offsets with t_2 = 2 t_1".into(),
            ClawReason::PairNoClause => format!(
                "two offsets with n = {n} > t_1 + t_2 = {} and t_2 != 2 t_1",
                t[0] + t[1]
            ),
            ClawReason::TripleBeyondSum => {
                format!("three offsets with n = {n} > t_2 + t_3 = {}", t[1] + t[2])
            }
            ClawReason::TripleSumOfSmaller => "three offsets with t_1 + t_2 = t_3".into(),
            ClawReason::TripleDoubled { fourfold: true } => {
                "three offsets with t_2 = 2 t_1 and t_3 = 4 t_1".into()
            }
            ClawReason::TripleDoubled { fourfold: false } => {
                format!("three offsets with t_2 = 2 t_1 and 2n <= t_2 + 2 t_3 = {}", t[1] + 2 * t[2])
            }
            ClawReason::TripleLastDoubled => {
                "three offsets with t_3 = 2 t_1, n <= 2 t_2 and 2n <= 3 t_3".into()
            }
            ClawReason::TripleNoClause => {
                "three offsets with n <= t_2 + t_3 but no claw-free clause applies".into()
            }
            ClawReason::BeyondSum => format!(
                "n = {n} exceeds the sum of the two largest offsets and the graph is not a cocoonery"
            ),
            ClawReason::Mutation(m) => format!(
                "n equals the sum of the two largest offsets and the offsets are the mutation of the ({}, {}) cocoonery",
                m.terms, m.step
            ),
            ClawReason::NotMutation => {
                "n equals the sum of the two largest offsets and the offsets are neither a cocoonery nor a mutation".into()
            }
            ClawReason::Refuted(r) => r.describe(p),
            ClawReason::Search => "exhaustive claw search".into(),
        }
    }
}

/// Decides claw-freeness, using the closed-form rules wherever they apply
/// and the oracle only between `t_k + 1` and `t_{k-1} + t_k - 1` for `k >= 4`.
pub fn classify_claw_free(p: &ToeplitzParams, oracle: &Oracle) -> Result<ClawFreeVerdict> {
    classify_claw_free_traced(p, oracle, &mut Trace::default())
}

pub(crate) fn classify_claw_free_traced(
    p: &ToeplitzParams,
    oracle: &Oracle,
    trace: &mut Trace,
) -> Result<ClawFreeVerdict> {
    let k = p.k();
    let t = p.offsets();
    let n = p.n();

    if trace.check(ClawRule::K1Paths.name(), "exactly one offset", k == 1) {
        return Ok(ClawFreeVerdict::decided(
            true,
            ClawRule::K1Paths,
            ClawReason::PathUnion,
        ));
    }
    let cocoonery = is_cocoonery(p);
    if trace.check(
        ClawRule::Cocoonery.name(),
        "offsets are t, 2t, ..., kt",
        cocoonery.is_some(),
    ) {
        let c = cocoonery.expect("checked above");
        return Ok(ClawFreeVerdict::decided(
            true,
            ClawRule::Cocoonery,
            ClawReason::Cocoonery(c),
        ));
    }
    if trace.check(
        ClawRule::K2Characterization.name(),
        "exactly two offsets",
        k == 2,
    ) {
        return Ok(pair_verdict(n, t[0], t[1]));
    }
    if trace.check(
        ClawRule::K3Characterization.name(),
        "exactly three offsets",
        k == 3,
    ) {
        return Ok(triple_verdict(n, t[0], t[1], t[2]));
    }
    let top = p.top_sum().expect("k >= 4");
    if trace.check(
        ClawRule::BeyondSumNotCocoonery.name(),
        "n > t_{k-1} + t_k",
        n > top,
    ) {
        return Ok(ClawFreeVerdict::decided(
            false,
            ClawRule::BeyondSumNotCocoonery,
            ClawReason::BeyondSum,
        ));
    }
    if trace.check(
        ClawRule::SumBoundaryK4.name(),
        "n = t_{k-1} + t_k",
        n == top,
    ) {
        return Ok(match is_mutation(p) {
            Some(m) => {
                ClawFreeVerdict::decided(true, ClawRule::SumBoundaryK4, ClawReason::Mutation(m))
            }
            None => {
                ClawFreeVerdict::decided(false, ClawRule::SumBoundaryK4, ClawReason::NotMutation)
            }
        });
    }
    let refutation = refute_by_offset_conditions(p);
    if trace.check(
        ClawRule::NecessaryConditionFailed.name(),
        "a necessary offset condition fails",
        refutation.is_some(),
    ) {
        let r = refutation.expect("checked above");
        let mut verdict = ClawFreeVerdict::decided(
            false,
            ClawRule::NecessaryConditionFailed,
            ClawReason::Refuted(r),
        );
        // The verdict stands on its own; a witness is a courtesy within bounds.
        match verdict.attach_witness(p, oracle) {
            Err(e) if e.is_bound_exceeded() => {}
            other => other?,
        }
        return Ok(verdict);
    }
    trace.check(
        ClawRule::OracleFallback.name(),
        "exhaustive claw search",
        true,
    );
    let g = Graph::toeplitz(p);
    let witness = match oracle.first_claw(&g) {
        Ok(w) => w,
        Err(Error::GraphTooLarge { order, bound }) => {
            return Err(Error::Undecided { order, bound })
        }
        Err(e) => return Err(e),
    };
    Ok(ClawFreeVerdict {
        claw_free: witness.is_none(),
        rule: ClawRule::OracleFallback,
        witness,
        certificate: ClawReason::Search,
    })
}

fn pair_verdict(n: usize, t1: usize, t2: usize) -> ClawFreeVerdict {
    let reason = if n <= t1 + t2 {
        ClawReason::PairWithinSum
    } else if t2 == 2 * t1 {
        ClawReason::PairDoubled
    } else {
        ClawReason::PairNoClause
    };
    let claw_free = reason != ClawReason::PairNoClause;
    ClawFreeVerdict::decided(claw_free, ClawRule::K2Characterization, reason)
}

fn triple_verdict(n: usize, t1: usize, t2: usize, t3: usize) -> ClawFreeVerdict {
    let reason = if n > t2 + t3 {
        ClawReason::TripleBeyondSum
    } else if t1 + t2 == t3 {
        ClawReason::TripleSumOfSmaller
    } else if t2 == 2 * t1 && t3 == 4 * t1 {
        ClawReason::TripleDoubled { fourfold: true }
    } else if t2 == 2 * t1 && 2 * n <= t2 + 2 * t3 {
        ClawReason::TripleDoubled { fourfold: false }
    } else if t3 == 2 * t1 && n <= 2 * t2 && 2 * n <= 3 * t3 {
        ClawReason::TripleLastDoubled
    } else {
        ClawReason::TripleNoClause
    };
    let claw_free = !matches!(
        reason,
        ClawReason::TripleBeyondSum | ClawReason::TripleNoClause
    );
    ClawFreeVerdict::decided(claw_free, ClawRule::K3Characterization, reason)
}
