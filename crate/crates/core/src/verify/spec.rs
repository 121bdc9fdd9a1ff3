use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ToeplitzParams;

/// A property cross-checked between the closed-form rules and the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Claw-free verdict against exhaustive claw search.
    Claw,
    /// Elimination-ordering chordality against hole search.
    Chordal,
    /// Interval graphs are chordal; clique orderings are consecutive.
    Interval,
    /// Cocooneries at or past the top sum have clique number `k + 1`.
    Clique,
    /// Cocoonery and gcd component certificates.
    Components,
    /// `n = t_1 + t_2` splits into equal cycles.
    Cycles,
    /// Line-graph verdict, component kinds and root round trip.
    Line,
    /// The three-offset catalogue at `n = 2 t_3 - i`.
    Catalogue,
    /// The three-offset criterion at `n = t_3 + 1`.
    MinimalOrder,
    /// Past the top sum: cocoonery, claw-free, chordal, interval and
    /// clique number `k + 1` coincide.
    Equivalence,
    /// At the top sum with `k >= 4`, claw-free means cocoonery or mutation;
    /// mutations up to `2kt` are claw-free.
    Mutation,
    /// Offsets `1, 2, 3, 5, ...` on one more vertex than the largest.
    Fibonacci,
    /// Upward claw search closed under reflection equals the full search.
    Reflection,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Claw,
        Check::Chordal,
        Check::Interval,
        Check::Clique,
        Check::Components,
        Check::Cycles,
        Check::Line,
        Check::Catalogue,
        Check::MinimalOrder,
        Check::Equivalence,
        Check::Mutation,
        Check::Fibonacci,
        Check::Reflection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Claw => "claw",
            Check::Chordal => "chordal",
            Check::Interval => "interval",
            Check::Clique => "clique",
            Check::Components => "components",
            Check::Cycles => "cycles",
            Check::Line => "line",
            Check::Catalogue => "catalogue",
            Check::MinimalOrder => "minimal-order",
            Check::Equivalence => "equivalence",
            Check::Mutation => "mutation",
            Check::Fibonacci => "fibonacci",
            Check::Reflection => "reflection",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // Numbered spellings accepted for compatibility with older scripts.
        match s {
            "catalogue37" => return Ok(Check::Catalogue),
            "boundary35" => return Ok(Check::MinimalOrder),
            "equivalence25" => return Ok(Check::Equivalence),
            "mutation28" => return Ok(Check::Mutation),
            _ => {}
        }
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                Error::InvalidSweep(format!(
                    "unknown check {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Which offset lists a region visits, for each `k` in range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OffsetFamily {
    /// Every strictly increasing list with largest offset at most `max_offset`.
    All { max_offset: usize },
    /// `t, 2t, ..., kt` for `t <= max_step`.
    Cocooneries { max_step: usize },
    /// `t, ..., (k-1)t, (k+1)t` for `t <= max_step`, `k >= 2`.
    Mutations { max_step: usize },
}

/// An upper bound on `n` relative to the offsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RelativeBound {
    /// `n <= factor * (t_{k-1} + t_k)`; `factor * t_1` when `k = 1`.
    SumOfLastTwo { factor: usize },
    /// `n <= (k + beyond_k) * t_1 + plus`.
    StepMultiple { beyond_k: usize, plus: usize },
}

/// Which orders between `t_k + 1` and the upper bound are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderForm {
    Range,
    /// Only `n = t_{k-1} + t_k`.
    SumBoundary,
    /// Only `n > t_{k-1} + t_k`.
    BeyondSum,
    /// Only `n = t_k + 1`.
    MinimalOrder,
    /// Only `n = 2 t_k - i`, `i` in `{1, 2, 3}`.
    NearDouble,
}

impl FromStr for OrderForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "range" => OrderForm::Range,
            "sum-boundary" => OrderForm::SumBoundary,
            "beyond-sum" => OrderForm::BeyondSum,
            "minimal-order" => OrderForm::MinimalOrder,
            "near-double" => OrderForm::NearDouble,
            other => {
                return Err(Error::InvalidSweep(format!(
                    "unknown order form {other:?}; expected range, sum-boundary, beyond-sum, minimal-order or near-double"
                )))
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderRule {
    pub max: usize,
    pub relative: Option<RelativeBound>,
    pub form: OrderForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Region {
    pub k_min: usize,
    pub k_max: usize,
    pub offsets: OffsetFamily,
    pub order: OrderRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSpec {
    pub name: String,
    /// `None` visits only the fixed cells some checks bring along.
    pub region: Option<Region>,
    pub checks: BTreeSet<Check>,
}

/// First eight Fibonacci numbers starting `1, 2`.
pub const FIBONACCI: [usize; 8] = [1, 2, 3, 5, 8, 13, 21, 34];

/// `T_{F_j + 1}<F_1, ..., F_j>`.
pub fn fibonacci_cell(j: usize) -> ToeplitzParams {
    let offsets = FIBONACCI[..j].to_vec();
    ToeplitzParams::new(offsets[j - 1] + 1, offsets).expect("Fibonacci cells are valid")
}

impl Region {
    pub fn validate(&self) -> Result<()> {
        if self.k_min == 0 || self.k_min > self.k_max {
            return Err(Error::InvalidSweep(format!(
                "offset count range {}..={} is empty or starts at zero",
                self.k_min, self.k_max
            )));
        }
        let limit = match self.offsets {
            OffsetFamily::All { max_offset } => max_offset,
            OffsetFamily::Cocooneries { max_step } | OffsetFamily::Mutations { max_step } => {
                max_step
            }
        };
        if limit == 0 {
            return Err(Error::InvalidSweep(
                "the offset bound must be positive".into(),
            ));
        }
        if self.order.max < 2 {
            return Err(Error::InvalidSweep(
                "the order bound must be at least 2".into(),
            ));
        }
        Ok(())
    }

    /// Cells in `(k, offsets, n)` order.
    pub fn cells(&self) -> Vec<ToeplitzParams> {
        let mut out = Vec::new();
        for k in self.k_min..=self.k_max {
            for offsets in self.offset_lists(k) {
                for n in self.orders(&offsets) {
                    out.push(
                        ToeplitzParams::with_max_order(n, offsets.clone(), usize::MAX)
                            .expect("region cells are valid"),
                    );
                }
            }
        }
        out
    }

    fn offset_lists(&self, k: usize) -> Vec<Vec<usize>> {
        match self.offsets {
            OffsetFamily::All { max_offset } => {
                let mut lists = Vec::new();
                let mut current = Vec::with_capacity(k);
                subsets(1, max_offset, k, &mut current, &mut lists);
                lists
            }
            OffsetFamily::Cocooneries { max_step } => (1..=max_step)
                .map(|t| (1..=k).map(|i| i * t).collect())
                .collect(),
            OffsetFamily::Mutations { max_step } => {
                if k < 2 {
                    return Vec::new();
                }
                (1..=max_step)
                    .map(|t| (1..k).map(|i| i * t).chain([(k + 1) * t]).collect())
                    .collect()
            }
        }
    }

    fn orders(&self, offsets: &[usize]) -> Vec<usize> {
        let k = offsets.len();
        let last = offsets[k - 1];
        let top = if k >= 2 { offsets[k - 2] + last } else { last };
        let mut upper = self.order.max;
        match self.order.relative {
            Some(RelativeBound::SumOfLastTwo { factor }) => {
                let base = if k >= 2 { top } else { last };
                upper = upper.min(factor * base);
            }
            Some(RelativeBound::StepMultiple { beyond_k, plus }) => {
                upper = upper.min((k + beyond_k) * offsets[0] + plus);
            }
            None => {}
        }
        let lo = last + 1;
        let candidates: Vec<usize> = match self.order.form {
            OrderForm::Range => (lo..=upper).collect(),
            OrderForm::SumBoundary => (k >= 2).then_some(top).into_iter().collect(),
            OrderForm::BeyondSum => {
                if k >= 2 {
                    (top + 1..=upper).collect()
                } else {
                    Vec::new()
                }
            }
            OrderForm::MinimalOrder => vec![lo],
            OrderForm::NearDouble => (1..=3)
                .rev()
                .filter_map(|i| (2 * last).checked_sub(i))
                .collect(),
        };
        candidates
            .into_iter()
            .filter(|&n| n >= lo && n <= upper)
            .collect()
    }
}

/// Ascending `k`-subsets of `from..=to`, appended in lexicographic order.
fn subsets(from: usize, to: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    let remaining = k - current.len();
    if from + remaining > to + 1 {
        return;
    }
    for x in from..=to + 1 - remaining {
        current.push(x);
        subsets(x + 1, to, k, current, out);
        current.pop();
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.checks.is_empty() {
            return Err(Error::InvalidSweep("at least one check is required".into()));
        }
        match &self.region {
            Some(region) => region.validate(),
            None if self.checks.contains(&Check::Fibonacci) => Ok(()),
            None => Err(Error::InvalidSweep(
                "a region is required unless the only cells are the Fibonacci ones".into(),
            )),
        }
    }

    /// The region's cells plus any fixed cells, deduplicated, in
    /// `(k, offsets, n)` order.
    pub fn cells(&self) -> Vec<ToeplitzParams> {
        let mut cells = self.region.map(|r| r.cells()).unwrap_or_default();
        if self.checks.contains(&Check::Fibonacci) {
            cells.extend((1..=FIBONACCI.len()).map(fibonacci_cell));
        }
        cells.sort_by_key(ToeplitzParams::sweep_key);
        cells.dedup();
        cells
    }
}
