use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, ToeplitzParams};
use crate::oracle::{Oracle, RootGraph};

use super::offsets::is_cocoonery;
use super::trace::Trace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LineRule {
    K1Paths,
    CocooneryK2,
    CocooneryK3Plus,
    BeyondSumK3Plus,
    OracleFallback,
}

impl LineRule {
    pub fn name(self) -> &'static str {
        match self {
            LineRule::K1Paths => "K1Paths",
            LineRule::CocooneryK2 => "CocooneryK2",
            LineRule::CocooneryK3Plus => "CocooneryK3Plus",
            LineRule::BeyondSumK3Plus => "BeyondSumK3Plus",
            LineRule::OracleFallback => "OracleFallback",
        }
    }
}

impl fmt::Display for LineRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Component shapes of line-graph cocooneries. `Diamond` is `K_4` minus an
/// edge, `Gem` is a path on four vertices joined to a fifth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    K2,
    K3,
    Diamond,
    Gem,
    Complete(usize),
}

impl ComponentKind {
    /// `K_m`, normalised so that `K_2` and `K_3` use their own variants.
    pub fn complete(m: usize) -> Self {
        match m {
            2 => ComponentKind::K2,
            3 => ComponentKind::K3,
            m => ComponentKind::Complete(m),
        }
    }

    /// Recognises a connected graph as one of the kinds by vertex count,
    /// edge count and degree sequence, which pin these shapes down exactly.
    pub fn identify(g: &Graph) -> Option<Self> {
        let n = g.order();
        let e = g.edge_count();
        if n >= 2 && e == n * (n - 1) / 2 {
            return Some(ComponentKind::complete(n));
        }
        let mut degrees: Vec<usize> = (1..=n).map(|v| g.degree(v).unwrap_or(0)).collect();
        degrees.sort_unstable();
        match (n, e) {
            (4, 5) => Some(ComponentKind::Diamond),
            (5, 7) if degrees == [2, 2, 3, 3, 4] => Some(ComponentKind::Gem),
            _ => None,
        }
    }

    /// The root graph edges for the `k = 2` cocoonery component of this
    /// kind, listed by target label, on root vertices `1..`.
    fn root_edges(self) -> Vec<(usize, usize)> {
        // a..e are 1..5.
        match self {
            ComponentKind::K2 => vec![(1, 2), (2, 3)],
            ComponentKind::K3 => vec![(1, 2), (2, 3), (1, 3)],
            ComponentKind::Diamond => vec![(1, 4), (1, 2), (1, 3), (2, 3)],
            ComponentKind::Gem => vec![(1, 4), (1, 2), (1, 3), (2, 3), (3, 5)],
            ComponentKind::Complete(m) => (2..=m + 1).map(|leaf| (1, leaf)).collect(),
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::K2 => f.write_str("K2"),
            ComponentKind::K3 => f.write_str("K3"),
            ComponentKind::Diamond => f.write_str("Diamond"),
            ComponentKind::Gem => f.write_str("Gem"),
            ComponentKind::Complete(m) => write!(f, "Complete({m})"),
        }
    }
}

impl Serialize for ComponentKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Sorted `(kind, count)` pairs.
pub type ComponentMultiset = Vec<(ComponentKind, usize)>;

pub fn multiset(kinds: impl IntoIterator<Item = ComponentKind>) -> ComponentMultiset {
    let mut kinds: Vec<ComponentKind> = kinds.into_iter().collect();
    kinds.sort_unstable();
    let mut out: ComponentMultiset = Vec::new();
    for kind in kinds {
        match out.last_mut() {
            Some((last, count)) if *last == kind => *count += 1,
            _ => out.push((kind, 1)),
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineGraphVerdict {
    pub is_line: bool,
    pub rule: LineRule,
    pub component_multiset: Option<ComponentMultiset>,
    pub root: Option<RootGraph>,
}

impl LineGraphVerdict {
    /// A one-line explanation of the deciding rule.
    pub fn describe(&self, p: &ToeplitzParams) -> String {
        let n = p.n();
        let k = p.k();
        let t = p.offsets()[0];
        match (self.rule, self.is_line) {
            (LineRule::K1Paths, _) => "a single offset gives a disjoint union of paths".into(),
            (LineRule::CocooneryK2, true) => {
                format!("cocoonery with two offsets and n = {n} <= 5t = {}", 5 * t)
            }
            (LineRule::CocooneryK2, false) => {
                format!("cocoonery with two offsets and n = {n} > 5t = {}", 5 * t)
            }
            (LineRule::CocooneryK3Plus, true) => {
                format!(
                    "cocoonery with n = {n} <= (k+1)t = {}; every component is complete",
                    (k + 1) * t
                )
            }
            (LineRule::CocooneryK3Plus, false) => {
                format!("cocoonery with n = {n} > (k+1)t = {}", (k + 1) * t)
            }
            (LineRule::BeyondSumK3Plus, _) => format!(
                "at least three offsets, not a cocoonery, and n = {n} exceeds t_{{k-1}} + t_k = {}",
                p.top_sum().unwrap_or(0)
            ),
            (LineRule::OracleFallback, true) => "Krausz partition found".into(),
            (LineRule::OracleFallback, false) => "no Krausz partition exists".into(),
        }
    }
}

/// Sizes `floor((n - i) / step) + 1` of the residue classes `i = 1..=step`.
fn class_sizes(n: usize, step: usize) -> Vec<usize> {
    (1..=step).map(|i| (n - i) / step + 1).collect()
}

/// Root graph for a graph whose residue classes mod `step` are the given
/// kinds, the class of `i` having target labels `s + 1` for `i + s step`.
fn assemble_root(n: usize, step: usize, pieces: &[Vec<(usize, usize)>]) -> RootGraph {
    let mut edge_of = vec![(0, 0); n];
    let mut base = 0;
    for (c, edges) in pieces.iter().enumerate() {
        let used = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        for (s, &(a, b)) in edges.iter().enumerate() {
            edge_of[c + s * step] = (base + a, base + b);
        }
        base += used;
    }
    RootGraph::from_edges(base, edge_of)
}

/// Decides whether `T_n<...>` is a line graph, from closed-form rules for one
/// offset and for cocooneries, and from the Krausz oracle otherwise.
pub fn classify_line_graph(p: &ToeplitzParams, oracle: &Oracle) -> Result<LineGraphVerdict> {
    classify_line_graph_traced(p, oracle, &mut Trace::default())
}

pub(crate) fn classify_line_graph_traced(
    p: &ToeplitzParams,
    oracle: &Oracle,
    trace: &mut Trace,
) -> Result<LineGraphVerdict> {
    let n = p.n();
    let k = p.k();
    if trace.check(LineRule::K1Paths.name(), "exactly one offset", k == 1) {
        let step = p.offsets()[0];
        // A path on m vertices is the line graph of a path on m + 1.
        let pieces: Vec<Vec<(usize, usize)>> = class_sizes(n, step)
            .into_iter()
            .map(|m| (1..=m).map(|s| (s, s + 1)).collect())
            .collect();
        return Ok(LineGraphVerdict {
            is_line: true,
            rule: LineRule::K1Paths,
            component_multiset: None,
            root: Some(assemble_root(n, step, &pieces)),
        });
    }
    let cocoonery = is_cocoonery(p);
    if trace.check(
        LineRule::CocooneryK2.name(),
        "offsets are t, 2t",
        cocoonery.is_some() && k == 2,
    ) {
        let step = cocoonery.expect("checked above").step;
        if n > 5 * step {
            return Ok(LineGraphVerdict {
                is_line: false,
                rule: LineRule::CocooneryK2,
                component_multiset: None,
                root: None,
            });
        }
        let kinds: Vec<ComponentKind> = class_sizes(n, step)
            .into_iter()
            .map(|m| match m {
                4 => ComponentKind::Diamond,
                5 => ComponentKind::Gem,
                m => ComponentKind::complete(m),
            })
            .collect();
        let pieces: Vec<_> = kinds.iter().map(|kind| kind.root_edges()).collect();
        return Ok(LineGraphVerdict {
            is_line: true,
            rule: LineRule::CocooneryK2,
            component_multiset: Some(multiset(kinds)),
            root: Some(assemble_root(n, step, &pieces)),
        });
    }
    if trace.check(
        LineRule::CocooneryK3Plus.name(),
        "offsets are t, 2t, ..., kt with k >= 3",
        cocoonery.is_some(),
    ) {
        let step = cocoonery.expect("checked above").step;
        if n > (k + 1) * step {
            return Ok(LineGraphVerdict {
                is_line: false,
                rule: LineRule::CocooneryK3Plus,
                component_multiset: None,
                root: None,
            });
        }
        let sizes = class_sizes(n, step);
        let pieces: Vec<_> = sizes
            .iter()
            .map(|&m| ComponentKind::Complete(m).root_edges())
            .collect();
        return Ok(LineGraphVerdict {
            is_line: true,
            rule: LineRule::CocooneryK3Plus,
            component_multiset: Some(multiset(sizes.into_iter().map(ComponentKind::complete))),
            root: Some(assemble_root(n, step, &pieces)),
        });
    }
    if trace.check(
        LineRule::BeyondSumK3Plus.name(),
        "k >= 3 and n > t_{k-1} + t_k",
        k >= 3 && p.top_sum().is_some_and(|s| n > s),
    ) {
        return Ok(LineGraphVerdict {
            is_line: false,
            rule: LineRule::BeyondSumK3Plus,
            component_multiset: None,
            root: None,
        });
    }
    trace.check(
        LineRule::OracleFallback.name(),
        "Krausz partition search",
        true,
    );
    let certificate = match oracle.is_line_graph(&Graph::toeplitz(p)) {
        Ok(c) => c,
        Err(Error::GraphTooLarge { order, bound }) => {
            return Err(Error::Undecided { order, bound })
        }
        Err(e) => return Err(e),
    };
    Ok(LineGraphVerdict {
        is_line: certificate.is_some(),
        rule: LineRule::OracleFallback,
        component_multiset: None,
        root: certificate.map(|c| c.root),
    })
}
