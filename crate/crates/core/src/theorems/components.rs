use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, ToeplitzParams};
use crate::oracle::verify_bijection_isomorphism;

use super::offsets::is_cocoonery;

/// A predicted component shape `T_order<offsets>`. Offsets that do not fit
/// the order are dropped, so small components may be complete graphs or
/// single vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetShape {
    pub order: usize,
    pub offsets: Vec<usize>,
}

impl TargetShape {
    fn new(order: usize, offsets: impl IntoIterator<Item = usize>) -> Self {
        TargetShape {
            order,
            offsets: offsets.into_iter().filter(|&d| d < order).collect(),
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::from_differences(self.order, &self.offsets)
    }

    /// The shape as validated parameters, when it has at least one offset.
    pub fn params(&self) -> Option<ToeplitzParams> {
        ToeplitzParams::new(self.order, self.offsets.clone()).ok()
    }
}

impl fmt::Display for TargetShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let offsets: Vec<String> = self.offsets.iter().map(ToString::to_string).collect();
        write!(f, "T_{}<{}>", self.order, offsets.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Ascending labels.
    pub vertices: Vec<usize>,
    pub target: TargetShape,
    /// `bijection[j]` is the target label of `vertices[j]`.
    pub bijection: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub component_count: usize,
    pub components: Vec<Component>,
}

/// Ways a component report can fail against the actual graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateFailure {
    NotAPartition,
    CrossEdge { from: usize, to: usize },
    BadBijection { component: usize, reason: String },
}

impl ComponentReport {
    fn from_classes(n: usize, modulus: usize, offsets: &[usize]) -> Self {
        let components: Vec<Component> = (1..=modulus.min(n))
            .map(|start| {
                let vertices: Vec<usize> = (start..=n).step_by(modulus).collect();
                let order = vertices.len();
                Component {
                    target: TargetShape::new(order, offsets.iter().copied()),
                    bijection: (1..=order).collect(),
                    vertices,
                }
            })
            .collect();
        ComponentReport {
            component_count: components.len(),
            components,
        }
    }

    /// Checks that the vertex sets partition the graph, no edge joins two
    /// of them and every bijection is an isomorphism onto its target.
    pub fn certify(&self, g: &Graph) -> Result<Vec<CertificateFailure>> {
        let mut failures = Vec::new();
        let mut owner = vec![0usize; g.order() + 1];
        for (c, comp) in self.components.iter().enumerate() {
            for &v in &comp.vertices {
                if v == 0 || v > g.order() || owner[v] != 0 {
                    failures.push(CertificateFailure::NotAPartition);
                    return Ok(failures);
                }
                owner[v] = c + 1;
            }
        }
        if owner[1..].contains(&0) || self.component_count != self.components.len() {
            failures.push(CertificateFailure::NotAPartition);
            return Ok(failures);
        }
        failures.extend(
            g.edges()
                .into_iter()
                .filter(|&(a, b)| owner[a] != owner[b])
                .map(|(from, to)| CertificateFailure::CrossEdge { from, to }),
        );
        for (c, comp) in self.components.iter().enumerate() {
            let sub = g.induced(&comp.vertices)?;
            let target = comp.target.graph();
            match verify_bijection_isomorphism(&sub, &target, &comp.bijection) {
                Ok(true) => {}
                Ok(false) => failures.push(CertificateFailure::BadBijection {
                    component: c + 1,
                    reason: "adjacency not preserved".into(),
                }),
                Err(e @ Error::MapNotBijective { .. }) => {
                    failures.push(CertificateFailure::BadBijection {
                        component: c + 1,
                        reason: e.to_string(),
                    })
                }
                Err(e) => return Err(e),
            }
        }
        Ok(failures)
    }
}

/// A cocoonery with step `t` splits into the `t` residue classes mod `t`;
/// the class of `i` is a cocoonery on `floor((n - i) / t) + 1` vertices with
/// offsets `1, ..., k`, via `i + s t -> s + 1`.
pub fn decompose_cocoonery(p: &ToeplitzParams) -> Result<ComponentReport> {
    let c = is_cocoonery(p).ok_or(Error::NotACocoonery)?;
    Ok(ComponentReport::from_classes(
        p.n(),
        c.step,
        &(1..=c.terms).collect::<Vec<_>>(),
    ))
}

/// With `d = gcd(t_1, ..., t_k)` the graph splits into the `d` residue
/// classes mod `d`, each a Toeplitz graph with offsets `t_i / d`. The first
/// `r` classes (`r = n mod d`, taken in `1..=d`) have `ceil(n/d)` vertices,
/// the rest `floor(n/d)`.
pub fn decompose_gcd(p: &ToeplitzParams) -> ComponentReport {
    let d = p.offsets().iter().copied().fold(0, gcd);
    let scaled: Vec<usize> = p.offsets().iter().map(|t| t / d).collect();
    ComponentReport::from_classes(p.n(), d, &scaled)
}

/// Number of cycles and their length when `k = 2` and `n = t_1 + t_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    pub cycles: usize,
    pub length: usize,
}

/// Two offsets with `n = t_1 + t_2`: `gcd(t_1, t_2)` disjoint cycles of
/// length `n / gcd`.
pub fn cycle_decomposition(p: &ToeplitzParams) -> Result<CycleDecomposition> {
    let t = p.offsets();
    if t.len() != 2 || p.n() != t[0] + t[1] {
        return Err(Error::PremiseNotMet(format!(
            "cycle decomposition needs two offsets with n = t_1 + t_2, got {p}"
        )));
    }
    let d = gcd(t[0], t[1]);
    Ok(CycleDecomposition {
        cycles: d,
        length: p.n() / d,
    })
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, offsets: &[usize]) -> ToeplitzParams {
        ToeplitzParams::new(n, offsets.to_vec()).unwrap()
    }

    fn targets(report: &ComponentReport) -> Vec<String> {
        report
            .components
            .iter()
            .map(|c| c.target.to_string())
            .collect()
    }

    #[test]
    fn cocoonery_components() {
        let p = params(30, &[5, 10, 15]);
        let report = decompose_cocoonery(&p).unwrap();
        assert_eq!(report.component_count, 5);
        assert_eq!(targets(&report), vec!["T_6<1,2,3>"; 5]);
        assert_eq!(report.components[0].vertices, vec![1, 6, 11, 16, 21, 26]);
        assert!(report.certify(&Graph::toeplitz(&p)).unwrap().is_empty());

        let report = decompose_cocoonery(&params(7, &[3])).unwrap();
        assert_eq!(targets(&report), vec!["T_3<1>", "T_2<1>", "T_2<1>"]);

        let report = decompose_cocoonery(&params(4, &[1, 2])).unwrap();
        assert_eq!(report.component_count, 1);
        assert_eq!(report.components[0].vertices, vec![1, 2, 3, 4]);

        assert_eq!(
            decompose_cocoonery(&params(10, &[4, 6])),
            Err(Error::NotACocoonery)
        );
    }

    #[test]
    fn gcd_components() {
        let report = decompose_gcd(&params(10, &[4, 6]));
        assert_eq!(targets(&report), vec!["T_5<2,3>"; 2]);
        let report = decompose_gcd(&params(12, &[4, 8]));
        assert_eq!(targets(&report), vec!["T_3<1,2>"; 4]);
        assert_eq!(decompose_gcd(&params(5, &[1, 3])).component_count, 1);
        // r = 1: one class of 4 vertices, two of 3.
        let p = params(10, &[3, 6]);
        let report = decompose_gcd(&p);
        assert_eq!(targets(&report), vec!["T_4<1,2>", "T_3<1,2>", "T_3<1,2>"]);
        assert!(report.certify(&Graph::toeplitz(&p)).unwrap().is_empty());
    }

    #[test]
    fn degenerate_targets_certify() {
        let p = params(13, &[4, 8, 12]);
        let report = decompose_cocoonery(&p).unwrap();
        assert_eq!(
            targets(&report),
            vec!["T_4<1,2,3>", "T_3<1,2>", "T_3<1,2>", "T_3<1,2>"]
        );
        assert!(report.certify(&Graph::toeplitz(&p)).unwrap().is_empty());
    }

    #[test]
    fn tampered_report_fails() {
        let p = params(10, &[4, 6]);
        let mut report = decompose_gcd(&p);
        report.components[0].bijection.swap(0, 1);
        assert!(!report.certify(&Graph::toeplitz(&p)).unwrap().is_empty());
        let mut report = decompose_gcd(&p);
        report.components[1].vertices.push(1);
        assert_eq!(
            report.certify(&Graph::toeplitz(&p)).unwrap(),
            vec![CertificateFailure::NotAPartition]
        );
    }

    #[test]
    fn cycles() {
        assert_eq!(
            cycle_decomposition(&params(10, &[4, 6])).unwrap(),
            CycleDecomposition {
                cycles: 2,
                length: 5
            }
        );
        assert_eq!(
            cycle_decomposition(&params(7, &[2, 5])).unwrap(),
            CycleDecomposition {
                cycles: 1,
                length: 7
            }
        );
        assert!(matches!(
            cycle_decomposition(&params(8, &[2, 5])),
            Err(Error::PremiseNotMet(_))
        ));
    }
}
